#pragma once

// Test-side reference implementations. They share no code with the library
// beyond the element type and the system container.

#include <functional>
#include <optional>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "min2lin/system.hpp"

namespace oracle_test {

using namespace min2lin;

// Solvability of A x = c over the domain by integer column echelon form
// (ZZ) or Gaussian elimination (fields). Independent of the graph-based solver.
inline bool linear_algebra_consistent(const LinSystem& sys) {
  const int n = sys.num_variables();
  const auto& eqs = sys.equations();
  const DomainSpec d = sys.domain();
  if (d.is_field()) {
    // Row reduction with Elements.
    std::vector<std::vector<Element>> rows;
    for (const auto& e : eqs) {
      std::vector<Element> r(n + 1, Element(d));
      r[e.u] += e.a;
      r[e.v] += e.b;
      r[n] = e.c;
      rows.push_back(std::move(r));
    }
    std::size_t rank = 0;
    for (int col = 0; col < n && rank < rows.size(); ++col) {
      std::size_t piv = rank;
      while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
      if (piv == rows.size()) continue;
      std::swap(rows[piv], rows[rank]);
      Element inv = inverse(rows[rank][col]);
      for (auto& x : rows[rank]) x *= inv;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == rank || rows[i][col].is_zero()) continue;
        Element f = rows[i][col];
        for (int j = 0; j <= n; ++j) rows[i][j] -= f * rows[rank][j];
      }
      ++rank;
    }
    for (std::size_t i = rank; i < rows.size(); ++i)
      if (!rows[i][n].is_zero()) return false;
    return true;
  }
  // ZZ: column operations bring A to lower echelon form L = A U with U unimodular.
  const int m = static_cast<int>(eqs.size());
  std::vector<std::vector<mpz_class>> A(m, std::vector<mpz_class>(n, 0));
  std::vector<mpz_class> c(m);
  for (int i = 0; i < m; ++i) {
    A[i][eqs[i].u] += eqs[i].a.numerator();
    A[i][eqs[i].v] += eqs[i].b.numerator();
    c[i] = eqs[i].c.numerator();
  }
  std::vector<int> pivot_col(m, -1);
  int next = 0;
  for (int i = 0; i < m && next < n; ++i) {
    // gcd-combine columns next..n-1 of row i into column `next`
    for (int j = next + 1; j < n; ++j) {
      while (A[i][j] != 0) {
        mpz_class q = A[i][next] / A[i][j];
        for (int r = 0; r < m; ++r) A[r][next] -= q * A[r][j];
        for (int r = 0; r < m; ++r) std::swap(A[r][next], A[r][j]);
      }
    }
    if (A[i][next] != 0) pivot_col[i] = next++;
  }
  std::vector<mpz_class> y(n, 0);
  for (int i = 0; i < m; ++i) {
    mpz_class acc = c[i];
    for (int j = 0; j < n; ++j)
      if (j != pivot_col[i]) acc -= A[i][j] * y[j];
    if (pivot_col[i] < 0) {
      if (acc != 0) return false;
      continue;
    }
    const mpz_class& p = A[i][pivot_col[i]];
    if (acc % p != 0) return false;
    y[pivot_col[i]] = acc / p;
  }
  return true;
}

// Exhaustive search over F_p; small systems only.
inline std::optional<Assignment> exhaustive_fp(const LinSystem& sys) {
  const DomainSpec d = sys.domain();
  const long p = static_cast<long>(d.modulus());
  const int n = sys.num_variables();
  std::vector<long> vals(n, 0);
  while (true) {
    Assignment phi;
    for (long v : vals) phi.emplace_back(d, v);
    if (sys.satisfied_by(phi)) return phi;
    int i = 0;
    while (i < n && ++vals[i] == p) vals[i++] = 0;
    if (i == n) return std::nullopt;
  }
}

struct RandomSystemConfig {
  DomainSpec domain = DomainSpec::integers();
  int vars = 4;
  int eqs = 5;
  long coef = 3;           // coefficients drawn from [-coef, coef] \ {0}
  long rhs = 4;            // right-hand sides from [-rhs, rhs]
  bool allow_zero = false;  // zero coefficients and self-loops
};

inline Element random_element(const DomainSpec& d, long lo, long hi, std::mt19937_64& rng, bool nonzero) {
  std::uniform_int_distribution<long> dist(lo, hi);
  while (true) {
    Element e(d, dist(rng));
    if (!nonzero || !e.is_zero()) return e;
  }
}

inline LinSystem random_system(const RandomSystemConfig& cfg, std::mt19937_64& rng) {
  LinSystem sys(cfg.domain);
  for (int i = 0; i < cfg.vars; ++i) sys.add_variable("x" + std::to_string(i));
  std::uniform_int_distribution<int> var(0, cfg.vars - 1);
  for (int i = 0; i < cfg.eqs; ++i) {
    int u = var(rng), v = var(rng);
    if (!cfg.allow_zero)
      while (v == u) v = var(rng);
    sys.add_equation(u, v, random_element(cfg.domain, -cfg.coef, cfg.coef, rng, !cfg.allow_zero),
                     random_element(cfg.domain, -cfg.coef, cfg.coef, rng, !cfg.allow_zero),
                     random_element(cfg.domain, -cfg.rhs, cfg.rhs, rng, false), 1);
  }
  return sys;
}

// Random system satisfied by a random planted assignment.
inline std::pair<LinSystem, Assignment> random_consistent(const RandomSystemConfig& cfg, std::mt19937_64& rng) {
  LinSystem sys = random_system(cfg, rng);
  Assignment phi;
  for (int i = 0; i < cfg.vars; ++i) phi.push_back(random_element(cfg.domain, -5, 5, rng, false));
  LinSystem out = sys.empty_copy();
  for (auto e : sys.equations()) {
    e.c = e.a * phi[e.u] + e.b * phi[e.v];
    out.add_equation(e);
  }
  return {out, phi};
}

// Random tree on `vars` variables (edge i+1 attaches to an earlier vertex).
inline LinSystem random_tree(const DomainSpec& d, int vars, long coef, long rhs, std::mt19937_64& rng) {
  LinSystem sys(d);
  for (int i = 0; i < vars; ++i) sys.add_variable("t" + std::to_string(i));
  for (int i = 1; i < vars; ++i) {
    std::uniform_int_distribution<int> parent(0, i - 1);
    sys.add_equation(parent(rng), i, random_element(d, -coef, coef, rng, true), random_element(d, -coef, coef, rng, true),
                     random_element(d, -rhs, rhs, rng, false), 1);
  }
  return sys;
}

}  // namespace oracle_test

#include "min2lin/oracle.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>

#include "min2lin/errors.hpp"

namespace min2lin {

namespace {

Weight boundary_weight(const Graph& g, unsigned long set) {
  Weight w = 0;
  for (const auto& e : g.edges())
    if ((set >> e.u & 1) != (set >> e.v & 1)) w += e.weight;
  return w;
}

bool connected_within(const Graph& g, unsigned long set, Vertex s) {
  unsigned long seen = 1UL << s;
  std::vector<Vertex> stack{s};
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (auto [e, y] : g.incident(x))
      if ((set >> y & 1) && !(seen >> y & 1)) {
        seen |= 1UL << y;
        stack.push_back(y);
      }
  }
  return seen == set;
}


template <class Accept>
std::optional<Weight> cheapest_edge_subset(const Graph& g, Weight k, Accept accept) {
  const int m = g.num_edges();
  if (m > 26) throw std::length_error("edge subset enumeration is limited to small graphs");
  std::optional<Weight> best;
  std::vector<char> removed(m);
  for (unsigned long mask = 0; mask < (1UL << m); ++mask) {
    Weight w = 0;
    for (EdgeId e = 0; e < m; ++e) {
      removed[e] = mask >> e & 1;
      if (removed[e]) w += g.edge(e).weight;
    }
    if (w > k || (best && w >= *best)) continue;
    if (accept(removed)) best = w;
  }
  return best;
}

bool bipartite(const Graph& g, const std::vector<char>& removed) {
  std::vector<int> side(g.num_vertices(), -1);
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<Vertex> stack{s};
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (auto [e, y] : g.incident(x)) {
        if (removed[e]) continue;
        if (side[y] < 0) {
          side[y] = 1 - side[x];
          stack.push_back(y);
        } else if (side[y] == side[x]) {
          return false;
        }
      }
    }
  }
  return true;
}

LinSystem vertex_system(const Graph& g, DomainSpec d) {
  LinSystem sys(d);
  for (Vertex v = 0; v < g.num_vertices(); ++v) sys.add_variable("x" + std::to_string(v));
  return sys;
}

class Sampler {
 public:
  Sampler(DomainSpec d, std::uint64_t seed) : d_(d), rng_(seed) {}

  int index(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
  Weight weight(Weight max) { return std::uniform_int_distribution<Weight>(1, max)(rng_); }

  Element value() {
    switch (d_.kind()) {
      case DomainSpec::Kind::PrimeField:
        return Element(d_, static_cast<long>(std::uniform_int_distribution<std::uint64_t>(0, d_.modulus() - 1)(rng_)));
      case DomainSpec::Kind::Rationals:
        return Element::fraction(d_, std::uniform_int_distribution<long>(-4, 4)(rng_),
                                 std::uniform_int_distribution<long>(1, 3)(rng_));
      case DomainSpec::Kind::Integers:
        break;
    }
    return Element(d_, std::uniform_int_distribution<long>(-4, 4)(rng_));
  }
  Element nonzero() {
    if (d_.kind() == DomainSpec::Kind::Integers || d_.kind() == DomainSpec::Kind::Rationals) {
      long v = std::uniform_int_distribution<long>(1, 3)(rng_);
      return Element(d_, std::bernoulli_distribution(0.5)(rng_) ? v : -v);
    }
    Element e = value();
    while (e.is_zero()) e = value();
    return e;
  }

 private:
  DomainSpec d_;
  std::mt19937_64 rng_;
};

}  // namespace

std::vector<std::vector<EdgeId>> brute_important_separators(const Graph& g, Vertex s, Vertex t, Weight k) {
  const int n = g.num_vertices();
  if (n > 24) throw std::length_error("important separator enumeration is limited to small graphs");
  if (s == t) throw std::invalid_argument("s and t must differ");
  // s-side sets that avoid t, with their boundary weight
  std::vector<std::pair<unsigned long, Weight>> sides;
  for (unsigned long set = 0; set < (1UL << n); ++set)
    if ((set >> s & 1) && !(set >> t & 1)) sides.emplace_back(set, boundary_weight(g, set));
  std::vector<std::vector<EdgeId>> out;
  for (auto [r, w] : sides) {
    if (w > k || !connected_within(g, r, s)) continue;
    const bool dominated = std::any_of(sides.begin(), sides.end(), [&](const auto& o) {
      return o.first != r && (o.first & r) == r && o.second <= w;
    });
    if (dominated) continue;
    std::vector<EdgeId> cut;
    for (EdgeId e = 0; e < g.num_edges(); ++e)
      if ((r >> g.edge(e).u & 1) != (r >> g.edge(e).v & 1)) cut.push_back(e);
    out.push_back(std::move(cut));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<BruteResult> brute_min2lin(const LinSystem& sys, Weight k) {
  std::vector<const Equation*> deletable;
  for (const auto& e : sys.equations())
    if (e.weight <= k) deletable.push_back(&e);
  if (deletable.size() > 30) throw std::length_error("brute force is limited to 30 deletable equations");
  std::set<EqId> chosen;
  std::function<bool(std::size_t, Weight)> pick = [&](std::size_t from, Weight left) {
    if (left == 0) return solve(sys.without(chosen)).has_value();
    for (std::size_t i = from; i < deletable.size(); ++i) {
      if (deletable[i]->weight > left) continue;
      chosen.insert(deletable[i]->id);
      if (pick(i + 1, left - deletable[i]->weight)) return true;
      chosen.erase(deletable[i]->id);
    }
    return false;
  };
  for (Weight w = 0; w <= k; ++w)
    if (pick(0, w)) return BruteResult{w, chosen};
  return std::nullopt;
}

LinSystem reduce_bipartization(const Graph& g) {
  const DomainSpec f2 = DomainSpec::prime_field(2);
  LinSystem sys = vertex_system(g, f2);
  for (const auto& e : g.edges())
    sys.add_equation(e.u, e.v, Element(f2, 1), Element(f2, -1), Element(f2, 1), e.weight);
  return sys;
}

LinSystem reduce_multiway_cut(const Graph& g, const std::vector<Vertex>& terminals, Weight k) {
  const DomainSpec q = DomainSpec::rationals();
  LinSystem sys = vertex_system(g, q);
  for (const auto& e : g.edges()) sys.add_equation(e.u, e.v, Element(q, 1), Element(q, -1), Element(q), e.weight);
  for (std::size_t i = 0; i < terminals.size(); ++i) {
    Vertex t = terminals[i];
    sys.add_equation(t, t, Element(q, 1), Element(q), Element(q, static_cast<long>(i) + 1), k + 1);
  }
  return sys;
}

std::uint64_t odd_prime(int index) {
  std::uint64_t p = 1;
  for (int found = -1; found < index;) {
    p += 2;
    if (is_prime(p)) ++found;
  }
  return p;
}

LinSystem reduce_multicut(const Graph& g, const std::vector<std::pair<Vertex, Vertex>>& requests, Weight k) {
  const DomainSpec z = DomainSpec::integers();
  LinSystem sys = vertex_system(g, z);
  const Element one(z, 1), zero(z);
  for (const auto& e : g.edges()) sys.add_equation(e.u, e.v, one, -one, zero, e.weight);
  for (std::size_t i = 0; i < requests.size(); ++i) {
    const auto [s, t] = requests[i];
    const Element p(z, static_cast<long>(odd_prime(static_cast<int>(i))));
    VarId sp = sys.add_variable("s'" + std::to_string(i));
    VarId tp = sys.add_variable("t'" + std::to_string(i));
    sys.add_equation(s, sp, one, -p, zero, k + 1);
    sys.add_equation(t, tp, one, -p, one, k + 1);
  }
  return sys;
}

std::optional<Weight> brute_bipartization(const Graph& g, Weight k) {
  return cheapest_edge_subset(g, k, [&](const std::vector<char>& removed) { return bipartite(g, removed); });
}

std::optional<Weight> brute_multiway_cut(const Graph& g, const std::vector<Vertex>& terminals, Weight k) {
  return cheapest_edge_subset(g, k, [&](const std::vector<char>& removed) {
    auto comp = components(g, removed);
    std::vector<int> seen;
    for (Vertex t : terminals) seen.push_back(comp[t]);
    std::sort(seen.begin(), seen.end());
    return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
  });
}

std::optional<Weight> brute_multicut(const Graph& g, const std::vector<std::pair<Vertex, Vertex>>& requests, Weight k) {
  return cheapest_edge_subset(g, k, [&](const std::vector<char>& removed) {
    auto comp = components(g, removed);
    return std::all_of(requests.begin(), requests.end(), [&](auto r) { return comp[r.first] != comp[r.second]; });
  });
}

PlantedInstance gen_planted(const GeneratorConfig& cfg) {
  if (cfg.n_vars < 1 || cfg.n_eqs < 0 || cfg.weight_max < 1) throw std::invalid_argument("bad generator config");
  const DomainSpec d = cfg.domain;
  Sampler rnd(d, cfg.seed);
  PlantedInstance out{LinSystem(d), {}, {}};
  LinSystem& sys = out.system;
  for (int i = 0; i < cfg.n_vars; ++i) sys.add_variable("x" + std::to_string(i));
  for (int i = 0; i < cfg.n_vars; ++i) out.witness.push_back(rnd.value());
  const Assignment& phi = out.witness;

  auto satisfied_equation = [&](VarId u, VarId v, Weight w) {
    Element a = rnd.nonzero(), b = rnd.nonzero();
    return sys.add_equation(u, v, a, b, a * phi[u] + b * phi[v], w);
  };
  auto random_pair = [&]() {
    VarId u = rnd.index(cfg.n_vars), v = rnd.index(cfg.n_vars);
    while (cfg.n_vars > 1 && v == u) v = rnd.index(cfg.n_vars);
    return std::pair{u, v};
  };

  const Weight budget = cfg.planted ? cfg.planted->budget : 0;
  const int base = std::max<int>(0, cfg.n_eqs - static_cast<int>(budget));
  for (int i = 0; i < base; ++i) {
    if (i + 1 < cfg.n_vars) {
      satisfied_equation(rnd.index(i + 1), i + 1, rnd.weight(cfg.weight_max));
    } else {
      auto [u, v] = random_pair();
      satisfied_equation(u, v, rnd.weight(cfg.weight_max));
    }
  }
  const std::vector<Equation> planted_base = sys.equations();
  for (Weight i = 0; i < budget; ++i) {
    Element shift = rnd.nonzero();
    if (cfg.planted->noise == NoiseModel::Shift && !planted_base.empty()) {
      const Equation& e = planted_base[rnd.index(static_cast<int>(planted_base.size()))];
      out.deleted.insert(sys.add_equation(e.u, e.v, e.a, e.b, e.c + shift, 1));
    } else {
      auto [u, v] = random_pair();
      Element a = rnd.nonzero(), b = rnd.nonzero();
      out.deleted.insert(sys.add_equation(u, v, a, b, a * phi[u] + b * phi[v] + shift, 1));
    }
  }
  if (!sys.without(out.deleted).satisfied_by(phi)) throw InvariantViolation("planted witness does not verify");
  return out;
}

}  // namespace min2lin

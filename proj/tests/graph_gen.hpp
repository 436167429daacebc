#pragma once

// Random biased graphs and brute-force references for the graph modules.

#include <algorithm>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <tuple>
#include <vector>

#include "min2lin/biased.hpp"

namespace oracle_test {

using namespace min2lin;

enum class LabelKind { EvenCycle, F5, F5Sparse };

struct GraphConfig {
  int n = 5;
  int m = 7;
  Weight max_weight = 2;
  LabelKind kind = LabelKind::F5Sparse;
  bool loops = false;
};

inline BiasedGraph random_biased(const GraphConfig& cfg, std::mt19937_64& rng) {
  const DomainSpec d = cfg.kind == LabelKind::EvenCycle ? DomainSpec::rationals() : DomainSpec::prime_field(5);
  BiasedGraph g = BiasedGraph::labelled(cfg.n, d);
  std::uniform_int_distribution<int> vert(0, cfg.n - 1);
  std::uniform_int_distribution<Weight> wt(1, cfg.max_weight);
  std::uniform_int_distribution<int> f5(1, 4), coin(0, 9);
  // a spanning path keeps most graphs connected
  for (int i = 1; i < cfg.n && i <= cfg.m; ++i) {
    int u = std::uniform_int_distribution<int>(0, i - 1)(rng);
    Element r = cfg.kind == LabelKind::EvenCycle ? Element(d, -1)
                : cfg.kind == LabelKind::F5      ? Element(d, f5(rng))
                                                 : Element(d, coin(rng) < 7 ? 1 : f5(rng));
    g.add_edge(u, i, wt(rng), GroupLabel::ratio(r));
  }
  while (g.num_edges() < cfg.m) {
    int u = vert(rng), v = vert(rng);
    if (u == v && !cfg.loops) continue;
    Element r = cfg.kind == LabelKind::EvenCycle ? Element(d, -1)
                : cfg.kind == LabelKind::F5      ? Element(d, f5(rng))
                                                 : Element(d, coin(rng) < 7 ? 1 : f5(rng));
    g.add_edge(u, v, wt(rng), GroupLabel::ratio(r));
  }
  return g;
}

// Same graph and balanced class, answered through the oracle interface.
inline BiasedGraph as_oracle_graph(const BiasedGraph& labelled) {
  auto src = std::make_shared<BiasedGraph>(labelled);
  BiasedGraph g = BiasedGraph::with_oracle(
      labelled.num_vertices(), [src](const BiasedGraph&, const std::vector<EdgeId>& c) { return src->is_balanced(c); });
  for (const auto& e : labelled.edges()) g.add_edge(e.u, e.v, e.weight);
  return g;
}

// All simple cycles as edge subsets where every touched vertex has degree two
// and the edges are connected; loops are single-edge cycles.
inline std::vector<std::vector<EdgeId>> brute_cycles(const BiasedGraph& g, const std::vector<char>& active) {
  const int m = g.num_edges();
  std::vector<std::vector<EdgeId>> out;
  for (unsigned long s = 1; s < (1UL << m); ++s) {
    std::vector<EdgeId> es;
    bool ok = true;
    for (int e = 0; e < m; ++e)
      if (s >> e & 1) {
        if (!active.empty() && !active[e]) ok = false;
        es.push_back(e);
      }
    if (!ok) continue;
    if (es.size() == 1) {
      if (g.edge(es[0]).u == g.edge(es[0]).v) out.push_back(es);
      continue;
    }
    std::vector<int> deg(g.num_vertices(), 0);
    for (EdgeId e : es) {
      if (g.edge(e).u == g.edge(e).v) ok = false;
      ++deg[g.edge(e).u], ++deg[g.edge(e).v];
    }
    for (int d : deg)
      if (d != 0 && d != 2) ok = false;
    if (!ok) continue;
    // connected: flood from the first edge
    std::vector<char> seen_e(m, 0);
    std::vector<EdgeId> stack{es[0]};
    seen_e[es[0]] = 1;
    std::size_t reached = 0;
    while (!stack.empty()) {
      EdgeId e = stack.back();
      stack.pop_back();
      ++reached;
      for (EdgeId f : es)
        if (!seen_e[f] && (g.edge(f).u == g.edge(e).u || g.edge(f).u == g.edge(e).v || g.edge(f).v == g.edge(e).u ||
                           g.edge(f).v == g.edge(e).v)) {
          seen_e[f] = 1;
          stack.push_back(f);
        }
    }
    if (reached == es.size()) out.push_back(es);
  }
  return out;
}

inline std::vector<char> reach(const BiasedGraph& g, Vertex root, const std::vector<char>& active) {
  std::vector<char> seen(g.num_vertices(), 0);
  std::vector<Vertex> stack{root};
  seen[root] = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (auto [e, y] : g.incident(x))
      if (active[e] && !seen[y]) seen[y] = 1, stack.push_back(y);
  }
  return seen;
}

inline bool brute_balanced_component(const BiasedGraph& g, Vertex root, const std::vector<char>& active) {
  auto comp = reach(g, root, active);
  std::vector<char> sub(active);
  for (EdgeId e = 0; e < g.num_edges(); ++e) sub[e] = active[e] && comp[g.edge(e).u];
  for (const auto& c : brute_cycles(g, sub))
    if (!g.is_balanced(c)) return false;
  return true;
}

// Exhaustive half-integral structures (V_R, X1): V_R is the root component of
// G - X1 - delta(V_R), G_R balanced. Returns the best under the library's
// documented order.
struct BruteLp {
  Weight twice = 0;
  std::vector<Vertex> vr;
  std::vector<EdgeId> x1;
  std::vector<std::vector<Vertex>> optimal_vrs;  // every V_R attaining the optimum
};

inline BruteLp brute_lp(const BiasedGraph& g, Vertex root, const std::vector<char>& active_in = {},
                        const std::vector<Weight>& weights = {}) {
  const int n = g.num_vertices(), m = g.num_edges();
  std::vector<char> active = active_in.empty() ? std::vector<char>(m, 1) : active_in;
  std::vector<Weight> w = weights;
  if (w.empty())
    for (const auto& e : g.edges()) w.push_back(e.weight);
  // unbalanced cycles as edge bitmasks
  std::vector<unsigned long> bad;
  for (const auto& c : brute_cycles(g, active))
    if (!g.is_balanced(c)) {
      unsigned long mask = 0;
      for (EdgeId e : c) mask |= 1UL << e;
      bad.push_back(mask);
    }
  BruteLp best;
  bool have = false;
  std::vector<std::pair<Weight, std::vector<Vertex>>> all;
  for (unsigned long vs = 0; vs < (1UL << n); ++vs) {
    if (!(vs >> root & 1)) continue;
    std::vector<EdgeId> inner;
    Weight boundary = 0;
    for (EdgeId e = 0; e < m; ++e) {
      if (!active[e]) continue;
      bool a = vs >> g.edge(e).u & 1, b = vs >> g.edge(e).v & 1;
      if (a && b) inner.push_back(e);
      else if (a || b) boundary += w[e];
    }
    for (unsigned long xs = 0; xs < (1UL << inner.size()); ++xs) {
      std::vector<char> kept(m, 0);
      unsigned long kept_mask = 0;
      std::vector<EdgeId> x1;
      Weight twice = boundary;
      for (std::size_t i = 0; i < inner.size(); ++i) {
        if (xs >> i & 1) {
          x1.push_back(inner[i]);
          twice += 2 * w[inner[i]];
        } else {
          kept[inner[i]] = 1;
          kept_mask |= 1UL << inner[i];
        }
      }
      auto comp = reach(g, root, kept);
      bool spans = true;
      for (Vertex x = 0; x < n; ++x)
        if (static_cast<bool>(comp[x]) != static_cast<bool>(vs >> x & 1)) spans = false;
      if (!spans) continue;
      // kept edges all lie in the spanned V_R, so any cycle inside them counts
      if (std::any_of(bad.begin(), bad.end(), [&](unsigned long b) { return (b & kept_mask) == b; })) continue;
      std::vector<Vertex> vr;
      for (Vertex x = 0; x < n; ++x)
        if (vs >> x & 1) vr.push_back(x);
      all.emplace_back(twice, vr);
      auto key = [](Weight t, const std::vector<Vertex>& v, const std::vector<EdgeId>& x) {
        return std::make_tuple(t, -static_cast<long>(v.size()), v, x);
      };
      if (!have || key(twice, vr, x1) < key(best.twice, best.vr, best.x1)) {
        best.twice = twice, best.vr = vr, best.x1 = x1;
        have = true;
      }
    }
  }
  for (auto& [t, v] : all)
    if (t == best.twice) best.optimal_vrs.push_back(v);
  return best;
}

// Cheapest connected balanced root subgraph per vertex set, as (V, cost).
inline std::vector<std::pair<std::vector<Vertex>, Weight>> cheapest_per_vertex_set(const BiasedGraph& g, Vertex root) {
  const int n = g.num_vertices(), m = g.num_edges();
  std::vector<unsigned long> bad;
  for (const auto& c : brute_cycles(g, {}))
    if (!g.is_balanced(c)) {
      unsigned long mask = 0;
      for (EdgeId e : c) mask |= 1UL << e;
      bad.push_back(mask);
    }
  std::vector<std::pair<std::vector<Vertex>, Weight>> out;
  for (unsigned long vs = 0; vs < (1UL << n); ++vs) {
    if (!(vs >> root & 1)) continue;
    std::vector<EdgeId> inner;
    Weight boundary = 0;
    for (EdgeId e = 0; e < m; ++e) {
      bool a = vs >> g.edge(e).u & 1, b = vs >> g.edge(e).v & 1;
      if (a && b) inner.push_back(e);
      else if (a || b) boundary += g.edge(e).weight;
    }
    std::optional<Weight> best;
    for (unsigned long xs = 0; xs < (1UL << inner.size()); ++xs) {
      std::vector<char> kept(m, 0);
      unsigned long kept_mask = 0;
      Weight c = boundary;
      for (std::size_t i = 0; i < inner.size(); ++i) {
        if (xs >> i & 1) {
          c += g.edge(inner[i]).weight;
        } else {
          kept[inner[i]] = 1;
          kept_mask |= 1UL << inner[i];
        }
      }
      if (best && c >= *best) continue;
      if (std::any_of(bad.begin(), bad.end(), [&](unsigned long b) { return (b & kept_mask) == b; })) continue;
      auto comp = reach(g, root, kept);
      bool spans = true;
      for (Vertex x = 0; x < n; ++x)
        if (static_cast<bool>(comp[x]) != static_cast<bool>(vs >> x & 1)) spans = false;
      if (spans) best = c;
    }
    if (!best) continue;
    std::vector<Vertex> vr;
    for (Vertex x = 0; x < n; ++x)
      if (vs >> x & 1) vr.push_back(x);
    out.emplace_back(vr, *best);
  }
  return out;
}

}  // namespace oracle_test

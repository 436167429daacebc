#include "min2lin/ibs.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "min2lin/errors.hpp"

namespace min2lin {

namespace {

std::vector<char> vertex_mask(const BiasedGraph& g, const std::vector<Vertex>& vs) {
  std::vector<char> in(g.num_vertices(), 0);
  for (Vertex x : vs) {
    if (x < 0 || x >= g.num_vertices()) throw std::out_of_range("vertex out of range");
    in[x] = 1;
  }
  return in;
}

std::vector<EdgeId> edges_of(const std::vector<char>& mask) {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < static_cast<EdgeId>(mask.size()); ++e)
    if (mask[e]) out.push_back(e);
  return out;
}

std::vector<char> reach(const BiasedGraph& g, Vertex root, const EdgeMask& kept) {
  std::vector<char> seen(g.num_vertices(), 0);
  std::vector<Vertex> stack{root};
  seen[root] = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (auto [e, y] : g.incident(x))
      if (kept[e] && !seen[y]) seen[y] = 1, stack.push_back(y);
  }
  return seen;
}

Weight weight_of(const BiasedGraph& g, const std::vector<char>& mask) {
  Weight w = 0;
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    if (mask[e]) w += g.edge(e).weight;
  return w;
}

}  // namespace

BalancedSubgraph make_subgraph(const BiasedGraph& g, std::vector<Vertex> vertices, std::vector<EdgeId> edges) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  const auto in = vertex_mask(g, vertices);
  std::vector<char> in_h(g.num_edges(), 0);
  for (EdgeId e : edges) {
    if (e < 0 || e >= g.num_edges()) throw std::out_of_range("edge out of range");
    if (!in[g.edge(e).u] || !in[g.edge(e).v]) throw std::invalid_argument("subgraph edge leaves its vertex set");
    in_h[e] = 1;
  }
  BalancedSubgraph h;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const bool a = in[g.edge(e).u], b = in[g.edge(e).v];
    if ((a && b && !in_h[e]) || a != b) {
      h.deleted.push_back(e);
      h.cost += g.edge(e).weight;
    }
  }
  h.vertices = std::move(vertices);
  h.edges = std::move(edges);
  return h;
}

Weight cost(const BiasedGraph& g, const std::vector<Vertex>& vertices, const std::vector<EdgeId>& edges) {
  return make_subgraph(g, vertices, edges).cost;
}

bool dominates(const BalancedSubgraph& a, const BalancedSubgraph& b) {
  return a.cost <= b.cost && std::includes(a.vertices.begin(), a.vertices.end(), b.vertices.begin(), b.vertices.end());
}

bool strictly_dominates(const BalancedSubgraph& a, const BalancedSubgraph& b) {
  return dominates(a, b) && (a.cost < b.cost || a.vertices.size() > b.vertices.size());
}

namespace {

class FamilyBuilder {
 public:
  FamilyBuilder(const BiasedGraph& g, Vertex root, Weight k, const BranchObserver& observe)
      : g_(g), root_(root), k_(k), observe_(observe) {
    family_.budget = k;
  }

  DominatingFamily run() {
    branch(std::vector<char>(g_.num_edges(), 0), std::vector<char>(g_.num_edges(), 0), 0);
    // A leaf optimum under forced edges can be strictly dominated by another
    // leaf; whatever it dominates, that leaf dominates too.
    auto& ms = family_.members;
    std::vector<char> drop(ms.size(), 0);
    for (std::size_t i = 0; i < ms.size(); ++i)
      for (std::size_t j = 0; j < ms.size() && !drop[i]; ++j)
        if (i != j && !drop[j] && strictly_dominates(ms[j], ms[i])) drop[i] = 1;
    std::vector<BalancedSubgraph> kept;
    for (std::size_t i = 0; i < ms.size(); ++i)
      if (!drop[i]) kept.push_back(std::move(ms[i]));
    ms = std::move(kept);
    return std::move(family_);
  }

 private:
  void check_state(const std::vector<char>& e0, const std::vector<char>& e1) const {
    const auto in_e0 = reach(g_, root_, e0);
    for (EdgeId e = 0; e < g_.num_edges(); ++e) {
      if (e0[e] && e1[e]) throw InvariantViolation("branching state sets overlap");
      if (e0[e] && !in_e0[g_.edge(e).u]) throw InvariantViolation("kept edges are not connected to the root");
      if (e1[e] && !in_e0[g_.edge(e).u] && !in_e0[g_.edge(e).v])
        throw InvariantViolation("deleted edge does not touch the kept subgraph");
    }
    if (find_unbalanced_cycle(g_, root_, e0)) throw InvariantViolation("kept edges are unbalanced");
  }

  void branch(std::vector<char> e0, std::vector<char> e1, int depth) {
    ++family_.nodes;
    family_.max_depth = std::max(family_.max_depth, depth);
    check_state(e0, e1);
    if (observe_) observe_(BranchingState{edges_of(e0), edges_of(e1)}, depth);

    const Weight spent = weight_of(g_, e1);
    if (spent > k_) return;
    LpOptions opts;
    opts.active.resize(g_.num_edges());
    opts.weights.resize(g_.num_edges());
    for (EdgeId e = 0; e < g_.num_edges(); ++e) {
      opts.active[e] = !e1[e];
      opts.weights[e] = e0[e] ? 2 * k_ + 1 : g_.edge(e).weight;
    }
    opts.max_twice_value = 2 * (k_ - spent);
    auto lp = extremal_lp_optimum(g_, root_, opts);
    if (!lp) return;

    // G_B: root component of G - E1 - supp(x)
    std::vector<char> in_vr(g_.num_vertices(), 0);
    for (Vertex x : lp->vr) in_vr[x] = 1;
    std::vector<char> x1(g_.num_edges(), 0);
    for (EdgeId e : lp->x1) x1[e] = 1;
    std::vector<EdgeId> gb_edges;
    for (EdgeId e = 0; e < g_.num_edges(); ++e)
      if (!e1[e] && !x1[e] && in_vr[g_.edge(e).u] && in_vr[g_.edge(e).v]) gb_edges.push_back(e);

    if (lp->xhalf.empty()) {
      emit(make_subgraph(g_, lp->vr, gb_edges));
      return;
    }
    for (EdgeId e : gb_edges) e0[e] = 1;
    for (EdgeId e : lp->x1) e1[e] = 1;
    const EdgeId e = lp->xhalf.front();
    auto keep = e0;
    keep[e] = 1;
    branch(std::move(keep), e1, depth + 1);
    e1[e] = 1;
    branch(std::move(e0), std::move(e1), depth + 1);
  }

  void emit(BalancedSubgraph h) {
    if (h.cost > k_) throw InvariantViolation("family member exceeds the budget");
    for (const auto& m : family_.members)
      if (m.vertices == h.vertices && m.cost == h.cost && m.deleted == h.deleted) return;
    family_.members.push_back(std::move(h));
  }

  const BiasedGraph& g_;
  Vertex root_;
  Weight k_;
  const BranchObserver& observe_;
  DominatingFamily family_;
};

}  // namespace

DominatingFamily dominating_family(const BiasedGraph& g, Vertex root, Weight k, const BranchObserver& observe) {
  if (root < 0 || root >= g.num_vertices()) throw std::out_of_range("root out of range");
  if (k < 0) throw std::invalid_argument("negative budget");
  return FamilyBuilder(g, root, k, observe).run();
}

std::optional<std::vector<EdgeId>> rbgce_solve(const BiasedGraph& g, Vertex root, Weight k) {
  if (root < 0 || root >= g.num_vertices()) throw std::out_of_range("root out of range");
  if (k < 0) return std::nullopt;
  std::optional<std::vector<EdgeId>> best;
  Weight best_w = k + 1;
  // Kept edges get a weight whose half already exceeds the budget, so they
  // never enter the LP support.
  std::function<void(std::vector<char>&, std::vector<char>&)> rec = [&](std::vector<char>& e0, std::vector<char>& e1) {
    const Weight spent = weight_of(g, e1);
    if (spent >= best_w) return;
    LpOptions opts;
    opts.active.resize(g.num_edges());
    opts.weights.resize(g.num_edges());
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      opts.active[e] = !e1[e];
      opts.weights[e] = e0[e] ? 2 * k + 1 : g.edge(e).weight;
    }
    // any completion must cost strictly less than the incumbent
    opts.max_twice_value = 2 * (best_w - 1 - spent);
    auto lp = extremal_lp_optimum(g, root, opts);
    if (!lp) return;
    if (lp->xhalf.empty()) {
      std::vector<EdgeId> sol = edges_of(e1);
      sol.insert(sol.end(), lp->x1.begin(), lp->x1.end());
      std::sort(sol.begin(), sol.end());
      best_w = spent + lp->twice_value / 2;
      best = std::move(sol);
      return;
    }
    const EdgeId e = lp->xhalf.front();
    e0[e] = 1;
    rec(e0, e1);
    e0[e] = 0;
    e1[e] = 1;
    rec(e0, e1);
    e1[e] = 0;
  };
  std::vector<char> e0(g.num_edges(), 0), e1(g.num_edges(), 0);
  rec(e0, e1);
  return best;
}

std::optional<BalancedSubgraph> brute_dominating_check(const BiasedGraph& g, Vertex root, Weight k,
                                                       const std::vector<BalancedSubgraph>& family) {
  const int n = g.num_vertices(), m = g.num_edges();
  if (n > 20 || m > 40) throw std::length_error("brute-force domination check is limited to small graphs");
  std::vector<unsigned long long> bad;
  for (const auto& c : enumerate_cycles(g))
    if (!g.is_balanced(c)) {
      unsigned long long b = 0;
      for (EdgeId e : c) b |= 1ULL << e;
      bad.push_back(b);
    }
  std::vector<BalancedSubgraph> candidates;
  for (unsigned long vs = 0; vs < (1UL << n); ++vs) {
    if (!(vs >> root & 1)) continue;
    std::vector<EdgeId> inner;
    Weight boundary = 0;
    for (EdgeId e = 0; e < m; ++e) {
      const bool a = vs >> g.edge(e).u & 1, b = vs >> g.edge(e).v & 1;
      if (a && b) inner.push_back(e);
      else if (a || b) boundary += g.edge(e).weight;
    }
    if (boundary > k) continue;
    if (inner.size() > 24) throw std::length_error("brute-force domination check is limited to small graphs");
    std::optional<BalancedSubgraph> cheapest;
    for (unsigned long xs = 0; xs < (1UL << inner.size()); ++xs) {
      Weight c = boundary;
      unsigned long long kept = 0;
      EdgeMask kept_mask(m, 0);
      std::vector<EdgeId> h_edges;
      for (std::size_t i = 0; i < inner.size(); ++i) {
        if (xs >> i & 1) {
          c += g.edge(inner[i]).weight;
        } else {
          kept |= 1ULL << inner[i];
          kept_mask[inner[i]] = 1;
          h_edges.push_back(inner[i]);
        }
      }
      if (c > k || (cheapest && c >= cheapest->cost)) continue;
      if (std::any_of(bad.begin(), bad.end(), [&](unsigned long long b) { return (b & kept) == b; })) continue;
      auto seen = reach(g, root, kept_mask);
      bool spans = true;
      for (Vertex x = 0; x < n; ++x)
        if (static_cast<bool>(seen[x]) != static_cast<bool>(vs >> x & 1)) spans = false;
      if (!spans) continue;
      std::vector<Vertex> vertices;
      for (Vertex x = 0; x < n; ++x)
        if (vs >> x & 1) vertices.push_back(x);
      cheapest = make_subgraph(g, vertices, h_edges);
    }
    if (cheapest) candidates.push_back(std::move(*cheapest));
  }
  // Report the cheapest, then largest, counterexample.
  std::stable_sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
    if (a.cost != b.cost) return a.cost < b.cost;
    return a.vertices.size() > b.vertices.size();
  });
  for (auto& h : candidates)
    if (std::none_of(family.begin(), family.end(), [&](const BalancedSubgraph& f) { return dominates(f, h); }))
      return std::move(h);
  return std::nullopt;
}

}  // namespace min2lin

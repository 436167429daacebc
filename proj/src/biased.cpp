#include "min2lin/biased.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "min2lin/errors.hpp"

namespace min2lin {

GroupLabel GroupLabel::identity(const DomainSpec& field) {
  if (!field.is_field()) throw NotAField("group labels need a field");
  return GroupLabel(Element(field, 1));
}

GroupLabel GroupLabel::ratio(const Element& r) {
  if (!r.domain().is_field()) throw NotAField("group labels need a field");
  if (r.is_zero()) throw std::invalid_argument("zero is not a group label");
  return GroupLabel(r);
}

GroupLabel GroupLabel::generator(const DomainSpec& field, int index) {
  GroupLabel g = identity(field);
  g.gens_.emplace_back(index, 1);
  return g;
}

GroupLabel GroupLabel::operator*(const GroupLabel& o) const {
  GroupLabel out(ratio_ * o.ratio_);
  auto i = gens_.begin(), j = o.gens_.begin();
  while (i != gens_.end() || j != o.gens_.end()) {
    if (j == o.gens_.end() || (i != gens_.end() && i->first < j->first)) {
      out.gens_.push_back(*i++);
    } else if (i == gens_.end() || j->first < i->first) {
      out.gens_.push_back(*j++);
    } else {
      if (long s = i->second + j->second) out.gens_.emplace_back(i->first, s);
      ++i, ++j;
    }
  }
  return out;
}

GroupLabel GroupLabel::inverse() const {
  GroupLabel out(min2lin::inverse(ratio_));
  out.gens_ = gens_;
  for (auto& [_, e] : out.gens_) e = -e;
  return out;
}

bool GroupLabel::is_identity() const { return gens_.empty() && ratio_.is_one(); }

bool GroupLabel::operator==(const GroupLabel& o) const { return ratio_ == o.ratio_ && gens_ == o.gens_; }

BiasedGraph::BiasedGraph(int n, DomainSpec field, CycleOracle oracle)
    : n_(n), field_(field), oracle_(std::move(oracle)), adj_(n) {}

BiasedGraph BiasedGraph::labelled(int n, DomainSpec field) {
  if (!field.is_field()) throw NotAField("group labels need a field");
  return BiasedGraph(n, field, nullptr);
}

BiasedGraph BiasedGraph::with_oracle(int n, CycleOracle oracle) {
  if (!oracle) throw std::invalid_argument("missing cycle oracle");
  return BiasedGraph(n, DomainSpec::rationals(), std::move(oracle));
}

EdgeId BiasedGraph::add_edge(Vertex u, Vertex v, Weight w) {
  if (is_labelled()) throw std::invalid_argument("labelled graph edges need a label");
  return add_edge(u, v, w, GroupLabel::identity(field_));
}

EdgeId BiasedGraph::add_edge(Vertex u, Vertex v, Weight w, GroupLabel label_uv) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::out_of_range("edge endpoint out of range");
  if (w <= 0) throw std::invalid_argument("edge weights must be positive");
  if (!(label_uv.ratio_part().domain() == field_)) throw std::invalid_argument("label over the wrong field");
  const EdgeId id = num_edges();
  edges_.push_back({u, v, w});
  labels_.push_back(std::move(label_uv));
  adj_[u].emplace_back(id, v);
  if (u != v) adj_[v].emplace_back(id, u);
  return id;
}

GroupLabel BiasedGraph::label(EdgeId e, Vertex from) const {
  const GraphEdge& ed = edges_[e];
  if (from == ed.u) return labels_[e];
  if (from == ed.v) return labels_[e].inverse();
  throw std::invalid_argument("vertex is not an endpoint of the edge");
}

namespace {

struct OrderedCycle {
  std::vector<Vertex> walk;
  std::vector<EdgeId> edges;
};

OrderedCycle order_cycle(const BiasedGraph& g, const std::vector<EdgeId>& cycle) {
  if (cycle.empty()) throw InvalidCycle("empty cycle");
  std::set<EdgeId> distinct(cycle.begin(), cycle.end());
  if (distinct.size() != cycle.size()) throw InvalidCycle("repeated edge in cycle");
  for (EdgeId e : cycle)
    if (e < 0 || e >= g.num_edges()) throw InvalidCycle("unknown edge in cycle");
  if (cycle.size() == 1) {
    const auto& e = g.edge(cycle[0]);
    if (e.u != e.v) throw InvalidCycle("single non-loop edge");
    return {{e.u}, cycle};
  }
  std::map<Vertex, std::vector<EdgeId>> inc;
  for (EdgeId e : cycle) {
    const auto& ed = g.edge(e);
    if (ed.u == ed.v) throw InvalidCycle("loop inside a longer cycle");
    inc[ed.u].push_back(e);
    inc[ed.v].push_back(e);
  }
  for (const auto& [_, es] : inc)
    if (es.size() != 2) throw InvalidCycle("vertex of degree other than two");
  OrderedCycle out;
  Vertex start = g.edge(cycle[0]).u;
  Vertex cur = start;
  EdgeId e = cycle[0];
  do {
    out.walk.push_back(cur);
    out.edges.push_back(e);
    const auto& ed = g.edge(e);
    cur = ed.u == cur ? ed.v : ed.u;
    const auto& es = inc[cur];
    e = es[0] == e ? es[1] : es[0];
  } while (cur != start);
  if (out.edges.size() != cycle.size()) throw InvalidCycle("edges form more than one cycle");
  return out;
}

bool on(const EdgeMask& m, EdgeId e) { return m.empty() || m[e]; }

}  // namespace

std::vector<Vertex> cycle_walk(const BiasedGraph& g, const std::vector<EdgeId>& cycle) {
  return order_cycle(g, cycle).walk;
}

bool BiasedGraph::is_balanced(const std::vector<EdgeId>& cycle) const {
  OrderedCycle c = order_cycle(*this, cycle);
  if (oracle_) return oracle_(*this, c.edges);
  GroupLabel prod = GroupLabel::identity(field_);
  for (std::size_t i = 0; i < c.edges.size(); ++i) prod = prod * label(c.edges[i], c.walk[i]);
  return prod.is_identity();
}

std::vector<std::vector<EdgeId>> enumerate_cycles(const BiasedGraph& g, const EdgeMask& active) {
  std::vector<std::vector<EdgeId>> out;
  const int n = g.num_vertices();
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    if (on(active, e) && g.edge(e).u == g.edge(e).v) out.push_back({e});
  // Each cycle is found from its smallest vertex, first edge id below last.
  std::vector<char> used(n, 0);
  std::vector<EdgeId> path;
  std::function<void(Vertex, Vertex)> dfs = [&](Vertex s, Vertex x) {
    for (auto [e, y] : g.incident(x)) {
      if (!on(active, e) || y == x) continue;
      if (!path.empty() && e == path.back()) continue;
      if (y == s) {
        if (!path.empty() && path.front() < e) {
          out.push_back(path);
          out.back().push_back(e);
        }
        continue;
      }
      if (y < s || used[y]) continue;
      used[y] = 1;
      path.push_back(e);
      dfs(s, y);
      path.pop_back();
      used[y] = 0;
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    used[s] = 1;
    dfs(s, s);
    used[s] = 0;
  }
  return out;
}

std::optional<std::vector<EdgeId>> find_unbalanced_cycle(const BiasedGraph& g, Vertex from, const EdgeMask& active) {
  const int n = g.num_vertices();
  std::vector<int> parent_edge(n, -1), depth(n, -1);
  std::vector<Vertex> parent(n, -1), order;
  std::vector<std::optional<GroupLabel>> pot(n);
  depth[from] = 0;
  pot[from] = GroupLabel::identity(g.field());
  order.push_back(from);
  for (std::size_t i = 0; i < order.size(); ++i) {
    Vertex x = order[i];
    for (auto [e, y] : g.incident(x)) {
      if (!on(active, e) || depth[y] >= 0) continue;
      depth[y] = depth[x] + 1;
      parent[y] = x;
      parent_edge[y] = e;
      if (g.is_labelled()) pot[y] = *pot[x] * g.label(e, x);
      order.push_back(y);
    }
  }
  auto fundamental = [&](EdgeId e) {
    const auto& ed = g.edge(e);
    if (ed.u == ed.v) return std::vector<EdgeId>{e};
    std::vector<EdgeId> up_u, up_v;
    Vertex a = ed.u, b = ed.v;
    while (depth[a] > depth[b]) up_u.push_back(parent_edge[a]), a = parent[a];
    while (depth[b] > depth[a]) up_v.push_back(parent_edge[b]), b = parent[b];
    while (a != b) {
      up_u.push_back(parent_edge[a]), a = parent[a];
      up_v.push_back(parent_edge[b]), b = parent[b];
    }
    // u --e--> v, v up to the meeting point, then down to u
    std::vector<EdgeId> c{e};
    c.insert(c.end(), up_v.begin(), up_v.end());
    c.insert(c.end(), up_u.rbegin(), up_u.rend());
    return c;
  };
  std::vector<char> in_comp(n, 0);
  for (Vertex x : order) in_comp[x] = 1;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto& ed = g.edge(e);
    if (!on(active, e) || !in_comp[ed.u]) continue;
    if (parent_edge[ed.v] == e || parent_edge[ed.u] == e) continue;
    if (g.is_labelled()) {
      if (!(*pot[ed.u] * g.label(e, ed.u) == *pot[ed.v])) return fundamental(e);
    } else if (auto c = fundamental(e); !g.is_balanced(c)) {
      return c;
    }
  }
  if (g.is_labelled()) return std::nullopt;
  // Oracle-only classes: fall back to every cycle of the component.
  EdgeMask comp_mask(g.num_edges(), 0);
  for (EdgeId e = 0; e < g.num_edges(); ++e) comp_mask[e] = on(active, e) && in_comp[g.edge(e).u];
  for (auto& c : enumerate_cycles(g, comp_mask))
    if (!g.is_balanced(c)) return order_cycle(g, c).edges;
  return std::nullopt;
}

namespace {

struct Candidate {
  Weight twice = 0;
  std::vector<Vertex> vr;
  std::vector<EdgeId> x1;
};

bool better(const Candidate& a, const Candidate& b) {
  if (a.twice != b.twice) return a.twice < b.twice;
  if (a.vr.size() != b.vr.size()) return a.vr.size() > b.vr.size();
  if (a.vr != b.vr) return a.vr < b.vr;
  return a.x1 < b.x1;
}

// Canonical BFS growth over (V_R, potential) pairs of a labelled graph. Each
// processed vertex decides, for every undecided neighbour, whether the
// neighbour enters through it (with the potential of one connecting edge) or
// not. A neighbour declined by a processed vertex may still enter later, but
// only with a potential inconsistent with every declining edge, so every edge
// charged at a decline costs at least half its final contribution.
class LabelledSearch {
 public:
  LabelledSearch(const BiasedGraph& g, Vertex root, const EdgeMask& active, const std::vector<Weight>& w,
                 std::optional<Weight> limit)
      : g_(g), root_(root), active_(active), w_(w), limit_(limit), pot_(g.num_vertices()),
        queue_pos_(g.num_vertices(), -1) {}

  std::optional<Candidate> run() {
    include(root_, GroupLabel::identity(g_.field()));
    process(0);
    return best_;
  }

 private:
  bool prunable() const {
    if (limit_ && cost_ > *limit_) return true;
    return best_ && cost_ > best_->twice;
  }

  bool processed(Vertex x, std::size_t head) const {
    return queue_pos_[x] >= 0 && static_cast<std::size_t>(queue_pos_[x]) < head;
  }

  bool consistent(EdgeId e, Vertex from, const GroupLabel& p_from, const GroupLabel& p_to) const {
    return p_from * g_.label(e, from) == p_to;
  }

  // Charges edges from v into the included set; returns the amount added.
  Weight include(Vertex v, GroupLabel p) {
    Weight added = 0;
    for (auto [e, x] : g_.incident(v)) {
      if (!on(active_, e)) continue;
      if (x == v) {
        if (!consistent(e, v, p, p)) added += 2 * w_[e];
      } else if (pot_[x]) {
        if (!consistent(e, v, p, *pot_[x])) added += processed(x, head_) ? w_[e] : 2 * w_[e];
      }
    }
    pot_[v] = std::move(p);
    queue_pos_[v] = static_cast<int>(queue_.size());
    queue_.push_back(v);
    cost_ += added;
    return added;
  }

  void exclude_last(Weight added) {
    Vertex v = queue_.back();
    queue_.pop_back();
    queue_pos_[v] = -1;
    pot_[v].reset();
    cost_ -= added;
  }

  // p is admissible for v if no processed vertex could have taken v in.
  bool canonical(Vertex v, const GroupLabel& p) const {
    for (auto [e, x] : g_.incident(v))
      if (on(active_, e) && x != v && processed(x, head_) && consistent(e, v, p, *pot_[x])) return false;
    return true;
  }

  void process(std::size_t head) {
    if (prunable()) return;
    if (head == queue_.size()) {
      leaf();
      return;
    }
    head_ = head;
    const Vertex u = queue_[head];
    std::vector<Vertex> nbrs;
    for (auto [e, y] : g_.incident(u))
      if (on(active_, e) && !pot_[y]) nbrs.push_back(y);
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    decide(head, u, nbrs, 0);
    head_ = head;
  }

  void decide(std::size_t head, Vertex u, const std::vector<Vertex>& nbrs, std::size_t i) {
    if (prunable()) return;
    if (i == nbrs.size()) {
      process(head + 1);
      head_ = head;
      return;
    }
    const Vertex v = nbrs[i];
    // v enters through u
    std::vector<GroupLabel> seen;
    for (auto [e, y] : g_.incident(u)) {
      if (y != v || !on(active_, e)) continue;
      GroupLabel p = *pot_[u] * g_.label(e, u);
      if (std::find(seen.begin(), seen.end(), p) != seen.end()) continue;
      seen.push_back(p);
      if (!canonical(v, p)) continue;
      Weight added = include(v, p);
      decide(head, u, nbrs, i + 1);
      head_ = head;
      exclude_last(added);
    }
    // v is declined by u
    Weight declined = 0;
    for (auto [e, y] : g_.incident(u))
      if (y == v && on(active_, e)) declined += w_[e];
    cost_ += declined;
    decide(head, u, nbrs, i + 1);
    head_ = head;
    cost_ -= declined;
  }

  void leaf() {
    Candidate c;
    c.twice = cost_;
    for (Vertex x = 0; x < g_.num_vertices(); ++x)
      if (pot_[x]) c.vr.push_back(x);
    Weight twice = 0;
    for (EdgeId e = 0; e < g_.num_edges(); ++e) {
      if (!on(active_, e)) continue;
      const auto& ed = g_.edge(e);
      if (pot_[ed.u] && pot_[ed.v] && !consistent(e, ed.u, *pot_[ed.u], *pot_[ed.v])) {
        c.x1.push_back(e);
        twice += 2 * w_[e];
      } else if (!pot_[ed.u] != !pot_[ed.v]) {
        twice += w_[e];
      }
    }
    if (twice != cost_) throw InvariantViolation("LP search cost bookkeeping drifted");
    if (!best_ || better(c, *best_)) best_ = std::move(c);
  }

  const BiasedGraph& g_;
  Vertex root_;
  const EdgeMask& active_;
  const std::vector<Weight>& w_;
  std::optional<Weight> limit_;
  std::vector<std::optional<GroupLabel>> pot_;
  std::vector<int> queue_pos_;
  std::vector<Vertex> queue_;
  std::size_t head_ = 0;
  Weight cost_ = 0;
  std::optional<Candidate> best_;
};

std::vector<Vertex> component_of(const BiasedGraph& g, Vertex root, const EdgeMask& active,
                                 const std::vector<char>& allowed = {}) {
  std::vector<char> seen(g.num_vertices(), 0);
  std::vector<Vertex> order{root};
  seen[root] = 1;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (auto [e, y] : g.incident(order[i]))
      if (on(active, e) && !seen[y] && (allowed.empty() || allowed[y])) {
        seen[y] = 1;
        order.push_back(y);
      }
  std::sort(order.begin(), order.end());
  return order;
}

// Minimum-weight X1 inside G[vr] leaving it connected and balanced.
std::optional<std::pair<Weight, std::vector<EdgeId>>> oracle_min_x1(const BiasedGraph& g, Vertex root,
                                                                   const std::vector<char>& in_vr,
                                                                   const EdgeMask& inner,
                                                                   const std::vector<Weight>& w, Weight cap) {
  std::optional<std::pair<Weight, std::vector<EdgeId>>> best;
  EdgeMask mask = inner;
  std::vector<char> kept(g.num_edges(), 0);
  const auto vr_size = std::count(in_vr.begin(), in_vr.end(), 1);
  std::function<void(Weight)> rec = [&](Weight spent) {
    if (spent > cap || (best && spent > best->first)) return;
    if (static_cast<long>(component_of(g, root, mask, in_vr).size()) != vr_size) return;
    auto c = find_unbalanced_cycle(g, root, mask);
    if (!c) {
      std::vector<EdgeId> x1;
      for (EdgeId e = 0; e < g.num_edges(); ++e)
        if (inner[e] && !mask[e]) x1.push_back(e);
      if (!best || spent < best->first || (spent == best->first && x1 < best->second)) best = {{spent, x1}};
      return;
    }
    std::vector<EdgeId> newly_kept;
    for (EdgeId e : *c) {
      if (kept[e]) continue;
      mask[e] = 0;
      rec(spent + w[e]);
      mask[e] = 1;
      kept[e] = 1;
      newly_kept.push_back(e);
    }
    for (EdgeId e : newly_kept) kept[e] = 0;
  };
  rec(0);
  return best;
}

std::optional<Candidate> oracle_search(const BiasedGraph& g, Vertex root, const EdgeMask& active,
                                       const std::vector<Weight>& w, std::optional<Weight> limit) {
  const std::vector<Vertex> comp = component_of(g, root, active);
  std::vector<Vertex> others;
  for (Vertex x : comp)
    if (x != root) others.push_back(x);
  if (others.size() > 24) throw std::length_error("oracle-only LP search is limited to small components");
  std::optional<Candidate> best;
  for (unsigned long mask = 0; mask < (1UL << others.size()); ++mask) {
    std::vector<char> in_vr(g.num_vertices(), 0);
    in_vr[root] = 1;
    for (std::size_t i = 0; i < others.size(); ++i)
      if (mask >> i & 1) in_vr[others[i]] = 1;
    Weight boundary = 0;
    EdgeMask inner(g.num_edges(), 0);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      if (!on(active, e)) continue;
      const auto& ed = g.edge(e);
      if (in_vr[ed.u] && in_vr[ed.v]) inner[e] = 1;
      else if (in_vr[ed.u] || in_vr[ed.v]) boundary += w[e];
    }
    Weight cap = limit ? *limit - boundary : boundary + 2 * std::accumulate(w.begin(), w.end(), Weight{0});
    if (best) cap = std::min(cap, best->twice - boundary);
    if (cap < 0) continue;
    auto x1 = oracle_min_x1(g, root, in_vr, inner, w, cap / 2);
    if (!x1) continue;
    Candidate c;
    c.twice = boundary + 2 * x1->first;
    for (Vertex x = 0; x < g.num_vertices(); ++x)
      if (in_vr[x]) c.vr.push_back(x);
    c.x1 = x1->second;
    if (!best || better(c, *best)) best = std::move(c);
  }
  return best;
}

}  // namespace

std::optional<HalfIntegralSolution> extremal_lp_optimum(const BiasedGraph& g, Vertex root, const LpOptions& opts) {
  if (root < 0 || root >= g.num_vertices()) throw std::out_of_range("root out of range");
  if (!opts.active.empty() && static_cast<int>(opts.active.size()) != g.num_edges())
    throw std::invalid_argument("edge mask size mismatch");
  std::vector<Weight> w = opts.weights;
  if (w.empty())
    for (const auto& e : g.edges()) w.push_back(e.weight);
  if (static_cast<int>(w.size()) != g.num_edges()) throw std::invalid_argument("weight vector size mismatch");

  std::optional<Candidate> best = g.is_labelled()
                                      ? LabelledSearch(g, root, opts.active, w, opts.max_twice_value).run()
                                      : oracle_search(g, root, opts.active, w, opts.max_twice_value);
  if (!best) return std::nullopt;
  HalfIntegralSolution s;
  s.x1 = std::move(best->x1);
  s.vr = std::move(best->vr);
  s.twice_value = best->twice;
  std::vector<char> in_vr(g.num_vertices(), 0);
  for (Vertex x : s.vr) in_vr[x] = 1;
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    if (on(opts.active, e) && in_vr[g.edge(e).u] != in_vr[g.edge(e).v]) s.xhalf.push_back(e);
  return s;
}

HalfIntegralSolution extremal_lp_optimum(const BiasedGraph& g, Vertex root) {
  return *extremal_lp_optimum(g, root, LpOptions{});
}

bool lp_value_lower_bound_check(const BiasedGraph& g, Vertex root, const HalfIntegralSolution& cand,
                                const LpOptions& opts) {
  const int m = g.num_edges();
  std::vector<Weight> w = opts.weights;
  if (w.empty())
    for (const auto& e : g.edges()) w.push_back(e.weight);
  std::vector<int> x2(m, 0);
  for (EdgeId e : cand.x1) {
    if (e < 0 || e >= m || !on(opts.active, e) || x2[e]) return false;
    x2[e] = 2;
  }
  for (EdgeId e : cand.xhalf) {
    if (e < 0 || e >= m || !on(opts.active, e) || x2[e]) return false;
    x2[e] = 1;
  }
  std::vector<char> in_vr(g.num_vertices(), 0);
  for (Vertex x : cand.vr) {
    if (x < 0 || x >= g.num_vertices()) return false;
    in_vr[x] = 1;
  }
  if (!in_vr[root]) return false;

  // Structure: half edges sit on the boundary of V_R, whole edges inside it or
  // on the boundary, and the boundary is fully cut.
  Weight twice = 0;
  EdgeMask kept(m, 0);
  for (EdgeId e = 0; e < m; ++e) {
    if (!on(opts.active, e)) continue;
    const bool boundary = in_vr[g.edge(e).u] != in_vr[g.edge(e).v];
    const bool inside = in_vr[g.edge(e).u] && in_vr[g.edge(e).v];
    if (x2[e] == 1 && !boundary) return false;
    if (x2[e] == 2 && !boundary && !inside) return false;
    if (boundary && x2[e] == 0) return false;
    twice += x2[e] * w[e];
    kept[e] = x2[e] == 0;
  }
  if (twice != cand.twice_value) return false;
  std::vector<Vertex> vr = cand.vr;
  std::sort(vr.begin(), vr.end());
  vr.erase(std::unique(vr.begin(), vr.end()), vr.end());
  if (component_of(g, root, kept) != vr) return false;
  if (find_unbalanced_cycle(g, root, kept)) return false;

  // Balloons: 2 x(P) + x(C) >= 1 for every unbalanced C and root path P
  // meeting C in its last vertex only.
  EdgeMask act(m, 0);
  for (EdgeId e = 0; e < m; ++e) act[e] = on(opts.active, e);
  for (const auto& c : enumerate_cycles(g, act)) {
    if (g.is_balanced(c)) continue;
    int xc = 0;
    std::vector<char> on_c(g.num_vertices(), 0);
    for (EdgeId e : c) {
      xc += x2[e];
      on_c[g.edge(e).u] = on_c[g.edge(e).v] = 1;
    }
    if (xc >= 2) continue;
    // Dijkstra over vertices off C; x2 values are tiny, so a deque-free
    // priority queue is plenty.
    constexpr int inf = 1 << 29;
    int reach = inf;
    if (on_c[root]) {
      reach = 0;
    } else {
      std::vector<int> dist(g.num_vertices(), inf);
      using Item = std::pair<int, Vertex>;
      std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
      dist[root] = 0;
      pq.push({0, root});
      while (!pq.empty()) {
        auto [d, x] = pq.top();
        pq.pop();
        if (d != dist[x]) continue;
        for (auto [e, y] : g.incident(x)) {
          if (!act[e]) continue;
          int nd = d + x2[e];
          if (on_c[y]) {
            reach = std::min(reach, nd);
          } else if (nd < dist[y]) {
            dist[y] = nd;
            pq.push({nd, y});
          }
        }
      }
    }
    if (reach < inf && 2 * reach + xc < 2) return false;
  }
  return true;
}

}  // namespace min2lin

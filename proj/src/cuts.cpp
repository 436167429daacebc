#include "min2lin/cuts.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>

#include "min2lin/errors.hpp"

namespace min2lin {

namespace {

constexpr Weight kInfinity = std::numeric_limits<Weight>::max() / 4;

class Dinic {
 public:
  explicit Dinic(int n) : adj_(n), level_(n), it_(n) {}

  void add_undirected(int u, int v, Weight c) {
    if (u == v) return;
    adj_[u].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({v, c});
    adj_[v].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({u, c});
  }

  Weight run(int s, int t) {
    Weight flow = 0;
    while (bfs(s, t)) {
      std::fill(it_.begin(), it_.end(), 0);
      while (Weight f = dfs(s, t, kInfinity)) flow += f;
    }
    return flow;
  }

 private:
  struct Arc {
    int to;
    Weight cap;
  };

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::deque<int> queue{s};
    level_[s] = 0;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (int a : adj_[x])
        if (arcs_[a].cap > 0 && level_[arcs_[a].to] < 0) {
          level_[arcs_[a].to] = level_[x] + 1;
          queue.push_back(arcs_[a].to);
        }
    }
    return level_[t] >= 0;
  }

  Weight dfs(int x, int t, Weight pushed) {
    if (x == t) return pushed;
    for (; it_[x] < static_cast<int>(adj_[x].size()); ++it_[x]) {
      int a = adj_[x][it_[x]];
      Arc& arc = arcs_[a];
      if (arc.cap <= 0 || level_[arc.to] != level_[x] + 1) continue;
      if (Weight f = dfs(arc.to, t, std::min(pushed, arc.cap))) {
        arc.cap -= f;
        arcs_[a ^ 1].cap += f;
        return f;
      }
    }
    return 0;
  }

  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> level_;
  std::vector<int> it_;
};

class MultiwaySearch {
 public:
  MultiwaySearch(const Graph& g, const std::vector<Vertex>& terminals, Weight k)
      : g_(g), terminals_(terminals), deleted_(g.num_edges(), 0), kept_(g.num_edges(), 0), best_(k + 1) {}

  std::optional<std::vector<EdgeId>> run() {
    search(0);
    if (!found_) return std::nullopt;
    return best_set_;
  }

 private:
  void search(Weight spent) {
    if (spent >= best_) return;
    auto comp = components(g_, deleted_);
    std::optional<std::pair<Vertex, Vertex>> clash;
    for (std::size_t a = 0; a < terminals_.size() && !clash; ++a)
      for (std::size_t b = a + 1; b < terminals_.size(); ++b)
        if (comp[terminals_[a]] == comp[terminals_[b]]) {
          clash = {terminals_[a], terminals_[b]};
          break;
        }
    if (!clash) {
      best_ = spent;
      found_ = true;
      best_set_.clear();
      for (EdgeId e = 0; e < g_.num_edges(); ++e)
        if (deleted_[e]) best_set_.push_back(e);
      return;
    }
    if (spent + lower_bound() >= best_) return;

    std::vector<EdgeId> path = shortest_path(clash->first, clash->second);
    std::vector<EdgeId> pinned;
    for (EdgeId e : path) {
      if (kept_[e]) continue;
      deleted_[e] = 1;
      search(spent + g_.edge(e).weight);
      deleted_[e] = 0;
      kept_[e] = 1;
      pinned.push_back(e);
    }
    for (EdgeId e : pinned) kept_[e] = 0;
  }

  // Half the sum of minimum isolating cuts; kept edges are uncuttable.
  Weight lower_bound() const {
    const int n = g_.num_vertices();
    Weight big = 1;
    for (const auto& ed : g_.edges()) big += ed.weight;
    Weight sum = 0;
    for (Vertex t : terminals_) {
      Dinic flow(n + 1);
      for (EdgeId e = 0; e < g_.num_edges(); ++e) {
        if (deleted_[e]) continue;
        const auto& ed = g_.edge(e);
        flow.add_undirected(ed.u, ed.v, kept_[e] ? big : ed.weight);
      }
      for (Vertex o : terminals_)
        if (o != t) flow.add_undirected(o, n, big);
      Weight f = flow.run(t, n);
      if (f >= big) return kInfinity;
      sum += f;
    }
    return (sum + 1) / 2;
  }

  std::vector<EdgeId> shortest_path(Vertex s, Vertex t) const {
    std::vector<EdgeId> via(g_.num_vertices(), -1);
    std::vector<char> seen(g_.num_vertices(), 0);
    std::deque<Vertex> queue{s};
    seen[s] = 1;
    while (!queue.empty() && !seen[t]) {
      Vertex x = queue.front();
      queue.pop_front();
      for (auto [e, y] : g_.incident(x))
        if (!deleted_[e] && !seen[y]) {
          seen[y] = 1;
          via[y] = e;
          queue.push_back(y);
        }
    }
    std::vector<EdgeId> path;
    for (Vertex x = t; x != s;) {
      EdgeId e = via[x];
      path.push_back(e);
      x = g_.edge(e).u == x ? g_.edge(e).v : g_.edge(e).u;
    }
    std::reverse(path.begin(), path.end());
    return path;
  }

  const Graph& g_;
  const std::vector<Vertex>& terminals_;
  std::vector<char> deleted_;
  std::vector<char> kept_;
  Weight best_;
  bool found_ = false;
  std::vector<EdgeId> best_set_;
};

// Expanded primitive constraints of the kept set.
struct Primitives {
  std::vector<std::pair<int, int>> pins;      // (x, value)
  std::vector<std::pair<int, int>> equal;     // (x, y)
  std::vector<std::array<int, 4>> not_both;   // (x, i, y, j)
};

Primitives expand(const CspInstance& csp, const std::vector<char>& keep) {
  Primitives p;
  for (std::size_t c = 0; c < csp.constraints.size(); ++c) {
    if (!keep.empty() && !keep[c]) continue;
    const auto& con = csp.constraints[c];
    switch (con.kind) {
      case ConstraintKind::Pin:
        p.pins.emplace_back(con.vars[0], con.i);
        break;
      case ConstraintKind::Equal:
        p.equal.emplace_back(con.vars[0], con.vars[1]);
        break;
      case ConstraintKind::NotBoth:
        p.not_both.push_back({con.vars[0], con.i, con.vars[1], con.j});
        break;
      case ConstraintKind::Rk: {
        const std::size_t d = con.vars.size() / 2;
        for (std::size_t l = 0; l < d; ++l) p.equal.emplace_back(con.vars[2 * l], con.vars[2 * l + 1]);
        for (std::size_t a = 0; a < d; ++a)
          for (std::size_t b = a + 1; b < d; ++b) p.not_both.push_back({con.vars[2 * a], 1, con.vars[2 * b], 1});
        break;
      }
    }
  }
  return p;
}

bool satisfied(const CspConstraint& con, const std::vector<int>& a) {
  switch (con.kind) {
    case ConstraintKind::Pin:
      return a[con.vars[0]] == con.i;
    case ConstraintKind::Equal:
      return a[con.vars[0]] == a[con.vars[1]];
    case ConstraintKind::NotBoth:
      return a[con.vars[0]] != con.i || a[con.vars[1]] != con.j;
    case ConstraintKind::Rk: {
      int ones = 0;
      for (std::size_t l = 0; l + 1 < con.vars.size(); l += 2) {
        if (a[con.vars[l]] != a[con.vars[l + 1]]) return false;
        ones += a[con.vars[l]] == 1;
      }
      return ones <= 1;
    }
  }
  return false;
}

int find(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

// Backtracking over equality classes with forward checking.
class Backtrack {
 public:
  Backtrack(int classes, int domain) : dom_(classes, std::vector<char>(domain, 1)), value_(classes, -1), adj_(classes) {}

  void restrict(int c, int value) {
    for (int v = 0; v < static_cast<int>(dom_[c].size()); ++v)
      if (v != value) dom_[c][v] = 0;
  }
  void forbid(int c, int value) { dom_[c][value] = 0; }
  void add_not_both(int x, int i, int y, int j) {
    adj_[x].push_back({i, y, j});
    adj_[y].push_back({j, x, i});
  }

  bool solve() {
    for (const auto& d : dom_)
      if (std::none_of(d.begin(), d.end(), [](char c) { return c; })) return false;
    return step();
  }
  int value(int c) const { return value_[c]; }

 private:
  struct Link {
    int mine;
    int other;
    int theirs;
  };

  bool step() {
    int pick = -1, best = std::numeric_limits<int>::max();
    for (int c = 0; c < static_cast<int>(dom_.size()); ++c) {
      if (value_[c] >= 0) continue;
      int size = static_cast<int>(std::count(dom_[c].begin(), dom_[c].end(), 1));
      if (size < best) {
        best = size;
        pick = c;
      }
    }
    if (pick < 0) return true;
    for (int v = 0; v < static_cast<int>(dom_[pick].size()); ++v) {
      if (!dom_[pick][v]) continue;
      std::vector<std::pair<int, int>> trail;
      bool ok = true;
      for (const auto& l : adj_[pick]) {
        if (l.mine != v) continue;
        if (value_[l.other] >= 0) {
          if (value_[l.other] == l.theirs) ok = false;
          continue;
        }
        if (dom_[l.other][l.theirs]) {
          dom_[l.other][l.theirs] = 0;
          trail.emplace_back(l.other, l.theirs);
          if (std::none_of(dom_[l.other].begin(), dom_[l.other].end(), [](char c) { return c; })) ok = false;
        }
      }
      if (ok) {
        value_[pick] = v;
        if (step()) return true;
        value_[pick] = -1;
      }
      for (auto [c, val] : trail) dom_[c][val] = 1;
    }
    return false;
  }

  std::vector<std::vector<char>> dom_;
  std::vector<int> value_;
  std::vector<std::vector<Link>> adj_;
};

class CoreSearch {
 public:
  explicit CoreSearch(const CspInstance& csp)
      : csp_(csp),
        keep_(csp.constraints.size(), 1),
        crisp_(csp.constraints.size(), 0),
        best_(csp.k + 1) {
    for (std::size_t c = 0; c < csp.constraints.size(); ++c) crisp_[c] = csp.constraints[c].weight > csp.k;
  }

  std::optional<std::vector<int>> run() {
    search(0);
    if (!found_) return std::nullopt;
    return best_set_;
  }

 private:
  void search(Weight spent) {
    if (spent >= best_) return;
    if (csp_satisfiable(csp_, keep_)) {
      best_ = spent;
      found_ = true;
      best_set_.clear();
      for (std::size_t c = 0; c < keep_.size(); ++c)
        if (!keep_[c]) best_set_.push_back(static_cast<int>(c));
      return;
    }
    // Disjoint cores: each one costs at least its cheapest deletable member.
    std::vector<int> branch_core;
    std::vector<char> rest = keep_;
    Weight bound = 0;
    while (!csp_satisfiable(csp_, rest)) {
      std::vector<int> core = minimal_core(rest);
      Weight cheapest = kInfinity;
      for (int c : core)
        if (!crisp_[c]) cheapest = std::min(cheapest, csp_.constraints[c].weight);
      if (cheapest == kInfinity) return;
      bound += cheapest;
      if (spent + bound >= best_) return;
      if (branch_core.empty()) branch_core = core;
      for (int c : core) rest[c] = 0;
    }

    std::vector<int> pinned;
    for (int c : branch_core) {
      if (crisp_[c]) continue;
      keep_[c] = 0;
      search(spent + csp_.constraints[c].weight);
      keep_[c] = 1;
      crisp_[c] = 1;
      pinned.push_back(c);
    }
    for (int c : pinned) crisp_[c] = 0;
  }

  // Deletion-based shrinking; soft constraints are tried first so cores lean
  // on crisp ones and branch less.
  std::vector<int> minimal_core(std::vector<char> active) const {
    std::vector<int> order;
    for (std::size_t c = 0; c < active.size(); ++c)
      if (active[c]) order.push_back(static_cast<int>(c));
    std::stable_partition(order.begin(), order.end(), [&](int c) { return !crisp_[c]; });
    for (int c : order) {
      active[c] = 0;
      if (csp_satisfiable(csp_, active)) active[c] = 1;
    }
    std::vector<int> core;
    for (std::size_t c = 0; c < active.size(); ++c)
      if (active[c]) core.push_back(static_cast<int>(c));
    return core;
  }

  const CspInstance& csp_;
  std::vector<char> keep_;
  std::vector<char> crisp_;
  Weight best_;
  bool found_ = false;
  std::vector<int> best_set_;
};

int block_of(const Partition& p, Vertex x) {
  for (std::size_t b = 0; b < p.size(); ++b)
    if (std::find(p[b].begin(), p[b].end(), x) != p[b].end()) return static_cast<int>(b);
  return -1;
}

void refine_block(const std::vector<Vertex>& block, std::size_t pos, std::vector<int>& rgs, int used,
                  std::vector<Partition>& out) {
  if (pos == block.size()) {
    Partition parts(used);
    for (std::size_t i = 0; i < block.size(); ++i) parts[rgs[i]].push_back(block[i]);
    out.push_back(std::move(parts));
    return;
  }
  for (int label = 0; label <= used; ++label) {
    rgs[pos] = label;
    refine_block(block, pos + 1, rgs, std::max(used, label + 1), out);
  }
}

}  // namespace

Weight max_flow(const Graph& g, Vertex s, Vertex t, const std::vector<Weight>& capacity) {
  if (s == t) throw std::invalid_argument("max_flow needs distinct endpoints");
  Dinic flow(g.num_vertices());
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    flow.add_undirected(g.edge(e).u, g.edge(e).v, capacity.empty() ? g.edge(e).weight : capacity[e]);
  return flow.run(s, t);
}

std::optional<std::vector<EdgeId>> multiway_cut(const Graph& g, const std::vector<Vertex>& terminals, Weight k) {
  if (k < 0) return std::nullopt;
  for (Vertex t : terminals)
    if (t < 0 || t >= g.num_vertices()) throw std::out_of_range("terminal out of range");
  return MultiwaySearch(g, terminals, k).run();
}

std::vector<Vertex> CutInstance::terminals() const {
  std::vector<Vertex> out;
  for (const auto& b : partition) out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end());
  return out;
}

void CutInstance::validate() const {
  auto ts = terminals();
  if (std::adjacent_find(ts.begin(), ts.end()) != ts.end()) throw std::invalid_argument("partition blocks overlap");
  for (const auto& b : partition)
    if (b.empty()) throw std::invalid_argument("empty partition block");
  auto in_range = [&](Vertex x) { return x >= 0 && x < graph.num_vertices(); };
  for (Vertex t : ts)
    if (!in_range(t)) throw std::invalid_argument("terminal out of range");
  for (const auto& r : requests) {
    if (!in_range(r.u) || !in_range(r.v)) throw std::invalid_argument("request vertex out of range");
    if (!std::binary_search(ts.begin(), ts.end(), r.s) || !std::binary_search(ts.begin(), ts.end(), r.t))
      throw std::invalid_argument("request endpoint is not a terminal");
  }
  if (k < 0) throw std::invalid_argument("negative budget");
}

namespace {

Weight weight_of(const Graph& g, const std::vector<EdgeId>& edges) {
  Weight w = 0;
  for (EdgeId e : edges) w += g.edge(e).weight;
  return w;
}

std::vector<char> removal_mask(const Graph& g, const std::vector<EdgeId>& cut) {
  std::vector<char> removed(g.num_edges(), 0);
  for (EdgeId e : cut) removed.at(e) = 1;
  return removed;
}

}  // namespace

bool is_partition_cut(const CutInstance& inst, const std::vector<EdgeId>& cut) {
  auto comp = components(inst.graph, removal_mask(inst.graph, cut));
  std::vector<int> comp_block(inst.graph.num_vertices(), -1);
  for (std::size_t b = 0; b < inst.partition.size(); ++b)
    for (Vertex t : inst.partition[b]) {
      int& slot = comp_block[comp[t]];
      if (slot >= 0 && slot != static_cast<int>(b)) return false;
      slot = static_cast<int>(b);
    }
  return true;
}

bool fulfills_requests(const CutInstance& inst, const std::vector<EdgeId>& cut) {
  auto comp = components(inst.graph, removal_mask(inst.graph, cut));
  return std::all_of(inst.requests.begin(), inst.requests.end(),
                     [&](const PairCutRequest& r) { return comp[r.s] != comp[r.u] || comp[r.t] != comp[r.v]; });
}

std::optional<std::vector<EdgeId>> partition_cut(const CutInstance& inst) {
  inst.validate();
  Graph g = inst.graph;
  std::vector<Vertex> supers;
  for (const auto& block : inst.partition) {
    Vertex s = g.add_vertex();
    supers.push_back(s);
    for (Vertex t : block) g.add_edge(s, t, inst.k + 1);
  }
  auto cut = multiway_cut(g, supers, inst.k);
  if (!cut) return std::nullopt;
  for (EdgeId e : *cut)
    if (e >= inst.graph.num_edges()) throw InvariantViolation("partition cut used a superterminal spoke");
  return cut;
}

Weight unsatisfied_weight(const CspInstance& csp, const std::vector<int>& assignment) {
  if (static_cast<int>(assignment.size()) != csp.num_vars) throw std::invalid_argument("assignment size mismatch");
  Weight w = 0;
  for (const auto& con : csp.constraints)
    if (!satisfied(con, assignment)) w += con.weight;
  return w;
}

bool csp_satisfiable(const CspInstance& csp, const std::vector<char>& keep, std::vector<int>* assignment) {
  Primitives p = expand(csp, keep);
  std::vector<int> parent(csp.num_vars);
  std::iota(parent.begin(), parent.end(), 0);
  for (auto [x, y] : p.equal) parent[find(parent, x)] = find(parent, y);
  std::vector<int> cls(csp.num_vars, -1);
  int classes = 0;
  for (int x = 0; x < csp.num_vars; ++x) {
    int r = find(parent, x);
    if (cls[r] < 0) cls[r] = classes++;
    cls[x] = cls[r];
  }
  auto in_domain = [&](int v) { return v >= 0 && v < csp.domain; };
  Backtrack bt(classes, csp.domain);
  for (auto [x, v] : p.pins) {
    if (!in_domain(v)) return false;
    bt.restrict(cls[x], v);
  }
  for (const auto& [x, i, y, j] : p.not_both) {
    if (!in_domain(i) || !in_domain(j)) continue;
    if (cls[x] == cls[y]) {
      if (i == j) bt.forbid(cls[x], i);
      continue;
    }
    bt.add_not_both(cls[x], i, cls[y], j);
  }
  if (!bt.solve()) return false;
  if (assignment) {
    assignment->assign(csp.num_vars, 0);
    for (int x = 0; x < csp.num_vars; ++x) (*assignment)[x] = bt.value(cls[x]);
  }
  return true;
}

CspInstance encode_gamma_k(const CutInstance& inst) {
  inst.validate();
  const int d = static_cast<int>(std::max<Weight>(inst.k, static_cast<Weight>(inst.partition.size())));
  CspInstance csp;
  csp.domain = d + 1;
  csp.num_vars = inst.graph.num_vertices();
  csp.k = inst.k;
  for (std::size_t b = 0; b < inst.partition.size(); ++b)
    for (Vertex t : inst.partition[b])
      csp.constraints.push_back({ConstraintKind::Pin, {t}, static_cast<int>(b) + 1, 0, inst.k + 1, -1});
  for (EdgeId e = 0; e < inst.graph.num_edges(); ++e) {
    const auto& ed = inst.graph.edge(e);
    csp.constraints.push_back({ConstraintKind::Equal, {ed.u, ed.v}, 0, 0, ed.weight, e});
  }
  for (const auto& r : inst.requests) {
    int i = block_of(inst.partition, r.s) + 1, j = block_of(inst.partition, r.t) + 1;
    csp.constraints.push_back({ConstraintKind::NotBoth, {r.u, r.v}, i, j, inst.k + 1, -1});
  }
  return csp;
}

CspInstance encode_gamma_prime(const CspInstance& gamma) {
  const int d = gamma.domain - 1;
  auto ind = [d](int x, int i) { return x * d + (i - 1); };
  CspInstance out;
  out.domain = 2;
  out.num_vars = gamma.num_vars * d;
  out.k = gamma.k;
  for (int x = 0; x < gamma.num_vars; ++x)
    for (int i = 1; i <= d; ++i)
      for (int j = i + 1; j <= d; ++j)
        out.constraints.push_back({ConstraintKind::NotBoth, {ind(x, i), ind(x, j)}, 1, 1, gamma.k + 1, -1});
  for (std::size_t c = 0; c < gamma.constraints.size(); ++c) {
    const auto& con = gamma.constraints[c];
    const int tag = static_cast<int>(c);
    switch (con.kind) {
      case ConstraintKind::Pin:
        if (con.i >= 1) {
          out.constraints.push_back({ConstraintKind::Pin, {ind(con.vars[0], con.i)}, 1, 0, con.weight, tag});
        } else {
          for (int i = 1; i <= d; ++i)
            out.constraints.push_back({ConstraintKind::Pin, {ind(con.vars[0], i)}, 0, 0, con.weight, tag});
        }
        break;
      case ConstraintKind::Equal: {
        CspConstraint rk{ConstraintKind::Rk, {}, 0, 0, con.weight, tag};
        for (int i = 1; i <= d; ++i) {
          rk.vars.push_back(ind(con.vars[0], i));
          rk.vars.push_back(ind(con.vars[1], i));
        }
        out.constraints.push_back(std::move(rk));
        break;
      }
      case ConstraintKind::NotBoth:
        if (con.i < 1 || con.j < 1) throw std::invalid_argument("disequality values must be at least 1");
        out.constraints.push_back(
            {ConstraintKind::NotBoth, {ind(con.vars[0], con.i), ind(con.vars[1], con.j)}, 1, 1, con.weight, tag});
        break;
      case ConstraintKind::Rk:
        throw std::invalid_argument("Rk is not a multi-valued constraint");
    }
  }
  return out;
}

std::vector<int> indicator_assignment(const CspInstance& gamma, const std::vector<int>& phi) {
  const int d = gamma.domain - 1;
  std::vector<int> out(static_cast<std::size_t>(gamma.num_vars) * d, 0);
  for (int x = 0; x < gamma.num_vars; ++x)
    if (phi[x] >= 1) out[x * d + phi[x] - 1] = 1;
  return out;
}

std::optional<std::vector<int>> mincsp_solve_exact(const CspInstance& csp) {
  if (csp.k < 0) return std::nullopt;
  for (const auto& con : csp.constraints)
    if (con.weight <= 0) throw std::invalid_argument("constraint weights must be positive");
  return CoreSearch(csp).run();
}

std::optional<std::vector<EdgeId>> pair_partition_cut_direct(const CutInstance& inst) {
  CspInstance gamma = encode_gamma_k(inst);
  CspInstance prime = encode_gamma_prime(gamma);
  auto deleted = mincsp_solve_exact(prime);
  if (!deleted) return std::nullopt;
  std::set<EdgeId> cut;
  for (int c : *deleted) {
    int src = prime.constraints[c].tag;
    if (src < 0 || gamma.constraints[src].kind != ConstraintKind::Equal)
      throw InvariantViolation("solver deleted a crisp constraint");
    cut.insert(gamma.constraints[src].tag);
  }
  std::vector<EdgeId> out(cut.begin(), cut.end());
  if (weight_of(inst.graph, out) > inst.k || !is_partition_cut(inst, out) || !fulfills_requests(inst, out))
    throw InvariantViolation("decoded pair partition cut fails verification");
  return out;
}

std::optional<std::vector<EdgeId>> pair_partition_cut(const CutInstance& inst) {
  inst.validate();
  std::optional<std::vector<EdgeId>> best;
  CutInstance sub = inst;
  for_each_refinement(inst.partition, [&](const Partition& p) {
    if (best) sub.k = weight_of(inst.graph, *best) - 1;
    if (sub.k < 0) return;
    sub.partition = p;
    if (auto cut = pair_partition_cut_direct(sub)) best = std::move(cut);
  });
  return best;
}

void for_each_refinement(const Partition& coarse, const std::function<void(const Partition&)>& visit) {
  std::vector<std::vector<Partition>> per_block;
  for (const auto& block : coarse) {
    std::vector<Partition> options;
    std::vector<int> rgs(block.size(), 0);
    refine_block(block, 0, rgs, 0, options);
    per_block.push_back(std::move(options));
  }
  std::vector<std::size_t> idx(coarse.size(), 0);
  while (true) {
    Partition p;
    for (std::size_t b = 0; b < coarse.size(); ++b) {
      const auto& part = per_block[b][idx[b]];
      p.insert(p.end(), part.begin(), part.end());
    }
    visit(p);
    std::size_t b = coarse.size();
    while (b > 0) {
      --b;
      if (++idx[b] < per_block[b].size()) break;
      idx[b] = 0;
      if (b == 0) return;
    }
    if (coarse.empty()) return;
  }
}

std::vector<Partition> enumerate_refinements(const Partition& coarse) {
  std::vector<Partition> out;
  for_each_refinement(coarse, [&](const Partition& p) { out.push_back(p); });
  return out;
}

}  // namespace min2lin

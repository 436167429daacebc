#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "min2lin/graph.hpp"
#include "min2lin/ring.hpp"

namespace min2lin {

// Element of F^* x Z^(gens): a nonzero field ratio times a word in free
// abelian generators. Free generators let a vertex make every cycle through
// it unbalanced.
class GroupLabel {
 public:
  static GroupLabel identity(const DomainSpec& field);
  static GroupLabel ratio(const Element& r);  // r must be a nonzero field element
  static GroupLabel generator(const DomainSpec& field, int index);

  GroupLabel operator*(const GroupLabel& o) const;
  GroupLabel inverse() const;
  bool is_identity() const;
  bool operator==(const GroupLabel& o) const;

  const Element& ratio_part() const { return ratio_; }
  const std::vector<std::pair<int, long>>& generators() const { return gens_; }

 private:
  explicit GroupLabel(Element r) : ratio_(std::move(r)) {}

  Element ratio_;
  std::vector<std::pair<int, long>> gens_;  // sorted, nonzero exponents
};

// Undirected multigraph with a balanced-cycle class. Cycles are given as edge
// id lists; self-loops and parallel edges are allowed.
class BiasedGraph {
 public:
  using CycleOracle = std::function<bool(const BiasedGraph&, const std::vector<EdgeId>&)>;

  // Balanced cycles are those whose label product is the identity.
  static BiasedGraph labelled(int n, DomainSpec field);
  static BiasedGraph with_oracle(int n, CycleOracle oracle);

  EdgeId add_edge(Vertex u, Vertex v, Weight w);                      // oracle graphs
  EdgeId add_edge(Vertex u, Vertex v, Weight w, GroupLabel label_uv);  // labelled graphs

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const GraphEdge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<GraphEdge>& edges() const { return edges_; }
  // (edge, other endpoint); a loop appears once.
  const std::vector<std::pair<EdgeId, Vertex>>& incident(Vertex v) const { return adj_[v]; }

  bool is_labelled() const { return !oracle_; }
  const DomainSpec& field() const { return field_; }
  // Label of e traversed starting at `from`.
  GroupLabel label(EdgeId e, Vertex from) const;

  // Throws InvalidCycle unless the edges form one simple cycle.
  bool is_balanced(const std::vector<EdgeId>& cycle) const;

 private:
  BiasedGraph(int n, DomainSpec field, CycleOracle oracle);

  int n_;
  DomainSpec field_;
  CycleOracle oracle_;
  std::vector<GraphEdge> edges_;
  std::vector<GroupLabel> labels_;
  std::vector<std::vector<std::pair<EdgeId, Vertex>>> adj_;
};

// Vertices of a simple cycle in traversal order, starting at the first edge's
// u endpoint; throws InvalidCycle otherwise.
std::vector<Vertex> cycle_walk(const BiasedGraph& g, const std::vector<EdgeId>& cycle);

// Edges switched off by a mask are treated as deleted; an empty mask keeps all.
using EdgeMask = std::vector<char>;

// A simple unbalanced cycle in the component of `from`, as a traversal-ordered
// edge list, or nothing when that component is balanced.
std::optional<std::vector<EdgeId>> find_unbalanced_cycle(const BiasedGraph& g, Vertex from,
                                                         const EdgeMask& active = {});

// Edge-deletion balloon LP solution in {0, 1/2, 1}.
struct HalfIntegralSolution {
  std::vector<EdgeId> x1;     // value 1, sorted
  std::vector<EdgeId> xhalf;  // value 1/2, sorted
  std::vector<Vertex> vr;     // sorted
  Weight twice_value = 0;     // 2 * (w(x1) + w(xhalf)/2)
};

struct LpOptions {
  EdgeMask active;                        // empty: all edges
  std::vector<Weight> weights;            // empty: graph weights
  std::optional<Weight> max_twice_value;  // give up above this
};

// Half-integral optimum with maximal V_R. Ties: larger V_R, then
// lexicographically smaller V_R, then smaller X1.
std::optional<HalfIntegralSolution> extremal_lp_optimum(const BiasedGraph& g, Vertex root, const LpOptions& opts);
HalfIntegralSolution extremal_lp_optimum(const BiasedGraph& g, Vertex root);

// Feasibility of the candidate against every balloon (exhaustive, small graphs)
// plus its structural form.
bool lp_value_lower_bound_check(const BiasedGraph& g, Vertex root, const HalfIntegralSolution& candidate,
                                const LpOptions& opts = {});

// Every simple cycle reachable in the active subgraph; exponential.
std::vector<std::vector<EdgeId>> enumerate_cycles(const BiasedGraph& g, const EdgeMask& active = {});

}  // namespace min2lin

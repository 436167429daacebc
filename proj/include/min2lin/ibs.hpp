#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "min2lin/biased.hpp"

namespace min2lin {

// A rooted subgraph H together with the edges it deletes:
// (E(G[V(H)]) \ E(H)) plus the boundary of V(H).
struct BalancedSubgraph {
  std::vector<Vertex> vertices;  // sorted
  std::vector<EdgeId> edges;     // sorted
  std::vector<EdgeId> deleted;   // sorted
  Weight cost = 0;
};

// Throws std::invalid_argument unless edges lie inside G[vertices].
BalancedSubgraph make_subgraph(const BiasedGraph& g, std::vector<Vertex> vertices, std::vector<EdgeId> edges);
Weight cost(const BiasedGraph& g, const std::vector<Vertex>& vertices, const std::vector<EdgeId>& edges);

// a dominates b: V(b) within V(a) and c(a) <= c(b).
bool dominates(const BalancedSubgraph& a, const BalancedSubgraph& b);
bool strictly_dominates(const BalancedSubgraph& a, const BalancedSubgraph& b);

struct BranchingState {
  std::vector<EdgeId> e0;  // kept
  std::vector<EdgeId> e1;  // deleted
};

struct DominatingFamily {
  std::vector<BalancedSubgraph> members;
  Weight budget = 0;
  long nodes = 0;      // branching states visited
  int max_depth = 0;
};

using BranchObserver = std::function<void(const BranchingState&, int depth)>;

// Connected balanced root subgraphs of cost <= k, each one dominating a part
// of all such subgraphs; at most 4^k members. Branching-state invariants are
// checked at every node and violations throw InvariantViolation.
DominatingFamily dominating_family(const BiasedGraph& g, Vertex root, Weight k, const BranchObserver& observe = {});

// Minimum-weight edge set of weight <= k whose removal balances the root's
// component, or nothing.
std::optional<std::vector<EdgeId>> rbgce_solve(const BiasedGraph& g, Vertex root, Weight k);

// Exhaustive: a connected balanced root subgraph of cost <= k that no family
// member dominates (the cheapest one per vertex set), or nothing.
std::optional<BalancedSubgraph> brute_dominating_check(const BiasedGraph& g, Vertex root, Weight k,
                                                       const std::vector<BalancedSubgraph>& family);

}  // namespace min2lin

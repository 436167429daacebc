#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "min2lin/graph.hpp"

namespace min2lin {

using Partition = std::vector<std::vector<Vertex>>;

// Maximum s-t flow value (Dinic). Capacities are edge weights unless given.
Weight max_flow(const Graph& g, Vertex s, Vertex t, const std::vector<Weight>& capacity = {});

// Minimum-weight edge set of weight <= k leaving at most one terminal per
// component, or nothing.
std::optional<std::vector<EdgeId>> multiway_cut(const Graph& g, const std::vector<Vertex>& terminals, Weight k);

// Pair cut request ({s,u},{t,v}): fulfilled when G - X has no s-u path or no
// t-v path.
struct PairCutRequest {
  Vertex s = 0;
  Vertex u = 0;
  Vertex t = 0;
  Vertex v = 0;
};

struct CutInstance {
  Graph graph;
  Partition partition;  // blocks over the terminals
  std::vector<PairCutRequest> requests;
  Weight k = 0;

  std::vector<Vertex> terminals() const;
  // Throws std::invalid_argument on overlapping blocks, bad vertices or
  // requests whose s or t is not a terminal.
  void validate() const;
};

// X is a P-cut: no component of G - X holds terminals of two blocks.
bool is_partition_cut(const CutInstance& inst, const std::vector<EdgeId>& cut);
bool fulfills_requests(const CutInstance& inst, const std::vector<EdgeId>& cut);

// Minimum P-cut of weight <= k ignoring requests, or nothing.
std::optional<std::vector<EdgeId>> partition_cut(const CutInstance& inst);

// Constraint forms shared by the multi-valued and Boolean languages.
enum class ConstraintKind {
  Pin,      // x = i
  Equal,    // x = y
  NotBoth,  // x != i or y != j
  Rk,       // x_l = y_l for all l, and at most one x_l is 1 (Boolean)
};

struct CspConstraint {
  ConstraintKind kind = ConstraintKind::Pin;
  std::vector<int> vars;  // Pin: {x}; Equal, NotBoth: {x, y}; Rk: {x_1, y_1, ..., x_d, y_d}
  int i = 0;
  int j = 0;
  Weight weight = 1;
  int tag = -1;  // source index (edge id, or constraint of the encoded instance)
};

struct CspInstance {
  int domain = 2;  // values 0..domain-1
  int num_vars = 0;
  std::vector<CspConstraint> constraints;
  Weight k = 0;
};

// Assignment check; unsatisfied weight.
Weight unsatisfied_weight(const CspInstance& csp, const std::vector<int>& assignment);
// Satisfiability of the constraints with keep[c] set (all when empty); fills
// the assignment when satisfiable.
bool csp_satisfiable(const CspInstance& csp, const std::vector<char>& keep = {}, std::vector<int>* assignment = nullptr);

// Pins, edge equalities and request disequalities over values 0..d with
// d = max(k, #blocks). Block i (1-based) is value i.
CspInstance encode_gamma_k(const CutInstance& inst);
// One Boolean indicator per (variable, value >= 1); variable x, value i maps to
// x * d + (i - 1).
CspInstance encode_gamma_prime(const CspInstance& gamma);
// phi' from phi in the indicator encoding.
std::vector<int> indicator_assignment(const CspInstance& gamma, const std::vector<int>& phi);

// Minimum-weight deletion set (constraint indices, sorted) of weight <= k
// making the CSP satisfiable, or nothing. Branch and bound over minimal
// unsatisfiable cores.
std::optional<std::vector<int>> mincsp_solve_exact(const CspInstance& csp);

// Minimum P-cut of weight <= k fulfilling every request, or nothing.
// Minimizes the indicator encoding over all refinements of P, since a P-cut
// may split a block.
std::optional<std::vector<EdgeId>> pair_partition_cut(const CutInstance& inst);
// One encoding of P as given. Sound, and exact when some optimum keeps each
// block inside one component. Output is checked against the instance.
std::optional<std::vector<EdgeId>> pair_partition_cut_direct(const CutInstance& inst);

// Every partition refining the given one, each exactly once. Blocks of each
// result keep the element order of the input.
void for_each_refinement(const Partition& coarse, const std::function<void(const Partition&)>& visit);
std::vector<Partition> enumerate_refinements(const Partition& coarse);

}  // namespace min2lin

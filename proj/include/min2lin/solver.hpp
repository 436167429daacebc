#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "min2lin/biased.hpp"
#include "min2lin/cuts.hpp"
#include "min2lin/ibs.hpp"
#include "min2lin/system.hpp"

namespace min2lin {

using DeletionSet = std::set<EqId>;

struct SolveStats {
  long compression_steps = 0;
  long dml_calls = 0;
  long family_nodes = 0;    // branching states over all dominating families
  long family_members = 0;
  long partitions = 0;      // (partition, cut) attempts
  long alpha_total = 0;     // alpha maps tried by the finite-field step
  long alpha_max_step = 0;  // largest count within one compression step
  long dml_max_nodes = 0;   // largest family_nodes + partitions within one DML call

  long nodes() const { return family_nodes + partitions + alpha_total; }
};

// S with S - X homogeneous and every equation of X non-homogeneous, so X is
// inclusion-minimal. Throws std::invalid_argument otherwise or when
// w(X) > k + 1.
class DmlInstance {
 public:
  DmlInstance(LinSystem system, DeletionSet x, Weight k);

  const LinSystem& system() const { return system_; }
  const DeletionSet& x() const { return x_; }
  Weight k() const { return k_; }
  std::vector<VarId> x_variables() const;  // sorted

 private:
  LinSystem system_;
  DeletionSet x_;
  Weight k_;
};

// Shrinks X to an inclusion-minimal solution of S, shifts S so that S - X is
// homogeneous and packs the result. Throws std::invalid_argument when S - X is
// inconsistent.
DmlInstance prepare_dml(const LinSystem& s, const DeletionSet& x, Weight k);

// Primal graph of S - X plus a root joined to every variable of X by a unit
// spoke. Vertex x is variable x; the root comes last. Spokes carry distinct
// free generators, so cycles through the root are unbalanced; other cycles are
// balanced exactly when they are identity cycles.
struct RootedGraph {
  BiasedGraph graph;
  Vertex root = 0;
  std::vector<EqId> equation;  // per edge, -1 on spokes
};

RootedGraph build_rooted_graph(const DmlInstance& dml);

// H_0 for a solution Z and a phi satisfying S - Z (instance coordinates):
// the root, the variables phi keeps nonzero in components of S - (X + Z) that
// meet V(X), their edges outside Z, and one spoke per such component.
BalancedSubgraph zero_free_subgraph(const DmlInstance& dml, const RootedGraph& rg, const DeletionSet& z,
                                    const Assignment& phi);

// Terminals (variables of X and F) grouped by component of S - (X + F);
// blocks sorted, ordered by smallest terminal.
Partition component_partition(const LinSystem& s, const DeletionSet& x, const DeletionSet& f);

enum class TerminalClass { Undetermined, Determined, ZeroDetermined };

struct AuxiliaryInstance {
  LinSystem h;
  VarId z0 = 0;
  Partition partition;
  std::map<VarId, TerminalClass> terminals;
};

// H_P over the variables of s plus z0, or nothing when it is inconsistent.
std::optional<std::pair<AuxiliaryInstance, Assignment>> build_auxiliary(const LinSystem& s, const DeletionSet& x,
                                                                        const DeletionSet& f, const Partition& p);

// Requests forced by paths with no solution in the domain, deduplicated.
std::vector<PairCutRequest> build_pair_requests(const LinSystem& s, const DeletionSet& x, const DeletionSet& f,
                                                const AuxiliaryInstance& aux, const Assignment& phi_h);

// The DML algorithms: a set Z disjoint from X of weight <= k with S - Z
// consistent, or nothing.
std::optional<DeletionSet> dml_ed(const DmlInstance& dml, SolveStats* stats = nullptr);
std::optional<DeletionSet> dml_field(const DmlInstance& dml, SolveStats* stats = nullptr);
std::optional<DeletionSet> dml_finite_field(const DmlInstance& dml, SolveStats* stats = nullptr);

// S restricted to alpha: S - X, a root s with x = alpha(x) s for nonzero
// values and x = t otherwise, all at weight k + 1, and t forced to zero.
struct AlphaRestriction {
  LinSystem system;
  VarId s = 0;
  VarId t = 0;
};
// alpha on the variables of X; nothing unless it satisfies X.
std::optional<AlphaRestriction> restrict_to_alpha(const DmlInstance& dml, const std::map<VarId, Element>& alpha);

// Each equation of weight <= k becomes a chain of times + 1 equations of the
// same weight through fresh variables; origin maps new ids back.
struct Subdivided {
  LinSystem system;
  std::map<EqId, EqId> origin;
};
Subdivided subdivide(const LinSystem& s, int times, Weight k);

// Iterative compression drivers (decision form).
std::optional<DeletionSet> compress_general(const LinSystem& s, Weight k, SolveStats* stats = nullptr);
std::optional<DeletionSet> compress_field(const LinSystem& s, Weight k, SolveStats* stats = nullptr);
std::optional<DeletionSet> min2lin_finite_field(const LinSystem& s, Weight k, SolveStats* stats = nullptr);

enum class Algorithm { Auto, Ed, Field, Finite };

// Normalizes, runs one pipeline and verifies the result. Throws
// UnsupportedDomain when the algorithm does not apply to the domain and
// InvariantViolation when a result fails verification.
std::optional<DeletionSet> min2lin_decide(const LinSystem& s, Weight k, Algorithm algo = Algorithm::Auto,
                                          SolveStats* stats = nullptr);
// Minimum-weight deletion set of weight <= k, or nothing.
std::optional<DeletionSet> min2lin(const LinSystem& s, Weight k, Algorithm algo = Algorithm::Auto,
                                   SolveStats* stats = nullptr);

}  // namespace min2lin

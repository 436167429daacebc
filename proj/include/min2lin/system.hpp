#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "min2lin/ring.hpp"

namespace min2lin {

using VarId = int;
using EqId = int;
using Weight = long long;

// a*u + b*v = c
struct Equation {
  VarId u = 0;
  VarId v = 0;
  Element a;
  Element b;
  Element c;
  Weight weight = 1;
  EqId id = 0;

  bool touches(VarId x) const { return u == x || v == x; }
  VarId other(VarId x) const { return u == x ? v : u; }
};

// The same equation read as a*from + b*to = c.
struct Oriented {
  VarId from;
  VarId to;
  Element a;
  Element b;
  Element c;
};

Oriented orient(const Equation& e, VarId from);

using Assignment = std::vector<Element>;

struct ZeroGadget {
  VarId z0;
  VarId z0p;
  std::vector<EqId> equations;
};

class LinSystem {
 public:
  explicit LinSystem(DomainSpec d) : domain_(d) {}

  const DomainSpec& domain() const { return domain_; }
  Element element(long v) const { return Element(domain_, v); }

  VarId add_variable(std::string name);
  // Returns the existing variable when the name is taken.
  VarId variable(std::string_view name);
  std::optional<VarId> find_variable(std::string_view name) const;
  int num_variables() const { return static_cast<int>(names_.size()); }
  const std::string& name(VarId x) const { return names_[x]; }
  const std::vector<std::string>& names() const { return names_; }

  EqId add_equation(VarId u, VarId v, Element a, Element b, Element c, Weight w);
  void add_equation(Equation e);  // keeps e.id, which must be fresh
  const std::vector<Equation>& equations() const { return eqs_; }
  std::size_t size() const { return eqs_.size(); }
  bool contains(EqId id) const;
  const Equation& equation(EqId id) const;
  EqId next_id() const { return next_id_; }

  // Same variables; only equations for which keep(e) holds.
  template <class Pred>
  LinSystem filtered(Pred keep) const {
    LinSystem out = empty_copy();
    for (const auto& e : eqs_)
      if (keep(e)) out.add_equation(e);
    return out;
  }
  LinSystem without(const std::set<EqId>& ids) const;
  LinSystem only(const std::set<EqId>& ids) const;
  LinSystem empty_copy() const;

  Weight weight_of(const std::set<EqId>& ids) const;
  Assignment zero_assignment() const { return Assignment(names_.size(), Element(domain_)); }
  bool satisfied_by(const Assignment& phi) const;

  const std::optional<ZeroGadget>& zero_gadget() const { return gadget_; }
  void set_zero_gadget(ZeroGadget g) { gadget_ = std::move(g); }

  // Adjacency of the primal graph: for each variable, (equation index, neighbour).
  std::vector<std::vector<std::pair<int, VarId>>> adjacency() const;

 private:
  DomainSpec domain_;
  std::vector<std::string> names_;
  std::vector<Equation> eqs_;
  std::vector<int> index_of_;  // id -> position in eqs_, -1 if absent
  EqId next_id_ = 0;
  std::optional<ZeroGadget> gadget_;
};

bool satisfies(const Equation& e, const Assignment& phi);

// Divide by gcd(a, b) when it divides c, then fix a canonical unit.
Equation normalized(Equation e);

struct NormalizeResult {
  LinSystem system;
  Weight removed_weight = 0;
  std::vector<EqId> removed;
};

// Drops trivial equations, removes single-equation-inconsistent ones, divides
// out gcds and rewrites unary equations through a zero gadget of weight k+1.
NormalizeResult normalize(const LinSystem& sys, Weight k);

// x = scale[x] * x' + shift[x]
struct Substitution {
  std::vector<Element> scale;
  std::vector<Element> shift;

  Assignment pull_back(const Assignment& image) const;
};

Equation compose_path(const LinSystem& sys, const std::vector<EqId>& path);
// Composition of equations already oriented along a walk.
Oriented compose(const Oriented& first, const Oriented& second);
Oriented normalized(Oriented e);

std::pair<LinSystem, Substitution> homogenize(const LinSystem& sys, const Assignment& phi);
std::pair<LinSystem, Substitution> equalize(const LinSystem& sys);

enum class CycleClass { Inconsistent, Identity, NonIdentity };
CycleClass classify_cycle(const LinSystem& sys, const std::vector<EqId>& cycle);

// Outcome of comparing two equations over the same ordered pair (x, y).
struct Comparison {
  enum class Kind { Inconsistent, Equivalent, Forced } kind;
  bool forces_y = true;  // which variable the Forced value belongs to
  std::optional<Element> value;
};
Comparison compare_equations(const Oriented& e1, const Oriented& e2);

// BFS spanning forest of the primal graph.
class SpanningForest {
 public:
  explicit SpanningForest(const LinSystem& sys);

  int component(VarId x) const { return comp_[x]; }
  int num_components() const { return ncomp_; }
  VarId root(VarId x) const { return roots_[comp_[x]]; }
  const std::vector<VarId>& order() const { return order_; }  // BFS order
  int parent_edge(VarId x) const { return parent_eq_[x]; }     // index into sys.equations(), -1 at roots
  bool is_tree_edge(int eq_index) const { return tree_[eq_index]; }
  // Equation indices along the tree path from x to y.
  std::vector<int> path(VarId x, VarId y) const;
  // e_xy along the tree path, oriented (x, y).
  Oriented implied(VarId x, VarId y) const;

 private:
  const LinSystem* sys_;
  std::vector<int> comp_;
  std::vector<VarId> roots_;
  std::vector<VarId> order_;
  std::vector<int> parent_eq_;
  std::vector<VarId> parent_;
  std::vector<int> depth_;
  std::vector<bool> tree_;
  int ncomp_ = 0;
};

bool is_flexible(const LinSystem& sys);
LinSystem star(const LinSystem& sys, VarId x);
Equation implied_equation(const LinSystem& sys, VarId x, VarId y);

// Satisfying assignment of a flexible system with nonzero coefficients;
// r scales the homogeneous generator of every component.
std::optional<Assignment> solve_flexible(const LinSystem& sys, long r = 1);
std::optional<Assignment> solve(const LinSystem& sys);

}  // namespace min2lin

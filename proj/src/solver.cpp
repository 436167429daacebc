#include "min2lin/solver.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>

#include "min2lin/errors.hpp"

namespace min2lin {

namespace {

std::string fresh_name(const LinSystem& sys, std::string base) {
  while (sys.find_variable(base)) base += '\'';
  return base;
}

bool degenerate(const Equation& e) { return e.u == e.v || e.a.is_zero() || e.b.is_zero(); }

DeletionSet set_union(const DeletionSet& a, const DeletionSet& b) {
  DeletionSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

std::vector<VarId> variables_of(const LinSystem& s, const DeletionSet& ids) {
  std::set<VarId> vars;
  for (EqId id : ids) {
    vars.insert(s.equation(id).u);
    vars.insert(s.equation(id).v);
  }
  return {vars.begin(), vars.end()};
}

DomainSpec label_field(const DomainSpec& d) { return d.is_field() ? d : DomainSpec::rationals(); }

// Traversing u -> v multiplies by -a/b, since a u + b v = 0.
GroupLabel edge_label(const Equation& e, const DomainSpec& field) {
  if (!e.a.domain().is_field()) return GroupLabel::ratio(Element::fraction(field, -e.a.numerator(), e.b.numerator()));
  return GroupLabel::ratio(-e.a * inverse(e.b));
}

// Labelled primal graph of a homogeneous system on `n` vertices. A degenerate
// equation becomes a loop at the variable it forces to zero, labelled with a
// fresh free generator, or an identity loop when it forces nothing.
void add_system_edges(BiasedGraph& g, const LinSystem& sys, std::vector<EqId>& equation, int& next_gen) {
  for (const auto& e : sys.equations()) {
    if (!degenerate(e)) {
      g.add_edge(e.u, e.v, e.weight, edge_label(e, g.field()));
    } else {
      VarId at = e.u;
      Element coef = e.a;
      if (e.u == e.v) {
        coef = e.a + e.b;
      } else if (e.a.is_zero()) {
        at = e.v;
        coef = e.b;
      }
      g.add_edge(at, at, e.weight,
                 coef.is_zero() ? GroupLabel::identity(g.field()) : GroupLabel::generator(g.field(), next_gen++));
    }
    equation.push_back(e.id);
  }
}

struct PrimalGraph {
  Graph graph;
  std::vector<EqId> equation;  // per edge
};

PrimalGraph primal_graph(const LinSystem& sys) {
  PrimalGraph out{Graph(sys.num_variables()), {}};
  for (const auto& e : sys.equations()) {
    out.graph.add_edge(e.u, e.v, e.weight);
    out.equation.push_back(e.id);
  }
  return out;
}

DeletionSet to_equations(const std::vector<EdgeId>& edges, const std::vector<EqId>& equation) {
  DeletionSet out;
  for (EdgeId e : edges) out.insert(equation[e]);
  return out;
}

// Components of a system with per-component subsystems built on demand.
class ComponentIndex {
 public:
  explicit ComponentIndex(const LinSystem& sys) : sys_(sys) {
    SpanningForest forest(sys_);
    comp_.resize(sys_.num_variables());
    vars_.resize(forest.num_components());
    parts_.resize(forest.num_components());
    for (VarId x = 0; x < sys_.num_variables(); ++x) {
      comp_[x] = forest.component(x);
      vars_[comp_[x]].push_back(x);
    }
  }
  ComponentIndex(const ComponentIndex&) = delete;
  ComponentIndex& operator=(const ComponentIndex&) = delete;

  int of(VarId x) const { return comp_[x]; }
  const std::vector<VarId>& vars(int c) const { return vars_[c]; }
  bool flexible(int c) { return part(c).flexible; }
  const SpanningForest& forest(int c) { return *part(c).forest; }

 private:
  struct Part {
    LinSystem sys;
    std::optional<SpanningForest> forest;
    bool flexible = true;
  };

  Part& part(int c) {
    if (!parts_[c]) {
      parts_[c] = std::make_unique<Part>(Part{sys_.filtered([&](const Equation& e) { return comp_[e.u] == c; }), {}, true});
      parts_[c]->forest.emplace(parts_[c]->sys);
      parts_[c]->flexible = is_flexible(parts_[c]->sys);
    }
    return *parts_[c];
  }

  LinSystem sys_;
  std::vector<int> comp_;
  std::vector<std::vector<VarId>> vars_;
  std::vector<std::unique_ptr<Part>> parts_;
};

void require_characteristic_not_two(const DomainSpec& d, const char* what) {
  if (d.characteristic() == 2) throw UnsupportedDomain(std::string(what) + " needs characteristic other than 2");
}

// Subsets of the items with total weight <= budget, in a fixed order; stops
// when visit returns true.
bool for_each_light_subset(const LinSystem& s, const std::vector<EqId>& items, Weight budget,
                           const std::function<bool(const DeletionSet&, Weight)>& visit) {
  DeletionSet chosen;
  std::function<bool(std::size_t, Weight)> rec = [&](std::size_t i, Weight w) {
    if (i == items.size()) return visit(chosen, w);
    if (rec(i + 1, w)) return true;
    const Weight we = s.equation(items[i]).weight;
    if (w + we > budget) return false;
    chosen.insert(items[i]);
    const bool stop = rec(i + 1, w + we);
    chosen.erase(items[i]);
    return stop;
  };
  return rec(0, 0);
}

DeletionSet family_equations(const BalancedSubgraph& h, const RootedGraph& rg) {
  DeletionSet out;
  for (EdgeId e : h.deleted)
    if (rg.equation[e] >= 0) out.insert(rg.equation[e]);
  return out;
}

DominatingFamily family_for(const DmlInstance& dml, const RootedGraph& rg, SolveStats* stats) {
  auto family = dominating_family(rg.graph, rg.root, 3 * dml.k() + 1);
  if (stats) {
    ++stats->dml_calls;
    stats->family_nodes += family.nodes;
    stats->family_members += static_cast<long>(family.members.size());
  }
  return family;
}

// Family nodes plus partitions of one DML call, folded into the stats maximum
// when the call returns.
class CallNodes {
 public:
  CallNodes(SolveStats* stats, long family_nodes) : stats_(stats), nodes_(family_nodes) {}
  CallNodes(const CallNodes&) = delete;
  CallNodes& operator=(const CallNodes&) = delete;
  ~CallNodes() {
    if (stats_) stats_->dml_max_nodes = std::max(stats_->dml_max_nodes, nodes_);
  }
  void partition() {
    ++nodes_;
    if (stats_) ++stats_->partitions;
  }

 private:
  SolveStats* stats_;
  long nodes_;
};

LinSystem with_weight(const LinSystem& sys, EqId id, Weight w) {
  LinSystem out = sys.empty_copy();
  for (Equation e : sys.equations()) {
    if (e.id == id) e.weight = w;
    out.add_equation(std::move(e));
  }
  return out;
}

using CompressStep = std::function<std::optional<DeletionSet>(const LinSystem&, const DeletionSet&)>;

// Adds one unit of multiplicity at a time, keeping a solution of weight <= k;
// step shrinks a solution of weight k + 1.
std::optional<DeletionSet> iterative_compression(const LinSystem& full, Weight k, SolveStats* stats,
                                                 const CompressStep& step) {
  LinSystem cur = full.empty_copy();
  DeletionSet sol;
  for (const auto& e : full.equations()) {
    const Weight target = std::min(e.weight, k + 1);
    Equation unit = e;
    unit.weight = 1;
    cur.add_equation(std::move(unit));
    for (Weight m = 1; m <= target; ++m) {
      DeletionSet x = sol;
      if (m == 1) {
        if (solve(cur.without(sol))) continue;
        x.insert(e.id);
      } else {
        cur = with_weight(cur, e.id, m);
        if (!sol.count(e.id)) continue;
      }
      if (cur.weight_of(x) <= k) {
        sol = std::move(x);
        continue;
      }
      if (stats) ++stats->compression_steps;
      auto z = step(cur, x);
      if (!z) return std::nullopt;
      sol = std::move(*z);
    }
  }
  return sol;
}

DeletionSet map_back(const DeletionSet& z, const Subdivided& sub) {
  DeletionSet out;
  for (EqId id : z) out.insert(sub.origin.at(id));
  return out;
}

}  // namespace

DmlInstance::DmlInstance(LinSystem system, DeletionSet x, Weight k)
    : system_(std::move(system)), x_(std::move(x)), k_(k) {
  if (k_ < 0) throw std::invalid_argument("negative budget");
  for (EqId id : x_)
    if (!system_.contains(id)) throw std::invalid_argument("X refers to an unknown equation");
  for (const auto& e : system_.equations()) {
    const bool in_x = x_.count(e.id) > 0;
    if (!in_x && !e.c.is_zero()) throw std::invalid_argument("S - X is not homogeneous");
    if (in_x && e.c.is_zero()) throw std::invalid_argument("X is not inclusion-minimal");
  }
  if (system_.weight_of(x_) > k_ + 1) throw std::invalid_argument("w(X) exceeds k + 1");
}

std::vector<VarId> DmlInstance::x_variables() const { return variables_of(system_, x_); }

DmlInstance prepare_dml(const LinSystem& s, const DeletionSet& x, Weight k) {
  if (!solve(s.without(x))) throw std::invalid_argument("S - X is inconsistent");
  DeletionSet minimal = x;
  for (EqId id : x) {
    DeletionSet trial = minimal;
    trial.erase(id);
    if (solve(s.without(trial))) minimal = std::move(trial);
  }
  const Assignment phi = *solve(s.without(minimal));
  LinSystem shifted = s.empty_copy();
  for (Equation e : s.equations()) {
    e.c = e.c - e.a * phi[e.u] - e.b * phi[e.v];
    shifted.add_equation(std::move(e));
  }
  return DmlInstance(std::move(shifted), std::move(minimal), k);
}

RootedGraph build_rooted_graph(const DmlInstance& dml) {
  const LinSystem& s = dml.system();
  const int n = s.num_variables();
  RootedGraph rg{BiasedGraph::labelled(n + 1, label_field(s.domain())), n, {}};
  int next_gen = 0;
  add_system_edges(rg.graph, s.without(dml.x()), rg.equation, next_gen);
  for (VarId x : dml.x_variables()) {
    rg.graph.add_edge(rg.root, x, 1, GroupLabel::generator(rg.graph.field(), next_gen++));
    rg.equation.push_back(-1);
  }
  return rg;
}

BalancedSubgraph zero_free_subgraph(const DmlInstance& dml, const RootedGraph& rg, const DeletionSet& z,
                                    const Assignment& phi) {
  const LinSystem& s = dml.system();
  const LinSystem rest = s.without(set_union(dml.x(), z));
  SpanningForest forest(rest);
  // Components away from V(X) may be taken as zero; the others keep phi.
  std::map<int, VarId> anchor;
  for (VarId x : dml.x_variables()) anchor.emplace(forest.component(x), x);
  std::vector<char> nonzero(s.num_variables(), 0);
  for (VarId x = 0; x < s.num_variables(); ++x)
    nonzero[x] = anchor.count(forest.component(x)) && !phi[x].is_zero();

  std::vector<Vertex> vertices{rg.root};
  for (VarId x = 0; x < s.num_variables(); ++x)
    if (nonzero[x]) vertices.push_back(x);
  std::vector<EdgeId> edges;
  for (EdgeId e = 0; e < rg.graph.num_edges(); ++e) {
    const auto& ed = rg.graph.edge(e);
    if (rg.equation[e] >= 0) {
      if (nonzero[ed.u] && nonzero[ed.v] && !z.count(rg.equation[e])) edges.push_back(e);
    } else {
      const VarId x = ed.u == rg.root ? ed.v : ed.u;
      if (nonzero[x] && anchor.at(forest.component(x)) == x) edges.push_back(e);
    }
  }
  std::sort(vertices.begin(), vertices.end());
  return make_subgraph(rg.graph, std::move(vertices), std::move(edges));
}

Partition component_partition(const LinSystem& s, const DeletionSet& x, const DeletionSet& f) {
  const DeletionSet xf = set_union(x, f);
  const LinSystem rest = s.without(xf);
  SpanningForest forest(rest);
  std::map<int, std::vector<Vertex>> by_comp;
  for (VarId t : variables_of(s, xf)) by_comp[forest.component(t)].push_back(t);
  Partition p;
  for (auto& [c, block] : by_comp) p.push_back(std::move(block));
  std::sort(p.begin(), p.end());
  return p;
}

std::optional<std::pair<AuxiliaryInstance, Assignment>> build_auxiliary(const LinSystem& s, const DeletionSet& x,
                                                                        const DeletionSet& f, const Partition& p) {
  const DeletionSet xf = set_union(x, f);
  ComponentIndex comps(s.without(xf));
  AuxiliaryInstance aux{s.empty_copy(), 0, p, {}};
  LinSystem& h = aux.h;
  aux.z0 = h.add_variable(fresh_name(h, "z0"));
  for (EqId id : xf) h.add_equation(s.equation(id));

  const Element one = s.element(1), zero = s.element(0);
  for (const auto& block : p) {
    for (Vertex t : block)
      if (!comps.flexible(comps.of(t))) {
        h.add_equation(t, aux.z0, one, -one, zero, 1);
        h.add_equation(t, aux.z0, one, one, zero, 1);
      }
    for (std::size_t i = 0; i < block.size(); ++i)
      for (std::size_t j = i + 1; j < block.size(); ++j) {
        const int c = comps.of(block[i]);
        if (c != comps.of(block[j]) || !comps.flexible(c)) continue;
        Oriented o = comps.forest(c).implied(block[i], block[j]);
        h.add_equation(o.from, o.to, o.a, o.b, o.c, 1);
      }
  }

  auto phi = solve(h);
  if (!phi) return std::nullopt;
  ComponentIndex hc(h);
  for (const auto& block : p)
    for (Vertex t : block) {
      TerminalClass cls = TerminalClass::Undetermined;
      if (!hc.flexible(hc.of(t))) cls = (*phi)[t].is_zero() ? TerminalClass::ZeroDetermined : TerminalClass::Determined;
      aux.terminals[t] = cls;
    }
  return std::make_pair(std::move(aux), std::move(*phi));
}

std::vector<PairCutRequest> build_pair_requests(const LinSystem& s, const DeletionSet& x, const DeletionSet& f,
                                                const AuxiliaryInstance& aux, const Assignment& phi_h) {
  ComponentIndex comps(s.without(set_union(x, f)));
  ComponentIndex hc(aux.h);
  std::map<VarId, int> block;
  for (std::size_t b = 0; b < aux.partition.size(); ++b)
    for (Vertex t : aux.partition[b]) block[t] = static_cast<int>(b);
  auto non_terminals = [&](int c) {
    std::vector<VarId> out;
    for (VarId v : comps.vars(c))
      if (!aux.terminals.count(v)) out.push_back(v);
    return out;
  };

  std::set<std::array<int, 4>> seen;
  std::vector<PairCutRequest> out;
  auto emit = [&](VarId sx, VarId u, VarId ty, VarId v) {
    const std::array<int, 4> key = std::min(std::array<int, 4>{sx, u, ty, v}, std::array<int, 4>{ty, v, sx, u});
    if (seen.insert(key).second) out.push_back({key[0], key[1], key[2], key[3]});
  };

  for (const auto& [t, cls] : aux.terminals) {
    if (cls == TerminalClass::Undetermined) continue;
    const int c = comps.of(t);
    if (!comps.flexible(c)) continue;
    for (VarId v : non_terminals(c)) {
      const Oriented o = comps.forest(c).implied(t, v);
      const Element rhs = o.c - o.a * phi_h[t];
      const bool solvable = o.b.is_zero() ? rhs.is_zero() : divides(o.b, rhs);
      if (!solvable) emit(t, v, t, v);
    }
  }

  std::map<int, std::vector<VarId>> open;
  for (const auto& [t, cls] : aux.terminals)
    if (cls == TerminalClass::Undetermined) open[hc.of(t)].push_back(t);
  for (const auto& [k_comp, ts] : open) {
    for (std::size_t i = 0; i < ts.size(); ++i)
      for (std::size_t j = i + 1; j < ts.size(); ++j) {
        const VarId tx = ts[i], ty = ts[j];
        if (block.at(tx) == block.at(ty)) continue;
        const int cx = comps.of(tx), cy = comps.of(ty);
        if (!comps.flexible(cx) || !comps.flexible(cy)) continue;
        // The terminals themselves count as path ends: a path from a
        // non-terminal through X may end at y.
        const Oriented exy = hc.forest(k_comp).implied(tx, ty);
        auto us = non_terminals(cx), vs = non_terminals(cy);
        us.push_back(tx);
        vs.push_back(ty);
        for (VarId u : us) {
          const Oriented uy = u == tx ? exy : compose(comps.forest(cx).implied(u, tx), exy);
          for (VarId v : vs) {
            if (u == v || (u == tx && v == ty)) continue;
            const Oriented uv = v == ty ? uy : compose(uy, comps.forest(cy).implied(ty, v));
            if (!solve_single(uv.a, uv.b, uv.c)) emit(tx, u, ty, v);
          }
        }
      }
  }
  return out;
}

std::optional<DeletionSet> dml_ed(const DmlInstance& dml, SolveStats* stats) {
  require_characteristic_not_two(dml.system().domain(), "the Euclidean-domain algorithm");
  const LinSystem& s = dml.system();
  const Weight k = dml.k();
  const RootedGraph rg = build_rooted_graph(dml);
  const auto family = family_for(dml, rg, stats);
  CallNodes counter(stats, family.nodes);

  std::set<std::pair<DeletionSet, DeletionSet>> tried;
  std::optional<DeletionSet> result;
  for (const auto& member : family.members) {
    const DeletionSet fh = family_equations(member, rg);
    std::vector<EqId> deletable;
    for (EqId id : fh)
      if (s.equation(id).weight <= k) deletable.push_back(id);
    const bool found = for_each_light_subset(s, deletable, k, [&](const DeletionSet& fz, Weight wz) {
      DeletionSet f;
      std::set_difference(fh.begin(), fh.end(), fz.begin(), fz.end(), std::inserter(f, f.end()));
      if (!tried.insert({fz, f}).second) return false;
      const LinSystem s1 = s.without(fz);
      const LinSystem rest = s1.without(set_union(dml.x(), f));
      const PrimalGraph pg = primal_graph(rest);
      for (const Partition& p : enumerate_refinements(component_partition(s1, dml.x(), f))) {
        counter.partition();
        auto aux = build_auxiliary(s1, dml.x(), f, p);
        if (!aux) continue;
        CutInstance inst{pg.graph, p, build_pair_requests(s1, dml.x(), f, aux->first, aux->second), k - wz};
        auto cut = pair_partition_cut_direct(inst);
        if (!cut) continue;
        const DeletionSet y = to_equations(*cut, pg.equation);
        if (!solve(s1.without(y))) continue;
        result = set_union(y, fz);
        return true;
      }
      return false;
    });
    if (found) break;
  }
  return result;
}

std::optional<DeletionSet> dml_field(const DmlInstance& dml, SolveStats* stats) {
  const LinSystem& s = dml.system();
  if (!s.domain().is_field()) throw UnsupportedDomain("the field algorithm needs a field");
  require_characteristic_not_two(s.domain(), "the field algorithm");
  const RootedGraph rg = build_rooted_graph(dml);
  const auto family = family_for(dml, rg, stats);
  CallNodes counter(stats, family.nodes);

  std::set<DeletionSet> tried;
  for (const auto& member : family.members) {
    const DeletionSet fh = family_equations(member, rg);
    if (!tried.insert(fh).second) continue;
    const PrimalGraph pg = primal_graph(s.without(set_union(dml.x(), fh)));
    for (const Partition& p : enumerate_refinements(component_partition(s, dml.x(), fh))) {
      counter.partition();
      auto cut = partition_cut(CutInstance{pg.graph, p, {}, dml.k()});
      if (!cut) continue;
      DeletionSet y = to_equations(*cut, pg.equation);
      if (solve(s.without(y))) return y;
    }
  }
  return std::nullopt;
}

std::optional<AlphaRestriction> restrict_to_alpha(const DmlInstance& dml, const std::map<VarId, Element>& alpha) {
  const LinSystem& s = dml.system();
  std::map<VarId, Element> val = alpha;
  for (bool changed = true; changed;) {
    changed = false;
    for (EqId id : dml.x()) {
      const Equation& e = s.equation(id);
      const bool ku = val.count(e.u) > 0, kv = val.count(e.v) > 0;
      if (ku && kv) {
        if (!(e.a * val.at(e.u) + e.b * val.at(e.v) == e.c)) return std::nullopt;
      } else if (ku && !e.b.is_zero()) {
        val.emplace(e.v, (e.c - e.a * val.at(e.u)) * inverse(e.b));
        changed = true;
      } else if (kv && !e.a.is_zero()) {
        val.emplace(e.u, (e.c - e.b * val.at(e.v)) * inverse(e.a));
        changed = true;
      }
    }
  }
  const std::vector<VarId> xv = dml.x_variables();
  for (VarId x : xv)
    if (!val.count(x)) throw std::invalid_argument("alpha does not determine the variables of X");

  AlphaRestriction out{s.without(dml.x()), 0, 0};
  LinSystem& sa = out.system;
  const Weight big = dml.k() + 1;
  const Element one = s.element(1), zero = s.element(0);
  out.s = sa.add_variable(fresh_name(sa, "s"));
  out.t = sa.add_variable(fresh_name(sa, "t"));
  for (VarId x : xv) {
    if (val.at(x).is_zero())
      sa.add_equation(x, out.t, one, -one, zero, big);
    else
      sa.add_equation(x, out.s, one, -val.at(x), zero, big);
  }
  if (s.domain().characteristic() != 2) {
    // t' = 2t, t'' = t', t = t'': a non-identity triangle that forces t = 0.
    const VarId t1 = sa.add_variable(fresh_name(sa, "t'"));
    const VarId t2 = sa.add_variable(fresh_name(sa, "t''"));
    sa.add_equation(t1, out.t, one, -s.element(2), zero, big);
    sa.add_equation(t2, t1, one, -one, zero, big);
    sa.add_equation(out.t, t2, one, -one, zero, big);
  } else {
    // An inherited gadget is only usable if its pinning equations survived.
    const auto& inherited = sa.zero_gadget();
    const bool live = inherited && std::all_of(inherited->equations.begin(), inherited->equations.end(),
                                               [&](EqId id) { return sa.contains(id); });
    VarId z0 = 0;
    if (live) {
      z0 = sa.zero_gadget()->z0;
    } else {
      ZeroGadget g{};
      g.z0 = sa.add_variable(fresh_name(sa, "z0"));
      g.z0p = sa.add_variable(fresh_name(sa, "z0'"));
      g.equations.push_back(sa.add_equation(g.z0p, g.z0, one, one, zero, big));
      g.equations.push_back(sa.add_equation(g.z0, g.z0p, one, zero, zero, big));
      z0 = g.z0;
      sa.set_zero_gadget(std::move(g));
    }
    sa.add_equation(out.t, z0, one, -one, zero, big);
  }
  return out;
}

std::optional<DeletionSet> dml_finite_field(const DmlInstance& dml, SolveStats* stats) {
  const LinSystem& s = dml.system();
  if (s.domain().kind() != DomainSpec::Kind::PrimeField)
    throw UnsupportedDomain("the finite-field algorithm needs a prime field");
  std::vector<VarId> u;
  for (EqId id : dml.x()) {
    const Equation& e = s.equation(id);
    if (degenerate(e)) throw std::invalid_argument("X holds an equation on fewer than two variables");
    if (std::find(u.begin(), u.end(), e.u) == u.end() && std::find(u.begin(), u.end(), e.v) == u.end())
      u.push_back(e.u);
  }
  const auto p = static_cast<long>(s.domain().modulus());
  long total = 1;
  for (std::size_t i = 0; i < u.size(); ++i) total *= p;
  if (stats) ++stats->dml_calls;

  long tried = 0;
  std::optional<DeletionSet> result;
  for (long code = 0; code < total && !result; ++code) {
    ++tried;
    std::map<VarId, Element> alpha;
    long rest = code;
    for (VarId x : u) {
      alpha.emplace(x, s.element(rest % p));
      rest /= p;
    }
    auto r = restrict_to_alpha(dml, alpha);
    if (!r) continue;
    BiasedGraph g = BiasedGraph::labelled(r->system.num_variables(), s.domain());
    std::vector<EqId> equation;
    int next_gen = 0;
    add_system_edges(g, r->system, equation, next_gen);
    auto cut = rbgce_solve(g, r->s, dml.k());
    if (!cut) continue;
    DeletionSet z = to_equations(*cut, equation);
    for (EqId id : z)
      if (!s.contains(id) || dml.x().count(id)) throw InvariantViolation("cleaning deleted a gadget equation");
    if (!solve(s.without(z))) throw InvariantViolation("cleaning solution leaves the system inconsistent");
    result = std::move(z);
  }
  if (stats) {
    stats->alpha_total += tried;
    stats->alpha_max_step = std::max(stats->alpha_max_step, tried);
  }
  return result;
}

Subdivided subdivide(const LinSystem& s, int times, Weight k) {
  Subdivided out{s.empty_copy(), {}};
  LinSystem& t = out.system;
  const Element one = s.element(1), zero = s.element(0);
  for (const auto& e : s.equations()) {
    Equation last = e;
    if (e.weight <= k && !degenerate(e)) {
      VarId prev = e.u;
      for (int i = 0; i < times; ++i) {
        const VarId z = t.add_variable(fresh_name(t, "z" + std::to_string(e.id) + "." + std::to_string(i)));
        out.origin[t.add_equation(prev, z, one, -one, zero, e.weight)] = e.id;
        prev = z;
      }
      last.u = prev;
    }
    t.add_equation(std::move(last));
    out.origin[e.id] = e.id;
  }
  return out;
}

std::optional<DeletionSet> compress_general(const LinSystem& s, Weight k, SolveStats* stats) {
  require_characteristic_not_two(s.domain(), "the Euclidean-domain algorithm");
  return iterative_compression(s, k, stats, [&](const LinSystem& cur, const DeletionSet& x) -> std::optional<DeletionSet> {
    const std::vector<EqId> xs(x.begin(), x.end());
    for (unsigned long mask = 0; mask < (1UL << xs.size()); ++mask) {
      DeletionSet y;
      for (std::size_t i = 0; i < xs.size(); ++i)
        if (mask >> i & 1) y.insert(xs[i]);
      const Weight wy = cur.weight_of(y);
      if (wy > k) continue;
      DeletionSet xy;
      std::set_difference(xs.begin(), xs.end(), y.begin(), y.end(), std::inserter(xy, xy.end()));
      const LinSystem sy = cur.without(y);
      const DmlInstance dml = prepare_dml(sy, xy, k - wy);
      if (sy.weight_of(dml.x()) <= k - wy) return set_union(y, dml.x());
      if (auto z = dml_ed(dml, stats)) return set_union(y, *z);
    }
    return std::nullopt;
  });
}

std::optional<DeletionSet> compress_field(const LinSystem& s, Weight k, SolveStats* stats) {
  if (!s.domain().is_field()) throw UnsupportedDomain("the field algorithm needs a field");
  require_characteristic_not_two(s.domain(), "the field algorithm");
  const Subdivided sub = subdivide(s, 2, k);
  auto z = iterative_compression(sub.system, k, stats, [&](const LinSystem& cur, const DeletionSet& x) {
    const DmlInstance dml = prepare_dml(cur, x, k);
    if (cur.weight_of(dml.x()) <= k) return std::optional<DeletionSet>(dml.x());
    return dml_field(dml, stats);
  });
  if (!z) return std::nullopt;
  return map_back(*z, sub);
}

std::optional<DeletionSet> min2lin_finite_field(const LinSystem& s, Weight k, SolveStats* stats) {
  if (s.domain().kind() != DomainSpec::Kind::PrimeField)
    throw UnsupportedDomain("the finite-field algorithm needs a prime field");
  const Subdivided sub = subdivide(s, 1, k);
  auto z = iterative_compression(sub.system, k, stats, [&](const LinSystem& cur, const DeletionSet& x) {
    const DmlInstance dml = prepare_dml(cur, x, k);
    if (cur.weight_of(dml.x()) <= k) return std::optional<DeletionSet>(dml.x());
    return dml_finite_field(dml, stats);
  });
  if (!z) return std::nullopt;
  return map_back(*z, sub);
}

std::optional<DeletionSet> min2lin_decide(const LinSystem& s, Weight k, Algorithm algo, SolveStats* stats) {
  const DomainSpec& d = s.domain();
  if (algo == Algorithm::Auto) {
    switch (d.kind()) {
      case DomainSpec::Kind::Integers: algo = Algorithm::Ed; break;
      case DomainSpec::Kind::Rationals: algo = Algorithm::Field; break;
      case DomainSpec::Kind::PrimeField: algo = Algorithm::Finite; break;
    }
  }
  if (k < 0) return std::nullopt;
  const NormalizeResult norm = normalize(s, k);
  const Weight rest = k - norm.removed_weight;
  if (rest < 0) return std::nullopt;

  std::optional<DeletionSet> z;
  switch (algo) {
    case Algorithm::Ed: z = compress_general(norm.system, rest, stats); break;
    case Algorithm::Field: z = compress_field(norm.system, rest, stats); break;
    case Algorithm::Finite:
    case Algorithm::Auto: z = min2lin_finite_field(norm.system, rest, stats); break;
  }
  if (!z) return std::nullopt;
  DeletionSet out = *z;
  out.insert(norm.removed.begin(), norm.removed.end());
  for (EqId id : out)
    if (!s.contains(id)) throw InvariantViolation("solution names an equation outside the input");
  if (s.weight_of(out) > k) throw InvariantViolation("solution exceeds the budget");
  if (!solve(s.without(out))) throw InvariantViolation("solution leaves the system inconsistent");
  return out;
}

std::optional<DeletionSet> min2lin(const LinSystem& s, Weight k, Algorithm algo, SolveStats* stats) {
  auto best = min2lin_decide(s, k, algo, stats);
  while (best && s.weight_of(*best) > 0) {
    auto smaller = min2lin_decide(s, s.weight_of(*best) - 1, algo, stats);
    if (!smaller) break;
    best = std::move(smaller);
  }
  return best;
}

}  // namespace min2lin

#include "min2lin/system.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "min2lin/errors.hpp"

namespace min2lin {

Oriented orient(const Equation& e, VarId from) {
  if (from == e.u) return {e.u, e.v, e.a, e.b, e.c};
  if (from == e.v) return {e.v, e.u, e.b, e.a, e.c};
  throw InvalidPath("variable is not an endpoint of equation " + std::to_string(e.id));
}

bool satisfies(const Equation& e, const Assignment& phi) { return e.a * phi[e.u] + e.b * phi[e.v] == e.c; }

namespace {

void normalize_coefficients(Element& a, Element& b, Element& c) {
  Element g = gcd(gcd(a, b), c);
  if (!g.is_zero() && !is_unit(g)) {
    a = exact_div(a, g);
    b = exact_div(b, g);
    c = exact_div(c, g);
  }
  if (a.domain().is_field()) {
    const Element& lead = a.is_zero() ? b : a;
    if (!lead.is_zero() && !lead.is_one()) {
      Element inv = inverse(lead);
      a *= inv;
      b *= inv;
      c *= inv;
    }
  } else if (a.sign() < 0 || (a.is_zero() && b.sign() < 0)) {
    a = -a;
    b = -b;
    c = -c;
  }
}

std::string fresh_name(const LinSystem& sys, const std::string& base) {
  if (!sys.find_variable(base)) return base;
  for (int i = 1;; ++i) {
    std::string n = base + "_" + std::to_string(i);
    if (!sys.find_variable(n)) return n;
  }
}

}  // namespace

Equation normalized(Equation e) {
  normalize_coefficients(e.a, e.b, e.c);
  return e;
}

Oriented normalized(Oriented e) {
  normalize_coefficients(e.a, e.b, e.c);
  return e;
}

VarId LinSystem::add_variable(std::string name) {
  if (find_variable(name)) throw std::invalid_argument("duplicate variable '" + name + "'");
  names_.push_back(std::move(name));
  return static_cast<VarId>(names_.size() - 1);
}

VarId LinSystem::variable(std::string_view name) {
  if (auto v = find_variable(name)) return *v;
  return add_variable(std::string(name));
}

std::optional<VarId> LinSystem::find_variable(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<VarId>(i);
  return std::nullopt;
}

EqId LinSystem::add_equation(VarId u, VarId v, Element a, Element b, Element c, Weight w) {
  Equation e{u, v, std::move(a), std::move(b), std::move(c), w, next_id_};
  add_equation(std::move(e));
  return next_id_ - 1;
}

void LinSystem::add_equation(Equation e) {
  if (e.u < 0 || e.v < 0 || e.u >= num_variables() || e.v >= num_variables())
    throw std::invalid_argument("equation refers to an unknown variable");
  if (e.weight < 1) throw std::invalid_argument("equation weights must be positive");
  if (!(e.a.domain() == domain_) || !(e.b.domain() == domain_) || !(e.c.domain() == domain_))
    throw std::invalid_argument("equation coefficients from another domain");
  if (contains(e.id)) throw std::invalid_argument("duplicate equation id " + std::to_string(e.id));
  if (e.id < 0) throw std::invalid_argument("negative equation id");
  if (static_cast<std::size_t>(e.id) >= index_of_.size()) index_of_.resize(e.id + 1, -1);
  index_of_[e.id] = static_cast<int>(eqs_.size());
  next_id_ = std::max(next_id_, e.id + 1);
  eqs_.push_back(std::move(e));
}

bool LinSystem::contains(EqId id) const {
  return id >= 0 && static_cast<std::size_t>(id) < index_of_.size() && index_of_[id] >= 0;
}

const Equation& LinSystem::equation(EqId id) const {
  if (!contains(id)) throw std::out_of_range("no equation with id " + std::to_string(id));
  return eqs_[index_of_[id]];
}

LinSystem LinSystem::empty_copy() const {
  LinSystem out(domain_);
  out.names_ = names_;
  out.next_id_ = next_id_;
  out.gadget_ = gadget_;
  return out;
}

LinSystem LinSystem::without(const std::set<EqId>& ids) const {
  return filtered([&](const Equation& e) { return !ids.count(e.id); });
}

LinSystem LinSystem::only(const std::set<EqId>& ids) const {
  return filtered([&](const Equation& e) { return ids.count(e.id) > 0; });
}

Weight LinSystem::weight_of(const std::set<EqId>& ids) const {
  Weight w = 0;
  for (EqId id : ids) w += equation(id).weight;
  return w;
}

bool LinSystem::satisfied_by(const Assignment& phi) const {
  if (phi.size() != names_.size()) return false;
  return std::all_of(eqs_.begin(), eqs_.end(), [&](const Equation& e) { return satisfies(e, phi); });
}

std::vector<std::vector<std::pair<int, VarId>>> LinSystem::adjacency() const {
  std::vector<std::vector<std::pair<int, VarId>>> adj(names_.size());
  for (std::size_t i = 0; i < eqs_.size(); ++i) {
    const auto& e = eqs_[i];
    adj[e.u].emplace_back(static_cast<int>(i), e.v);
    if (e.u != e.v) adj[e.v].emplace_back(static_cast<int>(i), e.u);
  }
  return adj;
}

NormalizeResult normalize(const LinSystem& sys, Weight k) {
  NormalizeResult res{sys.empty_copy(), 0, {}};
  LinSystem& out = res.system;
  const DomainSpec d = sys.domain();
  std::set<EqId> gadget_ids;
  if (sys.zero_gadget()) gadget_ids.insert(sys.zero_gadget()->equations.begin(), sys.zero_gadget()->equations.end());

  std::vector<Equation> pending_unary;  // (x, value) encoded as Equation with v unused
  auto remove = [&](const Equation& e) {
    res.removed_weight += e.weight;
    res.removed.push_back(e.id);
  };
  auto unary = [&](const Equation& e, VarId x, const Element& a) {
    if (a.is_zero()) {
      if (!e.c.is_zero()) remove(e);
      return;
    }
    if (!divides(a, e.c)) {
      remove(e);
      return;
    }
    Equation p = e;
    p.u = x;
    p.a = d.is_field() ? e.c * inverse(a) : exact_div(e.c, a);  // value carried in a
    pending_unary.push_back(std::move(p));
  };

  for (const auto& e : sys.equations()) {
    if (gadget_ids.count(e.id)) {
      out.add_equation(e);
      continue;
    }
    if (e.u == e.v) {
      unary(e, e.u, e.a + e.b);
    } else if (e.a.is_zero() && e.b.is_zero()) {
      if (!e.c.is_zero()) remove(e);
    } else if (e.a.is_zero()) {
      unary(e, e.v, e.b);
    } else if (e.b.is_zero()) {
      unary(e, e.u, e.a);
    } else if (!divides(gcd(e.a, e.b), e.c)) {
      remove(e);
    } else {
      out.add_equation(normalized(e));
    }
  }

  if (!pending_unary.empty()) {
    if (!out.zero_gadget()) {
      ZeroGadget g{};
      g.z0 = out.add_variable(fresh_name(out, "z0"));
      g.z0p = out.add_variable(fresh_name(out, "z0'"));
      const Element one(d, 1), zero(d);
      g.equations.push_back(out.add_equation(g.z0p, g.z0, one, one, zero, k + 1));
      if (d.characteristic() == 2) {
        // z0' + z0 and z0' - z0 coincide in characteristic 2; pin z0 directly.
        g.equations.push_back(out.add_equation(g.z0, g.z0p, one, zero, zero, k + 1));
      } else {
        g.equations.push_back(out.add_equation(g.z0p, g.z0, one, -one, zero, k + 1));
      }
      out.set_zero_gadget(g);
    }
    const VarId z0 = out.zero_gadget()->z0;
    for (auto& p : pending_unary) {
      Element value = p.a;
      out.add_equation(Equation{p.u, z0, Element(d, 1), Element(d, -1), value, p.weight, p.id});
    }
  }
  return res;
}

Assignment Substitution::pull_back(const Assignment& image) const {
  Assignment out;
  out.reserve(image.size());
  for (std::size_t i = 0; i < image.size(); ++i) out.push_back(scale[i] * image[i] + shift[i]);
  return out;
}

Oriented compose(const Oriented& first, const Oriented& second) {
  if (first.to != second.from) throw InvalidPath("equations do not chain");
  return {first.from, second.to, second.a * first.a, -(second.b * first.b), second.a * first.c - first.b * second.c};
}

Equation compose_path(const LinSystem& sys, const std::vector<EqId>& path) {
  if (path.empty()) throw InvalidPath("empty path");
  const Equation& e0 = sys.equation(path[0]);
  if (path.size() == 1) return e0;
  if (e0.u == e0.v) throw InvalidPath("self-loop on path");
  const Equation& e1 = sys.equation(path[1]);
  VarId start;
  if (e1.touches(e0.v) && !e1.touches(e0.u))
    start = e0.u;
  else if (e1.touches(e0.u) && !e1.touches(e0.v))
    start = e0.v;
  else
    throw InvalidPath("edges do not form a simple path");
  Oriented cur = orient(e0, start);
  std::set<VarId> seen{cur.from, cur.to};
  for (std::size_t i = 1; i < path.size(); ++i) {
    const Equation& e = sys.equation(path[i]);
    if (!e.touches(cur.to) || e.u == e.v) throw InvalidPath("edges do not chain");
    Oriented next = orient(e, cur.to);
    if (!seen.insert(next.to).second) throw InvalidPath("path revisits a variable");
    cur = normalized(compose(cur, next));
  }
  return Equation{cur.from, cur.to, cur.a, cur.b, cur.c, 1, path[0]};
}

std::pair<LinSystem, Substitution> homogenize(const LinSystem& sys, const Assignment& phi) {
  LinSystem out = sys.empty_copy();
  const Element zero(sys.domain());
  for (const auto& e : sys.equations()) {
    if (!satisfies(e, phi)) throw NotSatisfying("assignment violates equation " + std::to_string(e.id));
    Equation h = e;
    h.c = zero;
    out.add_equation(std::move(h));
  }
  Substitution sub{std::vector<Element>(sys.num_variables(), Element(sys.domain(), 1)), phi};
  return {std::move(out), std::move(sub)};
}

Comparison compare_equations(const Oriented& e1, const Oriented& e2) {
  if (e1.from != e2.from || e1.to != e2.to) throw std::invalid_argument("equations over different variable pairs");
  bool mirrored = e1.a.is_zero() && e2.a.is_zero();
  const Element& a1 = mirrored ? e1.b : e1.a;
  const Element& b1 = mirrored ? e1.a : e1.b;
  const Element& a2 = mirrored ? e2.b : e2.a;
  const Element& b2 = mirrored ? e2.a : e2.b;
  Element A = b1 * a2 - a1 * b2;
  Element B = e1.c * a2 - a1 * e2.c;
  if (A.is_zero()) {
    if (!B.is_zero()) return {Comparison::Kind::Inconsistent, true, std::nullopt};
    return {Comparison::Kind::Equivalent, true, std::nullopt};
  }
  if (!divides(A, B)) return {Comparison::Kind::Inconsistent, true, std::nullopt};
  return {Comparison::Kind::Forced, !mirrored, exact_div(B, A)};
}

SpanningForest::SpanningForest(const LinSystem& sys)
    : sys_(&sys),
      comp_(sys.num_variables(), -1),
      parent_eq_(sys.num_variables(), -1),
      parent_(sys.num_variables(), -1),
      depth_(sys.num_variables(), 0),
      tree_(sys.size(), false) {
  const auto adj = sys.adjacency();
  for (VarId r = 0; r < sys.num_variables(); ++r) {
    if (comp_[r] >= 0) continue;
    roots_.push_back(r);
    comp_[r] = ncomp_;
    std::deque<VarId> queue{r};
    while (!queue.empty()) {
      VarId x = queue.front();
      queue.pop_front();
      order_.push_back(x);
      for (auto [idx, y] : adj[x]) {
        if (comp_[y] >= 0) continue;
        comp_[y] = ncomp_;
        parent_eq_[y] = idx;
        parent_[y] = x;
        depth_[y] = depth_[x] + 1;
        tree_[idx] = true;
        queue.push_back(y);
      }
    }
    ++ncomp_;
  }
}

std::vector<int> SpanningForest::path(VarId x, VarId y) const {
  if (comp_[x] != comp_[y]) throw NotConnected("variables lie in different components");
  std::vector<int> front, back;
  while (x != y) {
    if (depth_[x] >= depth_[y]) {
      front.push_back(parent_eq_[x]);
      x = parent_[x];
    } else {
      back.push_back(parent_eq_[y]);
      y = parent_[y];
    }
  }
  front.insert(front.end(), back.rbegin(), back.rend());
  return front;
}

Oriented SpanningForest::implied(VarId x, VarId y) const {
  if (x == y) throw InvalidPath("implied equation needs distinct endpoints");
  const auto p = path(x, y);
  const auto& eqs = sys_->equations();
  Oriented cur = orient(eqs[p[0]], x);
  for (std::size_t i = 1; i < p.size(); ++i) cur = normalized(compose(cur, orient(eqs[p[i]], cur.to)));
  return normalized(cur);
}

bool is_flexible(const LinSystem& sys) {
  SpanningForest forest(sys);
  const auto& eqs = sys.equations();
  for (std::size_t i = 0; i < eqs.size(); ++i) {
    if (forest.is_tree_edge(static_cast<int>(i))) continue;
    const auto& e = eqs[i];
    if (e.u == e.v) return false;
    auto cmp = compare_equations(orient(e, e.u), forest.implied(e.u, e.v));
    if (cmp.kind != Comparison::Kind::Equivalent) return false;
  }
  return true;
}

namespace {

void require_connected_flexible(const LinSystem& sys, const SpanningForest& forest, VarId x, VarId y) {
  if (forest.component(x) != forest.component(y)) throw NotConnected("variables lie in different components");
  if (!is_flexible(sys)) throw NotFlexible("system is not flexible");
}

bool nonzero_coefficients(const Equation& e) { return e.u != e.v && !e.a.is_zero() && !e.b.is_zero(); }

// Assigns the whole component of `start` from one known value. Every
// equation handled here has nonzero coefficients.
bool propagate(const LinSystem& sys, const std::vector<std::vector<std::pair<int, VarId>>>& adj, VarId start,
               const Element& value, Assignment& phi, std::vector<bool>& assigned) {
  const auto& eqs = sys.equations();
  phi[start] = value;
  assigned[start] = true;
  std::deque<VarId> queue{start};
  while (!queue.empty()) {
    VarId p = queue.front();
    queue.pop_front();
    for (auto [idx, q] : adj[p]) {
      Oriented o = orient(eqs[idx], p);
      Element rhs = o.c - o.a * phi[p];
      if (!divides(o.b, rhs)) return false;
      Element val = exact_div(rhs, o.b);
      if (assigned[q]) {
        if (!(phi[q] == val)) return false;
        continue;
      }
      phi[q] = std::move(val);
      assigned[q] = true;
      queue.push_back(q);
    }
  }
  return true;
}

// Builds the tree solution of one component leaf by leaf. After each step the
// solutions of the placed subtree are exactly phi + D*h, where h is the
// homogeneous generator (x -> B, y_i -> a_i (B / b_i) for the star at x).
bool solve_tree_component(const LinSystem& sys, const SpanningForest& forest, const std::vector<VarId>& vars, long r,
                          Assignment& phi) {
  const DomainSpec d = sys.domain();
  const auto& eqs = sys.equations();
  std::vector<Element> h(sys.num_variables(), Element(d));
  const VarId root = vars.front();
  phi[root] = Element(d);
  h[root] = Element(d, 1);
  for (std::size_t i = 1; i < vars.size(); ++i) {
    const VarId z = vars[i];
    const Equation& e = eqs[forest.parent_edge(z)];
    const VarId x = e.other(z);
    Oriented o = orient(e, x);
    Element ah = o.a * h[x];
    auto sol = solve_single(ah, o.b, o.c - o.a * phi[x]);
    if (!sol) return false;
    Element mult = exact_div(o.b, sol->g);
    for (std::size_t j = 0; j < i; ++j) {
      const VarId y = vars[j];
      if (!sol->x0.is_zero()) phi[y] += sol->x0 * h[y];
      h[y] *= mult;
    }
    phi[z] = sol->y0;
    h[z] = -exact_div(ah, sol->g);
  }
  Element unit = d.is_field() ? inverse(h[root]) : Element(d, h[root].sign());
  Element scale = unit * Element(d, r);
  for (VarId y : vars) phi[y] += scale * h[y];
  return true;
}

std::vector<std::vector<VarId>> components(const SpanningForest& forest) {
  std::vector<std::vector<VarId>> comps(forest.num_components());
  for (VarId x : forest.order()) comps[forest.component(x)].push_back(x);
  return comps;
}

}  // namespace

LinSystem star(const LinSystem& sys, VarId x) {
  SpanningForest forest(sys);
  for (VarId y = 0; y < sys.num_variables(); ++y)
    if (forest.component(y) != forest.component(x)) throw NotConnected("system is not connected");
  if (!is_flexible(sys)) throw NotFlexible("system is not flexible");
  LinSystem fresh(sys.domain());
  for (const auto& n : sys.names()) fresh.add_variable(n);
  for (VarId y = 0; y < sys.num_variables(); ++y) {
    if (y == x) continue;
    Oriented o = forest.implied(x, y);
    fresh.add_equation(o.from, o.to, o.a, o.b, o.c, 1);
  }
  return fresh;
}

Equation implied_equation(const LinSystem& sys, VarId x, VarId y) {
  SpanningForest forest(sys);
  require_connected_flexible(sys, forest, x, y);
  Oriented o = forest.implied(x, y);
  return Equation{o.from, o.to, o.a, o.b, o.c, 1, 0};
}

std::optional<Assignment> solve_flexible(const LinSystem& sys, long r) {
  for (const auto& e : sys.equations())
    if (!nonzero_coefficients(e)) throw std::invalid_argument("flexible solve needs nonzero coefficients");
  if (!is_flexible(sys)) throw NotFlexible("system is not flexible");
  SpanningForest forest(sys);
  Assignment phi = sys.zero_assignment();
  for (const auto& vars : components(forest))
    if (!solve_tree_component(sys, forest, vars, r, phi)) return std::nullopt;
  if (!sys.satisfied_by(phi)) throw InvariantViolation("flexible solution fails verification");
  return phi;
}

std::optional<Assignment> solve(const LinSystem& sys) {
  const int n = sys.num_variables();
  std::vector<std::optional<Element>> pinned(n);
  auto pin = [&](VarId x, const Element& a, const Element& c) {
    if (a.is_zero()) return c.is_zero();
    if (!divides(a, c)) return false;
    Element val = exact_div(c, a);
    if (pinned[x] && !(*pinned[x] == val)) return false;
    pinned[x] = std::move(val);
    return true;
  };
  for (const auto& e : sys.equations()) {
    bool ok = true;
    if (e.u == e.v)
      ok = pin(e.u, e.a + e.b, e.c);
    else if (e.a.is_zero() && e.b.is_zero())
      ok = e.c.is_zero();
    else if (e.a.is_zero())
      ok = pin(e.v, e.b, e.c);
    else if (e.b.is_zero())
      ok = pin(e.u, e.a, e.c);
    if (!ok) return std::nullopt;
  }

  const LinSystem core = sys.filtered(nonzero_coefficients);
  const auto adj = core.adjacency();
  const auto& eqs = core.equations();
  SpanningForest forest(core);
  Assignment phi = sys.zero_assignment();
  std::vector<bool> assigned(n, false);
  std::vector<std::vector<int>> non_tree(forest.num_components());
  for (std::size_t i = 0; i < eqs.size(); ++i)
    if (!forest.is_tree_edge(static_cast<int>(i))) non_tree[forest.component(eqs[i].u)].push_back(static_cast<int>(i));

  const auto comps = components(forest);
  for (int ci = 0; ci < forest.num_components(); ++ci) {
    const auto& vars = comps[ci];
    std::optional<std::pair<VarId, Element>> forced;
    for (VarId x : vars)
      if (pinned[x] && (!forced || x < forced->first)) forced.emplace(x, *pinned[x]);
    if (!forced) {
      for (int idx : non_tree[ci]) {
        const auto& e = eqs[idx];
        auto cmp = compare_equations(orient(e, e.u), forest.implied(e.u, e.v));
        if (cmp.kind == Comparison::Kind::Inconsistent) return std::nullopt;
        if (cmp.kind == Comparison::Kind::Forced) {
          forced.emplace(cmp.forces_y ? e.v : e.u, *cmp.value);
          break;
        }
      }
    }
    if (forced) {
      if (!propagate(core, adj, forced->first, forced->second, phi, assigned)) return std::nullopt;
      continue;
    }
    if (!solve_tree_component(core, forest, vars, 1, phi)) return std::nullopt;
    for (int idx : non_tree[ci])
      if (!satisfies(eqs[idx], phi)) throw InvariantViolation("flexible component solution fails a non-tree equation");
  }
  if (!sys.satisfied_by(phi)) return std::nullopt;
  return phi;
}

std::pair<LinSystem, Substitution> equalize(const LinSystem& sys) {
  const DomainSpec d = sys.domain();
  if (!d.is_field()) throw NotAField("equalization needs a field");
  for (const auto& e : sys.equations())
    if (!nonzero_coefficients(e)) throw NotFlexible("equation with a zero coefficient pins a variable");
  if (!is_flexible(sys)) throw NotFlexible("system is not flexible");
  auto phi = solve(sys);
  if (!phi) throw NotFlexible("flexible system over a field must be consistent");
  SpanningForest forest(sys);
  const auto& eqs = sys.equations();
  std::vector<Element> psi(sys.num_variables(), Element(d, 1));
  for (VarId z : forest.order()) {
    int pe = forest.parent_edge(z);
    if (pe < 0) continue;
    Oriented o = orient(eqs[pe], eqs[pe].other(z));
    psi[z] = -(o.a * psi[o.from]) * inverse(o.b);
  }
  LinSystem out = sys.empty_copy();
  for (const auto& e : eqs) {
    Equation q = e;
    q.a = Element(d, 1);
    q.b = Element(d, -1);
    q.c = Element(d);
    out.add_equation(std::move(q));
  }
  return {std::move(out), Substitution{std::move(psi), std::move(*phi)}};
}

CycleClass classify_cycle(const LinSystem& sys, const std::vector<EqId>& cycle) {
  if (cycle.size() < 2) throw InvalidCycle("a cycle needs at least two equations");
  std::vector<const Equation*> es;
  std::set<EqId> ids;
  for (EqId id : cycle) {
    if (!sys.contains(id)) throw InvalidCycle("unknown equation id " + std::to_string(id));
    if (!ids.insert(id).second) throw InvalidCycle("equation repeated on cycle");
    es.push_back(&sys.equation(id));
    if (es.back()->u == es.back()->v) throw InvalidCycle("self-loop");
  }
  VarId start;
  if (es.size() == 2) {
    start = es[0]->u;
    if (!(es[1]->touches(es[0]->u) && es[1]->touches(es[0]->v))) throw InvalidCycle("edges do not close a cycle");
  } else if (es[1]->touches(es[0]->v) && !es[1]->touches(es[0]->u)) {
    start = es[0]->u;
  } else if (es[1]->touches(es[0]->u) && !es[1]->touches(es[0]->v)) {
    start = es[0]->v;
  } else {
    throw InvalidCycle("edges do not chain");
  }
  VarId cur = start;
  std::set<VarId> seen{start};
  for (std::size_t i = 0; i + 1 < es.size(); ++i) {
    if (!es[i]->touches(cur)) throw InvalidCycle("edges do not chain");
    cur = es[i]->other(cur);
    if (!seen.insert(cur).second) throw InvalidCycle("cycle is not simple");
  }
  const Equation& closing = *es.back();
  if (!(closing.touches(cur) && closing.other(cur) == start)) throw InvalidCycle("last edge does not close the cycle");

  std::vector<EqId> path(cycle.begin(), cycle.end() - 1);
  Equation ep = compose_path(sys, path);
  Oriented op = orient(ep, start);
  auto sol = solve(sys.only(ids));
  if (!sol) return CycleClass::Inconsistent;
  auto cmp = compare_equations(orient(closing, start), op);
  switch (cmp.kind) {
    case Comparison::Kind::Equivalent: return CycleClass::Identity;
    case Comparison::Kind::Forced: return CycleClass::NonIdentity;
    case Comparison::Kind::Inconsistent: break;
  }
  return CycleClass::Inconsistent;
}

}  // namespace min2lin

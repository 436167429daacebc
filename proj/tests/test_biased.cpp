#include <doctest.h>

#include <iterator>
#include <random>
#include <set>

#include "graph_gen.hpp"
#include "min2lin/biased.hpp"
#include "min2lin/errors.hpp"

using namespace min2lin;
using namespace oracle_test;

namespace {

const DomainSpec QQ = DomainSpec::rationals();
const DomainSpec F5 = DomainSpec::prime_field(5);

GroupLabel q(long v) { return GroupLabel::ratio(Element(QQ, v)); }
GroupLabel f5(long v) { return GroupLabel::ratio(Element(F5, v)); }

// Odd cycles are the unbalanced ones.
BiasedGraph even_cycle_graph(int n) {
  return BiasedGraph::with_oracle(n, [](const BiasedGraph&, const std::vector<EdgeId>& c) { return c.size() % 2 == 0; });
}

bool edges_connected(const BiasedGraph& g, const std::vector<EdgeId>& es) {
  std::vector<char> mask(g.num_edges(), 0);
  for (EdgeId e : es) mask[e] = 1;
  auto seen = reach(g, g.edge(es[0]).u, mask);
  for (EdgeId e : es)
    if (!seen[g.edge(e).u] || !seen[g.edge(e).v]) return false;
  return true;
}

std::vector<char> all_on(const BiasedGraph& g) { return std::vector<char>(g.num_edges(), 1); }

void check_structure(const BiasedGraph& g, Vertex root, const HalfIntegralSolution& s) {
  std::vector<char> in_vr(g.num_vertices(), 0);
  for (Vertex x : s.vr) in_vr[x] = 1;
  REQUIRE(in_vr[root]);
  std::set<EdgeId> x1(s.x1.begin(), s.x1.end()), xh(s.xhalf.begin(), s.xhalf.end());
  Weight twice = 0;
  EdgeMask kept(g.num_edges(), 0);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const bool a = in_vr[g.edge(e).u], b = in_vr[g.edge(e).v];
    CHECK((a != b) == (xh.count(e) == 1));       // Xhalf is exactly the boundary
    if (x1.count(e)) CHECK((a && b));            // X1 inside V_R
    twice += (x1.count(e) ? 2 : xh.count(e) ? 1 : 0) * g.edge(e).weight;
    kept[e] = !x1.count(e) && !xh.count(e);
  }
  CHECK(twice == s.twice_value);
  auto comp = reach(g, root, kept);
  for (Vertex x = 0; x < g.num_vertices(); ++x) CHECK(static_cast<bool>(comp[x]) == static_cast<bool>(in_vr[x]));
  CHECK_FALSE(find_unbalanced_cycle(g, root, kept));
}

}  // namespace

TEST_CASE("group labels form an abelian group") {
  GroupLabel a = f5(2), b = f5(3), g0 = GroupLabel::generator(F5, 0), g1 = GroupLabel::generator(F5, 1);
  CHECK((a * b) == f5(1));
  CHECK((a * a.inverse()).is_identity());
  CHECK((g0 * g1) == (g1 * g0));
  CHECK_FALSE((g0 * g1.inverse()).is_identity());
  CHECK((g0 * a * g0.inverse() * a.inverse()).is_identity());
  CHECK_THROWS_AS(GroupLabel::ratio(Element(F5, 0)), std::invalid_argument);
  CHECK_THROWS_AS(GroupLabel::identity(DomainSpec::integers()), NotAField);
}

TEST_CASE("cycle validation and balance") {
  BiasedGraph g = BiasedGraph::labelled(4, F5);
  EdgeId e0 = g.add_edge(0, 1, 1, f5(2));
  EdgeId e1 = g.add_edge(1, 2, 1, f5(1));
  EdgeId e2 = g.add_edge(2, 0, 1, f5(3));
  EdgeId e3 = g.add_edge(2, 3, 1, f5(1));
  EdgeId loop = g.add_edge(3, 3, 1, f5(1));
  CHECK(g.is_balanced({e0, e1, e2}));       // 2 * 1 * 3 = 6 = 1
  CHECK(g.is_balanced({e2, e0, e1}));       // any order
  CHECK(g.is_balanced({loop}));
  CHECK_THROWS_AS(g.is_balanced({e0, e1}), InvalidCycle);
  CHECK_THROWS_AS(g.is_balanced({e0, e1, e2, e3}), InvalidCycle);
  CHECK_THROWS_AS(g.is_balanced({e0, e0}), InvalidCycle);
  CHECK(cycle_walk(g, {e0, e1, e2}) == std::vector<Vertex>{0, 1, 2});
}

TEST_CASE("find_unbalanced_cycle examples") {
  SUBCASE("odd triangle under the even-cycle class") {
    BiasedGraph g = even_cycle_graph(3);
    g.add_edge(0, 1, 1);
    g.add_edge(1, 2, 1);
    g.add_edge(2, 0, 1);
    auto c = find_unbalanced_cycle(g, 0);
    REQUIRE(c);
    CHECK(std::set<EdgeId>(c->begin(), c->end()) == std::set<EdgeId>{0, 1, 2});
  }
  SUBCASE("balanced component") {
    BiasedGraph g = even_cycle_graph(4);
    for (int i = 0; i < 4; ++i) g.add_edge(i, (i + 1) % 4, 1);
    CHECK_FALSE(find_unbalanced_cycle(g, 2));
  }
  SUBCASE("F5 square with label product 2") {
    BiasedGraph g = BiasedGraph::labelled(4, F5);
    g.add_edge(0, 1, 1, f5(2));
    g.add_edge(1, 2, 1, f5(3));
    g.add_edge(2, 3, 1, f5(4));
    g.add_edge(3, 0, 1, f5(3));  // 2*3*4*3 = 72 = 2 mod 5
    auto c = find_unbalanced_cycle(g, 0);
    REQUIRE(c);
    CHECK(c->size() == 4);
    CHECK_FALSE(g.is_balanced(*c));
  }
  SUBCASE("only the component of the start vertex is searched") {
    BiasedGraph g = BiasedGraph::labelled(5, QQ);
    g.add_edge(0, 1, 1, q(1));
    g.add_edge(2, 3, 1, q(-1));
    g.add_edge(3, 4, 1, q(1));
    g.add_edge(4, 2, 1, q(1));
    CHECK_FALSE(find_unbalanced_cycle(g, 0));
    CHECK(find_unbalanced_cycle(g, 3));
    EdgeMask mask{1, 0, 1, 1};
    CHECK_FALSE(find_unbalanced_cycle(g, 3, mask));
  }
  SUBCASE("free generators poison a vertex") {
    BiasedGraph g = BiasedGraph::labelled(3, QQ);
    g.add_edge(0, 1, 1, GroupLabel::generator(QQ, 0));
    g.add_edge(0, 2, 1, GroupLabel::generator(QQ, 1));
    g.add_edge(1, 2, 1, q(1));
    CHECK(find_unbalanced_cycle(g, 1));
    CHECK_FALSE(find_unbalanced_cycle(g, 1, EdgeMask{1, 0, 1}));
  }
}

TEST_CASE("find_unbalanced_cycle agrees with exhaustive cycles") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    GraphConfig cfg;
    cfg.n = 3 + trial % 5;
    cfg.m = cfg.n + trial % 4;
    cfg.kind = static_cast<LabelKind>(trial % 3);
    cfg.loops = trial % 7 == 0;
    BiasedGraph g = random_biased(cfg, rng);
    BiasedGraph og = as_oracle_graph(g);
    for (Vertex s = 0; s < g.num_vertices(); ++s) {
      const bool balanced = brute_balanced_component(g, s, all_on(g));
      auto c = find_unbalanced_cycle(g, s);
      auto oc = find_unbalanced_cycle(og, s);
      CHECK(c.has_value() == !balanced);
      CHECK(oc.has_value() == !balanced);
      if (c) {
        CHECK_FALSE(g.is_balanced(*c));
        CHECK(reach(g, s, all_on(g))[g.edge(c->front()).u]);
      }
      if (oc) CHECK_FALSE(g.is_balanced(*oc));
    }
  }
}

TEST_CASE("enumerate_cycles matches the subset enumeration") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    GraphConfig cfg;
    cfg.n = 3 + trial % 4;
    cfg.m = cfg.n + trial % 5;
    cfg.loops = true;
    BiasedGraph g = random_biased(cfg, rng);
    std::set<std::set<EdgeId>> a, b;
    for (auto& c : enumerate_cycles(g)) a.insert(std::set<EdgeId>(c.begin(), c.end()));
    for (auto& c : brute_cycles(g, {})) b.insert(std::set<EdgeId>(c.begin(), c.end()));
    CHECK(a == b);
    CHECK(enumerate_cycles(g).size() == b.size());
  }
}

TEST_CASE("theta property of labelled graphs") {
  // Two cycles sharing a nonempty path form a theta; the third cycle is their
  // symmetric difference. Never exactly two of the three are balanced.
  std::mt19937_64 rng(29);
  int thetas = 0;
  for (int trial = 0; trial < 120; ++trial) {
    GraphConfig cfg;
    cfg.n = 4 + trial % 3;
    cfg.m = cfg.n + 2 + trial % 3;
    cfg.kind = static_cast<LabelKind>(trial % 3);
    BiasedGraph g = random_biased(cfg, rng);
    auto cycles = brute_cycles(g, {});
    std::set<std::set<EdgeId>> as_sets;
    for (auto& c : cycles) as_sets.insert(std::set<EdgeId>(c.begin(), c.end()));
    for (std::size_t i = 0; i < cycles.size(); ++i)
      for (std::size_t j = i + 1; j < cycles.size(); ++j) {
        std::set<EdgeId> a(cycles[i].begin(), cycles[i].end()), b(cycles[j].begin(), cycles[j].end()), sym;
        std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(sym, sym.end()));
        if (sym.size() == a.size() + b.size() || !as_sets.count(sym)) continue;
        // the union is a theta only when the shared edges form one path
        std::vector<EdgeId> shared;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(shared));
        if (!edges_connected(g, shared)) continue;
        std::vector<EdgeId> third(sym.begin(), sym.end());
        ++thetas;
        int balanced = g.is_balanced(cycles[i]) + g.is_balanced(cycles[j]) + g.is_balanced(third);
        CHECK(balanced != 2);
      }
  }
  CHECK(thetas > 100);
}

TEST_CASE("extremal optimum examples") {
  SUBCASE("balanced connected graph") {
    BiasedGraph g = BiasedGraph::labelled(4, QQ);
    g.add_edge(0, 1, 1, q(2));
    g.add_edge(1, 2, 1, q(3));
    g.add_edge(0, 2, 1, q(6));
    g.add_edge(2, 3, 1, q(1));
    auto s = extremal_lp_optimum(g, 0);
    CHECK(s.x1.empty());
    CHECK(s.xhalf.empty());
    CHECK(s.vr == std::vector<Vertex>{0, 1, 2, 3});
    CHECK(s.twice_value == 0);
  }
  SUBCASE("unbalanced unit triangle rooted on it") {
    BiasedGraph g = BiasedGraph::labelled(3, QQ);
    g.add_edge(0, 1, 1, q(-1));
    g.add_edge(1, 2, 1, q(-1));
    g.add_edge(2, 0, 1, q(-1));
    auto s = extremal_lp_optimum(g, 0);
    CHECK(s.twice_value == 2);
    CHECK(s.x1.size() == 1);
    CHECK(s.xhalf.empty());
    CHECK(s.vr == std::vector<Vertex>{0, 1, 2});
    auto brute = brute_lp(g, 0);
    CHECK(brute.twice == 2);
    CHECK(brute.vr == s.vr);
    CHECK(brute.x1 == s.x1);
  }
  SUBCASE("bridge to a heavy unbalanced triangle") {
    BiasedGraph g = BiasedGraph::labelled(4, QQ);
    EdgeId bridge = g.add_edge(0, 1, 1, q(1));
    g.add_edge(1, 2, 3, q(-1));
    g.add_edge(2, 3, 3, q(-1));
    g.add_edge(3, 1, 3, q(-1));
    auto s = extremal_lp_optimum(g, 0);
    CHECK(s.twice_value == 1);
    CHECK(s.xhalf == std::vector<EdgeId>{bridge});
    CHECK(s.x1.empty());
    CHECK(s.vr == std::vector<Vertex>{0});
    CHECK(brute_lp(g, 0).twice == 1);
  }
}

TEST_CASE("extremal optimum matches exhaustive structures") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 250; ++trial) {
    GraphConfig cfg;
    cfg.n = 3 + trial % 5;
    cfg.m = std::min(cfg.n + 1 + trial % 5, 11);
    cfg.kind = static_cast<LabelKind>(trial % 3);
    cfg.max_weight = 1 + trial % 3;
    cfg.loops = trial % 9 == 0;
    BiasedGraph g = random_biased(cfg, rng);
    const Vertex root = static_cast<Vertex>(trial % cfg.n);
    auto s = extremal_lp_optimum(g, root);
    auto brute = brute_lp(g, root);
    CHECK(s.twice_value == brute.twice);
    CHECK(s.vr == brute.vr);
    CHECK(s.x1 == brute.x1);
    // no optimum strictly extends the returned V_R
    for (const auto& v : brute.optimal_vrs) {
      const bool superset = std::includes(v.begin(), v.end(), s.vr.begin(), s.vr.end());
      CHECK_FALSE((superset && v.size() > s.vr.size()));
    }
    check_structure(g, root, s);
    CHECK(lp_value_lower_bound_check(g, root, s));
    if (trial % 5 == 0) {
      auto os = extremal_lp_optimum(as_oracle_graph(g), root);
      CHECK(os.twice_value == s.twice_value);
      CHECK(os.vr == s.vr);
      CHECK(os.x1 == s.x1);
    }
  }
}

TEST_CASE("extremal optimum honours masks, weights and limits") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 150; ++trial) {
    GraphConfig cfg;
    cfg.n = 3 + trial % 4;
    cfg.m = cfg.n + 2;
    cfg.kind = static_cast<LabelKind>(trial % 3);
    BiasedGraph g = random_biased(cfg, rng);
    LpOptions opts;
    opts.active.assign(g.num_edges(), 1);
    opts.weights.resize(g.num_edges());
    std::uniform_int_distribution<int> coin(0, 3);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      opts.active[e] = coin(rng) != 0;
      opts.weights[e] = 1 + coin(rng) * 3;
    }
    auto s = extremal_lp_optimum(g, 0, opts);
    REQUIRE(s);
    auto brute = brute_lp(g, 0, opts.active, opts.weights);
    CHECK(s->twice_value == brute.twice);
    CHECK(s->vr == brute.vr);
    CHECK(lp_value_lower_bound_check(g, 0, *s, opts));
    opts.max_twice_value = brute.twice - 1;
    CHECK_FALSE(extremal_lp_optimum(g, 0, opts));
    opts.max_twice_value = brute.twice;
    CHECK(extremal_lp_optimum(g, 0, opts));
  }
}

TEST_CASE("LP feasibility check") {
  SUBCASE("untouched unbalanced cycle inside V_R") {
    BiasedGraph g = BiasedGraph::labelled(3, QQ);
    g.add_edge(0, 1, 1, q(-1));
    g.add_edge(1, 2, 1, q(-1));
    g.add_edge(2, 0, 1, q(-1));
    HalfIntegralSolution bad{{}, {}, {0, 1, 2}, 0};
    CHECK_FALSE(lp_value_lower_bound_check(g, 0, bad));
    HalfIntegralSolution good{{1}, {}, {0, 1, 2}, 2};
    CHECK(lp_value_lower_bound_check(g, 0, good));
    HalfIntegralSolution wrong_value{{1}, {}, {0, 1, 2}, 3};
    CHECK_FALSE(lp_value_lower_bound_check(g, 0, wrong_value));
  }
  SUBCASE("integral cut on a two-level graph at cost 4") {
    // r - a - {b1..b4} - c - {d1..d4}, with b1 b2 closing odd triangles.
    BiasedGraph g = BiasedGraph::labelled(11, QQ);
    const Vertex r = 0, a = 1, c = 6;
    g.add_edge(r, a, 1, q(1));
    std::vector<EdgeId> cut;
    for (Vertex b = 2; b <= 5; ++b) cut.push_back(g.add_edge(a, b, 1, q(1)));
    for (Vertex b = 2; b <= 5; ++b) g.add_edge(b, c, 1, q(1));
    g.add_edge(2, 3, 1, q(-1));
    for (Vertex d = 7; d <= 10; ++d) g.add_edge(c, d, 1, q(1));
    HalfIntegralSolution h1{cut, {}, {r, a}, 8};
    CHECK(lp_value_lower_bound_check(g, r, h1));
    // a half edge on the way to the triangles already pays for both balloon paths
    HalfIntegralSolution half_cut{{cut[0], cut[1], cut[2]}, {cut[3]}, {r, a}, 7};
    CHECK(lp_value_lower_bound_check(g, r, half_cut));
    HalfIntegralSolution open_cut{{cut[0], cut[1], cut[2]}, {}, {r, a}, 6};
    CHECK_FALSE(lp_value_lower_bound_check(g, r, open_cut));
  }
  SUBCASE("dropping any X1 edge breaks feasibility or structure") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 60; ++trial) {
      GraphConfig cfg;
      cfg.n = 4 + trial % 3;
      cfg.m = cfg.n + 3;
      cfg.kind = LabelKind::F5;
      BiasedGraph g = random_biased(cfg, rng);
      auto s = extremal_lp_optimum(g, 0);
      for (std::size_t i = 0; i < s.x1.size(); ++i) {
        HalfIntegralSolution t = s;
        t.twice_value -= 2 * g.edge(t.x1[i]).weight;
        t.x1.erase(t.x1.begin() + static_cast<long>(i));
        CHECK_FALSE(lp_value_lower_bound_check(g, 0, t));
      }
    }
  }
}

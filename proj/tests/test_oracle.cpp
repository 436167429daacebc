#include <doctest.h>

#include <random>

#include "min2lin/oracle.hpp"
#include "oracles.hpp"

using namespace min2lin;

namespace {

Graph random_graph(int n, int m, std::mt19937_64& rng) {
  Graph g(n);
  std::uniform_int_distribution<int> pick(0, n - 1);
  while (g.num_edges() < m) {
    int a = pick(rng), b = pick(rng);
    if (a != b) g.add_edge(a, b);
  }
  return g;
}

Graph cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

// Independent minimum: every subset of deletable equations, consistency by
// elimination.
std::optional<Weight> reference_min(const LinSystem& sys, Weight k) {
  const auto& eqs = sys.equations();
  std::optional<Weight> best;
  for (unsigned long mask = 0; mask < (1UL << eqs.size()); ++mask) {
    Weight w = 0;
    std::set<EqId> del;
    for (std::size_t i = 0; i < eqs.size(); ++i)
      if (mask >> i & 1) {
        w += eqs[i].weight;
        del.insert(eqs[i].id);
      }
    if (w > k || (best && w >= *best)) continue;
    if (oracle_test::linear_algebra_consistent(sys.without(del))) best = w;
  }
  return best;
}

}  // namespace

TEST_CASE("brute_min2lin examples") {
  const DomainSpec z = DomainSpec::integers();
  LinSystem sys(z);
  VarId x = sys.add_variable("x"), y = sys.add_variable("y"), w = sys.add_variable("z");
  EqId a = sys.add_equation(y, x, Element(z, 1), Element(z, -2), Element(z, 1), 1);

  auto none = brute_min2lin(sys, 3);
  REQUIRE(none);
  CHECK(none->weight == 0);
  CHECK(none->deleted.empty());

  EqId b = sys.add_equation(y, w, Element(z, 1), Element(z, -2), Element(z, 0), 1);
  auto one = brute_min2lin(sys, 1);
  REQUIRE(one);
  CHECK(one->weight == 1);
  REQUIRE(one->deleted.size() == 1);
  CHECK((*one->deleted.begin() == a || *one->deleted.begin() == b));
  CHECK_FALSE(brute_min2lin(sys, 0));
}

TEST_CASE("brute_min2lin matches an elimination-based reference") {
  std::mt19937_64 rng(21);
  for (DomainSpec d : {DomainSpec::integers(), DomainSpec::rationals(), DomainSpec::prime_field(3)}) {
    for (int round = 0; round < 25; ++round) {
      GeneratorConfig cfg;
      cfg.domain = d;
      cfg.n_vars = 4;
      cfg.n_eqs = 7;
      cfg.weight_max = 2;
      cfg.seed = rng();
      cfg.planted = PlantedConfig{2, round % 2 ? NoiseModel::Shift : NoiseModel::Random};
      auto inst = gen_planted(cfg);
      const Weight k = 3;
      auto got = brute_min2lin(inst.system, k);
      auto expect = reference_min(inst.system, k);
      REQUIRE(got.has_value() == expect.has_value());
      if (got) {
        CHECK(got->weight == *expect);
        CHECK(inst.system.weight_of(got->deleted) == got->weight);
        CHECK(solve(inst.system.without(got->deleted)));
      }
    }
  }
}

TEST_CASE("bipartization reduction") {
  CHECK(brute_min2lin(reduce_bipartization(cycle(6)), 0));
  auto odd = brute_min2lin(reduce_bipartization(cycle(5)), 3);
  REQUIRE(odd);
  CHECK(odd->weight == 1);

  Graph k4(4);
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) k4.add_edge(a, b);
  auto sys = brute_min2lin(reduce_bipartization(k4), 6);
  REQUIRE(sys);
  CHECK(sys->weight == *brute_bipartization(k4, 6));
  CHECK(sys->weight == 2);

  std::mt19937_64 rng(22);
  for (int round = 0; round < 30; ++round) {
    Graph g = random_graph(6, 9, rng);
    auto a = brute_min2lin(reduce_bipartization(g), 4);
    auto b = brute_bipartization(g, 4);
    REQUIRE(a.has_value() == b.has_value());
    if (a) CHECK(a->weight == *b);
  }
}

TEST_CASE("multiway cut reduction") {
  Graph star(4);
  for (int leaf = 1; leaf < 4; ++leaf) star.add_edge(0, leaf);
  auto three = brute_min2lin(reduce_multiway_cut(star, {1, 2, 3}, 3), 3);
  REQUIRE(three);
  CHECK(three->weight == 2);
  CHECK(brute_min2lin(reduce_multiway_cut(star, {1}, 3), 0));

  Graph apart(4);
  apart.add_edge(0, 1);
  apart.add_edge(2, 3);
  CHECK(brute_min2lin(reduce_multiway_cut(apart, {0, 2}, 2), 0));

  std::mt19937_64 rng(23);
  for (int round = 0; round < 30; ++round) {
    Graph g = random_graph(6, 8, rng);
    const Weight k = 3;
    std::vector<Vertex> ts{0, 2, 5};
    auto a = brute_min2lin(reduce_multiway_cut(g, ts, k), k);
    auto b = brute_multiway_cut(g, ts, k);
    REQUIRE(a.has_value() == b.has_value());
    if (a) CHECK(a->weight == *b);
  }
}

TEST_CASE("multicut reduction") {
  CHECK(odd_prime(0) == 3);
  CHECK(odd_prime(1) == 5);
  CHECK(odd_prime(3) == 11);

  Graph path(2);
  path.add_edge(0, 1);
  auto one = brute_min2lin(reduce_multicut(path, {{0, 1}}, 2), 2);
  REQUIRE(one);
  CHECK(one->weight == 1);
  CHECK(brute_min2lin(reduce_multicut(path, {}, 2), 0));

  std::mt19937_64 rng(24);
  for (int round = 0; round < 30; ++round) {
    Graph g = random_graph(1 + 3 + round % 4, 8, rng);
    const Weight k = 3;
    std::vector<std::pair<Vertex, Vertex>> req{{0, 1}};
    if (round % 2) req.emplace_back(2, 3);
    auto a = brute_min2lin(reduce_multicut(g, req, k), k);
    auto b = brute_multicut(g, req, k);
    REQUIRE(a.has_value() == b.has_value());
    if (a) CHECK(a->weight == *b);
  }
}

TEST_CASE("planted generator") {
  GeneratorConfig cfg;
  cfg.domain = DomainSpec::prime_field(5);
  cfg.n_vars = 6;
  cfg.n_eqs = 9;
  cfg.weight_max = 3;
  cfg.seed = 99;
  auto clean = gen_planted(cfg);
  CHECK(clean.deleted.empty());
  CHECK(clean.system.satisfied_by(clean.witness));
  CHECK(solve(clean.system));

  cfg.planted = PlantedConfig{2, NoiseModel::Random};
  auto a = gen_planted(cfg), b = gen_planted(cfg);
  REQUIRE(a.system.size() == b.system.size());
  for (std::size_t i = 0; i < a.system.size(); ++i) {
    const auto &ea = a.system.equations()[i], &eb = b.system.equations()[i];
    CHECK((ea.u == eb.u && ea.v == eb.v && ea.a == eb.a && ea.b == eb.b && ea.c == eb.c && ea.weight == eb.weight));
  }
  CHECK(a.deleted == b.deleted);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    for (DomainSpec d : {DomainSpec::integers(), DomainSpec::rationals(), DomainSpec::prime_field(2)}) {
      cfg.domain = d;
      cfg.seed = seed;
      cfg.planted = PlantedConfig{static_cast<Weight>(seed % 3), seed % 2 ? NoiseModel::Shift : NoiseModel::Random};
      auto inst = gen_planted(cfg);
      CHECK(inst.system.weight_of(inst.deleted) <= cfg.planted->budget);
      CHECK(inst.system.without(inst.deleted).satisfied_by(inst.witness));
      auto opt = brute_min2lin(inst.system, cfg.planted->budget);
      REQUIRE(opt);
      CHECK(opt->weight <= cfg.planted->budget);
    }
  }
}

TEST_CASE("important separators") {
  Graph series(4);
  series.add_edge(0, 1, 1);
  series.add_edge(1, 2, 2);
  series.add_edge(2, 3, 3);
  CHECK(brute_important_separators(series, 0, 3, 2) == std::vector<std::vector<EdgeId>>{{0}, {1}});
  CHECK(brute_important_separators(series, 0, 3, 3).size() == 3);

  Graph flat(4);
  flat.add_edge(0, 1);
  flat.add_edge(1, 2);
  flat.add_edge(2, 3);
  CHECK(brute_important_separators(flat, 0, 3, 3) == std::vector<std::vector<EdgeId>>{{2}});

  Graph bundle(2);
  for (int i = 0; i < 3; ++i) bundle.add_edge(0, 1);
  CHECK(brute_important_separators(bundle, 0, 1, 3) == std::vector<std::vector<EdgeId>>{{0, 1, 2}});
  CHECK(brute_important_separators(bundle, 0, 1, 2).empty());
  CHECK(brute_important_separators(flat, 0, 3, 0).empty());
}

#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <climits>
#include <filesystem>
#include <fstream>
#include <functional>
#include <initializer_list>
#include <iostream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string_view>

#include <CLI11.hpp>

#include "min2lin/biased.hpp"
#include "min2lin/errors.hpp"
#include "min2lin/ibs.hpp"
#include "min2lin/oracle.hpp"
#include "min2lin/solver.hpp"

namespace min2lin::cli {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) { throw ParseError(what); }

void expect_object(const json& j, std::string_view what, std::initializer_list<std::string_view> allowed) {
  if (!j.is_object()) fail(std::string(what) + " must be an object");
  for (const auto& [key, value] : j.items())
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      fail("unknown field '" + key + "' in " + std::string(what));
}

const json& require(const json& j, const char* key, std::string_view what) {
  auto it = j.find(key);
  if (it == j.end()) fail(std::string(what) + " lacks '" + key + "'");
  return *it;
}

long long as_int(const json& j, std::string_view what) {
  if (!j.is_number_integer()) fail(std::string(what) + " must be an integer");
  if (j.is_number_unsigned() && j.get<unsigned long long>() > static_cast<unsigned long long>(LLONG_MAX))
    fail(std::string(what) + " is out of range");
  return j.get<long long>();
}

Weight as_weight(const json& j, std::string_view what) {
  long long w = as_int(j, what);
  if (w < 1) fail(std::string(what) + " must be at least 1");
  return w;
}

Weight as_budget(const json& j) {
  long long k = as_int(j, "k");
  if (k < 0) fail("k must be non-negative");
  return k;
}

Element as_element(const DomainSpec& d, const json& j, std::string_view what) {
  if (j.is_string()) return Element::parse(d, j.get<std::string>());
  if (j.is_number_unsigned()) return Element(d, mpz_class(std::to_string(j.get<unsigned long long>())));
  if (j.is_number_integer()) return Element(d, static_cast<long>(j.get<long long>()));
  fail(std::string(what) + " must be an integer or a string");
}

DomainSpec parse_domain(const json& j) {
  expect_object(j, "domain", {"kind", "p"});
  const json& kind = require(j, "kind", "domain");
  if (!kind.is_string()) fail("domain kind must be a string");
  const std::string k = kind.get<std::string>();
  if (k != "Fp" && j.contains("p")) fail("domain " + k + " takes no modulus");
  if (k == "Z") return DomainSpec::integers();
  if (k == "Q") return DomainSpec::rationals();
  if (k != "Fp") fail("unknown domain kind '" + k + "'");
  long long p = as_int(require(j, "p", "domain"), "p");
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) fail("p = " + std::to_string(p) + " is not prime");
  return DomainSpec::prime_field(static_cast<std::uint64_t>(p));
}

Vertex as_vertex(const json& j, int n, std::string_view what) {
  long long v = as_int(j, what);
  if (v < 0 || v >= n) fail(std::string(what) + " " + std::to_string(v) + " is not a vertex");
  return static_cast<Vertex>(v);
}

std::vector<GraphEdgeSpec> parse_edges(const json& j, int n, bool labels) {
  if (!j.is_array()) fail("edges must be an array");
  std::vector<GraphEdgeSpec> out;
  for (const json& e : j) {
    if (labels) expect_object(e, "edge", {"u", "v", "w", "label"});
    else expect_object(e, "edge", {"u", "v", "w"});
    GraphEdgeSpec spec;
    spec.u = as_vertex(require(e, "u", "edge"), n, "u");
    spec.v = as_vertex(require(e, "v", "edge"), n, "v");
    if (e.contains("w")) spec.w = as_weight(e["w"], "w");
    if (e.contains("label")) spec.label = e["label"];
    out.push_back(std::move(spec));
  }
  return out;
}

int parse_vertex_count(const json& j) {
  long long n = as_int(j, "vertices");
  if (n < 0 || n > 1'000'000) fail("vertex count out of range");
  return static_cast<int>(n);
}

json read_json(const std::string& path) {
  if (path == "-") return json::parse(std::cin);
  std::ifstream in(path);
  if (!in) fail("cannot open " + path);
  return json::parse(in);
}

Json stats_json(long nodes, long family_size, long long wall_ms) {
  return Json{{"nodes", nodes}, {"family_size", family_size}, {"wall_ms", wall_ms}};
}

Json id_list(const std::set<EqId>& ids) { return Json(std::vector<EqId>(ids.begin(), ids.end())); }

Json assignment_json(const LinSystem& s, const Assignment& phi) {
  Json out = Json::object();
  for (VarId x = 0; x < s.num_variables(); ++x) out[s.name(x)] = element_json(phi[x]);
  return out;
}

// Solves S - z and checks the result; a failure here is a solver bug.
Assignment verified_assignment(const LinSystem& s, const std::set<EqId>& z) {
  LinSystem rest = s.without(z);
  auto phi = solve(rest);
  if (!phi || !rest.satisfied_by(*phi)) throw InvariantViolation("result does not verify");
  return *phi;
}

class Stopwatch {
 public:
  explicit Stopwatch(bool enabled) : enabled_(enabled), start_(std::chrono::steady_clock::now()) {}
  long long ms() const {
    if (!enabled_) return 0;
    auto d = std::chrono::steady_clock::now() - start_;
    return std::chrono::duration_cast<std::chrono::milliseconds>(d).count();
  }

 private:
  bool enabled_;
  std::chrono::steady_clock::time_point start_;
};

Algorithm parse_algorithm(const std::string& s) {
  if (s == "auto") return Algorithm::Auto;
  if (s == "ed") return Algorithm::Ed;
  if (s == "field") return Algorithm::Field;
  if (s == "finite") return Algorithm::Finite;
  fail("unknown algorithm '" + s + "'");
}

DomainSpec domain_from_flags(const std::string& kind, std::uint64_t p) {
  if (kind == "Z") return DomainSpec::integers();
  if (kind == "Q") return DomainSpec::rationals();
  if (kind == "Fp") {
    if (!is_prime(p)) fail("p = " + std::to_string(p) + " is not prime");
    return DomainSpec::prime_field(p);
  }
  fail("unknown domain '" + kind + "'");
}

NoiseModel parse_noise(const std::string& s) {
  if (s == "shift") return NoiseModel::Shift;
  if (s == "random") return NoiseModel::Random;
  fail("unknown noise model '" + s + "'");
}

BiasedGraph biased_graph(const GraphFile& gf, const std::string& oracle, std::uint64_t p) {
  if (oracle == "even") {
    const DomainSpec q = DomainSpec::rationals();
    BiasedGraph g = BiasedGraph::labelled(gf.vertices, q);
    for (const auto& e : gf.edges) {
      if (e.label) fail("the even oracle takes no edge labels");
      g.add_edge(e.u, e.v, e.w, GroupLabel::ratio(Element(q, -1)));
    }
    return g;
  }
  DomainSpec d = DomainSpec::rationals();
  if (oracle == "group:Fp") {
    if (!is_prime(p)) fail("p = " + std::to_string(p) + " is not prime");
    d = DomainSpec::prime_field(p);
  } else if (oracle.starts_with("group:F")) {
    const std::string digits = oracle.substr(7);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit) || digits.size() > 18)
      fail("bad oracle '" + oracle + "'");
    std::uint64_t q = std::stoull(digits);
    if (!is_prime(q)) fail("p = " + digits + " is not prime");
    d = DomainSpec::prime_field(q);
  } else if (oracle != "group:Q") {
    fail("unknown oracle '" + oracle + "'");
  }
  BiasedGraph g = BiasedGraph::labelled(gf.vertices, d);
  for (const auto& e : gf.edges) {
    Element r = e.label ? as_element(d, *e.label, "label") : Element(d, 1);
    if (r.is_zero()) fail("edge labels must be nonzero");
    g.add_edge(e.u, e.v, e.w, GroupLabel::ratio(r));
  }
  return g;
}

Weight total_weight(const GraphFile& gf) {
  Weight w = 0;
  for (const auto& e : gf.edges) w += e.w;
  return w;
}

// One CSV row per (instance, k) with the minimum weight found under budget k;
// wall_ms stays 0 without timing so the output is reproducible.
void bench_rows(const std::string& name, const LinSystem& s, Weight kmax, Algorithm algo, const std::string& algo_name,
                bool timing, std::ostream& out) {
  for (Weight k = 1; k <= kmax; ++k) {
    SolveStats st;
    Stopwatch clock(timing);
    auto z = min2lin::min2lin(s, k, algo, &st);
    out << name << ',' << k << ',' << algo_name << ',';
    if (z) out << s.weight_of(*z);
    else out << "none";
    out << ',' << st.nodes() << ',' << clock.ms() << '\n';
  }
}

}  // namespace

Graph GraphFile::graph() const {
  Graph g(vertices);
  for (const auto& e : edges) g.add_edge(e.u, e.v, e.w);
  return g;
}

Instance parse_instance(const json& doc) {
  expect_object(doc, "instance", {"domain", "variables", "equations", "k"});
  Instance inst{LinSystem(parse_domain(require(doc, "domain", "instance"))), 0};
  LinSystem& s = inst.system;
  const DomainSpec d = s.domain();

  const json& vars = require(doc, "variables", "instance");
  if (!vars.is_array()) fail("variables must be an array");
  for (const json& v : vars) {
    if (!v.is_string()) fail("variable names must be strings");
    const std::string name = v.get<std::string>();
    if (name.empty()) fail("empty variable name");
    if (s.find_variable(name)) fail("duplicate variable '" + name + "'");
    s.add_variable(name);
  }

  auto var_ref = [&](const json& j) -> VarId {
    if (j.is_string()) {
      auto x = s.find_variable(j.get<std::string>());
      if (!x) fail("unknown variable '" + j.get<std::string>() + "'");
      return *x;
    }
    long long i = as_int(j, "variable index");
    if (i < 0 || i >= s.num_variables()) fail("variable index " + std::to_string(i) + " out of range");
    return static_cast<VarId>(i);
  };

  const json& eqs = require(doc, "equations", "instance");
  if (!eqs.is_array()) fail("equations must be an array");
  for (const json& e : eqs) {
    expect_object(e, "equation", {"u", "v", "a", "b", "c", "w"});
    VarId u = var_ref(require(e, "u", "equation"));
    VarId v = var_ref(require(e, "v", "equation"));
    Element a = as_element(d, require(e, "a", "equation"), "a");
    Element b = as_element(d, require(e, "b", "equation"), "b");
    Element c = as_element(d, require(e, "c", "equation"), "c");
    Weight w = e.contains("w") ? as_weight(e["w"], "w") : 1;
    s.add_equation(u, v, a, b, c, w);
  }
  inst.k = as_budget(require(doc, "k", "instance"));
  return inst;
}

GraphFile parse_graph(const json& doc) {
  expect_object(doc, "graph", {"vertices", "edges", "terminals", "requests", "k"});
  GraphFile gf;
  gf.vertices = parse_vertex_count(require(doc, "vertices", "graph"));
  gf.edges = parse_edges(require(doc, "edges", "graph"), gf.vertices, true);
  if (doc.contains("terminals")) {
    if (!doc["terminals"].is_array()) fail("terminals must be an array");
    for (const json& t : doc["terminals"]) gf.terminals.push_back(as_vertex(t, gf.vertices, "terminal"));
  }
  if (doc.contains("requests")) {
    if (!doc["requests"].is_array()) fail("requests must be an array");
    for (const json& r : doc["requests"]) {
      if (!r.is_array() || r.size() != 2) fail("a request is a pair [s, t]");
      gf.requests.emplace_back(as_vertex(r[0], gf.vertices, "s"), as_vertex(r[1], gf.vertices, "t"));
    }
  }
  if (doc.contains("k")) gf.k = as_budget(doc["k"]);
  return gf;
}

CutInstance parse_cut(const json& doc) {
  expect_object(doc, "cut instance", {"vertices", "edges", "partition", "requests", "k"});
  CutInstance inst;
  const int n = parse_vertex_count(require(doc, "vertices", "cut instance"));
  inst.graph = Graph(n);
  for (const auto& e : parse_edges(require(doc, "edges", "cut instance"), n, false))
    inst.graph.add_edge(e.u, e.v, e.w);
  const json& blocks = require(doc, "partition", "cut instance");
  if (!blocks.is_array()) fail("partition must be an array of blocks");
  for (const json& b : blocks) {
    if (!b.is_array()) fail("a block must be an array");
    std::vector<Vertex> block;
    for (const json& v : b) block.push_back(as_vertex(v, n, "terminal"));
    inst.partition.push_back(std::move(block));
  }
  if (doc.contains("requests")) {
    if (!doc["requests"].is_array()) fail("requests must be an array");
    for (const json& r : doc["requests"]) {
      expect_object(r, "request", {"s", "u", "t", "v"});
      inst.requests.push_back({as_vertex(require(r, "s", "request"), n, "s"),
                               as_vertex(require(r, "u", "request"), n, "u"),
                               as_vertex(require(r, "t", "request"), n, "t"),
                               as_vertex(require(r, "v", "request"), n, "v")});
    }
  }
  inst.k = as_budget(require(doc, "k", "cut instance"));
  try {
    inst.validate();
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
  return inst;
}

Json element_json(const Element& x) {
  static const mpz_class limit = mpz_class(1) << 53;
  if (x.denominator() == 1 && abs(x.numerator()) <= limit) return x.numerator().get_si();
  return x.to_string();
}

Json instance_json(const LinSystem& s, Weight k) {
  Json domain;
  switch (s.domain().kind()) {
    case DomainSpec::Kind::Integers: domain = {{"kind", "Z"}}; break;
    case DomainSpec::Kind::Rationals: domain = {{"kind", "Q"}}; break;
    case DomainSpec::Kind::PrimeField: domain = {{"kind", "Fp"}, {"p", s.domain().modulus()}}; break;
  }
  Json eqs = Json::array();
  for (const auto& e : s.equations())
    eqs.push_back({{"u", s.name(e.u)}, {"v", s.name(e.v)}, {"a", element_json(e.a)}, {"b", element_json(e.b)},
                   {"c", element_json(e.c)}, {"w", e.weight}});
  return Json{{"domain", domain}, {"variables", s.names()}, {"equations", eqs}, {"k", k}};
}

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Min-2-Lin solver, oracles and instance tools", "min2lin-cli"};
  app.require_subcommand(1);
  bool timing = false;
  app.add_flag("--timing", timing, "report wall-clock milliseconds (otherwise 0)");

  std::string file, algo_name = "auto", mode = "optimize";
  int threads = 1;
  std::uint64_t seed = 0;

  auto* check = app.add_subcommand("check", "consistency check with a satisfying assignment");
  check->add_option("file", file, "instance file, - for stdin")->required();

  auto* solve_cmd = app.add_subcommand("solve", "minimum-weight deletion set");
  solve_cmd->add_option("file", file, "instance file, - for stdin")->required();
  solve_cmd->add_option("--mode", mode, "decide or optimize")->check(CLI::IsMember({"decide", "optimize"}));
  solve_cmd->add_option("--algo", algo_name, "auto, ed, field or finite")
      ->check(CLI::IsMember({"auto", "ed", "field", "finite"}));
  solve_cmd->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--seed", seed, "random seed");

  Vertex root = 0;
  Weight budget = 0;
  std::string oracle = "even";
  std::uint64_t p = 5;
  auto* ibs_cmd = app.add_subcommand("enumerate-ibs", "dominating family of balanced root subgraphs");
  ibs_cmd->add_option("file", file, "graph file, - for stdin")->required();
  ibs_cmd->add_option("--root", root, "root vertex")->required();
  ibs_cmd->add_option("--budget", budget, "cost bound k")->required()->check(CLI::NonNegativeNumber);
  ibs_cmd->add_option("--oracle", oracle, "even, group:Q, group:Fp (with --p) or group:F<p>");
  ibs_cmd->add_option("--p", p, "modulus for group:Fp");

  auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive reference optimum");
  oracle_cmd->add_option("file", file, "instance file, - for stdin")->required();

  std::string domain_kind = "Z", noise = "random";
  int n_vars = 6, n_eqs = 8;
  Weight weight_max = 1, plant = 2;
  std::optional<Weight> k_flag;
  auto* gen_cmd = app.add_subcommand("generate", "planted random instance");
  gen_cmd->add_option("--domain", domain_kind, "Z, Q or Fp")->check(CLI::IsMember({"Z", "Q", "Fp"}));
  gen_cmd->add_option("--p", p, "modulus for Fp");
  gen_cmd->add_option("--vars", n_vars, "variables")->check(CLI::Range(1, 100000));
  gen_cmd->add_option("--eqs", n_eqs, "base equations")->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--wmax", weight_max, "largest base weight")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--budget", plant, "planted noise weight")->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--noise", noise, "shift or random")->check(CLI::IsMember({"shift", "random"}));
  gen_cmd->add_option("--seed", seed, "random seed");
  gen_cmd->add_option("--k", k_flag, "budget written to the file (default: planted weight)");

  std::string kind;
  auto* reduce_cmd = app.add_subcommand("reduce", "Min-2-Lin instance from a graph problem");
  reduce_cmd->add_option("kind", kind, "bipartization, multiway or multicut")
      ->required()
      ->check(CLI::IsMember({"bipartization", "multiway", "multicut"}));
  reduce_cmd->add_option("file", file, "graph file, - for stdin")->required();
  reduce_cmd->add_option("--k", k_flag, "budget (default: file k, else total weight)");

  auto* cut_cmd = app.add_subcommand("cut", "minimum partition cut fulfilling pair requests");
  cut_cmd->add_option("file", file, "cut instance file, - for stdin")->required();

  std::vector<std::string> files;
  Weight kmax = 5;
  int count = 3;
  auto* bench_cmd = app.add_subcommand("bench", "CSV of weight and node count against k");
  bench_cmd->add_option("files", files, "instance files (default: a generated suite)");
  bench_cmd->add_option("--algo", algo_name, "auto, ed, field or finite")
      ->check(CLI::IsMember({"auto", "ed", "field", "finite"}));
  bench_cmd->add_option("--kmax", kmax, "largest k")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--count", count, "generated instances")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--domain", domain_kind, "Z, Q or Fp")->check(CLI::IsMember({"Z", "Q", "Fp"}));
  bench_cmd->add_option("--p", p, "modulus for Fp");
  bench_cmd->add_option("--vars", n_vars, "variables")->check(CLI::Range(1, 100000));
  bench_cmd->add_option("--eqs", n_eqs, "base equations")->check(CLI::NonNegativeNumber);
  bench_cmd->add_option("--budget", plant, "planted noise weight")->check(CLI::NonNegativeNumber);
  bench_cmd->add_option("--seed", seed, "first seed");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  auto emit = [&](const Json& record) { out << record.dump(2) << '\n'; };

  try {
    Stopwatch clock(timing);

    if (*check) {
      Instance inst = parse_instance(read_json(file));
      auto phi = solve(inst.system);
      if (!phi) {
        emit(Json{{"status", "unsat"}, {"stats", stats_json(0, 0, clock.ms())}});
      } else {
        if (!inst.system.satisfied_by(*phi)) throw InvariantViolation("assignment does not verify");
        emit(Json{{"status", "sat"},
                  {"assignment", assignment_json(inst.system, *phi)},
                  {"stats", stats_json(0, 0, clock.ms())}});
      }
    } else if (*solve_cmd) {
      Instance inst = parse_instance(read_json(file));
      const Algorithm algo = parse_algorithm(algo_name);
      const LinSystem& s = inst.system;
      SolveStats st;
      std::optional<DeletionSet> best = min2lin_decide(s, inst.k, algo, &st);
      if (best && mode == "optimize") {
        // opt lies in [lo, w(best)]
        Weight lo = 0, hi = s.weight_of(*best) - 1;
        while (lo <= hi) {
          Weight mid = lo + (hi - lo) / 2;
          if (auto z = min2lin_decide(s, mid, algo, &st)) {
            best = z;
            hi = s.weight_of(*z) - 1;
          } else {
            lo = mid + 1;
          }
        }
      }
      if (!best) {
        emit(Json{{"status", "infeasible"}, {"stats", stats_json(st.nodes(), st.family_members, clock.ms())}});
      } else {
        if (s.weight_of(*best) > inst.k) throw InvariantViolation("deletion set exceeds the budget");
        Assignment phi = verified_assignment(s, *best);
        emit(Json{{"status", "solved"},
                  {"weight", s.weight_of(*best)},
                  {"deleted", id_list(*best)},
                  {"assignment", assignment_json(s, phi)},
                  {"stats", stats_json(st.nodes(), st.family_members, clock.ms())}});
      }
    } else if (*ibs_cmd) {
      GraphFile gf = parse_graph(read_json(file));
      if (root < 0 || root >= gf.vertices) fail("root " + std::to_string(root) + " is not a vertex");
      BiasedGraph g = biased_graph(gf, oracle, p);
      DominatingFamily fam = dominating_family(g, root, budget);
      Json members = Json::array();
      for (const auto& m : fam.members) {
        if (m.cost > budget) throw InvariantViolation("family member exceeds the budget");
        members.push_back({{"vertices", m.vertices}, {"cost", m.cost}, {"deleted", m.deleted}});
      }
      emit(Json{{"status", "solved"},
                {"members", members},
                {"stats", stats_json(fam.nodes, static_cast<long>(fam.members.size()), clock.ms())}});
    } else if (*oracle_cmd) {
      Instance inst = parse_instance(read_json(file));
      auto r = brute_min2lin(inst.system, inst.k);
      if (!r) {
        emit(Json{{"status", "infeasible"}, {"stats", stats_json(0, 0, clock.ms())}});
      } else {
        Assignment phi = verified_assignment(inst.system, r->deleted);
        emit(Json{{"status", "solved"},
                  {"weight", r->weight},
                  {"deleted", id_list(r->deleted)},
                  {"assignment", assignment_json(inst.system, phi)},
                  {"stats", stats_json(0, 0, clock.ms())}});
      }
    } else if (*gen_cmd) {
      GeneratorConfig cfg;
      cfg.domain = domain_from_flags(domain_kind, p);
      cfg.n_vars = n_vars;
      cfg.n_eqs = n_eqs;
      cfg.weight_max = weight_max;
      cfg.seed = seed;
      if (plant > 0) cfg.planted = PlantedConfig{plant, parse_noise(noise)};
      PlantedInstance pi = gen_planted(cfg);
      emit(instance_json(pi.system, k_flag.value_or(plant)));
    } else if (*reduce_cmd) {
      GraphFile gf = parse_graph(read_json(file));
      const Weight k = k_flag ? *k_flag : gf.k ? *gf.k : total_weight(gf);
      if (k < 0) fail("k must be non-negative");
      const Graph g = gf.graph();
      if (kind == "bipartization") {
        emit(instance_json(reduce_bipartization(g), k));
      } else if (kind == "multiway") {
        if (gf.terminals.empty()) fail("multiway reduction needs terminals");
        emit(instance_json(reduce_multiway_cut(g, gf.terminals, k), k));
      } else {
        if (gf.requests.empty()) fail("multicut reduction needs requests");
        emit(instance_json(reduce_multicut(g, gf.requests, k), k));
      }
    } else if (*cut_cmd) {
      CutInstance inst = parse_cut(read_json(file));
      auto cut = pair_partition_cut(inst);
      if (!cut) {
        emit(Json{{"status", "infeasible"}, {"stats", stats_json(0, 0, clock.ms())}});
      } else {
        Weight w = 0;
        for (EdgeId e : *cut) w += inst.graph.edge(e).weight;
        if (w > inst.k || !is_partition_cut(inst, *cut) || !fulfills_requests(inst, *cut))
          throw InvariantViolation("cut does not verify");
        std::vector<EdgeId> sorted = *cut;
        std::sort(sorted.begin(), sorted.end());
        emit(Json{{"status", "solved"},
                  {"weight", w},
                  {"deleted", sorted},
                  {"stats", stats_json(0, 0, clock.ms())}});
      }
    } else if (*bench_cmd) {
      const Algorithm algo = parse_algorithm(algo_name);
      out << "instance,k,algo,weight,nodes,wall_ms\n";
      if (files.empty()) {
        GeneratorConfig cfg;
        cfg.domain = domain_from_flags(domain_kind, p);
        cfg.n_vars = n_vars;
        cfg.n_eqs = n_eqs;
        if (plant > 0) cfg.planted = PlantedConfig{plant, NoiseModel::Random};
        for (int i = 0; i < count; ++i) {
          cfg.seed = seed + static_cast<std::uint64_t>(i);
          bench_rows("gen" + std::to_string(cfg.seed), gen_planted(cfg).system, kmax, algo, algo_name, timing,
                     out);
        }
      } else {
        for (const auto& f : files) {
          Instance inst = parse_instance(read_json(f));
          bench_rows(std::filesystem::path(f).stem().string(), inst.system, kmax, algo, algo_name, timing, out);
        }
      }
    }
    return kOk;
  } catch (const UnsupportedDomain& e) {
    err << "unsupported: " << e.what() << '\n';
    return kUnsupported;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

}  // namespace min2lin::cli

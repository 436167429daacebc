#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "min2lin/graph.hpp"
#include "min2lin/system.hpp"

namespace min2lin {

struct BruteResult {
  Weight weight = 0;
  std::set<EqId> deleted;
};

// Exact minimum deletion set of weight <= k; subsets are tried in
// nondecreasing weight, then in id order. Exponential.
std::optional<BruteResult> brute_min2lin(const LinSystem& sys, Weight k);

// Vertex i becomes variable "x<i>".
LinSystem reduce_bipartization(const Graph& g);
// Edges x = y; terminal i pinned to i + 1 at weight k + 1.
LinSystem reduce_multiway_cut(const Graph& g, const std::vector<Vertex>& terminals, Weight k);
// Edges x = y; request i adds s = p s' and t = p t' + 1 at weight k + 1 with p
// the i-th odd prime.
LinSystem reduce_multicut(const Graph& g, const std::vector<std::pair<Vertex, Vertex>>& requests, Weight k);
std::uint64_t odd_prime(int index);  // 0 -> 3, 1 -> 5, ...

// Exhaustive edge-subset optima for the source problems.
std::optional<Weight> brute_bipartization(const Graph& g, Weight k);
std::optional<Weight> brute_multiway_cut(const Graph& g, const std::vector<Vertex>& terminals, Weight k);
std::optional<Weight> brute_multicut(const Graph& g, const std::vector<std::pair<Vertex, Vertex>>& requests, Weight k);

enum class NoiseModel {
  Shift,   // copy of a planted equation with a wrong constant
  Random,  // fresh equation on a random pair that the planted assignment violates
};

struct PlantedConfig {
  Weight budget = 0;
  NoiseModel noise = NoiseModel::Random;
};

struct GeneratorConfig {
  DomainSpec domain = DomainSpec::integers();
  int n_vars = 5;
  int n_eqs = 6;
  Weight weight_max = 1;
  std::uint64_t seed = 0;
  std::optional<PlantedConfig> planted;
};

struct PlantedInstance {
  LinSystem system;
  std::set<EqId> deleted;  // the noise; weight <= budget
  Assignment witness;      // satisfies system - deleted
};

// Consistent base (random spanning tree plus extra edges, all satisfied by a
// random assignment) with the planted noise on top. Deterministic in the
// config. Noise equations have unit weight; without a planted config the
// system is consistent.
PlantedInstance gen_planted(const GeneratorConfig& cfg);

// All important (s,t)-edge separators of weight <= k, as sorted edge lists in
// lexicographic order. Exhaustive over vertex sets.
std::vector<std::vector<EdgeId>> brute_important_separators(const Graph& g, Vertex s, Vertex t, Weight k);

}  // namespace min2lin

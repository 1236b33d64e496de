// generate.hpp: deterministic universe generators.
//
// Everything here is keyed by an explicit seed; the same seed always yields
// the same universe, byte for byte after serialization.

#pragma once

#include <random>

#include "lmv/core.hpp"

namespace lmv {

inline constexpr std::uint64_t kDefaultSeed = 1729;

enum class GenStyle { Edgeless, RandomDownward, MaximalTheta, Chain };

const char* to_string(GenStyle style);
std::optional<GenStyle> gen_style_from_name(std::string_view name);

// A seed-keyed predicate over downward pairs, usable as a shared infinite
// edge set: two universes induced from the same predicate agree on every
// common pair.
struct EdgePredicate {
  std::uint64_t seed = 0;
  std::uint32_t density_ppm = 1'000'000;  // share of downward pairs that carry an edge

  bool operator()(const Vertex& source, const Vertex& target) const;
};

// Universe induced on the given vertices by the predicate.
InducedUniverse induce_from_predicate(int dimension, std::vector<Vertex> vertices,
                                      const EdgePredicate& theta);

// All (bound+1)^k lattice points of the box {0..bound}^k, lexicographic.
std::vector<Vertex> box_vertices(int k, Coord bound);

// Full box {0..box_bound}^k with edges per style:
//   edgeless         no edges
//   random-downward  each downward pair independently with the given density
//   maximal-theta    every downward pair
//   chain            diagonal vertices (i,...,i) only, consecutive edges
InducedUniverse generate_universe(GenStyle style, int k, Coord box_bound, double density,
                                  std::uint64_t seed);

struct RandomUniverseConfig {
  int k = 2;
  Coord coord_bound = 8;
  std::size_t min_vertices = 3;
  std::size_t max_vertices = 12;
  double density = 0.5;
};

// Random vertex set with random downward edges; used by the test corpus and
// the family-condition scenario generator.
InducedUniverse random_downward_universe(std::mt19937_64& rng, const RandomUniverseConfig& config);

Vertex random_vertex(std::mt19937_64& rng, int k, Coord bound);

}  // namespace lmv

#include "lmv/generate.hpp"

#include <algorithm>
#include <set>

namespace lmv {

const char* to_string(GenStyle style) {
  switch (style) {
    case GenStyle::Edgeless: return "edgeless";
    case GenStyle::RandomDownward: return "random-downward";
    case GenStyle::MaximalTheta: return "maximal-theta";
    case GenStyle::Chain: return "chain";
  }
  return "?";
}

std::optional<GenStyle> gen_style_from_name(std::string_view name) {
  if (name == "edgeless") return GenStyle::Edgeless;
  if (name == "random-downward") return GenStyle::RandomDownward;
  if (name == "maximal-theta") return GenStyle::MaximalTheta;
  if (name == "chain") return GenStyle::Chain;
  return std::nullopt;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t hash_pair(std::uint64_t seed, const Vertex& a, const Vertex& b) {
  std::uint64_t h = splitmix64(seed ^ 0x7c0ffee5ULL);
  for (Coord c : a.coords) h = splitmix64(h ^ static_cast<std::uint64_t>(c));
  h = splitmix64(h ^ 0xa5a5a5a5ULL);
  for (Coord c : b.coords) h = splitmix64(h ^ static_cast<std::uint64_t>(c));
  return h;
}

}  // namespace

bool EdgePredicate::operator()(const Vertex& source, const Vertex& target) const {
  if (source.max_coord() <= target.max_coord()) return false;
  if (density_ppm >= 1'000'000) return true;
  return hash_pair(seed, source, target) % 1'000'000 < density_ppm;
}

InducedUniverse induce_from_predicate(int dimension, std::vector<Vertex> vertices,
                                      const EdgePredicate& theta) {
  RawUniverse raw;
  raw.dimension = dimension;
  raw.vertices = std::move(vertices);
  std::sort(raw.vertices.begin(), raw.vertices.end());
  raw.vertices.erase(std::unique(raw.vertices.begin(), raw.vertices.end()), raw.vertices.end());
  for (const Vertex& x : raw.vertices) {
    for (const Vertex& y : raw.vertices) {
      if (theta(x, y)) raw.edges.emplace_back(x, y);
    }
  }
  return validate_universe(raw);
}

std::vector<Vertex> box_vertices(int k, Coord bound) {
  if (k < 1) throw Error(ErrorKind::UnsupportedDimension, "k must be positive");
  if (bound < 0) throw Error(ErrorKind::NegativeCoordinate, "box bound must be nonnegative");
  std::vector<Vertex> points;
  std::vector<Coord> odo(static_cast<std::size_t>(k), 0);
  while (true) {
    points.emplace_back(odo);
    int pos = k - 1;
    while (pos >= 0 && odo[static_cast<std::size_t>(pos)] == bound) odo[static_cast<std::size_t>(pos--)] = 0;
    if (pos < 0) break;
    odo[static_cast<std::size_t>(pos)]++;
  }
  return points;
}

InducedUniverse generate_universe(GenStyle style, int k, Coord box_bound, double density,
                                  std::uint64_t seed) {
  if (k < 2) throw Error(ErrorKind::DimensionMismatch, "universe dimension must be at least 2");
  if (density < 0.0 || density > 1.0) {
    throw Error(ErrorKind::InvalidBudget, "density must lie in [0, 1]");
  }

  RawUniverse raw;
  raw.dimension = k;

  if (style == GenStyle::Chain) {
    for (Coord i = 0; i <= box_bound; ++i) {
      raw.vertices.emplace_back(std::vector<Coord>(static_cast<std::size_t>(k), i));
    }
    for (Coord i = 1; i <= box_bound; ++i) {
      raw.edges.emplace_back(raw.vertices[static_cast<std::size_t>(i)],
                             raw.vertices[static_cast<std::size_t>(i - 1)]);
    }
    return validate_universe(raw);
  }

  raw.vertices = box_vertices(k, box_bound);
  switch (style) {
    case GenStyle::Edgeless:
      break;
    case GenStyle::MaximalTheta:
      for (const Vertex& x : raw.vertices) {
        for (const Vertex& y : raw.vertices) {
          if (x.max_coord() > y.max_coord()) raw.edges.emplace_back(x, y);
        }
      }
      break;
    case GenStyle::RandomDownward: {
      // One draw per downward pair, in canonical pair order.
      std::mt19937_64 rng(seed);
      const auto threshold = static_cast<std::uint64_t>(density * 4294967296.0);
      for (const Vertex& x : raw.vertices) {
        for (const Vertex& y : raw.vertices) {
          if (x.max_coord() <= y.max_coord()) continue;
          if ((rng() & 0xffffffffULL) < threshold) raw.edges.emplace_back(x, y);
        }
      }
      break;
    }
    case GenStyle::Chain:
      break;  // handled above
  }
  return validate_universe(raw);
}

Vertex random_vertex(std::mt19937_64& rng, int k, Coord bound) {
  std::vector<Coord> coords(static_cast<std::size_t>(k));
  for (Coord& c : coords) c = static_cast<Coord>(rng() % static_cast<std::uint64_t>(bound + 1));
  return Vertex(std::move(coords));
}

InducedUniverse random_downward_universe(std::mt19937_64& rng, const RandomUniverseConfig& config) {
  std::size_t box_size = 1;
  for (int i = 0; i < config.k; ++i) {
    box_size *= static_cast<std::size_t>(config.coord_bound + 1);
    if (box_size > 4096) break;
  }
  std::size_t span = config.max_vertices - config.min_vertices + 1;
  std::size_t target = config.min_vertices + static_cast<std::size_t>(rng() % span);
  target = std::min(target, box_size);

  std::set<Vertex> picked;
  std::size_t attempts = 0;
  while (picked.size() < target && attempts < target * 64) {
    picked.insert(random_vertex(rng, config.k, config.coord_bound));
    ++attempts;
  }

  RawUniverse raw;
  raw.dimension = config.k;
  raw.vertices.assign(picked.begin(), picked.end());
  const auto threshold = static_cast<std::uint64_t>(config.density * 4294967296.0);
  for (const Vertex& x : raw.vertices) {
    for (const Vertex& y : raw.vertices) {
      if (x.max_coord() <= y.max_coord()) continue;
      if ((rng() & 0xffffffffULL) < threshold) raw.edges.emplace_back(x, y);
    }
  }
  return validate_universe(raw);
}

}  // namespace lmv

#include "lmv/core.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace lmv {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NegativeCoordinate: return "NegativeCoordinate";
    case ErrorKind::DownwardViolation: return "DownwardViolation";
    case ErrorKind::DanglingEdge: return "DanglingEdge";
    case ErrorKind::VertexNotInUniverse: return "VertexNotInUniverse";
    case ErrorKind::OracleCapExceeded: return "OracleCapExceeded";
    case ErrorKind::MissingLowerLabel: return "MissingLowerLabel";
    case ErrorKind::ScopeNotInDomain: return "ScopeNotInDomain";
    case ErrorKind::CubeNotInDomain: return "CubeNotInDomain";
    case ErrorKind::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorKind::InvalidBudget: return "InvalidBudget";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidRule: return "InvalidRule";
    case ErrorKind::InconsistentFiles: return "InconsistentFiles";
  }
  return "UnknownError";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

Coord Vertex::min_coord() const {
  return *std::min_element(coords.begin(), coords.end());
}

Coord Vertex::max_coord() const {
  return *std::max_element(coords.begin(), coords.end());
}

std::string to_string(const Vertex& v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.coords.size(); ++i) {
    if (i) out << ',';
    out << v.coords[i];
  }
  out << ')';
  return out.str();
}

std::span<const std::uint32_t> InducedUniverse::out_neighbors(std::uint32_t index) const {
  return {out_flat_.data() + out_start_[index],
          out_flat_.data() + out_start_[index + 1]};
}

std::size_t InducedUniverse::out_degree(std::uint32_t index) const {
  return out_start_[index + 1] - out_start_[index];
}

std::optional<std::uint32_t> InducedUniverse::index_of(const Vertex& v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return std::nullopt;
  return static_cast<std::uint32_t>(it - vertices_.begin());
}

std::uint32_t InducedUniverse::require_index(const Vertex& v) const {
  auto idx = index_of(v);
  if (!idx) throw Error(ErrorKind::VertexNotInUniverse, to_string(v) + " is not a vertex of the universe");
  return *idx;
}

InducedUniverse validate_universe(const RawUniverse& raw) {
  if (raw.dimension < 2) {
    throw Error(ErrorKind::DimensionMismatch,
                "universe dimension must be at least 2, got " + std::to_string(raw.dimension));
  }
  for (const Vertex& v : raw.vertices) {
    if (v.dim() != raw.dimension) {
      throw Error(ErrorKind::DimensionMismatch,
                  "vertex " + to_string(v) + " has arity " + std::to_string(v.dim()) +
                      ", expected " + std::to_string(raw.dimension));
    }
    for (Coord c : v.coords) {
      if (c < 0) throw Error(ErrorKind::NegativeCoordinate, "vertex " + to_string(v));
    }
  }

  InducedUniverse u;
  u.dimension_ = raw.dimension;
  u.vertices_ = raw.vertices;
  std::sort(u.vertices_.begin(), u.vertices_.end());
  u.vertices_.erase(std::unique(u.vertices_.begin(), u.vertices_.end()), u.vertices_.end());

  u.maxes_.reserve(u.vertices_.size());
  u.mins_.reserve(u.vertices_.size());
  for (const Vertex& v : u.vertices_) {
    u.maxes_.push_back(v.max_coord());
    u.mins_.push_back(v.min_coord());
  }

  for (const auto& [src, dst] : raw.edges) {
    auto si = u.index_of(src);
    if (!si) throw Error(ErrorKind::DanglingEdge, "edge source " + to_string(src) + " is not in the vertex list");
    auto di = u.index_of(dst);
    if (!di) throw Error(ErrorKind::DanglingEdge, "edge target " + to_string(dst) + " is not in the vertex list");
    if (u.maxes_[*si] <= u.maxes_[*di]) {
      throw Error(ErrorKind::DownwardViolation,
                  "edge " + to_string(src) + " -> " + to_string(dst) + " has max " +
                      std::to_string(u.maxes_[*si]) + " <= " + std::to_string(u.maxes_[*di]));
    }
    u.edges_.emplace_back(*si, *di);
  }
  std::sort(u.edges_.begin(), u.edges_.end());
  u.edges_.erase(std::unique(u.edges_.begin(), u.edges_.end()), u.edges_.end());

  u.out_start_.assign(u.vertices_.size() + 1, 0);
  for (const auto& [s, t] : u.edges_) u.out_start_[s + 1]++;
  for (std::size_t i = 1; i < u.out_start_.size(); ++i) u.out_start_[i] += u.out_start_[i - 1];
  u.out_flat_.resize(u.edges_.size());
  {
    std::vector<std::uint32_t> cursor(u.out_start_.begin(), u.out_start_.end() - 1);
    for (const auto& [s, t] : u.edges_) u.out_flat_[cursor[s]++] = t;
  }
  return u;
}

Cube::Cube(std::vector<Coord> axis_values, int dim) : axis(std::move(axis_values)), dimension(dim) {
  if (dimension < 1) throw Error(ErrorKind::DimensionMismatch, "cube dimension must be positive");
  if (axis.empty()) throw Error(ErrorKind::DimensionMismatch, "cube axis must be nonempty");
  for (Coord c : axis) {
    if (c < 0) throw Error(ErrorKind::NegativeCoordinate, "cube axis value " + std::to_string(c));
  }
  std::sort(axis.begin(), axis.end());
  axis.erase(std::unique(axis.begin(), axis.end()), axis.end());
}

std::size_t Cube::point_count() const {
  std::size_t n = 1;
  for (int i = 0; i < dimension; ++i) n *= axis.size();
  return n;
}

std::string to_string(const Cube& c) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < c.axis.size(); ++i) {
    if (i) out << ',';
    out << c.axis[i];
  }
  out << '}';
  return out.str();
}

std::vector<Vertex> cube_points(const Cube& cube) {
  const int k = cube.dimension;
  std::vector<Vertex> points;
  points.reserve(cube.point_count());
  std::vector<std::size_t> odo(k, 0);
  while (true) {
    Vertex v;
    v.coords.reserve(k);
    for (int i = 0; i < k; ++i) v.coords.push_back(cube.axis[odo[i]]);
    points.push_back(std::move(v));
    int pos = k - 1;
    while (pos >= 0 && odo[pos] + 1 == cube.axis.size()) odo[pos--] = 0;
    if (pos < 0) break;
    odo[pos]++;
  }
  return points;
}

OrderType order_type_of(const Vertex& v) {
  std::vector<Coord> sorted = v.coords;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<std::uint8_t> ranks;
  ranks.reserve(v.coords.size());
  for (Coord c : v.coords) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), c);
    ranks.push_back(static_cast<std::uint8_t>(it - sorted.begin()));
  }
  return OrderType(std::move(ranks));
}

std::vector<std::pair<int, int>> OrderType::strict_pairs() const {
  std::vector<std::pair<int, int>> pairs;
  const int k = dim();
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (ranks_[i] < ranks_[j]) pairs.emplace_back(i, j);
  return pairs;
}

std::vector<std::pair<int, int>> OrderType::equal_pairs() const {
  std::vector<std::pair<int, int>> pairs;
  const int k = dim();
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (ranks_[i] == ranks_[j]) pairs.emplace_back(i, j);
  return pairs;
}

std::string to_string(const OrderType& t) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < t.ranks().size(); ++i) {
    if (i) out << ',';
    out << static_cast<int>(t.ranks()[i]);
  }
  out << ']';
  return out.str();
}

std::vector<OrderType> enumerate_order_types(int k, int dimension_cap) {
  if (k < 1) throw Error(ErrorKind::UnsupportedDimension, "k must be positive");
  if (k > dimension_cap) {
    throw Error(ErrorKind::UnsupportedDimension,
                "k=" + std::to_string(k) + " exceeds the exhaustive-enumeration cap " +
                    std::to_string(dimension_cap));
  }
  // Every weak ordering of k positions is realized by a tuple over {0..k-1},
  // so scanning those k^k tuples enumerates all types.
  std::set<OrderType> types;
  std::vector<Coord> tuple(k, 0);
  while (true) {
    types.insert(order_type_of(Vertex(tuple)));
    int pos = k - 1;
    while (pos >= 0 && tuple[pos] + 1 == k) tuple[pos--] = 0;
    if (pos < 0) break;
    tuple[pos]++;
  }
  return {types.begin(), types.end()};
}

std::vector<Vertex> light_cone(const InducedUniverse& universe, const Vertex& x) {
  if (x.dim() != universe.dimension()) {
    throw Error(ErrorKind::DimensionMismatch,
                "apex " + to_string(x) + " has arity " + std::to_string(x.dim()) +
                    ", expected " + std::to_string(universe.dimension()));
  }
  const Coord bound = x.max_coord();
  std::vector<Vertex> cone;
  for (std::uint32_t i = 0; i < universe.size(); ++i) {
    if (universe.max_of(i) < bound) cone.push_back(universe.vertex(i));
  }
  return cone;
}

std::uint64_t self_power(int k) {
  if (k < 1 || k > 15) throw Error(ErrorKind::UnsupportedDimension, "k^k supported for 1 <= k <= 15");
  std::uint64_t result = 1;
  for (int i = 0; i < k; ++i) result *= static_cast<std::uint64_t>(k);
  return result;
}

std::vector<std::uint32_t> ascending_max_order(const InducedUniverse& universe) {
  std::vector<std::uint32_t> order(universe.size());
  for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (universe.max_of(a) != universe.max_of(b)) return universe.max_of(a) < universe.max_of(b);
    return a < b;
  });
  return order;
}

}  // namespace lmv

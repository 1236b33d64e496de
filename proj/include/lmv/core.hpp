// core.hpp: vertices, edges, induced universes, cubes, and order types.
//
// Everything here is an immutable value after construction; operations are
// pure functions and safe to evaluate concurrently.

#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lmv {

using Coord = std::int64_t;  // lattice coordinate, >= 0 once validated
using Label = std::int64_t;  // label value, >= 0 for every labeling we produce

enum class ErrorKind {
  DimensionMismatch,
  NegativeCoordinate,
  DownwardViolation,
  DanglingEdge,
  VertexNotInUniverse,
  OracleCapExceeded,
  MissingLowerLabel,
  ScopeNotInDomain,
  CubeNotInDomain,
  UnsupportedDimension,
  InvalidBudget,
  BudgetExceeded,
  ParseError,
  InvalidRule,
  InconsistentFiles,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// A point of the nonnegative integral lattice. Comparison is lexicographic on
// coordinates; that order is the canonical vertex order used everywhere
// determinism is promised.
struct Vertex {
  std::vector<Coord> coords;

  Vertex() = default;
  explicit Vertex(std::vector<Coord> c) : coords(std::move(c)) {}
  Vertex(std::initializer_list<Coord> c) : coords(c) {}

  int dim() const { return static_cast<int>(coords.size()); }
  Coord min_coord() const;
  Coord max_coord() const;

  auto operator<=>(const Vertex&) const = default;
};

std::string to_string(const Vertex& v);  // "(5,9)"

// Unvalidated input for universe construction. Edges reference vertices by
// value so that a dangling endpoint is detectable, not silently dropped.
struct RawUniverse {
  int dimension = 0;
  std::vector<Vertex> vertices;
  std::vector<std::pair<Vertex, Vertex>> edges;
};

// A finite vertex set together with the induced edge set. Every stored edge
// satisfies max(source) > max(target), so every walk strictly decreases the
// maximum coordinate and the graph is acyclic with no repeated vertices on
// any walk. Vertices are kept sorted and deduplicated; edges are simple.
class InducedUniverse {
 public:
  InducedUniverse() = default;

  int dimension() const { return dimension_; }
  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const Vertex& vertex(std::uint32_t index) const { return vertices_[index]; }
  const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges() const {
    return edges_;
  }
  std::span<const std::uint32_t> out_neighbors(std::uint32_t index) const;
  std::size_t out_degree(std::uint32_t index) const;
  Coord max_of(std::uint32_t index) const { return maxes_[index]; }
  Coord min_of(std::uint32_t index) const { return mins_[index]; }

  std::optional<std::uint32_t> index_of(const Vertex& v) const;
  bool contains(const Vertex& v) const { return index_of(v).has_value(); }
  // Index of v, or a VertexNotInUniverse error.
  std::uint32_t require_index(const Vertex& v) const;

  bool operator==(const InducedUniverse&) const = default;

 private:
  friend InducedUniverse validate_universe(const RawUniverse& raw);

  int dimension_ = 0;
  std::vector<Vertex> vertices_;                              // sorted, unique
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges_;  // sorted, unique
  std::vector<std::uint32_t> out_flat_;   // adjacency grouped by source index
  std::vector<std::uint32_t> out_start_;  // size()+1 offsets into out_flat_
  std::vector<Coord> maxes_;
  std::vector<Coord> mins_;
};

// Checks dimensions, coordinate signs, edge endpoints and the downward
// condition; returns the canonical universe or throws an Error whose kind
// names the first violation found.
InducedUniverse validate_universe(const RawUniverse& raw);

// Axis set E with point set E^k. The axis is sorted and deduplicated.
struct Cube {
  std::vector<Coord> axis;
  int dimension = 0;

  Cube() = default;
  Cube(std::vector<Coord> axis_values, int dim);

  Coord min_axis() const { return axis.front(); }
  std::size_t point_count() const;  // |E|^k

  bool operator==(const Cube&) const = default;
};

std::string to_string(const Cube& c);  // "{0,1,2}"

// All |E|^k tuples over the axis, in lexicographic order.
std::vector<Vertex> cube_points(const Cube& cube);

// Weak-ordering equivalence class of k-tuples, canonicalized as the vector of
// coordinate ranks (rank = number of distinct values in the tuple strictly
// below that coordinate). Two tuples share an OrderType exactly when their
// strict-comparison and equality pair sets coincide.
class OrderType {
 public:
  OrderType() = default;

  const std::vector<std::uint8_t>& ranks() const { return ranks_; }
  int dim() const { return static_cast<int>(ranks_.size()); }
  // All ordered pairs (i, j), 0-based, with coordinate i < coordinate j.
  std::vector<std::pair<int, int>> strict_pairs() const;
  // All pairs i < j with equal coordinates.
  std::vector<std::pair<int, int>> equal_pairs() const;

  auto operator<=>(const OrderType&) const = default;

 private:
  friend OrderType order_type_of(const Vertex& v);
  explicit OrderType(std::vector<std::uint8_t> ranks) : ranks_(std::move(ranks)) {}

  std::vector<std::uint8_t> ranks_;
};

std::string to_string(const OrderType& t);  // "[0,1]"

OrderType order_type_of(const Vertex& v);

// Exhaustive enumeration over k^k tuples is practical only for small k.
inline constexpr int kDefaultDimensionCap = 4;

// All realizable order types for dimension k, deduplicated, in ascending
// canonical (rank-vector) order.
std::vector<OrderType> enumerate_order_types(int k, int dimension_cap = kDefaultDimensionCap);

// Members z of the universe with max(z) < max(x). x need not belong to the
// universe but must have its dimension.
std::vector<Vertex> light_cone(const InducedUniverse& universe, const Vertex& x);

// k^k as an unsigned value; requires 1 <= k <= 15.
std::uint64_t self_power(int k);

// Vertex indices sorted by (max coordinate, index) ascending. Edges strictly
// decrease the max coordinate, so this is a reverse topological order: every
// out-neighbor of a vertex appears before it.
std::vector<std::uint32_t> ascending_max_order(const InducedUniverse& universe);

}  // namespace lmv

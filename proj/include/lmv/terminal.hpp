// terminal.hpp: terminal paths, the terminal label function and its relaxed
// variant.
//
// For a vertex z, T(z) is the set of last vertices of terminal paths starting
// at z. Under the downward condition every walk is a path and every maximal
// path ends at an out-degree-0 vertex, so T(z) is exactly the set of sinks
// reachable from z (z itself when it is a sink). The brute-force oracle below
// sticks to the literal path-extension reading and guards that equivalence.

#pragma once

#include "lmv/core.hpp"

namespace lmv {

enum class LabelVariant { Plain, Relaxed };

const char* to_string(LabelVariant v);

struct TerminalLabeling {
  InducedUniverse universe;
  std::vector<Label> labels;  // by canonical vertex index, total
  LabelVariant variant = LabelVariant::Plain;
};

// T(z): the sinks reachable from z, sorted. z must be in the universe.
std::vector<Vertex> terminal_set(const InducedUniverse& universe, const Vertex& z);

// min over {min(x) : x in T(z)} together with min(z).
Label terminal_label(const InducedUniverse& universe, const Vertex& z);

// Labels for every vertex by dynamic programming in ascending max order
// (edges always point from strictly larger max to smaller, so all
// out-neighbors are finished first). Plain: the terminal label. Relaxed:
// max(z) at sinks, the terminal label elsewhere.
std::vector<Label> terminal_labels(const InducedUniverse& universe, LabelVariant variant);
TerminalLabeling label_all_terminal(const InducedUniverse& universe, LabelVariant variant);

inline constexpr std::size_t kDefaultOracleCap = 14;

// Literal evaluation: enumerate every path from z by explicit extension,
// collect the ends of terminal ones, apply the defining minimum. Exponential;
// refuses universes larger than the cap. Kept free of the reachability
// shortcut so it can serve as a differential-testing oracle.
Label brute_force_terminal_label(const InducedUniverse& universe, const Vertex& z,
                                 std::size_t oracle_cap = kDefaultOracleCap);

}  // namespace lmv

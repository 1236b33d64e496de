// render.hpp: deterministic DOT (and, for k=2, SVG) renderings of a
// universe, optionally annotated with a labeling.
//
// Vertices sit at their lattice coordinates when k=2. With a labeling, label
// text is shown on significant vertices and on vertices touching an edge;
// trivial labels on isolated vertices are suppressed. Significant vertices
// are drawn doubled.

#pragma once

#include "lmv/core.hpp"

namespace lmv {

std::string render_dot(const InducedUniverse& universe, const std::vector<Label>* labels);

// Direct SVG with the same layout and marks; k=2 only.
std::string render_svg(const InducedUniverse& universe, const std::vector<Label>* labels);

}  // namespace lmv

// io.hpp: text formats for universes and labelings.
//
// Universe format:
//   # comment (ignored anywhere)
//   k=<int>
//   v <c1> <c2> ... <ck>
//   e <source-index> <target-index>    (0-based indices into the v lines)
//
// Labeling format: a universe followed by one `l <vertex-index> <label>` line
// per vertex.
//
// Serialized output is canonical: vertices in lexicographic order, edge and
// label lines sorted, no comments. parse followed by serialize is the
// identity on canonical files.

#pragma once

#include <span>
#include <string>
#include <string_view>

#include "lmv/core.hpp"

namespace lmv {

RawUniverse parse_universe_text(std::string_view text);
std::string serialize_universe(const InducedUniverse& universe);

struct LabeledUniverse {
  InducedUniverse universe;
  std::vector<Label> labels;  // by canonical vertex index, total

  bool operator==(const LabeledUniverse&) const = default;
};

LabeledUniverse parse_labeling_text(std::string_view text);
std::string serialize_labeling(const InducedUniverse& universe, std::span<const Label> labels);

// Axis spec accepted by the CLI: "0,1,4" or an inclusive range "0..5".
std::vector<Coord> parse_axis_spec(std::string_view spec);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view content);

InducedUniverse load_universe_file(const std::string& path);
LabeledUniverse load_labeling_file(const std::string& path);

}  // namespace lmv

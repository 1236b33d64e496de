#include "lmv/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace lmv {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::int64_t parse_int(std::string_view token, int line_no) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw Error(ErrorKind::ParseError,
                "line " + std::to_string(line_no) + ": expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

struct ParsedFile {
  RawUniverse raw;
  // label lines in file order: (vertex index as written, label)
  std::vector<std::pair<std::size_t, Label>> label_lines;
};

ParsedFile parse_file(std::string_view text) {
  ParsedFile parsed;
  bool have_k = false;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    line = trim(line);
    if (line.empty() || line.front() == '#') continue;

    if (line.rfind("k=", 0) == 0) {
      if (have_k) throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": duplicate k= header");
      parsed.raw.dimension = static_cast<int>(parse_int(trim(line.substr(2)), line_no));
      have_k = true;
      continue;
    }
    if (!have_k) {
      throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": k=<int> header must come first");
    }

    auto tokens = split_ws(line);
    if (tokens[0] == "v") {
      Vertex v;
      v.coords.reserve(tokens.size() - 1);
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        Coord c = parse_int(tokens[i], line_no);
        if (c < 0) throw Error(ErrorKind::NegativeCoordinate, "line " + std::to_string(line_no) + ": " + std::string(tokens[i]));
        v.coords.push_back(c);
      }
      parsed.raw.vertices.push_back(std::move(v));
    } else if (tokens[0] == "e") {
      if (tokens.size() != 3) throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": expected 'e <src> <dst>'");
      std::int64_t s = parse_int(tokens[1], line_no);
      std::int64_t t = parse_int(tokens[2], line_no);
      auto n = static_cast<std::int64_t>(parsed.raw.vertices.size());
      if (s < 0 || s >= n || t < 0 || t >= n) {
        throw Error(ErrorKind::DanglingEdge,
                    "line " + std::to_string(line_no) + ": edge index out of range (have " +
                        std::to_string(n) + " vertices so far)");
      }
      parsed.raw.edges.emplace_back(parsed.raw.vertices[static_cast<std::size_t>(s)],
                                    parsed.raw.vertices[static_cast<std::size_t>(t)]);
    } else if (tokens[0] == "l") {
      if (tokens.size() != 3) throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": expected 'l <vertex-index> <label>'");
      std::int64_t idx = parse_int(tokens[1], line_no);
      std::int64_t label = parse_int(tokens[2], line_no);
      auto n = static_cast<std::int64_t>(parsed.raw.vertices.size());
      if (idx < 0 || idx >= n) {
        throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": label index out of range");
      }
      if (label < 0) throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": negative label");
      parsed.label_lines.emplace_back(static_cast<std::size_t>(idx), label);
    } else {
      throw Error(ErrorKind::ParseError,
                  "line " + std::to_string(line_no) + ": unknown directive '" + std::string(tokens[0]) + "'");
    }
  }
  if (!have_k) throw Error(ErrorKind::ParseError, "missing k=<int> header");
  return parsed;
}

}  // namespace

RawUniverse parse_universe_text(std::string_view text) {
  ParsedFile parsed = parse_file(text);
  if (!parsed.label_lines.empty()) {
    throw Error(ErrorKind::ParseError, "universe file contains label lines; use the labeling parser");
  }
  return parsed.raw;
}

std::string serialize_universe(const InducedUniverse& universe) {
  std::ostringstream out;
  out << "k=" << universe.dimension() << '\n';
  for (const Vertex& v : universe.vertices()) {
    out << 'v';
    for (Coord c : v.coords) out << ' ' << c;
    out << '\n';
  }
  for (const auto& [s, t] : universe.edges()) out << "e " << s << ' ' << t << '\n';
  return out.str();
}

LabeledUniverse parse_labeling_text(std::string_view text) {
  ParsedFile parsed = parse_file(text);
  LabeledUniverse result;
  result.universe = validate_universe(parsed.raw);

  // Label indices refer to v lines in file order; remap onto canonical order.
  result.labels.assign(result.universe.size(), -1);
  for (const auto& [file_idx, label] : parsed.label_lines) {
    std::uint32_t canon = result.universe.require_index(parsed.raw.vertices[file_idx]);
    if (result.labels[canon] != -1 && result.labels[canon] != label) {
      throw Error(ErrorKind::InconsistentFiles,
                  "conflicting labels for vertex " + to_string(result.universe.vertex(canon)));
    }
    result.labels[canon] = label;
  }
  for (std::size_t i = 0; i < result.labels.size(); ++i) {
    if (result.labels[i] == -1) {
      throw Error(ErrorKind::ParseError,
                  "labeling is not total: vertex " + to_string(result.universe.vertex(i)) + " has no label");
    }
  }
  return result;
}

std::string serialize_labeling(const InducedUniverse& universe, std::span<const Label> labels) {
  if (labels.size() != universe.size()) {
    throw Error(ErrorKind::InconsistentFiles,
                "label count " + std::to_string(labels.size()) + " does not match vertex count " +
                    std::to_string(universe.size()));
  }
  std::string out = serialize_universe(universe);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    out += "l " + std::to_string(i) + ' ' + std::to_string(labels[i]) + '\n';
  }
  return out;
}

std::vector<Coord> parse_axis_spec(std::string_view spec) {
  spec = trim(spec);
  if (spec.empty()) throw Error(ErrorKind::ParseError, "empty axis spec");
  std::vector<Coord> axis;
  auto range_pos = spec.find("..");
  if (range_pos != std::string_view::npos) {
    Coord lo = parse_int(trim(spec.substr(0, range_pos)), 0);
    Coord hi = parse_int(trim(spec.substr(range_pos + 2)), 0);
    if (lo < 0 || hi < lo) throw Error(ErrorKind::ParseError, "bad axis range '" + std::string(spec) + "'");
    for (Coord c = lo; c <= hi; ++c) axis.push_back(c);
    return axis;
  }
  std::size_t start = 0;
  while (start <= spec.size()) {
    std::size_t comma = spec.find(',', start);
    std::string_view tok = trim(spec.substr(start, comma == std::string_view::npos ? spec.size() - start : comma - start));
    if (tok.empty()) throw Error(ErrorKind::ParseError, "empty element in axis spec '" + std::string(spec) + "'");
    Coord c = parse_int(tok, 0);
    if (c < 0) throw Error(ErrorKind::ParseError, "negative axis value in '" + std::string(spec) + "'");
    axis.push_back(c);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return axis;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::ParseError, "cannot open file '" + path + "' for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw Error(ErrorKind::ParseError, "write failed for '" + path + "'");
}

InducedUniverse load_universe_file(const std::string& path) {
  return validate_universe(parse_universe_text(read_text_file(path)));
}

LabeledUniverse load_labeling_file(const std::string& path) {
  return parse_labeling_text(read_text_file(path));
}

}  // namespace lmv

#include "lmv/render.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace lmv {

namespace {

struct VertexMarks {
  std::vector<char> touched;      // on some edge
  std::vector<char> significant;  // label < min(vertex)
};

VertexMarks mark_vertices(const InducedUniverse& u, const std::vector<Label>* labels) {
  VertexMarks marks;
  marks.touched.assign(u.size(), 0);
  marks.significant.assign(u.size(), 0);
  for (const auto& [s, t] : u.edges()) {
    marks.touched[s] = 1;
    marks.touched[t] = 1;
  }
  if (labels) {
    if (labels->size() != u.size()) {
      throw Error(ErrorKind::InconsistentFiles, "label count does not match universe size");
    }
    for (std::uint32_t i = 0; i < u.size(); ++i) {
      if ((*labels)[i] < u.min_of(i)) marks.significant[i] = 1;
    }
  }
  return marks;
}

}  // namespace

std::string render_dot(const InducedUniverse& universe, const std::vector<Label>* labels) {
  const VertexMarks marks = mark_vertices(universe, labels);
  std::ostringstream out;
  out << "digraph universe {\n";
  out << "  // k=" << universe.dimension() << ", " << universe.size() << " vertices, "
      << universe.edges().size() << " edges\n";
  out << "  node [shape=circle, fontsize=10];\n";
  for (std::uint32_t i = 0; i < universe.size(); ++i) {
    const Vertex& v = universe.vertex(i);
    out << "  v" << i << " [label=\"" << to_string(v);
    if (labels && (marks.significant[i] || marks.touched[i])) {
      out << "\\nf=" << (*labels)[i];
    }
    out << '"';
    if (universe.dimension() == 2) {
      out << ", pos=\"" << v.coords[0] << ',' << v.coords[1] << "!\"";
    }
    if (marks.significant[i]) out << ", shape=doublecircle";
    out << "];\n";
  }
  for (const auto& [s, t] : universe.edges()) {
    out << "  v" << s << " -> v" << t << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string render_svg(const InducedUniverse& universe, const std::vector<Label>* labels) {
  if (universe.dimension() != 2) {
    throw Error(ErrorKind::UnsupportedDimension, "SVG rendering is only available for k=2");
  }
  const VertexMarks marks = mark_vertices(universe, labels);

  const int scale = 60;
  const int margin = 50;
  const int radius = 16;
  Coord max_x = 0, max_y = 0;
  for (const Vertex& v : universe.vertices()) {
    max_x = std::max(max_x, v.coords[0]);
    max_y = std::max(max_y, v.coords[1]);
  }
  auto px = [&](Coord x) { return margin + static_cast<long long>(x) * scale; };
  auto py = [&](Coord y) { return margin + static_cast<long long>(max_y - y) * scale; };
  const long long width = 2 * margin + max_x * scale;
  const long long height = 2 * margin + max_y * scale;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  out << "  <defs><marker id=\"arrow\" markerWidth=\"10\" markerHeight=\"8\" refX=\"9\" refY=\"4\""
         " orient=\"auto\"><path d=\"M0,0 L10,4 L0,8 z\"/></marker></defs>\n";
  for (const auto& [s, t] : universe.edges()) {
    const Vertex& a = universe.vertex(s);
    const Vertex& b = universe.vertex(t);
    // Shorten the segment so the arrowhead meets the target circle.
    const double ax = static_cast<double>(px(a.coords[0])), ay = static_cast<double>(py(a.coords[1]));
    const double bx = static_cast<double>(px(b.coords[0])), by = static_cast<double>(py(b.coords[1]));
    const double dx = bx - ax, dy = by - ay;
    const double len = dx * dx + dy * dy > 0 ? std::sqrt(dx * dx + dy * dy) : 1.0;
    const double ex = bx - dx / len * (radius + 2);
    const double ey = by - dy / len * (radius + 2);
    out << "  <line x1=\"" << static_cast<long long>(ax) << "\" y1=\"" << static_cast<long long>(ay)
        << "\" x2=\"" << static_cast<long long>(ex) << "\" y2=\"" << static_cast<long long>(ey)
        << "\" stroke=\"black\" marker-end=\"url(#arrow)\"/>\n";
  }
  for (std::uint32_t i = 0; i < universe.size(); ++i) {
    const Vertex& v = universe.vertex(i);
    out << "  <circle cx=\"" << px(v.coords[0]) << "\" cy=\"" << py(v.coords[1]) << "\" r=\"" << radius
        << "\" fill=\"white\" stroke=\"black\" stroke-width=\"" << (marks.significant[i] ? 3 : 1)
        << "\"/>\n";
    out << "  <text x=\"" << px(v.coords[0]) << "\" y=\"" << py(v.coords[1]) + 4
        << "\" text-anchor=\"middle\" font-size=\"9\">" << to_string(v) << "</text>\n";
    if (labels && (marks.significant[i] || marks.touched[i])) {
      out << "  <text x=\"" << px(v.coords[0]) << "\" y=\"" << py(v.coords[1]) + radius + 12
          << "\" text-anchor=\"middle\" font-size=\"9\">f=" << (*labels)[i] << "</text>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace lmv

#include "lmv/terminal.hpp"

#include <algorithm>
#include <limits>

namespace lmv {

const char* to_string(LabelVariant v) {
  return v == LabelVariant::Plain ? "plain" : "relaxed";
}

std::vector<Vertex> terminal_set(const InducedUniverse& universe, const Vertex& z) {
  const std::uint32_t start = universe.require_index(z);
  std::vector<char> seen(universe.size(), 0);
  std::vector<std::uint32_t> stack{start};
  seen[start] = 1;
  std::vector<Vertex> sinks;
  while (!stack.empty()) {
    std::uint32_t cur = stack.back();
    stack.pop_back();
    if (universe.out_degree(cur) == 0) {
      sinks.push_back(universe.vertex(cur));
      continue;
    }
    for (std::uint32_t next : universe.out_neighbors(cur)) {
      if (!seen[next]) {
        seen[next] = 1;
        stack.push_back(next);
      }
    }
  }
  std::sort(sinks.begin(), sinks.end());
  return sinks;
}

Label terminal_label(const InducedUniverse& universe, const Vertex& z) {
  Label best = z.min_coord();
  for (const Vertex& x : terminal_set(universe, z)) best = std::min(best, x.min_coord());
  return best;
}

std::vector<Label> terminal_labels(const InducedUniverse& universe, LabelVariant variant) {
  const std::size_t n = universe.size();
  // reach_min[i]: min over the min-coordinates of sinks reachable from i.
  std::vector<Label> reach_min(n, 0);
  std::vector<Label> labels(n, 0);
  for (std::uint32_t idx : ascending_max_order(universe)) {
    if (universe.out_degree(idx) == 0) {
      reach_min[idx] = universe.min_of(idx);
      labels[idx] = variant == LabelVariant::Relaxed ? universe.max_of(idx) : universe.min_of(idx);
    } else {
      Label m = std::numeric_limits<Label>::max();
      for (std::uint32_t next : universe.out_neighbors(idx)) m = std::min(m, reach_min[next]);
      reach_min[idx] = m;
      labels[idx] = std::min(universe.min_of(idx), m);
    }
  }
  return labels;
}

TerminalLabeling label_all_terminal(const InducedUniverse& universe, LabelVariant variant) {
  TerminalLabeling result;
  result.universe = universe;
  result.labels = terminal_labels(universe, variant);
  result.variant = variant;
  return result;
}

Label brute_force_terminal_label(const InducedUniverse& universe, const Vertex& z,
                                 std::size_t oracle_cap) {
  if (universe.size() > oracle_cap) {
    throw Error(ErrorKind::OracleCapExceeded,
                "universe has " + std::to_string(universe.size()) + " vertices, oracle cap is " +
                    std::to_string(oracle_cap));
  }
  const std::uint32_t start = universe.require_index(z);
  Label best = z.min_coord();
  std::vector<std::vector<std::uint32_t>> paths{{start}};
  while (!paths.empty()) {
    std::vector<std::uint32_t> path = std::move(paths.back());
    paths.pop_back();
    bool extended = false;
    for (std::uint32_t next : universe.out_neighbors(path.back())) {
      // The downward condition makes revisits impossible, but the definition
      // asks for distinct vertices, so check anyway.
      if (std::find(path.begin(), path.end(), next) != path.end()) continue;
      auto longer = path;
      longer.push_back(next);
      paths.push_back(std::move(longer));
      extended = true;
    }
    if (!extended) best = std::min(best, universe.min_of(path.back()));
  }
  return best;
}

}  // namespace lmv

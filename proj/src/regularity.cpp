#include "lmv/regularity.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <random>
#include <sstream>

#include "json.hpp"
#include "lmv/generate.hpp"
#include "lmv/io.hpp"

namespace lmv {

SignificantLabelReport significant_labels(const InducedUniverse& universe,
                                          std::span<const Label> labels,
                                          std::span<const Vertex> scope) {
  if (labels.size() != universe.size()) {
    throw Error(ErrorKind::InconsistentFiles, "label count does not match universe size");
  }
  SignificantLabelReport report;
  report.scope_size = scope.size();
  std::vector<std::pair<Vertex, Label>> hits;
  for (const Vertex& z : scope) {
    auto idx = universe.index_of(z);
    if (!idx) {
      throw Error(ErrorKind::ScopeNotInDomain, to_string(z) + " is not in the labeling's domain");
    }
    Label value = labels[*idx];
    if (value < z.min_coord()) hits.emplace_back(z, value);
  }
  std::sort(hits.begin(), hits.end());
  hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
  for (auto& [v, value] : hits) {
    report.significant_vertices.push_back(v);
    report.per_vertex_labels.push_back(value);
    report.significant_labels.insert(value);
  }
  return report;
}

const char* to_string(TypeClass c) {
  switch (c) {
    case TypeClass::High: return "HIGH";
    case TypeClass::ConstantLow: return "CONSTANT-LOW";
    case TypeClass::Neither: return "NEITHER";
  }
  return "?";
}

RegularityVerdict check_regressive_regularity(const InducedUniverse& universe,
                                              std::span<const Label> labels, const Cube& cube) {
  if (labels.size() != universe.size()) {
    throw Error(ErrorKind::InconsistentFiles, "label count does not match universe size");
  }
  if (cube.dimension != universe.dimension()) {
    throw Error(ErrorKind::CubeNotInDomain,
                "cube dimension " + std::to_string(cube.dimension) + " does not match universe dimension " +
                    std::to_string(universe.dimension()));
  }

  struct Acc {
    bool all_high = true;
    bool all_below = true;  // every value < min(E)
    bool all_same = true;
    bool seen = false;
    Label first_value = 0;
    std::optional<Vertex> high_violation;
    std::optional<Vertex> not_below;
    std::optional<Vertex> differs;
  };

  const Coord min_axis = cube.min_axis();
  std::map<OrderType, Acc> accs;
  std::set<Label> significant;

  for (const Vertex& point : cube_points(cube)) {
    auto idx = universe.index_of(point);
    if (!idx) {
      throw Error(ErrorKind::CubeNotInDomain,
                  "cube point " + to_string(point) + " is not in the labeling's domain");
    }
    const Label value = labels[*idx];
    Acc& acc = accs[order_type_of(point)];
    if (value < point.min_coord()) {
      acc.all_high = false;
      if (!acc.high_violation) acc.high_violation = point;
      significant.insert(value);
    }
    if (value >= min_axis) {
      acc.all_below = false;
      if (!acc.not_below) acc.not_below = point;
    }
    if (!acc.seen) {
      acc.seen = true;
      acc.first_value = value;
    } else if (value != acc.first_value) {
      acc.all_same = false;
      if (!acc.differs) acc.differs = point;
    }
  }

  RegularityVerdict verdict;
  verdict.cube = cube;
  verdict.regressively_regular = true;
  verdict.significant_count = significant.size();
  verdict.order_type_count = accs.size();
  for (auto& [type, acc] : accs) {
    TypeVerdict tv;
    tv.type = type;
    if (acc.all_high) {
      tv.cls = TypeClass::High;
    } else if (acc.all_same && acc.all_below) {
      tv.cls = TypeClass::ConstantLow;
      tv.constant_value = acc.first_value;
    } else {
      tv.cls = TypeClass::Neither;
      verdict.regressively_regular = false;
      const Vertex& breaks_low = acc.not_below ? *acc.not_below : *acc.differs;
      tv.neither_witness = std::make_pair(*acc.high_violation, breaks_low);
    }
    verdict.per_type.push_back(std::move(tv));
  }
  return verdict;
}

LabelingFamily relaxed_terminal_family() {
  return {"terminal-relaxed",
          [](const InducedUniverse& u) { return terminal_labels(u, LabelVariant::Relaxed); }};
}

LabelingFamily plain_terminal_family() {
  return {"terminal-plain",
          [](const InducedUniverse& u) { return terminal_labels(u, LabelVariant::Plain); }};
}

LabelingFamily relaxed_selection_family(SelectionRuleSet rules, std::string name_suffix) {
  std::string name = "selection-relaxed";
  if (!name_suffix.empty()) name += "(" + name_suffix + ")";
  return {std::move(name), [rules = std::move(rules)](const InducedUniverse& u) {
            return selection_labels(u, rules, LabelVariant::Relaxed);
          }};
}

LabelingFamily plain_selection_family(SelectionRuleSet rules, std::string name_suffix) {
  std::string name = "selection-plain";
  if (!name_suffix.empty()) name += "(" + name_suffix + ")";
  return {std::move(name), [rules = std::move(rules)](const InducedUniverse& u) {
            return selection_labels(u, rules, LabelVariant::Plain);
          }};
}

namespace {

struct Scenario {
  InducedUniverse a;
  InducedUniverse b;
  Vertex apex;
  bool equality = false;
  std::vector<Label> labels_a;
  std::vector<Label> labels_b;
};

// One generation attempt. Builds B from a random vertex set under a seeded
// edge predicate, picks an apex, and assembles A from a subset of B's light
// cone of the apex plus fresh vertices at or above the apex level. Three
// sampling strategies for the cone subset:
//   subset       independent coin per cone vertex
//   closure      close the coin sample under reachability, which makes label
//                agreement structural for downstream-determined labelings
//   forced-sink  keep one apex out-neighbor but drop its entire downstream,
//                so it degrades to a sink inside A; agreement then hinges on
//                value coincidences, the regime where non-jump-free
//                labelings actually misbehave
// Returns nothing when the sampled labels disagree on the shared cone.
std::optional<Scenario> attempt_scenario(std::mt19937_64& rng, const ScenarioConfig& cfg,
                                         const LabelingFamily& family) {
  EdgePredicate theta;
  theta.seed = rng();
  theta.density_ppm = 150'000 + static_cast<std::uint32_t>(rng() % 700'000);
  const Coord bound = cfg.coord_bound <= 3
                          ? cfg.coord_bound
                          : 3 + static_cast<Coord>(rng() % static_cast<std::uint64_t>(cfg.coord_bound - 2));

  std::size_t span = cfg.max_universe_size - cfg.min_universe_size + 1;
  std::size_t target = cfg.min_universe_size + static_cast<std::size_t>(rng() % span);
  std::set<Vertex> picked;
  for (std::size_t tries = 0; picked.size() < target && tries < target * 64; ++tries) {
    picked.insert(random_vertex(rng, cfg.k, bound));
  }
  InducedUniverse b = induce_from_predicate(cfg.k, {picked.begin(), picked.end()}, theta);

  // Apex must have a nonempty light cone, or the scenario says nothing.
  std::vector<std::uint32_t> apex_candidates;
  Coord min_max = std::numeric_limits<Coord>::max();
  for (std::uint32_t i = 0; i < b.size(); ++i) min_max = std::min(min_max, b.max_of(i));
  for (std::uint32_t i = 0; i < b.size(); ++i) {
    if (b.max_of(i) > min_max) apex_candidates.push_back(i);
  }
  if (apex_candidates.empty()) return std::nullopt;
  // Half the time prefer an apex with a large min coordinate: labels can only
  // misbehave below min(apex), so high-min apexes have more room to show it.
  std::uint32_t apex_idx = apex_candidates[rng() % apex_candidates.size()];
  if ((rng() & 1) != 0) {
    for (std::uint32_t i : apex_candidates) {
      if (b.min_of(i) > b.min_of(apex_idx)) apex_idx = i;
    }
  }
  const Vertex apex = b.vertex(apex_idx);
  const Coord apex_max = b.max_of(apex_idx);

  std::vector<std::uint32_t> cone;
  for (std::uint32_t i = 0; i < b.size(); ++i) {
    if (b.max_of(i) < apex_max) cone.push_back(i);
  }

  auto close_under_reachability = [&](std::vector<char>& take, const std::vector<char>& avoid) {
    std::vector<std::uint32_t> stack;
    for (std::uint32_t i : cone) {
      if (take[i]) stack.push_back(i);
    }
    while (!stack.empty()) {
      std::uint32_t cur = stack.back();
      stack.pop_back();
      for (std::uint32_t next : b.out_neighbors(cur)) {
        if (!take[next] && !avoid[next]) {
          take[next] = 1;
          stack.push_back(next);
        }
      }
    }
  };

  std::vector<char> take(b.size(), 0);
  std::vector<char> avoid(b.size(), 0);
  const std::uint64_t strategy = rng() % 3;
  if (strategy == 2) {
    // forced-sink: candidates are apex out-neighbors with downstream to drop.
    std::vector<std::uint32_t> sinkable;
    for (std::uint32_t j : b.out_neighbors(apex_idx)) {
      if (b.out_degree(j) > 0) sinkable.push_back(j);
    }
    if (!sinkable.empty()) {
      // Smallest min coordinate first: a low-min forced sink agrees with its
      // original label most often and drags the apex label down furthest.
      std::uint32_t forced = sinkable[0];
      for (std::uint32_t j : sinkable) {
        if (b.min_of(j) < b.min_of(forced)) forced = j;
      }
      std::vector<std::uint32_t> stack{forced};
      while (!stack.empty()) {
        std::uint32_t cur = stack.back();
        stack.pop_back();
        for (std::uint32_t next : b.out_neighbors(cur)) {
          if (!avoid[next]) {
            avoid[next] = 1;
            stack.push_back(next);
          }
        }
      }
      for (std::uint32_t i : cone) take[i] = !avoid[i] && (rng() & 3) == 0;
      take[forced] = 1;
      close_under_reachability(take, avoid);
    } else {
      for (std::uint32_t i : cone) take[i] = (rng() & 1) != 0;
    }
  } else {
    for (std::uint32_t i : cone) take[i] = (rng() & 1) != 0;
    if (strategy == 1) close_under_reachability(take, avoid);
  }

  std::vector<Vertex> a_vertices{apex};
  std::size_t cone_taken = 0;
  for (std::uint32_t i : cone) {
    if (take[i]) {
      a_vertices.push_back(b.vertex(i));
      ++cone_taken;
    }
  }
  // Vertices at or above the apex level never enter the light cone; mix in a
  // few from B and a few fresh ones.
  for (std::uint32_t i = 0; i < b.size(); ++i) {
    if (b.max_of(i) >= apex_max && (rng() & 3) == 0) a_vertices.push_back(b.vertex(i));
  }
  for (int extra = static_cast<int>(rng() % 3); extra > 0; --extra) {
    Vertex fresh = random_vertex(rng, cfg.k, bound);
    if (fresh.max_coord() < apex_max) {
      if (bound < apex_max) continue;
      std::size_t slot = rng() % fresh.coords.size();
      fresh.coords[slot] = apex_max + static_cast<Coord>(rng() % (bound - apex_max + 1));
    }
    a_vertices.push_back(std::move(fresh));
  }

  Scenario scenario;
  scenario.b = std::move(b);
  scenario.a = induce_from_predicate(cfg.k, std::move(a_vertices), theta);
  scenario.apex = apex;
  scenario.labels_a = family.label(scenario.a);
  scenario.labels_b = family.label(scenario.b);

  // Conformance: labels must agree on A's light cone of the apex.
  for (std::uint32_t i = 0; i < scenario.a.size(); ++i) {
    if (scenario.a.max_of(i) >= apex_max) continue;
    auto bi = scenario.b.index_of(scenario.a.vertex(i));
    if (!bi) {
      throw Error(ErrorKind::InconsistentFiles,
                  "scenario construction placed a cone vertex outside B");
    }
    if (scenario.labels_a[i] != scenario.labels_b[*bi]) return std::nullopt;
  }
  scenario.equality = cone_taken == cone.size();
  return scenario;
}

std::set<Coord> coordinate_set(const InducedUniverse& u) {
  std::set<Coord> coords;
  for (const Vertex& v : u.vertices()) coords.insert(v.coords.begin(), v.coords.end());
  return coords;
}

}  // namespace

FamilyConditionReport check_family_conditions(const LabelingFamily& family, int trials,
                                              std::uint64_t seed, const ScenarioConfig& config) {
  FamilyConditionReport report;
  report.family_name = family.name;
  report.requested_trials = trials;

  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    std::optional<Scenario> scenario;
    for (int attempt = 0; attempt < config.attempts_per_scenario && !scenario; ++attempt) {
      scenario = attempt_scenario(rng, config, family);
      if (!scenario) ++report.discarded_scenarios;
    }
    if (!scenario) {
      ++report.exhausted_slots;
      continue;
    }
    ++report.conforming_scenarios;
    if (scenario->equality) ++report.equality_flagged;

    if (scenario->labels_a.size() != scenario->a.size() ||
        scenario->labels_b.size() != scenario->b.size()) {
      ++report.totality_violations;
      continue;
    }
    const std::set<Coord> coords_a = coordinate_set(scenario->a);
    const std::set<Coord> coords_b = coordinate_set(scenario->b);
    for (Label v : scenario->labels_a) {
      if (!coords_a.count(v)) {
        ++report.reflexive_violations;
        break;
      }
    }
    for (Label v : scenario->labels_b) {
      if (!coords_b.count(v)) {
        ++report.reflexive_violations;
        break;
      }
    }

    const Label fa = scenario->labels_a[scenario->a.require_index(scenario->apex)];
    const Label fb = scenario->labels_b[scenario->b.require_index(scenario->apex)];
    if (fa < fb) {
      report.counterexamples.push_back(JumpFreeCounterexample{
          serialize_universe(scenario->a), serialize_universe(scenario->b), scenario->apex, fa, fb});
    }
  }
  std::sort(report.counterexamples.begin(), report.counterexamples.end());
  return report;
}

JumpFreeInstance check_jump_free_instance(const LabelingFamily& family, const InducedUniverse& a,
                                          const InducedUniverse& b, const Vertex& apex) {
  JumpFreeInstance result;
  auto ia = a.index_of(apex);
  auto ib = b.index_of(apex);
  if (!ia || !ib) return result;

  const Coord apex_max = apex.max_coord();
  std::size_t a_cone = 0, b_cone = 0;
  for (std::uint32_t i = 0; i < a.size(); ++i) {
    if (a.max_of(i) < apex_max) {
      ++a_cone;
      if (!b.contains(a.vertex(i))) return result;  // A_x not within B_x
    }
  }
  for (std::uint32_t i = 0; i < b.size(); ++i) {
    if (b.max_of(i) < apex_max) ++b_cone;
  }

  const std::vector<Label> labels_a = family.label(a);
  const std::vector<Label> labels_b = family.label(b);
  for (std::uint32_t i = 0; i < a.size(); ++i) {
    if (a.max_of(i) >= apex_max) continue;
    if (labels_a[i] != labels_b[b.require_index(a.vertex(i))]) return result;  // disagreement
  }

  result.preconditions_hold = true;
  result.equality = a_cone == b_cone;
  result.label_a = labels_a[*ia];
  result.label_b = labels_b[*ib];
  result.violated = result.label_a < result.label_b;
  return result;
}

std::string format_significant_report(const SignificantLabelReport& report,
                                      std::string_view scope_desc) {
  std::ostringstream out;
  out << "significant-report scope=" << scope_desc << " scope-size=" << report.scope_size
      << " significant-vertices=" << report.significant_vertices.size()
      << " distinct-labels=" << report.significant_labels.size() << '\n';
  for (std::size_t i = 0; i < report.significant_vertices.size(); ++i) {
    out << "significant " << to_string(report.significant_vertices[i])
        << " label=" << report.per_vertex_labels[i] << '\n';
  }
  out << "labels {";
  bool comma = false;
  for (Label v : report.significant_labels) {
    if (comma) out << ',';
    out << v;
    comma = true;
  }
  out << "}\n";
  return out.str();
}

std::string format_significant_report_json(const SignificantLabelReport& report,
                                           std::string_view scope_desc) {
  nlohmann::json j;
  j["scope"] = std::string(scope_desc);
  j["scope_size"] = report.scope_size;
  j["significant"] = nlohmann::json::array();
  for (std::size_t i = 0; i < report.significant_vertices.size(); ++i) {
    nlohmann::json entry;
    entry["vertex"] = report.significant_vertices[i].coords;
    entry["label"] = report.per_vertex_labels[i];
    j["significant"].push_back(entry);
  }
  j["labels"] = std::vector<Label>(report.significant_labels.begin(), report.significant_labels.end());
  return j.dump(2) + "\n";
}

std::string format_regularity_report(const RegularityVerdict& verdict, int dimension) {
  std::ostringstream out;
  out << "rr-report cube=" << to_string(verdict.cube) << " k=" << dimension
      << " points=" << verdict.cube.point_count() << " realized-types=" << verdict.order_type_count
      << " regressively-regular=" << (verdict.regressively_regular ? "true" : "false")
      << " significant-count=" << verdict.significant_count << '\n';
  for (const TypeVerdict& tv : verdict.per_type) {
    out << "type " << to_string(tv.type) << ' ' << to_string(tv.cls);
    if (tv.cls == TypeClass::ConstantLow) out << " value=" << tv.constant_value;
    if (tv.cls == TypeClass::Neither && tv.neither_witness) {
      out << " high-violation=" << to_string(tv.neither_witness->first)
          << " low-violation=" << to_string(tv.neither_witness->second);
    }
    out << '\n';
  }
  return out.str();
}

std::string format_regularity_report_json(const RegularityVerdict& verdict, int dimension) {
  nlohmann::json j;
  j["cube"] = verdict.cube.axis;
  j["k"] = dimension;
  j["points"] = verdict.cube.point_count();
  j["regressively_regular"] = verdict.regressively_regular;
  j["significant_count"] = verdict.significant_count;
  j["realized_types"] = verdict.order_type_count;
  j["types"] = nlohmann::json::array();
  for (const TypeVerdict& tv : verdict.per_type) {
    nlohmann::json entry;
    entry["type"] = to_string(tv.type);
    entry["class"] = to_string(tv.cls);
    if (tv.cls == TypeClass::ConstantLow) entry["value"] = tv.constant_value;
    if (tv.cls == TypeClass::Neither && tv.neither_witness) {
      entry["high_violation"] = tv.neither_witness->first.coords;
      entry["low_violation"] = tv.neither_witness->second.coords;
    }
    j["types"].push_back(entry);
  }
  return j.dump(2) + "\n";
}

std::string format_family_report(const FamilyConditionReport& report) {
  std::ostringstream out;
  out << "family-report family=" << report.family_name
      << " requested-trials=" << report.requested_trials
      << " conforming=" << report.conforming_scenarios
      << " discarded=" << report.discarded_scenarios
      << " exhausted-slots=" << report.exhausted_slots
      << " equality-flagged=" << report.equality_flagged << '\n';
  out << "full by-construction totality-violations=" << report.totality_violations << '\n';
  out << "reflexive violations=" << report.reflexive_violations << '\n';
  out << "jump-free counterexamples=" << report.counterexamples.size() << '\n';
  for (const JumpFreeCounterexample& ce : report.counterexamples) {
    out << "counterexample apex=" << to_string(ce.apex) << " label-a=" << ce.label_a
        << " label-b=" << ce.label_b << '\n';
    out << "universe-a-begin\n" << ce.universe_a << "universe-a-end\n";
    out << "universe-b-begin\n" << ce.universe_b << "universe-b-end\n";
  }
  return out.str();
}

std::string format_family_report_json(const FamilyConditionReport& report) {
  nlohmann::json j;
  j["family"] = report.family_name;
  j["requested_trials"] = report.requested_trials;
  j["conforming"] = report.conforming_scenarios;
  j["discarded"] = report.discarded_scenarios;
  j["exhausted_slots"] = report.exhausted_slots;
  j["equality_flagged"] = report.equality_flagged;
  j["full"] = "by-construction";
  j["totality_violations"] = report.totality_violations;
  j["reflexive_violations"] = report.reflexive_violations;
  j["counterexamples"] = nlohmann::json::array();
  for (const JumpFreeCounterexample& ce : report.counterexamples) {
    nlohmann::json entry;
    entry["apex"] = ce.apex.coords;
    entry["label_a"] = ce.label_a;
    entry["label_b"] = ce.label_b;
    entry["universe_a"] = ce.universe_a;
    entry["universe_b"] = ce.universe_b;
    j["counterexamples"].push_back(entry);
  }
  return j.dump(2) + "\n";
}

}  // namespace lmv

// regularity.hpp: significant-label reports, regressive regularity over
// cubes, and sampled checks of the full/reflexive/jump-free conditions for
// labeling families.

#pragma once

#include <functional>
#include <set>

#include "lmv/core.hpp"
#include "lmv/selection.hpp"
#include "lmv/terminal.hpp"

namespace lmv {

struct SignificantLabelReport {
  std::vector<Vertex> significant_vertices;  // sorted; label < min(vertex)
  std::vector<Label> per_vertex_labels;      // aligned with significant_vertices
  std::set<Label> significant_labels;        // the image as a set
  std::size_t scope_size = 0;

  bool operator==(const SignificantLabelReport&) const = default;
};

// Vertices z in scope with f(z) < min(z) and the set of their label values.
// Every scope member must belong to the universe.
SignificantLabelReport significant_labels(const InducedUniverse& universe,
                                          std::span<const Label> labels,
                                          std::span<const Vertex> scope);

enum class TypeClass { High, ConstantLow, Neither };

const char* to_string(TypeClass c);

struct TypeVerdict {
  OrderType type;
  TypeClass cls = TypeClass::High;
  Label constant_value = 0;  // meaningful for ConstantLow
  // For Neither: a point with f < min(point), and a point breaking the
  // constant-below-min(E) branch (possibly the same point).
  std::optional<std::pair<Vertex, Vertex>> neither_witness;

  bool operator==(const TypeVerdict&) const = default;
};

struct RegularityVerdict {
  Cube cube;
  std::vector<TypeVerdict> per_type;  // realized types, canonical order
  bool regressively_regular = false;
  std::size_t significant_count = 0;  // |{f(z) : z in E^k, f(z) < min(z)}|
  std::size_t order_type_count = 0;   // realized types

  bool operator==(const RegularityVerdict&) const = default;
};

// Classifies every order type realized in the cube: High when f(x) >= min(x)
// throughout, ConstantLow when f is constant and below min(E) throughout,
// Neither otherwise. Every cube point must belong to the universe.
RegularityVerdict check_regressive_regularity(const InducedUniverse& universe,
                                              std::span<const Label> labels, const Cube& cube);

// A family assigns one labeling to every finite universe. The labeler must be
// total, so the family is full by construction.
struct LabelingFamily {
  std::string name;
  std::function<std::vector<Label>(const InducedUniverse&)> label;
};

LabelingFamily relaxed_terminal_family();
// Not jump-free; kept for mutation-testing the checker.
LabelingFamily plain_terminal_family();
LabelingFamily relaxed_selection_family(SelectionRuleSet rules, std::string name_suffix = "");
LabelingFamily plain_selection_family(SelectionRuleSet rules, std::string name_suffix = "");

struct ScenarioConfig {
  int k = 2;
  Coord coord_bound = 6;
  std::size_t min_universe_size = 4;
  std::size_t max_universe_size = 12;
  int attempts_per_scenario = 300;
};

struct JumpFreeCounterexample {
  std::string universe_a;  // serialized; full reproduction data
  std::string universe_b;
  Vertex apex;
  Label label_a = 0;
  Label label_b = 0;

  auto operator<=>(const JumpFreeCounterexample&) const = default;
};

struct FamilyConditionReport {
  std::string family_name;
  int requested_trials = 0;
  int conforming_scenarios = 0;  // scenarios meeting the jump-free preconditions
  int discarded_scenarios = 0;   // generated but label agreement failed
  int exhausted_slots = 0;       // trials with no conforming scenario in budget
  int equality_flagged = 0;      // conforming scenarios where the cones were equal
  bool full_by_construction = true;
  int totality_violations = 0;   // labeler returned a non-total map (never, for ours)
  int reflexive_violations = 0;
  std::vector<JumpFreeCounterexample> counterexamples;  // canonically sorted

  bool generation_exhausted() const { return exhausted_slots > 0; }
};

// Samples (A, B, x) scenarios with x in both universes and A's light cone of
// x contained in B's, discards samples whose labels disagree on the shared
// cone, and checks f_A(x) >= f_B(x) on the rest. Also checks reflexivity of
// every sampled labeling exhaustively.
FamilyConditionReport check_family_conditions(const LabelingFamily& family, int trials,
                                              std::uint64_t seed,
                                              const ScenarioConfig& config = {});

// Direct check of one explicit (A, B, x) instance.
struct JumpFreeInstance {
  bool preconditions_hold = false;  // x in both, A_x within B_x, labels agree on A_x
  bool equality = false;            // A_x == B_x
  bool violated = false;            // preconditions hold and f_A(x) < f_B(x)
  Label label_a = 0;
  Label label_b = 0;
};

JumpFreeInstance check_jump_free_instance(const LabelingFamily& family, const InducedUniverse& a,
                                          const InducedUniverse& b, const Vertex& apex);

// Stable line-oriented report renderings; the optional JSON forms mirror the
// same data.
std::string format_significant_report(const SignificantLabelReport& report, std::string_view scope_desc);
std::string format_significant_report_json(const SignificantLabelReport& report, std::string_view scope_desc);
std::string format_regularity_report(const RegularityVerdict& verdict, int dimension);
std::string format_regularity_report_json(const RegularityVerdict& verdict, int dimension);
std::string format_family_report(const FamilyConditionReport& report);
std::string format_family_report_json(const FamilyConditionReport& report);

}  // namespace lmv

// search.hpp: brute-force search for cube witnesses: an axis set E with
// |E| = p over which the labeling of a domain universe is regressively
// regular.
//
// Candidate axes are the p-subsets of {0..max_axis_value} in lexicographic
// order; the result is the earliest candidate that passes, independent of
// how many workers scan in parallel. Exhaustion within a budget never
// refutes the underlying large-cube statements: those quantify over all
// finite domains.

#pragma once

#include <chrono>

#include "lmv/core.hpp"
#include "lmv/generate.hpp"
#include "lmv/regularity.hpp"
#include "lmv/selection.hpp"

namespace lmv {

enum class LabelingKind { Terminal, Selection };

const char* to_string(LabelingKind kind);

struct SearchBudget {
  Coord max_axis_value = 10;
  std::size_t max_domain_size = 200'000;
  int p = 1;
  std::optional<std::chrono::milliseconds> time_limit;
  int jobs = 1;
  int dimension_cap = kDefaultDimensionCap;
};

// The domain family: either a fixed universe or a style-generated full box
// over {0..max_axis_value}^k.
struct DomainSpec {
  std::optional<InducedUniverse> explicit_universe;
  GenStyle style = GenStyle::Edgeless;
  int k = 2;
  double density = 0.5;
  std::uint64_t seed = kDefaultSeed;
};

struct CubeWitness {
  InducedUniverse universe;
  Cube cube;
  RegularityVerdict verdict;
  LabelingKind labeling_kind = LabelingKind::Terminal;
  std::vector<Label> labels;          // the plain labeling that was checked
  std::size_t significant_count = 0;  // over the cube; bounded by k^k
};

struct CandidateFailure {
  std::vector<Coord> axis;
  bool cube_outside_domain = false;
  std::optional<TypeVerdict> first_neither;
};

struct SearchOutcome {
  std::optional<CubeWitness> witness;
  std::vector<CandidateFailure> failures;  // populated when no witness found
  std::size_t candidates_examined = 0;
};

// Labels the domain once with the plain variant (the large-cube statements
// are about the plain functions) and scans candidates, earliest-in-order
// success winning. Throws BudgetExceeded when the time limit expires or the
// domain outgrows the budget, UnsupportedDimension when k exceeds the
// exhaustive cap.
SearchOutcome search_cube_witness(const DomainSpec& domain, LabelingKind kind,
                                  const SelectionRuleSet& rules, const SearchBudget& budget);

// p-subsets of {0..max_value} in lexicographic order.
std::vector<std::vector<Coord>> enumerate_axes(Coord max_value, int p);

std::string format_search_report(const SearchOutcome& outcome, LabelingKind kind, int dimension);
std::string format_search_report_json(const SearchOutcome& outcome, LabelingKind kind, int dimension);

}  // namespace lmv

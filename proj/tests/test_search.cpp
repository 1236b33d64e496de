#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "doctest.h"
#include "lmv/io.hpp"
#include "lmv/search.hpp"
#include "lmv/terminal.hpp"
#include "test_util.hpp"

using namespace lmv;

TEST_CASE("axis enumeration is lexicographic and complete") {
  auto axes = enumerate_axes(3, 2);
  CHECK(axes == std::vector<std::vector<Coord>>{
                    {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(enumerate_axes(5, 3).size() == 20);  // C(6,3)
  CHECK(enumerate_axes(2, 5).empty());       // p larger than the pool
  CHECK(enumerate_axes(4, 1).size() == 5);
}

TEST_CASE("edgeless family yields the first cube immediately") {
  DomainSpec domain;
  domain.style = GenStyle::Edgeless;
  domain.k = 2;
  SearchBudget budget;
  budget.p = 3;
  budget.max_axis_value = 5;
  SearchOutcome outcome = search_cube_witness(domain, LabelingKind::Terminal, {}, budget);
  REQUIRE(outcome.witness.has_value());
  CHECK(outcome.witness->cube.axis == std::vector<Coord>{0, 1, 2});
  CHECK(outcome.witness->significant_count == 0);
  CHECK(outcome.witness->verdict.regressively_regular);
  CHECK(outcome.candidates_examined == 1);
}

TEST_CASE("maximal-theta domain with never rules: all types HIGH") {
  DomainSpec domain;
  domain.style = GenStyle::MaximalTheta;
  domain.k = 2;
  SearchBudget budget;
  budget.p = 2;
  budget.max_axis_value = 5;
  SelectionRuleSet never = *builtin_rule_set("never");
  SearchOutcome outcome = search_cube_witness(domain, LabelingKind::Selection, never, budget);
  REQUIRE(outcome.witness.has_value());
  for (const TypeVerdict& tv : outcome.witness->verdict.per_type) CHECK(tv.cls == TypeClass::High);
  CHECK(outcome.witness->significant_count == 0);
}

TEST_CASE("explicit universe: cubes outside the domain are classified, not fatal") {
  InducedUniverse chain = testutil::diagonal_chain({3, 2, 1, 0});
  DomainSpec domain;
  domain.explicit_universe = chain;
  SearchBudget budget;
  budget.p = 2;
  budget.max_axis_value = 3;
  SearchOutcome outcome = search_cube_witness(domain, LabelingKind::Terminal, {}, budget);
  // off-diagonal cube points are missing from the chain, so no candidate fits
  CHECK(!outcome.witness.has_value());
  CHECK(outcome.failures.size() == 6);
  for (const CandidateFailure& f : outcome.failures) CHECK(f.cube_outside_domain);
}

TEST_CASE("explicit fragment universe at p=2 finds the first all-inside cube") {
  DomainSpec domain;
  domain.explicit_universe = testutil::figure_fragment();
  SearchBudget budget;
  budget.p = 2;
  budget.max_axis_value = 14;
  SearchOutcome outcome = search_cube_witness(domain, LabelingKind::Terminal, {}, budget);
  // outcome computed by running the search; pinned for determinism
  REQUIRE(outcome.witness.has_value());
  CHECK(outcome.witness->cube.axis == std::vector<Coord>{0, 1});
  CHECK(outcome.witness->verdict.regressively_regular);
}

TEST_CASE("witness re-validates bit for bit") {
  DomainSpec domain;
  domain.style = GenStyle::RandomDownward;
  domain.k = 2;
  domain.density = 0.4;
  domain.seed = 99;
  SearchBudget budget;
  budget.p = 2;
  budget.max_axis_value = 6;
  SearchOutcome outcome = search_cube_witness(domain, LabelingKind::Terminal, {}, budget);
  REQUIRE(outcome.witness.has_value());
  const CubeWitness& w = *outcome.witness;

  std::vector<Label> again = terminal_labels(w.universe, LabelVariant::Plain);
  CHECK(again == w.labels);
  RegularityVerdict verdict = check_regressive_regularity(w.universe, again, w.cube);
  CHECK(verdict == w.verdict);
  CHECK(verdict.significant_count == w.significant_count);
  CHECK(w.significant_count <= self_power(w.universe.dimension()));
}

TEST_CASE("searches are deterministic and minimal in the candidate order") {
  DomainSpec domain;
  domain.style = GenStyle::RandomDownward;
  domain.k = 2;
  domain.density = 0.5;
  domain.seed = 1234;
  SearchBudget budget;
  budget.p = 2;
  budget.max_axis_value = 5;

  SearchOutcome first = search_cube_witness(domain, LabelingKind::Terminal, {}, budget);
  SearchOutcome second = search_cube_witness(domain, LabelingKind::Terminal, {}, budget);
  CHECK(format_search_report(first, LabelingKind::Terminal, 2) ==
        format_search_report(second, LabelingKind::Terminal, 2));

  if (first.witness) {
    // replay: no earlier candidate passes
    const std::vector<Label> labels = terminal_labels(first.witness->universe, LabelVariant::Plain);
    for (const auto& axis : enumerate_axes(budget.max_axis_value, budget.p)) {
      if (axis == first.witness->cube.axis) break;
      RegularityVerdict verdict =
          check_regressive_regularity(first.witness->universe, labels, Cube(axis, 2));
      CHECK(!verdict.regressively_regular);
    }
  }
}

TEST_CASE("parallel scan returns the same earliest witness") {
  DomainSpec domain;
  domain.style = GenStyle::RandomDownward;
  domain.k = 2;
  domain.density = 0.35;
  domain.seed = 777;
  SearchBudget budget;
  budget.p = 3;
  budget.max_axis_value = 7;

  SearchOutcome sequential = search_cube_witness(domain, LabelingKind::Terminal, {}, budget);
  budget.jobs = 4;
  SearchOutcome parallel = search_cube_witness(domain, LabelingKind::Terminal, {}, budget);
  CHECK(format_search_report(sequential, LabelingKind::Terminal, 2) ==
        format_search_report(parallel, LabelingKind::Terminal, 2));
}

TEST_CASE("budget validation and limits") {
  DomainSpec domain;
  domain.style = GenStyle::Edgeless;
  SearchBudget budget;
  budget.p = 0;
  CHECK_THROWS_AS(search_cube_witness(domain, LabelingKind::Terminal, {}, budget), Error);

  budget.p = 1;
  budget.max_axis_value = 5;
  budget.max_domain_size = 10;  // box has 36 vertices
  try {
    search_cube_witness(domain, LabelingKind::Terminal, {}, budget);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BudgetExceeded);
  }

  budget.max_domain_size = 200'000;
  DomainSpec high_dim;
  high_dim.style = GenStyle::Edgeless;
  high_dim.k = 5;
  try {
    search_cube_witness(high_dim, LabelingKind::Terminal, {}, budget);
    FAIL("expected UnsupportedDimension");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnsupportedDimension);
  }

  // an already expired deadline trips at the first candidate
  budget.time_limit = std::chrono::milliseconds(0);
  try {
    search_cube_witness(domain, LabelingKind::Terminal, {}, budget);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BudgetExceeded);
  }
}

TEST_CASE("exhaustion reports say they refute nothing and classify failures") {
  // constant-labeling trick: a two-point axis over a domain whose labels sit
  // between the cube values breaks both branches for some type
  DomainSpec domain;
  domain.explicit_universe = testutil::diagonal_chain({3, 2, 1, 0});
  SearchBudget budget;
  budget.p = 2;
  budget.max_axis_value = 3;
  SearchOutcome outcome = search_cube_witness(domain, LabelingKind::Terminal, {}, budget);
  std::string report = format_search_report(outcome, LabelingKind::Terminal, 2);
  CHECK(report.find("status=exhausted") != std::string::npos);
  CHECK(report.find("not a refutation") != std::string::npos);
  CHECK(report.find("cube-outside-domain") != std::string::npos);
}

TEST_CASE("witness reports parse back as labeling files") {
  DomainSpec domain;
  domain.style = GenStyle::Edgeless;
  SearchBudget budget;
  budget.p = 3;
  budget.max_axis_value = 5;
  SearchOutcome outcome = search_cube_witness(domain, LabelingKind::Terminal, {}, budget);
  std::string report = format_search_report(outcome, LabelingKind::Terminal, 2);
  LabeledUniverse lab = parse_labeling_text(report);
  CHECK(lab.universe == outcome.witness->universe);
  CHECK(lab.labels == outcome.witness->labels);
}

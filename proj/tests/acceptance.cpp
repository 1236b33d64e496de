// Acceptance suite. Runs every gate with its pinned tolerance and prints one
// PASS/FAIL line per criterion. Exits nonzero if any criterion fails.
//
// Usage: acceptance <path-to-lmv-cli> <scratch-dir>

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "lmv/generate.hpp"
#include "lmv/io.hpp"
#include "lmv/regularity.hpp"
#include "lmv/search.hpp"
#include "lmv/selection.hpp"
#include "lmv/terminal.hpp"
#include "test_util.hpp"

using namespace lmv;
using Clock = std::chrono::steady_clock;

namespace {

std::string g_cli;
std::string g_scratch;
int g_failures = 0;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(int criterion, bool ok, const std::string& what) {
  std::printf("%s  criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion, what.c_str());
  if (!ok) ++g_failures;
}

struct CliResult {
  int exit_code = -1;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  CliResult result;
  const std::string command = g_cli + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return result;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) result.output.append(buffer, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

// Criterion 5 applies to every verdict the suite computes anywhere.
std::size_t g_verdicts_checked = 0;
bool g_implication_ok = true;

void note_verdict(const RegularityVerdict& verdict, int k) {
  ++g_verdicts_checked;
  if (verdict.regressively_regular) {
    if (verdict.significant_count > verdict.order_type_count) g_implication_ok = false;
    if (verdict.order_type_count >= self_power(k)) g_implication_ok = false;
  }
}

// -------------------------------------------------------------------------

void criterion_1_fixture() {
  const auto start = Clock::now();
  InducedUniverse u = testutil::figure_fragment();  // {0..14}^2 plus the five edges
  std::vector<Label> labels = terminal_labels(u, LabelVariant::Plain);
  bool ok = true;
  ok &= labels[u.require_index(Vertex{5, 9})] == 3;
  ok &= labels[u.require_index(Vertex{4, 2})] == 2;
  ok &= labels[u.require_index(Vertex{10, 3})] == 3;
  ok &= terminal_set(u, Vertex{5, 9}) == std::vector<Vertex>{Vertex{3, 4}, Vertex{5, 3}};
  const double elapsed = seconds_since(start);
  ok &= elapsed < 1.0;
  std::ostringstream what;
  what << "fixture labels t(5,9)=3 t(4,2)=2 t(10,3)=3, terminal set {(3,4),(5,3)} ("
       << elapsed << "s < 1s)";
  report(1, ok, what.str());
}

std::vector<InducedUniverse> g_corpus;  // shared by criteria 2 and 3

void criterion_2_oracle_equivalence() {
  const auto start = Clock::now();
  std::mt19937_64 rng(20260810);
  std::size_t mismatches = 0;
  while (g_corpus.size() < 500) {
    const int k = g_corpus.size() % 2 ? 3 : 2;
    InducedUniverse u = testutil::small_random_universe(rng, k, 12);
    if (u.empty()) continue;
    g_corpus.push_back(u);
    std::vector<Label> dp = terminal_labels(u, LabelVariant::Plain);
    for (std::uint32_t i = 0; i < u.size(); ++i) {
      if (dp[i] != brute_force_terminal_label(u, u.vertex(i))) ++mismatches;
    }
  }
  const double elapsed = seconds_since(start);
  const bool ok = mismatches == 0 && elapsed < 60.0;
  std::ostringstream what;
  what << "dynamic programming equals oracle on " << g_corpus.size() << " universes, "
       << mismatches << " mismatches (" << elapsed << "s < 60s)";
  report(2, ok, what.str());
}

void criterion_3_relaxed_lemmas() {
  bool ok = true;
  std::size_t violations = 0;
  const auto library = builtin_rule_library();
  for (const InducedUniverse& u : g_corpus) {
    std::vector<Label> relaxed = terminal_labels(u, LabelVariant::Relaxed);
    for (std::uint32_t i = 0; i < u.size(); ++i) {
      if (relaxed[i] > u.max_of(i)) ++violations;
      if ((relaxed[i] == u.max_of(i)) != (u.out_degree(i) == 0)) ++violations;
    }
    for (const auto& [name, rules] : library) {  // five rule sets, >= 3 required
      std::vector<char> defined;
      std::vector<Label> sel = selection_labels(u, rules, LabelVariant::Relaxed, &defined);
      for (std::uint32_t i = 0; i < u.size(); ++i) {
        if (sel[i] > u.max_of(i)) ++violations;
        if ((sel[i] == u.max_of(i)) != !defined[i]) ++violations;
      }
    }
  }
  ok = violations == 0;
  std::ostringstream what;
  what << "relaxed-label lemmas on " << g_corpus.size() << " universes x " << library.size()
       << " rule sets, " << violations << " violations";
  report(3, ok, what.str());
}

void criterion_4_jump_free() {
  const auto start = Clock::now();
  bool ok = true;
  std::ostringstream what;
  what << "jump-free:";
  auto run_family = [&](const LabelingFamily& family, bool expect_clean) {
    FamilyConditionReport rep = check_family_conditions(family, 200, 1729);
    const bool clean = rep.counterexamples.empty() && rep.reflexive_violations == 0;
    const bool enough = rep.conforming_scenarios >= 200;
    if (expect_clean) {
      ok &= clean && enough;
      what << ' ' << family.name << "=" << rep.counterexamples.size() << "ce";
    } else {
      ok &= !rep.counterexamples.empty();
      what << ' ' << family.name << "=" << rep.counterexamples.size() << "ce(expected>=1)";
    }
  };
  run_family(relaxed_terminal_family(), true);
  for (const char* preset : {"first", "min-report", "never"}) {
    run_family(relaxed_selection_family(*builtin_rule_set(preset), preset), true);
  }
  run_family(plain_terminal_family(), false);
  const double elapsed = seconds_since(start);
  ok &= elapsed < 120.0;
  what << " (" << elapsed << "s < 120s)";
  report(4, ok, what.str());
}

void criterion_6_transfer() {
  std::mt19937_64 rng(424242);
  SelectionRuleSet first = *builtin_rule_set("first");
  std::size_t samples = 0, violations = 0, transfers = 0;
  while (samples < 200) {
    const int p = 1 + static_cast<int>(rng() % 3);
    std::set<Coord> axis_set;
    while (axis_set.size() < static_cast<std::size_t>(p)) {
      axis_set.insert(static_cast<Coord>(rng() % 7));
    }
    Cube cube({axis_set.begin(), axis_set.end()}, 2);
    std::vector<Vertex> vertices = cube_points(cube);
    for (int extra = static_cast<int>(rng() % 5); extra > 0; --extra) {
      vertices.push_back(random_vertex(rng, 2, 7));
    }
    EdgePredicate theta{rng(), 200'000 + static_cast<std::uint32_t>(rng() % 600'000)};
    InducedUniverse u = induce_from_predicate(2, std::move(vertices), theta);
    ++samples;

    auto transfer = [&](std::vector<Label> relaxed, std::vector<Label> plain) {
      RegularityVerdict rv = check_regressive_regularity(u, relaxed, cube);
      note_verdict(rv, 2);
      RegularityVerdict pv = check_regressive_regularity(u, plain, cube);
      note_verdict(pv, 2);
      if (rv.regressively_regular) {
        ++transfers;
        if (!pv.regressively_regular) ++violations;
      }
    };
    transfer(terminal_labels(u, LabelVariant::Relaxed), terminal_labels(u, LabelVariant::Plain));
    transfer(selection_labels(u, first, LabelVariant::Relaxed),
             selection_labels(u, first, LabelVariant::Plain));
  }
  const bool ok = violations == 0 && samples >= 200;
  std::ostringstream what;
  what << "relaxed->plain transfer on " << samples << " samples (" << transfers
       << " regular cases), " << violations << " violations";
  report(6, ok, what.str());
}

void criterion_5_implication() {
  // a dedicated sweep on top of every verdict recorded so far
  std::mt19937_64 rng(515151);
  for (int round = 0; round < 60; ++round) {
    const int k = 2 + round % 3;
    const int p = 1 + static_cast<int>(rng() % 2);
    std::set<Coord> axis_set;
    while (axis_set.size() < static_cast<std::size_t>(p)) {
      axis_set.insert(static_cast<Coord>(rng() % 5));
    }
    Cube cube({axis_set.begin(), axis_set.end()}, k);
    std::vector<Vertex> vertices = cube_points(cube);
    for (int extra = 3; extra > 0; --extra) vertices.push_back(random_vertex(rng, k, 5));
    EdgePredicate theta{rng(), 400'000};
    InducedUniverse u = induce_from_predicate(k, std::move(vertices), theta);
    note_verdict(check_regressive_regularity(u, terminal_labels(u, LabelVariant::Plain), cube), k);
  }
  bool counts_ok = enumerate_order_types(2).size() == 3 && self_power(2) == 4 &&
                   enumerate_order_types(3).size() == 13 && self_power(3) == 27 &&
                   enumerate_order_types(4).size() == 75 && self_power(4) == 256;
  const bool ok = g_implication_ok && counts_ok && g_verdicts_checked >= 260;
  std::ostringstream what;
  what << "regular => significant-count <= type-count on " << g_verdicts_checked
       << " verdicts; type counts 3<4, 13<27, 75<256";
  report(5, ok, what.str());
}

void criterion_7_witness_search() {
  bool ok = true;
  std::ostringstream what;

  const auto start = Clock::now();
  CliResult edgeless = run_cli("search-cube --p 3 --variant terminal --family edgeless --k 2 --max-axis 5");
  const double elapsed = seconds_since(start);
  ok &= edgeless.exit_code == 0;
  ok &= edgeless.output.find("# witness cube={0,1,2}") != std::string::npos;
  ok &= edgeless.output.find("significant-count=0") != std::string::npos;
  ok &= elapsed < 1.0;
  what << "edgeless witness {0,1,2} with 0 significant labels (" << elapsed << "s < 1s)";

  // library-level cross-check plus verdict accounting
  DomainSpec domain;
  domain.style = GenStyle::Edgeless;
  domain.k = 2;
  SearchBudget budget;
  budget.p = 3;
  budget.max_axis_value = 5;
  SearchOutcome lib = search_cube_witness(domain, LabelingKind::Terminal, {}, budget);
  ok &= lib.witness && lib.witness->cube.axis == std::vector<Coord>{0, 1, 2} &&
        lib.witness->significant_count == 0;
  if (lib.witness) note_verdict(lib.witness->verdict, 2);

  const std::string maximal_file = g_scratch + "/maximal.txt";
  CliResult gen = run_cli("gen --k 2 --style maximal-theta --box 5 -o " + maximal_file);
  ok &= gen.exit_code == 0;
  CliResult hf = run_cli("search-cube --p 2 --variant selection --rules never --universe " +
                         maximal_file + " --max-axis 5");
  ok &= hf.exit_code == 0;
  ok &= hf.output.find("# search status=witness") != std::string::npos;
  ok &= hf.output.find("NEITHER") == std::string::npos;
  ok &= hf.output.find("CONSTANT-LOW") == std::string::npos;  // all types HIGH
  ok &= hf.output.find("HIGH") != std::string::npos;
  what << "; maximal-theta/never witness all HIGH";

  DomainSpec hf_domain;
  hf_domain.explicit_universe = load_universe_file(maximal_file);
  SearchBudget hf_budget;
  hf_budget.p = 2;
  hf_budget.max_axis_value = 5;
  SearchOutcome hf_lib =
      search_cube_witness(hf_domain, LabelingKind::Selection, *builtin_rule_set("never"), hf_budget);
  ok &= hf_lib.witness.has_value();
  if (hf_lib.witness) {
    note_verdict(hf_lib.witness->verdict, 2);
    for (const TypeVerdict& tv : hf_lib.witness->verdict.per_type) ok &= tv.cls == TypeClass::High;
  }

  report(7, ok, what.str());
}

void criterion_8_determinism() {
  bool ok = true;
  std::string first_failure;

  const std::string uni = g_scratch + "/d_universe.txt";
  const std::string lab = g_scratch + "/d_labeling.txt";
  run_cli("gen --k 2 --style random-downward --density 0.5 --box 5 --seed 31 -o " + uni);
  run_cli("label " + uni + " --variant plain -o " + lab);

  const std::vector<std::pair<std::string, std::string>> invocations = {
      {"gen", "gen --k 2 --style random-downward --density 0.5 --box 5 --seed 31"},
      {"gen-chain", "gen --k 3 --style chain --box 4"},
      {"label", "label " + uni + " --variant relaxed"},
      {"label-sel", "label-sel " + uni + " --rules committee --variant relaxed"},
      {"sig", "sig " + lab + " --scope all"},
      {"sig-json", "sig " + lab + " --scope cube --cube 0..3 --json"},
      {"check-rr", "check-rr " + lab + " --cube 0,1,2"},
      {"verify-family", "verify-family --family terminal --trials 40 --seed 9"},
      {"verify-family-sel", "verify-family --family selection --rules min-report --trials 30 --seed 9"},
      {"search-cube", "search-cube --p 2 --variant terminal --family random-downward --density 0.4 "
                      "--k 2 --max-axis 5 --seed 11"},
      {"search-cube-jobs", "search-cube --p 2 --variant terminal --family random-downward "
                           "--density 0.4 --k 2 --max-axis 5 --seed 11 --jobs 4"},
      {"render", "render " + uni + " --labeling " + lab},
      {"render-svg", "render " + uni + " --svg"},
  };
  for (const auto& [name, args] : invocations) {
    CliResult once = run_cli(args);
    CliResult twice = run_cli(args);
    if (once.output != twice.output || once.exit_code != twice.exit_code) {
      ok = false;
      if (first_failure.empty()) first_failure = name;
    }
  }
  // the two search runs (1 worker vs 4) must also agree with each other
  CliResult seq = run_cli(invocations[9].second);
  CliResult par = run_cli(invocations[10].second);
  if (seq.output != par.output) {
    ok = false;
    if (first_failure.empty()) first_failure = "jobs-invariance";
  }

  std::ostringstream what;
  what << "byte-identical reruns across " << invocations.size() << " invocations";
  if (!ok) what << " (first failure: " << first_failure << ")";
  report(8, ok, what.str());
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <path-to-lmv-cli> <scratch-dir>\n";
    return 2;
  }
  g_cli = argv[1];
  g_scratch = argv[2];
  std::filesystem::create_directories(g_scratch);

  criterion_1_fixture();
  criterion_2_oracle_equivalence();
  criterion_3_relaxed_lemmas();
  criterion_4_jump_free();
  criterion_6_transfer();
  criterion_5_implication();  // consumes verdicts recorded by earlier criteria
  criterion_7_witness_search();
  criterion_8_determinism();

  if (g_failures == 0) {
    std::printf("all acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d criteria failed\n", g_failures);
  return 1;
}

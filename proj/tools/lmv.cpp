// lmv: command-line front end: universe generation, terminal and selection
// labeling, significant-label and regressive-regularity reports, family
// verification, cube-witness search, DOT/SVG rendering.
//
// Exit codes: 0 success / witness found / verification clean;
//             1 exhaustion, no witness, or counterexamples found;
//             2 validation or usage error;
//             3 internal error.

#include <filesystem>
#include <iostream>

#include "CLI11.hpp"
#include "lmv/generate.hpp"
#include "lmv/io.hpp"
#include "lmv/regularity.hpp"
#include "lmv/render.hpp"
#include "lmv/search.hpp"
#include "lmv/selection.hpp"
#include "lmv/terminal.hpp"

namespace {

void emit(const std::string& output_path, const std::string& content) {
  if (output_path.empty()) {
    std::cout << content;
  } else {
    lmv::write_text_file(output_path, content);
  }
}

lmv::LabelVariant variant_from_name(const std::string& name) {
  if (name == "plain") return lmv::LabelVariant::Plain;
  if (name == "relaxed") return lmv::LabelVariant::Relaxed;
  throw lmv::Error(lmv::ErrorKind::ParseError, "unknown variant '" + name + "'");
}

// --rules accepts either a rule file path or a builtin preset name.
lmv::SelectionRuleSet resolve_rules(const std::string& spec, int arity_cap) {
  if (std::filesystem::exists(spec)) {
    return lmv::parse_rule_set_text(lmv::read_text_file(spec));
  }
  if (auto builtin = lmv::builtin_rule_set(spec, arity_cap)) return *std::move(builtin);
  throw lmv::Error(lmv::ErrorKind::ParseError,
                   "'" + spec + "' is neither a rule file nor a builtin rule set");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite downward-directed lattice universes: labelings, regularity, witness search"};
  app.require_subcommand(1);
  int exit_code = 0;

  // ---- gen ----
  auto* gen = app.add_subcommand("gen", "generate a universe file");
  struct {
    int k = 2;
    std::string style = "edgeless";
    lmv::Coord box = 3;
    double density = 0.5;
    std::uint64_t seed = lmv::kDefaultSeed;
    std::string output;
  } gen_opts;
  gen->add_option("--k", gen_opts.k, "dimension")->check(CLI::Range(2, 16));
  gen->add_option("--style", gen_opts.style, "edgeless|random-downward|maximal-theta|chain");
  gen->add_option("--box", gen_opts.box, "coordinate bound; vertices fill {0..box}^k")
      ->check(CLI::NonNegativeNumber);
  gen->add_option("--density", gen_opts.density, "edge probability for random-downward")
      ->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", gen_opts.seed, "rng seed")->envname("LMV_SEED");
  gen->add_option("-o,--output", gen_opts.output, "output file (default stdout)");
  gen->callback([&] {
    auto style = lmv::gen_style_from_name(gen_opts.style);
    if (!style) throw lmv::Error(lmv::ErrorKind::ParseError, "unknown style '" + gen_opts.style + "'");
    lmv::InducedUniverse u =
        lmv::generate_universe(*style, gen_opts.k, gen_opts.box, gen_opts.density, gen_opts.seed);
    emit(gen_opts.output, lmv::serialize_universe(u));
  });

  // ---- label ----
  auto* label = app.add_subcommand("label", "compute the terminal labeling of a universe");
  struct {
    std::string universe;
    std::string variant = "plain";
    std::string output;
  } label_opts;
  label->add_option("universe", label_opts.universe, "universe file")->required();
  label->add_option("--variant", label_opts.variant, "plain|relaxed");
  label->add_option("-o,--output", label_opts.output, "output file (default stdout)");
  label->callback([&] {
    lmv::InducedUniverse u = lmv::load_universe_file(label_opts.universe);
    std::vector<lmv::Label> labels = lmv::terminal_labels(u, variant_from_name(label_opts.variant));
    emit(label_opts.output, lmv::serialize_labeling(u, labels));
  });

  // ---- label-sel ----
  auto* label_sel = app.add_subcommand("label-sel", "compute a selection labeling of a universe");
  struct {
    std::string universe;
    std::string rules = "first";
    std::string variant = "plain";
    int arity_cap = lmv::kDefaultArityCap;
    std::string output;
  } sel_opts;
  label_sel->add_option("universe", sel_opts.universe, "universe file")->required();
  label_sel->add_option("--rules", sel_opts.rules, "rule file or builtin name");
  label_sel->add_option("--variant", sel_opts.variant, "plain|relaxed");
  label_sel->add_option("--arity-cap", sel_opts.arity_cap, "tuple arity cap for builtin rule sets")
      ->check(CLI::PositiveNumber);
  label_sel->add_option("-o,--output", sel_opts.output, "output file (default stdout)");
  label_sel->callback([&] {
    lmv::InducedUniverse u = lmv::load_universe_file(sel_opts.universe);
    lmv::SelectionRuleSet rules = resolve_rules(sel_opts.rules, sel_opts.arity_cap);
    std::vector<lmv::Label> labels =
        lmv::selection_labels(u, rules, variant_from_name(sel_opts.variant));
    emit(sel_opts.output, lmv::serialize_labeling(u, labels));
  });

  // ---- sig ----
  auto* sig = app.add_subcommand("sig", "report significant labels of a labeling");
  struct {
    std::string labeling;
    std::string scope = "all";
    std::string cube;
    bool json = false;
    std::string output;
  } sig_opts;
  sig->add_option("labeling", sig_opts.labeling, "labeling file")->required();
  sig->add_option("--scope", sig_opts.scope, "all|cube");
  sig->add_option("--cube", sig_opts.cube, "axis spec, e.g. 0,1,2 or 0..5");
  sig->add_flag("--json", sig_opts.json, "emit the machine-readable block");
  sig->add_option("-o,--output", sig_opts.output, "output file (default stdout)");
  sig->callback([&] {
    lmv::LabeledUniverse lab = lmv::load_labeling_file(sig_opts.labeling);
    std::vector<lmv::Vertex> scope;
    std::string scope_desc;
    if (sig_opts.scope == "all") {
      scope = lab.universe.vertices();
      scope_desc = "all";
    } else if (sig_opts.scope == "cube") {
      if (sig_opts.cube.empty()) {
        throw lmv::Error(lmv::ErrorKind::ParseError, "--scope cube requires --cube <E-spec>");
      }
      lmv::Cube cube(lmv::parse_axis_spec(sig_opts.cube), lab.universe.dimension());
      scope = lmv::cube_points(cube);
      scope_desc = "cube" + lmv::to_string(cube);
    } else {
      throw lmv::Error(lmv::ErrorKind::ParseError, "unknown scope '" + sig_opts.scope + "'");
    }
    lmv::SignificantLabelReport report = lmv::significant_labels(lab.universe, lab.labels, scope);
    emit(sig_opts.output, sig_opts.json ? lmv::format_significant_report_json(report, scope_desc)
                                        : lmv::format_significant_report(report, scope_desc));
  });

  // ---- check-rr ----
  auto* check_rr = app.add_subcommand("check-rr", "check regressive regularity over a cube");
  struct {
    std::string labeling;
    std::string cube;
    bool json = false;
    std::string output;
  } rr_opts;
  check_rr->add_option("labeling", rr_opts.labeling, "labeling file")->required();
  check_rr->add_option("--cube", rr_opts.cube, "axis spec, e.g. 0,1,2 or 0..5")->required();
  check_rr->add_flag("--json", rr_opts.json, "emit the machine-readable block");
  check_rr->add_option("-o,--output", rr_opts.output, "output file (default stdout)");
  check_rr->callback([&] {
    lmv::LabeledUniverse lab = lmv::load_labeling_file(rr_opts.labeling);
    lmv::Cube cube(lmv::parse_axis_spec(rr_opts.cube), lab.universe.dimension());
    lmv::RegularityVerdict verdict = lmv::check_regressive_regularity(lab.universe, lab.labels, cube);
    emit(rr_opts.output, rr_opts.json
                             ? lmv::format_regularity_report_json(verdict, lab.universe.dimension())
                             : lmv::format_regularity_report(verdict, lab.universe.dimension()));
  });

  // ---- verify-family ----
  auto* verify = app.add_subcommand("verify-family", "sampled full/reflexive/jump-free checks");
  struct {
    std::string family;
    std::string rules = "first";
    int trials = 200;
    std::uint64_t seed = lmv::kDefaultSeed;
    int k = 2;
    int arity_cap = lmv::kDefaultArityCap;
    bool json = false;
    std::string output;
  } verify_opts;
  verify->add_option("--family", verify_opts.family, "terminal|selection|broken-terminal")->required();
  verify->add_option("--rules", verify_opts.rules, "rule file or builtin name (selection only)");
  verify->add_option("--trials", verify_opts.trials, "conforming scenarios to check")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", verify_opts.seed, "rng seed")->envname("LMV_SEED");
  verify->add_option("--k", verify_opts.k, "scenario dimension")->check(CLI::Range(2, 16));
  verify->add_option("--arity-cap", verify_opts.arity_cap, "tuple arity cap for builtin rule sets")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--json", verify_opts.json, "emit the machine-readable block");
  verify->add_option("-o,--output", verify_opts.output, "output file (default stdout)");
  verify->callback([&] {
    lmv::LabelingFamily family;
    if (verify_opts.family == "terminal") {
      family = lmv::relaxed_terminal_family();
    } else if (verify_opts.family == "selection") {
      family = lmv::relaxed_selection_family(resolve_rules(verify_opts.rules, verify_opts.arity_cap),
                                             verify_opts.rules);
    } else if (verify_opts.family == "broken-terminal") {
      family = lmv::plain_terminal_family();
    } else {
      throw lmv::Error(lmv::ErrorKind::ParseError, "unknown family '" + verify_opts.family + "'");
    }
    lmv::ScenarioConfig config;
    config.k = verify_opts.k;
    lmv::FamilyConditionReport report =
        lmv::check_family_conditions(family, verify_opts.trials, verify_opts.seed, config);
    emit(verify_opts.output, verify_opts.json ? lmv::format_family_report_json(report)
                                              : lmv::format_family_report(report));
    if (!report.counterexamples.empty() || report.reflexive_violations > 0) exit_code = 1;
  });

  // ---- search-cube ----
  auto* search = app.add_subcommand("search-cube", "search for a regressively regular cube");
  struct {
    int p = 1;
    std::string variant = "terminal";
    std::string rules = "first";
    lmv::Coord max_axis = 5;
    std::string universe;
    std::string family = "edgeless";
    int k = 2;
    double density = 0.5;
    std::uint64_t seed = lmv::kDefaultSeed;
    double time_limit = 0.0;
    int jobs = 1;
    std::size_t max_domain = 200'000;
    int arity_cap = lmv::kDefaultArityCap;
    bool json = false;
    std::string output;
  } search_opts;
  search->add_option("--p", search_opts.p, "axis size |E|")->required()->check(CLI::PositiveNumber);
  search->add_option("--variant", search_opts.variant, "terminal|selection");
  search->add_option("--rules", search_opts.rules, "rule file or builtin name (selection only)");
  search->add_option("--max-axis", search_opts.max_axis, "axis values searched in {0..max-axis}")
      ->required()
      ->check(CLI::NonNegativeNumber);
  search->add_option("--universe", search_opts.universe, "explicit universe file (fixes the domain)");
  search->add_option("--family", search_opts.family,
                     "domain family when no universe file: edgeless|random-downward|maximal-theta|chain");
  search->add_option("--k", search_opts.k, "dimension for generated domains")->check(CLI::Range(2, 16));
  search->add_option("--density", search_opts.density, "edge density for random-downward domains")
      ->check(CLI::Range(0.0, 1.0));
  search->add_option("--seed", search_opts.seed, "rng seed for generated domains")->envname("LMV_SEED");
  search->add_option("--time-limit", search_opts.time_limit, "seconds; 0 = unlimited");
  search->add_option("--jobs", search_opts.jobs, "worker threads")->check(CLI::PositiveNumber);
  search->add_option("--max-domain", search_opts.max_domain, "largest domain size accepted");
  search->add_option("--arity-cap", search_opts.arity_cap, "tuple arity cap for builtin rule sets")
      ->check(CLI::PositiveNumber);
  search->add_flag("--json", search_opts.json, "emit the machine-readable block");
  search->add_option("-o,--output", search_opts.output, "output file (default stdout)");
  search->callback([&] {
    lmv::DomainSpec domain;
    if (!search_opts.universe.empty()) {
      domain.explicit_universe = lmv::load_universe_file(search_opts.universe);
    } else {
      auto style = lmv::gen_style_from_name(search_opts.family);
      if (!style) {
        throw lmv::Error(lmv::ErrorKind::ParseError, "unknown family '" + search_opts.family + "'");
      }
      domain.style = *style;
      domain.k = search_opts.k;
      domain.density = search_opts.density;
      domain.seed = search_opts.seed;
    }
    if (search_opts.variant != "terminal" && search_opts.variant != "selection") {
      throw lmv::Error(lmv::ErrorKind::ParseError, "unknown variant '" + search_opts.variant + "'");
    }
    const lmv::LabelingKind kind = search_opts.variant == "selection" ? lmv::LabelingKind::Selection
                                                                      : lmv::LabelingKind::Terminal;
    lmv::SelectionRuleSet rules;
    if (kind == lmv::LabelingKind::Selection) {
      rules = resolve_rules(search_opts.rules, search_opts.arity_cap);
    }
    lmv::SearchBudget budget;
    budget.p = search_opts.p;
    budget.max_axis_value = search_opts.max_axis;
    budget.max_domain_size = search_opts.max_domain;
    budget.jobs = search_opts.jobs;
    if (search_opts.time_limit > 0.0) {
      budget.time_limit =
          std::chrono::milliseconds(static_cast<std::int64_t>(search_opts.time_limit * 1000.0));
    }
    lmv::SearchOutcome outcome = lmv::search_cube_witness(domain, kind, rules, budget);
    const int dim = domain.explicit_universe ? domain.explicit_universe->dimension() : search_opts.k;
    emit(search_opts.output, search_opts.json ? lmv::format_search_report_json(outcome, kind, dim)
                                              : lmv::format_search_report(outcome, kind, dim));
    if (!outcome.witness) exit_code = 1;
  });

  // ---- render ----
  auto* render = app.add_subcommand("render", "render a universe (plus optional labeling) as DOT or SVG");
  struct {
    std::string universe;
    std::string labeling;
    bool svg = false;
    std::string output;
  } render_opts;
  render->add_option("universe", render_opts.universe, "universe file")->required();
  render->add_option("--labeling", render_opts.labeling, "labeling file over the same universe");
  render->add_flag("--svg", render_opts.svg, "emit SVG instead of DOT (k=2 only)");
  render->add_option("-o,--output", render_opts.output, "output file (default stdout)");
  render->callback([&] {
    lmv::InducedUniverse u = lmv::load_universe_file(render_opts.universe);
    std::vector<lmv::Label> labels;
    const std::vector<lmv::Label>* labels_ptr = nullptr;
    if (!render_opts.labeling.empty()) {
      lmv::LabeledUniverse lab = lmv::load_labeling_file(render_opts.labeling);
      if (lab.universe != u) {
        throw lmv::Error(lmv::ErrorKind::InconsistentFiles,
                         "labeling file describes a different universe");
      }
      labels = std::move(lab.labels);
      labels_ptr = &labels;
    }
    emit(render_opts.output,
         render_opts.svg ? lmv::render_svg(u, labels_ptr) : lmv::render_dot(u, labels_ptr));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const lmv::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    switch (e.kind()) {
      case lmv::ErrorKind::BudgetExceeded:
        // A search that ran out of budget is an outcome, not a usage error.
        return 1;
      case lmv::ErrorKind::MissingLowerLabel:
        return 3;
      default:
        return 2;
    }
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
  return exit_code;
}

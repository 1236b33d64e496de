#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "lmv/io.hpp"
#include "lmv/selection.hpp"
#include "test_util.hpp"

using namespace lmv;

namespace {

SelectionRuleSet rules_from(const std::string& text) { return parse_rule_set_text(text); }

InducedUniverse maximal_universe(std::vector<Vertex> vertices, int k = 2) {
  EdgePredicate theta;  // density 1: every downward pair
  return induce_from_predicate(k, std::move(vertices), theta);
}

}  // namespace

TEST_CASE("adjacency reads the stored edge set") {
  InducedUniverse u = testutil::figure_fragment();
  CHECK(adjacency(u, Vertex{3, 8}) == std::vector<Vertex>{Vertex{2, 6}, Vertex{5, 3}});
  CHECK(adjacency(u, Vertex{4, 2}).empty());
  CHECK_THROWS_AS(adjacency(u, Vertex{99, 99}), Error);

  InducedUniverse m = maximal_universe({Vertex{0, 0}, Vertex{1, 1}, Vertex{2, 2}});
  CHECK(adjacency(m, Vertex{2, 2}) == std::vector<Vertex>{Vertex{0, 0}, Vertex{1, 1}});
}

TEST_CASE("rule grammar round-trips and validates") {
  const char* text =
      "arity_cap 3\n"
      "theta file\n"
      "rule 1 true 1\n"
      "rule 2 n1<n2 1\n"
      "rule 2 n1!=n2&y1[0]>=3 median\n"
      "rule 3 min(y2)<=max(x)&n3==0 argmax\n";
  SelectionRuleSet rules = rules_from(text);
  CHECK(rules.rules.size() == 4);
  CHECK(rules.arity_cap == 3);
  CHECK(rules.theta == ThetaMode::FromUniverse);
  CHECK(serialize_rule_set(rules) == text);
  CHECK(parse_rule_set_text(serialize_rule_set(rules)) == rules);

  // headers may come after rules, and comments are ignored
  SelectionRuleSet reordered = rules_from("# preset\nrule 2 n1<n2 2\narity_cap 2\ntheta maximal\n");
  CHECK(reordered.arity_cap == 2);
  CHECK(reordered.theta == ThetaMode::Maximal);

  CHECK_THROWS_AS(rules_from("rule 4 true 1\n"), Error);    // arity above the default cap
  CHECK_THROWS_AS(rules_from("rule 2 true 3\n"), Error);    // selector out of range
  CHECK_THROWS_AS(rules_from("rule 1 n2==0 1\n"), Error);   // member out of range
  CHECK_THROWS_AS(rules_from("rule 1 bogus 1\n"), Error);   // unparsable guard
  CHECK_THROWS_AS(rules_from("rule 1 true yes\n"), Error);  // unparsable selector
  CHECK_THROWS_AS(rules_from("arity_cap 0\n"), Error);
}

TEST_CASE("selectors return positions, so rules can only pick input reports") {
  Vertex y1{1, 2}, y2{0, 3};
  std::vector<Report> inputs{{&y1, 7}, {&y2, 4}};

  CHECK(selected_position(Selector{SelectorKind::Index, 2}, inputs) == 2);
  CHECK(selected_position(Selector{SelectorKind::ArgMin, 1}, inputs) == 2);
  CHECK(selected_position(Selector{SelectorKind::ArgMax, 1}, inputs) == 1);
  CHECK(selected_position(Selector{SelectorKind::Median, 1}, inputs) == 2);  // lower median

  // ties break to the lowest position
  std::vector<Report> tied{{&y1, 4}, {&y2, 4}};
  CHECK(selected_position(Selector{SelectorKind::ArgMin, 1}, tied) == 1);
  CHECK(selected_position(Selector{SelectorKind::ArgMax, 1}, tied) == 1);

  std::mt19937_64 rng(5150);
  for (int round = 0; round < 200; ++round) {
    std::vector<Report> reports;
    std::vector<Label> values;
    std::size_t n = 1 + rng() % 3;
    for (std::size_t i = 0; i < n; ++i) {
      values.push_back(static_cast<Label>(rng() % 10));
      reports.push_back(Report{nullptr, values.back()});
    }
    for (SelectorKind kind : {SelectorKind::ArgMin, SelectorKind::ArgMax, SelectorKind::Median}) {
      int pos = selected_position(Selector{kind, 1}, reports);
      REQUIRE(pos >= 1);
      REQUIRE(pos <= static_cast<int>(n));
      // the selected value is one of the input reports by construction
      CHECK(std::count(values.begin(), values.end(), reports[static_cast<std::size_t>(pos - 1)].value) > 0);
    }
  }
}

TEST_CASE("guards evaluate comparisons over reports, member vertices, and the apex") {
  Vertex apex{5, 2};
  Vertex y1{1, 4};
  std::vector<Report> inputs{{&y1, 3}};
  auto fires = [&](const std::string& guard_text) {
    SelectionRuleSet rs = rules_from("rule 1 " + guard_text + " 1\n");
    return guard_fires(rs.rules[0].guard, apex, inputs);
  };
  CHECK(fires("true"));
  CHECK(fires("n1==3"));
  CHECK(!fires("n1<3"));
  CHECK(fires("y1[0]==1&y1[1]==4"));
  CHECK(fires("min(y1)==1"));
  CHECK(fires("max(y1)==4"));
  CHECK(fires("x[0]==5"));
  CHECK(fires("min(x)==2"));
  CHECK(fires("max(x)>=n1"));
  CHECK(!fires("max(x)<n1"));
  // coordinate index out of range is a rule error at evaluation time
  SelectionRuleSet bad = rules_from("rule 1 y1[7]==0 1\n");
  CHECK_THROWS_AS(guard_fires(bad.rules[0].guard, apex, inputs), Error);
}

TEST_CASE("phi_set: no neighbors means empty phi") {
  InducedUniverse u = testutil::figure_fragment_small();
  SelectionRuleSet first = *builtin_rule_set("first");
  CHECK(phi_set(u, Vertex{4, 2}, first, {}).empty());
}

TEST_CASE("phi_set with arity-1 always-fire collects the neighbor labels") {
  InducedUniverse u = testutil::figure_fragment_small();
  SelectionRuleSet first = *builtin_rule_set("first");
  std::map<Vertex, Label> lower{{Vertex{2, 6}, 11}, {Vertex{5, 3}, 4}};
  CHECK(phi_set(u, Vertex{3, 8}, first, lower) == std::set<Label>{4, 11});

  // missing lower label is the induction-order error
  std::map<Vertex, Label> partial{{Vertex{2, 6}, 11}};
  CHECK_THROWS_AS(phi_set(u, Vertex{3, 8}, first, partial), Error);
}

TEST_CASE("phi_set guarded pair rule selects only from firing tuples") {
  // two neighbors labeled 4 and 7; the rule fires iff n1 < n2 and selects n1
  InducedUniverse u = testutil::figure_fragment_small();
  SelectionRuleSet rules = rules_from("arity_cap 2\nrule 2 n1<n2 1\n");
  std::map<Vertex, Label> lower{{Vertex{2, 6}, 4}, {Vertex{5, 3}, 7}};
  // ordered pairs (4,4),(4,7),(7,4),(7,7); only (4,7) fires
  CHECK(phi_set(u, Vertex{3, 8}, rules, lower) == std::set<Label>{4});
}

TEST_CASE("label_all_selection on the edgeless universe") {
  RawUniverse raw;
  raw.dimension = 2;
  raw.vertices = {Vertex{1, 4}, Vertex{2, 2}, Vertex{7, 0}};
  InducedUniverse u = validate_universe(raw);
  for (const char* preset : {"first", "min-report", "max-report", "committee", "never"}) {
    SelectionLabeling lab = label_all_selection(u, *builtin_rule_set(preset), LabelVariant::Plain);
    for (std::uint32_t i = 0; i < u.size(); ++i) {
      CHECK(lab.labels[i] == u.min_of(i));
      CHECK(!lab.phi_defined[i]);
    }
  }
}

TEST_CASE("first rules on the diagonal chain: hand induction") {
  InducedUniverse chain = testutil::diagonal_chain({9, 5, 2});
  SelectionRuleSet first = *builtin_rule_set("first");

  SelectionLabeling plain = label_all_selection(chain, first, LabelVariant::Plain);
  CHECK(plain.labels[chain.require_index(Vertex{2, 2})] == 2);
  CHECK(plain.labels[chain.require_index(Vertex{5, 5})] == 2);
  CHECK(plain.labels[chain.require_index(Vertex{9, 9})] == 2);

  SelectionLabeling relaxed = label_all_selection(chain, first, LabelVariant::Relaxed);
  CHECK(relaxed.labels[chain.require_index(Vertex{2, 2})] == 2);  // sink: phi empty, max = 2
  CHECK(relaxed.labels[chain.require_index(Vertex{5, 5})] == 2);
  CHECK(relaxed.labels[chain.require_index(Vertex{9, 9})] == 2);
  CHECK(!relaxed.phi_defined[chain.require_index(Vertex{2, 2})]);
  CHECK(relaxed.phi_defined[chain.require_index(Vertex{9, 9})]);
}

TEST_CASE("never preset labels min everywhere; first on a maximal universe") {
  std::mt19937_64 rng(31);
  InducedUniverse u = testutil::small_random_universe(rng);
  SelectionLabeling lab = label_all_selection(u, *builtin_rule_set("never"), LabelVariant::Plain);
  for (std::uint32_t i = 0; i < u.size(); ++i) {
    CHECK(lab.labels[i] == u.min_of(i));
    CHECK(!lab.phi_defined[i]);
  }

  InducedUniverse m = maximal_universe({Vertex{1, 1}, Vertex{2, 2}});
  SelectionLabeling first = label_all_selection(m, *builtin_rule_set("first"), LabelVariant::Plain);
  CHECK(first.labels[m.require_index(Vertex{1, 1})] == 1);
  CHECK(first.labels[m.require_index(Vertex{2, 2})] == 1);
}

TEST_CASE("min-report at arity cap 1 equals first") {
  std::mt19937_64 rng(64);
  for (int round = 0; round < 20; ++round) {
    InducedUniverse u = testutil::small_random_universe(rng);
    auto a = selection_labels(u, *builtin_rule_set("min-report", 1), LabelVariant::Plain);
    auto b = selection_labels(u, *builtin_rule_set("first", 1), LabelVariant::Plain);
    CHECK(a == b);
  }
}

TEST_CASE("selection labeling agrees with the literal tuple-enumeration oracle") {
  std::mt19937_64 rng(90210);
  auto library = builtin_rule_library();
  // plus a rule set that inspects member coordinates, exercising the slow path
  SelectionRuleSet coord_rules = rules_from(
      "arity_cap 2\n"
      "rule 1 min(y1)<=2 1\n"
      "rule 2 y1[0]!=y2[0]&n1>=n2 2\n");
  int rounds = 0;
  while (rounds < 30) {
    InducedUniverse u = testutil::small_random_universe(rng, rounds % 3 == 2 ? 3 : 2, 9);
    if (u.empty()) continue;
    ++rounds;
    for (const auto& [name, rules] : library) {
      for (LabelVariant variant : {LabelVariant::Plain, LabelVariant::Relaxed}) {
        CHECK(selection_labels(u, rules, variant) == brute_force_selection_labels(u, rules, variant));
      }
    }
    CHECK(selection_labels(u, coord_rules, LabelVariant::Plain) ==
          brute_force_selection_labels(u, coord_rules, LabelVariant::Plain));
  }
  CHECK_THROWS_AS(brute_force_selection_labels(testutil::figure_fragment(), library[0].rules,
                                               LabelVariant::Plain),
                  Error);
}

TEST_CASE("maximal theta mode uses the light cone instead of stored edges") {
  InducedUniverse chain = testutil::diagonal_chain({4, 2, 1});
  SelectionRuleSet rules = rules_from("arity_cap 1\ntheta maximal\nrule 1 true 1\n");
  std::vector<char> defined;
  std::vector<Label> labels = selection_labels(chain, rules, LabelVariant::Plain, &defined);
  CHECK(labels == brute_force_selection_labels(chain, rules, LabelVariant::Plain));
  CHECK(labels[chain.require_index(Vertex{4, 4})] == 1);
  // an edgeless universe behaves like a maximal one under this mode
  RawUniverse raw;
  raw.dimension = 2;
  raw.vertices = {Vertex{1, 1}, Vertex{3, 3}};
  InducedUniverse u = validate_universe(raw);
  CHECK(selection_labels(u, rules, LabelVariant::Plain)[u.require_index(Vertex{3, 3})] == 1);
}

TEST_CASE("relaxed selection labels: at most max, equality exactly when phi is empty") {
  std::mt19937_64 rng(40);
  auto library = builtin_rule_library();
  for (int round = 0; round < 30; ++round) {
    InducedUniverse u = testutil::small_random_universe(rng, round % 2 ? 3 : 2);
    for (const auto& [name, rules] : library) {
      std::vector<char> defined;
      std::vector<Label> relaxed = selection_labels(u, rules, LabelVariant::Relaxed, &defined);
      std::vector<Label> plain = selection_labels(u, rules, LabelVariant::Plain);
      for (std::uint32_t i = 0; i < u.size(); ++i) {
        CHECK(relaxed[i] <= u.max_of(i));
        CHECK((relaxed[i] == u.max_of(i)) == !defined[i]);
        if (defined[i]) CHECK(relaxed[i] == plain[i]);  // agreement off the phi-empty set
        if (!defined[i]) CHECK(plain[i] == u.min_of(i));
      }
    }
  }
}

TEST_CASE("plain and relaxed selection labels are reflexive") {
  std::mt19937_64 rng(2025);
  auto library = builtin_rule_library();
  for (int round = 0; round < 20; ++round) {
    InducedUniverse u = testutil::small_random_universe(rng);
    std::set<Coord> coords;
    for (const Vertex& v : u.vertices()) coords.insert(v.coords.begin(), v.coords.end());
    for (const auto& [name, rules] : library) {
      for (LabelVariant variant : {LabelVariant::Plain, LabelVariant::Relaxed}) {
        for (Label value : selection_labels(u, rules, variant)) CHECK(coords.count(value) == 1);
      }
    }
  }
}

TEST_CASE("phi grows monotonically with the universe when lower labels agree") {
  std::mt19937_64 rng(555);
  SelectionRuleSet committee = *builtin_rule_set("committee");
  int rounds = 0;
  while (rounds < 25) {
    InducedUniverse big = testutil::small_random_universe(rng, 2, 9);
    if (big.size() < 3) continue;
    ++rounds;
    // drop some vertices, keep an apex
    std::uint32_t apex_idx = static_cast<std::uint32_t>(rng() % big.size());
    RawUniverse small_raw;
    small_raw.dimension = big.dimension();
    for (std::uint32_t i = 0; i < big.size(); ++i) {
      if (i == apex_idx || (rng() & 1)) small_raw.vertices.push_back(big.vertex(i));
    }
    auto kept = [&](const Vertex& v) {
      return std::find(small_raw.vertices.begin(), small_raw.vertices.end(), v) !=
             small_raw.vertices.end();
    };
    for (const auto& [s, t] : big.edges()) {
      if (kept(big.vertex(s)) && kept(big.vertex(t))) {
        small_raw.edges.emplace_back(big.vertex(s), big.vertex(t));
      }
    }
    InducedUniverse small = validate_universe(small_raw);
    const Vertex apex = big.vertex(apex_idx);

    // one shared, arbitrary lower-label map
    std::map<Vertex, Label> lower;
    for (const Vertex& v : big.vertices()) lower[v] = static_cast<Label>(rng() % 6);

    std::set<Label> phi_small = phi_set(small, apex, committee, lower);
    std::set<Label> phi_big = phi_set(big, apex, committee, lower);
    for (Label v : phi_small) CHECK(phi_big.count(v) == 1);
  }
}

TEST_CASE("builtin library lists the promised presets") {
  auto library = builtin_rule_library();
  std::vector<std::string> names;
  for (const auto& entry : library) names.push_back(entry.name);
  CHECK(names == std::vector<std::string>{"first", "min-report", "max-report", "committee", "never"});
  CHECK(!builtin_rule_set("nope").has_value());
  CHECK(builtin_rule_set("never")->rules.empty());
}

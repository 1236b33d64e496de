// selection.hpp: partial selection rules and the selection labeling function.
//
// A rule takes the apex vertex x and an ordered tuple of committee reports
// (y_1, n_1) ... (y_r, n_r) drawn from x's out-neighbors with their already
// computed labels. Its guard decides whether the rule fires; its selector
// returns a tuple POSITION, never a value, so a firing rule can only yield
// one of its input reports. The partial-selection property holds by
// construction rather than by a runtime check.
//
// Rule file grammar (one directive per line, whitespace separated):
//   arity_cap <r>
//   theta maximal|file
//   rule <arity> <guard> <selector>
// guard    := true | atom(&atom)*        (no spaces inside the guard)
// atom     := operand cmp operand, cmp in { < <= > >= == != }
// operand  := n<i> | y<i>[<j>] | min(y<i>) | max(y<i>)
//           | x[<j>] | min(x) | max(x) | <nonnegative integer>
// selector := <i> | argmin | argmax | median
// <i> is a 1-based tuple position; <j> a 0-based coordinate index. argmin and
// argmax break ties toward the lowest position; median takes the position
// holding the lower median report value.

#pragma once

#include <map>
#include <set>

#include "lmv/core.hpp"
#include "lmv/terminal.hpp"

namespace lmv {

enum class Comparison { Lt, Le, Gt, Ge, Eq, Ne };

struct Operand {
  enum class Kind {
    ReportValue,    // n<i>
    NeighborCoord,  // y<i>[<j>]
    NeighborMin,    // min(y<i>)
    NeighborMax,    // max(y<i>)
    ApexCoord,      // x[<j>]
    ApexMin,        // min(x)
    ApexMax,        // max(x)
    Literal,
  };

  Kind kind = Kind::Literal;
  int member = 0;     // 1-based tuple position, for the n/y kinds
  int coord = 0;      // 0-based coordinate index, for the coord kinds
  Label literal = 0;

  bool references_neighbor_vertex() const {
    return kind == Kind::NeighborCoord || kind == Kind::NeighborMin || kind == Kind::NeighborMax;
  }

  bool operator==(const Operand&) const = default;
};

struct GuardAtom {
  Operand lhs;
  Comparison cmp = Comparison::Eq;
  Operand rhs;

  bool operator==(const GuardAtom&) const = default;
};

// Conjunction of comparisons; an empty conjunction always fires.
struct Guard {
  std::vector<GuardAtom> atoms;

  bool operator==(const Guard&) const = default;
};

enum class SelectorKind { Index, ArgMin, ArgMax, Median };

struct Selector {
  SelectorKind kind = SelectorKind::Index;
  int index = 1;  // 1-based, for SelectorKind::Index

  bool operator==(const Selector&) const = default;
};

struct SelectionRule {
  int arity = 1;
  Guard guard;
  Selector selector;

  bool operator==(const SelectionRule&) const = default;
};

// Which edge set feeds the committee: the universe's stored edges, or the
// maximal downward set {(x,y) : max(x) > max(y)} generated on demand.
enum class ThetaMode { FromUniverse, Maximal };

inline constexpr int kDefaultArityCap = 3;

struct SelectionRuleSet {
  std::vector<SelectionRule> rules;
  int arity_cap = kDefaultArityCap;
  ThetaMode theta = ThetaMode::FromUniverse;

  bool operator==(const SelectionRuleSet&) const = default;
};

// One committee member as seen by a rule: the vertex and its report value.
struct Report {
  const Vertex* member = nullptr;
  Label value = 0;
};

bool guard_fires(const Guard& guard, const Vertex& apex, std::span<const Report> inputs);
// 1-based position into inputs; always within [1, inputs.size()].
int selected_position(const Selector& selector, std::span<const Report> inputs);

struct SelectionLabeling {
  InducedUniverse universe;
  SelectionRuleSet rules;
  std::vector<Label> labels;      // by canonical vertex index, total
  std::vector<char> phi_defined;  // per vertex: some rule fired on some tuple
  LabelVariant variant = LabelVariant::Plain;
};

// Out-neighbors of x within the universe's stored edge set, sorted.
std::vector<Vertex> adjacency(const InducedUniverse& universe, const Vertex& x);

// The set of values selected by firing rules over all ordered tuples (with
// repetition) of x's committee, given the committee members' labels. Throws
// MissingLowerLabel if a committee member has no entry in lower_labels.
std::set<Label> phi_set(const InducedUniverse& universe, const Vertex& x,
                        const SelectionRuleSet& rules,
                        const std::map<Vertex, Label>& lower_labels);

// Labels every vertex by induction on the max coordinate. Plain: min of the
// phi set when nonempty, min(x) otherwise. Relaxed: min of the phi set when
// nonempty, max(x) otherwise. phi_defined_out, when given, receives the
// per-vertex nonemptiness mask.
std::vector<Label> selection_labels(const InducedUniverse& universe, const SelectionRuleSet& rules,
                                    LabelVariant variant,
                                    std::vector<char>* phi_defined_out = nullptr);
SelectionLabeling label_all_selection(const InducedUniverse& universe, const SelectionRuleSet& rules,
                                      LabelVariant variant);

inline constexpr std::size_t kDefaultSelectionOracleCap = 12;

// Differential-testing oracle: recomputes every phi set by literal tuple
// enumeration at every vertex, with no memoization and no collapsing of
// same-labeled neighbors. Refuses universes larger than the cap.
std::vector<Label> brute_force_selection_labels(const InducedUniverse& universe,
                                                const SelectionRuleSet& rules, LabelVariant variant,
                                                std::size_t oracle_cap = kDefaultSelectionOracleCap);

SelectionRuleSet parse_rule_set_text(std::string_view text);
std::string serialize_rule_set(const SelectionRuleSet& rules);

struct NamedRuleSet {
  std::string name;
  SelectionRuleSet rules;
};

// Shipped presets: first, min-report, max-report, committee, never.
std::vector<NamedRuleSet> builtin_rule_library(int arity_cap = kDefaultArityCap);
std::optional<SelectionRuleSet> builtin_rule_set(std::string_view name,
                                                 int arity_cap = kDefaultArityCap);

}  // namespace lmv

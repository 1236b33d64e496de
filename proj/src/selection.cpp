#include "lmv/selection.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace lmv {

namespace {

Label eval_operand(const Operand& op, const Vertex& apex, std::span<const Report> inputs) {
  auto member_vertex = [&](int member) -> const Vertex& {
    const Report& r = inputs[static_cast<std::size_t>(member - 1)];
    if (r.member == nullptr) {
      throw Error(ErrorKind::InvalidRule, "rule references a committee vertex in a value-only context");
    }
    return *r.member;
  };
  auto coord_of = [&](const Vertex& v, int j) -> Coord {
    if (j < 0 || j >= v.dim()) {
      throw Error(ErrorKind::InvalidRule,
                  "coordinate index " + std::to_string(j) + " out of range for dimension " +
                      std::to_string(v.dim()));
    }
    return v.coords[static_cast<std::size_t>(j)];
  };
  switch (op.kind) {
    case Operand::Kind::ReportValue:
      return inputs[static_cast<std::size_t>(op.member - 1)].value;
    case Operand::Kind::NeighborCoord:
      return coord_of(member_vertex(op.member), op.coord);
    case Operand::Kind::NeighborMin:
      return member_vertex(op.member).min_coord();
    case Operand::Kind::NeighborMax:
      return member_vertex(op.member).max_coord();
    case Operand::Kind::ApexCoord:
      return coord_of(apex, op.coord);
    case Operand::Kind::ApexMin:
      return apex.min_coord();
    case Operand::Kind::ApexMax:
      return apex.max_coord();
    case Operand::Kind::Literal:
      return op.literal;
  }
  throw Error(ErrorKind::InvalidRule, "unknown operand kind");
}

bool compare(Label lhs, Comparison cmp, Label rhs) {
  switch (cmp) {
    case Comparison::Lt: return lhs < rhs;
    case Comparison::Le: return lhs <= rhs;
    case Comparison::Gt: return lhs > rhs;
    case Comparison::Ge: return lhs >= rhs;
    case Comparison::Eq: return lhs == rhs;
    case Comparison::Ne: return lhs != rhs;
  }
  return false;
}

bool ruleset_references_neighbor_vertex(const SelectionRuleSet& rules) {
  for (const SelectionRule& rule : rules.rules) {
    for (const GuardAtom& atom : rule.guard.atoms) {
      if (atom.lhs.references_neighbor_vertex() || atom.rhs.references_neighbor_vertex()) return true;
    }
  }
  return false;
}

// Enumerates every ordered tuple (with repetition) over the pool, arity by
// arity, and inserts the value selected by each firing rule of that arity.
void collect_phi(const Vertex& apex, std::span<const Report> pool, const SelectionRuleSet& rules,
                 std::set<Label>& out) {
  if (pool.empty() || rules.rules.empty()) return;
  for (int arity = 1; arity <= rules.arity_cap; ++arity) {
    std::vector<const SelectionRule*> active;
    for (const SelectionRule& rule : rules.rules) {
      if (rule.arity == arity) active.push_back(&rule);
    }
    if (active.empty()) continue;

    std::vector<std::size_t> odo(static_cast<std::size_t>(arity), 0);
    std::vector<Report> tuple(static_cast<std::size_t>(arity));
    while (true) {
      for (std::size_t i = 0; i < odo.size(); ++i) tuple[i] = pool[odo[i]];
      for (const SelectionRule* rule : active) {
        if (!guard_fires(rule->guard, apex, tuple)) continue;
        int pos = selected_position(rule->selector, tuple);
        out.insert(tuple[static_cast<std::size_t>(pos - 1)].value);
      }
      std::size_t p = odo.size();
      while (p > 0 && odo[p - 1] + 1 == pool.size()) odo[--p] = 0;
      if (p == 0) break;
      odo[p - 1]++;
    }
  }
}

std::vector<std::uint32_t> committee_indices(const InducedUniverse& u, std::uint32_t idx,
                                             ThetaMode theta) {
  if (theta == ThetaMode::FromUniverse) {
    auto span = u.out_neighbors(idx);
    return {span.begin(), span.end()};
  }
  std::vector<std::uint32_t> result;
  const Coord bound = u.max_of(idx);
  for (std::uint32_t j = 0; j < u.size(); ++j) {
    if (u.max_of(j) < bound) result.push_back(j);
  }
  return result;
}

}  // namespace

bool guard_fires(const Guard& guard, const Vertex& apex, std::span<const Report> inputs) {
  for (const GuardAtom& atom : guard.atoms) {
    if (!compare(eval_operand(atom.lhs, apex, inputs), atom.cmp,
                 eval_operand(atom.rhs, apex, inputs))) {
      return false;
    }
  }
  return true;
}

int selected_position(const Selector& selector, std::span<const Report> inputs) {
  const int r = static_cast<int>(inputs.size());
  switch (selector.kind) {
    case SelectorKind::Index:
      if (selector.index < 1 || selector.index > r) {
        throw Error(ErrorKind::InvalidRule, "selector position " + std::to_string(selector.index) +
                                                " out of range for arity " + std::to_string(r));
      }
      return selector.index;
    case SelectorKind::ArgMin: {
      int best = 1;
      for (int i = 2; i <= r; ++i) {
        if (inputs[i - 1].value < inputs[best - 1].value) best = i;
      }
      return best;
    }
    case SelectorKind::ArgMax: {
      int best = 1;
      for (int i = 2; i <= r; ++i) {
        if (inputs[i - 1].value > inputs[best - 1].value) best = i;
      }
      return best;
    }
    case SelectorKind::Median: {
      std::vector<int> order(static_cast<std::size_t>(r));
      std::iota(order.begin(), order.end(), 1);
      std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return inputs[a - 1].value < inputs[b - 1].value;
      });
      return order[static_cast<std::size_t>((r - 1) / 2)];
    }
  }
  throw Error(ErrorKind::InvalidRule, "unknown selector kind");
}

std::vector<Vertex> adjacency(const InducedUniverse& universe, const Vertex& x) {
  const std::uint32_t idx = universe.require_index(x);
  std::vector<Vertex> result;
  for (std::uint32_t j : universe.out_neighbors(idx)) result.push_back(universe.vertex(j));
  std::sort(result.begin(), result.end());
  return result;
}

std::set<Label> phi_set(const InducedUniverse& universe, const Vertex& x,
                        const SelectionRuleSet& rules,
                        const std::map<Vertex, Label>& lower_labels) {
  const std::uint32_t idx = universe.require_index(x);
  std::vector<Report> pool;
  for (std::uint32_t j : committee_indices(universe, idx, rules.theta)) {
    auto it = lower_labels.find(universe.vertex(j));
    if (it == lower_labels.end()) {
      throw Error(ErrorKind::MissingLowerLabel,
                  "no label supplied for committee member " + to_string(universe.vertex(j)));
    }
    pool.push_back(Report{&it->first, it->second});
  }
  std::set<Label> phi;
  collect_phi(x, pool, rules, phi);
  return phi;
}

std::vector<Label> selection_labels(const InducedUniverse& universe, const SelectionRuleSet& rules,
                                    LabelVariant variant, std::vector<char>* phi_defined_out) {
  const std::size_t n = universe.size();
  std::vector<Label> labels(n, 0);
  std::vector<char> defined(n, 0);

  // When no rule inspects a committee member's coordinates, a tuple's fate
  // depends only on its report values, so same-labeled neighbors can be
  // collapsed before enumeration. The brute-force oracle never does this.
  const bool value_only = !ruleset_references_neighbor_vertex(rules);

  std::vector<Report> pool;
  std::vector<Label> distinct;
  for (std::uint32_t idx : ascending_max_order(universe)) {
    pool.clear();
    std::vector<std::uint32_t> committee = committee_indices(universe, idx, rules.theta);
    if (value_only) {
      distinct.clear();
      for (std::uint32_t j : committee) distinct.push_back(labels[j]);
      std::sort(distinct.begin(), distinct.end());
      distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
      for (Label v : distinct) pool.push_back(Report{nullptr, v});
    } else {
      for (std::uint32_t j : committee) pool.push_back(Report{&universe.vertex(j), labels[j]});
    }
    std::set<Label> phi;
    collect_phi(universe.vertex(idx), pool, rules, phi);
    defined[idx] = phi.empty() ? 0 : 1;
    labels[idx] = phi.empty() ? universe.min_of(idx) : *phi.begin();
  }

  if (variant == LabelVariant::Relaxed) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!defined[i]) labels[i] = universe.max_of(static_cast<std::uint32_t>(i));
    }
  }
  if (phi_defined_out) *phi_defined_out = std::move(defined);
  return labels;
}

SelectionLabeling label_all_selection(const InducedUniverse& universe, const SelectionRuleSet& rules,
                                      LabelVariant variant) {
  SelectionLabeling result;
  result.universe = universe;
  result.rules = rules;
  result.variant = variant;
  result.labels = selection_labels(universe, rules, variant, &result.phi_defined);
  return result;
}

namespace {

// Literal recursive tuple builder for the oracle.
void oracle_tuples(const InducedUniverse& u, const Vertex& apex,
                   const std::vector<std::uint32_t>& committee, const std::vector<Label>& labels,
                   const std::vector<const SelectionRule*>& active, int arity,
                   std::vector<Report>& tuple, std::set<Label>& out) {
  if (static_cast<int>(tuple.size()) == arity) {
    for (const SelectionRule* rule : active) {
      if (guard_fires(rule->guard, apex, tuple)) {
        int pos = selected_position(rule->selector, tuple);
        out.insert(tuple[static_cast<std::size_t>(pos - 1)].value);
      }
    }
    return;
  }
  for (std::uint32_t j : committee) {
    tuple.push_back(Report{&u.vertex(j), labels[j]});
    oracle_tuples(u, apex, committee, labels, active, arity, tuple, out);
    tuple.pop_back();
  }
}

}  // namespace

std::vector<Label> brute_force_selection_labels(const InducedUniverse& universe,
                                                const SelectionRuleSet& rules, LabelVariant variant,
                                                std::size_t oracle_cap) {
  if (universe.size() > oracle_cap) {
    throw Error(ErrorKind::OracleCapExceeded,
                "universe has " + std::to_string(universe.size()) + " vertices, oracle cap is " +
                    std::to_string(oracle_cap));
  }
  const std::size_t n = universe.size();
  std::vector<Label> labels(n, 0);
  std::vector<char> defined(n, 0);
  for (std::uint32_t idx : ascending_max_order(universe)) {
    std::vector<std::uint32_t> committee = committee_indices(universe, idx, rules.theta);
    std::set<Label> phi;
    if (!committee.empty()) {
      for (int arity = 1; arity <= rules.arity_cap; ++arity) {
        std::vector<const SelectionRule*> active;
        for (const SelectionRule& rule : rules.rules) {
          if (rule.arity == arity) active.push_back(&rule);
        }
        if (active.empty()) continue;
        std::vector<Report> tuple;
        oracle_tuples(universe, universe.vertex(idx), committee, labels, active, arity, tuple, phi);
      }
    }
    defined[idx] = phi.empty() ? 0 : 1;
    labels[idx] = phi.empty() ? universe.min_of(idx) : *phi.begin();
  }
  if (variant == LabelVariant::Relaxed) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!defined[i]) labels[i] = universe.max_of(static_cast<std::uint32_t>(i));
    }
  }
  return labels;
}

namespace {

std::int64_t parse_rule_int(std::string_view token, const std::string& context) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw Error(ErrorKind::ParseError, context + ": expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

Operand parse_operand(std::string_view tok) {
  Operand op;
  if (all_digits(tok)) {
    op.kind = Operand::Kind::Literal;
    op.literal = parse_rule_int(tok, "operand");
    return op;
  }
  if (tok == "min(x)") { op.kind = Operand::Kind::ApexMin; return op; }
  if (tok == "max(x)") { op.kind = Operand::Kind::ApexMax; return op; }
  if (tok.size() >= 4 && tok.back() == ']') {
    auto open = tok.find('[');
    if (open == std::string_view::npos) throw Error(ErrorKind::ParseError, "bad operand '" + std::string(tok) + "'");
    std::string_view base = tok.substr(0, open);
    std::string_view idx = tok.substr(open + 1, tok.size() - open - 2);
    if (!all_digits(idx)) throw Error(ErrorKind::ParseError, "bad coordinate index in '" + std::string(tok) + "'");
    if (base == "x") {
      op.kind = Operand::Kind::ApexCoord;
      op.coord = static_cast<int>(parse_rule_int(idx, "operand"));
      return op;
    }
    if (base.size() >= 2 && base[0] == 'y' && all_digits(base.substr(1))) {
      op.kind = Operand::Kind::NeighborCoord;
      op.member = static_cast<int>(parse_rule_int(base.substr(1), "operand"));
      op.coord = static_cast<int>(parse_rule_int(idx, "operand"));
      return op;
    }
    throw Error(ErrorKind::ParseError, "bad operand '" + std::string(tok) + "'");
  }
  if (tok.size() >= 7 && tok.back() == ')' &&
      (tok.rfind("min(y", 0) == 0 || tok.rfind("max(y", 0) == 0)) {
    std::string_view idx = tok.substr(5, tok.size() - 6);
    if (!all_digits(idx)) throw Error(ErrorKind::ParseError, "bad member index in '" + std::string(tok) + "'");
    op.kind = tok[1] == 'i' ? Operand::Kind::NeighborMin : Operand::Kind::NeighborMax;
    op.member = static_cast<int>(parse_rule_int(idx, "operand"));
    return op;
  }
  if (tok.size() >= 2 && tok[0] == 'n' && all_digits(tok.substr(1))) {
    op.kind = Operand::Kind::ReportValue;
    op.member = static_cast<int>(parse_rule_int(tok.substr(1), "operand"));
    return op;
  }
  throw Error(ErrorKind::ParseError, "bad operand '" + std::string(tok) + "'");
}

struct CmpToken { std::string_view text; Comparison cmp; };
constexpr CmpToken kComparisons[] = {
    {"<=", Comparison::Le}, {">=", Comparison::Ge}, {"==", Comparison::Eq},
    {"!=", Comparison::Ne}, {"<", Comparison::Lt},  {">", Comparison::Gt},
};

GuardAtom parse_atom(std::string_view atom_text) {
  for (std::size_t i = 0; i < atom_text.size(); ++i) {
    for (const CmpToken& c : kComparisons) {
      if (atom_text.substr(i, c.text.size()) == c.text) {
        GuardAtom atom;
        atom.lhs = parse_operand(atom_text.substr(0, i));
        atom.cmp = c.cmp;
        atom.rhs = parse_operand(atom_text.substr(i + c.text.size()));
        return atom;
      }
    }
  }
  throw Error(ErrorKind::ParseError, "no comparison operator in guard atom '" + std::string(atom_text) + "'");
}

Guard parse_guard(std::string_view text) {
  Guard guard;
  if (text == "true") return guard;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t amp = text.find('&', start);
    std::string_view atom = text.substr(start, amp == std::string_view::npos ? text.size() - start : amp - start);
    if (atom.empty()) throw Error(ErrorKind::ParseError, "empty guard atom in '" + std::string(text) + "'");
    guard.atoms.push_back(parse_atom(atom));
    if (amp == std::string_view::npos) break;
    start = amp + 1;
  }
  return guard;
}

Selector parse_selector(std::string_view tok) {
  Selector sel;
  if (tok == "argmin") { sel.kind = SelectorKind::ArgMin; return sel; }
  if (tok == "argmax") { sel.kind = SelectorKind::ArgMax; return sel; }
  if (tok == "median") { sel.kind = SelectorKind::Median; return sel; }
  if (all_digits(tok)) {
    sel.kind = SelectorKind::Index;
    sel.index = static_cast<int>(parse_rule_int(tok, "selector"));
    return sel;
  }
  throw Error(ErrorKind::ParseError, "bad selector '" + std::string(tok) + "'");
}

void validate_member_index(const Operand& op, int arity) {
  if ((op.kind == Operand::Kind::ReportValue || op.references_neighbor_vertex()) &&
      (op.member < 1 || op.member > arity)) {
    throw Error(ErrorKind::InvalidRule, "member index " + std::to_string(op.member) +
                                            " out of range for arity " + std::to_string(arity));
  }
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string operand_text(const Operand& op) {
  switch (op.kind) {
    case Operand::Kind::ReportValue: return "n" + std::to_string(op.member);
    case Operand::Kind::NeighborCoord:
      return "y" + std::to_string(op.member) + "[" + std::to_string(op.coord) + "]";
    case Operand::Kind::NeighborMin: return "min(y" + std::to_string(op.member) + ")";
    case Operand::Kind::NeighborMax: return "max(y" + std::to_string(op.member) + ")";
    case Operand::Kind::ApexCoord: return "x[" + std::to_string(op.coord) + "]";
    case Operand::Kind::ApexMin: return "min(x)";
    case Operand::Kind::ApexMax: return "max(x)";
    case Operand::Kind::Literal: return std::to_string(op.literal);
  }
  return "?";
}

std::string_view comparison_text(Comparison cmp) {
  switch (cmp) {
    case Comparison::Lt: return "<";
    case Comparison::Le: return "<=";
    case Comparison::Gt: return ">";
    case Comparison::Ge: return ">=";
    case Comparison::Eq: return "==";
    case Comparison::Ne: return "!=";
  }
  return "?";
}

}  // namespace

SelectionRuleSet parse_rule_set_text(std::string_view text) {
  SelectionRuleSet rules;
  std::vector<std::vector<std::string_view>> rule_lines;

  std::size_t pos = 0;
  int line_no = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0].front() == '#') continue;
    const std::string where = "line " + std::to_string(line_no);
    if (tokens[0] == "arity_cap") {
      if (tokens.size() != 2) throw Error(ErrorKind::ParseError, where + ": expected 'arity_cap <r>'");
      auto cap = parse_rule_int(tokens[1], where);
      if (cap < 1) throw Error(ErrorKind::InvalidRule, where + ": arity_cap must be at least 1");
      rules.arity_cap = static_cast<int>(cap);
    } else if (tokens[0] == "theta") {
      if (tokens.size() != 2 || (tokens[1] != "maximal" && tokens[1] != "file")) {
        throw Error(ErrorKind::ParseError, where + ": expected 'theta maximal|file'");
      }
      rules.theta = tokens[1] == "maximal" ? ThetaMode::Maximal : ThetaMode::FromUniverse;
    } else if (tokens[0] == "rule") {
      if (tokens.size() != 4) {
        throw Error(ErrorKind::ParseError, where + ": expected 'rule <arity> <guard> <selector>'");
      }
      rule_lines.push_back(tokens);
    } else {
      throw Error(ErrorKind::ParseError, where + ": unknown directive '" + std::string(tokens[0]) + "'");
    }
  }

  // Headers may appear anywhere, so rules are resolved after the full scan.
  for (const auto& tokens : rule_lines) {
    SelectionRule rule;
    rule.arity = static_cast<int>(parse_rule_int(tokens[1], "rule arity"));
    if (rule.arity < 1 || rule.arity > rules.arity_cap) {
      throw Error(ErrorKind::InvalidRule, "rule arity " + std::to_string(rule.arity) +
                                              " outside [1, arity_cap=" + std::to_string(rules.arity_cap) + "]");
    }
    rule.guard = parse_guard(tokens[2]);
    rule.selector = parse_selector(tokens[3]);
    for (const GuardAtom& atom : rule.guard.atoms) {
      validate_member_index(atom.lhs, rule.arity);
      validate_member_index(atom.rhs, rule.arity);
    }
    if (rule.selector.kind == SelectorKind::Index &&
        (rule.selector.index < 1 || rule.selector.index > rule.arity)) {
      throw Error(ErrorKind::InvalidRule, "selector position " + std::to_string(rule.selector.index) +
                                              " out of range for arity " + std::to_string(rule.arity));
    }
    rules.rules.push_back(std::move(rule));
  }
  return rules;
}

std::string serialize_rule_set(const SelectionRuleSet& rules) {
  std::ostringstream out;
  out << "arity_cap " << rules.arity_cap << '\n';
  out << "theta " << (rules.theta == ThetaMode::Maximal ? "maximal" : "file") << '\n';
  for (const SelectionRule& rule : rules.rules) {
    out << "rule " << rule.arity << ' ';
    if (rule.guard.atoms.empty()) {
      out << "true";
    } else {
      for (std::size_t i = 0; i < rule.guard.atoms.size(); ++i) {
        if (i) out << '&';
        const GuardAtom& atom = rule.guard.atoms[i];
        out << operand_text(atom.lhs) << comparison_text(atom.cmp) << operand_text(atom.rhs);
      }
    }
    out << ' ';
    switch (rule.selector.kind) {
      case SelectorKind::Index: out << rule.selector.index; break;
      case SelectorKind::ArgMin: out << "argmin"; break;
      case SelectorKind::ArgMax: out << "argmax"; break;
      case SelectorKind::Median: out << "median"; break;
    }
    out << '\n';
  }
  return out.str();
}

namespace {

SelectionRule make_rule(int arity, Guard guard, Selector selector) {
  SelectionRule rule;
  rule.arity = arity;
  rule.guard = std::move(guard);
  rule.selector = selector;
  return rule;
}

Guard pairwise_distinct_guard(int arity) {
  Guard guard;
  for (int i = 1; i <= arity; ++i) {
    for (int j = i + 1; j <= arity; ++j) {
      GuardAtom atom;
      atom.lhs = Operand{Operand::Kind::ReportValue, i, 0, 0};
      atom.cmp = Comparison::Ne;
      atom.rhs = Operand{Operand::Kind::ReportValue, j, 0, 0};
      guard.atoms.push_back(atom);
    }
  }
  return guard;
}

}  // namespace

std::vector<NamedRuleSet> builtin_rule_library(int arity_cap) {
  if (arity_cap < 1) throw Error(ErrorKind::InvalidRule, "arity_cap must be at least 1");
  std::vector<NamedRuleSet> library;

  SelectionRuleSet first;
  first.arity_cap = arity_cap;
  first.rules.push_back(make_rule(1, Guard{}, Selector{SelectorKind::Index, 1}));
  library.push_back({"first", std::move(first)});

  SelectionRuleSet min_report;
  min_report.arity_cap = arity_cap;
  for (int r = 1; r <= arity_cap; ++r) {
    min_report.rules.push_back(make_rule(r, Guard{}, Selector{SelectorKind::ArgMin, 1}));
  }
  library.push_back({"min-report", std::move(min_report)});

  SelectionRuleSet max_report;
  max_report.arity_cap = arity_cap;
  for (int r = 1; r <= arity_cap; ++r) {
    max_report.rules.push_back(make_rule(r, Guard{}, Selector{SelectorKind::ArgMax, 1}));
  }
  library.push_back({"max-report", std::move(max_report)});

  // Fires only when all reports are distinct; the boss takes the median
  // report. For arity 1 the distinctness guard is vacuous.
  SelectionRuleSet committee;
  committee.arity_cap = arity_cap;
  for (int r = 1; r <= arity_cap; ++r) {
    committee.rules.push_back(make_rule(r, pairwise_distinct_guard(r), Selector{SelectorKind::Median, 1}));
  }
  library.push_back({"committee", std::move(committee)});

  SelectionRuleSet never;
  never.arity_cap = arity_cap;
  library.push_back({"never", std::move(never)});

  return library;
}

std::optional<SelectionRuleSet> builtin_rule_set(std::string_view name, int arity_cap) {
  for (NamedRuleSet& entry : builtin_rule_library(arity_cap)) {
    if (entry.name == name) return std::move(entry.rules);
  }
  return std::nullopt;
}

}  // namespace lmv

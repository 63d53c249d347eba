#include <algorithm>

#include "condorcet3/rules.hpp"

namespace condorcet3 {

namespace {

constexpr std::array<RuleId, 12> kTableRows = {
    RuleId::top_cycle,     RuleId::uc_mckelvey,   RuleId::banks,
    RuleId::uc_gillies,    RuleId::defensible,    RuleId::llull,
    RuleId::copeland,      RuleId::maximin,       RuleId::strict_nanson,
    RuleId::stable_voting, RuleId::nanson,        RuleId::leximin,
};

// Cells for Graphs A..L, canonical labelling.
constexpr std::array<std::array<const char*, 12>, 12> kCells = {{
    // top cycle
    {"abc", "abc", "abc", "abc", "ac", "ac", "abc", "abc", "abc", "abc", "abc", "abc"},
    // UC McKelvey
    {"abc", "abc", "abc", "ac", "ac", "ac", "abc", "abc", "abc", "abc", "abc", "abc"},
    // UC Bordes / Banks
    {"abc", "abc", "abc", "ac", "ac", "ac", "abc", "ab", "abc", "ab", "abc", "ab"},
    // UC Gillies
    {"abc", "abc", "abc", "ac", "ac", "ac", "abc", "ac", "abc", "ac", "abc", "ac"},
    // defensible set
    {"abc", "abc", "ac", "ac", "ac", "ac", "ac", "ac", "ac", "ac", "a", "a"},
    // Llull / Schwartz / UC Fishburn
    {"abc", "abc", "abc", "ac", "ac", "ac", "abc", "a", "abc", "a", "abc", "a"},
    // Copeland
    {"abc", "abc", "abc", "a", "ac", "ac", "abc", "a", "abc", "a", "abc", "a"},
    // maximin / ranked pairs / beat path / split cycle
    {"abc", "abc", "ac", "ac", "ac", "ac", "a", "a", "a", "a", "a", "a"},
    // strict Nanson
    {"abc", "abc", "c", "ac", "ac", "ac", "a", "a", "a", "a", "a", "a"},
    // stable voting
    {"abc", "abc", "ac", "a", "ac", "a", "a", "a", "a", "a", "a", "a"},
    // Nanson
    {"abc", "abc", "a", "a", "ac", "ac", "a", "a", "a", "a", "a", "a"},
    // leximin
    {"abc", "abc", "a", "a", "ac", "a", "a", "a", "a", "a", "a", "a"},
}};

constexpr std::array<const char*, 12> kTableProfiles = {
    "1abc+1bca+1cab",
    "1abc+1acb+1bac+1bca+1cab+1cba",
    "2abc+1bca+2cab",
    "1abc+1cab",
    "1acb+1cab",
    "1abc+1acb+2cab",
    "4abc+2bca+3cab",
    "3abc+1bca+2cab",
    "3abc+2bca+2cab",
    "2abc+1bca+1cab",
    "3abc+2bca+4cab",
    "2abc+1bca+3cab",
};

int graph_column(GraphKind kind) {
  if (kind == GraphKind::condorcet_winner) {
    throw std::invalid_argument("Condorcet-winner graphs have no table column");
  }
  return static_cast<int>(kind) - static_cast<int>(GraphKind::A);
}

}  // namespace

std::span<const RuleId> table_rule_ids() { return kTableRows; }

bool has_table_row(RuleId id) {
  return std::find(kTableRows.begin(), kTableRows.end(), id) != kTableRows.end();
}

Profile table_profile(GraphKind kind) {
  return parse_profile(kTableProfiles[graph_column(kind)]);
}

Profile canonical_table_profile(GraphKind kind) {
  const Profile p = table_profile(kind);
  return permute(classify(margins(p)).relabel, p);
}

ChoiceSet table_cell(RuleId id, GraphKind kind) {
  const auto row = std::find(kTableRows.begin(), kTableRows.end(), id);
  if (row == kTableRows.end()) {
    throw UnsupportedRule(rule_name(id) + " has no row in the ordinal table");
  }
  return ChoiceSet::parse(kCells[row - kTableRows.begin()][graph_column(kind)]);
}

ChoiceSet table_rule(RuleId id, const MarginGraph& g) {
  if (!has_table_row(id)) {
    throw UnsupportedRule(rule_name(id) + " is not an ordinal table rule");
  }
  const OrdinalClass cls = classify(g);
  if (cls.kind == GraphKind::condorcet_winner) return ChoiceSet::single(*cls.winner);
  return ChoiceSet(permute(cls.relabel.inverse(), table_cell(id, cls.kind).set()));
}

}  // namespace condorcet3

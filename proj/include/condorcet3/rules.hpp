#pragma once

// Social choice functions for three candidates.
//
// Three evaluation paths exist: definitional implementations (formula given
// directly in terms of margins or rankings), a table-driven engine keyed by the
// ordinal margin graph class, and independent oracle implementations of the
// rules that coincide with maximin on three candidates.

#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "condorcet3/core.hpp"

namespace condorcet3 {

enum class RuleId : std::uint8_t {
  top_cycle,
  uc_mckelvey,
  banks,
  uc_gillies,
  defensible,
  llull,
  copeland,
  maximin,
  strict_nanson,
  stable_voting,
  nanson,
  leximin,
  black,
  baldwin,
  borda,
  plurality,
  artificial,
  split_cycle,
  beat_path,
  ranked_pairs,
  kemeny,
  dodgson,
  young,
  scoring,  // carries a ScoringVector; see Rule
};

enum class EvaluationPath { definitional, table_driven, oracle };

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;  // > 0

  static Rational parse(std::string_view text);
  std::string to_string() const;
  friend bool operator==(const Rational& l, const Rational& r) { return l.num * r.den == r.num * l.den; }
  friend auto operator<=>(const Rational& l, const Rational& r) {
    return static_cast<__int128>(l.num) * r.den <=> static_cast<__int128>(r.num) * l.den;
  }
};

enum class Monotonicity { strict, weak, other };

// Points for first, second and third rank. Compared exactly.
struct ScoringVector {
  Rational s1, s2, s3;

  Monotonicity monotonicity() const;
  // The same vector scaled by the common denominator.
  std::array<std::int64_t, 3> integer_weights() const;
  std::string to_string() const;  // "2,1,0"
  friend bool operator==(const ScoringVector&, const ScoringVector&) = default;
};

ScoringVector borda_vector();      // (2, 0, -2)
ScoringVector plurality_vector();  // (1, 0, 0)

// A rule together with its parameters.
class Rule {
 public:
  Rule(RuleId id);  // NOLINT: implicit so RuleId reads naturally at call sites
  static Rule scoring(ScoringVector v);
  // Accepts canonical names, the aliases uc_bordes / schwartz / uc_fishburn,
  // and "scoring(s1,s2,s3)". Throws std::invalid_argument.
  static Rule parse(std::string_view name);

  RuleId id() const { return id_; }
  const std::optional<ScoringVector>& vector() const { return vector_; }
  std::string name() const;
  EvaluationPath path() const;
  // True iff the output depends only on the margin graph.
  bool pairwise() const;
  bool neutral() const;

  friend bool operator==(const Rule&, const Rule&) = default;

 private:
  explicit Rule(ScoringVector v) : id_(RuleId::scoring), vector_(v) {}

  RuleId id_;
  std::optional<ScoringVector> vector_;
};

class UnsupportedRule : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Every non-parametrised rule in declaration order.
std::span<const RuleId> all_rule_ids();
std::string rule_name(RuleId id);

// Rules with a row in the ordinal table, in table order.
std::span<const RuleId> table_rule_ids();
bool has_table_row(RuleId id);

// The profile the table links for each graph kind A..L. For K and L the
// linked profile induces the graph under a different labelling.
Profile table_profile(GraphKind kind);
// table_profile relabelled so that it induces the drawn pattern exactly.
Profile canonical_table_profile(GraphKind kind);
// Cell of the ordinal table, in canonical labels. Throws UnsupportedRule.
ChoiceSet table_cell(RuleId id, GraphKind kind);

// Sorted pair of a candidate's margins against the other two, worst first.
struct SortedMargins {
  Count worst = 0;
  Count second = 0;
  auto operator<=>(const SortedMargins&) const = default;
};
SortedMargins sorted_margins(const MarginGraph& g, Candidate x);

// Definitional rules. All require n >= 1 where a profile is taken.
ChoiceSet maximin(const MarginGraph& g);
ChoiceSet leximin(const MarginGraph& g);
ChoiceSet nanson(const MarginGraph& g, bool strict);
ChoiceSet black(const MarginGraph& g);
ChoiceSet baldwin(const MarginGraph& g);
ChoiceSet copeland(const MarginGraph& g);
ChoiceSet top_cycle_def(const MarginGraph& g);
ChoiceSet defensible_set(const MarginGraph& g);
ChoiceSet borda(const MarginGraph& g);
ChoiceSet scoring_rule(const Profile& p, const ScoringVector& v);
ChoiceSet artificial_rule(const Profile& p);
// Points the artificial rule gives each candidate.
std::array<Count, 3> artificial_scores(const Profile& p);

enum class DominanceMode { strict, weak };
// True iff x is the unique winner of every scoring rule in the given
// monotonicity class, decided by rank-count dominance.
bool dominates_all_scoring(const Profile& p, Candidate x, DominanceMode mode);
// count[x][r] = voters ranking x at rank r.
std::array<std::array<Count, 3>, 3> rank_counts(const Profile& p);

// Looks up the ordinal table. Throws UnsupportedRule for rules without a row.
ChoiceSet table_rule(RuleId id, const MarginGraph& g);

enum class MaximinEquivalent { split_cycle, beat_path, ranked_pairs, kemeny, dodgson, young };
inline constexpr Count kDodgsonYoungVoterBound = 9;
// Independent implementations. dodgson and young throw BoundExceeded when the
// profile has more than kDodgsonYoungVoterBound voters.
ChoiceSet maximin_equivalent(MaximinEquivalent variant, const Profile& p);
ChoiceSet split_cycle(const MarginGraph& g);
ChoiceSet beat_path(const MarginGraph& g);
ChoiceSet ranked_pairs(const MarginGraph& g);
ChoiceSet kemeny(const MarginGraph& g);
ChoiceSet dodgson(const Profile& p);
ChoiceSet young(const Profile& p);

// Throws std::invalid_argument on the empty profile.
ChoiceSet evaluate(const Rule& rule, const Profile& p);
// Only for pairwise rules; throws UnsupportedRule otherwise.
ChoiceSet evaluate_margins(RuleId id, const MarginGraph& g);

}  // namespace condorcet3

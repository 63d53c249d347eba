#pragma once

// Exhaustive axiom checkers over all anonymous profiles up to a voter bound.
// Each checker reports every violation it counts and keeps the first few as
// witnesses, in canonical profile order regardless of the worker count.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "condorcet3/core.hpp"
#include "condorcet3/rules.hpp"

namespace condorcet3 {

enum class AxiomId {
  reinforcement,
  subset_reinforcement,
  superset_reinforcement,
  optimist_participation,
  positive_involvement,
  singleton_negative_involvement,
  fishburn_participation,
  resolute_participation,
  condorcet_consistency,
  strong_condorcet,
  homogeneity,
  monotonicity,
  positive_responsiveness,
  tiebreak_positive_responsiveness,
  neutrality,
  refinement,
  continuity_probe,
};

std::string axiom_name(AxiomId id);
// Throws std::invalid_argument.
AxiomId parse_axiom(std::string_view name);
std::vector<AxiomId> all_axioms();

struct WitnessEntry {
  std::string label;  // "P", "P-j", "P1+P2", ...
  Profile profile;
  ChoiceSet output;
  std::string rule;  // empty: the report's rule
};

struct Witness {
  std::vector<WitnessEntry> entries;
  std::string note;

  // "P1=1abc+1bac {a,b}; P2=1abc+1bca {b}; P1+P2=2abc+1bac+1bca {a,b} (note)"
  std::string to_string() const;
};

enum class Verdict { holds, violated };

struct AxiomReport {
  std::string rule;
  std::string axiom;  // axiom name plus parameters, e.g. "refinement(maximin)"
  Count bound = 0;
  std::uint64_t violations = 0;
  std::vector<Witness> witnesses;

  Verdict verdict() const { return violations == 0 ? Verdict::holds : Verdict::violated; }
  bool holds() const { return violations == 0; }
  // "RULE axiom=.. bound=.. verdict=.." then one indented line per witness.
  std::string to_text() const;
};

struct CheckOptions {
  std::size_t max_witnesses = 10;
  int workers = 0;  // <= 0: default_workers()
  // Responsiveness: how many voters may improve x over y at once.
  int max_swaps = 1;
};

enum class ReinforcementVariant { full, subset, superset };
enum class ParticipationVariant { optimist, positive_involvement, singleton_negative_involvement, fishburn };
enum class ResponsivenessVariant { monotonicity, positive, tiebreak_positive };
enum class CondorcetVariant { standard, strong };

// Unordered pairs of non-empty profiles with n1 + n2 <= bound.
AxiomReport check_reinforcement(const Rule& rule, ReinforcementVariant variant, Count bound,
                                const CheckOptions& opt = {});
// Every profile with 2 <= n <= bound against each single-voter removal.
AxiomReport check_participation(const Rule& rule, ParticipationVariant variant, Count bound,
                                const CheckOptions& opt = {});
// The rule made resolute by picking the tiebreak-highest winner.
AxiomReport check_resolute_participation(const Rule& rule, LinearOrder tiebreak, Count bound,
                                         const CheckOptions& opt = {});
AxiomReport check_responsiveness(const Rule& rule, ResponsivenessVariant variant, Count bound,
                                 const CheckOptions& opt = {});
// f(P) == f(2P) for 1 <= n <= bound.
AxiomReport check_homogeneity(const Rule& rule, Count bound, const CheckOptions& opt = {});
AxiomReport check_condorcet(const Rule& rule, CondorcetVariant variant, Count bound,
                            const CheckOptions& opt = {});
// f_lower(P) is a subset of f_upper(P).
AxiomReport check_refinement(const Rule& lower, const Rule& upper, Count bound,
                             const CheckOptions& opt = {});
AxiomReport check_neutrality(const Rule& rule, Count bound, const CheckOptions& opt = {});

// Finite probe of f(nP + P2) being a subset of f(P) for large n.
struct ContinuityProbe {
  Count horizon = 0;
  // Least n' <= horizon with the inclusion holding for all n in [n', horizon].
  std::optional<Count> threshold;
};
ContinuityProbe continuity_probe(const Rule& rule, const Profile& p, const Profile& p2, Count horizon);

// Per removal instance, for every rule in all_rule_ids() that is defined on
// the instance: optimist participation holds iff positive involvement and
// singleton negative involvement both hold. Witnesses are disagreeing
// instances.
AxiomReport verify_optimist_equivalence(Count bound, const CheckOptions& opt = {});

struct AxiomParams {
  std::optional<LinearOrder> tiebreak;  // resolute_participation
  std::optional<Rule> upper;            // refinement
  std::optional<Profile> p;             // continuity_probe
  std::optional<Profile> p2;            // continuity_probe
  CheckOptions options;
};
// Dispatches on AxiomId. continuity_probe reports a violation when no
// threshold is found within the bound used as horizon. Throws
// std::invalid_argument when a required parameter is missing.
AxiomReport check_axiom(const Rule& rule, AxiomId axiom, Count bound, const AxiomParams& params = {});

// Re-evaluates every entry of a witness; true iff all outputs reproduce.
bool replays(const Rule& rule, const Witness& w);

}  // namespace condorcet3

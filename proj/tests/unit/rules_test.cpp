#include <gtest/gtest.h>

#include <random>

#include "condorcet3/rules.hpp"
#include "test_support.hpp"

namespace condorcet3 {
namespace {

using testing::for_each_profile;
using testing::has_zero_margin;
using testing::slow_margins;

ChoiceSet eval(RuleId id, const char* profile) { return evaluate(id, parse_profile(profile)); }
ChoiceSet set(const char* s) { return ChoiceSet::parse(s); }

bool is_condorcet_extension(RuleId id) {
  return id != RuleId::borda && id != RuleId::plurality;
}

TEST(RuleNames, ParseAliasesAndScoring) {
  EXPECT_EQ(Rule::parse("uc_bordes").id(), RuleId::banks);
  EXPECT_EQ(Rule::parse("Schwartz").id(), RuleId::llull);
  EXPECT_EQ(Rule::parse("uc-fishburn").id(), RuleId::llull);
  EXPECT_EQ(Rule::parse("llull").name(), "llull");
  const Rule s = Rule::parse("scoring(2, 1, 0)");
  EXPECT_EQ(s.id(), RuleId::scoring);
  EXPECT_EQ(s.name(), "scoring(2,1,0)");
  EXPECT_EQ(Rule::parse("scoring(1/2,1/3,0)").vector()->integer_weights(),
            (std::array<std::int64_t, 3>{3, 2, 0}));
  EXPECT_THROW(Rule::parse("instant_runoff"), std::invalid_argument);
  EXPECT_THROW(Rule::parse("scoring(1,0)"), std::invalid_argument);
  for (RuleId id : all_rule_ids()) EXPECT_EQ(Rule::parse(rule_name(id)).id(), id);
}

TEST(RulePaths, TableDrivenSet) {
  for (RuleId id : {RuleId::top_cycle, RuleId::uc_mckelvey, RuleId::banks, RuleId::uc_gillies,
                    RuleId::llull, RuleId::stable_voting}) {
    EXPECT_EQ(Rule(id).path(), EvaluationPath::table_driven);
  }
  EXPECT_EQ(Rule(RuleId::maximin).path(), EvaluationPath::definitional);
  EXPECT_EQ(Rule(RuleId::kemeny).path(), EvaluationPath::oracle);
}

TEST(ScoringVector, Monotonicity) {
  EXPECT_EQ(borda_vector().monotonicity(), Monotonicity::strict);
  EXPECT_EQ(plurality_vector().monotonicity(), Monotonicity::weak);
  EXPECT_EQ((ScoringVector{{1, 1}, {1, 1}, {1, 1}}).monotonicity(), Monotonicity::other);
  EXPECT_EQ(Rational::parse("2/4"), Rational::parse("1/2"));
  EXPECT_LT(Rational::parse("1/3"), Rational::parse("1/2"));
  EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
}

TEST(Definitional, PaperExamples) {
  EXPECT_EQ(eval(RuleId::maximin, "4abc+2bca+3cab"), set("a"));
  EXPECT_EQ(eval(RuleId::maximin, "1abc+1bca+1cab"), set("abc"));
  EXPECT_EQ(eval(RuleId::maximin, "3abc+3bca+2cab+1acb"), set("a"));
  EXPECT_EQ(eval(RuleId::leximin, "1acb+1cab"), set("ac"));
  EXPECT_EQ(eval(RuleId::leximin, "1abc+1acb+2cab"), set("a"));
  EXPECT_EQ(eval(RuleId::leximin, "2abc+1bca+2cab"), set("a"));
  EXPECT_EQ(eval(RuleId::nanson, "1abc+1acb+2cab"), set("ac"));
  EXPECT_EQ(eval(RuleId::strict_nanson, "2abc+1bca+2cab"), set("c"));
  EXPECT_EQ(eval(RuleId::nanson, "2abc+1bca+2cab"), set("a"));
  EXPECT_EQ(eval(RuleId::black, "3abc+1bca+4cab"), set("a"));
  EXPECT_EQ(eval(RuleId::black, "4acb+5bac+3cab+5cba"), set("c"));
  EXPECT_EQ(eval(RuleId::baldwin, "4acb+5bac+3cab+5cba"), set("a"));
  EXPECT_EQ(eval(RuleId::baldwin, "1abc+3bca+4cab"), set("bc"));
  EXPECT_EQ(eval(RuleId::baldwin, "1abc+1bca+1cab"), set("abc"));
  EXPECT_EQ(eval(RuleId::copeland, "1abc+1cab"), set("a"));
  EXPECT_EQ(eval(RuleId::copeland, "1acb+1cab"), set("ac"));
  EXPECT_EQ(eval(RuleId::copeland, "1abc+1bca+1cab"), set("abc"));
  EXPECT_EQ(top_cycle_def(margins(parse_profile("1acb+1cab"))), set("ac"));
  EXPECT_EQ(top_cycle_def(margins(parse_profile("3abc+1bca+2cab"))), set("abc"));
  EXPECT_EQ(eval(RuleId::defensible, "4abc+2bca+3cab"), set("ac"));
  // The linked Graph K profile induces the pattern with a and c swapped
  // roles; the drawn labelling wins with a.
  EXPECT_EQ(eval(RuleId::defensible, "3abc+2bca+4cab"), set("c"));
  EXPECT_EQ(evaluate(RuleId::defensible, canonical_table_profile(GraphKind::K)), set("a"));
  EXPECT_EQ(eval(RuleId::defensible, "1abc+1bca+1cab"), set("abc"));
  EXPECT_EQ(eval(RuleId::borda, "2abc+1bca+2cab"), set("a"));
  EXPECT_EQ(eval(RuleId::plurality, "3abc+2bca+1bac+1cab"), set("ab"));
  EXPECT_EQ(evaluate(Rule::scoring(borda_vector()), parse_profile("abc")), set("a"));
}

TEST(TableDriven, PaperExamples) {
  EXPECT_EQ(eval(RuleId::stable_voting, "1abc+1cab"), set("a"));
  EXPECT_EQ(eval(RuleId::uc_gillies, "3abc+1bca+2cab"), set("ac"));
  EXPECT_EQ(eval(RuleId::llull, "2abc+1bca+1cab"), set("a"));
  EXPECT_THROW(table_rule(RuleId::black, MarginGraph()), UnsupportedRule);
  EXPECT_THROW(evaluate(RuleId::maximin, Profile()), std::invalid_argument);
}

TEST(TableDriven, CanonicalProfilesHaveTheirKind) {
  for (int k = 1; k <= 12; ++k) {
    const auto kind = static_cast<GraphKind>(k);
    const OrdinalClass cls = classify(margins(table_profile(kind)));
    EXPECT_EQ(cls.kind, kind);
    EXPECT_EQ(cls.relabel.is_identity(), kind != GraphKind::K && kind != GraphKind::L);
    const OrdinalClass canon = classify(margins(canonical_table_profile(kind)));
    EXPECT_EQ(canon.kind, kind);
    EXPECT_TRUE(canon.relabel.is_identity()) << to_string(kind);
  }
}

TEST(Oracles, PaperExamples) {
  const Profile g = parse_profile("4abc+2bca+3cab");
  EXPECT_EQ(maximin_equivalent(MaximinEquivalent::split_cycle, g), set("a"));
  EXPECT_EQ(maximin_equivalent(MaximinEquivalent::kemeny, parse_profile("abc+bca+cab")), set("abc"));
  EXPECT_EQ(maximin_equivalent(MaximinEquivalent::beat_path, parse_profile("2acb+1cab")), set("a"));
  EXPECT_THROW(dodgson(parse_profile("10abc")), BoundExceeded);
  EXPECT_THROW(young(parse_profile("5abc+5bca")), BoundExceeded);
}

TEST(Artificial, ScoresFollowTheTwoCaseTables) {
  const Profile all6 = parse_profile("abc+acb+bac+bca+cab+cba");
  EXPECT_EQ(artificial_scores(all6), (std::array<Count, 3>{37, 33, 28}));
  EXPECT_EQ(artificial_rule(all6), set("a"));
  const Profile cyc = parse_profile("abc+bca+cab");
  EXPECT_EQ(artificial_scores(cyc), (std::array<Count, 3>{23, 20, 13}));
  EXPECT_EQ(artificial_rule(cyc), set("a"));
}

TEST(Dominance, PaperExamples) {
  EXPECT_TRUE(dominates_all_scoring(parse_profile("3abc+2bca+1bac+1cab"), Candidate::b,
                                    DominanceMode::strict));
  EXPECT_TRUE(dominates_all_scoring(parse_profile("4abc+3bca+2bac+2cab"), Candidate::b,
                                    DominanceMode::weak));
  EXPECT_FALSE(dominates_all_scoring(parse_profile("2abc+1bac+1bca+1cab"), Candidate::a,
                                     DominanceMode::strict));
}

// Sampled vectors as an oracle: dominance must agree with every sampled
// vector of the class, and a failure must be visible on some vector.
TEST(Dominance, AgreesWithSampledVectors) {
  std::vector<ScoringVector> strict_vs, weak_vs;
  for (int s1 = 0; s1 <= 12; ++s1) {
    for (int s2 = 0; s2 <= s1; ++s2) {
      for (int s3 = 0; s3 <= s2; ++s3) {
        ScoringVector v{{s1, 1}, {s2, 1}, {s3, 1}};
        if (v.monotonicity() == Monotonicity::strict) strict_vs.push_back(v);
        if (v.monotonicity() != Monotonicity::other) weak_vs.push_back(v);
      }
    }
  }
  for_each_profile(1, 5, [&](const Profile& p) {
    for (Candidate x : kCandidates) {
      for (auto [mode, vs] : {std::pair{DominanceMode::strict, &strict_vs},
                              std::pair{DominanceMode::weak, &weak_vs}}) {
        bool all_unique = true;
        for (const ScoringVector& v : *vs) {
          if (scoring_rule(p, v) != ChoiceSet::single(x)) all_unique = false;
        }
        ASSERT_EQ(dominates_all_scoring(p, x, mode), all_unique) << format_profile(p);
      }
    }
  });
}

TEST(Invariants, CondorcetConsistency) {
  for_each_profile(1, 8, [](const Profile& p) {
    const auto w = condorcet_winner(slow_margins(p));
    if (!w) return;
    for (RuleId id : all_rule_ids()) {
      if (!is_condorcet_extension(id)) continue;
      if ((id == RuleId::dodgson || id == RuleId::young) && p.voters() > 6) continue;
      ASSERT_EQ(evaluate(id, p), ChoiceSet::single(*w)) << rule_name(id) << " " << format_profile(p);
    }
  });
}

TEST(Invariants, DefinitionalRulesMatchTheTable) {
  const std::pair<RuleId, ChoiceSet (*)(const MarginGraph&)> defs[] = {
      {RuleId::top_cycle, top_cycle_def}, {RuleId::defensible, defensible_set},
      {RuleId::copeland, copeland},       {RuleId::maximin, maximin},
      {RuleId::leximin, leximin},
  };
  for_each_profile(1, 8, [&](const Profile& p) {
    const MarginGraph g = slow_margins(p);
    for (const auto& [id, fn] : defs) ASSERT_EQ(fn(g), table_rule(id, g)) << rule_name(id);
    ASSERT_EQ(nanson(g, false), table_rule(RuleId::nanson, g)) << format_profile(p);
    ASSERT_EQ(nanson(g, true), table_rule(RuleId::strict_nanson, g)) << format_profile(p);
  });
}

TEST(Invariants, MarginClusterEquivalence) {
  for_each_profile(1, 8, [](const Profile& p) {
    const MarginGraph g = margins(p);
    const ChoiceSet m = maximin(g);
    ASSERT_EQ(split_cycle(g), m) << format_profile(p);
    ASSERT_EQ(beat_path(g), m) << format_profile(p);
    ASSERT_EQ(ranked_pairs(g), m) << format_profile(p);
    ASSERT_EQ(kemeny(g), m) << format_profile(p);
  });
}

TEST(Invariants, LeximinIsMaximinWithBordaTiebreak) {
  for_each_profile(1, 8, [](const Profile& p) {
    const MarginGraph g = margins(p);
    const auto beta = borda_scores(g);
    const CandidateSet mm = maximin(g);
    Count best = std::numeric_limits<Count>::min();
    for (Candidate x : mm.members()) best = std::max(best, beta[index(x)]);
    CandidateSet expect;
    for (Candidate x : mm.members()) {
      if (beta[index(x)] == best) expect.insert(x);
    }
    ASSERT_EQ(leximin(g).set(), expect) << format_profile(p);
    if (!has_zero_margin(g)) ASSERT_EQ(nanson(g, false), leximin(g)) << format_profile(p);
  });
}

TEST(Invariants, UniquelyWeightedCollapse) {
  for_each_profile(1, 8, [](const Profile& p) {
    const MarginGraph g = margins(p);
    const Count x = std::abs(g.ab()), y = std::abs(g.ac()), z = std::abs(g.bc());
    if (x == 0 || y == 0 || z == 0 || x == y || y == z || x == z) return;
    const ChoiceSet m = maximin(g);
    ASSERT_EQ(m.size(), 1);
    for (RuleId id : {RuleId::leximin, RuleId::nanson, RuleId::strict_nanson, RuleId::stable_voting}) {
      ASSERT_EQ(evaluate_margins(id, g), m);
    }
  });
}

TEST(Invariants, Neutrality) {
  Profile artificial_witness;
  for_each_profile(1, 7, [&](const Profile& p) {
    for (const Permutation& s : Permutation::all()) {
      const Profile q = permute(s, p);
      for (RuleId id : all_rule_ids()) {
        if ((id == RuleId::dodgson || id == RuleId::young) && p.voters() > 5) continue;
        const ChoiceSet lhs = evaluate(id, q);
        const ChoiceSet rhs(permute(s, evaluate(id, p).set()));
        if (id == RuleId::artificial) {
          if (lhs != rhs && artificial_witness.empty()) artificial_witness = p;
          continue;
        }
        ASSERT_EQ(lhs, rhs) << rule_name(id) << " " << format_profile(p) << " " << s.to_string();
      }
    }
  });
  EXPECT_FALSE(artificial_witness.empty());
}

TEST(Invariants, Pairwiseness) {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> d(-7, 7);
  for (int i = 0; i < 200; ++i) {
    Count ab = d(rng), ac = d(rng), bc = d(rng);
    ac += (ac - ab) % 2;
    bc += (bc - ab) % 2;
    const MarginGraph g(ab, ac, bc);
    ASSERT_TRUE(g.same_parity());
    const Profile p = mcgarvey(g);
    if (p.empty()) continue;
    // A second profile with the same margins: add a balanced pair.
    const Profile q = p + parse_profile("abc+cba") + parse_profile("bca+acb");
    ASSERT_EQ(margins(q), g);
    for (RuleId id : all_rule_ids()) {
      if (id == RuleId::artificial || id == RuleId::plurality) continue;
      if ((id == RuleId::dodgson || id == RuleId::young) && q.voters() > kDodgsonYoungVoterBound) continue;
      ASSERT_EQ(evaluate(id, p), evaluate(id, q)) << rule_name(id) << " " << g.to_string();
    }
  }
}

}  // namespace
}  // namespace condorcet3

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "condorcet3/core.hpp"
#include "test_support.hpp"

namespace condorcet3 {
namespace {

using testing::slow_margins;

Profile random_profile(std::mt19937& rng, int max_count) {
  std::uniform_int_distribution<int> d(0, max_count);
  std::array<Count, 6> counts{};
  for (Count& k : counts) k = d(rng);
  return Profile(counts);
}

TEST(Permutation, GroupAxioms) {
  const auto& all = Permutation::all();
  std::set<Permutation> seen(all.begin(), all.end());
  EXPECT_EQ(seen.size(), 6u);
  EXPECT_TRUE(all[0].is_identity());
  for (const Permutation& p : all) {
    EXPECT_TRUE((p * p.inverse()).is_identity());
    for (const Permutation& q : all) {
      EXPECT_TRUE(seen.count(p * q));
      for (Candidate x : kCandidates) EXPECT_EQ((p * q)(x), p(q(x)));
    }
  }
  EXPECT_THROW(Permutation(Candidate::a, Candidate::a, Candidate::b), std::invalid_argument);
}

TEST(LinearOrder, CanonicalIndicesAndPositions) {
  const char* names[] = {"abc", "acb", "bac", "bca", "cab", "cba"};
  for (int i = 0; i < 6; ++i) {
    const LinearOrder o = order_at(i);
    EXPECT_EQ(to_string(o), names[i]);
    EXPECT_NE(top(o), middle(o));
    EXPECT_NE(middle(o), bottom(o));
    EXPECT_NE(top(o), bottom(o));
    EXPECT_EQ(make_order(top(o), middle(o), bottom(o)), o);
    EXPECT_EQ(to_string(swap_adjacent(swap_adjacent(o, 0), 0)), names[i]);
  }
  EXPECT_EQ(swap_adjacent(LinearOrder::abc, 1), LinearOrder::acb);
  EXPECT_EQ(swap_adjacent(LinearOrder::abc, 0), LinearOrder::bac);
}

TEST(ParseProfile, Examples) {
  const Profile p = parse_profile("3abc+2bca+1bac+1cab");
  EXPECT_EQ(p.count(LinearOrder::abc), 3);
  EXPECT_EQ(p.count(LinearOrder::bca), 2);
  EXPECT_EQ(p.count(LinearOrder::bac), 1);
  EXPECT_EQ(p.count(LinearOrder::cab), 1);
  EXPECT_EQ(p.voters(), 7);
  EXPECT_EQ(parse_profile("abc").voters(), 1);
  EXPECT_EQ(parse_profile("1abc+1ABC").count(LinearOrder::abc), 2);
  EXPECT_EQ(parse_profile(" 2 a c b + c a b ").count(LinearOrder::acb), 2);
}

TEST(ParseProfile, Errors) {
  for (const char* bad : {"", "+", "abc+", "0abc", "-1abc", "abd", "aab", "ab", "abcc", "2", "abc++bca"}) {
    EXPECT_THROW(parse_profile(bad), ProfileParseError) << bad;
  }
  try {
    parse_profile("abc+xyz");
    FAIL();
  } catch (const ProfileParseError& e) {
    EXPECT_NE(std::string(e.what()).find("xyz"), std::string::npos);
  }
}

TEST(FormatProfile, RoundTripAndCanonicalOrder) {
  EXPECT_EQ(format_profile(parse_profile("cab+3abc+bac+2bca")), "3abc+1bac+2bca+1cab");
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    Profile p = random_profile(rng, 4);
    if (p.empty()) continue;
    EXPECT_EQ(parse_profile(format_profile(p)), p);
  }
}

TEST(Margins, Examples) {
  EXPECT_EQ(margins(parse_profile("2abc+1bca+2cab")), MarginGraph::from_cycle(3, 1, 1));
  EXPECT_EQ(margins(parse_profile("abc+acb+bac+bca+cab+cba")), MarginGraph());
  const MarginGraph g = margins(parse_profile("2acb+1cab"));
  EXPECT_EQ(g.m(Candidate::a, Candidate::b), 3);
  EXPECT_EQ(g.m(Candidate::a, Candidate::c), 1);
  EXPECT_EQ(g.m(Candidate::c, Candidate::b), 3);
  EXPECT_EQ(margins(Profile()), MarginGraph());
}

TEST(Margins, MatchVoterCountAndParity) {
  std::mt19937 rng(11);
  for (int i = 0; i < 500; ++i) {
    const Profile p = random_profile(rng, 6);
    const MarginGraph g = margins(p);
    EXPECT_EQ(g, slow_margins(p));
    for (Count m : {g.ab(), g.ac(), g.bc()}) {
      EXPECT_EQ(((m % 2) + 2) % 2, p.voters() % 2);
    }
    for (Candidate x : kCandidates) {
      EXPECT_EQ(g.m(x, x), 0);
      for (Candidate y : kCandidates) EXPECT_EQ(g.m(x, y), -g.m(y, x));
    }
  }
}

TEST(Margins, Additivity) {
  std::mt19937 rng(13);
  for (int i = 0; i < 300; ++i) {
    const Profile p = random_profile(rng, 5), q = random_profile(rng, 5);
    EXPECT_EQ(margins(combine(p, q)), margins(p) + margins(q));
  }
}

TEST(ProfileArithmetic, CombineAndFold) {
  EXPECT_EQ(format_profile(combine(parse_profile("2abc+2bca+2cab"), parse_profile("2acb+1cab"))),
            "2abc+2acb+2bca+3cab");
  const Profile p = parse_profile("2abc+1bca+2cab");
  EXPECT_EQ(combine(p, Profile()), p);
  EXPECT_EQ(combine(parse_profile("abc+bac"), parse_profile("abc+bca")),
            parse_profile("2abc+bac+bca"));
  EXPECT_EQ(t_fold(parse_profile("abc"), 3), parse_profile("3abc"));
  EXPECT_EQ(t_fold(p, 1), p);
  EXPECT_EQ(margins(t_fold(p, 2)), MarginGraph::from_cycle(6, 2, 2));
  EXPECT_THROW(t_fold(p, 0), std::invalid_argument);
  Profile q = p;
  EXPECT_THROW(q.remove(LinearOrder::acb), std::invalid_argument);
}

TEST(Winners, CondorcetAndIntermediate) {
  EXPECT_EQ(condorcet_winner(MarginGraph(3, 1, -3)), Candidate::a);
  EXPECT_FALSE(condorcet_winner(MarginGraph()).has_value());
  EXPECT_FALSE(condorcet_winner(MarginGraph::from_cycle(3, 1, 1)).has_value());
  // Graph F: m_ab > m_cb > m_ca = 0.
  EXPECT_EQ(intermediate_condorcet_winners(margins(parse_profile("1abc+1acb+2cab"))),
            (CandidateSet{Candidate::a, Candidate::c}));
  EXPECT_TRUE(intermediate_condorcet_winners(MarginGraph()).empty());
  EXPECT_EQ(intermediate_condorcet_winners(MarginGraph(3, 1, -3)), CandidateSet{Candidate::a});
}

TEST(Winners, BordaScores) {
  EXPECT_EQ(borda_scores(MarginGraph::from_cycle(3, 1, 1)), (std::array<Count, 3>{2, -2, 0}));
  for (Count ab = -9; ab <= 9; ++ab) {
    for (Count ac = -9; ac <= 9; ac += 2) {
      for (Count bc = -9; bc <= 9; bc += 3) {
        const MarginGraph g(ab, ac, bc);
        const auto s = borda_scores(g);
        EXPECT_EQ(s[0] + s[1] + s[2], 0);
        if (auto w = condorcet_winner(g)) EXPECT_GT(s[index(*w)], 0);
      }
    }
  }
}

// Brute-force oracle: the pattern a permuted graph must show, written out as
// the cyclic weights x = m_ab, y = m_bc, z = m_ca plus the transitive kinds.
bool oracle_pattern(GraphKind k, const MarginGraph& g) {
  const Count ab = g.ab(), bc = g.bc(), ca = -g.ac(), cb = -g.bc();
  switch (k) {
    case GraphKind::A: return ab == bc && bc == ca && ca > 0;
    case GraphKind::B: return ab == 0 && bc == 0 && ca == 0;
    case GraphKind::C: return ab > bc && bc == ca && ca > 0;
    case GraphKind::D: return ab > bc && bc == 0 && ca == 0;
    case GraphKind::E: return ab == cb && cb > 0 && ca == 0;
    case GraphKind::F: return ab > cb && cb > 0 && ca == 0;
    case GraphKind::G: return ab > bc && bc > ca && ca > 0;
    case GraphKind::H: return ab > bc && bc > 0 && ca == 0;
    case GraphKind::I: return ab == bc && bc > ca && ca > 0;
    case GraphKind::J: return ab == bc && bc > 0 && ca == 0;
    case GraphKind::K: return bc > ab && ab > ca && ca > 0;
    case GraphKind::L: return bc > ab && ab > 0 && ca == 0;
    default: return false;
  }
}

TEST(Classify, Examples) {
  const OrdinalClass a = classify(MarginGraph::from_cycle(2, 2, 2));
  EXPECT_EQ(a.kind, GraphKind::A);
  EXPECT_TRUE(a.relabel.is_identity());
  EXPECT_EQ(classify(margins(parse_profile("3abc+2bca+4cab"))).kind, GraphKind::K);
  EXPECT_EQ(classify(margins(parse_profile("2abc+1bca+2cab"))).kind, GraphKind::C);
  const OrdinalClass cw = classify(MarginGraph(3, 1, -3));
  EXPECT_EQ(cw.kind, GraphKind::condorcet_winner);
  EXPECT_EQ(cw.winner, Candidate::a);
}

TEST(Classify, TotalNeutralAndMatchesOracle) {
  int graphs = 0;
  std::set<GraphKind> kinds;
  for (int parity = 0; parity < 2; ++parity) {
    for (Count ab = -9; ab <= 9; ++ab) {
      for (Count ac = -9; ac <= 9; ++ac) {
        for (Count bc = -9; bc <= 9; ++bc) {
          const MarginGraph g(ab, ac, bc);
          if (!g.same_parity() || ((ab % 2) + 2) % 2 != parity) continue;
          ++graphs;
          const OrdinalClass cls = classify(g);
          kinds.insert(cls.kind);
          if (cls.kind == GraphKind::condorcet_winner) {
            ASSERT_EQ(condorcet_winner(g), cls.winner);
            continue;
          }
          ASSERT_FALSE(condorcet_winner(g).has_value());
          const MarginGraph canon = g.permuted(cls.relabel);
          ASSERT_TRUE(oracle_pattern(cls.kind, canon)) << g.to_string();
          // Exactly one kind fits under some relabelling, and the recorded
          // relabelling is the first that fits.
          int fitting_kinds = 0;
          for (int k = 1; k <= 12; ++k) {
            bool fits = false;
            for (const Permutation& s : Permutation::all()) {
              if (oracle_pattern(static_cast<GraphKind>(k), g.permuted(s))) fits = true;
            }
            fitting_kinds += fits;
          }
          ASSERT_EQ(fitting_kinds, 1);
          for (const Permutation& s : Permutation::all()) {
            if (s == cls.relabel) break;
            ASSERT_FALSE(oracle_pattern(cls.kind, g.permuted(s)));
          }
          for (const Permutation& s : Permutation::all()) {
            ASSERT_EQ(classify(g.permuted(s)).kind, cls.kind);
          }
        }
      }
    }
  }
  EXPECT_EQ(kinds.size(), 13u);
  EXPECT_GT(graphs, 1000);
}

TEST(Permute, ProfileAndMarginsCommute) {
  std::mt19937 rng(17);
  for (int i = 0; i < 100; ++i) {
    const Profile p = random_profile(rng, 4);
    for (const Permutation& s : Permutation::all()) {
      EXPECT_EQ(margins(permute(s, p)), margins(p).permuted(s));
      for (Candidate x : kCandidates) {
        for (Candidate y : kCandidates) {
          EXPECT_EQ(margins(p).permuted(s).m(s(x), s(y)), margins(p).m(x, y));
        }
      }
    }
  }
}

TEST(McGarvey, RoundTripAllTargets) {
  int targets = 0;
  for (Count ab = -9; ab <= 9; ++ab) {
    for (Count ac = -9; ac <= 9; ++ac) {
      for (Count bc = -9; bc <= 9; ++bc) {
        const MarginGraph g(ab, ac, bc);
        if (!g.same_parity()) {
          EXPECT_THROW(mcgarvey(g), InvalidMarginTarget);
          continue;
        }
        ++targets;
        ASSERT_EQ(margins(mcgarvey(g)), g) << g.to_string();
      }
    }
  }
  EXPECT_EQ(targets, 10 * 10 * 10 + 9 * 9 * 9);
  EXPECT_EQ(margins(mcgarvey(MarginGraph::from_cycle(2, 0, 0))), MarginGraph::from_cycle(2, 0, 0));
}

TEST(ChoiceSet, ParseAndFormat) {
  EXPECT_EQ(ChoiceSet::parse("{a,c}").to_string(), "{a,c}");
  EXPECT_EQ(ChoiceSet::parse("abc"), ChoiceSet::all());
  EXPECT_THROW(ChoiceSet(CandidateSet{}), std::invalid_argument);
}

}  // namespace
}  // namespace condorcet3

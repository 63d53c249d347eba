#include <gtest/gtest.h>

#include <random>
#include <set>
#include <sstream>

#include "condorcet3/axioms.hpp"
#include "condorcet3/satgen.hpp"

namespace condorcet3 {
namespace {

std::string dimacs(const CnfInstance& inst) {
  std::ostringstream out;
  emit_dimacs(inst, out);
  return out.str();
}

bool brute_force_sat(const CnfFormula& f) {
  std::vector<bool> a(f.vars + 1);
  for (std::uint32_t mask = 0; mask < (1u << f.vars); ++mask) {
    for (int v = 1; v <= f.vars; ++v) a[v] = (mask >> (v - 1)) & 1u;
    if (f.satisfied_by(a)) return true;
  }
  return false;
}

TEST(BuildInstance, RejectsSmallBound) {
  EXPECT_THROW(build_instance(1), std::invalid_argument);
  EXPECT_THROW(build_instance(0), std::invalid_argument);
}

TEST(BuildInstance, VariablesDenseInFirstAppearanceOrder) {
  for (bool neutral : {false, true}) {
    const CnfInstance inst = build_instance(4, {neutral});
    const CnfFormula& f = inst.formula();
    int seen = 0;
    for (std::size_t i = 0; i < f.clause_count(); ++i) {
      ASSERT_FALSE(f.clause(i).empty());
      for (int l : f.clause(i)) {
        const int v = std::abs(l);
        ASSERT_LE(v, seen + 1);
        seen = std::max(seen, v);
      }
    }
    EXPECT_EQ(seen, inst.num_vars());
  }
}

TEST(BuildInstance, ClauseFamilies) {
  const CnfInstance inst = build_instance(3);
  // 83 profiles; unordered pairs with n1 + n2 <= 3: (1,1) 21, (1,2) 126.
  EXPECT_EQ(inst.universe().size(), 83u);
  EXPECT_EQ(inst.num_vars(), 83 * 3 + 21 + 126);
  std::size_t units = 0;
  for (const Profile& p : inst.universe()) units += condorcet_winner(margins(p)) ? 3 : 0;
  EXPECT_EQ(inst.num_clauses(), 83 + units + (21 + 126) * 12);

  const Profile p1 = parse_profile("abc"), p2 = parse_profile("bca");
  EXPECT_EQ(inst.aux_of(p1, p2), inst.aux_of(p2, p1));
  EXPECT_THROW(inst.aux_of(parse_profile("3abc"), p2), std::out_of_range);
  EXPECT_THROW(inst.var_of(parse_profile("4abc"), Candidate::a), std::out_of_range);
  EXPECT_EQ(inst.describe(inst.var_of(parse_profile("2abc+bca"), Candidate::c)), "x 2abc+1bca c");
  EXPECT_EQ(inst.describe(inst.aux_of(p1, p2)), "v 1abc | 1bca");
}

TEST(BuildInstance, NeutralityAliasesOrbits) {
  const CnfInstance plain = build_instance(4);
  const CnfInstance inst = build_instance(4, {true});
  EXPECT_LT(inst.num_vars(), plain.num_vars());
  for (const Profile& p : inst.universe()) {
    for (const Permutation& s : Permutation::all()) {
      for (Candidate c : kCandidates) {
        EXPECT_EQ(inst.var_of(permute(s, p), s(c)), inst.var_of(p, c));
      }
    }
  }
  // The Condorcet cycle is fixed by rotations, so its three variables coincide.
  const Profile cycle = parse_profile("abc+bca+cab");
  EXPECT_EQ(inst.var_of(cycle, Candidate::a), inst.var_of(cycle, Candidate::b));
  EXPECT_EQ(inst.describe(inst.var_of(cycle, Candidate::c)), "x 1abc+1bca+1cab a,b,c");
  const Profile pair = parse_profile("abc+bac");
  EXPECT_EQ(inst.var_of(pair, Candidate::a), inst.var_of(pair, Candidate::b));
  EXPECT_NE(inst.var_of(pair, Candidate::a), inst.var_of(pair, Candidate::c));
}

TEST(Dimacs, HeaderAndRoundTrip) {
  const CnfInstance inst = build_instance(2);
  const std::string text = dimacs(inst);
  const std::string header =
      "p cnf " + std::to_string(inst.num_vars()) + " " + std::to_string(inst.num_clauses()) + "\n";
  EXPECT_NE(text.find(header), std::string::npos);
  EXPECT_NE(text.find("c 1 x 1abc a\n"), std::string::npos);
  std::istringstream in(text);
  const CnfFormula f = parse_dimacs(in);
  EXPECT_EQ(f.vars, inst.num_vars());
  EXPECT_EQ(f.clause_count(), inst.num_clauses());
  EXPECT_EQ(f.literals, inst.formula().literals);
}

TEST(Dimacs, Deterministic) {
  EXPECT_EQ(dimacs(build_instance(5)), dimacs(build_instance(5)));
  EXPECT_EQ(dimacs(build_instance(5, {true})), dimacs(build_instance(5, {true})));
}

TEST(Dimacs, MalformedInput) {
  auto parse = [](const char* s) {
    std::istringstream in(s);
    return parse_dimacs(in);
  };
  EXPECT_THROW(parse("1 2 0\n"), std::invalid_argument);
  EXPECT_THROW(parse("p cnf 2 1\n1 3 0\n"), std::invalid_argument);
  EXPECT_THROW(parse("p cnf 2 2\n1 2 0\n"), std::invalid_argument);
  EXPECT_THROW(parse("p cnf 2 1\n1 2\n"), std::invalid_argument);
  EXPECT_THROW(parse("p dnf 2 1\n1 2 0\n"), std::invalid_argument);
  EXPECT_THROW(parse("p cnf 2 1\n1 x 0\n"), std::invalid_argument);
  EXPECT_EQ(parse("c hi\np cnf 3 2\n1 -2\n 3 0 -1 0\n").clause_count(), 2u);
}

TEST(Dimacs, UnwritablePath) {
  EXPECT_THROW(emit_dimacs(build_instance(2), std::string("/nonexistent-dir/x.cnf")), std::runtime_error);
}

TEST(CheckAssignment, PaperExamples) {
  EXPECT_TRUE(check_assignment(build_instance(7), RuleId::artificial));
  const AssignmentCheck bad = check_assignment_detail(build_instance(8), RuleId::artificial);
  EXPECT_FALSE(bad.ok);
  ASSERT_TRUE(bad.clause.has_value());
  EXPECT_NE(bad.detail.find("v "), std::string::npos);
  EXPECT_TRUE(check_assignment(build_instance(4), RuleId::leximin));
}

TEST(CheckAssignment, EncodingSoundness) {
  for (RuleId id : all_rule_ids()) {
    if (id == RuleId::borda || id == RuleId::plurality) continue;
    for (Count b = 2; b <= 6; ++b) {
      const bool encoded = check_assignment(build_instance(b), id);
      const bool direct = check_reinforcement(id, ReinforcementVariant::full, b).holds();
      EXPECT_EQ(encoded, direct) << rule_name(id) << " bound " << b;
    }
  }
}

TEST(CheckAssignment, NonCondorcetRuleFailsOnUnits) {
  // Borda is consistent but not a Condorcet extension.
  EXPECT_TRUE(check_reinforcement(RuleId::borda, ReinforcementVariant::full, 5).holds());
  const AssignmentCheck r = check_assignment_detail(build_instance(5), RuleId::borda);
  ASSERT_FALSE(r.ok);
  EXPECT_EQ(build_instance(5).formula().clause(*r.clause).size(), 1u);
}

TEST(Solver, AgreesWithBruteForce) {
  std::mt19937 rng(7);
  int sat = 0, unsat = 0;
  for (int t = 0; t < 300; ++t) {
    CnfFormula f;
    f.vars = 8;
    f.starts.push_back(0);
    const int m = 15 + static_cast<int>(rng() % 30);
    for (int i = 0; i < m; ++i) {
      const int len = 2 + static_cast<int>(rng() % 2);
      std::vector<int> c;
      for (int k = 0; k < len; ++k) {
        const int v = 1 + static_cast<int>(rng() % 8);
        c.push_back(rng() % 2 ? v : -v);
      }
      f.add_clause(c);
    }
    const SolveResult r = solve(f);
    const bool expected = brute_force_sat(f);
    ASSERT_NE(r.status, SatStatus::unknown);
    EXPECT_EQ(r.status == SatStatus::sat, expected);
    if (r.status == SatStatus::sat) EXPECT_TRUE(f.satisfied_by(r.model));
    (expected ? sat : unsat)++;
  }
  EXPECT_GT(sat, 20);
  EXPECT_GT(unsat, 20);
}

TEST(Solver, EmptyClauseAndConflictBudget) {
  CnfFormula f;
  f.vars = 1;
  f.add_clause(std::vector<int>{});
  EXPECT_EQ(solve(f).status, SatStatus::unsat);
  EXPECT_EQ(to_string(SatStatus::unknown), "UNKNOWN");
}

TEST(Solver, ReinforcementInstances) {
  const CnfInstance small = build_instance(4);
  const SolveResult r4 = solve(small.formula());
  ASSERT_EQ(r4.status, SatStatus::sat);
  EXPECT_TRUE(small.formula().satisfied_by(r4.model));
  EXPECT_EQ(solve(build_instance(5, {true}).formula()).status, SatStatus::unsat);
  EXPECT_EQ(solve(build_instance(4, {true}).formula()).status, SatStatus::sat);
}

TEST(ProofReplay, AllTheoremsPass) {
  for (const char* id : {"4.1", "4.3", "4.5"}) {
    const ProofReport r = proof_replay(id);
    EXPECT_TRUE(r.ok()) << r.to_text();
    EXPECT_EQ(r.to_text().find("FAILED"), std::string::npos);
  }
  EXPECT_THROW(proof_replay("4.2"), std::invalid_argument);
}

TEST(ProofReplay, CaseStructure) {
  const ProofReport r41 = proof_replay("4.1");
  ASSERT_EQ(r41.cases.size(), 3u);
  EXPECT_EQ(r41.cases[1].label, "b in f(P1)");
  const std::string t41 = r41.to_text();
  EXPECT_NE(t41.find("Condorcet winner of P1+P2 = 2abc+2acb+2bca+3cab is c"), std::string::npos);

  const std::string t43 = proof_replay("4.3").to_text();
  for (const char* claim : {"P7 = 2abc+1acb+1bca+3cab is c", "P8 = 1abc+2acb+2bca+2cab is c",
                            "P4 = 1abc+1acb+1bac+2cab is a", "P6 = 2acb+1bac+1bca+1cab is a",
                            "P9 = P1 + P5", "P9 = P2 + P3", "hence f(P9) = {c}"}) {
    EXPECT_NE(t43.find(claim), std::string::npos) << claim;
  }

  const ProofReport r45 = proof_replay("4.5");
  ASSERT_EQ(r45.cases.size(), 1u);
  const std::string t45 = r45.to_text();
  EXPECT_NE(t45.find("P1+P2 = 1abc+1bac+1cab is a"), std::string::npos);
  EXPECT_NE(t45.find("P2+P3 = 2abc+1bac+1bca+1cab is a"), std::string::npos);
  EXPECT_NE(t45.find("hence f(P2) = {a,b}"), std::string::npos);
}

}  // namespace
}  // namespace condorcet3

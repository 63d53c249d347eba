#pragma once

// CNF encodings of "Condorcet extension + reinforcement" over all anonymous
// profiles up to a voter bound, DIMACS I/O, a small DPLL solver, and
// mechanical replays of the three reinforcement impossibility proofs.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "condorcet3/core.hpp"
#include "condorcet3/rules.hpp"

namespace condorcet3 {

// Clauses over variables 1..vars, stored flat.
struct CnfFormula {
  int vars = 0;
  std::vector<int> literals;
  std::vector<std::size_t> starts;  // clause i is literals[starts[i], starts[i+1])

  std::size_t clause_count() const { return starts.empty() ? 0 : starts.size() - 1; }
  std::span<const int> clause(std::size_t i) const {
    return {literals.data() + starts[i], starts[i + 1] - starts[i]};
  }
  void add_clause(std::span<const int> lits);
  // Every clause satisfied; assignment[v] for v in 1..vars (index 0 unused).
  bool satisfied_by(const std::vector<bool>& assignment) const;
};

struct CnfOptions {
  bool neutrality = false;
};

class CnfInstance {
 public:
  Count bound() const { return bound_; }
  bool neutral() const { return neutral_; }
  const std::vector<Profile>& universe() const { return universe_; }
  const CnfFormula& formula() const { return formula_; }
  int num_vars() const { return formula_.vars; }
  std::size_t num_clauses() const { return formula_.clause_count(); }

  // Variable meaning c in f(P). Throws std::out_of_range outside the universe.
  int var_of(const Profile& p, Candidate c) const;
  // Variable meaning f(P1) and f(P2) intersect; order of the pair is
  // irrelevant. Throws std::out_of_range when n1 + n2 > bound.
  int aux_of(const Profile& p1, const Profile& p2) const;
  // True iff p owns its variables (always, without neutrality).
  bool is_representative(const Profile& p) const;
  // "x 2abc+1bca c", "x 1abc+1bac a,b" or "v 1abc | 1bca".
  std::string describe(int var) const;

 private:
  friend CnfInstance build_instance(Count bound, CnfOptions options);

  std::size_t index_of(const Profile& p) const;

  Count bound_ = 0;
  bool neutral_ = false;
  std::vector<Profile> universe_;
  std::vector<std::uint64_t> offset_;      // by voter count
  std::vector<std::size_t> rep_;           // universe index of the orbit representative
  std::vector<Permutation> to_rep_;        // to_rep_[i](universe_[i]) == universe_[rep_[i]]
  std::vector<int> base_var_;              // by universe index; 0 unless a representative
  std::vector<std::array<int, 3>> class_of_;  // candidate -> offset from base_var_
  std::vector<std::pair<std::size_t, CandidateSet>> owners_;  // by variable - 1
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;  // aux var k+first_aux_
  int first_aux_ = 0;
  CnfFormula formula_;
};

// Throws std::invalid_argument for bound < 2.
CnfInstance build_instance(Count bound, CnfOptions options = {});

// Comment lines map variables back to profiles, then the header and clauses.
void emit_dimacs(const CnfInstance& inst, std::ostream& out);
// Throws std::runtime_error when the file cannot be written.
void emit_dimacs(const CnfInstance& inst, const std::string& path);

// Throws std::invalid_argument on malformed input or header mismatch.
CnfFormula parse_dimacs(std::istream& in);

struct AssignmentCheck {
  bool ok = true;
  std::optional<std::size_t> clause;  // first violated clause
  std::string detail;                 // the clause with variables described
};
// x(P,c) = c in f(P) (on orbit representatives when neutral), v = the
// intersection is non-empty.
AssignmentCheck check_assignment_detail(const CnfInstance& inst, const Rule& rule);
bool check_assignment(const CnfInstance& inst, const Rule& rule);

enum class SatStatus { sat, unsat, unknown };
std::string to_string(SatStatus s);

struct SolveResult {
  SatStatus status = SatStatus::unknown;
  std::vector<bool> model;  // when sat; index 0 unused
  std::uint64_t decisions = 0;
  std::uint64_t conflicts = 0;
};
// DPLL with watched literals and chronological backtracking. Gives up with
// unknown after max_conflicts conflicts.
SolveResult solve(const CnfFormula& f, std::uint64_t max_conflicts = 10'000'000);

struct ProofStep {
  std::string description;
  bool ok = false;
  std::string detail;  // on failure: the violated margin or set condition
};

struct ProofCase {
  std::string label;  // "a in f(P1)" for WLOG branches; empty otherwise
  std::vector<ProofStep> steps;
  bool contradiction = false;
};

struct ProofReport {
  std::string theorem;
  std::vector<ProofStep> preliminaries;
  std::vector<ProofCase> cases;

  bool ok() const;
  std::string to_text() const;
};

// Replays "4.1", "4.3" or "4.5" using margin arithmetic and set logic only.
// Throws std::invalid_argument for other ids.
ProofReport proof_replay(std::string_view id);

}  // namespace condorcet3

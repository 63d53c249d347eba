#pragma once

// Exhaustive iteration over anonymous profiles of a fixed size.
//
// Profiles with n voters are the compositions of n into six ordered parts,
// visited in colexicographic order: (n,0,0,0,0,0) first, (0,0,0,0,0,n) last.
// Ranks in that order allow contiguous sub-ranges to be handed to workers.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "condorcet3/core.hpp"
#include "condorcet3/rules.hpp"

namespace condorcet3 {

using Rank = std::uint64_t;

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);
// C(n + 5, 5).
std::uint64_t profile_count(Count n);

Rank colex_rank(const std::array<Count, 6>& counts);
// Throws std::out_of_range when rank >= profile_count(n).
std::array<Count, 6> colex_unrank(Count n, Rank rank);

class ProfileCursor {
 public:
  explicit ProfileCursor(Count n, Rank start = 0);

  const std::array<Count, 6>& counts() const { return counts_; }
  Profile profile() const { return Profile(counts_); }
  // Kept in step with counts() by a constant-time delta per advance.
  const MarginGraph& margins() const { return margins_; }
  Count voters() const { return n_; }
  Rank rank() const { return rank_; }

  // Moves to the next profile; false once the last one has been passed.
  bool advance();

 private:
  Count n_;
  Rank rank_;
  std::array<Count, 6> counts_{};
  MarginGraph margins_;
};

// All profiles with n voters, in colex order.
std::vector<Profile> enumerate(Count n);

struct RankRange {
  Rank begin = 0;
  Rank end = 0;
};
// k contiguous, near-equal ranges covering [0, profile_count(n)).
std::vector<RankRange> split_ranges(Count n, int k);

// CONDORCET3_WORKERS if set and positive, otherwise hardware concurrency.
int default_workers();

// Runs fn(range, worker_index) for each range on its own thread.
void run_parallel(const std::vector<RankRange>& ranges,
                  const std::function<void(RankRange, int)>& fn);

struct FrequencyRow {
  Count n = 0;
  std::string rule;
  std::uint64_t irresolute = 0;
  std::uint64_t total = 0;
  // Irresolute profiles whose margins are all zero; included in irresolute.
  std::uint64_t fully_tied = 0;

  // The row with fully tied profiles dropped from the irresolute count (the
  // total is unchanged).
  FrequencyRow excluding_fully_tied() const;

  double fraction() const { return total == 0 ? 0.0 : double(irresolute) / double(total); }
  // Six decimals, round half to even.
  std::string fraction_text() const;
  std::string csv() const;  // "n,rule,irresolute,total,fraction"
};

inline constexpr const char* kFrequencyCsvHeader = "n,rule,irresolute,total,fraction";

std::string format_decimal(std::uint64_t num, std::uint64_t den, int digits);

// Exact count of profiles with n voters on which |f(P)| >= 2.
// workers <= 0 selects default_workers().
FrequencyRow irresoluteness(const Rule& rule, Count n, int workers = 0);
// The same count obtained from one representative per orbit of the candidate
// permutations, weighted by orbit size. Only meaningful for neutral rules.
FrequencyRow irresoluteness_by_orbits(const Rule& rule, Count n);

// True iff p is the colex-smallest profile in its orbit under relabelling.
bool is_orbit_representative(const Profile& p, int* orbit_size = nullptr);

enum class SearchMode { first, all };
using ProfilePredicate = std::function<bool(const Profile&)>;

// Profiles with min_n <= n <= max_n satisfying pred, by n then colex rank.
std::vector<Profile> search(const ProfilePredicate& pred, Count min_n, Count max_n,
                            SearchMode mode, int workers = 0);

}  // namespace condorcet3

#include "condorcet3/enumeration.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace condorcet3 {

namespace {

const std::array<MarginGraph, 6>& unit_table() {
  static const std::array<MarginGraph, 6> table = [] {
    std::array<MarginGraph, 6> t;
    for (LinearOrder o : kOrders) t[index(o)] = unit_margins(o);
    return t;
  }();
  return table;
}

bool rule_needs_profile(const Rule& rule) { return !rule.pairwise(); }

bool irresolute_on(const Rule& rule, const ProfileCursor& cur) {
  if (rule_needs_profile(rule)) return evaluate(rule, cur.profile()).size() >= 2;
  return evaluate_margins(rule.id(), cur.margins()).size() >= 2;
}

struct Tally {
  std::uint64_t irresolute = 0;
  std::uint64_t fully_tied = 0;

  void add(bool irresolute_here, const MarginGraph& g, std::uint64_t weight = 1) {
    if (!irresolute_here) return;
    irresolute += weight;
    if (g == MarginGraph()) fully_tied += weight;
  }
};

}  // namespace

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<std::uint64_t>(r);
}

std::uint64_t profile_count(Count n) {
  if (n < 0) return 0;
  return binomial(static_cast<std::uint64_t>(n) + 5, 5);
}

Rank colex_rank(const std::array<Count, 6>& counts) {
  Count n = 0;
  for (Count k : counts) n += k;
  // Compositions agreeing on slots k+1..5 and smaller in slot k come first:
  // sum_{j < c_k} C(R - j + k - 1, k - 1) = C(R + k, k) - C(R - c_k + k, k).
  Rank rank = 0;
  Count rest = n;
  for (int k = 5; k >= 1; --k) {
    const auto r = static_cast<std::uint64_t>(rest);
    const auto c = static_cast<std::uint64_t>(counts[k]);
    rank += binomial(r + k, k) - binomial(r - c + k, k);
    rest -= counts[k];
  }
  return rank;
}

std::array<Count, 6> colex_unrank(Count n, Rank rank) {
  if (n < 0 || rank >= profile_count(n)) throw std::out_of_range("profile rank out of range");
  std::array<Count, 6> counts{};
  Count rest = n;
  for (int k = 5; k >= 1; --k) {
    Count c = 0;
    while (true) {
      // Block of compositions with slot k equal to c.
      const std::uint64_t block = binomial(static_cast<std::uint64_t>(rest - c) + k - 1, k - 1);
      if (rank < block) break;
      rank -= block;
      ++c;
    }
    counts[k] = c;
    rest -= c;
  }
  counts[0] = rest;
  return counts;
}

ProfileCursor::ProfileCursor(Count n, Rank start)
    : n_(n), rank_(start), counts_(colex_unrank(n, start)) {
  margins_ = condorcet3::margins(Profile(counts_));
}

bool ProfileCursor::advance() {
  int i = 0;
  while (i < 5 && counts_[i] == 0) ++i;
  if (i == 5) return false;
  const Count v = counts_[i];
  const auto& w = unit_table();
  counts_[i] = 0;
  counts_[0] = v - 1;
  counts_[i + 1] += 1;
  margins_ += (-v) * w[i] + (v - 1) * w[0] + w[i + 1];
  ++rank_;
  return true;
}

std::vector<Profile> enumerate(Count n) {
  std::vector<Profile> out;
  out.reserve(profile_count(n));
  ProfileCursor cur(n);
  do {
    out.push_back(cur.profile());
  } while (cur.advance());
  return out;
}

std::vector<RankRange> split_ranges(Count n, int k) {
  k = std::max(k, 1);
  const std::uint64_t total = profile_count(n);
  std::vector<RankRange> out;
  for (int i = 0; i < k; ++i) {
    const Rank b = total * i / k, e = total * (i + 1) / k;
    if (b < e) out.push_back({b, e});
  }
  return out;
}

int default_workers() {
  if (const char* env = std::getenv("CONDORCET3_WORKERS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void run_parallel(const std::vector<RankRange>& ranges,
                  const std::function<void(RankRange, int)>& fn) {
  if (ranges.size() <= 1) {
    for (std::size_t i = 0; i < ranges.size(); ++i) fn(ranges[i], static_cast<int>(i));
    return;
  }
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(ranges.size());
  for (std::size_t i = 0; i < ranges.size(); ++i) {
    threads.emplace_back([&, i] {
      try {
        fn(ranges[i], static_cast<int>(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::string format_decimal(std::uint64_t num, std::uint64_t den, int digits) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  unsigned __int128 scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const unsigned __int128 scaled = static_cast<unsigned __int128>(num) * scale;
  unsigned __int128 q = scaled / den;
  const unsigned __int128 r = scaled % den;
  if (2 * r > den || (2 * r == den && q % 2 == 1)) ++q;
  const auto whole = static_cast<std::uint64_t>(q / scale);
  auto frac = static_cast<std::uint64_t>(q % scale);
  std::string tail(digits, '0');
  for (int i = digits - 1; i >= 0; --i) {
    tail[i] = static_cast<char>('0' + frac % 10);
    frac /= 10;
  }
  return std::to_string(whole) + (digits > 0 ? "." + tail : "");
}

FrequencyRow FrequencyRow::excluding_fully_tied() const {
  FrequencyRow row = *this;
  row.irresolute -= fully_tied;
  row.fully_tied = 0;
  return row;
}

std::string FrequencyRow::fraction_text() const { return format_decimal(irresolute, total, 6); }

std::string FrequencyRow::csv() const {
  return std::to_string(n) + "," + rule + "," + std::to_string(irresolute) + "," +
         std::to_string(total) + "," + fraction_text();
}

FrequencyRow irresoluteness(const Rule& rule, Count n, int workers) {
  if (n < 1) throw std::invalid_argument("irresoluteness needs n >= 1");
  if (workers <= 0) workers = default_workers();
  const auto ranges = split_ranges(n, workers);
  std::vector<Tally> partial(ranges.size());
  run_parallel(ranges, [&](RankRange r, int w) {
    ProfileCursor cur(n, r.begin);
    Tally t;
    for (Rank i = r.begin; i < r.end; ++i) {
      t.add(irresolute_on(rule, cur), cur.margins());
      cur.advance();
    }
    partial[w] = t;
  });
  FrequencyRow row{n, rule.name(), 0, profile_count(n)};
  for (const Tally& t : partial) {
    row.irresolute += t.irresolute;
    row.fully_tied += t.fully_tied;
  }
  return row;
}

bool is_orbit_representative(const Profile& p, int* orbit_size) {
  const Rank mine = colex_rank(p.counts());
  std::array<Rank, 6> images{};
  int k = 0;
  bool smallest = true;
  for (const Permutation& s : Permutation::all()) {
    const Rank r = colex_rank(permute(s, p).counts());
    if (r < mine) smallest = false;
    images[k++] = r;
  }
  if (orbit_size) {
    std::sort(images.begin(), images.end());
    *orbit_size = static_cast<int>(std::unique(images.begin(), images.end()) - images.begin());
  }
  return smallest;
}

FrequencyRow irresoluteness_by_orbits(const Rule& rule, Count n) {
  if (n < 1) throw std::invalid_argument("irresoluteness needs n >= 1");
  FrequencyRow row{n, rule.name(), 0, 0};
  Tally t;
  ProfileCursor cur(n);
  do {
    int size = 0;
    if (!is_orbit_representative(cur.profile(), &size)) continue;
    row.total += size;
    t.add(irresolute_on(rule, cur), cur.margins(), size);
  } while (cur.advance());
  row.irresolute = t.irresolute;
  row.fully_tied = t.fully_tied;
  return row;
}

std::vector<Profile> search(const ProfilePredicate& pred, Count min_n, Count max_n,
                            SearchMode mode, int workers) {
  if (workers <= 0) workers = default_workers();
  std::vector<Profile> found;
  for (Count n = std::max<Count>(min_n, 0); n <= max_n; ++n) {
    const auto ranges = split_ranges(n, workers);
    std::vector<std::vector<Profile>> partial(ranges.size());
    run_parallel(ranges, [&](RankRange r, int w) {
      ProfileCursor cur(n, r.begin);
      for (Rank i = r.begin; i < r.end; ++i) {
        const Profile p = cur.profile();
        if (pred(p)) {
          partial[w].push_back(p);
          if (mode == SearchMode::first) return;
        }
        cur.advance();
      }
    });
    for (auto& part : partial) {
      for (Profile& p : part) {
        found.push_back(p);
        if (mode == SearchMode::first) return found;
      }
    }
  }
  return found;
}

}  // namespace condorcet3

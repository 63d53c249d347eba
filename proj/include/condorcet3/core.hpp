#pragma once

// Three-candidate preference primitives: candidates, linear orders,
// anonymous profiles, margin graphs and their ordinal classification.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace condorcet3 {

using Count = std::int64_t;

enum class Candidate : std::uint8_t { a = 0, b = 1, c = 2 };

inline constexpr std::array<Candidate, 3> kCandidates = {
    Candidate::a, Candidate::b, Candidate::c};

constexpr int index(Candidate x) { return static_cast<int>(x); }
constexpr Candidate candidate_at(int i) { return static_cast<Candidate>(i); }
char to_char(Candidate x);
std::optional<Candidate> candidate_from_char(char ch);

// A bijection on {a, b, c}, stored as the images of a, b and c.
class Permutation {
 public:
  constexpr Permutation() : image_{0, 1, 2} {}
  // Throws std::invalid_argument unless the images form a bijection.
  Permutation(Candidate image_of_a, Candidate image_of_b, Candidate image_of_c);

  Candidate operator()(Candidate x) const {
    return candidate_at(image_[index(x)]);
  }
  // (p * q)(x) == p(q(x))
  Permutation operator*(const Permutation& q) const;
  Permutation inverse() const;
  bool is_identity() const { return image_ == std::array<std::uint8_t, 3>{0, 1, 2}; }

  // All six permutations in lexicographic order of (p(a), p(b), p(c)).
  static const std::array<Permutation, 6>& all();

  std::string to_string() const;  // e.g. "a->b,b->c,c->a"

  auto operator<=>(const Permutation&) const = default;

 private:
  std::array<std::uint8_t, 3> image_;
};

// Strict rankings of the three candidates. The enumerator values are the
// canonical indices used everywhere counts are stored.
enum class LinearOrder : std::uint8_t { abc = 0, acb, bac, bca, cab, cba };

inline constexpr std::array<LinearOrder, 6> kOrders = {
    LinearOrder::abc, LinearOrder::acb, LinearOrder::bac,
    LinearOrder::bca, LinearOrder::cab, LinearOrder::cba};

constexpr int index(LinearOrder o) { return static_cast<int>(o); }
constexpr LinearOrder order_at(int i) { return static_cast<LinearOrder>(i); }

// rank 0 is the top.
Candidate at_rank(LinearOrder o, int rank);
inline Candidate top(LinearOrder o) { return at_rank(o, 0); }
inline Candidate middle(LinearOrder o) { return at_rank(o, 1); }
inline Candidate bottom(LinearOrder o) { return at_rank(o, 2); }
int rank_of(LinearOrder o, Candidate x);
inline bool prefers(LinearOrder o, Candidate x, Candidate y) {
  return rank_of(o, x) < rank_of(o, y);
}
LinearOrder make_order(Candidate first, Candidate second, Candidate third);
LinearOrder permute(const Permutation& p, LinearOrder o);
// Swaps the candidates at ranks `upper` and `upper + 1`.
LinearOrder swap_adjacent(LinearOrder o, int upper);
std::string to_string(LinearOrder o);

class ProfileParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Multiset of linear orders: one voter count per order.
class Profile {
 public:
  Profile() : counts_{} {}
  // Throws std::invalid_argument on a negative count.
  explicit Profile(const std::array<Count, 6>& counts);

  Count count(LinearOrder o) const { return counts_[index(o)]; }
  const std::array<Count, 6>& counts() const { return counts_; }
  Count voters() const;
  bool empty() const { return voters() == 0; }

  Profile& add(LinearOrder o, Count k = 1);
  // Throws std::invalid_argument if fewer than k voters hold o.
  Profile& remove(LinearOrder o, Count k = 1);

  Profile& operator+=(const Profile& other);
  friend Profile operator+(Profile lhs, const Profile& rhs) { return lhs += rhs; }

  auto operator<=>(const Profile&) const = default;

 private:
  std::array<Count, 6> counts_;
};

// Grammar: term ('+' term)*, term = [positive integer] permutation of "abc".
// Case-insensitive; whitespace ignored. Rejects empty input and n = 0.
Profile parse_profile(std::string_view text);
// Terms in canonical order index, zero counts omitted, counts always printed
// ("3abc+1bac+2bca+1cab"). The empty profile formats as "".
std::string format_profile(const Profile& p);

Profile combine(const Profile& p, const Profile& q);
// Throws std::invalid_argument for t < 1.
Profile t_fold(const Profile& p, Count t);
Profile permute(const Permutation& sigma, const Profile& p);

class CandidateSet {
 public:
  constexpr CandidateSet() : bits_(0) {}
  constexpr explicit CandidateSet(std::uint8_t bits) : bits_(bits & 7u) {}
  CandidateSet(std::initializer_list<Candidate> members);
  static constexpr CandidateSet all() { return CandidateSet(7); }
  static CandidateSet of(Candidate x) { return CandidateSet(static_cast<std::uint8_t>(1u << index(x))); }

  bool contains(Candidate x) const { return (bits_ >> index(x)) & 1u; }
  bool empty() const { return bits_ == 0; }
  int size() const;
  std::uint8_t bits() const { return bits_; }
  std::vector<Candidate> members() const;
  bool is_subset_of(CandidateSet other) const { return (bits_ & ~other.bits_) == 0; }
  bool is_singleton(Candidate x) const { return bits_ == (1u << index(x)); }

  CandidateSet& insert(Candidate x) { bits_ |= static_cast<std::uint8_t>(1u << index(x)); return *this; }
  CandidateSet& erase(Candidate x) { bits_ &= static_cast<std::uint8_t>(~(1u << index(x))); return *this; }

  friend CandidateSet operator&(CandidateSet l, CandidateSet r) { return CandidateSet(l.bits_ & r.bits_); }
  friend CandidateSet operator|(CandidateSet l, CandidateSet r) { return CandidateSet(l.bits_ | r.bits_); }
  friend CandidateSet operator-(CandidateSet l, CandidateSet r) { return CandidateSet(l.bits_ & ~r.bits_ & 7u); }

  auto operator<=>(const CandidateSet&) const = default;

  // "{a,c}"; "{}" when empty.
  std::string to_string() const;

 private:
  std::uint8_t bits_;
};

CandidateSet permute(const Permutation& sigma, CandidateSet s);

// The output of a social choice function: never empty.
class ChoiceSet {
 public:
  // Throws std::invalid_argument when `members` is empty.
  explicit ChoiceSet(CandidateSet members);
  ChoiceSet(std::initializer_list<Candidate> members) : ChoiceSet(CandidateSet(members)) {}
  static ChoiceSet all() { return ChoiceSet(CandidateSet::all()); }
  static ChoiceSet single(Candidate x) { return ChoiceSet(CandidateSet::of(x)); }
  // Parses "{a,c}" / "a,c" / "ac".
  static ChoiceSet parse(std::string_view text);

  CandidateSet set() const { return members_; }
  operator CandidateSet() const { return members_; }
  bool contains(Candidate x) const { return members_.contains(x); }
  int size() const { return members_.size(); }
  bool is_singleton(Candidate x) const { return members_.is_singleton(x); }
  std::uint8_t bits() const { return members_.bits(); }
  std::string to_string() const { return members_.to_string(); }

  auto operator<=>(const ChoiceSet&) const = default;

 private:
  CandidateSet members_;
};

// Net pairwise majorities; m(y, x) == -m(x, y).
class MarginGraph {
 public:
  constexpr MarginGraph() = default;
  constexpr MarginGraph(Count m_ab, Count m_ac, Count m_bc)
      : ab_(m_ab), ac_(m_ac), bc_(m_bc) {}
  // Convenience for the cyclic presentation used in figures.
  static constexpr MarginGraph from_cycle(Count m_ab, Count m_bc, Count m_ca) {
    return MarginGraph(m_ab, -m_ca, m_bc);
  }

  Count m(Candidate x, Candidate y) const;
  Count ab() const { return ab_; }
  Count ac() const { return ac_; }
  Count bc() const { return bc_; }

  bool same_parity() const;
  MarginGraph permuted(const Permutation& sigma) const;

  MarginGraph& operator+=(const MarginGraph& o) {
    ab_ += o.ab_; ac_ += o.ac_; bc_ += o.bc_;
    return *this;
  }
  friend MarginGraph operator+(MarginGraph l, const MarginGraph& r) { return l += r; }
  friend MarginGraph operator*(Count t, const MarginGraph& g) {
    return MarginGraph(t * g.ab_, t * g.ac_, t * g.bc_);
  }
  auto operator<=>(const MarginGraph&) const = default;

  std::string to_string() const;  // "m_ab=3 m_ac=-1 m_bc=1"

 private:
  Count ab_ = 0, ac_ = 0, bc_ = 0;
};

// Margin contribution of one voter holding `o`.
MarginGraph unit_margins(LinearOrder o);
MarginGraph margins(const Profile& p);

std::optional<Candidate> condorcet_winner(const MarginGraph& g);
CandidateSet weak_condorcet_winners(const MarginGraph& g);
CandidateSet intermediate_condorcet_winners(const MarginGraph& g);
std::array<Count, 3> borda_scores(const MarginGraph& g);

enum class GraphKind : std::uint8_t {
  condorcet_winner,
  A, B, C, D, E, F, G, H, I, J, K, L,
};
std::string to_string(GraphKind k);

struct OrdinalClass {
  GraphKind kind = GraphKind::condorcet_winner;
  std::optional<Candidate> winner;  // set iff kind == condorcet_winner
  // Applying `relabel` to the input graph yields the canonical pattern.
  Permutation relabel;
};

bool matches_canonical(GraphKind kind, const MarginGraph& g);
OrdinalClass classify(const MarginGraph& g);

class InvalidMarginTarget : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A profile inducing `target`; not minimal. Throws InvalidMarginTarget on
// mixed parity.
Profile mcgarvey(const MarginGraph& target);

}  // namespace condorcet3

#include "condorcet3/core.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace condorcet3 {

namespace {

// Candidates of each order by rank, indexed by canonical order index.
constexpr std::array<std::array<std::uint8_t, 3>, 6> kRanking = {{
    {0, 1, 2},  // abc
    {0, 2, 1},  // acb
    {1, 0, 2},  // bac
    {1, 2, 0},  // bca
    {2, 0, 1},  // cab
    {2, 1, 0},  // cba
}};

}  // namespace

char to_char(Candidate x) { return static_cast<char>('a' + index(x)); }

std::optional<Candidate> candidate_from_char(char ch) {
  ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (ch < 'a' || ch > 'c') return std::nullopt;
  return candidate_at(ch - 'a');
}

Permutation::Permutation(Candidate image_of_a, Candidate image_of_b,
                         Candidate image_of_c)
    : image_{static_cast<std::uint8_t>(index(image_of_a)),
             static_cast<std::uint8_t>(index(image_of_b)),
             static_cast<std::uint8_t>(index(image_of_c))} {
  if (image_[0] == image_[1] || image_[0] == image_[2] || image_[1] == image_[2]) {
    throw std::invalid_argument("permutation images must be distinct");
  }
}

Permutation Permutation::operator*(const Permutation& q) const {
  return Permutation((*this)(q(Candidate::a)), (*this)(q(Candidate::b)),
                     (*this)(q(Candidate::c)));
}

Permutation Permutation::inverse() const {
  std::array<Candidate, 3> inv{};
  for (Candidate x : kCandidates) inv[index((*this)(x))] = x;
  return Permutation(inv[0], inv[1], inv[2]);
}

const std::array<Permutation, 6>& Permutation::all() {
  using enum Candidate;
  static const std::array<Permutation, 6> perms = {
      Permutation(a, b, c), Permutation(a, c, b), Permutation(b, a, c),
      Permutation(b, c, a), Permutation(c, a, b), Permutation(c, b, a)};
  return perms;
}

std::string Permutation::to_string() const {
  std::string out;
  for (Candidate x : kCandidates) {
    if (!out.empty()) out += ',';
    out += to_char(x);
    out += "->";
    out += to_char((*this)(x));
  }
  return out;
}

Candidate at_rank(LinearOrder o, int rank) {
  return candidate_at(kRanking[index(o)][rank]);
}

int rank_of(LinearOrder o, Candidate x) {
  const auto& r = kRanking[index(o)];
  for (int i = 0; i < 3; ++i) {
    if (r[i] == index(x)) return i;
  }
  return -1;  // unreachable
}

LinearOrder make_order(Candidate first, Candidate second, Candidate third) {
  for (int i = 0; i < 6; ++i) {
    const auto& r = kRanking[i];
    if (r[0] == index(first) && r[1] == index(second) && r[2] == index(third)) {
      return order_at(i);
    }
  }
  throw std::invalid_argument("linear order needs three distinct candidates");
}

LinearOrder permute(const Permutation& p, LinearOrder o) {
  return make_order(p(at_rank(o, 0)), p(at_rank(o, 1)), p(at_rank(o, 2)));
}

LinearOrder swap_adjacent(LinearOrder o, int upper) {
  std::array<Candidate, 3> r = {at_rank(o, 0), at_rank(o, 1), at_rank(o, 2)};
  std::swap(r[upper], r[upper + 1]);
  return make_order(r[0], r[1], r[2]);
}

std::string to_string(LinearOrder o) {
  return {to_char(at_rank(o, 0)), to_char(at_rank(o, 1)), to_char(at_rank(o, 2))};
}

Profile::Profile(const std::array<Count, 6>& counts) : counts_(counts) {
  for (Count k : counts_) {
    if (k < 0) throw std::invalid_argument("profile counts must be non-negative");
  }
}

Count Profile::voters() const {
  Count n = 0;
  for (Count k : counts_) n += k;
  return n;
}

Profile& Profile::add(LinearOrder o, Count k) {
  if (k < 0) throw std::invalid_argument("cannot add a negative number of voters");
  counts_[index(o)] += k;
  return *this;
}

Profile& Profile::remove(LinearOrder o, Count k) {
  if (k < 0 || counts_[index(o)] < k) {
    throw std::invalid_argument("not enough voters with order " + to_string(o));
  }
  counts_[index(o)] -= k;
  return *this;
}

Profile& Profile::operator+=(const Profile& other) {
  for (int i = 0; i < 6; ++i) counts_[i] += other.counts_[i];
  return *this;
}

Profile parse_profile(std::string_view text) {
  std::string compact;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
  }
  if (compact.empty()) throw ProfileParseError("empty profile");

  Profile result;
  std::size_t start = 0;
  while (start <= compact.size()) {
    std::size_t end = compact.find('+', start);
    if (end == std::string::npos) end = compact.size();
    const std::string term = compact.substr(start, end - start);
    const auto fail = [&](const std::string& why) {
      return ProfileParseError("bad term '" + term + "': " + why);
    };
    if (term.empty()) throw fail("empty term");

    std::size_t pos = 0;
    while (pos < term.size() && std::isdigit(static_cast<unsigned char>(term[pos]))) ++pos;
    Count k = 1;
    if (pos > 0) {
      if (pos > 12) throw fail("count too large");
      k = std::stoll(term.substr(0, pos));
      if (k <= 0) throw fail("count must be positive");
    } else if (term[0] == '-') {
      throw fail("count must be positive");
    }
    const std::string letters = term.substr(pos);
    if (letters.size() != 3) throw fail("expected a permutation of abc");
    std::array<Candidate, 3> ranking{};
    for (int i = 0; i < 3; ++i) {
      auto x = candidate_from_char(letters[i]);
      if (!x) throw fail("unknown candidate '" + std::string(1, letters[i]) + "'");
      ranking[i] = *x;
    }
    if (ranking[0] == ranking[1] || ranking[0] == ranking[2] || ranking[1] == ranking[2]) {
      throw fail("repeated candidate");
    }
    result.add(make_order(ranking[0], ranking[1], ranking[2]), k);
    start = end + 1;
  }
  return result;
}

std::string format_profile(const Profile& p) {
  std::string out;
  for (LinearOrder o : kOrders) {
    if (p.count(o) == 0) continue;
    if (!out.empty()) out += '+';
    out += std::to_string(p.count(o));
    out += to_string(o);
  }
  return out;
}

Profile combine(const Profile& p, const Profile& q) { return p + q; }

Profile t_fold(const Profile& p, Count t) {
  if (t < 1) throw std::invalid_argument("t-fold copy needs t >= 1");
  std::array<Count, 6> counts = p.counts();
  for (Count& k : counts) k *= t;
  return Profile(counts);
}

Profile permute(const Permutation& sigma, const Profile& p) {
  Profile out;
  for (LinearOrder o : kOrders) out.add(permute(sigma, o), p.count(o));
  return out;
}

CandidateSet::CandidateSet(std::initializer_list<Candidate> members) : bits_(0) {
  for (Candidate x : members) insert(x);
}

int CandidateSet::size() const {
  return (bits_ & 1) + ((bits_ >> 1) & 1) + ((bits_ >> 2) & 1);
}

std::vector<Candidate> CandidateSet::members() const {
  std::vector<Candidate> out;
  for (Candidate x : kCandidates) {
    if (contains(x)) out.push_back(x);
  }
  return out;
}

std::string CandidateSet::to_string() const {
  std::string out = "{";
  for (Candidate x : members()) {
    if (out.size() > 1) out += ',';
    out += to_char(x);
  }
  return out + "}";
}

CandidateSet permute(const Permutation& sigma, CandidateSet s) {
  CandidateSet out;
  for (Candidate x : s.members()) out.insert(sigma(x));
  return out;
}

ChoiceSet::ChoiceSet(CandidateSet members) : members_(members) {
  if (members_.empty()) throw std::invalid_argument("choice set must be non-empty");
}

ChoiceSet ChoiceSet::parse(std::string_view text) {
  CandidateSet s;
  for (char ch : text) {
    if (ch == '{' || ch == '}' || ch == ',' || std::isspace(static_cast<unsigned char>(ch))) continue;
    auto x = candidate_from_char(ch);
    if (!x) throw std::invalid_argument("bad choice set '" + std::string(text) + "'");
    s.insert(*x);
  }
  return ChoiceSet(s);
}

Count MarginGraph::m(Candidate x, Candidate y) const {
  if (x == y) return 0;
  const int i = index(x), j = index(y);
  if (i < j) {
    if (i == 0) return j == 1 ? ab_ : ac_;
    return bc_;
  }
  return -m(y, x);
}

bool MarginGraph::same_parity() const {
  const auto odd = [](Count v) { return (v % 2 + 2) % 2; };
  return odd(ab_) == odd(ac_) && odd(ac_) == odd(bc_);
}

MarginGraph MarginGraph::permuted(const Permutation& sigma) const {
  // The relabelled graph satisfies m'(sigma x, sigma y) = m(x, y).
  const Permutation inv = sigma.inverse();
  using enum Candidate;
  return MarginGraph(m(inv(a), inv(b)), m(inv(a), inv(c)), m(inv(b), inv(c)));
}

std::string MarginGraph::to_string() const {
  std::ostringstream os;
  os << "m_ab=" << ab_ << " m_ac=" << ac_ << " m_bc=" << bc_;
  return os.str();
}

MarginGraph unit_margins(LinearOrder o) {
  using enum Candidate;
  const auto sgn = [o](Candidate x, Candidate y) -> Count { return prefers(o, x, y) ? 1 : -1; };
  return MarginGraph(sgn(a, b), sgn(a, c), sgn(b, c));
}

MarginGraph margins(const Profile& p) {
  MarginGraph g;
  for (LinearOrder o : kOrders) {
    if (p.count(o) != 0) g += p.count(o) * unit_margins(o);
  }
  return g;
}

std::optional<Candidate> condorcet_winner(const MarginGraph& g) {
  for (Candidate x : kCandidates) {
    bool beats_all = true;
    for (Candidate y : kCandidates) {
      if (y != x && g.m(x, y) <= 0) beats_all = false;
    }
    if (beats_all) return x;
  }
  return std::nullopt;
}

CandidateSet weak_condorcet_winners(const MarginGraph& g) {
  CandidateSet out;
  for (Candidate x : kCandidates) {
    bool ok = true;
    for (Candidate y : kCandidates) {
      if (g.m(x, y) < 0) ok = false;
    }
    if (ok) out.insert(x);
  }
  return out;
}

CandidateSet intermediate_condorcet_winners(const MarginGraph& g) {
  CandidateSet out;
  for (Candidate x : weak_condorcet_winners(g).members()) {
    for (Candidate y : kCandidates) {
      if (g.m(x, y) > 0) {
        out.insert(x);
        break;
      }
    }
  }
  return out;
}

std::array<Count, 3> borda_scores(const MarginGraph& g) {
  std::array<Count, 3> beta{};
  for (Candidate x : kCandidates) {
    for (Candidate y : kCandidates) beta[index(x)] += g.m(x, y);
  }
  return beta;
}

std::string to_string(GraphKind k) {
  if (k == GraphKind::condorcet_winner) return "condorcet";
  return std::string("Graph") + static_cast<char>('A' + static_cast<int>(k) - 1);
}

bool matches_canonical(GraphKind kind, const MarginGraph& g) {
  using enum Candidate;
  const Count ab = g.m(a, b), bc = g.m(b, c), ca = g.m(c, a), cb = g.m(c, b);
  switch (kind) {
    case GraphKind::condorcet_winner: return condorcet_winner(g).has_value();
    case GraphKind::A: return ab == bc && bc == ca && ca > 0;
    case GraphKind::B: return ab == 0 && bc == 0 && ca == 0;
    case GraphKind::C: return ab > bc && bc == ca && ca > 0;
    case GraphKind::D: return ab > bc && bc == ca && ca == 0;
    case GraphKind::E: return ab == cb && cb > ca && ca == 0;
    case GraphKind::F: return ab > cb && cb > ca && ca == 0;
    case GraphKind::G: return ab > bc && bc > ca && ca > 0;
    case GraphKind::H: return ab > bc && bc > ca && ca == 0;
    case GraphKind::I: return ab == bc && bc > ca && ca > 0;
    case GraphKind::J: return ab == bc && bc > ca && ca == 0;
    case GraphKind::K: return bc > ab && ab > ca && ca > 0;
    case GraphKind::L: return bc > ab && ab > ca && ca == 0;
  }
  return false;
}

OrdinalClass classify(const MarginGraph& g) {
  if (auto w = condorcet_winner(g)) {
    return OrdinalClass{GraphKind::condorcet_winner, w, Permutation()};
  }
  for (const Permutation& sigma : Permutation::all()) {
    const MarginGraph h = g.permuted(sigma);
    for (int k = static_cast<int>(GraphKind::A); k <= static_cast<int>(GraphKind::L); ++k) {
      const auto kind = static_cast<GraphKind>(k);
      if (matches_canonical(kind, h)) return OrdinalClass{kind, std::nullopt, sigma};
    }
  }
  // Every graph without a Condorcet winner matches one of the twelve patterns.
  throw std::logic_error("unclassifiable margin graph " + g.to_string());
}

Profile mcgarvey(const MarginGraph& target) {
  if (!target.same_parity()) {
    throw InvalidMarginTarget("margins of mixed parity: " + target.to_string());
  }
  using enum Candidate;
  Profile p;
  if (target.ab() % 2 != 0) {
    // Seed with the order agreeing with the most edge signs.
    LinearOrder best = LinearOrder::abc;
    int best_agree = -1;
    for (LinearOrder o : kOrders) {
      const MarginGraph u = unit_margins(o);
      const int agree = (u.ab() * target.ab() > 0) + (u.ac() * target.ac() > 0) +
                        (u.bc() * target.bc() > 0);
      if (agree > best_agree) {
        best_agree = agree;
        best = o;
      }
    }
    p.add(best);
  }
  const MarginGraph seed = margins(p);
  // Voters {xyz, zxy} add +2 to m(x, y) and leave the other two edges alone.
  const auto repair = [&p](Candidate x, Candidate y, Count residual) {
    if (residual < 0) {
      std::swap(x, y);
      residual = -residual;
    }
    Candidate z = a;
    for (Candidate w : kCandidates) {
      if (w != x && w != y) z = w;
    }
    p.add(make_order(x, y, z), residual / 2);
    p.add(make_order(z, x, y), residual / 2);
  };
  repair(a, b, target.ab() - seed.ab());
  repair(a, c, target.ac() - seed.ac());
  repair(b, c, target.bc() - seed.bc());
  return p;
}

}  // namespace condorcet3

#include "condorcet3/rules.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <numeric>

namespace condorcet3 {

namespace {

constexpr std::array<RuleId, 23> kAllRules = {
    RuleId::top_cycle,   RuleId::uc_mckelvey,  RuleId::banks,
    RuleId::uc_gillies,  RuleId::defensible,   RuleId::llull,
    RuleId::copeland,    RuleId::maximin,      RuleId::strict_nanson,
    RuleId::stable_voting, RuleId::nanson,     RuleId::leximin,
    RuleId::black,       RuleId::baldwin,      RuleId::borda,
    RuleId::plurality,   RuleId::artificial,   RuleId::split_cycle,
    RuleId::beat_path,   RuleId::ranked_pairs, RuleId::kemeny,
    RuleId::dodgson,     RuleId::young,
};

const std::map<std::string, RuleId, std::less<>>& rule_names() {
  static const std::map<std::string, RuleId, std::less<>> names = {
      {"top_cycle", RuleId::top_cycle},
      {"uc_mckelvey", RuleId::uc_mckelvey},
      {"banks", RuleId::banks},
      {"uc_bordes", RuleId::banks},
      {"uc_gillies", RuleId::uc_gillies},
      {"defensible", RuleId::defensible},
      {"llull", RuleId::llull},
      {"schwartz", RuleId::llull},
      {"uc_fishburn", RuleId::llull},
      {"copeland", RuleId::copeland},
      {"maximin", RuleId::maximin},
      {"strict_nanson", RuleId::strict_nanson},
      {"stable_voting", RuleId::stable_voting},
      {"nanson", RuleId::nanson},
      {"leximin", RuleId::leximin},
      {"black", RuleId::black},
      {"baldwin", RuleId::baldwin},
      {"borda", RuleId::borda},
      {"plurality", RuleId::plurality},
      {"artificial", RuleId::artificial},
      {"split_cycle", RuleId::split_cycle},
      {"beat_path", RuleId::beat_path},
      {"ranked_pairs", RuleId::ranked_pairs},
      {"kemeny", RuleId::kemeny},
      {"dodgson", RuleId::dodgson},
      {"young", RuleId::young},
  };
  return names;
}

// argmax over candidates of a totally ordered key.
template <typename Key>
ChoiceSet argmax(const std::array<Key, 3>& key) {
  const Key best = *std::max_element(key.begin(), key.end());
  CandidateSet out;
  for (Candidate x : kCandidates) {
    if (key[index(x)] == best) out.insert(x);
  }
  return ChoiceSet(out);
}

// Borda score of x restricted to the candidates in `remaining`.
Count restricted_borda(const MarginGraph& g, CandidateSet remaining, Candidate x) {
  Count s = 0;
  for (Candidate y : remaining.members()) s += g.m(x, y);
  return s;
}

CandidateSet baldwin_branches(const MarginGraph& g, CandidateSet remaining) {
  if (remaining.size() == 1) return remaining;
  std::vector<Count> scores;
  for (Candidate x : remaining.members()) scores.push_back(restricted_borda(g, remaining, x));
  const Count lo = *std::min_element(scores.begin(), scores.end());
  const Count hi = *std::max_element(scores.begin(), scores.end());
  if (lo == hi) return remaining;
  CandidateSet winners;
  for (Candidate x : remaining.members()) {
    if (restricted_borda(g, remaining, x) == lo) {
      winners = winners | baldwin_branches(g, CandidateSet(remaining).erase(x));
    }
  }
  return winners;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  const auto slash = s.find('/');
  try {
    std::size_t used = 0;
    Rational r;
    if (slash == std::string::npos) {
      r.num = std::stoll(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return r;
    }
    const std::string lhs = s.substr(0, slash), rhs = s.substr(slash + 1);
    r.num = std::stoll(lhs, &used);
    if (used != lhs.size()) throw std::invalid_argument(s);
    r.den = std::stoll(rhs, &used);
    if (used != rhs.size() || r.den == 0) throw std::invalid_argument(s);
    if (r.den < 0) {
      r.den = -r.den;
      r.num = -r.num;
    }
    return r;
  } catch (const std::logic_error&) {
    throw std::invalid_argument("bad rational '" + std::string(text) + "'");
  }
}

std::string Rational::to_string() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

Monotonicity ScoringVector::monotonicity() const {
  if (s1 > s2 && s2 > s3) return Monotonicity::strict;
  if (s1 >= s2 && s2 >= s3 && s1 > s3) return Monotonicity::weak;
  return Monotonicity::other;
}

std::array<std::int64_t, 3> ScoringVector::integer_weights() const {
  const std::int64_t l12 = s1.den / gcd64(s1.den, s2.den) * s2.den;
  const std::int64_t lcm = l12 / gcd64(l12, s3.den) * s3.den;
  return {s1.num * (lcm / s1.den), s2.num * (lcm / s2.den), s3.num * (lcm / s3.den)};
}

std::string ScoringVector::to_string() const {
  return s1.to_string() + "," + s2.to_string() + "," + s3.to_string();
}

ScoringVector borda_vector() { return {{2, 1}, {0, 1}, {-2, 1}}; }
ScoringVector plurality_vector() { return {{1, 1}, {0, 1}, {0, 1}}; }

Rule::Rule(RuleId id) : id_(id) {
  if (id == RuleId::scoring) {
    throw std::invalid_argument("scoring rules need a vector; use Rule::scoring");
  }
}

Rule Rule::scoring(ScoringVector v) { return Rule(v); }

Rule Rule::parse(std::string_view name) {
  std::string lower;
  for (char ch : name) {
    if (!std::isspace(static_cast<unsigned char>(ch))) {
      lower += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    }
  }
  std::replace(lower.begin(), lower.end(), '-', '_');
  if (lower.starts_with("scoring(") && lower.ends_with(")")) {
    const std::string body = lower.substr(8, lower.size() - 9);
    std::vector<Rational> parts;
    std::size_t start = 0;
    while (true) {
      const auto comma = body.find(',', start);
      parts.push_back(Rational::parse(body.substr(start, comma - start)));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (parts.size() != 3) throw std::invalid_argument("scoring vector needs three entries");
    return Rule::scoring({parts[0], parts[1], parts[2]});
  }
  const auto& names = rule_names();
  const auto it = names.find(lower);
  if (it == names.end()) throw std::invalid_argument("unknown rule '" + std::string(name) + "'");
  return Rule(it->second);
}

std::string Rule::name() const {
  if (id_ == RuleId::scoring) return "scoring(" + vector_->to_string() + ")";
  return rule_name(id_);
}

EvaluationPath Rule::path() const {
  switch (id_) {
    case RuleId::top_cycle:
    case RuleId::uc_mckelvey:
    case RuleId::banks:
    case RuleId::uc_gillies:
    case RuleId::llull:
    case RuleId::stable_voting:
      return EvaluationPath::table_driven;
    case RuleId::split_cycle:
    case RuleId::beat_path:
    case RuleId::ranked_pairs:
    case RuleId::kemeny:
    case RuleId::dodgson:
    case RuleId::young:
      return EvaluationPath::oracle;
    default:
      return EvaluationPath::definitional;
  }
}

bool Rule::pairwise() const {
  switch (id_) {
    case RuleId::plurality:
    case RuleId::artificial:
    case RuleId::dodgson:
    case RuleId::young:
    case RuleId::scoring:
      return false;
    default:
      return true;
  }
}

bool Rule::neutral() const { return id_ != RuleId::artificial; }

std::span<const RuleId> all_rule_ids() { return kAllRules; }

std::string rule_name(RuleId id) {
  if (id == RuleId::scoring) return "scoring";
  for (const auto& [name, rid] : rule_names()) {
    if (rid == id && name != "uc_bordes" && name != "schwartz" && name != "uc_fishburn") {
      return name;
    }
  }
  return "unknown";
}

SortedMargins sorted_margins(const MarginGraph& g, Candidate x) {
  std::array<Count, 2> v{};
  int k = 0;
  for (Candidate y : kCandidates) {
    if (y != x) v[k++] = g.m(x, y);
  }
  return {std::min(v[0], v[1]), std::max(v[0], v[1])};
}

ChoiceSet maximin(const MarginGraph& g) {
  std::array<Count, 3> worst{};
  for (Candidate x : kCandidates) worst[index(x)] = sorted_margins(g, x).worst;
  return argmax(worst);
}

ChoiceSet leximin(const MarginGraph& g) {
  std::array<SortedMargins, 3> key{};
  for (Candidate x : kCandidates) key[index(x)] = sorted_margins(g, x);
  return argmax(key);
}

ChoiceSet nanson(const MarginGraph& g, bool strict) {
  CandidateSet remaining = CandidateSet::all();
  while (remaining.size() > 1) {
    CandidateSet doomed;
    bool any_positive = false;
    for (Candidate x : remaining.members()) {
      const Count s = restricted_borda(g, remaining, x);
      if (s > 0) any_positive = true;
      if (strict ? s < 0 : s <= 0) doomed.insert(x);
    }
    if (strict ? doomed.empty() : !any_positive) break;
    remaining = remaining - doomed;
  }
  return ChoiceSet(remaining);
}

ChoiceSet black(const MarginGraph& g) {
  if (auto w = condorcet_winner(g)) return ChoiceSet::single(*w);
  return borda(g);
}

ChoiceSet baldwin(const MarginGraph& g) {
  return ChoiceSet(baldwin_branches(g, CandidateSet::all()));
}

ChoiceSet copeland(const MarginGraph& g) {
  std::array<Count, 3> score{};
  for (Candidate x : kCandidates) {
    for (Candidate y : kCandidates) {
      const Count m = g.m(x, y);
      score[index(x)] += (m > 0) - (m < 0);
    }
  }
  return argmax(score);
}

ChoiceSet top_cycle_def(const MarginGraph& g) {
  // Dominant sets are nested, so the smallest one is unique.
  std::optional<CandidateSet> best;
  for (std::uint8_t bits = 1; bits < 8; ++bits) {
    const CandidateSet s(bits);
    bool dominant = true;
    for (Candidate x : s.members()) {
      for (Candidate y : (CandidateSet::all() - s).members()) {
        if (g.m(x, y) <= 0) dominant = false;
      }
    }
    if (dominant && (!best || s.size() < best->size())) best = s;
  }
  return ChoiceSet(*best);
}

ChoiceSet defensible_set(const MarginGraph& g) {
  CandidateSet out;
  for (Candidate x : kCandidates) {
    bool defended = true;
    for (Candidate y : kCandidates) {
      bool some_z = false;
      for (Candidate z : kCandidates) {
        if (g.m(z, y) >= g.m(y, x)) some_z = true;
      }
      if (!some_z) defended = false;
    }
    if (defended) out.insert(x);
  }
  return ChoiceSet(out);
}

ChoiceSet borda(const MarginGraph& g) { return argmax(borda_scores(g)); }

ChoiceSet scoring_rule(const Profile& p, const ScoringVector& v) {
  const auto w = v.integer_weights();
  std::array<Count, 3> score{};
  for (LinearOrder o : kOrders) {
    for (int r = 0; r < 3; ++r) score[index(at_rank(o, r))] += p.count(o) * w[r];
  }
  return argmax(score);
}

std::array<Count, 3> artificial_scores(const Profile& p) {
  const Count n = p.voters();
  const bool case1 = n == 2 || n == 4 || n == 6 || n == 8;
  // Points for the top and the second-ranked candidate of each order.
  const std::array<std::array<Count, 2>, 6> points = {{
      case1 ? std::array<Count, 2>{11, 8} : std::array<Count, 2>{18, 13},  // abc
      {10, 7},                                                            // acb
      {18, 11},                                                           // bac
      {7, 0},                                                             // bca
      {13, 5},                                                            // cab
      {8, 0},                                                             // cba
  }};
  std::array<Count, 3> score{};
  for (LinearOrder o : kOrders) {
    score[index(top(o))] += p.count(o) * points[index(o)][0];
    score[index(middle(o))] += p.count(o) * points[index(o)][1];
  }
  return score;
}

ChoiceSet artificial_rule(const Profile& p) {
  const ChoiceSet base = maximin(margins(p));
  const auto score = artificial_scores(p);
  Count best = std::numeric_limits<Count>::min();
  for (Candidate x : base.set().members()) best = std::max(best, score[index(x)]);
  CandidateSet out;
  for (Candidate x : base.set().members()) {
    if (score[index(x)] == best) out.insert(x);
  }
  return ChoiceSet(out);
}

std::array<std::array<Count, 3>, 3> rank_counts(const Profile& p) {
  std::array<std::array<Count, 3>, 3> rc{};
  for (LinearOrder o : kOrders) {
    for (int r = 0; r < 3; ++r) rc[index(at_rank(o, r))][r] += p.count(o);
  }
  return rc;
}

bool dominates_all_scoring(const Profile& p, Candidate x, DominanceMode mode) {
  const auto rc = rank_counts(p);
  for (Candidate y : kCandidates) {
    if (y == x) continue;
    const Count first = rc[index(x)][0] - rc[index(y)][0];
    const Count first_two = first + rc[index(x)][1] - rc[index(y)][1];
    if (mode == DominanceMode::weak) {
      if (first <= 0 || first_two <= 0) return false;
    } else {
      if (first < 0 || first_two < 0 || (first == 0 && first_two == 0)) return false;
    }
  }
  return true;
}

ChoiceSet evaluate_margins(RuleId id, const MarginGraph& g) {
  switch (id) {
    case RuleId::top_cycle:
    case RuleId::uc_mckelvey:
    case RuleId::banks:
    case RuleId::uc_gillies:
    case RuleId::llull:
    case RuleId::stable_voting:
      return table_rule(id, g);
    case RuleId::defensible: return defensible_set(g);
    case RuleId::copeland: return copeland(g);
    case RuleId::maximin: return maximin(g);
    case RuleId::strict_nanson: return nanson(g, true);
    case RuleId::nanson: return nanson(g, false);
    case RuleId::leximin: return leximin(g);
    case RuleId::black: return black(g);
    case RuleId::baldwin: return baldwin(g);
    case RuleId::borda: return borda(g);
    case RuleId::split_cycle: return split_cycle(g);
    case RuleId::beat_path: return beat_path(g);
    case RuleId::ranked_pairs: return ranked_pairs(g);
    case RuleId::kemeny: return kemeny(g);
    default:
      throw UnsupportedRule(rule_name(id) + " is not pairwise");
  }
}

ChoiceSet evaluate(const Rule& rule, const Profile& p) {
  if (p.empty()) throw std::invalid_argument("rules need at least one voter");
  switch (rule.id()) {
    case RuleId::plurality: return scoring_rule(p, plurality_vector());
    case RuleId::scoring: return scoring_rule(p, *rule.vector());
    case RuleId::artificial: return artificial_rule(p);
    case RuleId::dodgson: return dodgson(p);
    case RuleId::young: return young(p);
    default: return evaluate_margins(rule.id(), margins(p));
  }
}

}  // namespace condorcet3

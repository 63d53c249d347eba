#include "condorcet3/axioms.hpp"

#include <algorithm>
#include <map>

#include "condorcet3/enumeration.hpp"

namespace condorcet3 {

namespace {

const std::map<std::string, AxiomId, std::less<>>& axiom_names() {
  static const std::map<std::string, AxiomId, std::less<>> names = {
      {"reinforcement", AxiomId::reinforcement},
      {"subset_reinforcement", AxiomId::subset_reinforcement},
      {"superset_reinforcement", AxiomId::superset_reinforcement},
      {"optimist_participation", AxiomId::optimist_participation},
      {"positive_involvement", AxiomId::positive_involvement},
      {"singleton_negative_involvement", AxiomId::singleton_negative_involvement},
      {"fishburn_participation", AxiomId::fishburn_participation},
      {"resolute_participation", AxiomId::resolute_participation},
      {"condorcet_consistency", AxiomId::condorcet_consistency},
      {"strong_condorcet", AxiomId::strong_condorcet},
      {"homogeneity", AxiomId::homogeneity},
      {"monotonicity", AxiomId::monotonicity},
      {"positive_responsiveness", AxiomId::positive_responsiveness},
      {"tiebreak_positive_responsiveness", AxiomId::tiebreak_positive_responsiveness},
      {"neutrality", AxiomId::neutrality},
      {"refinement", AxiomId::refinement},
      {"continuity_probe", AxiomId::continuity_probe},
  };
  return names;
}

// Rule outputs for every profile with 1 <= n <= max_n, indexed by colex rank.
class OutputCache {
 public:
  OutputCache(const Rule& rule, Count max_n, int workers) : rule_(rule) {
    if (rule.id() == RuleId::dodgson || rule.id() == RuleId::young) {
      max_n = std::min(max_n, kDodgsonYoungVoterBound);
    }
    bits_.resize(std::max<Count>(max_n, 0) + 1);
    for (Count n = 1; n <= max_n; ++n) {
      auto& row = bits_[n];
      row.assign(profile_count(n), 0);
      run_parallel(split_ranges(n, workers), [&](RankRange r, int) {
        ProfileCursor cur(n, r.begin);
        for (Rank i = r.begin; i < r.end; ++i) {
          row[i] = rule_.pairwise() ? evaluate_margins(rule_.id(), cur.margins()).bits()
                                    : evaluate(rule_, cur.profile()).bits();
          cur.advance();
        }
      });
    }
  }

  ChoiceSet operator()(const Profile& p) const {
    const Count n = p.voters();
    if (n >= 1 && n < static_cast<Count>(bits_.size())) {
      return ChoiceSet(CandidateSet(bits_[n][colex_rank(p.counts())]));
    }
    return evaluate(rule_, p);
  }

  const Rule& rule() const { return rule_; }

 private:
  Rule rule_;
  std::vector<std::vector<std::uint8_t>> bits_;
};

std::vector<Profile> universe(Count lo, Count hi) {
  std::vector<Profile> out;
  for (Count n = std::max<Count>(lo, 1); n <= hi; ++n) {
    ProfileCursor cur(n);
    do {
      out.push_back(cur.profile());
    } while (cur.advance());
  }
  return out;
}

struct Findings {
  std::uint64_t violations = 0;
  std::vector<Witness> witnesses;
  std::size_t cap = 0;

  void add(Witness w) {
    ++violations;
    if (witnesses.size() < cap) witnesses.push_back(std::move(w));
  }
};

// Visits indices [0, count) in contiguous chunks and merges the findings in
// index order.
template <typename Visit>
Findings scan(std::size_t count, const CheckOptions& opt, Visit visit) {
  const int workers = opt.workers > 0 ? opt.workers : default_workers();
  const std::size_t chunks = std::max<std::size_t>(1, std::min<std::size_t>(count, workers));
  std::vector<RankRange> ranges;
  for (std::size_t i = 0; i < chunks; ++i) {
    const Rank b = count * i / chunks, e = count * (i + 1) / chunks;
    if (b < e) ranges.push_back({b, e});
  }
  std::vector<Findings> parts(ranges.size());
  run_parallel(ranges, [&](RankRange r, int w) {
    parts[w].cap = opt.max_witnesses;
    for (Rank i = r.begin; i < r.end; ++i) visit(static_cast<std::size_t>(i), parts[w]);
  });
  Findings all;
  all.cap = opt.max_witnesses;
  for (Findings& part : parts) {
    all.violations += part.violations;
    for (Witness& w : part.witnesses) {
      if (all.witnesses.size() < all.cap) all.witnesses.push_back(std::move(w));
    }
  }
  return all;
}

AxiomReport make_report(const std::string& rule, const std::string& axiom, Count bound, Findings f) {
  AxiomReport r;
  r.rule = rule;
  r.axiom = axiom;
  r.bound = bound;
  r.violations = f.violations;
  r.witnesses = std::move(f.witnesses);
  return r;
}

Candidate best_for(LinearOrder o, CandidateSet s) {
  for (int r = 0; r < 3; ++r) {
    if (s.contains(at_rank(o, r))) return at_rank(o, r);
  }
  throw std::logic_error("empty set has no best element");
}

// Every element of x strictly preferred to every element of y.
bool all_above(LinearOrder o, CandidateSet x, CandidateSet y) {
  for (Candidate a : x.members()) {
    for (Candidate b : y.members()) {
      if (!prefers(o, a, b)) return false;
    }
  }
  return true;
}

bool participation_ok(ParticipationVariant v, LinearOrder o, CandidateSet with, CandidateSet without) {
  switch (v) {
    case ParticipationVariant::optimist:
      return rank_of(o, best_for(o, with)) <= rank_of(o, best_for(o, without));
    case ParticipationVariant::positive_involvement:
      return !without.contains(top(o)) || with.contains(top(o));
    case ParticipationVariant::singleton_negative_involvement:
      return without.is_singleton(bottom(o)) || !with.is_singleton(bottom(o));
    case ParticipationVariant::fishburn:
      return all_above(o, with, without - with) && all_above(o, with - without, without);
  }
  return true;
}

std::string participation_name(ParticipationVariant v) {
  switch (v) {
    case ParticipationVariant::optimist: return "optimist_participation";
    case ParticipationVariant::positive_involvement: return "positive_involvement";
    case ParticipationVariant::singleton_negative_involvement: return "singleton_negative_involvement";
    case ParticipationVariant::fishburn: return "fishburn_participation";
  }
  return "";
}

Witness removal_witness(const Profile& p, const ChoiceSet& fp, LinearOrder o, const Profile& q,
                        const ChoiceSet& fq, std::string note) {
  return Witness{{{"P", p, fp, ""}, {"P-" + to_string(o), q, fq, ""}}, std::move(note)};
}

// Orders in which y sits immediately above x.
std::vector<LinearOrder> orders_with_y_just_above_x(Candidate x, Candidate y) {
  std::vector<LinearOrder> out;
  for (LinearOrder o : kOrders) {
    if (rank_of(o, y) + 1 == rank_of(o, x)) out.push_back(o);
  }
  return out;
}

}  // namespace

std::string axiom_name(AxiomId id) {
  for (const auto& [name, aid] : axiom_names()) {
    if (aid == id) return name;
  }
  return "unknown";
}

AxiomId parse_axiom(std::string_view name) {
  std::string key(name);
  std::replace(key.begin(), key.end(), '-', '_');
  const auto it = axiom_names().find(key);
  if (it == axiom_names().end()) throw std::invalid_argument("unknown axiom '" + std::string(name) + "'");
  return it->second;
}

std::vector<AxiomId> all_axioms() {
  std::vector<AxiomId> out;
  for (int i = 0; i <= static_cast<int>(AxiomId::continuity_probe); ++i) out.push_back(static_cast<AxiomId>(i));
  return out;
}

std::string Witness::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const WitnessEntry& e = entries[i];
    if (i) s += "; ";
    s += e.label + "=" + format_profile(e.profile) + " ";
    if (!e.rule.empty()) s += e.rule + ":";
    s += e.output.to_string();
  }
  if (!note.empty()) s += " (" + note + ")";
  return s;
}

std::string AxiomReport::to_text() const {
  std::string s = rule + " axiom=" + axiom + " bound=" + std::to_string(bound) +
                  " verdict=" + (holds() ? "holds" : "violated");
  if (!holds()) s += " violations=" + std::to_string(violations);
  s += "\n";
  for (const Witness& w : witnesses) s += "  " + w.to_string() + "\n";
  return s;
}

AxiomReport check_reinforcement(const Rule& rule, ReinforcementVariant variant, Count bound,
                                const CheckOptions& opt) {
  const int workers = opt.workers > 0 ? opt.workers : default_workers();
  const OutputCache f(rule, bound, workers);
  const std::vector<Profile> u = universe(1, bound - 1);
  Findings found = scan(u.size(), opt, [&](std::size_t i, Findings& out) {
    const Profile& p1 = u[i];
    const ChoiceSet f1 = f(p1);
    for (std::size_t j = i; j < u.size(); ++j) {
      const Profile& p2 = u[j];
      if (p1.voters() + p2.voters() > bound) break;
      const ChoiceSet f2 = f(p2);
      const CandidateSet both = f1.set() & f2.set();
      const Profile sum = p1 + p2;
      const ChoiceSet fs = f(sum);
      bool ok = true;
      switch (variant) {
        case ReinforcementVariant::full: ok = both.empty() || fs.set() == both; break;
        case ReinforcementVariant::subset: ok = both.is_subset_of(fs); break;
        case ReinforcementVariant::superset: ok = both.empty() || fs.set().is_subset_of(both); break;
      }
      if (!ok) {
        out.add(Witness{{{"P1", p1, f1, ""}, {"P2", p2, f2, ""}, {"P1+P2", sum, fs, ""}},
                        "intersection " + both.to_string()});
      }
    }
  });
  const char* names[] = {"reinforcement", "subset_reinforcement", "superset_reinforcement"};
  return make_report(rule.name(), names[static_cast<int>(variant)], bound, std::move(found));
}

AxiomReport check_participation(const Rule& rule, ParticipationVariant variant, Count bound,
                                const CheckOptions& opt) {
  const int workers = opt.workers > 0 ? opt.workers : default_workers();
  const OutputCache f(rule, bound, workers);
  const std::vector<Profile> u = universe(2, bound);
  Findings found = scan(u.size(), opt, [&](std::size_t i, Findings& out) {
    const Profile& p = u[i];
    const ChoiceSet fp = f(p);
    for (LinearOrder o : kOrders) {
      if (p.count(o) == 0) continue;
      Profile q = p;
      q.remove(o);
      const ChoiceSet fq = f(q);
      if (!participation_ok(variant, o, fp, fq)) {
        out.add(removal_witness(p, fp, o, q, fq, "voter " + to_string(o) + " joins"));
      }
    }
  });
  return make_report(rule.name(), participation_name(variant), bound, std::move(found));
}

AxiomReport check_resolute_participation(const Rule& rule, LinearOrder tiebreak, Count bound,
                                         const CheckOptions& opt) {
  const int workers = opt.workers > 0 ? opt.workers : default_workers();
  const OutputCache f(rule, bound, workers);
  const std::vector<Profile> u = universe(2, bound);
  Findings found = scan(u.size(), opt, [&](std::size_t i, Findings& out) {
    const Profile& p = u[i];
    const ChoiceSet fp = f(p);
    const Candidate x = best_for(tiebreak, fp);
    for (LinearOrder o : kOrders) {
      if (p.count(o) == 0) continue;
      Profile q = p;
      q.remove(o);
      const ChoiceSet fq = f(q);
      const Candidate y = best_for(tiebreak, fq);
      if (rank_of(o, x) > rank_of(o, y)) {
        out.add(removal_witness(p, fp, o, q, fq,
                                std::string("resolute ") + to_char(x) + " vs " + to_char(y)));
      }
    }
  });
  return make_report(rule.name(), "resolute_participation(" + to_string(tiebreak) + ")", bound,
                     std::move(found));
}

AxiomReport check_responsiveness(const Rule& rule, ResponsivenessVariant variant, Count bound,
                                 const CheckOptions& opt) {
  const int workers = opt.workers > 0 ? opt.workers : default_workers();
  const OutputCache f(rule, bound, workers);
  const std::vector<Profile> u = universe(1, bound);
  const int swaps = std::max(1, opt.max_swaps);
  Findings found = scan(u.size(), opt, [&](std::size_t i, Findings& out) {
    const Profile& p = u[i];
    const ChoiceSet fp = f(p);
    for (Candidate x : kCandidates) {
      if (!fp.contains(x)) continue;
      for (Candidate y : kCandidates) {
        if (y == x) continue;
        if (variant == ResponsivenessVariant::tiebreak_positive && !fp.contains(y)) continue;
        const auto orders = orders_with_y_just_above_x(x, y);
        // k[0], k[1]: voters of each order type that improve x over y.
        for (Count k0 = 0; k0 <= std::min<Count>(p.count(orders[0]), swaps); ++k0) {
          for (Count k1 = 0; k0 + k1 <= swaps && k1 <= p.count(orders[1]); ++k1) {
            if (k0 + k1 == 0) continue;
            Profile q = p;
            for (int t = 0; t < 2; ++t) {
              const Count k = t == 0 ? k0 : k1;
              if (k == 0) continue;
              const LinearOrder o = orders[t];
              q.remove(o, k).add(swap_adjacent(o, rank_of(o, y)), k);
            }
            const ChoiceSet fq = f(q);
            const bool ok = variant == ResponsivenessVariant::monotonicity ? fq.contains(x)
                                                                           : fq.is_singleton(x);
            if (!ok) {
              out.add(Witness{{{"P", p, fp, ""}, {"P'", q, fq, ""}},
                              std::string("improve ") + to_char(x) + " over " + to_char(y)});
            }
          }
        }
      }
    }
  });
  const char* names[] = {"monotonicity", "positive_responsiveness", "tiebreak_positive_responsiveness"};
  return make_report(rule.name(), names[static_cast<int>(variant)], bound, std::move(found));
}

AxiomReport check_homogeneity(const Rule& rule, Count bound, const CheckOptions& opt) {
  const int workers = opt.workers > 0 ? opt.workers : default_workers();
  const OutputCache f(rule, bound, workers);
  const std::vector<Profile> u = universe(1, bound);
  Findings found = scan(u.size(), opt, [&](std::size_t i, Findings& out) {
    const Profile& p = u[i];
    const Profile p2 = t_fold(p, 2);
    const ChoiceSet a = f(p), b = f(p2);
    if (a != b) out.add(Witness{{{"P", p, a, ""}, {"2P", p2, b, ""}}, "doubling"});
  });
  return make_report(rule.name(), "homogeneity", bound, std::move(found));
}

AxiomReport check_condorcet(const Rule& rule, CondorcetVariant variant, Count bound,
                            const CheckOptions& opt) {
  const int workers = opt.workers > 0 ? opt.workers : default_workers();
  const OutputCache f(rule, bound, workers);
  const std::vector<Profile> u = universe(1, bound);
  Findings found = scan(u.size(), opt, [&](std::size_t i, Findings& out) {
    const Profile& p = u[i];
    const MarginGraph g = margins(p);
    const CandidateSet expect = variant == CondorcetVariant::standard
                                    ? (condorcet_winner(g) ? CandidateSet::of(*condorcet_winner(g))
                                                           : CandidateSet())
                                    : intermediate_condorcet_winners(g);
    if (expect.empty()) return;
    const ChoiceSet fp = f(p);
    if (fp.set() != expect) {
      out.add(Witness{{{"P", p, fp, ""}},
                      (variant == CondorcetVariant::standard ? "Condorcet winner " : "intermediate winners ") +
                          expect.to_string()});
    }
  });
  return make_report(rule.name(),
                     variant == CondorcetVariant::standard ? "condorcet_consistency" : "strong_condorcet",
                     bound, std::move(found));
}

AxiomReport check_refinement(const Rule& lower, const Rule& upper, Count bound, const CheckOptions& opt) {
  const int workers = opt.workers > 0 ? opt.workers : default_workers();
  const OutputCache fl(lower, bound, workers), fu(upper, bound, workers);
  const std::vector<Profile> u = universe(1, bound);
  Findings found = scan(u.size(), opt, [&](std::size_t i, Findings& out) {
    const Profile& p = u[i];
    const ChoiceSet a = fl(p), b = fu(p);
    if (!a.set().is_subset_of(b)) {
      out.add(Witness{{{"P", p, a, lower.name()}, {"P", p, b, upper.name()}}, "not a subset"});
    }
  });
  return make_report(lower.name(), "refinement(" + upper.name() + ")", bound, std::move(found));
}

AxiomReport check_neutrality(const Rule& rule, Count bound, const CheckOptions& opt) {
  const int workers = opt.workers > 0 ? opt.workers : default_workers();
  const OutputCache f(rule, bound, workers);
  const std::vector<Profile> u = universe(1, bound);
  Findings found = scan(u.size(), opt, [&](std::size_t i, Findings& out) {
    const Profile& p = u[i];
    const ChoiceSet fp = f(p);
    for (const Permutation& s : Permutation::all()) {
      if (s.is_identity()) continue;
      const Profile q = permute(s, p);
      const ChoiceSet fq = f(q);
      if (fq.set() != permute(s, fp.set())) {
        out.add(Witness{{{"P", p, fp, ""}, {"sigma(P)", q, fq, ""}}, "sigma " + s.to_string()});
      }
    }
  });
  return make_report(rule.name(), "neutrality", bound, std::move(found));
}

ContinuityProbe continuity_probe(const Rule& rule, const Profile& p, const Profile& p2, Count horizon) {
  if (horizon < 1) throw std::invalid_argument("horizon must be at least 1");
  const CandidateSet base = evaluate(rule, p);
  ContinuityProbe probe{horizon, std::nullopt};
  for (Count n = horizon; n >= 1; --n) {
    if (!evaluate(rule, t_fold(p, n) + p2).set().is_subset_of(base)) break;
    probe.threshold = n;
  }
  return probe;
}

AxiomReport verify_optimist_equivalence(Count bound, const CheckOptions& opt) {
  const int workers = opt.workers > 0 ? opt.workers : default_workers();
  std::vector<OutputCache> caches;
  for (RuleId id : all_rule_ids()) caches.emplace_back(id, bound, workers);
  const std::vector<Profile> u = universe(2, bound);
  Findings found = scan(u.size(), opt, [&](std::size_t i, Findings& out) {
    const Profile& p = u[i];
    for (const OutputCache& f : caches) {
      const RuleId id = f.rule().id();
      if ((id == RuleId::dodgson || id == RuleId::young) && p.voters() > kDodgsonYoungVoterBound) continue;
      const ChoiceSet fp = f(p);
      for (LinearOrder o : kOrders) {
        if (p.count(o) == 0) continue;
        Profile q = p;
        q.remove(o);
        const ChoiceSet fq = f(q);
        const bool optimist = participation_ok(ParticipationVariant::optimist, o, fp, fq);
        const bool pi = participation_ok(ParticipationVariant::positive_involvement, o, fp, fq);
        const bool sni = participation_ok(ParticipationVariant::singleton_negative_involvement, o, fp, fq);
        if (optimist != (pi && sni)) {
          Witness w = removal_witness(p, fp, o, q, fq, "optimist/PI/SNI disagree");
          for (auto& e : w.entries) e.rule = rule_name(id);
          out.add(std::move(w));
        }
      }
    }
  });
  return make_report("all", "optimist_equivalence", bound, std::move(found));
}

AxiomReport check_axiom(const Rule& rule, AxiomId axiom, Count bound, const AxiomParams& params) {
  const CheckOptions& opt = params.options;
  switch (axiom) {
    case AxiomId::reinforcement: return check_reinforcement(rule, ReinforcementVariant::full, bound, opt);
    case AxiomId::subset_reinforcement: return check_reinforcement(rule, ReinforcementVariant::subset, bound, opt);
    case AxiomId::superset_reinforcement:
      return check_reinforcement(rule, ReinforcementVariant::superset, bound, opt);
    case AxiomId::optimist_participation:
      return check_participation(rule, ParticipationVariant::optimist, bound, opt);
    case AxiomId::positive_involvement:
      return check_participation(rule, ParticipationVariant::positive_involvement, bound, opt);
    case AxiomId::singleton_negative_involvement:
      return check_participation(rule, ParticipationVariant::singleton_negative_involvement, bound, opt);
    case AxiomId::fishburn_participation:
      return check_participation(rule, ParticipationVariant::fishburn, bound, opt);
    case AxiomId::resolute_participation:
      if (!params.tiebreak) throw std::invalid_argument("resolute_participation needs a tie-breaking order");
      return check_resolute_participation(rule, *params.tiebreak, bound, opt);
    case AxiomId::condorcet_consistency: return check_condorcet(rule, CondorcetVariant::standard, bound, opt);
    case AxiomId::strong_condorcet: return check_condorcet(rule, CondorcetVariant::strong, bound, opt);
    case AxiomId::homogeneity: return check_homogeneity(rule, bound, opt);
    case AxiomId::monotonicity:
      return check_responsiveness(rule, ResponsivenessVariant::monotonicity, bound, opt);
    case AxiomId::positive_responsiveness:
      return check_responsiveness(rule, ResponsivenessVariant::positive, bound, opt);
    case AxiomId::tiebreak_positive_responsiveness:
      return check_responsiveness(rule, ResponsivenessVariant::tiebreak_positive, bound, opt);
    case AxiomId::neutrality: return check_neutrality(rule, bound, opt);
    case AxiomId::refinement:
      if (!params.upper) throw std::invalid_argument("refinement needs the coarser rule");
      return check_refinement(rule, *params.upper, bound, opt);
    case AxiomId::continuity_probe: {
      if (!params.p || !params.p2) throw std::invalid_argument("continuity_probe needs two profiles");
      const ContinuityProbe probe = continuity_probe(rule, *params.p, *params.p2, bound);
      Findings f;
      f.cap = opt.max_witnesses;
      if (!probe.threshold) {
        f.add(Witness{{{"P", *params.p, evaluate(rule, *params.p), ""},
                       {"P2", *params.p2, evaluate(rule, *params.p2), ""},
                       {"horizon*P+P2", t_fold(*params.p, bound) + *params.p2,
                        evaluate(rule, t_fold(*params.p, bound) + *params.p2), ""}},
                      "no threshold within horizon"});
      }
      AxiomReport r = make_report(rule.name(), "continuity_probe", bound, std::move(f));
      if (probe.threshold) r.axiom += "(threshold=" + std::to_string(*probe.threshold) + ")";
      return r;
    }
  }
  throw std::logic_error("unreachable");
}

bool replays(const Rule& rule, const Witness& w) {
  for (const WitnessEntry& e : w.entries) {
    const Rule r = e.rule.empty() ? rule : Rule::parse(e.rule);
    if (evaluate(r, e.profile) != e.output) return false;
  }
  return true;
}

}  // namespace condorcet3

// Proof replays use core margin arithmetic and set logic only; nothing here
// evaluates a voting rule.

#include <map>
#include <variant>

#include "condorcet3/core.hpp"
#include "condorcet3/satgen.hpp"

namespace condorcet3 {

namespace {

// Bit k stands for the choice set with members bits k + 1.
using Domain = std::uint8_t;
constexpr Domain kAnySet = 0x7f;

CandidateSet set_at(int k) { return CandidateSet(static_cast<std::uint8_t>(k + 1)); }

template <typename Pred>
Domain sets_where(Pred pred) {
  Domain d = 0;
  for (int k = 0; k < 7; ++k) {
    if (pred(set_at(k))) d |= static_cast<Domain>(1u << k);
  }
  return d;
}

std::string domain_text(Domain d) {
  if (d == 0) return "none";
  std::string s;
  for (int k = 0; k < 7; ++k) {
    if (!((d >> k) & 1u)) continue;
    if (!s.empty()) s += " or ";
    s += set_at(k).to_string();
  }
  return s;
}

std::string margin_text(const MarginGraph& g) {
  return "m_ab=" + std::to_string(g.ab()) + " m_bc=" + std::to_string(g.bc()) +
         " m_ca=" + std::to_string(-g.ac());
}

struct Sum {
  std::string lhs, rhs, total;
};
struct Winner {
  std::string profile;
  Candidate w;
};
struct Assume {
  std::string profile;
  Candidate x;
};
struct Symmetric {
  std::string profile;
  Permutation sigma;
};
struct Reinforce {
  std::string lhs, rhs, total;
  bool subset_only;
};
struct Claim {
  std::string profile;
  std::string text;  // with candidates in canonical labels
  Domain allowed;
};
struct Contradiction {};

using Step = std::variant<Sum, Winner, Assume, Symmetric, Reinforce, Claim, Contradiction>;

struct Script {
  std::string theorem;
  std::vector<std::pair<std::string, Profile>> profiles;
  // Profile whose membership is assumed without loss of generality; empty
  // when the proof needs no case split.
  std::string wlog_profile;
  std::vector<Step> steps;
};

Domain permute_domain(const Permutation& s, Domain d) {
  Domain out = 0;
  for (int k = 0; k < 7; ++k) {
    if ((d >> k) & 1u) out |= static_cast<Domain>(1u << (permute(s, set_at(k)).bits() - 1));
  }
  return out;
}

std::string relabel_text(const Permutation& rho, const std::string& text) {
  std::string out = text;
  for (char& ch : out) {
    if (ch == 'a' || ch == 'b' || ch == 'c') ch = to_char(rho(*candidate_from_char(ch)));
  }
  return out;
}

class Replay {
 public:
  Replay(const Script& script, const Permutation& rho) : rho_(rho) {
    for (const auto& [name, p] : script.profiles) {
      profiles_[name] = permute(rho, p);
      domains_[name] = kAnySet;
    }
  }

  ProofStep run(const Step& step) {
    return std::visit([&](const auto& s) { return apply(s); }, step);
  }

  bool contradiction() const {
    for (const auto& [name, d] : domains_) {
      if (d == 0) return true;
    }
    return false;
  }

 private:
  const Profile& P(const std::string& name) const { return profiles_.at(name); }
  std::string show(const std::string& name) const { return name + " = " + format_profile(P(name)); }

  ProofStep apply(const Sum& s) {
    ProofStep st{s.total + " = " + s.lhs + " + " + s.rhs + " (" + format_profile(P(s.total)) + ")", true, ""};
    const Profile sum = combine(P(s.lhs), P(s.rhs));
    if (sum != P(s.total)) {
      st.ok = false;
      st.detail = s.lhs + " + " + s.rhs + " is " + format_profile(sum);
    }
    return st;
  }

  ProofStep apply(const Winner& s) {
    const Candidate w = rho_(s.w);
    const MarginGraph g = margins(P(s.profile));
    ProofStep st{std::string("Condorcet winner of ") + show(s.profile) + " is " + to_char(w) + " (" +
                     margin_text(g) + "), so f = {" + to_char(w) + "}",
                 true, ""};
    const auto cw = condorcet_winner(g);
    if (!cw || *cw != w) {
      st.ok = false;
      st.detail = cw ? std::string("Condorcet winner is ") + to_char(*cw) : "no Condorcet winner: " + margin_text(g);
      return st;
    }
    domains_[s.profile] &= sets_where([&](CandidateSet x) { return x == CandidateSet::of(w); });
    return st;
  }

  ProofStep apply(const Assume& s) {
    const Candidate x = rho_(s.x);
    domains_[s.profile] &= sets_where([&](CandidateSet y) { return y.contains(x); });
    return {std::string("assume ") + to_char(x) + " in f(" + s.profile + ")", true, ""};
  }

  ProofStep apply(const Symmetric& s) {
    const Permutation sigma = rho_ * s.sigma * rho_.inverse();
    ProofStep st{show(s.profile) + " is fixed by " + sigma.to_string() +
                     ", so by anonymity and neutrality f is too",
                 true, ""};
    if (permute(sigma, P(s.profile)) != P(s.profile)) {
      st.ok = false;
      st.detail = "relabelled profile is " + format_profile(permute(sigma, P(s.profile)));
      return st;
    }
    domains_[s.profile] &= sets_where([&](CandidateSet x) { return permute(sigma, x) == x; });
    return st;
  }

  ProofStep apply(const Reinforce& s) {
    ProofStep st{std::string(s.subset_only ? "subset-reinforcement" : "reinforcement") + " on " + s.lhs + ", " +
                     s.rhs + " -> " + s.total,
                 true, ""};
    if (combine(P(s.lhs), P(s.rhs)) != P(s.total)) {
      st.ok = false;
      st.detail = s.total + " is not " + s.lhs + " + " + s.rhs;
      return st;
    }
    Domain& d1 = domains_[s.lhs];
    Domain& d2 = domains_[s.rhs];
    Domain& ds = domains_[s.total];
    Domain k1 = 0, k2 = 0, ks = 0;
    for (int i = 0; i < 7; ++i) {
      if (!((d1 >> i) & 1u)) continue;
      for (int j = 0; j < 7; ++j) {
        if (!((d2 >> j) & 1u)) continue;
        for (int k = 0; k < 7; ++k) {
          if (!((ds >> k) & 1u)) continue;
          const CandidateSet meet = set_at(i) & set_at(j);
          const bool ok = s.subset_only ? meet.is_subset_of(set_at(k)) : meet.empty() || meet == set_at(k);
          if (!ok) continue;
          k1 |= static_cast<Domain>(1u << i);
          k2 |= static_cast<Domain>(1u << j);
          ks |= static_cast<Domain>(1u << k);
        }
      }
    }
    d1 = k1;
    d2 = k2;
    ds = ks;
    return st;
  }

  ProofStep apply(const Claim& s) {
    const Domain allowed = permute_domain(rho_, s.allowed);
    ProofStep st{"hence " + relabel_text(rho_, s.text), true, ""};
    const Domain d = domains_[s.profile];
    if ((d & ~allowed) != 0) {
      st.ok = false;
      st.detail = "f(" + s.profile + ") may still be " + domain_text(d & ~allowed);
    }
    return st;
  }

  ProofStep apply(const Contradiction&) {
    ProofStep st{"contradiction: some profile has no admissible choice set", contradiction(), ""};
    if (!st.ok) {
      for (const auto& [name, d] : domains_) st.detail += "f(" + name + ") in " + domain_text(d) + "; ";
    }
    return st;
  }

  Permutation rho_;
  std::map<std::string, Profile> profiles_;
  std::map<std::string, Domain> domains_;
};

Domain without(Candidate x) {
  return sets_where([&](CandidateSet s) { return !s.contains(x); });
}
Domain exactly(CandidateSet target) {
  return sets_where([&](CandidateSet s) { return s == target; });
}

Script script_4_1() {
  Script s;
  s.theorem = "4.1";
  s.profiles = {{"P1", parse_profile("2abc+2bca+2cab")},
                {"P2", parse_profile("2acb+1cab")},
                {"P1+P2", parse_profile("2abc+2acb+2bca+3cab")}};
  s.wlog_profile = "P1";
  s.steps = {Assume{"P1", Candidate::a},
             Winner{"P2", Candidate::a},
             Sum{"P1", "P2", "P1+P2"},
             Winner{"P1+P2", Candidate::c},
             Reinforce{"P1", "P2", "P1+P2", true},
             Contradiction{}};
  return s;
}

Script script_4_3() {
  Script s;
  s.theorem = "4.3";
  const Profile p0 = parse_profile("bac"), p1 = parse_profile("abc+bca+cab"),
                p2 = parse_profile("abc+acb+2cab"), p3 = parse_profile("2acb+bca+cab"),
                p5 = parse_profile("3acb+2cab");
  s.profiles = {{"P0", p0},      {"P1", p1},      {"P2", p2},      {"P3", p3},     {"P5", p5},
                {"P4", p0 + p2}, {"P6", p0 + p3}, {"P7", p1 + p2}, {"P8", p1 + p3}, {"P9", p2 + p3}};
  s.wlog_profile = "P1";
  s.steps = {Assume{"P1", Candidate::a},
             Sum{"P1", "P2", "P7"},
             Winner{"P7", Candidate::c},
             Reinforce{"P1", "P2", "P7", false},
             Claim{"P2", "a not in f(P2)", without(Candidate::a)},
             Sum{"P1", "P3", "P8"},
             Winner{"P8", Candidate::c},
             Reinforce{"P1", "P3", "P8", false},
             Claim{"P3", "a not in f(P3)", without(Candidate::a)},
             Winner{"P0", Candidate::b},
             Sum{"P0", "P2", "P4"},
             Winner{"P4", Candidate::a},
             Reinforce{"P0", "P2", "P4", false},
             Claim{"P2", "b not in f(P2)", without(Candidate::b)},
             Sum{"P0", "P3", "P6"},
             Winner{"P6", Candidate::a},
             Reinforce{"P0", "P3", "P6", false},
             Claim{"P3", "b not in f(P3)", without(Candidate::b)},
             Claim{"P2", "f(P2) = {c}", exactly(CandidateSet::of(Candidate::c))},
             Claim{"P3", "f(P3) = {c}", exactly(CandidateSet::of(Candidate::c))},
             Sum{"P2", "P3", "P9"},
             Reinforce{"P2", "P3", "P9", false},
             Claim{"P9", "f(P9) = {c}", exactly(CandidateSet::of(Candidate::c))},
             Sum{"P1", "P5", "P9"},
             Winner{"P5", Candidate::a},
             Reinforce{"P1", "P5", "P9", false},
             Contradiction{}};
  return s;
}

Script script_4_5() {
  Script s;
  s.theorem = "4.5";
  const Profile p1 = parse_profile("cab"), p2 = parse_profile("abc+bac"), p3 = parse_profile("abc+bca+cab");
  s.profiles = {{"P1", p1}, {"P2", p2}, {"P3", p3}, {"P1+P2", p1 + p2}, {"P2+P3", p2 + p3}};
  const Permutation swap_ab(Candidate::b, Candidate::a, Candidate::c);
  const Permutation rotate(Candidate::b, Candidate::c, Candidate::a);
  s.steps = {Winner{"P1", Candidate::c},
             Sum{"P1", "P2", "P1+P2"},
             Winner{"P1+P2", Candidate::a},
             Reinforce{"P1", "P2", "P1+P2", false},
             Claim{"P2", "c not in f(P2)", without(Candidate::c)},
             Symmetric{"P2", swap_ab},
             Claim{"P2", "f(P2) = {a,b}", exactly(CandidateSet{Candidate::a, Candidate::b})},
             Symmetric{"P3", rotate},
             Claim{"P3", "f(P3) = {a,b,c}", exactly(CandidateSet::all())},
             Sum{"P2", "P3", "P2+P3"},
             Winner{"P2+P3", Candidate::a},
             Reinforce{"P2", "P3", "P2+P3", false},
             Contradiction{}};
  return s;
}

}  // namespace

bool ProofReport::ok() const {
  for (const ProofStep& s : preliminaries) {
    if (!s.ok) return false;
  }
  if (cases.empty()) return false;
  for (const ProofCase& c : cases) {
    if (!c.contradiction) return false;
    for (const ProofStep& s : c.steps) {
      if (!s.ok) return false;
    }
  }
  return true;
}

std::string ProofReport::to_text() const {
  auto line = [](const ProofStep& s, const std::string& indent) {
    std::string out = indent + (s.ok ? "[ok] " : "[FAILED] ") + s.description + "\n";
    if (!s.ok && !s.detail.empty()) out += indent + "       " + s.detail + "\n";
    return out;
  };
  std::string out = "replay " + theorem + "\n";
  for (const ProofStep& s : preliminaries) out += line(s, "  ");
  for (const ProofCase& c : cases) {
    std::string indent = "  ";
    if (!c.label.empty()) {
      out += "  case " + c.label + ":\n";
      indent = "    ";
    }
    for (const ProofStep& s : c.steps) out += line(s, indent);
  }
  out += std::string("  result: ") + (ok() ? "contradiction reached in every case" : "replay FAILED") + "\n";
  return out;
}

ProofReport proof_replay(std::string_view id) {
  Script script;
  if (id == "4.1") {
    script = script_4_1();
  } else if (id == "4.3") {
    script = script_4_3();
  } else if (id == "4.5") {
    script = script_4_5();
  } else {
    throw std::invalid_argument("unknown theorem '" + std::string(id) + "' (expected 4.1, 4.3 or 4.5)");
  }

  ProofReport report;
  report.theorem = script.theorem;
  std::vector<Permutation> branches = {Permutation()};
  if (!script.wlog_profile.empty()) {
    // Membership of a in the cyclic profile covers every case once the
    // profile is fixed by the rotations.
    const Permutation rot(Candidate::b, Candidate::c, Candidate::a);
    branches = {Permutation(), rot, rot * rot};
    Profile p;
    for (const auto& [name, q] : script.profiles) {
      if (name == script.wlog_profile) p = q;
    }
    ProofStep st{script.wlog_profile + " = " + format_profile(p) +
                     " is fixed by the rotation a->b->c->a; f(" + script.wlog_profile +
                     ") is non-empty, so one case per candidate covers all",
                 permute(rot, p) == p, ""};
    if (!st.ok) st.detail = "rotated profile is " + format_profile(permute(rot, p));
    report.preliminaries.push_back(st);
  }
  for (const Permutation& rho : branches) {
    Replay replay(script, rho);
    ProofCase c;
    if (!script.wlog_profile.empty()) {
      c.label = std::string(1, to_char(rho(Candidate::a))) + " in f(" + script.wlog_profile + ")";
    }
    for (const Step& step : script.steps) c.steps.push_back(replay.run(step));
    c.contradiction = replay.contradiction();
    report.cases.push_back(std::move(c));
  }
  return report;
}

}  // namespace condorcet3

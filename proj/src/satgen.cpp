#include "condorcet3/satgen.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "condorcet3/enumeration.hpp"

namespace condorcet3 {

void CnfFormula::add_clause(std::span<const int> lits) {
  if (starts.empty()) starts.push_back(0);
  const std::size_t begin = literals.size();
  for (int l : lits) {
    if (std::find(literals.begin() + static_cast<std::ptrdiff_t>(begin), literals.end(), l) == literals.end()) {
      literals.push_back(l);
    }
  }
  starts.push_back(literals.size());
}

bool CnfFormula::satisfied_by(const std::vector<bool>& assignment) const {
  for (std::size_t i = 0; i < clause_count(); ++i) {
    bool sat = false;
    for (int l : clause(i)) {
      if (assignment[std::abs(l)] == (l > 0)) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

std::size_t CnfInstance::index_of(const Profile& p) const {
  const Count n = p.voters();
  if (n < 1 || n > bound_) throw std::out_of_range("profile outside the instance universe");
  return offset_[n] + colex_rank(p.counts());
}

int CnfInstance::var_of(const Profile& p, Candidate c) const {
  const std::size_t i = index_of(p);
  const std::size_t r = rep_[i];
  return base_var_[r] + class_of_[r][index(to_rep_[i](c))];
}

namespace {

std::uint64_t pair_key(std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  return (static_cast<std::uint64_t>(i) << 32) | j;
}

}  // namespace

int CnfInstance::aux_of(const Profile& p1, const Profile& p2) const {
  if (p1.voters() + p2.voters() > bound_) throw std::out_of_range("pair exceeds the instance bound");
  const std::size_t i = index_of(p1), j = index_of(p2);
  const auto key = pair_key(i, j);
  const auto it = std::lower_bound(pairs_.begin(), pairs_.end(), key, [](const auto& pr, std::uint64_t k) {
    return pair_key(pr.first, pr.second) < k;
  });
  if (it == pairs_.end() || pair_key(it->first, it->second) != key) throw std::out_of_range("pair not in instance");
  return first_aux_ + static_cast<int>(it - pairs_.begin());
}

std::string CnfInstance::describe(int var) const {
  if (var < 1 || var > num_vars()) throw std::out_of_range("variable out of range");
  if (var >= first_aux_) {
    const auto& [i, j] = pairs_[var - first_aux_];
    return "v " + format_profile(universe_[i]) + " | " + format_profile(universe_[j]);
  }
  const auto& [owner, members] = owners_[var - 1];
  std::string names;
  for (Candidate c : members.members()) {
    if (!names.empty()) names += ',';
    names += to_char(c);
  }
  return "x " + format_profile(universe_[owner]) + " " + names;
}

bool CnfInstance::is_representative(const Profile& p) const {
  const std::size_t i = index_of(p);
  return rep_[i] == i;
}

CnfInstance build_instance(Count bound, CnfOptions options) {
  if (bound < 2) throw std::invalid_argument("bound must be at least 2");
  CnfInstance inst;
  inst.bound_ = bound;
  inst.neutral_ = options.neutrality;
  inst.offset_.assign(bound + 2, 0);
  for (Count n = 1; n <= bound; ++n) {
    inst.offset_[n] = inst.universe_.size();
    for (Profile& p : enumerate(n)) inst.universe_.push_back(std::move(p));
  }
  inst.offset_[bound + 1] = inst.universe_.size();

  const std::size_t u = inst.universe_.size();
  inst.rep_.resize(u);
  inst.to_rep_.resize(u);
  inst.base_var_.assign(u, 0);
  inst.class_of_.assign(u, {0, 1, 2});
  CnfFormula& f = inst.formula_;
  int next = 1;
  for (std::size_t i = 0; i < u; ++i) {
    const Profile& p = inst.universe_[i];
    inst.rep_[i] = i;
    if (options.neutrality) {
      for (const Permutation& s : Permutation::all()) {
        const std::size_t k = inst.index_of(permute(s, p));
        if (k < inst.rep_[i]) {
          inst.rep_[i] = k;
          inst.to_rep_[i] = s;
        }
      }
    }
    if (inst.rep_[i] != i) continue;
    // Candidates related by a relabelling that fixes p share a variable.
    std::array<int, 3>& cls = inst.class_of_[i];
    std::array<CandidateSet, 3> members;
    int classes = 0;
    for (Candidate c : kCandidates) {
      cls[index(c)] = -1;
      if (options.neutrality) {
        for (const Permutation& s : Permutation::all()) {
          const Candidate d = s(c);
          if (index(d) < index(c) && permute(s, p) == p) {
            cls[index(c)] = cls[index(d)];
            break;
          }
        }
      }
      if (cls[index(c)] < 0) cls[index(c)] = classes++;
      members[cls[index(c)]].insert(c);
    }
    inst.base_var_[i] = next;
    for (int k = 0; k < classes; ++k) inst.owners_.emplace_back(i, members[k]);
    next += classes;
  }
  inst.first_aux_ = next;

  // (i) non-empty, (ii) Condorcet winners, on representatives.
  for (std::size_t i = 0; i < u; ++i) {
    if (inst.rep_[i] != i) continue;
    const int nonempty[] = {inst.var_of(inst.universe_[i], Candidate::a), inst.var_of(inst.universe_[i], Candidate::b),
                            inst.var_of(inst.universe_[i], Candidate::c)};
    f.add_clause(nonempty);
  }
  for (std::size_t i = 0; i < u; ++i) {
    if (inst.rep_[i] != i) continue;
    const auto w = condorcet_winner(margins(inst.universe_[i]));
    if (!w) continue;
    std::vector<int> done;
    for (Candidate c : kCandidates) {
      const int x = inst.var_of(inst.universe_[i], c);
      if (std::find(done.begin(), done.end(), x) != done.end()) continue;
      done.push_back(x);
      const int lit[] = {c == *w ? x : -x};
      f.add_clause(lit);
    }
  }

  // (iii) reinforcement over unordered pairs.
  for (std::size_t i = 0; i < u; ++i) {
    const Profile& p1 = inst.universe_[i];
    for (std::size_t j = i; j < u; ++j) {
      const Profile& p2 = inst.universe_[j];
      if (p1.voters() + p2.voters() > bound) break;
      inst.pairs_.emplace_back(i, j);
      const int v = next++;
      const Profile s = p1 + p2;
      for (Candidate c : kCandidates) {
        const int x1 = inst.var_of(p1, c), x2 = inst.var_of(p2, c), xs = inst.var_of(s, c);
        const int c1[] = {-x1, -x2, v};
        const int c2[] = {-v, -xs, x1};
        const int c3[] = {-v, -xs, x2};
        const int c4[] = {-v, -x1, -x2, xs};
        f.add_clause(c1);
        f.add_clause(c2);
        f.add_clause(c3);
        f.add_clause(c4);
      }
    }
  }
  f.vars = next - 1;
  if (f.starts.empty()) f.starts.push_back(0);
  return inst;
}

void emit_dimacs(const CnfInstance& inst, std::ostream& out) {
  out << "c reinforcement bound=" << inst.bound() << " neutrality=" << (inst.neutral() ? "on" : "off") << "\n";
  for (int v = 1; v <= inst.num_vars(); ++v) out << "c " << v << " " << inst.describe(v) << "\n";
  const CnfFormula& f = inst.formula();
  out << "p cnf " << f.vars << " " << f.clause_count() << "\n";
  std::string line;
  for (std::size_t i = 0; i < f.clause_count(); ++i) {
    line.clear();
    for (int l : f.clause(i)) {
      line += std::to_string(l);
      line += ' ';
    }
    line += "0\n";
    out << line;
  }
}

void emit_dimacs(const CnfInstance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  emit_dimacs(inst, out);
  out.flush();
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

CnfFormula parse_dimacs(std::istream& in) {
  CnfFormula f;
  f.starts.push_back(0);
  long long declared_clauses = -1;
  std::string line;
  std::vector<int> current;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "c" || first[0] == 'c') continue;
    if (first == "%") break;
    if (first == "p") {
      std::string fmt;
      long long vars = -1;
      if (!(ls >> fmt >> vars >> declared_clauses) || fmt != "cnf" || vars < 0 || declared_clauses < 0) {
        throw std::invalid_argument("malformed DIMACS header: " + line);
      }
      f.vars = static_cast<int>(vars);
      continue;
    }
    if (declared_clauses < 0) throw std::invalid_argument("clause before DIMACS header");
    ls.clear();
    ls.str(line);
    long long lit = 0;
    while (ls >> lit) {
      if (lit == 0) {
        f.add_clause(current);
        current.clear();
      } else {
        if (std::llabs(lit) > f.vars) throw std::invalid_argument("literal exceeds declared variable count");
        current.push_back(static_cast<int>(lit));
      }
    }
    if (!ls.eof()) throw std::invalid_argument("malformed DIMACS clause line: " + line);
  }
  if (!current.empty()) throw std::invalid_argument("unterminated DIMACS clause");
  if (declared_clauses < 0) throw std::invalid_argument("missing DIMACS header");
  if (static_cast<long long>(f.clause_count()) != declared_clauses) {
    throw std::invalid_argument("DIMACS clause count differs from header");
  }
  return f;
}

AssignmentCheck check_assignment_detail(const CnfInstance& inst, const Rule& rule) {
  std::vector<bool> a(inst.num_vars() + 1, false);
  const auto& u = inst.universe();
  for (const Profile& p : u) {
    if (!inst.is_representative(p)) continue;
    const ChoiceSet out = evaluate(rule, p);
    for (Candidate c : kCandidates) {
      const int x = inst.var_of(p, c);
      a[x] = out.contains(c);
      // Merged variables need the same answer for every candidate they cover.
      for (Candidate d : kCandidates) {
        if (inst.var_of(p, d) == x && out.contains(d) != out.contains(c)) {
          AssignmentCheck r;
          r.ok = false;
          r.detail = "f(" + format_profile(p) + ") = " + out.to_string() + " breaks the symmetry of the profile";
          return r;
        }
      }
    }
  }
  auto member = [&](const Profile& p, Candidate c) { return static_cast<bool>(a[inst.var_of(p, c)]); };
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = i; j < u.size(); ++j) {
      if (u[i].voters() + u[j].voters() > inst.bound()) break;
      bool meet = false;
      for (Candidate c : kCandidates) meet = meet || (member(u[i], c) && member(u[j], c));
      a[inst.aux_of(u[i], u[j])] = meet;
    }
  }
  AssignmentCheck result;
  const CnfFormula& f = inst.formula();
  for (std::size_t i = 0; i < f.clause_count(); ++i) {
    bool sat = false;
    for (int l : f.clause(i)) sat = sat || a[std::abs(l)] == (l > 0);
    if (sat) continue;
    result.ok = false;
    result.clause = i;
    for (int l : f.clause(i)) {
      if (!result.detail.empty()) result.detail += " OR ";
      result.detail += (l < 0 ? "NOT(" : "(") + inst.describe(std::abs(l)) + ")";
    }
    break;
  }
  return result;
}

bool check_assignment(const CnfInstance& inst, const Rule& rule) { return check_assignment_detail(inst, rule).ok; }

std::string to_string(SatStatus s) {
  switch (s) {
    case SatStatus::sat: return "SAT";
    case SatStatus::unsat: return "UNSAT";
    case SatStatus::unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

namespace {

class Dpll {
 public:
  explicit Dpll(const CnfFormula& f) : n_(f.vars), val_(f.vars + 1, 0), watches_(2 * (f.vars + 1)) {
    std::vector<std::uint32_t> occurrences(n_ + 1, 0);
    for (std::size_t i = 0; i < f.clause_count(); ++i) {
      const auto c = f.clause(i);
      for (int l : c) ++occurrences[std::abs(l)];
      if (c.empty()) {
        trivially_unsat_ = true;
      } else if (c.size() == 1) {
        units_.push_back(c[0]);
      } else {
        const int id = static_cast<int>(clauses_.size());
        clauses_.emplace_back(c.begin(), c.end());
        watches_[code(c[0])].push_back(id);
        watches_[code(c[1])].push_back(id);
      }
    }
    order_.resize(n_);
    for (int v = 1; v <= n_; ++v) order_[v - 1] = v;
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int x, int y) { return occurrences[x] > occurrences[y]; });
  }

  SolveResult run(std::uint64_t max_conflicts) {
    SolveResult r;
    if (trivially_unsat_) {
      r.status = SatStatus::unsat;
      return r;
    }
    for (int l : units_) {
      if (!enqueue(l)) {
        r.status = SatStatus::unsat;
        return r;
      }
    }
    while (true) {
      if (!propagate()) {
        ++r.conflicts;
        if (r.conflicts > max_conflicts) return r;
        if (!backtrack()) {
          r.status = SatStatus::unsat;
          return r;
        }
        continue;
      }
      while (next_ < order_.size() && val_[order_[next_]] != 0) ++next_;
      if (next_ == order_.size()) {
        r.status = SatStatus::sat;
        r.model.assign(n_ + 1, false);
        for (int v = 1; v <= n_; ++v) r.model[v] = val_[v] > 0;
        return r;
      }
      ++r.decisions;
      levels_.push_back({trail_.size(), false, next_});
      enqueue(-order_[next_]);
    }
  }

 private:
  struct Level {
    std::size_t start;
    bool flipped;
    std::size_t cursor;
  };

  static std::size_t code(int l) { return 2 * static_cast<std::size_t>(std::abs(l)) + (l < 0); }
  int value(int l) const { return l > 0 ? val_[l] : -val_[-l]; }

  bool enqueue(int l) {
    const int v = value(l);
    if (v != 0) return v > 0;
    val_[std::abs(l)] = static_cast<signed char>(l > 0 ? 1 : -1);
    trail_.push_back(l);
    return true;
  }

  bool propagate() {
    while (head_ < trail_.size()) {
      const int falsified = -trail_[head_++];
      auto& ws = watches_[code(falsified)];
      std::size_t keep = 0;
      for (std::size_t i = 0; i < ws.size(); ++i) {
        const int id = ws[i];
        auto& c = clauses_[id];
        if (c[0] == falsified) std::swap(c[0], c[1]);
        if (value(c[0]) > 0) {
          ws[keep++] = id;
          continue;
        }
        bool moved = false;
        for (std::size_t k = 2; k < c.size(); ++k) {
          if (value(c[k]) >= 0) {
            std::swap(c[1], c[k]);
            watches_[code(c[1])].push_back(id);
            moved = true;
            break;
          }
        }
        if (moved) continue;
        ws[keep++] = id;
        if (!enqueue(c[0])) {
          for (std::size_t r = i + 1; r < ws.size(); ++r) ws[keep++] = ws[r];
          ws.resize(keep);
          return false;
        }
      }
      ws.resize(keep);
    }
    return true;
  }

  void undo_to(std::size_t start) {
    while (trail_.size() > start) {
      val_[std::abs(trail_.back())] = 0;
      trail_.pop_back();
    }
    head_ = std::min(head_, start);
  }

  bool backtrack() {
    while (!levels_.empty()) {
      Level& top = levels_.back();
      const int decided = trail_[top.start];
      undo_to(top.start);
      next_ = std::min(next_, top.cursor);
      if (!top.flipped) {
        top.flipped = true;
        enqueue(-decided);
        return true;
      }
      levels_.pop_back();
    }
    return false;
  }

  int n_;
  std::vector<signed char> val_;
  std::vector<std::vector<int>> watches_;
  std::vector<std::vector<int>> clauses_;
  std::vector<int> units_;
  std::vector<int> order_;
  std::vector<int> trail_;
  std::vector<Level> levels_;
  std::size_t head_ = 0;
  std::size_t next_ = 0;
  bool trivially_unsat_ = false;
};

}  // namespace

SolveResult solve(const CnfFormula& f, std::uint64_t max_conflicts) { return Dpll(f).run(max_conflicts); }

}  // namespace condorcet3

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "condorcet3/axioms.hpp"
#include "condorcet3/enumeration.hpp"
#include "condorcet3/satgen.hpp"

namespace condorcet3::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Rule rule_arg(const std::string& name) {
  try {
    return Rule::parse(name);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

Profile profile_arg(const std::string& text) {
  try {
    return parse_profile(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string compact(const ChoiceSet& s) {
  std::string out;
  for (Candidate c : s.set().members()) out += to_char(c);
  return out;
}

int cmd_winners(const std::string& profile_text, const std::vector<std::string>& rules, bool all,
                std::ostream& out) {
  const Profile p = profile_arg(profile_text);
  if (all == !rules.empty()) throw UsageError("winners needs exactly one of --rule or --all");
  std::vector<Rule> selected;
  if (all) {
    for (RuleId id : all_rule_ids()) selected.emplace_back(id);
  } else {
    for (const std::string& r : rules) selected.push_back(rule_arg(r));
  }
  for (const Rule& r : selected) {
    try {
      out << r.name() << ": " << evaluate(r, p).to_string() << "\n";
    } catch (const BoundExceeded&) {
      out << r.name() << ": unsupported (more than " << kDodgsonYoungVoterBound << " voters)\n";
    }
  }
  return kExitOk;
}

int cmd_table(bool check, std::ostream& out, std::ostream& err) {
  const GraphKind kinds[] = {GraphKind::A, GraphKind::B, GraphKind::C, GraphKind::D, GraphKind::E, GraphKind::F,
                             GraphKind::G, GraphKind::H, GraphKind::I, GraphKind::J, GraphKind::K, GraphKind::L};
  out << "rule";
  for (GraphKind k : kinds) out << "," << to_string(k);
  out << "\n";
  int mismatches = 0;
  for (RuleId id : table_rule_ids()) {
    out << rule_name(id);
    for (GraphKind k : kinds) {
      const ChoiceSet got = evaluate(id, canonical_table_profile(k));
      out << "," << compact(got);
      if (check && got != table_cell(id, k)) {
        ++mismatches;
        err << "mismatch: " << rule_name(id) << " on " << to_string(k) << ": engine " << got.to_string()
            << ", table " << table_cell(id, k).to_string() << "\n";
      }
    }
    out << "\n";
  }
  return mismatches == 0 ? kExitOk : kExitCounterexample;
}

int cmd_verify(const std::string& rule_name_text, const std::string& axiom_text, Count bound,
               const std::string& tiebreak, const std::string& of, const std::string& p, const std::string& p2,
               std::size_t max_witnesses, int max_swaps, std::ostream& out) {
  const Rule rule = rule_arg(rule_name_text);
  AxiomId axiom;
  try {
    axiom = parse_axiom(axiom_text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  AxiomParams params;
  params.options.max_witnesses = max_witnesses;
  params.options.max_swaps = max_swaps;
  if (!tiebreak.empty()) {
    const Profile t = profile_arg(tiebreak);
    if (t.voters() != 1) throw UsageError("--tiebreak takes a single order such as abc");
    for (LinearOrder o : kOrders) {
      if (t.count(o) == 1) params.tiebreak = o;
    }
  }
  if (!of.empty()) params.upper = rule_arg(of);
  if (!p.empty()) params.p = profile_arg(p);
  if (!p2.empty()) params.p2 = p2 == "empty" ? Profile() : profile_arg(p2);
  if (axiom == AxiomId::resolute_participation && !params.tiebreak) throw UsageError("--tiebreak is required");
  if (axiom == AxiomId::refinement && !params.upper) throw UsageError("--of is required");
  if (axiom == AxiomId::continuity_probe && (!params.p || !params.p2)) throw UsageError("--p and --p2 are required");
  if (bound < 1) throw UsageError("--bound must be positive");
  const AxiomReport report = check_axiom(rule, axiom, bound, params);
  out << report.to_text();
  return report.holds() ? kExitOk : kExitCounterexample;
}

int cmd_figure4(const std::string& rules_text, Count max_n, Count min_n, bool exclude_fully_tied, bool allow_large,
                int workers, std::ostream& out) {
  if (max_n < 4 || max_n % 2 != 0) throw UsageError("--max-n must be even and at least 4");
  if (min_n < 4 || min_n % 2 != 0 || min_n > max_n) throw UsageError("--min-n must be even, at least 4, at most --max-n");
  if (max_n > 60 && !allow_large) throw UsageError("--max-n above 60 needs --allow-large");
  std::vector<Rule> rules;
  for (const std::string& r : split_list(rules_text)) rules.push_back(rule_arg(r));
  if (rules.empty()) throw UsageError("--rules is empty");
  out << kFrequencyCsvHeader << "\n";
  for (const Rule& r : rules) {
    for (Count n = min_n; n <= max_n; n += 2) {
      FrequencyRow row = irresoluteness(r, n, workers);
      if (exclude_fully_tied) row = row.excluding_fully_tied();
      out << row.csv() << "\n";
      out.flush();
    }
  }
  return kExitOk;
}

int cmd_satgen(Count bound, bool neutral, const std::string& path, bool run_solver, std::ostream& out,
               std::ostream& err) {
  if (bound < 2) throw UsageError("--bound must be at least 2");
  const CnfInstance inst = build_instance(bound, {neutral});
  if (path.empty() || path == "-") {
    emit_dimacs(inst, out);
  } else {
    emit_dimacs(inst, path);
    err << "wrote " << path << ": " << inst.num_vars() << " variables, " << inst.num_clauses() << " clauses\n";
  }
  if (!run_solver) return kExitOk;
  const SolveResult r = solve(inst.formula());
  err << "solver: " << to_string(r.status) << " (" << r.decisions << " decisions, " << r.conflicts
      << " conflicts)\n";
  return r.status == SatStatus::unsat ? kExitCounterexample : kExitOk;
}

int cmd_replay(const std::string& id, std::ostream& out) {
  ProofReport report;
  try {
    report = proof_replay(id);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  out << report.to_text();
  return report.ok() ? kExitOk : kExitCounterexample;
}

ProfilePredicate predicate_arg(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  const std::string tail = colon == std::string::npos ? "" : spec.substr(colon + 1);
  auto scoring = [](DominanceMode mode) {
    return [mode](const Profile& p) {
      const auto cw = condorcet_winner(margins(p));
      if (!cw) return false;
      for (Candidate y : kCandidates) {
        if (y != *cw && dominates_all_scoring(p, y, mode)) return true;
      }
      return false;
    };
  };
  if (head == "scoring-strict" && tail.empty()) return scoring(DominanceMode::strict);
  if (head == "scoring-weak" && tail.empty()) return scoring(DominanceMode::weak);
  if (head == "no-condorcet-winner" && tail.empty()) {
    return [](const Profile& p) { return !condorcet_winner(margins(p)).has_value(); };
  }
  if (head == "irresolute" && !tail.empty()) {
    const Rule r = rule_arg(tail);
    return [r](const Profile& p) { return evaluate(r, p).size() >= 2; };
  }
  if (head == "homogeneity" && !tail.empty()) {
    const Rule r = rule_arg(tail);
    return [r](const Profile& p) { return evaluate(r, p) != evaluate(r, t_fold(p, 2)); };
  }
  if (head == "differ" && !tail.empty()) {
    const auto names = split_list(tail);
    if (names.size() != 2) throw UsageError("differ takes two rules: differ:R1,R2");
    const Rule r1 = rule_arg(names[0]), r2 = rule_arg(names[1]);
    return [r1, r2](const Profile& p) { return evaluate(r1, p) != evaluate(r2, p); };
  }
  throw UsageError("unknown predicate '" + spec +
                   "' (scoring-strict, scoring-weak, no-condorcet-winner, irresolute:R, homogeneity:R, differ:R1,R2)");
}

int cmd_search(const std::string& spec, Count min_n, Count max_n, bool all, int workers, std::ostream& out) {
  if (min_n < 1 || max_n < min_n) throw UsageError("need 1 <= --min-n <= --max-n");
  const ProfilePredicate pred = predicate_arg(spec);
  const auto found = search(pred, min_n, max_n, all ? SearchMode::all : SearchMode::first, workers);
  for (const Profile& p : found) out << format_profile(p) << "\n";
  return found.empty() ? kExitOk : kExitCounterexample;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Three-candidate Condorcet extensions: rules, axioms, enumeration, CNF encodings"};
  app.name("condorcet3");
  app.require_subcommand(1);
  int workers = 0;
  app.add_option("--workers", workers, "Worker threads (default: CONDORCET3_WORKERS or all cores)");

  std::string rule_list;
  for (RuleId id : all_rule_ids()) rule_list += (rule_list.empty() ? "" : ", ") + rule_name(id);

  auto* winners = app.add_subcommand("winners", "Evaluate rules on a profile");
  std::string w_profile;
  std::vector<std::string> w_rules;
  bool w_all = false;
  winners->add_option("profile", w_profile, "Profile such as 3abc+1bca+4cab")->required();
  winners->add_option("--rule", w_rules, "Rule (repeatable): " + rule_list);
  winners->add_flag("--all", w_all, "Every implemented rule");

  auto* table = app.add_subcommand("table", "Ordinal table evaluated on the linked profiles (CSV)");
  bool t_check = false;
  table->add_flag("--check", t_check, "Compare against the stored table; exit 1 on mismatch");

  auto* verify = app.add_subcommand("verify", "Check an axiom exhaustively up to a voter bound");
  std::string v_rule, v_axiom, v_tiebreak, v_of, v_p, v_p2;
  Count v_bound = 0;
  std::size_t v_witnesses = 10;
  int v_swaps = 1;
  verify->add_option("--rule", v_rule, "One of: " + rule_list)->required();
  std::string axiom_list;
  for (AxiomId id : all_axioms()) axiom_list += (axiom_list.empty() ? "" : ", ") + axiom_name(id);
  verify->add_option("--axiom", v_axiom, "One of: " + axiom_list)->required();
  verify->add_option("--bound", v_bound, "Maximum voters (horizon for continuity_probe)")->required();
  verify->add_option("--tiebreak", v_tiebreak, "Tie-breaking order for resolute_participation");
  verify->add_option("--of", v_of, "Coarser rule for refinement");
  verify->add_option("--p", v_p, "Base profile for continuity_probe");
  verify->add_option("--p2", v_p2, "Added profile for continuity_probe ('empty' allowed)");
  verify->add_option("--max-witnesses", v_witnesses, "Witnesses to print");
  verify->add_option("--max-swaps", v_swaps, "Voters improving x over y at once (responsiveness)");

  auto* figure4 = app.add_subcommand("figure4", "Exact irresoluteness fractions (CSV)");
  std::string f_rules;
  Count f_max = 0, f_min = 4;
  bool f_exclude = false, f_large = false;
  figure4->add_option("--rules", f_rules, "Comma-separated rules")->required();
  figure4->add_option("--max-n", f_max, "Largest even n")->required();
  figure4->add_option("--min-n", f_min, "Smallest even n");
  figure4->add_flag("--exclude-fully-tied", f_exclude, "Do not count profiles whose margins are all zero");
  figure4->add_flag("--allow-large", f_large, "Permit --max-n above 60");

  auto* satgen = app.add_subcommand("satgen", "Emit the reinforcement CNF instance (DIMACS)");
  Count s_bound = 0;
  bool s_neutral = false, s_solve = false;
  std::string s_out;
  satgen->add_option("--bound", s_bound)->required();
  satgen->add_flag("--neutral", s_neutral, "Alias variables across candidate relabellings");
  satgen->add_option("--out", s_out, "Output file ('-' or omitted: standard output)");
  satgen->add_flag("--solve", s_solve, "Run the built-in solver; exit 1 when UNSAT");

  auto* replay = app.add_subcommand("replay", "Replay an impossibility proof (4.1, 4.3, 4.5)");
  std::string r_id;
  replay->add_option("id", r_id)->required();

  auto* searchc = app.add_subcommand("search", "Enumerate profiles satisfying a predicate");
  std::string q_pred;
  Count q_min = 1, q_max = 0;
  bool q_all = false;
  searchc->add_option("--predicate", q_pred)->required();
  searchc->add_option("--min-n", q_min);
  searchc->add_option("--max-n", q_max)->required();
  searchc->add_flag("--all", q_all, "Report every match instead of the first");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*winners) return cmd_winners(w_profile, w_rules, w_all, out);
    if (*table) return cmd_table(t_check, out, err);
    if (*verify) {
      return cmd_verify(v_rule, v_axiom, v_bound, v_tiebreak, v_of, v_p, v_p2, v_witnesses, v_swaps, out);
    }
    if (*figure4) return cmd_figure4(f_rules, f_max, f_min, f_exclude, f_large, workers, out);
    if (*satgen) return cmd_satgen(s_bound, s_neutral, s_out, s_solve, out, err);
    if (*replay) return cmd_replay(r_id, out);
    if (*searchc) return cmd_search(q_pred, q_min, q_max, q_all, workers, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace condorcet3::cli

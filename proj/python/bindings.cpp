#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "condorcet3/axioms.hpp"
#include "condorcet3/enumeration.hpp"
#include "condorcet3/satgen.hpp"

namespace py = pybind11;
using namespace condorcet3;

namespace {

std::string choice_text(const ChoiceSet& s) {
  std::string out;
  for (Candidate c : s.set().members()) out += to_char(c);
  return out;
}

LinearOrder order_arg(const std::string& text) {
  const Profile p = parse_profile(text);
  if (p.voters() != 1) throw std::invalid_argument("expected a single order such as abc");
  for (LinearOrder o : kOrders) {
    if (p.count(o) == 1) return o;
  }
  throw std::logic_error("unreachable");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Three-candidate voting rules and axiom checks";

  py::register_exception<BoundExceeded>(m, "BoundExceeded", PyExc_ValueError);

  py::class_<Profile>(m, "Profile")
      .def(py::init([](const std::string& text) { return parse_profile(text); }), py::arg("text"))
      .def_property_readonly("counts", &Profile::counts)
      .def_property_readonly("voters", &Profile::voters)
      .def("__add__", [](const Profile& a, const Profile& b) { return a + b; })
      .def("__eq__", [](const Profile& a, const Profile& b) { return a == b; })
      .def("__hash__", [](const Profile& p) { return py::hash(py::cast(p.counts())); })
      .def("__str__", &format_profile)
      .def("__repr__", [](const Profile& p) { return "Profile('" + format_profile(p) + "')"; })
      .def("fold", &t_fold, py::arg("t"));

  m.def("rule_names", [] {
    std::vector<std::string> names;
    for (RuleId id : all_rule_ids()) names.push_back(rule_name(id));
    return names;
  });
  m.def("axiom_names", [] {
    std::vector<std::string> names;
    for (AxiomId id : all_axioms()) names.push_back(axiom_name(id));
    return names;
  });

  m.def(
      "winners",
      [](const std::string& rule, const Profile& p) { return choice_text(evaluate(Rule::parse(rule), p)); },
      py::arg("rule"), py::arg("profile"), "Choice set as a string of candidates, e.g. 'ac'.");
  m.def(
      "margins",
      [](const Profile& p) {
        const MarginGraph g = margins(p);
        return py::make_tuple(g.m(Candidate::a, Candidate::b), g.m(Candidate::a, Candidate::c),
                              g.m(Candidate::b, Candidate::c));
      },
      py::arg("profile"), "(m_ab, m_ac, m_bc)");
  m.def(
      "condorcet_winner",
      [](const Profile& p) -> std::optional<std::string> {
        const auto w = condorcet_winner(margins(p));
        if (!w) return std::nullopt;
        return std::string(1, to_char(*w));
      },
      py::arg("profile"));
  m.def(
      "mcgarvey",
      [](Count ab, Count ac, Count bc) { return mcgarvey(MarginGraph(ab, ac, bc)); }, py::arg("m_ab"),
      py::arg("m_ac"), py::arg("m_bc"));

  m.def(
      "check_axiom",
      [](const std::string& rule, const std::string& axiom, Count bound, std::optional<std::string> tiebreak,
         std::optional<std::string> of, std::optional<Profile> p, std::optional<Profile> p2, std::size_t max_witnesses,
         int workers) {
        AxiomParams params;
        if (tiebreak) params.tiebreak = order_arg(*tiebreak);
        if (of) params.upper = Rule::parse(*of);
        params.p = p;
        params.p2 = p2;
        params.options.max_witnesses = max_witnesses;
        params.options.workers = workers;
        const Rule parsed = Rule::parse(rule);
        const AxiomId id = parse_axiom(axiom);
        AxiomReport r;
        {
          py::gil_scoped_release release;
          r = check_axiom(parsed, id, bound, params);
        }
        std::vector<std::string> witnesses;
        for (const Witness& w : r.witnesses) witnesses.push_back(w.to_string());
        py::dict out;
        out["holds"] = r.holds();
        out["violations"] = r.violations;
        out["witnesses"] = witnesses;
        out["text"] = r.to_text();
        return out;
      },
      py::arg("rule"), py::arg("axiom"), py::arg("bound"), py::arg("tiebreak") = py::none(),
      py::arg("of") = py::none(), py::arg("p") = py::none(), py::arg("p2") = py::none(),
      py::arg("max_witnesses") = 10, py::arg("workers") = 0);

  m.def(
      "irresoluteness",
      [](const std::string& rule, Count n, bool exclude_fully_tied, int workers) {
        FrequencyRow row = irresoluteness(Rule::parse(rule), n, workers);
        if (exclude_fully_tied) row = row.excluding_fully_tied();
        return py::make_tuple(row.irresolute, row.total);
      },
      py::arg("rule"), py::arg("n"), py::arg("exclude_fully_tied") = false, py::arg("workers") = 0,
      "(irresolute, total) for profiles with n voters.");

  m.def(
      "dimacs",
      [](Count bound, bool neutral) {
        std::ostringstream out;
        emit_dimacs(build_instance(bound, {neutral}), out);
        return out.str();
      },
      py::arg("bound"), py::arg("neutral") = false);
  m.def(
      "check_assignment",
      [](Count bound, const std::string& rule) { return check_assignment(build_instance(bound), Rule::parse(rule)); },
      py::arg("bound"), py::arg("rule"));
  m.def(
      "solve_reinforcement",
      [](Count bound, bool neutral) { return to_string(solve(build_instance(bound, {neutral}).formula()).status); },
      py::arg("bound"), py::arg("neutral") = false, "'SAT', 'UNSAT' or 'UNKNOWN'.");
  m.def(
      "replay",
      [](const std::string& id) {
        const ProofReport r = proof_replay(id);
        return py::make_tuple(r.ok(), r.to_text());
      },
      py::arg("id"));
}

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "hilbdet/betti.hpp"
#include "hilbdet/gradedmod.hpp"
#include "hilbdet/invariants.hpp"
#include "hilbdet/oracle.hpp"

namespace py = pybind11;
using namespace hilbdet;

namespace {

DegreeMatrix make_dm(std::vector<int> b, std::vector<int> a, int n) {
  DegreeMatrix dm{std::move(b), std::move(a), n};
  dm.validate();
  return dm;
}

py::dict hyp_dict(const HypothesisReport& h) {
  py::dict d;
  d["nonempty"] = h.nonempty;
  d["t_gt_2"] = h.t_gt_2;
  d["depth_condition"] = h.depth_condition;
  d["row_condition_strict"] = h.row_condition_strict;
  d["at_condition"] = h.at_condition;
  d["ambient"] = h.ambient;
  d["positive_dim"] = h.positive_dim;
  d["theorem_applies"] = h.theorem_applies();
  return d;
}

py::dict table_dict(const BettiTable& t) {
  py::dict d;
  d["label"] = t.label;
  d["n"] = t.n;
  py::dict terms;
  for (std::size_t k = 0; k < t.terms.size(); ++k)
    terms[py::int_(k)] = t.terms[k];
  d["terms"] = terms;
  return d;
}

} // namespace

PYBIND11_MODULE(_hilbdet, m) {
  m.doc() = "exact invariants of codimension-4 submaximal-minor schemes";

  py::class_<DegreeMatrix>(m, "DegreeMatrix")
      .def(py::init(&make_dm), py::arg("b"), py::arg("a"), py::arg("n") = 5)
      .def_readonly("b", &DegreeMatrix::b)
      .def_readonly("a", &DegreeMatrix::a)
      .def_readonly("n", &DegreeMatrix::n)
      .def_property_readonly("t", &DegreeMatrix::t)
      .def("__repr__", [](const DegreeMatrix& dm) {
        return degree_matrix_to_json(dm);
      });

  m.def("degree_matrix_from_json", &degree_matrix_from_json);
  m.def("is_nonempty", &is_nonempty);
  m.def("det_degree", &det_degree);
  m.def("hb_twists", &hb_twists);
  m.def("theorem_hypotheses",
        [](const DegreeMatrix& dm) { return hyp_dict(theorem_hypotheses(dm)); });

  m.def("hilbert_burch_table",
        [](const DegreeMatrix& dm) { return table_dict(hilbert_burch_table(dm)); });
  m.def("ideal_square_table",
        [](const DegreeMatrix& dm) { return table_dict(ideal_square_table(dm)); });
  m.def("gulliksen_negard_table", [](const DegreeMatrix& dm) {
    return table_dict(gulliksen_negard_table(dm));
  });

  m.def("hilbert_function",
        [](const DegreeMatrix& dm, const std::string& which, int v) {
          BettiTable t = which == "hb"   ? hilbert_burch_table(dm)
                         : which == "sq" ? ideal_square_table(dm)
                                         : gulliksen_negard_table(dm);
          return hilbert_function(t, v);
        },
        py::arg("dm"), py::arg("table"), py::arg("v"));

  m.def("hilbert_polynomial",
        [](const DegreeMatrix& dm, const std::string& which) {
          BettiTable t = which == "hb"   ? hilbert_burch_table(dm)
                         : which == "sq" ? ideal_square_table(dm)
                                         : gulliksen_negard_table(dm);
          return hilbert_polynomial(t).c;
        },
        py::arg("dm"), py::arg("table"),
        "coefficients in the binomial basis: p(v) = sum c[i] * C(v, i)");

  m.def("degree_and_genus", [](const DegreeMatrix& dm) {
    return degree_and_genus(hilbert_polynomial(gulliksen_negard_table(dm)));
  });

  m.def("eta", &eta);
  m.def("epsilon", &epsilon);
  m.def("dim_w_formula", [](const DegreeMatrix& dm) {
    DimWResult w = dim_w_formula(dm);
    py::dict d;
    d["value"] = w.value;
    d["hypotheses"] = hyp_dict(w.hypotheses);
    return d;
  });

  m.def("oracle_check",
        [](const DegreeMatrix& dm, fp_t prime, std::uint64_t seed, int slack) {
          PrimeField F(prime);
          DegreeBasisIndex idx(dm.n_vars());
          CertifiedInstance inst = make_certified_instance(dm, F, seed, idx, slack);
          py::dict d;
          d["seed_used"] = inst.seed_used;
          d["attempts"] = inst.attempts;
          py::list checks;
          for (auto& c : inst.checks) {
            py::dict jc;
            jc["subject"] = c.subject;
            jc["agree"] = c.agree;
            py::list pairs;
            for (auto& [v, pred, obs] : c.pairs)
              pairs.append(py::make_tuple(v, pred, obs));
            jc["pairs"] = pairs;
            checks.append(jc);
          }
          d["checks"] = checks;
          return d;
        },
        py::arg("dm"), py::arg("prime") = PrimeField::kDefaultPrime,
        py::arg("seed") = 1, py::arg("slack") = 3);

  m.def("invariant_report",
        [](const DegreeMatrix& dm, fp_t prime, std::uint64_t seed, int seeds,
           int bound, int window, bool with_h2) {
          PrimeField F(prime);
          SyzygyOptions opt{bound > 0 ? bound : 2 * det_degree(dm) + 4, window};
          InvariantReport r = invariant_report(dm, F, seed, seeds, opt, with_h2);
          // round-trip through the canonical JSON so python sees one schema
          py::module json = py::module::import("json");
          return json.attr("loads")(invariant_report_to_json(r));
        },
        py::arg("dm"), py::arg("prime") = PrimeField::kDefaultPrime,
        py::arg("seed") = 1, py::arg("seeds") = 3, py::arg("bound") = 0,
        py::arg("window") = 3, py::arg("with_h2") = false);
}

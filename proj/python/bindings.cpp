#include "eqslice/embeddings.hpp"
#include "eqslice/knot_table.hpp"
#include "eqslice/lens.hpp"
#include "eqslice/obstructions.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

namespace py = pybind11;
using namespace eqslice;

namespace {

py::object int_to_py(const Int& x) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(x.str().c_str(), nullptr, 10));
}

Int py_to_int(py::handle h) { return Int(py::str(h).cast<std::string>()); }

py::list vec_to_py(const std::vector<Int>& v) {
  py::list out;
  for (const Int& x : v) out.append(int_to_py(x));
  return out;
}

std::vector<Int> py_to_vec(py::handle seq) {
  std::vector<Int> out;
  for (py::handle item : seq) out.push_back(py_to_int(item));
  return out;
}

py::list matrix_to_py(const IntMatrix& m) {
  py::list out;
  for (std::size_t i = 0; i < m.rows(); ++i) out.append(vec_to_py(m.row(i)));
  return out;
}

IntMatrix py_to_matrix(py::handle rows) {
  std::vector<std::vector<Int>> data;
  for (py::handle row : rows) data.push_back(py_to_vec(row));
  std::size_t r = data.size(), c = r == 0 ? 0 : data[0].size();
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (data[i].size() != c) throw py::value_error("ragged matrix");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = data[i][j];
  }
  return m;
}

py::object rat_to_fraction(const Rat& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(int_to_py(boost::multiprecision::numerator(r)),
                  int_to_py(boost::multiprecision::denominator(r)));
}

Rat fraction_to_rat(py::handle h) {
  Int num = py_to_int(h.attr("numerator"));
  Int den = py_to_int(h.attr("denominator"));
  return Rat(num, den);
}

Side side_from_string(const std::string& s) {
  if (s == "plus") return Side::plus;
  if (s == "minus") return Side::minus;
  throw py::value_error("side must be 'plus' or 'minus'");
}

py::dict verdict_to_py(const Verdict& v) {
  py::dict out;
  out["verdict"] = std::string(to_string(v.level));
  py::dict det;
  det["det"] = int_to_py(v.det_stage.det);
  det["sum_of_two_squares"] = v.det_stage.det_is_two_squares;
  det["perfect_square"] = v.det_stage.det_is_square;
  if (v.det_stage.det_is_square) det["root"] = int_to_py(v.det_stage.root);
  if (v.det_stage.det_is_square) det["root_sum_of_two_squares"] = v.det_stage.root_is_two_squares;
  out["determinant_stage"] = det;
  out["embeddings_enumerated"] = v.embeddings_enumerated;
  py::list embs;
  for (const auto& e : v.embeddings) {
    py::dict je;
    je["matrix"] = matrix_to_py(e.matrix);
    je["metabolizer_size"] = e.metabolizer_size;
    je["invariant"] = e.invariant;
    py::list viol;
    for (const auto& w : e.violations) viol.append(vec_to_py(w));
    je["violations"] = viol;
    embs.append(je);
  }
  out["embeddings"] = embs;
  return out;
}

}  // namespace

PYBIND11_MODULE(_eqslice, m) {
  m.doc() = "Exact obstructions to equivariant sliceness of strongly negative amphichiral "
            "alternating knots, plus lens-space correction terms";

  py::class_<CheckerboardPresentation>(m, "Presentation")
      .def_readonly("name", &CheckerboardPresentation::name)
      .def_readonly("n", &CheckerboardPresentation::n)
      .def_readonly("edges_plus", &CheckerboardPresentation::edges_plus)
      .def_readonly("edges_minus", &CheckerboardPresentation::edges_minus)
      .def_readonly("metadata", &CheckerboardPresentation::metadata)
      .def("__repr__", [](const CheckerboardPresentation& p) {
        return "<Presentation " + p.name + " n=" + std::to_string(p.n) + ">";
      });

  m.def("parse_presentation", &parse_presentation, py::arg("text"));
  m.def("load_presentation", &load_presentation, py::arg("path"));

  m.def("validate", [](const CheckerboardPresentation& p) {
    ValidationReport r = validate(p);
    py::list checks;
    for (const auto& c : r.checks) {
      py::dict jc;
      jc["name"] = c.name;
      jc["passed"] = c.passed;
      jc["detail"] = c.detail;
      checks.append(jc);
    }
    py::dict out;
    out["passed"] = r.passed();
    out["checks"] = checks;
    return out;
  });

  m.def("full_incidence", [](const CheckerboardPresentation& p, const std::string& side) {
    return matrix_to_py(full_incidence(p, side_from_string(side)));
  }, py::arg("presentation"), py::arg("side"));
  m.def("reduced_incidence", [](const CheckerboardPresentation& p, const std::string& side) {
    return matrix_to_py(reduced_incidence(p, side_from_string(side)));
  }, py::arg("presentation"), py::arg("side"));
  m.def("goeritz", [](const CheckerboardPresentation& p, const std::string& side) {
    return matrix_to_py(goeritz(p, side_from_string(side)).matrix);
  }, py::arg("presentation"), py::arg("side"));

  m.def("determinant", [](py::handle m_) { return int_to_py(determinant(py_to_matrix(m_))); });
  m.def("is_positive_definite",
        [](py::handle m_) { return is_positive_definite(py_to_matrix(m_)); });
  m.def("smith_normal_form", [](py::handle m_) {
    auto snf = smith_normal_form(py_to_matrix(m_));
    return py::make_tuple(matrix_to_py(snf.u), matrix_to_py(snf.d), matrix_to_py(snf.v));
  });
  m.def("solve_integer", [](py::handle m_, py::handle b) -> py::object {
    auto x = solve_integer(py_to_matrix(m_), py_to_vec(b));
    if (!x) return py::none();
    return vec_to_py(*x);
  });

  py::class_<SpincLattice>(m, "SpincLattice")
      .def(py::init([](py::handle q) { return SpincLattice(py_to_matrix(q)); }))
      .def_property_readonly("rank", &SpincLattice::rank)
      .def_property_readonly("class_count",
                             [](const SpincLattice& l) { return int_to_py(l.class_count()); })
      .def("is_characteristic",
           [](const SpincLattice& l, py::handle u) { return l.is_characteristic(py_to_vec(u)); })
      .def("canonicalize",
           [](const SpincLattice& l, py::handle u) { return vec_to_py(l.canonicalize(py_to_vec(u))); })
      .def("same_class", [](const SpincLattice& l, py::handle u, py::handle v) {
        return l.same_class(py_to_vec(u), py_to_vec(v));
      })
      .def("enumerate_classes", [](const SpincLattice& l) {
        py::list out;
        for (const auto& c : l.enumerate_classes()) out.append(vec_to_py(c));
        return out;
      });

  m.def("is_embedding", [](py::handle a, py::handle q) {
    return is_embedding(py_to_matrix(a), py_to_matrix(q));
  });
  m.def("canonical_signed_perm_form",
        [](py::handle a) { return matrix_to_py(canonical_signed_perm_form(py_to_matrix(a))); });
  m.def("enumerate_embeddings", [](py::handle q, int threads) {
    py::list out;
    for (const auto& a : enumerate_embeddings(py_to_matrix(q), threads)) out.append(matrix_to_py(a));
    return out;
  }, py::arg("q"), py::arg("threads") = 1);

  py::class_<SigmaAction>(m, "SigmaAction")
      .def(py::init([](py::handle jplus, py::handle jminus) {
        return SigmaAction(py_to_matrix(jplus), py_to_matrix(jminus));
      }))
      .def_static("from_presentation", &SigmaAction::from_presentation)
      .def_property_readonly("lattice", &SigmaAction::lattice,
                             py::return_value_policy::reference_internal)
      .def("apply",
           [](const SigmaAction& a, py::handle u) { return vec_to_py(a.apply(py_to_vec(u))); })
      .def("odd_lift",
           [](const SigmaAction& a, py::handle u) { return vec_to_py(a.odd_lift(py_to_vec(u))); });

  m.def("metabolizer_spinc", [](py::handle a, const SpincLattice& lattice) {
    py::list out;
    for (const auto& c : metabolizer_spinc(py_to_matrix(a), lattice)) out.append(vec_to_py(c));
    return out;
  });
  m.def("check_invariance", [](py::handle classes, const SigmaAction& act) {
    ClassSet s;
    for (py::handle c : classes) s.insert(act.lattice().canonicalize(py_to_vec(c)));
    InvarianceResult r = check_invariance(s, act);
    py::list viol;
    for (const auto& w : r.violations) viol.append(vec_to_py(w));
    return py::make_tuple(r.invariant, viol);
  });
  m.def("sigma_orbit_structure", [](const SigmaAction& act) {
    OrbitStructure o = sigma_orbit_structure(act);
    py::dict out;
    out["bijection"] = o.bijection;
    out["square_is_negation"] = o.square_is_negation;
    out["fixed_classes"] = o.fixed_classes;
    py::dict hist;
    for (const auto& [size, count] : o.orbit_size_counts) hist[py::int_(size)] = count;
    out["orbit_size_counts"] = hist;
    if (o.fixed_classes == 1) out["fixed_class"] = vec_to_py(o.fixed_class_rep);
    return out;
  });

  m.def("sum_of_two_squares", [](py::handle v) { return sum_of_two_squares(py_to_int(v)); });
  m.def("det_obstruction", [](py::handle d) { return verdict_to_py(det_obstruction(py_to_int(d))); });
  m.def("full_pipeline", [](const CheckerboardPresentation& p, int threads) {
    return verdict_to_py(full_pipeline(p, threads));
  }, py::arg("presentation"), py::arg("threads") = 1);

  m.def("lens_d_invariants", [](long long p, long long q) {
    py::list out;
    for (const Rat& r : lens_d_invariants(make_lens(p, q)).values) out.append(rat_to_fraction(r));
    return out;
  }, py::arg("p"), py::arg("q"));
  m.def("orbit_structure_check", [](py::handle values) {
    std::vector<Rat> multiset;
    for (py::handle v : values) multiset.push_back(fraction_to_rat(v));
    OrbitCheck c = orbit_structure_check(multiset);
    return py::make_tuple(c.ok, c.reason);
  });
  m.def("qsq_condition", &qsq_condition, py::arg("p"), py::arg("q"));
  m.def("conjecture_scan", [](long long p_max, int threads) {
    ScanReport r = conjecture_scan(p_max, threads);
    py::dict out;
    out["p_max"] = r.p_max;
    out["pairs"] = r.rows.size();
    out["disagreements"] = r.disagreements.size();
    out["forward_violations"] = r.forward_violations.size();
    out["orientation_sanity_ok"] = r.orientation_sanity_ok;
    py::list rows;
    for (const auto& row : r.rows) {
      py::dict jr;
      jr["p"] = row.p;
      jr["q"] = row.q;
      jr["partition_ok"] = row.partition_ok;
      jr["qsq_ok"] = row.qsq_ok;
      rows.append(jr);
    }
    out["rows"] = rows;
    return out;
  }, py::arg("p_max"), py::arg("threads") = 1);

  m.def("knot_table", []() {
    py::list out;
    for (const auto& row : run_knot_table(builtin_knot_table())) {
      py::dict jr;
      jr["name"] = row.record.name;
      jr["det"] = int_to_py(row.record.determinant);
      jr["category"] = row.record.category;
      jr["det_stage"] = std::string(to_string(row.det_stage));
      jr["matches_category"] = row.matches_category;
      out.append(jr);
    }
    return out;
  });
}

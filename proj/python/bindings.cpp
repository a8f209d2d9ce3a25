#include "spinproj/opcalc.hpp"
#include "spinproj/poly.hpp"
#include "spinproj/render.hpp"
#include "spinproj/serialize.hpp"
#include "spinproj/spin.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace spinproj;

// BigRational <-> fractions.Fraction. Loading also accepts int and "p/q" strings.
namespace pybind11::detail {

template <>
struct type_caster<BigRational> {
  PYBIND11_TYPE_CASTER(BigRational, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    try {
      if (py::isinstance<py::str>(src)) {
        value = BigRational::parse(src.cast<std::string>());
        return true;
      }
      if (py::isinstance<py::bool_>(src)) return false;
      if (py::isinstance<py::int_>(src)) {
        value = BigRational(parse_bigint(py::str(src).cast<std::string>()));
        return true;
      }
      const auto fraction = py::module_::import("fractions").attr("Fraction");
      if (py::isinstance(src, fraction)) {
        value = BigRational(parse_bigint(py::str(src.attr("numerator")).cast<std::string>()),
                            parse_bigint(py::str(src.attr("denominator")).cast<std::string>()));
        return true;
      }
    } catch (const std::exception&) {
      return false;
    }
    return false;
  }

  static handle cast(const BigRational& r, return_value_policy, handle) {
    const auto fraction = py::module_::import("fractions").attr("Fraction");
    const py::int_ num(py::reinterpret_steal<py::object>(PyLong_FromString(r.numerator().get_str().c_str(), nullptr, 10)));
    const py::int_ den(py::reinterpret_steal<py::object>(PyLong_FromString(r.denominator().get_str().c_str(), nullptr, 10)));
    return fraction(num, den).release();
  }
};

}  // namespace pybind11::detail

namespace {

using Coeffs = std::vector<BigRational>;

py::int_ to_pyint(const BigInt& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

Coeffs coeffs(const Polynomial& p) { return {p.coefficients().begin(), p.coefficients().end()}; }

MagneticQuantum magnetic(long two_s, long two_m) {
  return MagneticQuantum(SpinQuantum::from_twice(two_s), HalfInt::from_twice(BigInt(two_m)));
}

py::dict report_dict(const VerificationReport& report) {
  py::list checks;
  for (const auto& c : report.checks) {
    py::dict d;
    d["name"] = c.name;
    d["pass"] = c.pass;
    d["witness"] = c.witness ? py::object(py::str(*c.witness)) : py::none();
    checks.append(d);
  }
  py::dict out;
  out["twoS"] = report.spin.twice();
  out["checks"] = checks;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact spin projection operators and Lagrange interpolation over the rationals";

  py::register_exception<DivisionByZero>(m, "DivisionByZero", PyExc_ZeroDivisionError);

  m.def("factorial", [](long k) { return to_pyint(factorial(k)); }, py::arg("k"));
  m.def("spin_range", [](long two_s) {
    Coeffs out;
    for (const auto& h : spin_range(HalfInt::from_twice(BigInt(two_s)))) out.push_back(h.to_rational());
    return out;
  }, py::arg("two_s"), "Eigenvalues m = S, S-1, ..., -S as Fractions.");

  m.def("node_polynomial", [](const Coeffs& nodes) { return coeffs(node_polynomial(NodeSet(nodes))); },
        py::arg("nodes"));
  m.def("lagrange_basis", [](const Coeffs& nodes, std::size_t k) { return coeffs(lagrange_basis(NodeSet(nodes), k)); },
        py::arg("nodes"), py::arg("k"));
  m.def("interpolate", [](const Coeffs& nodes, const Coeffs& values) {
    return coeffs(interpolate(NodeSet(nodes), values));
  }, py::arg("nodes"), py::arg("values"), "Ascending coefficients of the Lagrange interpolant.");
  m.def("poly_divmod", [](const Coeffs& p, const Coeffs& d) {
    auto [q, r] = divmod(Polynomial(p), Polynomial(d));
    return py::make_tuple(coeffs(q), coeffs(r));
  }, py::arg("p"), py::arg("d"));
  m.def("poly_eval", [](const Coeffs& p, const BigRational& x) { return Polynomial(p)(x); }, py::arg("p"), py::arg("x"));

  m.def("alpha", [](long two_s) { return alpha(SpinQuantum::from_twice(two_s)); }, py::arg("two_s"));
  m.def("sz_operator", [](long two_s) {
    const auto op = sz_operator(SpinQuantum::from_twice(two_s));
    return Coeffs(op.diagonal().begin(), op.diagonal().end());
  }, py::arg("two_s"));
  m.def("projector_coefficient", [](long two_s, long two_m) { return projector_coefficient(magnetic(two_s, two_m)); },
        py::arg("two_s"), py::arg("two_m"));
  m.def("projector_polynomial", [](long two_s, long two_m) { return coeffs(projector_polynomial(magnetic(two_s, two_m))); },
        py::arg("two_s"), py::arg("two_m"));
  m.def("projector_latex", [](long two_s, long two_m) {
    return render_factored(projector_factored(magnetic(two_s, two_m)), sz_symbol(Style::Latex), Style::Latex);
  }, py::arg("two_s"), py::arg("two_m"));
  m.def("operator_function", [](long two_s, const Coeffs& values) {
    return coeffs(operator_function(SpinQuantum::from_twice(two_s), values));
  }, py::arg("two_s"), py::arg("values"), "Values are listed m-descending.");
  m.def("reduce_power", [](long two_s, unsigned long n) { return coeffs(reduce_power(SpinQuantum::from_twice(two_s), n)); },
        py::arg("two_s"), py::arg("n"));
  m.def("eval_on_diagonal", [](const Coeffs& p, long two_s, const Coeffs& diag) {
    const auto op = eval_on_diagonal(Polynomial(p), DiagonalOperator(SpinQuantum::from_twice(two_s), diag));
    return Coeffs(op.diagonal().begin(), op.diagonal().end());
  }, py::arg("p"), py::arg("two_s"), py::arg("diag"));
  m.def("eval_on_matrix", [](const Coeffs& p, const std::vector<Coeffs>& rows) {
    if (rows.empty()) throw std::invalid_argument("empty matrix");
    std::vector<BigRational> entries;
    for (const auto& r : rows) {
      if (r.size() != rows.front().size()) throw std::invalid_argument("ragged matrix");
      entries.insert(entries.end(), r.begin(), r.end());
    }
    const auto out = eval_on_matrix(Polynomial(p), DenseMatrix(rows.size(), rows.front().size(), std::move(entries)));
    std::vector<Coeffs> result(out.rows());
    for (std::size_t i = 0; i < out.rows(); ++i)
      for (std::size_t j = 0; j < out.cols(); ++j) result[i].push_back(out(i, j));
    return result;
  }, py::arg("p"), py::arg("matrix"));
  m.def("run_suite", [](long two_s) { return report_dict(run_suite(SpinQuantum::from_twice(two_s))); },
        py::arg("two_s"));
  m.def("report_json", [](long two_s) { return to_json(run_suite(SpinQuantum::from_twice(two_s))).dump(); },
        py::arg("two_s"));
}

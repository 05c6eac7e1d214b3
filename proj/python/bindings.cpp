// Python bindings for the exact Wronskian Appell polynomial library.
//
// Rationals cross the boundary as fractions.Fraction, big integers as Python
// ints, polynomials as coefficient lists (lowest degree first), and
// partitions as a bound class constructible from a list of parts.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "wappell/appell.hpp"
#include "wappell/cyclotomic.hpp"
#include "wappell/error.hpp"
#include "wappell/partition.hpp"
#include "wappell/plancherel.hpp"
#include "wappell/polynomial.hpp"
#include "wappell/symfunc.hpp"
#include "wappell/verify.hpp"
#include "wappell/wapoly.hpp"

namespace py = pybind11;
using namespace wappell;

namespace {

py::object big_int(const Int& value) {
  return py::module_::import("builtins").attr("int")(value.get_str());
}

py::object fraction(const Rat& value) {
  static py::object ctor = py::module_::import("fractions").attr("Fraction");
  return ctor(rat_to_string(value));
}

Rat rat_from_py(const py::object& value) {
  return parse_rat(py::cast<std::string>(py::str(value)));
}

py::list poly_coeffs(const Poly& p) {
  py::list out;
  const int top = p.degree().value_or(-1);
  for (int i = 0; i <= top; ++i) out.append(fraction(p.coeff(i)));
  return out;
}

Poly poly_from_py(const py::iterable& coeffs) {
  std::vector<Rat> c;
  for (py::handle h : coeffs) {
    c.push_back(rat_from_py(py::reinterpret_borrow<py::object>(h)));
  }
  return Poly(c);
}

py::dict psym_dict(const PSym& f) {
  py::dict out;
  for (const auto& [mu, coeff] : f.terms()) {
    out[py::tuple(py::cast(mu.parts()))] = fraction(coeff);
  }
  return out;
}

py::dict suite_result_dict(const SuiteResult& result) {
  py::dict out;
  out["name"] = result.name;
  out["checked"] = result.checked;
  out["skipped"] = result.skipped;
  out["failures"] = result.failures;
  out["passed"] = result.passed();
  return out;
}

Route route_arg(const std::string& route) { return parse_route(route); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Exact construction and verification of Wronskian Appell polynomials";

  py::register_exception<RouteMismatch>(m, "RouteMismatch", PyExc_ArithmeticError);
  py::register_exception<TheoremViolation>(m, "TheoremViolation",
                                           PyExc_ArithmeticError);
  py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);

  py::class_<Partition>(m, "Partition")
      .def(py::init<>())
      .def(py::init<const std::vector<int>&>(), py::arg("parts"))
      .def_static("parse", &Partition::parse, py::arg("text"))
      .def_property_readonly("parts", &Partition::parts)
      .def("size", &Partition::size)
      .def("length", &Partition::length)
      .def("empty", &Partition::empty)
      .def("contains", &Partition::contains)
      .def("conjugate", [](const Partition& p) { return conjugate(p); })
      .def("__str__", &Partition::to_string)
      .def("__repr__",
           [](const Partition& p) { return "Partition([" +
                 (p.empty() ? std::string() : [&] {
                   std::string s;
                   for (int v : p.parts()) {
                     if (!s.empty()) s += ", ";
                     s += std::to_string(v);
                   }
                   return s;
                 }()) + "])"; })
      .def("__hash__",
           [](const Partition& p) {
             std::size_t h = 1469598103934665603ull;
             for (int v : p.parts()) {
               h ^= static_cast<std::size_t>(v);
               h *= 1099511628211ull;
             }
             return h;
           })
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def(py::self < py::self)
      .def(py::self <= py::self)
      .def(py::self > py::self)
      .def(py::self >= py::self);

  py::class_<RimHook>(m, "RimHook")
      .def_readonly("outer", &RimHook::outer)
      .def_readonly("inner", &RimHook::inner)
      .def_readonly("size", &RimHook::size)
      .def_readonly("height", &RimHook::height)
      .def("__repr__", [](const RimHook& h) {
        return "RimHook(outer=[" + h.outer.to_string() + "], inner=[" +
               h.inner.to_string() + "], size=" + std::to_string(h.size) +
               ", height=" + std::to_string(h.height) + ")";
      });

  m.def("partitions_of", &partitions_of, py::arg("n"));
  m.def("partitions_up_to", &partitions_up_to, py::arg("max_size"));
  m.def("hook_length", &hook_length, py::arg("shape"), py::arg("row"),
        py::arg("col"));
  m.def("hook_product",
        [](const Partition& p) { return big_int(hook_product(p)); });
  m.def("syt_count", [](const Partition& p) { return big_int(syt_count(p)); });
  m.def("skew_syt_count", [](const Partition& outer, const Partition& inner) {
    return big_int(skew_syt_count(outer, inner));
  });
  m.def("degree_vector", &degree_vector);
  m.def("covers_down", &covers_down);
  m.def("covers_up", &covers_up);
  m.def("rim_hooks_down", &rim_hooks_down, py::arg("shape"), py::arg("size"));
  m.def("rim_hooks_up", &rim_hooks_up, py::arg("shape"), py::arg("size"),
        py::arg("max_rows") = -1);
  m.def("is_rim_hook", &is_rim_hook, py::arg("outer"), py::arg("inner"));

  py::class_<AppellSpec>(m, "AppellSpec")
      .def_property_readonly("name", &AppellSpec::name)
      .def("cumulant",
           [](const AppellSpec& s, int k) { return fraction(s.cumulant(k)); })
      .def("moment",
           [](const AppellSpec& s, int k) { return fraction(s.moment(k)); })
      .def("__repr__", [](const AppellSpec& s) {
        return "AppellSpec('" + s.name() + "')";
      });

  m.def("parse_spec", &parse_spec, py::arg("text"),
        "Parse a sequence description such as 'hermite' or 'laguerre:2'");
  m.def("dual", &dual);
  m.def("second_moment_spec", &second_moment_spec);
  m.def("centralize", &centralize);
  m.def("corrupted_for_testing", [](const AppellSpec& spec, int k,
                                    const py::object& delta, int order) {
    return corrupted_for_testing(spec, k, rat_from_py(delta), order);
  });

  m.def("appell_poly", [](const AppellSpec& spec, int n) {
    return poly_coeffs(appell_poly(spec, n));
  });
  m.def(
      "wap",
      [](const AppellSpec& spec, const Partition& lambda,
         const std::string& route) {
        return poly_coeffs(wap(spec, lambda, route_arg(route)));
      },
      py::arg("spec"), py::arg("partition"), py::arg("route") = "cross");
  m.def("poly_str", [](const py::iterable& coeffs) {
    return poly_to_string(poly_from_py(coeffs));
  });
  m.def("poly_latex", [](const py::iterable& coeffs) {
    return poly_to_latex(poly_from_py(coeffs));
  });

  m.def("schur", [](const Partition& lambda) { return psym_dict(schur(lambda)); });
  m.def("augmented_schur_table", [](const Partition& lambda) {
    py::dict out;
    for (const auto& [mu, coeff] : augmented_schur_p_integral(lambda)) {
      out[py::tuple(py::cast(mu.parts()))] = big_int(coeff);
    }
    return out;
  });

  m.def("derivative_identity_check",
        [](const AppellSpec& spec, const Partition& lambda) {
          return derivative_identity_check(spec, lambda);
        });
  m.def("topdown_check", [](const AppellSpec& spec, const Partition& lambda,
                            int k) { return topdown_check(spec, lambda, k); });
  m.def("dual_check", [](const AppellSpec& spec, const Partition& lambda) {
    return dual_check(spec, lambda);
  });
  m.def("integrality_check",
        [](const AppellSpec& spec, const Partition& lambda) {
          return integrality_check(spec, lambda);
        });

  m.def("plancherel_report", [](const AppellSpec& spec, int n) {
    const PlancherelReport report = plancherel_report(spec, n);
    py::dict out;
    out["n"] = report.n;
    out["mean"] = poly_coeffs(report.mean);
    out["second_moment"] = poly_coeffs(report.second_moment);
    out["variance"] = poly_coeffs(report.variance);
    out["variance_degree_bound_ok"] = report.variance_degree_bound_ok;
    return out;
  });

  m.def("suite_names", [] { return suite_names(); });
  m.def(
      "run_suite",
      [](const std::string& name, const AppellSpec& spec, int max_size,
         int k_max) {
        VerifyOptions options;
        options.max_size = max_size;
        options.k_max = k_max;
        return suite_result_dict(run_suite(name, spec, options));
      },
      py::arg("name"), py::arg("spec"), py::arg("max_size") = 6,
      py::arg("k_max") = 4);
  m.def(
      "run_verify",
      [](const std::string& identity, const AppellSpec& spec, int max_size,
         int k_max) {
        VerifyOptions options;
        options.max_size = max_size;
        options.k_max = k_max;
        py::list out;
        for (const SuiteResult& r : run_verify(identity, spec, options)) {
          out.append(suite_result_dict(r));
        }
        return out;
      },
      py::arg("identity"), py::arg("spec"), py::arg("max_size") = 6,
      py::arg("k_max") = 4);
}

#include <cmath>
#include <limits>
#include <sstream>

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bndrot/bounds.hpp"
#include "bndrot/caratheodory.hpp"
#include "bndrot/classes.hpp"
#include "bndrot/cli.hpp"
#include "bndrot/errors.hpp"
#include "bndrot/measures.hpp"
#include "bndrot/series.hpp"
#include "bndrot/verify.hpp"

namespace py = pybind11;
using namespace bndrot;

namespace {

using AtomList = std::vector<std::pair<double, double>>;

py::object to_py(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

// Runs fn without the GIL and converts its JSON result.
template <class F>
py::object released(F&& fn) {
  nlohmann::json j;
  {
    py::gil_scoped_release release;
    j = fn();
  }
  return to_py(j);
}

DiscreteMeasure measure(const AtomList& atoms) {
  std::vector<Atom> a;
  a.reserve(atoms.size());
  for (auto [t, w] : atoms) a.push_back({t, w});
  return DiscreteMeasure(std::move(a));
}

AtomList atoms_of(const DiscreteMeasure& mu) {
  AtomList out;
  for (const auto& a : mu.atoms()) out.emplace_back(a.angle, a.weight);
  return out;
}

DeriveMode derive_mode(const std::string& s) {
  if (s == "d_dz") return DeriveMode::d_dz;
  if (s == "z_d_dz") return DeriveMode::z_d_dz;
  throw InvalidParameter("derive: mode must be 'd_dz' or 'z_d_dz'");
}

CheckOptions options(std::size_t order, double tol, int grid, unsigned workers, int max_atoms) {
  CheckOptions o;
  o.order = order;
  o.tol = tol;
  o.grid = grid;
  o.workers = workers;
  o.max_atoms = max_atoms;
  return o;
}

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

}  // namespace

PYBIND11_MODULE(_bndrot, m) {
  m.doc() = "Truncated series, P_k / R_k / V_k classes, bounds and seeded verification";

  static py::exception<Error> base(m, "Error", PyExc_ValueError);
  static py::exception<DivisionBySmallConstant> e1(m, "DivisionBySmallConstant", base.ptr());
  static py::exception<NonzeroInnerConstant> e2(m, "NonzeroInnerConstant", base.ptr());
  static py::exception<InvalidMeasure> e3(m, "InvalidMeasure", base.ptr());
  static py::exception<InvalidParameter> e4(m, "InvalidParameter", base.ptr());
  static py::exception<NotCaratheodory> e5(m, "NotCaratheodory", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const DivisionBySmallConstant& e) {
      py::set_error(e1, e.what());
    } catch (const NonzeroInnerConstant& e) {
      py::set_error(e2, e.what());
    } catch (const InvalidMeasure& e) {
      py::set_error(e3, e.what());
    } catch (const InvalidParameter& e) {
      py::set_error(e4, e.what());
    } catch (const NotCaratheodory& e) {
      py::set_error(e5, e.what());
    } catch (const Error& e) {
      py::set_error(base, e.what());
    }
  });

  // ---- series
  py::class_<TruncSeries>(m, "TruncSeries")
      .def(py::init([](const std::vector<cplx>& c) { return TruncSeries(c); }), py::arg("coeffs"))
      .def_static("zero", [](std::size_t order) { return TruncSeries(order); })
      .def_static("constant", &TruncSeries::constant, py::arg("c"), py::arg("order"))
      .def_static("identity", &TruncSeries::identity, py::arg("order"))
      .def_property_readonly("order", &TruncSeries::order)
      .def_property_readonly("coeffs",
                             [](const TruncSeries& s) {
                               return std::vector<cplx>(s.coeffs().begin(), s.coeffs().end());
                             })
      .def("__len__", [](const TruncSeries& s) { return s.order() + 1; })
      .def("__getitem__",
           [](const TruncSeries& s, std::size_t n) {
             if (n > s.order()) throw py::index_error("coefficient index out of range");
             return s[n];
           })
      .def("__add__", [](const TruncSeries& a, const TruncSeries& b) { return a + b; })
      .def("__sub__", [](const TruncSeries& a, const TruncSeries& b) { return a - b; })
      .def("__mul__", [](const TruncSeries& a, const TruncSeries& b) { return a * b; })
      .def("__mul__", [](const TruncSeries& a, cplx c) { return c * a; })
      .def("__rmul__", [](const TruncSeries& a, cplx c) { return c * a; })
      .def("__truediv__", [](const TruncSeries& a, const TruncSeries& b) { return div(a, b); })
      .def("__eq__", [](const TruncSeries& a, const TruncSeries& b) { return a == b; })
      .def("__repr__",
           [](const TruncSeries& s) {
             std::ostringstream os;
             os << "TruncSeries(order=" << s.order() << ")";
             return os.str();
           })
      .def("div", [](const TruncSeries& a, const TruncSeries& b, double eps) { return div(a, b, eps); },
           py::arg("other"), py::arg("eps") = kDefaultDivEps)
      .def("derive", [](const TruncSeries& s, const std::string& mode) { return derive(s, derive_mode(mode)); },
           py::arg("mode") = "d_dz")
      .def("integrate", [](const TruncSeries& s) { return integrate(s); })
      .def("exp", [](const TruncSeries& s) { return bndrot::exp(s); })
      .def("log", [](const TruncSeries& s, double eps) { return bndrot::log(s, eps); },
           py::arg("eps") = kDefaultDivEps)
      .def("pow", [](const TruncSeries& s, double a, double eps) { return pow_real(s, a, eps); },
           py::arg("alpha"), py::arg("eps") = kDefaultDivEps)
      .def("compose", [](const TruncSeries& s, const TruncSeries& inner) { return compose(s, inner); })
      .def("evaluate", [](const TruncSeries& s, cplx z) { return evaluate(s, z); }, py::arg("z"))
      .def("tail_estimate", [](const TruncSeries& s, double r) { return tail_estimate(s, r); });

  // ---- measures
  m.def("total_variation", [](const AtomList& a) { return total_variation(measure(a)); },
        py::arg("atoms"));
  m.def("herglotz_series", [](const AtomList& a, std::size_t order) {
    return herglotz_series(measure(a), order);
  }, py::arg("atoms"), py::arg("order"));
  m.def("jordan_decompose", [](const AtomList& a) {
    const auto j = jordan_decompose(measure(a));
    py::dict d;
    d["lambda_pos"] = j.lambda_pos;
    d["mu_pos"] = atoms_of(j.mu_pos);
    d["lambda_neg"] = j.lambda_neg;
    d["mu_neg"] = atoms_of(j.mu_neg);
    return d;
  }, py::arg("atoms"));
  m.def("sample_measure", [](double k, int max_atoms, std::uint64_t seed) {
    return atoms_of(sample_measure(k, max_atoms, seed));
  }, py::arg("k"), py::arg("max_atoms"), py::arg("seed"));

  // ---- caratheodory
  m.def("schwarz_series", [](cplx c, const std::vector<cplx>& zeros, std::size_t order) {
    return schwarz_series(SchwarzFn(c, zeros), order);
  }, py::arg("c"), py::arg("zeros"), py::arg("order"));
  m.def("caratheodory_from_schwarz", [](cplx c, const std::vector<cplx>& zeros, std::size_t order) {
    return caratheodory_from_schwarz(SchwarzFn(c, zeros), order);
  }, py::arg("c"), py::arg("zeros"), py::arg("order"));
  m.def("is_caratheodory", &is_caratheodory, py::arg("p"), py::arg("r_max"), py::arg("grid"),
        py::arg("tol") = kPositivityTol);

  // ---- classes
  py::enum_<Kind>(m, "Kind").value("Pk", Kind::Pk).value("Rk", Kind::Rk).value("Vk", Kind::Vk);
  py::enum_<AlexanderDirection>(m, "AlexanderDirection")
      .value("forward", AlexanderDirection::forward)
      .value("inverse", AlexanderDirection::inverse);
  py::enum_<RotationKind>(m, "RotationKind")
      .value("radius", RotationKind::radius)
      .value("boundary", RotationKind::boundary);

  py::class_<ClassFunction>(m, "ClassFunction")
      .def(py::init([](const TruncSeries& s, double k, Kind kind) { return ClassFunction(s, k, kind); }),
           py::arg("series"), py::arg("k"), py::arg("kind"))
      .def_property_readonly("series", &ClassFunction::series)
      .def_property_readonly("k", &ClassFunction::k)
      .def_property_readonly("kind", &ClassFunction::kind)
      .def("to_dict", [](const ClassFunction& f) { return to_py(f); })
      .def("__repr__", [](const ClassFunction& f) {
        std::ostringstream os;
        os << "ClassFunction(kind=" << to_string(f.kind()) << ", k=" << f.k()
           << ", order=" << f.series().order() << ")";
        return os.str();
      });

  m.def("pk_from_pair", &pk_from_pair, py::arg("p1"), py::arg("p2"), py::arg("k"));
  m.def("rk_from_pk", &rk_from_pk, py::arg("p"), py::arg("order"));
  m.def("pk_from_rk", &pk_from_rk, py::arg("f"));
  m.def("vk_from_pk", &vk_from_pk, py::arg("p"), py::arg("order"));
  m.def("alexander", &alexander, py::arg("f"), py::arg("direction"), py::arg("order"));
  m.def("from_measure", [](const AtomList& a, Kind kind, std::size_t order) {
    return from_measure(measure(a), kind, order);
  }, py::arg("atoms"), py::arg("kind"), py::arg("order"));
  m.def("extremal_fn", &extremal_fn, py::arg("k"), py::arg("order"));
  m.def("extremal_pk", &extremal_pk, py::arg("k"), py::arg("order"));
  m.def("extremal_measure", [](double k) { return atoms_of(extremal_measure(k)); }, py::arg("k"));

  // ---- bounds
  m.def("growth_bounds", [](double k, double r) { return to_py(growth_bounds(k, r)); },
        py::arg("k"), py::arg("r"));
  m.def("distortion_bounds", [](double k, double r) { return to_py(distortion_bounds(k, r)); },
        py::arg("k"), py::arg("r"));
  m.def("re_bounds", [](double k, double r) { return to_py(re_bounds(k, r)); },
        py::arg("k"), py::arg("r"));
  m.def("pk_disk", [](double k, double r) {
    const auto d = pk_disk(k, r);
    return std::pair{d.center, d.radius};
  }, py::arg("k"), py::arg("r"));
  m.def("robertson_disk", [](double k, double r) {
    const auto d = robertson_disk(k, r);
    return std::pair{d.center, d.radius};
  }, py::arg("k"), py::arg("r"));
  m.def("coeff_bound", &coeff_bound, py::arg("k"), py::arg("n"), py::arg("kind"));
  m.def("radius_starlike", &radius_starlike, py::arg("k"));

  // ---- verify
  m.def("rotation_integral", &rotation_integral, py::arg("f"), py::arg("r"), py::arg("M"),
        py::arg("kind") = RotationKind::radius);

  m.def("verify_disk",
        [](double k, int ensemble, std::uint64_t seed, const std::vector<double>& radii,
           std::size_t order, double tol, int grid, unsigned workers, int max_atoms) {
          return released([&] { return nlohmann::json(verify_disk(k, ensemble, seed, radii, options(order, tol, grid, workers, max_atoms))); });
        },
        py::arg("k"), py::arg("ensemble"), py::arg("seed"),
        py::arg("radii") = std::vector<double>{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7},
        py::arg("order") = 0, py::arg("tol") = kNaN, py::arg("grid") = 0, py::arg("workers") = 0,
        py::arg("max_atoms") = 6);
  m.def("verify_growth_distortion",
        [](double k, int ensemble, std::uint64_t seed, const std::vector<double>& radii,
           std::size_t order, double tol, int grid, unsigned workers, int max_atoms) {
          return released([&] { return nlohmann::json(verify_growth_distortion(k, ensemble, seed, radii,
                                              options(order, tol, grid, workers, max_atoms))); });
        },
        py::arg("k"), py::arg("ensemble"), py::arg("seed"),
        py::arg("radii") = std::vector<double>{0.1, 0.2, 0.3, 0.4, 0.5}, py::arg("order") = 0,
        py::arg("tol") = kNaN, py::arg("grid") = 0, py::arg("workers") = 0, py::arg("max_atoms") = 6);
  m.def("verify_coefficients",
        [](double k, int n_max, int ensemble, std::uint64_t seed, std::size_t order, double tol,
           unsigned workers, int max_atoms) {
          return released([&] { return nlohmann::json(verify_coefficients(k, n_max, ensemble, seed,
                                         options(order, tol, 0, workers, max_atoms))); });
        },
        py::arg("k"), py::arg("n_max"), py::arg("ensemble"), py::arg("seed"), py::arg("order") = 0,
        py::arg("tol") = kNaN, py::arg("workers") = 0, py::arg("max_atoms") = 6);
  m.def("verify_rotation",
        [](double k, int ensemble, std::uint64_t seed, double r, int M, std::size_t order, double tol,
           unsigned workers, int max_atoms) {
          return released([&] { return nlohmann::json(verify_rotation(k, ensemble, seed, r, M, options(order, tol, 0, workers, max_atoms))); });
        },
        py::arg("k"), py::arg("ensemble"), py::arg("seed"), py::arg("r") = 0.5, py::arg("M") = 1024,
        py::arg("order") = 0, py::arg("tol") = kNaN, py::arg("workers") = 0, py::arg("max_atoms") = 6);
  m.def("verify_radius_starlike",
        [](double k, int ensemble, std::uint64_t seed, std::size_t order, double tol, int grid,
           unsigned workers, int max_atoms) {
          return released([&] { return nlohmann::json(verify_radius_starlike(k, ensemble, seed,
                                            options(order, tol, grid, workers, max_atoms))); });
        },
        py::arg("k"), py::arg("ensemble"), py::arg("seed"), py::arg("order") = 0,
        py::arg("tol") = kNaN, py::arg("grid") = 0, py::arg("workers") = 0, py::arg("max_atoms") = 6);
  m.def("run_suite",
        [](const std::vector<double>& k_list, int ensemble, std::uint64_t seed, unsigned workers) {
          CheckOptions o;
          o.workers = workers;
          return released([&] { return run_suite(k_list, ensemble, seed, o); });
        },
        py::arg("k_list"), py::arg("ensemble"), py::arg("seed"), py::arg("workers") = 0);

  // ---- cli
  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = 0;
    {
      py::gil_scoped_release release;
      code = cli::run(args, out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"));
}

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "linjac/bench.hpp"
#include "linjac/error.hpp"

namespace py = pybind11;
using namespace linjac;

namespace {

// A curve bundle together with its large model and a random stream, so that
// Python callers only handle points.
class Engine {
 public:
  Engine(CurveBundle bundle, RepTag tag, std::uint64_t seed)
      : bundle_(std::move(bundle)), rng_(seed), model_(bundle_model(bundle_, tag, bundle_.cubic.has_value(), rng_)) {}

  const CurveBundle& bundle() const { return bundle_; }
  const LargeModel& model() const { return model_; }
  Rng& rng() { return rng_; }

 private:
  CurveBundle bundle_;
  Rng rng_;
  LargeModel model_;
};

PointSize size_from(const std::string& s) {
  if (s == "small") return PointSize::Small;
  if (s == "large") return PointSize::Large;
  throw Error(Errc::InvalidArgument, "size must be 'small' or 'large'");
}

py::dict case_dict(const CaseResult& r) {
  py::dict d;
  d["suite"] = r.suite;
  d["case"] = r.name;
  d["pass"] = r.pass;
  d["details"] = r.details;
  d["seed"] = r.seed;
  return d;
}

}  // namespace

PYBIND11_MODULE(_linjac, m) {
  m.doc() = "Jacobian arithmetic of curves through linear algebra on Riemann-Roch spaces";

  static py::exception<Error> exc(m, "LinjacError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(exc, e.what());
    }
  });

  py::class_<PrimeField>(m, "PrimeField")
      .def(py::init<u64>(), py::arg("p"))
      .def_property_readonly("modulus", &PrimeField::modulus)
      .def_property_readonly("sigma_size", &PrimeField::sigma_size)
      .def("add", py::overload_cast<u64, u64>(&PrimeField::add, py::const_))
      .def("sub", py::overload_cast<u64, u64>(&PrimeField::sub, py::const_))
      .def("mul", py::overload_cast<u64, u64>(&PrimeField::mul, py::const_))
      .def("inv", py::overload_cast<u64>(&PrimeField::inv, py::const_));

  py::class_<HyperellipticCurve>(m, "HyperellipticCurve")
      .def_readonly("p", &HyperellipticCurve::p)
      .def_readonly("genus", &HyperellipticCurve::genus)
      .def_property_readonly("f", [](const HyperellipticCurve& c) { return c.f.coeffs(); })
      .def_property_readonly("h", [](const HyperellipticCurve& c) { return c.h.coeffs(); });

  py::class_<CurveBundle>(m, "CurveBundle")
      .def_readonly("curve", &CurveBundle::curve)
      .def_readonly("Delta", &CurveBundle::Delta)
      .def_property_readonly("genus", [](const CurveBundle& b) { return b.curve.genus; })
      .def_property_readonly("delta", [](const CurveBundle& b) { return b.rep_a.delta(); })
      .def_property_readonly("delta_prime", [](const CurveBundle& b) { return b.rep_a.delta_prime(); })
      .def_property_readonly("has_rep_b0", [](const CurveBundle& b) { return b.rep_b0.has_value(); })
      .def("product", [](const CurveBundle& b, std::size_t i, std::size_t j) { return b.rep_a.product_rows(i).row_vec(j); },
           py::arg("i"), py::arg("j"), "Coordinates of T_i * T_j in the basis of V' (0-based indices).")
      .def("add_rep_b0", [](CurveBundle& b, std::uint64_t seed) {
        Rng rng(seed);
        gen_rep_b0(b, rng);
      }, py::arg("seed") = 0)
      .def("to_json", &bundle_to_json)
      .def_static("from_json", &bundle_from_json)
      .def("save", &save_bundle)
      .def_static("load", &load_bundle);

  m.def("gen_hyperelliptic", [](int genus, u64 p, std::uint64_t seed, bool with_cubic) {
    Rng rng(seed);
    GenOptions opts;
    opts.with_cubic = with_cubic;
    return gen_hyperelliptic(genus, p, rng, opts);
  }, py::arg("genus"), py::arg("p"), py::arg("seed") = 0, py::arg("with_cubic") = true);
  m.def("paper_fixture", &gen_paper_fixture, py::arg("p") = 1009,
        "y^2 = x^3 + 1 with V spanned by 1, x, y, x^2.");

  py::class_<MumfordDivisor>(m, "MumfordDivisor")
      .def(py::init([](std::vector<u64> u, std::vector<u64> v) { return MumfordDivisor{Poly(std::move(u)), Poly(std::move(v))}; }),
           py::arg("u") = std::vector<u64>{1}, py::arg("v") = std::vector<u64>{})
      .def_property_readonly("u", [](const MumfordDivisor& d) { return d.u.coeffs(); })
      .def_property_readonly("v", [](const MumfordDivisor& d) { return d.v.coeffs(); })
      .def("__eq__", [](const MumfordDivisor& a, const MumfordDivisor& b) { return a == b; });

  m.def("cantor_add", &cantor_add);
  m.def("cantor_negate", &cantor_negate);
  m.def("cantor_scalar_mul", &cantor_scalar_mul);
  m.def("random_mumford", [](const HyperellipticCurve& c, std::uint64_t seed) {
    Rng rng(seed);
    return random_mumford(c, rng);
  }, py::arg("curve"), py::arg("seed") = 0);

  py::class_<JacobianPoint>(m, "JacobianPoint")
      .def_property_readonly("size", [](const JacobianPoint& x) { return to_string(x.size); })
      .def_property_readonly("dim", [](const JacobianPoint& x) { return x.space.dim(); })
      .def_property_readonly("basis", [](const JacobianPoint& x) {
        std::vector<Vec> rows;
        for (std::size_t i = 0; i < x.space.dim(); ++i) rows.push_back(x.space.vector_copy(i));
        return rows;
      });

  py::class_<Engine>(m, "Engine")
      .def(py::init([](CurveBundle b, const std::string& rep, std::uint64_t seed) {
        return Engine(std::move(b), rep_tag_from_string(rep), seed);
      }), py::arg("bundle"), py::arg("rep") = "a", py::arg("seed") = 0)
      .def_property_readonly("d", [](const Engine& e) { return e.model().d; })
      .def("zero", [](const Engine& e, const std::string& size) { return zero_point(e.model(), size_from(size)); },
           py::arg("size") = "small")
      .def("random_point", [](Engine& e, const std::string& size) {
        return random_point(e.bundle(), e.model(), size_from(size), e.rng());
      }, py::arg("size") = "small")
      .def("from_mumford", [](const Engine& e, const MumfordDivisor& d, const std::string& size) {
        return mumford_to_point(e.bundle(), e.model(), d, size_from(size));
      }, py::arg("divisor"), py::arg("size") = "small")
      .def("addflip", [](Engine& e, const JacobianPoint& x, const JacobianPoint& y) { return addflip(e.model(), x, y, e.rng()); })
      .def("add", [](Engine& e, const JacobianPoint& x, const JacobianPoint& y) { return add(e.model(), x, y, e.rng()); })
      .def("negate", [](Engine& e, const JacobianPoint& x) { return negate(e.model(), x, e.rng()); })
      .def("scalar_mul", [](Engine& e, std::int64_t n, const JacobianPoint& x) { return scalar_mul(e.model(), n, x, e.rng()); })
      .def("to_large", [](Engine& e, const JacobianPoint& x) { return to_large(e.model(), x, e.rng()); })
      .def("to_small", [](Engine& e, const JacobianPoint& x) { return to_small(e.model(), x, e.rng()); })
      .def("equal_class", [](Engine& e, const JacobianPoint& x, const JacobianPoint& y) {
        return equal_class(e.model(), x, y, e.rng());
      })
      .def("matches_cantor", [](Engine& e, const JacobianPoint& x, const MumfordDivisor& d) {
        return oracle_compare(e.bundle(), e.model(), x, d, e.rng());
      });

  m.def("suite_names", &suite_names);
  m.def("verify", [](const CurveBundle& b, const std::string& suite, int trials, std::uint64_t seed) {
    py::list out;
    for (const auto& r : run_suite(b, suite, trials, seed)) out.append(case_dict(r));
    return out;
  }, py::arg("bundle"), py::arg("suite"), py::arg("trials") = 20, py::arg("seed") = 0);

  m.def("scale", [](const std::vector<int>& genus_list, u64 p, const std::string& op, int trials, std::uint64_t seed) {
    py::list out;
    for (const auto& r : run_scale(genus_list, p, scale_op_from_string(op), trials, seed)) {
      py::dict d;
      d["genus"] = r.genus;
      d["op"] = to_string(r.op);
      d["median_ns"] = r.median_ns;
      d["trials"] = r.trials;
      out.append(d);
    }
    return out;
  }, py::arg("genus_list"), py::arg("p") = 1009, py::arg("op") = "addflip-large", py::arg("trials") = 3,
     py::arg("seed") = 0);
  m.def("loglog_slope", &loglog_slope);
}

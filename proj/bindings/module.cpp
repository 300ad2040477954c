#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "orbitkit/decomposition.hpp"
#include "orbitkit/induced.hpp"
#include "orbitkit/parser.hpp"
#include "orbitkit/tiling.hpp"

namespace py = pybind11;
namespace ok = orbitkit;

namespace {

std::string rat_str(const ok::Rational& q) { return ok::to_string(q); }

struct Session {
  ok::SpecDocument doc;
  ok::ValidationReport validation;
  std::optional<ok::NilpotentAlgebra> alg;
  std::optional<ok::OrbitData> orbit;

  explicit Session(const std::string& text) : doc(ok::parse_spec(text)) {
    validation = ok::validate_algebra(doc.to_constants());
    if (validation.valid) {
      alg.emplace(doc.to_constants());
      orbit = ok::CoadjointEngine(*alg).orbit_data();
    }
  }

  const ok::NilpotentAlgebra& algebra() const {
    if (!alg) throw std::invalid_argument("algebra validation failed");
    return *alg;
  }

  ok::DilationSpec dilation() const {
    return ok::validate_dilation(algebra(), *orbit, doc.dilation);
  }
};

std::vector<std::string> lambda_names(int n) {
  std::vector<std::string> names;
  for (int k = 1; k <= n; ++k) names.push_back("l" + std::to_string(k));
  return names;
}

py::dict validation_dict(const ok::ValidationReport& r) {
  py::dict d;
  d["valid"] = r.valid;
  d["nilpotency_class"] = r.nilpotency_class;
  d["derived_dim"] = r.derived_dim;
  d["derived_is_initial_span"] = r.derived_is_initial_span;
  d["triangularity_violations"] = r.triangularity_violations;
  d["jacobi_violations"] = r.jacobi_violations;
  return d;
}

py::dict orbit_dict(const Session& s) {
  const ok::OrbitData& o = *s.orbit;
  py::dict d;
  d["e"] = o.e;
  d["j"] = o.j;
  d["d"] = o.d;
  d["pfaffian"] = o.pfaffian.to_string(lambda_names(s.algebra().dim()));
  d["lambda_free"] = o.lambda_free;
  return d;
}

py::dict dilation_dict(const ok::DilationSpec& spec) {
  py::dict d;
  d["is_automorphism"] = spec.is_automorphism;
  d["is_expansive"] = spec.is_expansive;
  d["acts_trivially_on_lambda"] = spec.acts_trivially_on_lambda;
  d["det_modulus"] = rat_str(spec.det_modulus);
  d["violations"] = spec.violations;
  return d;
}

py::dict classify_dict(const Session& s) {
  const ok::NilpotentAlgebra& alg = s.algebra();
  ok::DilationSpec spec = s.dilation();
  ok::DecompositionReport rep = ok::classify(alg, spec, *s.orbit);
  ok::DensityProfile prof = ok::density_profile(alg, spec);
  std::optional<ok::BDResult> bd;
  if (alg.report().derived_is_initial_span) {
    ok::CoadjointEngine eng(alg);
    ok::Functional lam = s.doc.to_functional();
    bd = ok::bekka_driutti_check(alg, lam, eng.radical(lam), &rep.evidence);
  }
  ok::fiber_irreducibility(rep, spec, prof, *s.orbit, bd);
  py::dict d;
  d["case"] = ok::to_string(rep.which_case);
  d["fiber"] = rep.fiber_descriptor;
  d["multiplicity"] =
      rep.multiplicity == ok::Multiplicity::Singleton ? "Singleton" : "CountablyInfinite";
  d["irreducibility"] = ok::to_string(rep.irreducibility);
  d["evidence"] = rep.evidence;
  if (rep.tiling) {
    py::dict t;
    t["pivot"] = rep.tiling->pivot;
    t["scale"] = rat_str(rep.tiling->scale);
    d["tiling"] = t;
  } else {
    d["tiling"] = py::none();
  }
  return d;
}

py::dict tiling_dict(const Session& s, std::uint64_t samples, std::uint64_t seed) {
  ok::TilingSpec t = ok::make_shannon_tiling(s.dilation(), *s.orbit);
  ok::TilingReport rep = ok::verify_tiling(t, *s.orbit, samples, seed);
  py::dict d;
  d["pivot"] = t.pivot;
  d["scale"] = rat_str(t.scale);
  d["samples"] = rep.samples;
  d["failures"] = rep.failures;
  d["seed"] = rep.seed;
  return d;
}

py::dict verify_dict(const Session& s, int samples, std::uint64_t seed) {
  if (s.doc.lambda_kind != ok::LambdaKind::Rational)
    throw std::invalid_argument("verification requires 'lambda rational' in the input");
  const ok::NilpotentAlgebra& alg = s.algebra();
  ok::DilationSpec spec = s.dilation();
  py::dict d;
  py::dict inter;
  for (long long m = -1; m <= 1; ++m)
    inter[py::int_(m)] = ok::verify_intertwining(alg, spec, *s.orbit, s.doc.lambda_values, m,
                                                 samples, seed + static_cast<std::uint64_t>(m + 1));
  d["intertwining"] = inter;
  ok::WaveletOps w(alg, spec);
  d["group_law"] = w.verify_group_law(samples, seed + 11);
  if (alg.dim() <= 3) {
    ok::TestFunction f = ok::gaussian(alg.dim(), std::vector<double>(alg.dim(), 0.25));
    d["dilation_unitarity"] = w.verify_unitarity(f, 10.0);
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_orbitkit, m) {
  m.doc() = "coadjoint-orbit analysis of nilpotent Lie groups with diagonal dilations";

  py::register_exception<ok::ParseError>(m, "SpecParseError", PyExc_ValueError);

  py::class_<Session>(m, "Session")
      .def(py::init<const std::string&>(), py::arg("text"))
      .def_property_readonly("valid", [](const Session& s) { return s.validation.valid; })
      .def("validation", [](const Session& s) { return validation_dict(s.validation); })
      .def("orbit",
           [](const Session& s) {
             s.algebra();
             return orbit_dict(s);
           })
      .def("dilation", [](const Session& s) { return dilation_dict(s.dilation()); })
      .def("classify", &classify_dict)
      .def("tiling", &tiling_dict, py::arg("samples") = 1000, py::arg("seed") = 0)
      .def("verify_identities", &verify_dict, py::arg("samples") = 25, py::arg("seed") = 0)
      .def("canonical", [](const Session& s) { return ok::canonical_spec(s.doc); });

  m.def("parse", [](const std::string& text) { return Session(text); }, py::arg("text"),
        "Parse an input description and return a Session");
}

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "orbitkit/decomposition.hpp"
#include "orbitkit/induced.hpp"
#include "orbitkit/parser.hpp"
#include "orbitkit/report.hpp"
#include "orbitkit/tiling.hpp"

namespace ok = orbitkit;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitPrecondition = 4;
constexpr int kExitInternal = 5;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ok::ParseError(0, 0, "cannot open file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct Loaded {
  ok::SpecDocument doc;
  ok::ValidationReport validation;
};

Loaded load(const std::string& path) {
  Loaded l;
  l.doc = ok::parse_spec(slurp(path));
  l.validation = ok::validate_algebra(l.doc.to_constants());
  return l;
}

struct InvalidAlgebraExit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ok::NilpotentAlgebra require_valid(const Loaded& l) {
  if (!l.validation.valid) {
    std::string why;
    for (const auto& v : l.validation.triangularity_violations) why += "  " + v + "\n";
    for (const auto& v : l.validation.jacobi_violations) why += "  " + v + "\n";
    throw InvalidAlgebraExit("algebra validation failed:\n" + why);
  }
  return ok::NilpotentAlgebra(l.doc.to_constants());
}

void print_validation(const ok::ValidationReport& r) {
  std::cout << "valid: " << (r.valid ? "true" : "false") << "\n";
  std::cout << "nilpotency_class: " << r.nilpotency_class << "\n";
  std::cout << "derived_dim: " << r.derived_dim << "\n";
  std::cout << "derived_is_initial_span: " << (r.derived_is_initial_span ? "true" : "false")
            << "\n";
  for (const auto& v : r.triangularity_violations) std::cout << "triangularity: " << v << "\n";
  for (const auto& v : r.jacobi_violations) std::cout << "jacobi: " << v << "\n";
  for (const auto& v : r.warnings) std::cout << "warning: " << v << "\n";
}

std::vector<std::string> lambda_names(int n) {
  std::vector<std::string> names;
  for (int k = 1; k <= n; ++k) names.push_back("l" + std::to_string(k));
  return names;
}

int cmd_validate(const std::string& path) {
  Loaded l = load(path);
  print_validation(l.validation);
  return l.validation.valid ? 0 : kExitValidation;
}

int cmd_orbit(const std::string& path) {
  Loaded l = load(path);
  ok::NilpotentAlgebra alg = require_valid(l);
  ok::CoadjointEngine eng(alg);
  ok::OrbitData od = eng.orbit_data();
  std::cout << "e: " << ok::join_ints(od.e) << "\n";
  std::cout << "j: " << ok::join_ints(od.j) << "\n";
  std::cout << "d: " << od.d << "\n";
  std::cout << "P: " << od.pfaffian.to_string(lambda_names(alg.dim())) << "\n";
  std::cout << "P_sparse: " << ok::sparse_monomials(od.pfaffian) << "\n";
  std::cout << "lambda_free: " << ok::join_ints(od.lambda_free) << "\n";
  return 0;
}

int cmd_dilation(const std::string& path) {
  Loaded l = load(path);
  ok::NilpotentAlgebra alg = require_valid(l);
  ok::CoadjointEngine eng(alg);
  ok::OrbitData od = eng.orbit_data();
  ok::DilationSpec spec = ok::validate_dilation(alg, od, l.doc.dilation);
  std::cout << "is_automorphism: " << (spec.is_automorphism ? "true" : "false") << "\n";
  std::cout << "is_expansive: " << (spec.is_expansive ? "true" : "false") << "\n";
  std::cout << "acts_trivially_on_lambda: " << (spec.acts_trivially_on_lambda ? "true" : "false")
            << "\n";
  std::cout << "det_modulus: " << ok::to_string(spec.det_modulus) << "\n";
  for (const auto& v : spec.violations) std::cout << "violation: " << v << "\n";
  if (spec.is_automorphism) {
    ok::DensityProfile prof = ok::density_profile(alg, spec);
    std::cout << "lattice_density: "
              << (prof.overall == ok::DensityVerdict::Dense
                      ? "Dense"
                      : prof.overall == ok::DensityVerdict::NotDense ? "NotDense" : "Unknown")
              << "\n";
  }
  return 0;
}

int classify_core(const ok::NilpotentAlgebra& alg, const ok::SpecDocument& doc,
                  const ok::OrbitData& od, ok::DecompositionReport& rep) {
  ok::DilationSpec spec = ok::validate_dilation(alg, od, doc.dilation);
  rep = ok::classify(alg, spec, od);
  ok::DensityProfile prof = ok::density_profile(alg, spec);
  std::optional<ok::BDResult> bd;
  if (alg.report().derived_is_initial_span) {
    ok::CoadjointEngine eng(alg);
    ok::Functional lam = doc.to_functional();
    bd = ok::bekka_driutti_check(alg, lam, eng.radical(lam), &rep.evidence);
  }
  ok::fiber_irreducibility(rep, spec, prof, od, bd);
  return 0;
}

int cmd_classify(const std::string& path) {
  Loaded l = load(path);
  ok::NilpotentAlgebra alg = require_valid(l);
  ok::CoadjointEngine eng(alg);
  ok::OrbitData od = eng.orbit_data();
  ok::DecompositionReport rep;
  classify_core(alg, l.doc, od, rep);
  std::cout << "case: " << ok::to_string(rep.which_case) << "\n";
  std::cout << "fiber: " << rep.fiber_descriptor << "\n";
  std::cout << "multiplicity: "
            << (rep.multiplicity == ok::Multiplicity::Singleton ? "Singleton"
                                                                : "CountablyInfinite")
            << "\n";
  if (rep.tiling) {
    std::cout << "tiling_pivot: " << rep.tiling->pivot << "\n";
    std::cout << "tiling_scale: " << ok::to_string(rep.tiling->scale) << "\n";
  }
  std::cout << "irreducibility: " << ok::to_string(rep.irreducibility) << "\n";
  for (const auto& e : rep.evidence) std::cout << "evidence: " << e << "\n";
  return 0;
}

int cmd_tiling(const std::string& path, std::uint64_t samples, std::uint64_t seed) {
  Loaded l = load(path);
  ok::NilpotentAlgebra alg = require_valid(l);
  ok::CoadjointEngine eng(alg);
  ok::OrbitData od = eng.orbit_data();
  ok::DilationSpec spec = ok::validate_dilation(alg, od, l.doc.dilation);
  ok::TilingSpec t = ok::make_shannon_tiling(spec, od);
  std::cout << "pivot: " << t.pivot << "\n";
  std::cout << "scale: " << ok::to_string(t.scale) << "\n";
  std::cout << "band: " << ok::to_string(std::min(ok::Rational(1), t.scale)) << " <= |l"
            << t.pivot << "| < " << ok::to_string(std::max(ok::Rational(1), t.scale)) << "\n";
  ok::TilingReport rep = ok::verify_tiling(t, od, samples, seed);
  std::cout << rep.failures << " failures / " << rep.samples << "\n";
  std::cout << "seed: " << rep.seed << "\n";
  return rep.failures == 0 ? 0 : kExitInternal;
}

int cmd_irreducibility(const std::string& path) {
  Loaded l = load(path);
  ok::NilpotentAlgebra alg = require_valid(l);
  ok::CoadjointEngine eng(alg);
  ok::OrbitData od = eng.orbit_data();
  ok::DecompositionReport rep;
  classify_core(alg, l.doc, od, rep);
  std::cout << "verdict: " << ok::to_string(rep.irreducibility) << "\n";
  for (const auto& e : rep.evidence) std::cout << "evidence: " << e << "\n";
  return 0;
}

int cmd_verify(const std::string& path, std::uint64_t seed) {
  Loaded l = load(path);
  ok::NilpotentAlgebra alg = require_valid(l);
  ok::CoadjointEngine eng(alg);
  ok::OrbitData od = eng.orbit_data();
  ok::DilationSpec spec = ok::validate_dilation(alg, od, l.doc.dilation);
  if (!spec.is_automorphism)
    throw ok::NotAnAutomorphism("verify-identities requires an automorphism");
  if (l.doc.lambda_kind != ok::LambdaKind::Rational)
    throw ok::PreconditionViolated("verify-identities requires 'lambda rational' in the input");

  bool ok_all = true;
  for (long long m = -1; m <= 1; ++m) {
    double disc = ok::verify_intertwining(alg, spec, od, l.doc.lambda_values, m, 100,
                                          seed + static_cast<std::uint64_t>(m + 1));
    std::cout << "intertwining m=" << m << ": max_discrepancy " << disc << "\n";
    if (disc > 1e-9) ok_all = false;
  }
  ok::WaveletOps w(alg, spec);
  double law = w.verify_group_law(100, seed + 11);
  std::cout << "group_law: max_discrepancy " << law << "\n";
  if (law > 1e-9) ok_all = false;
  if (alg.dim() <= 3) {
    ok::TestFunction f = ok::gaussian(alg.dim(), std::vector<double>(alg.dim(), 0.25));
    double uni = w.verify_unitarity(f, 10.0);
    std::cout << "dilation_unitarity: discrepancy " << uni << "\n";
    if (uni > 1e-3) ok_all = false;
  }
  std::cout << "seed: " << seed << "\n";
  return ok_all ? 0 : kExitInternal;
}

int cmd_report(const std::string& path, const std::string& format, std::uint64_t seed) {
  Loaded l = load(path);
  ok::NilpotentAlgebra alg = require_valid(l);
  ok::CoadjointEngine eng(alg);
  ok::OrbitData od = eng.orbit_data();
  ok::DilationSpec spec = ok::validate_dilation(alg, od, l.doc.dilation);

  ok::ReportBuilder rb;
  rb.set("algebra", "dim", std::to_string(alg.dim()));
  rb.set("algebra", "nilpotency_class", std::to_string(alg.nilpotency_class()));
  rb.set("algebra", "derived_dim", std::to_string(alg.derived_dim()));
  rb.set("algebra", "abelian", alg.is_abelian() ? "true" : "false");
  rb.set("algebra", "lattice_closed", alg.lattice_closure_check() ? "true" : "false");

  rb.set("orbit", "e", ok::join_ints(od.e));
  rb.set("orbit", "j", ok::join_ints(od.j));
  rb.set("orbit", "d", std::to_string(od.d));
  rb.set("orbit", "pfaffian", od.pfaffian.to_string(lambda_names(alg.dim())));
  rb.set("orbit", "pfaffian_sparse", ok::sparse_monomials(od.pfaffian));
  rb.set("orbit", "lambda_free", ok::join_ints(od.lambda_free));

  rb.set("dilation", "is_automorphism", spec.is_automorphism ? "true" : "false");
  rb.set("dilation", "is_expansive", spec.is_expansive ? "true" : "false");
  rb.set("dilation", "acts_trivially_on_lambda",
         spec.acts_trivially_on_lambda ? "true" : "false");
  rb.set("dilation", "det_modulus", ok::to_string(spec.det_modulus));

  if (spec.is_automorphism) {
    ok::DecompositionReport rep;
    classify_core(alg, l.doc, od, rep);
    rb.set("decomposition", "case", ok::to_string(rep.which_case));
    rb.set("decomposition", "fiber", rep.fiber_descriptor);
    rb.set("decomposition", "multiplicity",
           rep.multiplicity == ok::Multiplicity::Singleton ? "Singleton" : "CountablyInfinite");
    rb.set("decomposition", "irreducibility", ok::to_string(rep.irreducibility));
    for (std::size_t i = 0; i < rep.evidence.size(); ++i)
      rb.set("decomposition", "evidence" + std::to_string(i + 1), rep.evidence[i]);
    if (rep.tiling) {
      rb.set("tiling", "pivot", std::to_string(rep.tiling->pivot));
      rb.set("tiling", "scale", ok::to_string(rep.tiling->scale));
      ok::TilingReport tr = ok::verify_tiling(*rep.tiling, od, 200, seed);
      rb.set("tiling", "samples", std::to_string(tr.samples));
      rb.set("tiling", "failures", std::to_string(tr.failures));
      rb.set("tiling", "seed", std::to_string(tr.seed));
    }
    if (l.doc.lambda_kind == ok::LambdaKind::Rational) {
      std::ostringstream disc;
      disc << ok::verify_intertwining(alg, spec, od, l.doc.lambda_values, 1, 25, seed);
      rb.set("verification", "intertwining_m1_max_discrepancy", disc.str());
      ok::WaveletOps w(alg, spec);
      std::ostringstream law;
      law << w.verify_group_law(25, seed);
      rb.set("verification", "group_law_max_discrepancy", law.str());
      rb.set("verification", "seed", std::to_string(seed));
    }
  }
  rb.set_lines("input", "line", ok::canonical_spec(l.doc));

  if (format == "structured") {
    std::cout << rb.str();
  } else {
    // plain text: same content without the section framing
    std::istringstream in(rb.str());
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.front() == '[')
        std::cout << "== " << line.substr(1, line.size() - 2) << " ==\n";
      else if (!line.empty())
        std::cout << line << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coadjoint-orbit analysis of nilpotent Lie groups with diagonal dilations"};
  app.require_subcommand(1);

  std::string path;
  std::uint64_t samples = 1000, seed = 0;
  std::string format = "text";

  auto add_file = [&](CLI::App* c) { c->add_option("file", path, "input spec file")->required(); };

  auto* c_validate = app.add_subcommand("validate", "check the bracket table");
  add_file(c_validate);
  auto* c_orbit = app.add_subcommand("orbit", "generic coadjoint orbit data");
  add_file(c_orbit);
  auto* c_dilation = app.add_subcommand("dilation", "dilation flags and density");
  add_file(c_dilation);
  auto* c_classify = app.add_subcommand("classify", "decomposition classification");
  add_file(c_classify);
  auto* c_tiling = app.add_subcommand("tiling", "dilation tiling construction and check");
  add_file(c_tiling);
  c_tiling->add_option("--samples", samples, "Monte Carlo samples");
  c_tiling->add_option("--seed", seed, "RNG seed");
  auto* c_irr = app.add_subcommand("irreducibility", "fiber irreducibility evidence");
  add_file(c_irr);
  auto* c_verify = app.add_subcommand("verify-identities", "numerical identity checks");
  add_file(c_verify);
  c_verify->add_option("--seed", seed, "RNG seed");
  auto* c_report = app.add_subcommand("report", "full structured report");
  add_file(c_report);
  c_report->add_option("--format", format, "text|structured")
      ->check(CLI::IsMember({"text", "structured"}));
  c_report->add_option("--seed", seed, "RNG seed");

  CLI11_PARSE(app, argc, argv);

  if (const char* env = std::getenv("ORBITKIT_SEED")) {
    try {
      seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "error: ORBITKIT_SEED is not an integer\n";
      return kExitPrecondition;
    }
  }

  try {
    if (c_validate->parsed()) return cmd_validate(path);
    if (c_orbit->parsed()) return cmd_orbit(path);
    if (c_dilation->parsed()) return cmd_dilation(path);
    if (c_classify->parsed()) return cmd_classify(path);
    if (c_tiling->parsed()) return cmd_tiling(path, samples, seed);
    if (c_irr->parsed()) return cmd_irreducibility(path);
    if (c_verify->parsed()) return cmd_verify(path, seed);
    if (c_report->parsed()) return cmd_report(path, format, seed);
  } catch (const ok::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const InvalidAlgebraExit& e) {
    std::cerr << "validation error: " << e.what();
    return kExitValidation;
  } catch (const ok::InternalInconsistency& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return kExitInternal;
  } catch (const ok::FactorizationFailed& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::runtime_error& e) {
    // module precondition failures (automorphism, expansiveness, layers, ...)
    std::cerr << "precondition error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::invalid_argument& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return 0;
}

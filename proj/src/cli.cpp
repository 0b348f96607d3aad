#include "g2aa/cli.hpp"

#include <CLI11.hpp>
#include <ostream>

#include "g2aa/classify.hpp"
#include "g2aa/error.hpp"
#include "g2aa/g2.hpp"
#include "g2aa/geometry.hpp"
#include "g2aa/json_io.hpp"
#include "g2aa/reproduce.hpp"

namespace g2aa {

namespace {

struct RunConfig {
  std::string input;
  std::string form;
  std::string format = "text";
  double tol = kFallbackTolerance;
  int sweep_bound = 2;
  std::size_t sweep_points = 500;
  std::string mode = "g2";
  std::string kind = "calibrated";
  std::string eigen;
  std::string basis;
  std::string which = "all";
  std::string model;
  bool pipeline = false;
};

bool json_out(const RunConfig& c) { return c.format == "json"; }

std::string signature_text(const G2EpsStructure& s) {
  if (s.eps < 0) return "definite";
  return "(" + std::to_string(s.signature.p) + "," + std::to_string(s.signature.q) + ")";
}

int cmd_certify(const RunConfig& c, std::ostream& out) {
  const G2EpsStructure s = certify_g2(form_from_json(read_json_file(c.form)), c.tol);
  if (json_out(c)) {
    out << certificate_to_json(s).dump(2) << "\n";
    return kExitOk;
  }
  out << (s.eps < 0 ? "G2" : "G2*") << ", " << signature_text(s) << ", " << to_string(s.frame_kind) << ", stab dim "
      << s.stabilizer_dim << "\n";
  if (s.exact()) {
    out << "metric: exact\n" << s.metric->to_string() << "\n";
    out << "volume: " << s.vol->to_string() << "\n";
    out << "star phi: " << s.star_phi().to_string() << "\n";
  } else {
    out << "metric: floating-point fallback, relative residual " << s.fallback_residual << " (tolerance " << c.tol << ")\n";
  }
  return kExitOk;
}

int cmd_report(const RunConfig& c, std::ostream& out) {
  const AlmostAbelianAlgebra g = algebra_from_json(read_json_file(c.input));
  const KForm phi = form_from_json(read_json_file(c.form));
  const G2EpsStructure s = certify_g2(phi, c.tol);
  if (!s.exact()) throw DomainError("curvature reports need an exact metric; the normalization root is not exact");
  const KForm dphi = differential(g, phi);
  const KForm dstar = differential(g, s.star_phi());
  const CurvatureReport rep = analyze(g, s.exact_metric(), phi);
  if (json_out(c)) {
    Json j{{"structure", s.eps < 0 ? "G2" : "G2*"},
           {"frame_kind", to_string(s.frame_kind)},
           {"d_phi", form_to_json(dphi)},
           {"d_star_phi", form_to_json(dstar)},
           {"calibrated", dphi.is_zero()},
           {"parallel", dphi.is_zero() && dstar.is_zero()},
           {"curvature", curvature_to_json(rep)}};
    if (g.is_nilpotent()) j["algebra"] = identify_nilpotent(g).name;
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << (s.eps < 0 ? "G2" : "G2*") << " structure, frame " << to_string(s.frame_kind) << "\n";
  if (g.is_nilpotent()) out << "algebra: " << identify_nilpotent(g).name << "\n";
  out << "d phi = " << dphi.to_string('f') << "\n";
  out << "d star phi = " << dstar.to_string('f') << "\n";
  out << "calibrated: " << (dphi.is_zero() ? "yes" : "no") << ", parallel: " << (dphi.is_zero() && dstar.is_zero() ? "yes" : "no")
      << "\n";
  for (const auto& [ij, m] : rep.R)
    if (!m.is_zero()) out << "R(f" << ij.first << ",f" << ij.second << ") = " << endo_to_string(m) << "\n";
  out << "flat: " << (rep.is_flat ? "yes" : "no") << ", ricci_flat: " << (rep.is_ricci_flat ? "yes" : "no")
      << ", locally_symmetric: " << (rep.is_locally_symmetric ? "yes" : "no") << "\n";
  out << "hol_dim: " << rep.hol_dim() << ", abelian: " << (rep.hol_abelian ? "yes" : "no")
      << ", annihilates phi: " << (*rep.hol_annihilates_phi ? "yes" : "no") << "\n";
  return kExitOk;
}

int cmd_decide(const RunConfig& c, std::ostream& out) {
  const AlmostAbelianAlgebra g = algebra_from_json(read_json_file(c.input));
  const Mode mode = parse_mode(c.mode);
  DecisionInput in;
  if (!c.eigen.empty()) in.eigen = eigen_from_json(read_json_file(c.eigen));
  if (!c.basis.empty()) in.basis = matrix_from_json(read_json_file(c.basis));
  const DecisionResult d = c.kind == "parallel" ? parallel_nondeg_decision(g, mode, in) : calibrated_decision(g, mode, in);
  if (json_out(c))
    out << decision_to_json(d).dump(2) << "\n";
  else
    out << c.kind << " " << to_string(mode) << ": " << to_string(d.decision) << " (" << d.method << ": " << d.detail << ")\n";
  return d.decision == Decision::undecidable ? kExitRejected : kExitOk;
}

int cmd_nilpotent(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const NilpotentParallelParams p = nilpotent_params_from_json(read_json_file(c.input));
  const NilpotentReport r = nilpotent_parallel_report(p);
  if (json_out(c))
    out << nilpotent_report_to_json(r).dump(2) << "\n";
  else
    out << r.algebra << ", hol_dim " << r.hol_dim << ", flat: " << (r.flat ? "yes" : "no")
        << ", locally_symmetric: " << (r.locally_symmetric ? "yes" : "no") << "\n";
  if (c.pipeline) {
    const NilpotentReport q = nilpotent_pipeline_report(p);
    if (!q.same_outcome(r)) {
      err << "pipeline disagrees: " << nilpotent_report_to_json(q).dump() << "\n";
      return kExitMismatch;
    }
    if (!json_out(c)) out << "pipeline: agrees\n";
  }
  return kExitOk;
}

int cmd_model(const RunConfig& c, std::ostream& out) {
  const KForm a = model_tensor(c.model);
  if (json_out(c))
    out << form_to_json(a).dump(2) << "\n";
  else
    out << c.model << " = " << a.to_string() << "\n";
  return kExitOk;
}

int cmd_reproduce(const RunConfig& c, std::ostream& out, std::ostream& err) {
  ReproduceOptions opts;
  opts.sweep_bound = c.sweep_bound;
  opts.sweep_points = c.sweep_points;
  const auto reports = reproduce(c.which, opts);
  std::string first;
  if (json_out(c)) {
    Json j = Json::array();
    for (const auto& r : reports) {
      Json checks = Json::array();
      for (const auto& k : r.checks)
        checks.push_back(Json{{"name", k.name}, {"expected", k.expected}, {"computed", k.computed}, {"pass", k.pass}});
      j.push_back(Json{{"suite", r.suite}, {"pass", r.passed()}, {"checks", checks}});
    }
    out << j.dump(2) << "\n";
  }
  for (const auto& r : reports) {
    if (!json_out(c)) {
      out << "== " << r.suite << " (" << (r.passed() ? "pass" : "FAIL") << ")\n";
      for (const auto& k : r.checks) {
        out << (k.pass ? "  [pass] " : "  [FAIL] ") << k.name << "\n";
        if (!k.pass) out << "         expected:  " << k.expected << "\n         computed:  " << k.computed << "\n";
      }
    }
    if (first.empty()) first = r.first_failure();
  }
  if (!first.empty()) {
    err << "first failing check: " << first << "\n";
    return kExitMismatch;
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Calibrated and parallel G2 and G2* structures on seven-dimensional almost Abelian Lie algebras"};
  app.require_subcommand(1);
  RunConfig c;
  app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--tol", c.tol, "Relative tolerance of the floating-point metric fallback")
      ->check(CLI::PositiveNumber);

  auto* certify = app.add_subcommand("certify", "Certify a three-form as a G2 or G2* structure");
  certify->add_option("--form", c.form, "Form JSON file")->required();

  auto* report = app.add_subcommand("report", "Curvature and holonomy report of an algebra with a three-form");
  report->add_option("--input", c.input, "Algebra JSON file")->required();
  report->add_option("--form", c.form, "Form JSON file")->required();

  auto* decide = app.add_subcommand("decide", "Existence of calibrated or parallel structures");
  decide->add_option("--input", c.input, "Algebra JSON file")->required();
  decide->add_option("--mode", c.mode, "Structure kind")->check(CLI::IsMember({"g2", "g2star_24", "g2star_33", "g2star_deg"}));
  decide->add_option("--kind", c.kind, "calibrated or parallel (non-degenerate ideal)")
      ->check(CLI::IsMember({"calibrated", "parallel"}));
  decide->add_option("--eigen", c.eigen, "JSON file with the complex Jordan blocks of ad");
  decide->add_option("--basis", c.basis, "JSON file with a 6 x 6 basis change certificate");

  auto* nilpotent = app.add_subcommand("nilpotent", "Closed-form report of the nilpotent parallel G2* family");
  nilpotent->add_option("--input", c.input, "Parameter JSON file {delta, B, v, w}")->required();
  nilpotent->add_flag("--pipeline", c.pipeline, "Cross-check against the curvature pipeline");

  auto* model = app.add_subcommand("model", "Print a model tensor");
  model->add_option("name", c.model, "Model tensor name")->required()->check(CLI::IsMember(model_tensor_names()));

  auto* repro = app.add_subcommand("reproduce", "Run the golden reproduction suites");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  repro->add_option("which", c.which, "Suite name or all")->check(CLI::IsMember(suites));
  repro->add_option("--sweep-bound", c.sweep_bound, "Entry bound of the sweep grid")->check(CLI::Range(0, 5));
  repro->add_option("--points", c.sweep_points, "Number of sweep points")->check(CLI::Range(1, 100000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInternal;
  }

  try {
    if (*certify) return cmd_certify(c, out);
    if (*report) return cmd_report(c, out);
    if (*decide) return cmd_decide(c, out);
    if (*nilpotent) return cmd_nilpotent(c, out, err);
    if (*model) return cmd_model(c, out);
    if (*repro) return cmd_reproduce(c, out, err);
  } catch (const NotG2Error& e) {
    err << "not a G2 structure: " << e.what() << "\n";
    return kExitRejected;
  } catch (const DegenerateMetricError& e) {
    err << "degenerate metric: " << e.what() << "\n";
    return kExitRejected;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const DimensionError& e) {
    err << "dimension error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const DomainError& e) {
    err << "rejected: " << e.what() << "\n";
    return kExitRejected;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace g2aa

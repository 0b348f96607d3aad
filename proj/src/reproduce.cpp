#include "g2aa/reproduce.hpp"

#include <algorithm>
#include <functional>

#include "g2aa/classify.hpp"
#include "g2aa/error.hpp"
#include "g2aa/g2.hpp"
#include "g2aa/geometry.hpp"

namespace g2aa {

namespace {

Check compare_forms(std::string name, const KForm& expected, const KForm& computed, char letter = 'f') {
  return Check{std::move(name), expected.to_string(letter), computed.to_string(letter), expected == computed};
}

Check compare_endo(std::string name, const Matrix& expected, const Matrix& computed) {
  return Check{std::move(name), endo_to_string(expected), endo_to_string(computed), expected == computed};
}

Check compare_matrix(std::string name, const Matrix& expected, const Matrix& computed) {
  return Check{std::move(name), expected.to_string(), computed.to_string(), expected == computed};
}

template <class T>
Check compare_value(std::string name, const T& expected, const T& computed) {
  const auto show = [](const T& v) {
    if constexpr (std::is_same_v<T, bool>)
      return std::string(v ? "true" : "false");
    else if constexpr (std::is_same_v<T, std::string>)
      return v;
    else
      return std::to_string(v);
  };
  return Check{std::move(name), show(expected), show(computed), expected == computed};
}

Matrix endo(std::initializer_list<std::tuple<int, int, Scalar>> terms) {
  Matrix m(7, 7);
  for (const auto& [i, j, c] : terms) m += elementary_endo(7, i, j, c);
  return m;
}

Scalar frac(long p, long q) { return Scalar::fraction(p, q); }

AlmostAbelianAlgebra example_a_algebra() {
  // [f3,f7] = f1, [f4,f7] = f3, [f5,f7] = f2, [f6,f7] = f5.
  Matrix ad(6, 6);
  ad(0, 2) = -1;
  ad(2, 3) = -1;
  ad(1, 4) = -1;
  ad(4, 5) = -1;
  return AlmostAbelianAlgebra(ad);
}

AlmostAbelianAlgebra example_b_algebra() {
  // [f_i,f7] = -2 f_i for i = 1,3,4 and [f_j,f7] = f_j for j = 2,5,6.
  return AlmostAbelianAlgebra(Matrix::diagonal({2, -1, 2, 2, -1, -1}));
}

SuiteReport suite_g2metric() {
  SuiteReport r{"g2metric", {}};
  for (int eps : {-1, 1}) {
    const std::string tag = "eps=" + std::to_string(eps) + ": ";
    const G2EpsStructure s = certify_g2(model_phi(eps));
    const Matrix expected_metric =
        eps < 0 ? Matrix::identity(7) : Matrix::diagonal({-1, -1, -1, -1, 1, 1, 1});
    r.checks.push_back(compare_matrix(tag + "metric", expected_metric, s.exact_metric()));
    r.checks.push_back(compare_forms(tag + "volume form", volume_form(7, Scalar(1)), s.exact_vol()));
    r.checks.push_back(compare_value(tag + "stabilizer dimension", std::size_t{14}, s.stabilizer_dim));
    const KForm golden = KForm::parse(7, "f1234-f2467+f2357+f1457+f1367") +
                          KForm::parse(7, "f1256+f3456") * Scalar(eps);
    r.checks.push_back(compare_forms(tag + "star phi, golden literal", golden, s.star_phi()));
  }
  const KForm witt_frame_dual = KForm::parse(7, "f1234-f1256-f3456-f2467+f2357+f1367+f1457");
  r.checks.push_back(compare_forms("eps=1: star phi, adapted frame of the Witt basis", witt_frame_dual,
                                   certify_g2(model_phi(1)).star_phi()));
  return r;
}

SuiteReport suite_witt() {
  SuiteReport r{"witt", {}};
  const WittFrame w = witt_frame_from_adapted();
  const G2EpsStructure s = certify_g2(model_phi(1));
  r.checks.push_back(compare_forms("phi in the Witt basis", witt_phi(), w.to_witt(model_phi(1)), 'F'));
  r.checks.push_back(compare_forms("star phi in the Witt basis", witt_star_phi(), w.to_witt(s.star_phi()), 'F'));
  r.checks.push_back(compare_matrix("metric in the Witt basis", witt_metric(), w.metric_to_witt(s.exact_metric())));
  const G2EpsStructure ws = certify_g2(witt_phi());
  r.checks.push_back(compare_matrix("metric certified from the Witt form", witt_metric(), ws.exact_metric()));
  r.checks.push_back(compare_forms("star phi certified from the Witt form", witt_star_phi(), ws.star_phi(), 'F'));
  return r;
}

SuiteReport suite_stabilizers() {
  SuiteReport r{"stabilizers", {}};
  const auto dim = [](const std::vector<Matrix>& b) { return b.size(); };
  r.checks.push_back(compare_value("(i) rho_-1", std::size_t{16}, dim(stabilizer_algebra(model_rho(-1)))));
  r.checks.push_back(compare_value("(ii) rho_1", std::size_t{16}, dim(stabilizer_algebra(model_rho(1)))));
  r.checks.push_back(compare_value("(iii) rho_0", std::size_t{17}, dim(stabilizer_algebra(model_rho0()))));
  r.checks.push_back(compare_value("(iv) Omega_0", std::size_t{22}, dim(stabilizer_algebra(model_Omega0()))));
  r.checks.push_back(compare_value("(v) (rho_-1, 1/2 omega_-1^2)", std::size_t{8},
                                   dim(joint_stabilizer_algebra(model_rho(-1), model_half_omega_squared(-1)))));
  r.checks.push_back(compare_value("(vi) (rho_-1, 1/2 omega_1^2)", std::size_t{8},
                                   dim(joint_stabilizer_algebra(model_rho(-1), model_half_omega_squared(1)))));
  r.checks.push_back(compare_value("(vii) (rho_1, 1/2 omega_-1^2)", std::size_t{8},
                                   dim(joint_stabilizer_algebra(model_rho(1), model_half_omega_squared(-1)))));
  r.checks.push_back(compare_value("phi_-1", std::size_t{14}, dim(stabilizer_algebra(model_phi(-1)))));
  r.checks.push_back(compare_value("phi_1", std::size_t{14}, dim(stabilizer_algebra(model_phi(1)))));
  return r;
}

SuiteReport suite_example_a() {
  SuiteReport r{"example_a", {}};
  const AlmostAbelianAlgebra g = example_a_algebra();
  const KForm phi = witt_phi();
  const G2EpsStructure s = certify_g2(phi);
  r.checks.push_back(compare_forms("d phi", KForm(7, 4), differential(g, phi)));
  r.checks.push_back(compare_forms("d star phi", KForm::parse(7, "-f23567"), differential(g, s.star_phi())));

  const ConnectionTable conn = levi_civita(g, s.exact_metric());
  CurvatureReport rep = curvature(conn, g);
  const Matrix R27 = endo({{6, 1, -1}, {7, 3, frac(1, 2)}});
  const Matrix R57 = endo({{5, 1, frac(-3, 2)}, {7, 4, frac(-3, 4)}});
  const Matrix R67 = endo({{2, 1, -1}, {7, 2, frac(-1, 2)}});
  r.checks.push_back(compare_endo("R(f2,f7)", R27, rep.curvature(2, 7)));
  r.checks.push_back(compare_endo("R(f5,f7)", R57, rep.curvature(5, 7)));
  r.checks.push_back(compare_endo("R(f6,f7)", R67, rep.curvature(6, 7)));
  std::size_t others = 0;
  for (const auto& [ij, m] : rep.R)
    if (ij != std::pair{2, 7} && ij != std::pair{5, 7} && ij != std::pair{6, 7} && !m.is_zero()) ++others;
  r.checks.push_back(compare_value("other non-zero R(f_i,f_j)", std::size_t{0}, others));
  r.checks.push_back(compare_value("Ricci-flat", true, rep.is_ricci_flat));

  const Matrix Z(7, 7);
  bool first_six = true;
  for (int i = 1; i <= 6; ++i)
    for (int jk : {2, 5, 6}) first_six = first_six && nabla_endomorphism(conn, i, rep.curvature(jk, 7)).is_zero();
  r.checks.push_back(compare_value("nabla_{f_i} R(f_j,f_7) = 0 for i <= 6", true, first_six));
  r.checks.push_back(compare_endo("nabla_{f7} R(f2,f7)", Z, nabla_endomorphism(conn, 7, rep.curvature(2, 7))));
  r.checks.push_back(compare_endo("nabla_{f7} R(f5,f7)", R27 * frac(3, 2), nabla_endomorphism(conn, 7, rep.curvature(5, 7))));
  r.checks.push_back(compare_endo("nabla_{f7} R(f6,f7)", R57 * frac(1, 3), nabla_endomorphism(conn, 7, rep.curvature(6, 7))));

  const HolonomyResult hol = holonomy_algebra(conn, rep);
  r.checks.push_back(compare_value("holonomy dimension", std::size_t{3}, hol.basis.size()));
  r.checks.push_back(compare_value("holonomy Abelian", true, is_abelian(hol.basis)));
  r.checks.push_back(compare_forms("R(f6,f7).phi", KForm::parse(7, "f256-1/2*f367+1/2*f457"), gl_action(R67, phi)));
  r.checks.push_back(compare_value("holonomy annihilates phi", false, annihilates(phi, hol.basis)));
  r.checks.push_back(compare_value("algebra", std::string("n_{7,2}"), identify_nilpotent(g).name));
  return r;
}

SuiteReport suite_example_b() {
  SuiteReport r{"example_b", {}};
  const AlmostAbelianAlgebra g = example_b_algebra();
  const KForm phi = witt_phi();
  const G2EpsStructure s = certify_g2(phi);
  r.checks.push_back(compare_forms("d phi", KForm(7, 4), differential(g, phi)));
  r.checks.push_back(compare_forms("d star phi", KForm::parse(7, "f12567-f34567"), differential(g, s.star_phi())));

  const CurvatureReport rep = analyze(g, s.exact_metric(), phi);
  const std::vector<Matrix> golden = {endo({{2, 1, 2}, {7, 2, 1}}), endo({{6, 1, 2}, {7, 3, -1}}),
                                       endo({{5, 1, 2}, {7, 4, 1}}), endo({{4, 1, 2}, {7, 5, 1}}),
                                       endo({{3, 1, 2}, {7, 6, -1}})};
  SpanBuilder expected(49), computed(49);
  for (const auto& m : golden) expected.add(m.flat());
  for (const auto& [ij, m] : rep.R) computed.add(m.flat());
  bool same = expected.dim() == computed.dim();
  for (const auto& v : computed.generators()) same = same && expected.contains(v);
  std::string shown;
  for (const auto& v : computed.generators()) shown += (shown.empty() ? "" : ", ") + endo_to_string(Matrix::from_flat(v, 7, 7));
  r.checks.push_back(Check{"span of R(X,Y)", "5-dimensional reference span", std::to_string(computed.dim()) + ": " + shown, same});
  r.checks.push_back(compare_value("Ricci-flat", true, rep.is_ricci_flat));
  r.checks.push_back(compare_value("holonomy dimension", std::size_t{5}, rep.hol_dim()));
  r.checks.push_back(compare_value("holonomy Abelian", true, rep.hol_abelian));
  r.checks.push_back(compare_value("holonomy annihilates phi", false, *rep.hol_annihilates_phi));
  return r;
}

std::string row_string(const Table1Row& row) {
  return row.parallel + " | " + row.hol_dims + " | " + row.nonflat_loc_sym;
}

SuiteReport suite_table1() {
  SuiteReport r{"table1", {}};
  const auto computed = regenerate_table1(1);
  const auto expected = expected_table1();
  for (std::size_t k = 0; k < expected.size(); ++k) {
    const Table1Row& e = expected[k];
    const auto it = std::find_if(computed.begin(), computed.end(), [&](const Table1Row& c) { return c.algebra == e.algebra; });
    if (it == computed.end()) {
      r.checks.push_back(Check{e.algebra, row_string(e), "missing", false});
      continue;
    }
    r.checks.push_back(Check{e.algebra + " " + e.lie_bracket, row_string(e), row_string(*it), e == *it});
  }
  return r;
}

SuiteReport suite_sweep(const ReproduceOptions& opts) {
  SuiteReport r{"sweep", {}};
  std::size_t mismatches = 0;
  std::string first;
  const auto sample = nilpotent_sample(opts.sweep_bound, opts.sweep_points, opts.seed);
  for (const auto& p : sample) {
    const NilpotentReport a = nilpotent_parallel_report(p);
    const NilpotentReport b = nilpotent_pipeline_report(p);
    if (!a.same_outcome(b)) {
      if (mismatches++ == 0) first = a.algebra + " vs " + b.algebra;
    }
  }
  r.checks.push_back(Check{"closed form vs pipeline on " + std::to_string(sample.size()) + " points", "0 mismatches",
                           std::to_string(mismatches) + " mismatches" + (first.empty() ? "" : " (first: " + first + ")"),
                           mismatches == 0});
  for (const auto& [name, p] : delta_zero_witnesses())
    r.checks.push_back(compare_value("delta = 0 witness " + name, name, identify_nilpotent(build_instance(p).algebra).name));
  return r;
}

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : ", ") + s;
  return out;
}

SuiteReport suite_calibrated() {
  SuiteReport r{"calibrated", {}};
  const std::vector<std::string> g2 = {"n_{7,2}", "A_{5,1}⊕R^2", "R^7"};
  std::vector<std::string> all;
  for (const auto& e : nilpotent_catalog()) all.push_back(e.name);
  std::vector<std::string> not_a41;
  std::copy_if(all.begin(), all.end(), std::back_inserter(not_a41), [](const std::string& s) { return s != "A_{4,1}⊕R^3"; });
  const auto check = [&](const std::string& name, const std::vector<std::string>& expected, const std::vector<std::string>& computed) {
    r.checks.push_back(Check{name, join(expected), join(computed), expected == computed});
  };
  check("calibrated G2", g2, calibrated_nilpotent_list(Mode::g2));
  check("calibrated G2*, u of signature (2,4)", g2, calibrated_nilpotent_list(Mode::g2star_24));
  check("calibrated G2*, degenerate u", not_a41, calibrated_nilpotent_list(Mode::g2star_deg));
  check("parallel G2*, u of signature (2,4)", g2, parallel_nondeg_nilpotent_list(Mode::g2star_24));
  check("parallel G2*, u of signature (3,3)", g2, parallel_nondeg_nilpotent_list(Mode::g2star_33));
  r.checks.push_back(compare_value("witness for (3,1,1,1)", false, nilpotent_witnesses(make_partition({3, 1, 1, 1})).has_value()));
  return r;
}

}  // namespace

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::string SuiteReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.pass) return suite + ": " + c.name;
  return {};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"g2metric", "witt",  "stabilizers", "example_a",
                                                 "example_b", "table1", "sweep",       "calibrated"};
  return names;
}

std::vector<SuiteReport> reproduce(std::string_view which, const ReproduceOptions& opts) {
  const std::vector<std::pair<std::string, std::function<SuiteReport()>>> suites = {
      {"g2metric", suite_g2metric},
      {"witt", suite_witt},
      {"stabilizers", suite_stabilizers},
      {"example_a", suite_example_a},
      {"example_b", suite_example_b},
      {"table1", suite_table1},
      {"sweep", [&] { return suite_sweep(opts); }},
      {"calibrated", suite_calibrated},
  };
  std::vector<SuiteReport> out;
  for (const auto& [name, run] : suites)
    if (which == "all" || which == name) out.push_back(run());
  if (out.empty()) throw DomainError("unknown reproduction suite '" + std::string(which) + "'");
  return out;
}

}  // namespace g2aa

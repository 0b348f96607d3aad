#include "g2aa/g2.hpp"

#include <cmath>

#include "g2aa/error.hpp"

namespace g2aa {

namespace {

void check_eps(int eps) {
  if (eps != 1 && eps != -1) throw DomainError("eps must be -1 or +1");
}

std::vector<Matrix> to_matrices(const std::vector<Vector>& flat, std::size_t n) {
  std::vector<Matrix> out;
  out.reserve(flat.size());
  for (const auto& v : flat) out.push_back(Matrix::from_flat(v, n, n));
  return out;
}

}  // namespace

KForm model_phi(int eps) {
  check_eps(eps);
  return KForm::from_terms(7, 3,
                           {{{1, 2, 7}, -eps}, {{3, 4, 7}, -eps}, {{5, 6, 7}, 1}, {{1, 3, 5}, 1},
                            {{1, 4, 6}, -1}, {{2, 3, 6}, -1}, {{2, 4, 5}, -1}});
}

KForm model_omega(int eps) {
  check_eps(eps);
  return KForm::from_terms(6, 2, {{{1, 2}, -eps}, {{3, 4}, -eps}, {{5, 6}, 1}});
}

KForm model_rho(int eps) {
  check_eps(eps);
  return KForm::from_terms(6, 3, {{{1, 3, 5}, 1}, {{1, 4, 6}, eps}, {{2, 3, 6}, eps}, {{2, 4, 5}, eps}});
}

KForm model_rho0() { return KForm::from_terms(6, 3, {{{1, 2, 6}, 1}, {{1, 3, 5}, -1}, {{2, 3, 4}, 1}}); }

KForm model_Omega0() { return KForm::from_terms(6, 4, {{{1, 2, 5, 6}, 1}, {{3, 4, 5, 6}, 1}}); }

KForm model_half_omega_squared(int eps) {
  const KForm w = model_omega(eps);
  return wedge(w, w) * Scalar::fraction(1, 2);
}

const std::vector<std::string>& model_tensor_names() {
  static const std::vector<std::string> names = {"phi_minus", "phi_plus",  "rho_minus",   "rho_plus",
                                                 "rho_0",     "Omega_0",   "omega_minus", "omega_plus"};
  return names;
}

KForm model_tensor(std::string_view name) {
  if (name == "phi_minus") return model_phi(-1);
  if (name == "phi_plus") return model_phi(1);
  if (name == "rho_minus") return model_rho(-1);
  if (name == "rho_plus") return model_rho(1);
  if (name == "rho_0") return model_rho0();
  if (name == "Omega_0") return model_Omega0();
  if (name == "omega_minus") return model_omega(-1);
  if (name == "omega_plus") return model_omega(1);
  throw DomainError("unknown model tensor '" + std::string(name) + "'");
}

KForm witt_phi() {
  return KForm::from_terms(7, 3,
                           {{{1, 5, 6}, -1},
                            {{2, 3, 6}, -1},
                            {{2, 4, 5}, 1},
                            {{1, 2, 7}, Scalar::fraction(-1, 2)},
                            {{3, 4, 7}, -1}});
}

KForm witt_star_phi() {
  return KForm::from_terms(7, 4,
                           {{{1, 2, 5, 6}, 1},
                            {{3, 4, 5, 6}, 1},
                            {{1, 3, 6, 7}, Scalar::fraction(1, 2)},
                            {{1, 4, 5, 7}, Scalar::fraction(-1, 2)},
                            {{2, 3, 4, 7}, 1}});
}

Matrix witt_metric() {
  Matrix g(7, 7);
  g(1, 1) = -1;
  g(0, 6) = g(6, 0) = Scalar::fraction(1, 2);
  g(2, 5) = g(5, 2) = 1;
  g(3, 4) = g(4, 3) = -1;
  return g;
}

std::vector<Matrix> stabilizer_algebra(const KForm& a) {
  return to_matrices(kernel(action_matrix(a)), a.dim());
}

std::vector<Matrix> joint_stabilizer_algebra(const KForm& a, const KForm& b) {
  if (a.dim() != b.dim()) throw DimensionError("joint_stabilizer_algebra: dimension mismatch");
  const Matrix ma = action_matrix(a), mb = action_matrix(b);
  Matrix stacked(ma.rows() + mb.rows(), ma.cols());
  stacked.set_block(0, 0, ma);
  stacked.set_block(ma.rows(), 0, mb);
  return to_matrices(kernel(stacked), a.dim());
}

bool in_stabilizer(const Matrix& A, const KForm& a) { return gl_action(A, a).is_zero(); }

Matrix structure_map(const KForm& rho) {
  if (rho.dim() != 6 || rho.degree() != 3) throw DimensionError("structure_map needs a three-form on a six-dimensional space");
  Matrix K(6, 6);
  const Mask full = (Mask{1} << 6) - 1u;
  for (int i = 1; i <= 6; ++i) {
    const KForm beta = wedge(interior(i, rho), rho);
    for (int j = 1; j <= 6; ++j) {
      const Scalar bj = beta.coefficient(full & ~(Mask{1} << (j - 1)));
      K(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(i - 1)) = (j % 2 == 1) ? bj : -bj;
    }
  }
  return K;
}

Scalar lambda_invariant(const KForm& rho) {
  const Matrix K = structure_map(rho);
  return (K * K).trace() / Scalar(6);
}

std::string to_string(FrameKind k) {
  switch (k) {
    case FrameKind::adapted:
      return "adapted";
    case FrameKind::witt:
      return "witt";
    case FrameKind::generic:
      return "generic";
  }
  return "generic";
}

const Matrix& G2EpsStructure::exact_metric() const {
  if (!metric) throw DomainError("exact metric required but only a floating-point metric is available");
  return *metric;
}

const KForm& G2EpsStructure::exact_vol() const {
  if (!vol) throw DomainError("exact volume form required but only a floating-point one is available");
  return *vol;
}

KForm G2EpsStructure::star_phi() const { return hodge_star(phi, exact_metric(), exact_vol()); }

G2EpsStructure certify_g2(const KForm& phi, double tol) {
  if (phi.dim() != 7 || phi.degree() != 3) throw NotG2Error("a G2-structure is a three-form in dimension seven");
  G2EpsStructure s;
  s.phi = phi;

  s.stabilizer_dim = 49 - rank(action_matrix(phi));
  if (s.stabilizer_dim != 14)
    throw NotG2Error("stabilizer has dimension " + std::to_string(s.stabilizer_dim) + ", expected 14");

  const Mask top = (Mask{1} << 7) - 1u;
  std::vector<KForm> contractions;
  for (int i = 1; i <= 7; ++i) contractions.push_back(interior(i, phi));
  Matrix b(7, 7);
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = i; j < 7; ++j) {
      const Scalar c = wedge(wedge(contractions[i], contractions[j]), phi).coefficient(top) / Scalar(6);
      b(i, j) = c;
      b(j, i) = c;
    }
  s.bilinear = b;

  const Scalar det_b = determinant(b);
  if (det_b.is_zero()) throw NotG2Error("the induced bilinear form is degenerate");
  const Signature sb = signature(b);

  int scale_sign = 0;
  if (sb.p == 7 || sb.q == 7) {
    s.eps = -1;
    scale_sign = sb.p == 7 ? 1 : -1;
  } else if ((sb.p == 3 && sb.q == 4) || (sb.p == 4 && sb.q == 3)) {
    s.eps = 1;
    scale_sign = sb.p == 3 ? 1 : -1;
  } else {
    throw NotG2Error("the induced bilinear form has signature (" + std::to_string(sb.p) + "," +
                     std::to_string(sb.q) + ")");
  }
  s.signature = s.eps < 0 ? Signature{7, 0, 0} : Signature{3, 4, 0};

  // metric = b / nu and vol = nu e^{1..7} with |nu|^9 = |det b|.
  Scalar root;
  const double nu_approx = scale_sign * std::pow(std::abs(det_b.to_double()), 1.0 / 9.0);
  s.vol_approx = nu_approx;
  s.metric_approx.resize(49);
  if (exact_odd_root(det_b.abs(), 9, root)) {
    const Scalar nu = scale_sign > 0 ? root : -root;
    Matrix g = b * nu.inverse();
    for (std::size_t k = 0; k < 49; ++k) s.metric_approx[k] = g.flat()[k].to_double();
    s.vol_approx = nu.to_double();
    s.signature = signature(g);
    s.metric = std::move(g);
    s.vol = volume_form(7, nu);
  } else {
    for (std::size_t k = 0; k < 49; ++k) s.metric_approx[k] = b.flat()[k].to_double() / nu_approx;
    // Defining relation: vol must be the metric volume, |det g| = nu^2.
    const double det_g = det_b.to_double() / std::pow(nu_approx, 7);
    s.fallback_residual = std::abs(std::abs(det_g) - nu_approx * nu_approx) / (nu_approx * nu_approx);
    if (!(s.fallback_residual <= tol))
      throw Error("floating-point metric normalization failed the tolerance check");
  }

  if (phi == model_phi(s.eps))
    s.frame_kind = FrameKind::adapted;
  else if (phi == witt_phi())
    s.frame_kind = FrameKind::witt;
  return s;
}

WittFrame witt_frame_from_adapted() {
  const Scalar h = Scalar::sqrt2() / Scalar(2);
  Matrix T(7, 7);
  T(0, 0) = 1;
  T(0, 6) = 1;
  T(1, 1) = 1;
  T(2, 2) = h;
  T(2, 5) = h;
  T(3, 3) = h;
  T(3, 4) = h;
  T(4, 3) = h;
  T(4, 4) = -h;
  T(5, 5) = h;
  T(5, 2) = -h;
  T(6, 0) = -1;
  T(6, 6) = 1;
  return WittFrame{T, inverse(T)};
}

std::string to_string(HyperplaneModel m) {
  switch (m) {
    case HyperplaneModel::rho_minus_half_omega_minus_sq:
      return "(rho_-1, 1/2 omega_-1^2)";
    case HyperplaneModel::rho_minus_half_omega_plus_sq:
      return "(rho_-1, 1/2 omega_1^2)";
    case HyperplaneModel::rho_plus_minus_half_omega_minus_sq:
      return "(rho_1, -1/2 omega_-1^2)";
    case HyperplaneModel::rho0_Omega0:
      return "(rho_0, Omega_0)";
  }
  return "";
}

HyperplaneAnalysis hyperplane_model_type(const G2EpsStructure& s, const Vector& covector) {
  if (covector.size() != 7) throw DimensionError("hyperplane covector must have seven entries");
  bool nonzero = false;
  for (const auto& c : covector) nonzero = nonzero || !c.is_zero();
  if (!nonzero) throw DomainError("hyperplane covector is zero");

  Matrix w(1, 7);
  for (std::size_t i = 0; i < 7; ++i) w(0, i) = covector[i];
  const Matrix P = Matrix::from_columns(kernel(w), 7);
  const Matrix& g = s.exact_metric();

  HyperplaneAnalysis out{HyperplaneModel::rho0_Omega0, signature(P.transpose() * g * P), Scalar(0), P,
                         pullback(s.phi, P), pullback(s.star_phi(), P)};
  out.lambda = lambda_invariant(out.rho);
  const int ls = out.lambda.sign();
  const Signature& sig = out.restricted_signature;

  int expected_lambda = 0;
  if (sig.z > 0) {
    out.model = HyperplaneModel::rho0_Omega0;
    expected_lambda = 0;
    if (structure_map(out.rho).is_zero()) throw Error("degenerate hyperplane with vanishing structure map");
  } else if (s.eps < 0) {
    out.model = HyperplaneModel::rho_minus_half_omega_minus_sq;
    expected_lambda = -1;
  } else if (sig.p == 2) {
    out.model = HyperplaneModel::rho_minus_half_omega_plus_sq;
    expected_lambda = -1;
  } else {
    out.model = HyperplaneModel::rho_plus_minus_half_omega_minus_sq;
    expected_lambda = 1;
  }
  if (ls != expected_lambda) throw Error("orbit invariant disagrees with the restricted metric signature");
  return out;
}

}  // namespace g2aa

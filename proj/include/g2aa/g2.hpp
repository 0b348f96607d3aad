#ifndef G2AA_G2_HPP
#define G2AA_G2_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "g2aa/exterior.hpp"
#include "g2aa/matrix.hpp"

namespace g2aa {

// Model tensors; eps is -1 or +1.
KForm model_phi(int eps);    ///< -eps(e127+e347)+e567+e135-e146-e236-e245 on R^7
KForm model_omega(int eps);  ///< -eps(e12+e34)+e56 on R^6
KForm model_rho(int eps);    ///< e135+eps(e146+e236+e245) on R^6
KForm model_rho0();          ///< e126-e135+e234
KForm model_Omega0();        ///< e1256+e3456
/// Half the square of model_omega(eps).
KForm model_half_omega_squared(int eps);

/// Model tensor by CLI name: phi_minus, phi_plus, rho_minus, rho_plus,
/// rho_0, Omega_0, omega_minus, omega_plus.
KForm model_tensor(std::string_view name);
const std::vector<std::string>& model_tensor_names();

/// Three-form, dual four-form and metric in a Witt basis.
KForm witt_phi();
KForm witt_star_phi();
Matrix witt_metric();

/// Basis of {A : A.a = 0}, as n x n matrices.
std::vector<Matrix> stabilizer_algebra(const KForm& a);
std::vector<Matrix> joint_stabilizer_algebra(const KForm& a, const KForm& b);
bool in_stabilizer(const Matrix& A, const KForm& a);

/// Structure map K of a three-form on a six-dimensional space:
/// K(e_i) ⌟ e^{1..6} = (e_i ⌟ rho) ^ rho.
Matrix structure_map(const KForm& rho);
/// tr(K^2)/6: negative on the orbit of rho_{-1}, positive on that of
/// rho_1, zero (with K != 0) on that of rho_0.
Scalar lambda_invariant(const KForm& rho);

enum class FrameKind { adapted, witt, generic };
std::string to_string(FrameKind k);

struct G2EpsStructure {
  KForm phi;
  int eps = 0;
  /// Coefficient matrix of (1/6)(v⌟phi)^(w⌟phi)^phi against e^{1..7}.
  Matrix bilinear;
  /// Induced metric; present whenever the normalizing ninth root is exact.
  std::optional<Matrix> metric;
  std::optional<KForm> vol;
  /// Row-major metric and volume coefficient as doubles (always filled).
  std::vector<double> metric_approx;
  double vol_approx = 0.0;
  /// Largest defect of the defining relation in the float fallback.
  double fallback_residual = 0.0;
  Signature signature;
  std::size_t stabilizer_dim = 0;
  FrameKind frame_kind = FrameKind::generic;

  bool exact() const { return metric.has_value(); }
  const Matrix& exact_metric() const;
  const KForm& exact_vol() const;
  /// Hodge dual of phi with respect to the exact metric and volume.
  KForm star_phi() const;
};

/// Default tolerance of the float fallback for the metric normalization.
inline constexpr double kFallbackTolerance = 1e-9;

/// Certifies a G2 (eps=-1) or G2* (eps=+1) three-form; throws NotG2Error.
G2EpsStructure certify_g2(const KForm& phi, double tol = kFallbackTolerance);

/// Basis change of the Witt construction. The coframe row i gives F^i in
/// terms of f^1..f^7; basis_change is its inverse, whose columns are the
/// vectors F_i in the adapted basis.
struct WittFrame {
  Matrix coframe;
  Matrix basis_change;

  KForm to_witt(const KForm& a) const { return pullback(a, basis_change); }
  Matrix metric_to_witt(const Matrix& g) const { return basis_change.transpose() * g * basis_change; }
};

WittFrame witt_frame_from_adapted();

enum class HyperplaneModel { rho_minus_half_omega_minus_sq, rho_minus_half_omega_plus_sq, rho_plus_minus_half_omega_minus_sq, rho0_Omega0 };
std::string to_string(HyperplaneModel m);

struct HyperplaneAnalysis {
  HyperplaneModel model;
  Signature restricted_signature;
  Scalar lambda;
  Matrix basis;        ///< 7 x 6, columns span the hyperplane
  KForm rho;           ///< phi restricted to the hyperplane
  KForm sigma;         ///< star phi restricted to the hyperplane
};

/// Model type of (phi|W, star phi|W) for W = ker(covector).
HyperplaneAnalysis hyperplane_model_type(const G2EpsStructure& s, const Vector& covector);

}  // namespace g2aa

#endif  // G2AA_G2_HPP

#ifndef G2AA_GEOMETRY_HPP
#define G2AA_GEOMETRY_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "g2aa/exterior.hpp"
#include "g2aa/liealg.hpp"
#include "g2aa/matrix.hpp"

namespace g2aa {

/// Left-invariant Levi-Civita connection. nabla[i] is the matrix of
/// Y -> nabla_{f_{i+1}} Y, so column j of nabla[i] is nabla_{f_{i+1}} f_{j+1}.
struct ConnectionTable {
  std::vector<Matrix> nabla;
  Matrix metric;

  std::size_t dim() const { return nabla.size(); }
  /// nabla_X as an endomorphism, for X given in the basis.
  Matrix along(const Vector& x) const;
};

/// Koszul formula; throws DegenerateMetricError for singular metrics.
ConnectionTable levi_civita(const AlmostAbelianAlgebra& g, const Matrix& metric);

struct CurvatureReport {
  /// R(f_i, f_j) for 1 <= i < j <= n, including vanishing ones.
  std::map<std::pair<int, int>, Matrix> R;
  Matrix ricci;
  std::vector<Matrix> hol_basis;
  bool is_flat = false;
  bool is_ricci_flat = false;
  bool is_locally_symmetric = false;
  bool hol_abelian = false;
  /// Unset when no three-form was supplied.
  std::optional<bool> hol_annihilates_phi;

  std::size_t dim() const;
  std::size_t hol_dim() const { return hol_basis.size(); }
  /// R(f_i, f_j) for any i, j (1-based).
  Matrix curvature(int i, int j) const;
  /// R(X, Y) for vectors in the basis.
  Matrix curvature(const Vector& x, const Vector& y) const;
};

/// R(X,Y) = [nabla_X, nabla_Y] - nabla_{[X,Y]}; Ricci(Y,Z) = tr(X -> R(X,Y)Z).
/// Only R and ricci are filled.
CurvatureReport curvature(const ConnectionTable& conn, const AlmostAbelianAlgebra& g);

/// Derivative of an endomorphism field along f_z: [nabla_z, E].
Matrix nabla_endomorphism(const ConnectionTable& conn, int z, const Matrix& E);
/// Full covariant derivative (nabla_{f_z} R)(f_x, f_y).
Matrix nabla_R(const ConnectionTable& conn, const CurvatureReport& rep, int z, int x, int y);
/// Whether the full covariant derivative of R vanishes identically.
bool is_locally_symmetric(const ConnectionTable& conn, const CurvatureReport& rep);

struct HolonomyResult {
  std::vector<Matrix> basis;
  std::size_t rounds = 0;
};

/// Span of the curvature endomorphisms closed under nabla_{f_z} for all z.
HolonomyResult holonomy_algebra(const ConnectionTable& conn, const CurvatureReport& rep);

bool annihilates(const KForm& phi, const std::vector<Matrix>& h);
bool is_abelian(const std::vector<Matrix>& h);
/// Whether the span of h is closed under commutators.
bool is_subalgebra(const std::vector<Matrix>& h);

/// Full pipeline: connection, curvature, Ricci, local symmetry, holonomy.
CurvatureReport analyze(const AlmostAbelianAlgebra& g, const Matrix& metric,
                        const std::optional<KForm>& phi = std::nullopt);

/// Endomorphism c f^i ⊗ f_j of an n-dimensional space (1-based).
Matrix elementary_endo(std::size_t n, int i, int j, const Scalar& c = Scalar(1));
/// Endomorphism as a sum of terms c*f^i⊗f_j, e.g. "-f^6⊗f_1+1/2*f^7⊗f_3".
std::string endo_to_string(const Matrix& m);

}  // namespace g2aa

#endif  // G2AA_GEOMETRY_HPP

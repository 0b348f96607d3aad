#ifndef G2AA_EXTERIOR_HPP
#define G2AA_EXTERIOR_HPP

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "g2aa/matrix.hpp"

namespace g2aa {

/// Bit i-1 set means the covector e^i is a factor.
using Mask = std::uint32_t;

using Indices = std::vector<int>;

Mask mask_of(const Indices& idx);
Indices indices_of(Mask m);
/// All masks of popcount k among n bits, in lexicographic order of their
/// index tuples.
std::vector<Mask> masks_of_degree(std::size_t n, std::size_t k);

/// Alternating k-form on an n-dimensional space, stored sparsely by mask.
/// Zero coefficients are never stored.
class KForm {
 public:
  KForm() = default;
  KForm(std::size_t dim, std::size_t degree);

  static KForm constant(std::size_t dim, const Scalar& c);
  /// c * e^{i1} ^ ... ^ e^{ik}; indices are 1-based and may be unsorted, in
  /// which case the permutation sign is applied.
  static KForm basis(std::size_t dim, const Indices& idx, const Scalar& c = Scalar(1));
  /// Sum of basis terms; all index lists must have the same length.
  static KForm from_terms(std::size_t dim, std::size_t degree,
                          const std::vector<std::pair<Indices, Scalar>>& terms);

  /// Parses expressions like "-e127-1/2*e^{347}+(1+sqrt2)*f567". Any
  /// single letter may name the coframe.
  static KForm parse(std::size_t dim, std::string_view text);

  std::size_t dim() const { return dim_; }
  std::size_t degree() const { return degree_; }
  bool is_zero() const { return coeffs_.empty(); }

  Scalar coefficient(Mask m) const;
  Scalar coefficient(const Indices& idx) const;
  void add_term(Mask m, const Scalar& c);

  const std::map<Mask, Scalar>& raw() const { return coeffs_; }
  /// Terms sorted lexicographically by index tuple.
  std::vector<std::pair<Indices, Scalar>> terms() const;

  KForm& operator+=(const KForm& o);
  KForm& operator-=(const KForm& o);
  KForm& operator*=(const Scalar& s);
  friend KForm operator+(KForm a, const KForm& b) { return a += b; }
  friend KForm operator-(KForm a, const KForm& b) { return a -= b; }
  friend KForm operator*(KForm a, const Scalar& s) { return a *= s; }
  friend KForm operator*(const Scalar& s, KForm a) { return a *= s; }
  KForm operator-() const;

  friend bool operator==(const KForm& a, const KForm& b) {
    return a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
  }

  /// Same notation as parse, with multi-digit indices comma separated.
  std::string to_string(char letter = 'e') const;

 private:
  std::size_t dim_ = 0;
  std::size_t degree_ = 0;
  std::map<Mask, Scalar> coeffs_;
};

KForm wedge(const KForm& a, const KForm& b);
/// Contraction with the i-th basis vector (1-based).
KForm interior(int i, const KForm& a);
KForm interior(const Vector& v, const KForm& a);

/// Derivation action of gl(n): on 1-forms (A.a)(v) = -a(Av).
KForm gl_action(const Matrix& A, const KForm& a);

/// Linear map A -> A.a as a matrix: columns indexed by the entries of A in
/// row-major order, rows by the degree-k masks in lexicographic order.
Matrix action_matrix(const KForm& a);

/// Metric pairing on forms induced by g.
Scalar inner_product(const KForm& a, const KForm& b, const Matrix& g);

/// Hodge star with a * star(b) = <a,b>_g vol.
KForm hodge_star(const KForm& b, const Matrix& g, const KForm& vol);

/// Pullback under the linear map whose transpose sends e^j to
/// sum_i P(j,i) E^i; P has a.dim() rows and the new dimension as columns.
KForm pullback(const KForm& a, const Matrix& P);

KForm volume_form(std::size_t dim, const Scalar& c = Scalar(1));

}  // namespace g2aa

#endif  // G2AA_EXTERIOR_HPP

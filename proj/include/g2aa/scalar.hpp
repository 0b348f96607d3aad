#ifndef G2AA_SCALAR_HPP
#define G2AA_SCALAR_HPP

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace g2aa {

/// Exact element a + b*sqrt(2) of the quadratic field Q(sqrt 2).
///
/// Both parts are GMP rationals kept in canonical form (lowest terms,
/// positive denominator). All arithmetic is exact; the only inexact
/// operation is to_double().
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : rat_(value) {}  // NOLINT: implicit by design of the field embedding
  explicit Scalar(mpq_class rat, mpq_class root2 = 0);

  static Scalar fraction(long num, long den);
  static Scalar sqrt2() { return Scalar(mpq_class(0), mpq_class(1)); }

  /// Parses the canonical text form "p/q", "p/q*sqrt2" or "p/q+r/s*sqrt2".
  /// Also accepts a bare "sqrt2" and integer parts without a denominator.
  static Scalar parse(std::string_view text);

  /// Canonical text form: rational part alone when the root part vanishes,
  /// "r/s*sqrt2" when the rational part vanishes, "p/q+r/s*sqrt2" otherwise.
  std::string to_string() const;

  const mpq_class& rat_part() const { return rat_; }
  const mpq_class& root2_part() const { return root2_; }

  bool is_zero() const { return sgn(rat_) == 0 && sgn(root2_) == 0; }
  bool is_rational() const { return sgn(root2_) == 0; }
  bool is_one() const { return is_rational() && rat_ == 1; }

  /// Exact sign of the real number a + b*sqrt(2).
  int sign() const;

  /// Galois conjugate a - b*sqrt(2).
  Scalar conjugate() const { return Scalar(rat_, -root2_); }
  /// Field norm a^2 - 2 b^2.
  mpq_class norm() const { return rat_ * rat_ - 2 * root2_ * root2_; }
  Scalar inverse() const;
  Scalar abs() const { return sign() < 0 ? -*this : *this; }

  double to_double() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const { return Scalar(-rat_, -root2_); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.rat_ == b.rat_ && a.root2_ == b.root2_;
  }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

 private:
  mpq_class rat_{0};
  mpq_class root2_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Best-effort exact real k-th root (k odd) of s inside Q(sqrt 2).
/// Returns false when no root exists in the field.
bool exact_odd_root(const Scalar& s, unsigned k, Scalar& root);

}  // namespace g2aa

#endif  // G2AA_SCALAR_HPP

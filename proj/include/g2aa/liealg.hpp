#ifndef G2AA_LIEALG_HPP
#define G2AA_LIEALG_HPP

#include <string>
#include <string_view>
#include <vector>

#include "g2aa/exterior.hpp"
#include "g2aa/matrix.hpp"

namespace g2aa {

/// Lie algebra u x| R f_n with u = span(f_1..f_{n-1}) Abelian and
/// [f_n, f_i] = ad * f_i. The last basis index is always f_n.
class AlmostAbelianAlgebra {
 public:
  AlmostAbelianAlgebra() = default;
  explicit AlmostAbelianAlgebra(Matrix ad);

  std::size_t dim() const { return ad_.rows() + 1; }
  const Matrix& ad() const { return ad_; }

  /// Bracket of two vectors in the basis f_1..f_n.
  Vector bracket(const Vector& x, const Vector& y) const;
  /// Bracket of basis vectors, 1-based.
  Vector bracket(int i, int j) const;

  bool is_abelian() const { return ad_.is_zero(); }
  bool is_nilpotent() const { return g2aa::is_nilpotent(ad_); }

  friend bool operator==(const AlmostAbelianAlgebra&, const AlmostAbelianAlgebra&) = default;

 private:
  Matrix ad_;
};

/// Chevalley-Eilenberg differential: for a = rho + sigma ^ f^n with rho,
/// sigma free of f^n, da = f^n ^ (ad . rho).
KForm differential(const AlmostAbelianAlgebra& g, const KForm& a);

/// Forms on u may be given either on u itself (dimension n-1) or on g
/// without any f^n component.
bool is_closed(const AlmostAbelianAlgebra& g, const KForm& a);
bool is_stabilized(const AlmostAbelianAlgebra& g, const KForm& a);

/// Restriction of a form on g to u = span(f_1..f_{n-1}).
KForm restrict_to_ideal(const KForm& a);
/// Extension of a form on u to g by zero on f_n.
KForm extend_from_ideal(const KForm& a);

struct SegrePartition {
  std::vector<int> parts;  ///< weakly decreasing

  int total() const;
  std::string to_string() const;
  friend bool operator==(const SegrePartition&, const SegrePartition&) = default;
  friend auto operator<=>(const SegrePartition&, const SegrePartition&) = default;
};

SegrePartition make_partition(std::vector<int> parts);
/// All partitions of n, in reverse lexicographic order.
std::vector<SegrePartition> partitions_of(int n);

/// Jordan block sizes of a nilpotent matrix from the ranks of its powers.
SegrePartition segre_partition(const Matrix& m);

/// Nilpotent matrix in Jordan form with the given block sizes; ones on the
/// subdiagonal of every block.
Matrix jordan_matrix(const SegrePartition& p);

struct NilpotentCatalogEntry {
  std::string name;
  SegrePartition partition;
  std::vector<std::string> dual_brackets;  ///< (de^1, ..., de^7)
};

/// The eleven seven-dimensional nilpotent almost Abelian Lie algebras.
const std::vector<NilpotentCatalogEntry>& nilpotent_catalog();
/// Lookup by name; "+" is accepted for the direct sum and subscripts may
/// be written without braces ("n72", "A51+R2").
const NilpotentCatalogEntry& catalog_entry(std::string_view name);
const NilpotentCatalogEntry& catalog_entry(const SegrePartition& p);

NilpotentCatalogEntry identify_nilpotent(const AlmostAbelianAlgebra& g);

/// Representative almost Abelian algebra with the entry's Jordan type.
AlmostAbelianAlgebra catalog_algebra(const NilpotentCatalogEntry& e);

}  // namespace g2aa

#endif  // G2AA_LIEALG_HPP

#ifndef G2AA_MATRIX_HPP
#define G2AA_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "g2aa/scalar.hpp"

namespace g2aa {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over Q(sqrt 2).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix diagonal(const Vector& d);
  /// Matrix whose columns are the given vectors.
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);
  /// Square matrix of the given size filled row by row from v.
  static Matrix from_flat(const Vector& v, std::size_t rows, std::size_t cols);
  /// Block matrix assembled from a grid of equally shaped rows of blocks.
  static Matrix from_blocks(const std::vector<std::vector<Matrix>>& blocks);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const Vector& flat() const { return data_; }
  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;

  Matrix transpose() const;
  Scalar trace() const;
  bool is_zero() const;
  bool is_symmetric() const;

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

  Vector apply(const Vector& v) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  Matrix operator-() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vector data_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

Matrix commutator(const Matrix& a, const Matrix& b);
Matrix power(const Matrix& m, unsigned k);

/// Row echelon form by fraction-free elimination; pivots receives the pivot
/// column of each nonzero row.
Matrix echelon(const Matrix& m, std::vector<std::size_t>* pivots = nullptr);

std::size_t rank(const Matrix& m);
Scalar determinant(const Matrix& m);
Matrix inverse(const Matrix& m);

/// Basis of the null space, one vector per free column, each with a 1 in
/// its own free position.
std::vector<Vector> kernel(const Matrix& m);

struct Signature {
  std::size_t p = 0;  ///< positive
  std::size_t q = 0;  ///< negative
  std::size_t z = 0;  ///< zero
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Sylvester signature by exact congruence diagonalization.
Signature signature(const Matrix& sym);

bool is_nilpotent(const Matrix& m);

/// Incrementally grown linear span of vectors of fixed length.
class SpanBuilder {
 public:
  explicit SpanBuilder(std::size_t length) : length_(length) {}

  /// Adds v and returns true when it enlarged the span.
  bool add(const Vector& v);
  bool contains(const Vector& v) const;
  std::size_t dim() const { return reduced_.size(); }
  /// The independent vectors in the order they were accepted.
  const std::vector<Vector>& generators() const { return accepted_; }

 private:
  Vector reduce(Vector v) const;

  std::size_t length_;
  std::vector<Vector> reduced_;
  std::vector<std::size_t> pivot_;
  std::vector<Vector> accepted_;
};

}  // namespace g2aa

#endif  // G2AA_MATRIX_HPP

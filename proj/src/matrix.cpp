#include "g2aa/matrix.hpp"

#include <ostream>
#include <sstream>
#include <utility>

#include "g2aa/error.hpp"

namespace g2aa {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::diagonal(const Vector& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw DimensionError("from_columns: column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Matrix Matrix::from_flat(const Vector& v, std::size_t rows, std::size_t cols) {
  if (v.size() != rows * cols) throw DimensionError("from_flat: size mismatch");
  Matrix m(rows, cols);
  m.data_ = v;
  return m;
}

Matrix Matrix::from_blocks(const std::vector<std::vector<Matrix>>& blocks) {
  std::size_t total_rows = 0, total_cols = 0;
  for (const auto& b : blocks.front()) total_cols += b.cols();
  for (const auto& r : blocks) total_rows += r.front().rows();
  Matrix m(total_rows, total_cols);
  std::size_t r0 = 0;
  for (const auto& r : blocks) {
    std::size_t c0 = 0;
    for (const auto& b : r) {
      if (b.rows() != r.front().rows()) throw DimensionError("from_blocks: inconsistent block heights");
      m.set_block(r0, c0, b);
      c0 += b.cols();
    }
    if (c0 != total_cols) throw DimensionError("from_blocks: inconsistent block widths");
    r0 += r.front().rows();
  }
  return m;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::column(std::size_t j) const {
  Vector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Scalar Matrix::trace() const {
  if (!is_square()) throw DimensionError("trace of a non-square matrix");
  Scalar t;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionError("block out of range");
  Matrix b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw DimensionError("set_block out of range");
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw DimensionError("matrix-vector size mismatch");
  Vector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Scalar& a = (*this)(i, j);
      if (!a.is_zero() && !v[j].is_zero()) out[i] += a * v[j];
    }
  return out;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix sum shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix difference shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) c(i, j) += x * b(k, j);
    }
  return c;
}

Matrix Matrix::operator-() const {
  Matrix m = *this;
  for (auto& x : m.data_) x = -x;
  return m;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) { return os << m.to_string(); }

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix power(const Matrix& m, unsigned k) {
  if (!m.is_square()) throw DimensionError("power of a non-square matrix");
  Matrix r = Matrix::identity(m.rows());
  Matrix base = m;
  while (k > 0) {
    if (k & 1u) r = r * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return r;
}

namespace {

// Bareiss elimination in place; returns the pivot columns. The sign of the
// row permutation is accumulated in *swap_sign when requested.
std::vector<std::size_t> bareiss(Matrix& a, int* swap_sign) {
  const std::size_t m = a.rows(), n = a.cols();
  std::vector<std::size_t> pivots;
  Scalar prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && a(p, c).is_zero()) ++p;
    if (p == m) continue;
    if (p != r) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(r, j));
      if (swap_sign) *swap_sign = -*swap_sign;
    }
    for (std::size_t i = r + 1; i < m; ++i) {
      for (std::size_t j = c + 1; j < n; ++j) {
        Scalar v = a(r, c) * a(i, j) - a(i, c) * a(r, j);
        if (!prev.is_one()) v /= prev;
        a(i, j) = std::move(v);
      }
      a(i, c) = 0;
    }
    // Columns left of c in rows below r are already zero.
    prev = a(r, c);
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Matrix echelon(const Matrix& m, std::vector<std::size_t>* pivots) {
  Matrix a = m;
  auto piv = bareiss(a, nullptr);
  if (pivots) *pivots = std::move(piv);
  return a;
}

std::size_t rank(const Matrix& m) {
  Matrix a = m;
  return bareiss(a, nullptr).size();
}

Scalar determinant(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Scalar(1);
  Matrix a = m;
  int sign = 1;
  auto piv = bareiss(a, &sign);
  if (piv.size() < n) return Scalar(0);
  // With full rank the last Bareiss pivot is the determinant.
  return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix a = m;
  Matrix inv = Matrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) throw DomainError("inverse of a singular matrix");
    if (p != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(p, j), a(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    const Scalar s = a(c, c).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) *= s;
      inv(c, j) *= s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c).is_zero()) continue;
      const Scalar f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        if (!a(c, j).is_zero()) a(i, j) -= f * a(c, j);
        if (!inv(c, j).is_zero()) inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

std::vector<Vector> kernel(const Matrix& m) {
  std::vector<std::size_t> pivots;
  const Matrix e = echelon(m, &pivots);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<Vector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector x(n);
    x[free] = 1;
    for (std::size_t r = pivots.size(); r-- > 0;) {
      const std::size_t c = pivots[r];
      Scalar s;
      for (std::size_t j = c + 1; j < n; ++j)
        if (!e(r, j).is_zero() && !x[j].is_zero()) s += e(r, j) * x[j];
      x[c] = -s / e(r, c);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

Signature signature(const Matrix& sym) {
  if (!sym.is_symmetric()) throw DomainError("signature of a non-symmetric matrix");
  Matrix a = sym;
  const std::size_t n = a.rows();
  Signature s;
  auto swap_index = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < n; ++k) std::swap(a(i, k), a(j, k));
    for (std::size_t k = 0; k < n; ++k) std::swap(a(k, i), a(k, j));
  };
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, p).is_zero()) ++p;
    if (p == n) {
      // Hyperbolic step: a_ij != 0 with zero diagonal; replacing e_i by
      // e_i + e_j creates the pivot 2 a_ij.
      std::size_t pi = n, pj = n;
      for (std::size_t i = k; i < n && pi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (!a(i, j).is_zero()) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == n) {
        s.z += n - k;
        break;
      }
      for (std::size_t c = 0; c < n; ++c) a(pi, c) += a(pj, c);
      for (std::size_t r = 0; r < n; ++r) a(r, pi) += a(r, pj);
      p = pi;
    }
    swap_index(k, p);
    const Scalar piv = a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      const Scalar f = a(i, k) / piv;
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
      for (std::size_t j = k; j < n; ++j) a(j, i) = a(i, j);
    }
    if (piv.sign() > 0)
      ++s.p;
    else
      ++s.q;
  }
  return s;
}

bool is_nilpotent(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("nilpotency of a non-square matrix");
  return power(m, static_cast<unsigned>(m.rows())).is_zero();
}

Vector SpanBuilder::reduce(Vector v) const {
  for (std::size_t r = 0; r < reduced_.size(); ++r) {
    const Scalar c = v[pivot_[r]];
    if (c.is_zero()) continue;
    const Vector& row = reduced_[r];
    for (std::size_t j = 0; j < length_; ++j)
      if (!row[j].is_zero()) v[j] -= c * row[j];
  }
  return v;
}

bool SpanBuilder::add(const Vector& v) {
  if (v.size() != length_) throw DimensionError("SpanBuilder: vector length mismatch");
  Vector r = reduce(v);
  std::size_t p = 0;
  while (p < length_ && r[p].is_zero()) ++p;
  if (p == length_) return false;
  const Scalar inv = r[p].inverse();
  for (auto& x : r) x *= inv;
  reduced_.push_back(std::move(r));
  pivot_.push_back(p);
  accepted_.push_back(v);
  return true;
}

bool SpanBuilder::contains(const Vector& v) const {
  if (v.size() != length_) throw DimensionError("SpanBuilder: vector length mismatch");
  for (const auto& x : reduce(v))
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace g2aa

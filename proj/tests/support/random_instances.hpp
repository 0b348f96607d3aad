#ifndef G2AA_TESTS_RANDOM_INSTANCES_HPP
#define G2AA_TESTS_RANDOM_INSTANCES_HPP

#include <random>

#include "g2aa/exterior.hpp"
#include "g2aa/liealg.hpp"
#include "g2aa/matrix.hpp"

namespace g2aa::testing {

using Rng = std::mt19937_64;

inline int rand_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// Small integer, occasionally a half-integer or an element with a sqrt(2) part.
inline Scalar rand_scalar(Rng& rng, int bound = 2) {
  const int kind = rand_int(rng, 0, 9);
  if (kind == 0) return Scalar::fraction(rand_int(rng, -bound, bound), 2);
  if (kind == 1) return Scalar(rand_int(rng, -bound, bound)) + Scalar(rand_int(rng, -1, 1)) * Scalar::sqrt2();
  return Scalar(rand_int(rng, -bound, bound));
}

inline Matrix rand_matrix(Rng& rng, std::size_t rows, std::size_t cols, int bound = 2) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rand_scalar(rng, bound);
  return m;
}

inline Matrix rand_int_matrix(Rng& rng, std::size_t rows, std::size_t cols, int bound = 2) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rand_int(rng, -bound, bound);
  return m;
}

inline Matrix rand_invertible(Rng& rng, std::size_t n) {
  for (;;) {
    Matrix m = rand_int_matrix(rng, n, n, 2);
    if (!determinant(m).is_zero()) return m;
  }
}

/// Sparse random k-form: each basis term present with probability 1/2.
inline KForm rand_form(Rng& rng, std::size_t n, std::size_t k) {
  KForm a(n, k);
  for (Mask m : masks_of_degree(n, k))
    if (rand_int(rng, 0, 1) == 1) a.add_term(m, rand_scalar(rng));
  return a;
}

/// Metric P^t D P with D = diag(+-1) and the matching volume det(P) e^{1..n}.
struct RandomMetric {
  Matrix g;
  KForm vol;
  std::size_t negatives = 0;
};

inline RandomMetric rand_metric(Rng& rng, std::size_t n) {
  const Matrix P = rand_invertible(rng, n);
  Vector d(n);
  std::size_t neg = 0;
  for (auto& x : d) {
    x = rand_int(rng, 0, 1) == 0 ? -1 : 1;
    if (x.sign() < 0) ++neg;
  }
  return RandomMetric{P.transpose() * Matrix::diagonal(d) * P, volume_form(n, determinant(P)), neg};
}

inline AlmostAbelianAlgebra rand_algebra(Rng& rng, std::size_t n, int bound = 2) {
  return AlmostAbelianAlgebra(rand_int_matrix(rng, n - 1, n - 1, bound));
}

inline Vector rand_vector(Rng& rng, std::size_t n) {
  Vector v(n);
  for (auto& x : v) x = rand_scalar(rng);
  return v;
}

}  // namespace g2aa::testing

#endif  // G2AA_TESTS_RANDOM_INSTANCES_HPP

#include <doctest.h>

#include <Eigen/Dense>
#include <algorithm>

#include "g2aa/error.hpp"
#include "g2aa/matrix.hpp"
#include "random_instances.hpp"

using namespace g2aa;

namespace {

Eigen::MatrixXd to_eigen(const Matrix& m) {
  Eigen::MatrixXd e(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) e(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m(r, c).to_double();
  return e;
}

/// Low-rank integer matrix as a product of random factors.
Matrix rand_low_rank(testing::Rng& rng, std::size_t n, std::size_t m) {
  const std::size_t k = static_cast<std::size_t>(testing::rand_int(rng, 0, static_cast<int>(std::min(n, m))));
  if (k == 0) return Matrix(n, m);
  return testing::rand_int_matrix(rng, n, k, 2) * testing::rand_int_matrix(rng, k, m, 2);
}

}  // namespace

TEST_CASE("rank and determinant agree with a floating-point oracle") {
  testing::Rng rng(3);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = static_cast<std::size_t>(testing::rand_int(rng, 1, 7));
    const std::size_t m = static_cast<std::size_t>(testing::rand_int(rng, 1, 7));
    const Matrix a = rand_low_rank(rng, n, m);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(to_eigen(a));
    lu.setThreshold(1e-9);
    CHECK(rank(a) == static_cast<std::size_t>(lu.rank()));
    const Matrix sq = testing::rand_int_matrix(rng, n, n, 3);
    CHECK(determinant(sq).to_double() == doctest::Approx(to_eigen(sq).determinant()).epsilon(1e-9));
  }
}

TEST_CASE("kernel, inverse and echelon") {
  testing::Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    const Matrix a = rand_low_rank(rng, 5, 6);
    const auto ker = kernel(a);
    CHECK(ker.size() == 6 - rank(a));
    for (const auto& v : ker) {
      const Vector av = a.apply(v);
      CHECK(std::all_of(av.begin(), av.end(), [](const Scalar& s) { return s.is_zero(); }));
    }
    const Matrix p = testing::rand_invertible(rng, 4) + Matrix::identity(4) * Scalar::sqrt2();
    if (!determinant(p).is_zero()) CHECK(p * inverse(p) == Matrix::identity(4));
  }
  CHECK_THROWS_AS(inverse(Matrix{{1, 2}, {2, 4}}), DomainError);
  std::vector<std::size_t> pivots;
  echelon(Matrix{{0, 1, 2}, {0, 2, 4}, {1, 0, 0}}, &pivots);
  CHECK(pivots == std::vector<std::size_t>{0, 1});
}

TEST_CASE("signature agrees with eigenvalue signs") {
  testing::Rng rng(7);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = static_cast<std::size_t>(testing::rand_int(rng, 1, 7));
    const Matrix b = rand_low_rank(rng, n, n);
    const Matrix sym = b + b.transpose();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(to_eigen(sym));
    Signature expected;
    for (double ev : es.eigenvalues()) {
      if (ev > 1e-8)
        ++expected.p;
      else if (ev < -1e-8)
        ++expected.q;
      else
        ++expected.z;
    }
    CHECK(signature(sym) == expected);
  }
  CHECK(signature(Matrix{{0, 1}, {1, 0}}) == Signature{1, 1, 0});
}

TEST_CASE("span builder and nilpotency") {
  SpanBuilder span(3);
  CHECK(span.add(Vector{1, 0, 1}));
  CHECK_FALSE(span.add(Vector{2, 0, 2}));
  CHECK(span.add(Vector{0, 1, 0}));
  CHECK(span.contains(Vector{3, -1, 3}));
  CHECK_FALSE(span.contains(Vector{0, 0, 1}));
  CHECK(span.dim() == 2);
  CHECK(is_nilpotent(Matrix{{0, 1}, {0, 0}}));
  CHECK_FALSE(is_nilpotent(Matrix{{0, 1}, {1, 0}}));
}

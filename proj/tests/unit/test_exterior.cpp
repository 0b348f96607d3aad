#include <doctest.h>

#include "g2aa/error.hpp"
#include "g2aa/exterior.hpp"
#include "random_instances.hpp"

using namespace g2aa;

TEST_CASE("basis forms carry permutation signs") {
  CHECK(KForm::basis(4, {2, 1}) == -KForm::basis(4, {1, 2}));
  CHECK(KForm::basis(4, {1, 1}).is_zero());
  CHECK(wedge(KForm::basis(3, {1}), KForm::basis(3, {2})) == KForm::basis(3, {1, 2}));
  CHECK(KForm::parse(7, "-e127-1/2*e^{347}") ==
        KForm::from_terms(7, 3, {{{1, 2, 7}, -1}, {{3, 4, 7}, Scalar::fraction(-1, 2)}}));
  CHECK(KForm::parse(6, "(1+sqrt2)*f56").coefficient(Indices{5, 6}) == Scalar(1) + Scalar::sqrt2());
  CHECK_THROWS_AS(KForm::parse(3, "e14"), Error);
}

TEST_CASE("wedge is graded commutative and associative") {
  testing::Rng rng(13);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = static_cast<std::size_t>(testing::rand_int(rng, 3, 7));
    const std::size_t k = static_cast<std::size_t>(testing::rand_int(rng, 0, 3));
    const std::size_t l = static_cast<std::size_t>(testing::rand_int(rng, 0, 3));
    const KForm a = testing::rand_form(rng, n, k), b = testing::rand_form(rng, n, l), c = testing::rand_form(rng, n, 1);
    const Scalar sign = (k * l) % 2 == 0 ? Scalar(1) : Scalar(-1);
    CHECK(wedge(a, b) == wedge(b, a) * sign);
    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
  }
}

TEST_CASE("interior product is an antiderivation") {
  testing::Rng rng(17);
  for (int t = 0; t < 100; ++t) {
    const std::size_t k = static_cast<std::size_t>(testing::rand_int(rng, 1, 3));
    const KForm a = testing::rand_form(rng, 6, k), b = testing::rand_form(rng, 6, 2);
    const Vector v = testing::rand_vector(rng, 6);
    const Scalar sign = k % 2 == 0 ? Scalar(1) : Scalar(-1);
    CHECK(interior(v, wedge(a, b)) == wedge(interior(v, a), b) + wedge(a, interior(v, b)) * sign);
    if (k >= 2) CHECK(interior(v, interior(v, a)).is_zero());
  }
}

TEST_CASE("gl action is a derivation and a Lie algebra representation") {
  testing::Rng rng(19);
  for (int t = 0; t < 60; ++t) {
    const Matrix A = testing::rand_matrix(rng, 5, 5), B = testing::rand_matrix(rng, 5, 5);
    const KForm a = testing::rand_form(rng, 5, 2), b = testing::rand_form(rng, 5, 2);
    CHECK(gl_action(A, wedge(a, b)) == wedge(gl_action(A, a), b) + wedge(a, gl_action(A, b)));
    CHECK(gl_action(commutator(A, B), a) == gl_action(A, gl_action(B, a)) - gl_action(B, gl_action(A, a)));
  }
  // On one-forms (A.e^j)(v) = -e^j(Av).
  Matrix E(3, 3);
  E(0, 1) = 1;
  CHECK(gl_action(E, KForm::basis(3, {1})) == -KForm::basis(3, {2}));
}

TEST_CASE("action matrix represents the action") {
  testing::Rng rng(23);
  const KForm a = testing::rand_form(rng, 4, 2);
  const Matrix M = action_matrix(a);
  const Matrix A = testing::rand_matrix(rng, 4, 4);
  const Vector image = M.apply(A.flat());
  const KForm direct = gl_action(A, a);
  const auto masks = masks_of_degree(4, 2);
  for (std::size_t r = 0; r < masks.size(); ++r) CHECK(image[r] == direct.coefficient(masks[r]));
}

TEST_CASE("Hodge star is defined by the pairing") {
  testing::Rng rng(29);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = static_cast<std::size_t>(testing::rand_int(rng, 3, 6));
    const std::size_t k = static_cast<std::size_t>(testing::rand_int(rng, 0, static_cast<int>(n)));
    const auto m = testing::rand_metric(rng, n);
    const KForm a = testing::rand_form(rng, n, k), b = testing::rand_form(rng, n, k);
    CHECK(wedge(a, hodge_star(b, m.g, m.vol)) == m.vol * inner_product(a, b, m.g));
  }
  // Euclidean R^3: *e^1 = e^{23}.
  CHECK(hodge_star(KForm::basis(3, {1}), Matrix::identity(3), volume_form(3)) == KForm::basis(3, {2, 3}));
}

TEST_CASE("pullback is functorial and multiplicative") {
  testing::Rng rng(31);
  for (int t = 0; t < 40; ++t) {
    const Matrix P = testing::rand_matrix(rng, 5, 5), Q = testing::rand_matrix(rng, 5, 4);
    const KForm a = testing::rand_form(rng, 5, 2), b = testing::rand_form(rng, 5, 1);
    CHECK(pullback(wedge(a, b), P) == wedge(pullback(a, P), pullback(b, P)));
    CHECK(pullback(pullback(a, P), Q) == pullback(a, P * Q));
  }
  CHECK(pullback(volume_form(4), Matrix::diagonal({2, 1, 1, 3})) == volume_form(4, Scalar(6)));
}

TEST_CASE("printing round trips through the parser") {
  testing::Rng rng(37);
  for (int t = 0; t < 50; ++t) {
    const KForm a = testing::rand_form(rng, 7, static_cast<std::size_t>(testing::rand_int(rng, 1, 4)));
    if (a.is_zero()) continue;
    CHECK(KForm::parse(7, a.to_string()) == a);
  }
}

#include <doctest.h>

#include <cmath>

#include "g2aa/error.hpp"
#include "g2aa/scalar.hpp"
#include "random_instances.hpp"

using namespace g2aa;

TEST_CASE("field arithmetic in Q(sqrt2)") {
  const Scalar r2 = Scalar::sqrt2();
  CHECK(r2 * r2 == Scalar(2));
  const Scalar x = Scalar(1) + r2;
  CHECK(x * x.conjugate() == Scalar(-1));
  CHECK(x * x.inverse() == Scalar(1));
  CHECK(Scalar::fraction(6, 4) == Scalar::fraction(3, 2));
  CHECK((Scalar(3) - r2) / (Scalar(3) - r2) == Scalar(1));
  CHECK_THROWS_AS(Scalar(0).inverse(), DomainError);
}

TEST_CASE("exact sign and ordering") {
  // 99^2 = 9801 and 2 * 70^2 = 9800, so 99 - 70 sqrt2 is tiny but positive.
  const Scalar tiny = Scalar(99) - Scalar(70) * Scalar::sqrt2();
  CHECK(tiny.sign() == 1);
  CHECK((-tiny).sign() == -1);
  CHECK(Scalar(0).sign() == 0);
  CHECK(Scalar(1) < Scalar::sqrt2());
  CHECK(Scalar::sqrt2() < Scalar::fraction(3, 2));
  CHECK(tiny.abs() == tiny);
}

TEST_CASE("sign agrees with floating point on random elements") {
  testing::Rng rng(11);
  for (int k = 0; k < 500; ++k) {
    const Scalar s = Scalar(testing::rand_int(rng, -50, 50)) + Scalar(testing::rand_int(rng, -50, 50)) * Scalar::sqrt2();
    const double d = s.to_double();
    if (std::abs(d) > 1e-9) CHECK(s.sign() == (d > 0 ? 1 : -1));
  }
}

TEST_CASE("parse and print round trip") {
  for (const char* text : {"0", "-7", "3/4", "sqrt2", "-1/2*sqrt2", "1/3+2/5*sqrt2", "-2-sqrt2"}) {
    const Scalar s = Scalar::parse(text);
    CHECK(Scalar::parse(s.to_string()) == s);
  }
  CHECK(Scalar::parse("1/2+1/2*sqrt2") == Scalar::fraction(1, 2) * (Scalar(1) + Scalar::sqrt2()));
  CHECK_THROWS_AS(Scalar::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Scalar::parse("abc"), ParseError);
}

TEST_CASE("exact odd roots") {
  Scalar root;
  REQUIRE(exact_odd_root(Scalar(512), 9, root));
  CHECK(root == Scalar(2));
  REQUIRE(exact_odd_root(Scalar::fraction(1, 512), 9, root));
  CHECK(root == Scalar::fraction(1, 2));
  const Scalar u = Scalar(1) + Scalar::sqrt2();
  Scalar u9 = Scalar(1);
  for (int k = 0; k < 9; ++k) u9 *= u;
  REQUIRE(exact_odd_root(u9, 9, root));
  CHECK(root == u);
  CHECK_FALSE(exact_odd_root(Scalar(2), 9, root));
}

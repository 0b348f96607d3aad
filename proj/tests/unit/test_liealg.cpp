#include <doctest.h>

#include "g2aa/error.hpp"
#include "g2aa/liealg.hpp"
#include "random_instances.hpp"

using namespace g2aa;

namespace {

Vector unit(std::size_t n, std::size_t i) {
  Vector e(n);
  e[i - 1] = 1;
  return e;
}

AlmostAbelianAlgebra example_a() {
  Matrix ad(6, 6);
  ad(0, 2) = ad(2, 3) = ad(1, 4) = ad(4, 5) = -1;
  return AlmostAbelianAlgebra(ad);
}

}  // namespace

TEST_CASE("bracket is antisymmetric and satisfies Jacobi") {
  testing::Rng rng(41);
  for (int t = 0; t < 50; ++t) {
    const auto g = testing::rand_algebra(rng, 5);
    const Vector x = testing::rand_vector(rng, 5), y = testing::rand_vector(rng, 5), z = testing::rand_vector(rng, 5);
    const Vector xy = g.bracket(x, y), yx = g.bracket(y, x);
    for (std::size_t i = 0; i < 5; ++i) CHECK(xy[i] == -yx[i]);
    Vector jac(5);
    for (const auto& part : {g.bracket(x, g.bracket(y, z)), g.bracket(y, g.bracket(z, x)), g.bracket(z, g.bracket(x, y))})
      for (std::size_t i = 0; i < 5; ++i) jac[i] += part[i];
    for (const auto& s : jac) CHECK(s.is_zero());
  }
}

TEST_CASE("differential matches the Chevalley-Eilenberg formula on one-forms") {
  // de^k(x, y) = -e^k([x, y]).
  testing::Rng rng(43);
  const auto g = testing::rand_algebra(rng, 6);
  for (int k = 1; k <= 6; ++k) {
    const KForm d = differential(g, KForm::basis(6, {k}));
    for (int i = 1; i <= 6; ++i)
      for (int j = i + 1; j <= 6; ++j) CHECK(d.coefficient(Indices{i, j}) == -g.bracket(i, j)[static_cast<std::size_t>(k - 1)]);
  }
}

TEST_CASE("example algebra brackets") {
  const auto g = example_a();
  CHECK(g.bracket(3, 7) == unit(7, 1));
  CHECK(g.bracket(6, 7) == unit(7, 5));
  CHECK(differential(g, KForm::basis(7, {1})) == -KForm::basis(7, {3, 7}));
  CHECK(g.is_nilpotent());
}

TEST_CASE("closed forms on u are exactly the stabilized ones") {
  testing::Rng rng(47);
  for (int t = 0; t < 30; ++t) {
    const auto g = testing::rand_algebra(rng, 7, 1);
    const KForm rho = testing::rand_form(rng, 6, 3);
    CHECK(is_closed(g, extend_from_ideal(rho)) == is_stabilized(g, rho));
    CHECK(restrict_to_ideal(extend_from_ideal(rho)) == rho);
  }
}

TEST_CASE("Segre partitions and the nilpotent catalog") {
  const auto parts = partitions_of(6);
  CHECK(parts.size() == 11);
  for (const auto& p : parts) {
    CHECK(segre_partition(jordan_matrix(p)) == p);
    const auto& e = catalog_entry(p);
    CHECK(e.partition == p);
    CHECK(identify_nilpotent(catalog_algebra(e)).name == e.name);
  }
  CHECK(segre_partition(example_a().ad()) == make_partition({3, 3}));
  CHECK(identify_nilpotent(example_a()).name == "n_{7,2}");
  CHECK(catalog_entry("A_{4,1}+R^3").partition == make_partition({3, 1, 1, 1}));
  CHECK(catalog_entry("n72").name == "n_{7,2}");
  CHECK(catalog_entry("\\mathfrak{h}_3\\oplus\\bR^4").name == "h_3⊕R^4");
  CHECK_THROWS_AS(segre_partition(Matrix::identity(6)), DomainError);
  CHECK_THROWS(catalog_entry("n_{8,1}"));
}

TEST_CASE("catalog dual brackets describe the representative algebras") {
  // The number of non-zero de^i equals the rank of ad.
  for (const auto& e : nilpotent_catalog()) {
    std::size_t nonzero = 0;
    for (const auto& s : e.dual_brackets)
      if (s != "0") ++nonzero;
    CHECK(nonzero == rank(catalog_algebra(e).ad()));
  }
}

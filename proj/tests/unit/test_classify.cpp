#include <doctest.h>

#include <algorithm>

#include "g2aa/classify.hpp"
#include "g2aa/error.hpp"
#include "g2aa/g2.hpp"
#include "g2aa/geometry.hpp"
#include "random_instances.hpp"

using namespace g2aa;

namespace {

bool parallel_in_witt_basis(const Matrix& m) {
  const AlmostAbelianAlgebra g(m);
  return differential(g, witt_phi()).is_zero() && differential(g, witt_star_phi()).is_zero();
}

Matrix example_a_ad() {
  Matrix ad(6, 6);
  ad(0, 2) = ad(2, 3) = ad(1, 4) = ad(4, 5) = -1;
  return ad;
}

std::vector<EigenBlock> real_spectrum(std::initializer_list<int> values) {
  std::vector<EigenBlock> out;
  for (int v : values) out.push_back(EigenBlock{Scalar(v), Scalar(0), 1});
  return out;
}

}  // namespace

TEST_CASE("parallel families build closed and coclosed structures") {
  CHECK(build_instance(G2Su3Params{1, 2}).family == "g2_su3");
  for (int shape = 1; shape <= 4; ++shape) CHECK_NOTHROW(build_instance(G2Star24Params{shape, 1, 2}));
  CHECK_NOTHROW(build_instance(G2Star33Params{Matrix{{1, 1, 0}, {0, 1, 0}, {0, 0, -2}}}));
  CHECK_THROWS_AS(build_instance(G2Star33Params{Matrix::identity(3)}), DomainError);
  CHECK_THROWS_AS(build_instance(G2Star24Params{1, 0, 2}), DomainError);
  CHECK_THROWS_AS(build_instance(G2Star24Params{7, 1, 2}), DomainError);
  const Instance deg = build_instance(G2StarDegParams{Matrix{{1, 2}, {0, 3}}, Matrix{{1, 0}, {2, -1}}, Vector{1, 0}, Vector{0, 1}});
  CHECK(deg.phi == witt_phi());
  testing::Rng rng(83);
  for (int family = 0; family < 3; ++family)
    for (int t = 0; t < 5; ++t) {
      const Instance inst = build_instance(random_nondeg_params(family, rng));
      const G2EpsStructure s = certify_g2(inst.phi);
      CHECK(differential(inst.algebra, inst.phi).is_zero());
      CHECK(differential(inst.algebra, s.star_phi()).is_zero());
    }
}

TEST_CASE("Witt-basis pattern matches exactly the parallel structures") {
  CHECK(is_parallel_witt(Matrix(6, 6)).has_value());
  CHECK_FALSE(is_parallel_witt(example_a_ad()).has_value());
  const Matrix A{{1, 2}, {0, -1}}, B{{0, 1}, {1, 3}};
  const Vector v{1, -1}, w{2, 0};
  const Matrix m = witt_parallel_matrix(A, B, v, w);
  const auto back = is_parallel_witt(m);
  REQUIRE(back.has_value());
  CHECK(witt_parallel_matrix(back->A, back->B, back->v, back->w) == m);
  testing::Rng rng(89);
  for (int t = 0; t < 200; ++t) {
    Matrix x = witt_parallel_matrix(testing::rand_int_matrix(rng, 2, 2, 1), testing::rand_int_matrix(rng, 2, 2, 1),
                                    Vector{testing::rand_int(rng, -1, 1), testing::rand_int(rng, -1, 1)},
                                    Vector{testing::rand_int(rng, -1, 1), testing::rand_int(rng, -1, 1)});
    if (t % 2 == 1) x(static_cast<std::size_t>(testing::rand_int(rng, 0, 5)), static_cast<std::size_t>(testing::rand_int(rng, 0, 5))) += 1;
    CHECK(is_parallel_witt(x).has_value() == parallel_in_witt_basis(x));
  }
}

TEST_CASE("mode and decision names") {
  for (Mode m : {Mode::g2, Mode::g2star_24, Mode::g2star_33, Mode::g2star_deg}) CHECK(parse_mode(to_string(m)) == m);
  CHECK_THROWS(parse_mode("g3"));
  CHECK(to_string(Decision::yes) == "true");
  CHECK(to_string(Decision::undecidable) == "undecidable");
}

TEST_CASE("nilpotent decisions") {
  const AlmostAbelianAlgebra n72(example_a_ad());
  CHECK(calibrated_decision(n72, Mode::g2).decision == Decision::yes);
  CHECK(calibrated_decision(n72, Mode::g2).method == "nilpotent");
  CHECK(parallel_nondeg_decision(n72, Mode::g2).decision == Decision::no);
  CHECK(parallel_nondeg_decision(n72, Mode::g2star_33).decision == Decision::yes);
  const AlmostAbelianAlgebra a41 = catalog_algebra(catalog_entry("A_{4,1}⊕R^3"));
  CHECK(calibrated_decision(a41, Mode::g2star_deg).decision == Decision::no);
  CHECK(calibrated_decision(a41, Mode::g2star_33).decision == Decision::yes);
}

TEST_CASE("decisions from eigen-data") {
  const AlmostAbelianAlgebra g(Matrix::diagonal({1, 2, 3, -5, -4, -3}));
  const auto spectrum = real_spectrum({1, 2, 3, -5, -4, -3});
  CHECK(eigen_data_matches(g.ad(), spectrum));
  CHECK_FALSE(eigen_data_matches(g.ad(), real_spectrum({1, 2, 3, -5, -4, -2})));
  // Already in the stabilizer of rho_0 in the given basis.
  CHECK(calibrated_decision(g, Mode::g2star_deg).method == "certificate");
  const AlmostAbelianAlgebra h(Matrix::diagonal({-5, 1, 2, 3, -4, -3}));
  CHECK(calibrated_decision(h, Mode::g2star_deg).decision == Decision::undecidable);
  CHECK(calibrated_decision(h, Mode::g2star_deg, {spectrum, std::nullopt}).decision == Decision::yes);
  CHECK(calibrated_decision(g, Mode::g2star_24, {spectrum, std::nullopt}).decision == Decision::no);
  CHECK(calibrated_decision(g, Mode::g2star_33, {spectrum, std::nullopt}).decision == Decision::no);
  CHECK_THROWS(calibrated_decision(g, Mode::g2, {real_spectrum({1, 1, 1, 1, 1, 1}), std::nullopt}));

  // su(3) rotations: parallel G2.
  const Matrix su3 = Matrix::from_blocks({{rotation_block(0, 1), Matrix(2, 2), Matrix(2, 2)},
                                          {Matrix(2, 2), rotation_block(0, 2), Matrix(2, 2)},
                                          {Matrix(2, 2), Matrix(2, 2), rotation_block(0, -3)}});
  const std::vector<EigenBlock> rot{{0, 1, 1}, {0, 2, 1}, {0, -3, 1}};
  CHECK(parallel_nondeg_decision(AlmostAbelianAlgebra(su3), Mode::g2, {rot, std::nullopt}).decision == Decision::yes);
  CHECK(parallel_nondeg_decision(g, Mode::g2, {spectrum, std::nullopt}).decision == Decision::no);
}

TEST_CASE("decisions from a basis certificate") {
  testing::Rng rng(97);
  const auto stab = stabilizer_algebra(model_rho(-1));
  Matrix M(6, 6);
  for (const auto& s : stab) M += s * Scalar(testing::rand_int(rng, -2, 2));
  const Matrix P = testing::rand_invertible(rng, 6);
  const AlmostAbelianAlgebra g(P * M * inverse(P));
  const DecisionResult r = calibrated_decision(g, Mode::g2, {std::nullopt, P});
  CHECK(r.decision == Decision::yes);
  if (!g.is_nilpotent()) CHECK(r.method == "certificate");
}

TEST_CASE("nilpotent witnesses lie in the stabilizer of rho_0") {
  for (const auto& p : partitions_of(6)) {
    const auto w = nilpotent_witnesses(p);
    if (p == make_partition({3, 1, 1, 1})) {
      CHECK_FALSE(w.has_value());
      continue;
    }
    REQUIRE(w.has_value());
    CHECK(w->B.trace().is_zero());
    CHECK(in_stabilizer(w->assembled(), model_rho0()));
    CHECK(segre_partition(w->assembled()) == p);
  }
}

TEST_CASE("nilpotent report closed form agrees with the pipeline") {
  NilpotentParallelParams p;
  p.delta = 1;
  p.B = Matrix{{0, 0}, {1, 0}};
  p.v = Vector{0, 1};
  const NilpotentReport closed = nilpotent_parallel_report(p);
  CHECK(closed.algebra == "n_{7,3}");
  CHECK(closed.hol_dim == 2);
  CHECK(closed.same_outcome(nilpotent_pipeline_report(p)));
  for (const auto& [name, q] : delta_zero_witnesses()) {
    CHECK(nilpotent_parallel_report(q).algebra == name);
    CHECK(nilpotent_pipeline_report(q).same_outcome(nilpotent_parallel_report(q)));
  }
}

TEST_CASE("sampling and tables") {
  const auto sample = nilpotent_sample(2, 40, 5);
  CHECK(sample.size() >= 40);
  CHECK(nilpotent_grid(0).size() == 3);
  CHECK(regenerate_table1(1) == expected_table1());
  const auto g2 = calibrated_nilpotent_list(Mode::g2);
  CHECK(g2 == std::vector<std::string>{"n_{7,2}", "A_{5,1}⊕R^2", "R^7"});
  CHECK(parallel_nondeg_nilpotent_list(Mode::g2) == std::vector<std::string>{"R^7"});
}

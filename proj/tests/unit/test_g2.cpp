#include <doctest.h>

#include "g2aa/error.hpp"
#include "g2aa/g2.hpp"
#include "random_instances.hpp"

using namespace g2aa;

TEST_CASE("model tensors") {
  CHECK(model_phi(-1) == KForm::parse(7, "e127+e347+e567+e135-e146-e236-e245"));
  CHECK(model_phi(1) == KForm::parse(7, "-e127-e347+e567+e135-e146-e236-e245"));
  CHECK(model_omega(1) == KForm::parse(6, "-e12-e34+e56"));
  CHECK(model_rho(-1) == KForm::parse(6, "e135-e146-e236-e245"));
  CHECK(model_rho0() == KForm::parse(6, "e126-e135+e234"));
  CHECK(model_Omega0() == KForm::parse(6, "e1256+e3456"));
  for (const auto& name : model_tensor_names()) CHECK_NOTHROW(model_tensor(name));
  CHECK_THROWS_AS(model_tensor("psi"), DomainError);
}

TEST_CASE("certification of the model forms") {
  const G2EpsStructure neg = certify_g2(model_phi(-1));
  CHECK(neg.eps == -1);
  CHECK(neg.exact_metric() == Matrix::identity(7));
  CHECK(neg.frame_kind == FrameKind::adapted);
  CHECK(neg.signature == Signature{7, 0, 0});
  const G2EpsStructure pos = certify_g2(model_phi(1));
  CHECK(pos.eps == 1);
  CHECK(pos.exact_metric() == Matrix::diagonal({-1, -1, -1, -1, 1, 1, 1}));
  CHECK(pos.signature == Signature{3, 4, 0});
  CHECK(pos.exact_vol() == volume_form(7));
  CHECK_THROWS_AS(certify_g2(KForm::basis(7, {1, 2, 3})), NotG2Error);
  CHECK_THROWS_AS(certify_g2(KForm::basis(6, {1, 2, 3})), NotG2Error);
}

TEST_CASE("certification is equivariant") {
  testing::Rng rng(53);
  for (int t = 0; t < 10; ++t) {
    const int eps = t % 2 == 0 ? -1 : 1;
    const Matrix P = testing::rand_invertible(rng, 7);
    const G2EpsStructure s = certify_g2(pullback(model_phi(eps), P));
    CHECK(s.eps == eps);
    REQUIRE(s.exact());
    CHECK(s.exact_metric() == P.transpose() * certify_g2(model_phi(eps)).exact_metric() * P);
    CHECK(s.exact_vol() == volume_form(7, determinant(P)));
    CHECK(s.frame_kind == (P == Matrix::identity(7) ? FrameKind::adapted : FrameKind::generic));
  }
}

TEST_CASE("irrational normalization uses the floating-point fallback") {
  // Scaling phi by 2 scales the bilinear form by 8 and its determinant by 2^21;
  // the metric picks up 2^(2/3), which is not in Q(sqrt2).
  const G2EpsStructure s = certify_g2(model_phi(-1) * Scalar(2));
  CHECK_FALSE(s.exact());
  CHECK(s.fallback_residual <= kFallbackTolerance);
  CHECK(s.metric_approx[0] == doctest::Approx(std::pow(2.0, 2.0 / 3.0)));
  CHECK_THROWS_AS(s.exact_metric(), DomainError);
}

TEST_CASE("stabilizer of phi has dimension 14 and fixes star phi") {
  for (int eps : {-1, 1}) {
    const G2EpsStructure s = certify_g2(model_phi(eps));
    const auto stab = stabilizer_algebra(model_phi(eps));
    CHECK(stab.size() == 14);
    for (const auto& A : stab) CHECK(in_stabilizer(A, s.star_phi()));
  }
}

TEST_CASE("stabilizer families") {
  CHECK(stabilizer_algebra(model_rho(-1)).size() == 16);
  CHECK(stabilizer_algebra(model_rho(1)).size() == 16);
  CHECK(stabilizer_algebra(model_rho0()).size() == 17);
  CHECK(stabilizer_algebra(model_Omega0()).size() == 22);
  CHECK(joint_stabilizer_algebra(model_rho(-1), model_half_omega_squared(-1)).size() == 8);
  CHECK(joint_stabilizer_algebra(model_rho(-1), model_half_omega_squared(1)).size() == 8);
  CHECK(joint_stabilizer_algebra(model_rho0(), model_rho0()).size() == 17);
  // (iii) holds literally: [[A, 0], [B, A - tr(A) I]] with B trace-free.
  Matrix A{{1, 2, 0}, {0, -1, 3}, {1, 0, 2}}, B{{1, 0, 1}, {2, -3, 0}, {0, 1, 2}};
  const Matrix M = Matrix::from_blocks({{A, Matrix(3, 3)}, {B, A - Matrix::identity(3) * A.trace()}});
  CHECK(in_stabilizer(M, model_rho0()));
}

TEST_CASE("orbit invariant of six-dimensional three-forms") {
  CHECK(lambda_invariant(model_rho(-1)).sign() < 0);
  CHECK(lambda_invariant(model_rho(1)).sign() > 0);
  CHECK(lambda_invariant(model_rho0()).is_zero());
  CHECK_FALSE(structure_map(model_rho0()).is_zero());
  CHECK(structure_map(KForm::basis(6, {1, 2, 3})).is_zero());
  testing::Rng rng(59);
  for (int t = 0; t < 10; ++t) {
    const Matrix P = testing::rand_invertible(rng, 6);
    CHECK(lambda_invariant(pullback(model_rho(-1), P)).sign() < 0);
    CHECK(lambda_invariant(pullback(model_rho(1), P)).sign() > 0);
    CHECK(lambda_invariant(pullback(model_rho0(), P)).is_zero());
  }
}

TEST_CASE("Witt frame") {
  const WittFrame w = witt_frame_from_adapted();
  CHECK_FALSE(determinant(w.basis_change).is_zero());
  const G2EpsStructure s = certify_g2(model_phi(1));
  CHECK(w.to_witt(model_phi(1)) == witt_phi());
  CHECK(w.to_witt(s.star_phi()) == witt_star_phi());
  CHECK(w.coframe * w.basis_change == Matrix::identity(7));
  CHECK(w.metric_to_witt(s.exact_metric()) == witt_metric());
  const G2EpsStructure ws = certify_g2(witt_phi());
  CHECK(ws.eps == 1);
  CHECK(ws.frame_kind == FrameKind::witt);
  CHECK(ws.exact_metric() == witt_metric());
  CHECK(ws.star_phi() == witt_star_phi());
}

TEST_CASE("hyperplane model types") {
  const Vector f7{0, 0, 0, 0, 0, 0, 1}, f1{1, 0, 0, 0, 0, 0, 0}, null{1, 0, 0, 0, 0, 0, -1};
  CHECK(hyperplane_model_type(certify_g2(model_phi(-1)), f7).model == HyperplaneModel::rho_minus_half_omega_minus_sq);
  const G2EpsStructure pos = certify_g2(model_phi(1));
  const auto a = hyperplane_model_type(pos, f7);
  CHECK(a.model == HyperplaneModel::rho_minus_half_omega_plus_sq);
  CHECK(a.restricted_signature == Signature{2, 4, 0});
  const auto b = hyperplane_model_type(pos, f1);
  CHECK(b.model == HyperplaneModel::rho_plus_minus_half_omega_minus_sq);
  CHECK(b.restricted_signature == Signature{3, 3, 0});
  // ker(f^1 - f^7) = span(f_1 + f_7, f_2, ..., f_6).
  const auto c = hyperplane_model_type(pos, null);
  CHECK(c.model == HyperplaneModel::rho0_Omega0);
  CHECK(c.lambda.is_zero());
  CHECK_THROWS_AS(hyperplane_model_type(pos, Vector(7)), DomainError);
}

TEST_CASE("hyperplane type is invariant under the joint stabilizer") {
  testing::Rng rng(61);
  const G2EpsStructure pos = certify_g2(model_phi(1));
  const auto stab = stabilizer_algebra(model_phi(1));
  const Vector f1{1, 0, 0, 0, 0, 0, 0};
  for (int t = 0; t < 5; ++t) {
    // For A^2 = 0 the group element exp(A) is exactly I + A.
    const Matrix& A = stab[static_cast<std::size_t>(testing::rand_int(rng, 0, 13))];
    if (!(A * A).is_zero()) continue;
    const Matrix g = Matrix::identity(7) + A;
    if (pullback(model_phi(1), g) != model_phi(1)) continue;
    const Vector moved = g.transpose().apply(f1);
    CHECK(hyperplane_model_type(pos, moved).model == hyperplane_model_type(pos, f1).model);
  }
}

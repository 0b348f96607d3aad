#include <doctest.h>

#include "g2aa/error.hpp"
#include "g2aa/g2.hpp"
#include "g2aa/geometry.hpp"
#include "g2aa/json_io.hpp"
#include "random_instances.hpp"

using namespace g2aa;

TEST_CASE("scalars, matrices and forms round trip") {
  for (const Scalar& s : {Scalar(0), Scalar::fraction(-7, 3), Scalar(1) + Scalar::sqrt2() * Scalar::fraction(1, 2)})
    CHECK(scalar_from_json(scalar_to_json(s)) == s);
  CHECK(scalar_from_json(Json(4)) == Scalar(4));
  CHECK_THROWS_AS(scalar_from_json(Json::array()), ParseError);
  testing::Rng rng(101);
  const Matrix m = testing::rand_matrix(rng, 3, 4);
  CHECK(matrix_from_json(matrix_to_json(m)) == m);
  const KForm a = testing::rand_form(rng, 7, 3);
  CHECK(form_from_json(form_to_json(a)) == a);
  CHECK(form_from_json(Json::parse(R"({"dim":7,"expr":"e127+e347"})")) == KForm::parse(7, "e127+e347"));
  CHECK_THROWS_AS(matrix_from_json(Json::parse("[[1,2],[3]]")), ParseError);
}

TEST_CASE("algebras and curvature reports round trip") {
  testing::Rng rng(103);
  const auto g = testing::rand_algebra(rng, 7, 1);
  CHECK(algebra_from_json(algebra_to_json(g)) == g);
  CHECK_THROWS(algebra_from_json(Json::parse(R"({"n":7,"ad":[[1]]})")));
  const CurvatureReport rep = analyze(g, Matrix::identity(7), model_phi(-1));
  const CurvatureReport back = curvature_from_json(curvature_to_json(rep));
  CHECK(back.R == rep.R);
  CHECK(back.ricci == rep.ricci);
  CHECK(back.hol_basis == rep.hol_basis);
  CHECK(back.is_flat == rep.is_flat);
  CHECK(back.is_locally_symmetric == rep.is_locally_symmetric);
  CHECK(back.hol_annihilates_phi == rep.hol_annihilates_phi);
}

TEST_CASE("certificates round trip") {
  const G2EpsStructure s = certify_g2(witt_phi());
  const G2EpsStructure back = certificate_from_json(certificate_to_json(s));
  CHECK(back.phi == s.phi);
  CHECK(back.eps == s.eps);
  CHECK(back.exact_metric() == s.exact_metric());
  CHECK(back.exact_vol() == s.exact_vol());
  CHECK(back.signature == s.signature);
  CHECK(back.stabilizer_dim == 14);
  CHECK(back.frame_kind == FrameKind::witt);
}

TEST_CASE("nilpotent reports and decisions round trip") {
  NilpotentParallelParams p;
  p.delta = -1;
  p.B = Matrix{{1, 0}, {2, -1}};
  p.v = Vector{0, 1};
  p.w = Vector{1, 1};
  const NilpotentParallelParams q = nilpotent_params_from_json(nilpotent_params_to_json(p));
  CHECK(q.delta == p.delta);
  CHECK(q.B == p.B);
  CHECK(q.v == p.v);
  CHECK(q.w == p.w);
  const NilpotentReport r = nilpotent_parallel_report(p);
  CHECK(nilpotent_report_from_json(nilpotent_report_to_json(r)).same_outcome(r));
  const DecisionResult d{Decision::undecidable, "none", "needs data"};
  const DecisionResult e = decision_from_json(decision_to_json(d));
  CHECK(e.decision == d.decision);
  CHECK(e.method == d.method);
  CHECK(e.detail == d.detail);
  const auto blocks = eigen_from_json(Json::parse(R"([{"re":"0","im":"1","size":2},{"re":"1/2","im":0,"size":1}])"));
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0].im == Scalar(1));
  CHECK(blocks[0].size == 2);
  CHECK(blocks[1].re == Scalar::fraction(1, 2));
}

TEST_CASE("reading files") {
  CHECK(form_from_json(read_json_file(std::string(G2AA_TEST_DATA) + "/phi_minus.json")) == model_phi(-1));
  CHECK_THROWS_AS(read_json_file(std::string(G2AA_TEST_DATA) + "/missing.json"), ParseError);
}

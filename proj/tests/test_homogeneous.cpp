#include "doctest.h"

#include "golie/catalog.hpp"
#include "golie/homogeneous.hpp"
#include "golie/rng.hpp"

using namespace golie;

namespace {

InvariantMetricSpace<Rat> build_space(const std::string& id,
                                      std::map<std::string, Rat> params = {}) {
  auto e = catalog_build<Rat>(id, params);
  REQUIRE(e.pair.has_value());
  REQUIRE(e.qp.has_value());
  return InvariantMetricSpace<Rat>(*e.pair, *e.qp);
}

}  // namespace

TEST_CASE("round 2-sphere: symmetric pair, every direction extends to a geodesic vector") {
  auto sp = build_space("so3_mod_so2");
  CHECK(sp.dim_p() == 2);
  CHECK(sp.dim_h() == 1);
  CHECK(sp.symmetric_pair_check());

  SeededRng rng(11);
  for (int t = 0; t < 30; ++t) {
    Vec<Rat> x = rng.vec_small_nonzero<Rat>(2);
    CHECK(sp.u_op(x, x) == Vec<Rat>(2, Rat(0)));
    CHECK(sp.geodesic_vector_check(x, Vec<Rat>(1, Rat(0))).geodesic);
    CHECK(sp.go_solve(x).feasible);
  }
  auto v = sp.go_test(50, 7);
  CHECK_FALSE(v.witness_found);
  CHECK(v.samples_used == v.total_samples);
}

TEST_CASE("plane-motion-like extension of sl(2,R): witness with exact rank certificate") {
  auto sp = build_space("sl2r_semidirect_r2_mod_so2",
                        {{"alpha", Rat(1)}, {"beta", Rat(1)}});
  auto v = sp.go_test(50, 3);
  REQUIRE(v.witness_found);
  const auto& cert = v.solve.cert;
  CHECK(cert.rank_a < cert.rank_aug);
  // lambda^T A = 0 and lambda^T b != 0 certify infeasibility exactly.
  REQUIRE_FALSE(cert.lambda.empty());
  Matrix<Rat> A(sp.dim_p(), sp.dim_h());
  // Rebuild the system through the public action tables.
  auto mats = sp.isotropy_action_matrices();
  for (int b = 0; b < sp.dim_h(); ++b) {
    Vec<Rat> wx = mat_vec(mats[b], v.witness_p_coords);
    Vec<Rat> qwx = mat_vec(sp.qp(), wx);
    for (int a = 0; a < sp.dim_p(); ++a) A(a, b) = qwx[a];
  }
  Vec<Rat> lta(sp.dim_h(), Rat(0));
  for (int a = 0; a < sp.dim_p(); ++a)
    for (int b = 0; b < sp.dim_h(); ++b) lta[b] += cert.lambda[a] * A(a, b);
  CHECK(is_zero_vec(lta, 0.0));
  // And the witness really fails the geodesic condition for random Y.
  SeededRng rng(23);
  for (int t = 0; t < 20; ++t) {
    Vec<Rat> y = rng.vec_small<Rat>(sp.dim_h());
    CHECK(sp.go_residual(v.witness_p_coords, y) > 0);
  }
}

TEST_CASE("reductive complement is the metric orthogonal of h") {
  LieAlgebra<Rat> g = catalog_detail::so_algebra<Rat>(3);
  Matrix<Rat> rows(1, 3);
  rows(0, 2) = Rat(1);
  Subspace<Rat> h = Subspace<Rat>::from_rows(rows, g.eps);
  Subspace<Rat> p = reductive_complement(g, h, Matrix<Rat>::identity(3));
  CHECK(p.dim() == 2);
  Vec<Rat> e3{Rat(0), Rat(0), Rat(1)};
  CHECK_FALSE(p.contains(e3, g.eps));

  // diag(1,2,3) is not invariant under the rotation generated by e3.
  Matrix<Rat> bad = Matrix<Rat>::identity(3);
  bad(1, 1) = Rat(2);
  bad(2, 2) = Rat(3);
  CHECK_THROWS_AS(reductive_complement(g, h, bad), ValidationError);
}

TEST_CASE("pair validation pins down the failing condition") {
  LieAlgebra<Rat> g = catalog_detail::so_algebra<Rat>(3);

  // span(e1, e2) closes onto e3: not a subalgebra.
  Matrix<Rat> hrows(2, 3);
  hrows(0, 0) = Rat(1);
  hrows(1, 1) = Rat(1);
  Matrix<Rat> prows(1, 3);
  prows(0, 2) = Rat(1);
  HomogeneousPair<Rat> pr{g, Subspace<Rat>::from_rows(hrows, g.eps),
                          Subspace<Rat>::from_rows(prows, g.eps), true};
  CHECK_THROWS_WITH_AS(pr.validate(), doctest::Contains("not a subalgebra"),
                       ValidationError);

  // Affine line: [e0, e1] = e1, h = span(e1) pushes p = span(e0) off itself.
  LieAlgebra<Rat> aff("aff", 2);
  aff.set_bracket_term(0, 1, 1, Rat(1));
  Matrix<Rat> ha(1, 2), pa(1, 2);
  ha(0, 1) = Rat(1);
  pa(0, 0) = Rat(1);
  HomogeneousPair<Rat> bad{aff, Subspace<Rat>::from_rows(ha, aff.eps),
                           Subspace<Rat>::from_rows(pa, aff.eps), false};
  CHECK_THROWS_WITH_AS(bad.validate(), doctest::Contains("not reductive"),
                       ValidationError);
}

TEST_CASE("metrics on p that break ad(h)-invariance are rejected") {
  auto e = catalog_build<Rat>("so3_mod_so2", {});
  Matrix<Rat> qp = Matrix<Rat>::identity(2);
  qp(1, 1) = Rat(2);
  CHECK_THROWS_WITH_AS(InvariantMetricSpace<Rat>(*e.pair, qp),
                       doctest::Contains("ad(h)-invariant"), ValidationError);
}

TEST_CASE("largest ideal inside h detects an ineffective factor") {
  LieAlgebra<Rat> so3 = catalog_detail::so_algebra<Rat>(3);
  Matrix<Rat> h3(1, 3);
  h3(0, 2) = Rat(1);
  CHECK(largest_ideal_in(so3, Subspace<Rat>::from_rows(h3, so3.eps)).dim() == 0);

  // so(3) + a central line, with h containing that line.
  LieAlgebra<Rat> g("so3_plus_r", 4);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      Vec<Rat> v(4, Rat(0));
      for (int k = 0; k < 3; ++k) v[k] = so3.c_at(i, j, k);
      g.set_bracket(i, j, v);
    }
  Matrix<Rat> hrows(2, 4);
  hrows(0, 2) = Rat(1);  // e3 in so(3)
  hrows(1, 3) = Rat(1);  // the central direction
  auto ideal = largest_ideal_in(g, Subspace<Rat>::from_rows(hrows, g.eps));
  REQUIRE(ideal.dim() == 1);
  Vec<Rat> center{Rat(0), Rat(0), Rat(0), Rat(1)};
  CHECK(ideal.contains(center, g.eps));
}

TEST_CASE("split inverts the ambient embedding") {
  auto sp = build_space("sl2r_semidirect_r2_mod_so2", {});
  SeededRng rng(5);
  for (int t = 0; t < 10; ++t) {
    Vec<Rat> x = rng.vec_small<Rat>(sp.dim_p());
    auto [yh, xp] = sp.split(sp.p_to_ambient(x));
    CHECK(is_zero_vec(yh, 0.0));
    CHECK(xp == x);
  }
}

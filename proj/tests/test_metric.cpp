#include "doctest.h"

#include "golie/catalog.hpp"
#include "golie/metric.hpp"

using namespace golie;

namespace {

Vec<Rat> ei(int n, int i) {
  Vec<Rat> v(n, Rat(0));
  v[i] = Rat(1);
  return v;
}

MetricLieAlgebra<Rat> so3_round() {
  return {catalog_detail::so_algebra<Rat>(3), Matrix<Rat>::identity(3)};
}

// Solvable plane model: [e0, e1] = e1 with the flat inner product has
// constant curvature -1.
MetricLieAlgebra<Rat> hyperbolic_plane() {
  LieAlgebra<Rat> g("hyp2", 2);
  g.set_bracket_term(0, 1, 1, Rat(1));
  return {g, Matrix<Rat>::identity(2)};
}

}  // namespace

TEST_CASE("bi-invariant metric on so(3): round-sphere curvature data") {
  CurvatureEngine<Rat> eng(so3_round());
  CHECK(eng.sectional(ei(3, 0), ei(3, 1)) == Rat(1, 4));
  CHECK(eng.sectional(ei(3, 1), ei(3, 2)) == Rat(1, 4));
  CHECK(eng.ricci_operator() == Rat(1, 2) * Matrix<Rat>::identity(3));
  CHECK(eng.scalar_curvature() == Rat(3, 2));
  auto fit = eng.einstein_fit();
  CHECK(fit.lambda == Rat(1, 2));
  CHECK(fit.residual == 0.0);
  CHECK(eng.nabla_r_norm_sq() == Rat(0));
  CHECK(eng.locally_symmetric());
  CHECK(eng.mean_curvature_vector() == Vec<Rat>(3, Rat(0)));
}

TEST_CASE("hyperbolic plane model: constant curvature -1") {
  CurvatureEngine<Rat> eng(hyperbolic_plane());
  CHECK(eng.sectional(ei(2, 0), ei(2, 1)) == Rat(-1));
  CHECK(eng.ricci_operator() == Rat(-1) * Matrix<Rat>::identity(2));
  CHECK(eng.scalar_curvature() == Rat(-2));
  CHECK(eng.locally_symmetric());
  // <H, x> = tr(ad x); only ad(e0) has nonzero trace here.
  CHECK(eng.mean_curvature_vector() == Vec<Rat>{Rat(1), Rat(0)});
}

TEST_CASE("squashed metric on so(3) is not Einstein") {
  MetricLieAlgebra<Rat> m = so3_round();
  m.q(0, 0) = Rat(2);
  CurvatureEngine<Rat> eng(m);
  auto fit = eng.einstein_fit();
  CHECK(fit.residual > 1e-6);
  CHECK_FALSE(eng.locally_symmetric());
}

TEST_CASE("exact and floating engines agree on so(3) spectra") {
  CurvatureEngine<Rat> exact(so3_round());
  MetricLieAlgebra<double> md{catalog_detail::so_algebra<double>(3),
                              Matrix<double>::identity(3)};
  CurvatureEngine<double> approx(md);
  auto ve = exact.ricci_eigenvalues();
  auto va = approx.ricci_eigenvalues();
  REQUIRE(ve.size() == va.size());
  for (size_t i = 0; i < ve.size(); ++i) CHECK(std::abs(ve[i] - va[i]) < 1e-12);
  CHECK(std::abs(to_double(exact.scalar_curvature()) -
                 approx.scalar_curvature()) < 1e-12);
}

TEST_CASE("non-symmetric or indefinite metrics are rejected") {
  MetricLieAlgebra<Rat> m = so3_round();
  m.q(0, 1) = Rat(1);
  CHECK_THROWS_AS(m.validate(), ValidationError);
  m.q(0, 1) = Rat(0);
  m.q(0, 0) = Rat(-1);
  CHECK_THROWS_AS(m.validate(), ValidationError);
}

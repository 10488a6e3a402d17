#include "doctest.h"

#include "golie/catalog.hpp"
#include "golie/lie_algebra.hpp"

using namespace golie;

TEST_CASE("cross-product so(3): antisymmetry, jacobi, killing form") {
  LieAlgebra<Rat> g = catalog_detail::so_algebra<Rat>(3);
  CHECK(g.n == 3);
  CHECK(g.bracket_basis(0, 1) == Vec<Rat>{Rat(0), Rat(0), Rat(1)});
  CHECK(g.bracket_basis(1, 0) == Vec<Rat>{Rat(0), Rat(0), Rat(-1)});
  auto jr = jacobi_check(g);
  CHECK(jr.ok);
  // tr(ad e_i ad e_j) = -2 delta_ij for the cross-product basis
  Matrix<Rat> kf = killing_form(g);
  CHECK(kf == Rat(-2) * Matrix<Rat>::identity(3));
}

TEST_CASE("so(4) from the skew basis passes jacobi and is unimodular") {
  LieAlgebra<Rat> g = catalog_detail::so_algebra<Rat>(4);
  CHECK(g.n == 6);
  CHECK(jacobi_check(g).ok);
  for (int i = 0; i < g.n; ++i) CHECK(sgn_is_zero(g.ad_trace(i)));
  Matrix<Rat> kf = killing_form(g);
  CHECK(kf == Rat(-4) * Matrix<Rat>::identity(6));
}

TEST_CASE("sl(2,R): killing form in the (H, E, F) basis") {
  LieAlgebra<Rat> g = catalog_detail::sl2_algebra<Rat>();
  CHECK(jacobi_check(g).ok);
  Matrix<Rat> want(3, 3);
  want(0, 0) = Rat(8);
  want(1, 2) = want(2, 1) = Rat(4);
  CHECK(killing_form(g) == want);
}

TEST_CASE("perturbed constants fail jacobi with a pinned triple") {
  LieAlgebra<Rat> g = catalog_detail::so_algebra<Rat>(3);
  Vec<Rat> img(3, Rat(0));
  img[2] = Rat(1);
  img[0] = Rat(1, 7);  // [e1,e2] = e3 + e1/7 breaks the identity
  g.set_bracket(0, 1, img);
  auto jr = jacobi_check(g);
  REQUIRE_FALSE(jr.ok);
  CHECK(jr.max_residual > 0);
  CHECK(jr.i >= 0);
  CHECK(jr.j > jr.i);
  CHECK(jr.k > jr.j);
  CHECK_FALSE(is_zero_vec(jr.residual, 0.0));
}

TEST_CASE("ad matrices act by the bracket") {
  LieAlgebra<Rat> g = catalog_detail::so_algebra<Rat>(3);
  Vec<Rat> x{Rat(1), Rat(2), Rat(3)};
  Vec<Rat> y{Rat(0), Rat(1), Rat(-1)};
  CHECK(mat_vec(g.ad(x), y) == g.bracket(x, y));
  CHECK(g.bracket(x, x) == Vec<Rat>(3, Rat(0)));
}

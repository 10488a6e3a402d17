#include "doctest.h"

#include <cmath>

#include "golie/solvmanifold.hpp"

using namespace golie;

namespace {

MetabelianSpec<Rat> diag_spec(const Vec<Rat>& a) {
  MetabelianSpec<Rat> s;
  s.k = static_cast<int>(a.size());
  s.m = 1;
  Matrix<Rat> A(s.k, s.k);
  for (int i = 0; i < s.k; ++i) A(i, i) = a[i];
  s.A.push_back(std::move(A));
  return s;
}

Vec<Rat> unit(int n, int i) {
  Vec<Rat> v(n, Rat(0));
  v[i] = Rat(1);
  return v;
}

}  // namespace

TEST_CASE("metabelian spec validation pins the failing condition") {
  MetabelianSpec<Rat> s;
  s.k = 2;
  s.m = 2;
  Matrix<Rat> n1(2, 2), n2(2, 2);
  n1(0, 1) = Rat(1);
  n2(1, 0) = Rat(1);
  s.A = {n1, n2};
  CHECK_THROWS_WITH_AS(s.validate(), doctest::Contains("do not commute"), ValidationError);

  s.A = {Matrix<Rat>::identity(2), Matrix<Rat>::identity(2)};
  CHECK_THROWS_WITH_AS(s.validate(), doctest::Contains("must vanish"), ValidationError);

  s.m = 1;
  s.A = {Rat(-1) * Matrix<Rat>::identity(2)};
  CHECK_THROWS_WITH_AS(s.validate(), doctest::Contains("nonnegative"), ValidationError);

  s.A = {};
  CHECK_THROWS_WITH_AS(s.validate(), doctest::Contains("exactly m matrices"), ValidationError);
}

TEST_CASE("rank-one diagonal Ricci: closed form against the connection engine") {
  Vec<Rat> a{Rat(1), Rat(1), Rat(2)};
  Vec<Rat> want = ricci_m1_diag(a);
  CHECK(want == Vec<Rat>{Rat(-4), Rat(-4), Rat(-8), Rat(-6)});

  CurvatureEngine<Rat> eng(build_metabelian(diag_spec(a)));
  Matrix<Rat> ric = eng.ricci_operator();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(ric(i, j) == (i == j ? want[i] : Rat(0)));
  CHECK(ricci_fast(diag_spec(a)) == ric);
}

TEST_CASE("block Ricci formula agrees with the engine for a non-normal action") {
  MetabelianSpec<Rat> s;
  s.k = 2;
  s.m = 1;
  Matrix<Rat> A(2, 2);
  A(0, 0) = A(0, 1) = A(1, 1) = Rat(1);  // a single Jordan block
  s.A = {A};
  Matrix<Rat> fast = ricci_fast(s);
  CurvatureEngine<Rat> eng(build_metabelian(s));
  CHECK(fast == eng.ricci_operator());
  CHECK(fast(0, 0) == Rat(-3, 2));
  CHECK(fast(0, 1) == Rat(-1));
  CHECK(fast(2, 2) == Rat(-5, 2));
}

TEST_CASE("sectional closed forms match the engine plane by plane") {
  MetabelianSpec<Rat> s = diag_spec({Rat(1), Rat(1), Rat(2)});
  CurvatureEngine<Rat> eng(build_metabelian(s));
  const int n = 4;
  // planes inside n
  CHECK(sectional_fast(s, unit(n, 0), unit(n, 1)) == Rat(-1));
  CHECK(sectional_fast(s, unit(n, 0), unit(n, 2)) == Rat(-2));
  // mixed planes
  CHECK(sectional_fast(s, unit(n, 0), unit(n, 3)) == Rat(-1));
  CHECK(sectional_fast(s, unit(n, 2), unit(n, 3)) == Rat(-4));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      CHECK(sectional_fast(s, unit(n, i), unit(n, j)) == eng.sectional(unit(n, i), unit(n, j)));

  CHECK_THROWS_WITH_AS(sectional_fast(s, vec_scale(Rat(2), unit(n, 0)), unit(n, 1)),
                       doctest::Contains("unit vectors"), ValidationError);
  CHECK_THROWS_WITH_AS(sectional_fast(s, unit(n, 0), unit(n, 0)),
                       doctest::Contains("orthogonal"), ValidationError);
  Vec<Rat> mixed(n, Rat(0));
  mixed[0] = Rat(3, 5);
  mixed[3] = Rat(4, 5);
  CHECK_THROWS_WITH_AS(sectional_fast(s, mixed, unit(n, 1)),
                       doctest::Contains("lie in n or in a"), ValidationError);
}

TEST_CASE("a-planes are flat") {
  MetabelianSpec<Rat> s;
  s.k = 2;
  s.m = 2;
  Matrix<Rat> a1 = Matrix<Rat>::identity(2), a2(2, 2);
  a2(0, 0) = Rat(1);
  a2(1, 1) = Rat(-1);
  s.A = {a1, a2};
  CHECK(sectional_fast(s, unit(4, 2), unit(4, 3)) == Rat(0));
  CurvatureEngine<Rat> eng(build_metabelian(s));
  CHECK(eng.sectional(unit(4, 2), unit(4, 3)) == Rat(0));
}

TEST_CASE("rational orthogonal rows give an exact Einstein metric") {
  EinsteinFamilySpec<Rat> fam;
  fam.r = Rat(1);
  fam.k = 4;
  fam.m = 2;
  fam.xi = {Vec<Rat>(4, Rat(1, 2)),
            Vec<Rat>{Rat(1, 2), Rat(-1, 2), Rat(1, 2), Rat(-1, 2)}};
  fam.validate();
  MetricLieAlgebra<Rat> m = build_metabelian(iwacom_build(fam));
  CurvatureEngine<Rat> eng(m);
  CHECK(eng.ricci_operator() == Rat(-1) * Matrix<Rat>::identity(6));
  auto fit = einstein_residual(m);
  CHECK(fit.lambda == Rat(-1));
  CHECK(fit.residual == 0.0);
  CHECK(kmax_formula(fam) == Rat(0));
}

TEST_CASE("family validation: orthonormality, leading vector shape") {
  EinsteinFamilySpec<Rat> fam;
  fam.r = Rat(1);
  fam.k = 2;
  fam.m = 2;
  fam.xi = {Vec<Rat>(2, Rat(1)), Vec<Rat>{Rat(1), Rat(-1)}};
  CHECK_THROWS_WITH_AS(fam.validate(), doctest::Contains("Gram matrix"), ValidationError);

  fam.m = 1;
  fam.xi = {Vec<Rat>{Rat(1), Rat(0)}};
  CHECK_THROWS_WITH_AS(fam.validate(), doctest::Contains("equal coordinates"), ValidationError);

  fam.m = 3;
  fam.xi = {Vec<Rat>(2, Rat(1)), Vec<Rat>(2, Rat(1)), Vec<Rat>(2, Rat(1))};
  CHECK_THROWS_WITH_AS(fam.validate(), doctest::Contains("1 <= m <= k"), ValidationError);
}

TEST_CASE("one-parameter three-dimensional family") {
  CHECK_THROWS_AS(k3m2_family(0.9, 1.0), ValidationError);
  CHECK_THROWS_AS(k3m2_family(0.1, 0.0), ValidationError);
  for (double r : {1.0, 2.0})
    for (double t : {0.0, 0.1, 0.3, 1.0 / std::sqrt(6.0)}) {
      CAPTURE(r);
      CAPTURE(t);
      auto spec = k3m2_build(t, r);
      spec.validate();
      CHECK(std::abs(k3m2_kmax(t, r) - r * r * (1.0 / 6.0 - t * t)) < 1e-12);
      auto fit = einstein_residual(build_metabelian(spec));
      CHECK(fit.residual <= 1e-10);
      CHECK(std::abs(fit.lambda + r * r) <= 1e-9);
    }
  // the flat-plane endpoint
  CHECK(std::abs(k3m2_kmax(1.0 / std::sqrt(6.0), 2.0)) < 1e-12);
}

TEST_CASE("block spec validation") {
  BlockSpaceSpec<Rat> b;
  b.metab = diag_spec({Rat(1), Rat(1), Rat(2), Rat(2)});
  b.blocks = {2, 2};
  b.validate();

  b.blocks = {2, 1, 1};
  CHECK_THROWS_WITH_AS(b.validate(), doctest::Contains("size >= 2"), ValidationError);
  b.blocks = {2, 3};
  CHECK_THROWS_WITH_AS(b.validate(), doctest::Contains("nonincreasing"), ValidationError);
  b.blocks = {2};
  CHECK_THROWS_WITH_AS(b.validate(), doctest::Contains("sum to k"), ValidationError);

  b.blocks = {2, 2};
  b.metab = diag_spec({Rat(1), Rat(3), Rat(2), Rat(2)});
  CHECK_THROWS_WITH_AS(b.validate(), doctest::Contains("unequal entries"), ValidationError);

  b.metab = diag_spec({Rat(1), Rat(1), Rat(2), Rat(2)});
  b.metab.A[0](0, 2) = Rat(1);
  b.metab.A[0](2, 0) = Rat(1);  // keep it symmetric so it still commutes
  CHECK_THROWS_WITH_AS(b.validate(), doctest::Contains("couples distinct blocks"),
                       ValidationError);
}

TEST_CASE("closed-form block conditions") {
  BlockSpaceSpec<Rat> b;
  b.metab = diag_spec({Rat(1), Rat(1), Rat(2), Rat(2)});
  b.blocks = {2, 2};
  auto c = block_theorem_check(b);
  CHECK(c.applicable);
  CHECK(c.all_positive);
  CHECK(c.distinct_blocks);

  b.metab = diag_spec({Rat(1), Rat(1), Rat(1), Rat(1)});
  c = block_theorem_check(b);
  CHECK_FALSE(c.distinct_blocks);

  b.metab.m = 2;
  b.metab.A.push_back(Matrix<Rat>(4, 4));
  c = block_theorem_check(b);
  CHECK_FALSE(c.applicable);
}

TEST_CASE("isometry-extended block space assembles to a valid reductive pair") {
  BlockSpaceSpec<Rat> b;
  b.metab = diag_spec({Rat(1), Rat(1), Rat(2), Rat(2)});
  b.blocks = {2, 2};
  auto bs = block_space_build(b);
  CHECK(bs.space.dim_h() == 2);
  CHECK(bs.space.dim_p() == 5);
  CHECK_FALSE(bs.space.symmetric_pair_check());
  CHECK(jacobi_check(bs.pair.g).ok);
  // the solvable part carries the same curvature as its flat-basis model
  CHECK(CurvatureEngine<Rat>(bs.solv).ricci_operator() ==
        ricci_fast(b.metab));
}

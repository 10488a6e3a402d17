#include "doctest.h"

#include "golie/linalg.hpp"

using namespace golie;

TEST_CASE("exact rref, rank and nullspace") {
  Matrix<Rat> m(2, 2);
  m(0, 0) = Rat(1);
  m(0, 1) = Rat(2);
  m(1, 0) = Rat(2);
  m(1, 1) = Rat(4);
  CHECK(rank(m, 0.0) == 1);
  Matrix<Rat> ns = nullspace(m, 0.0);
  REQUIRE(ns.rows == 1);
  CHECK(ns(0, 0) == Rat(-2));
  CHECK(ns(0, 1) == Rat(1));
}

TEST_CASE("nullspace of an empty constraint set is everything") {
  Matrix<Rat> none(0, 3);
  Matrix<Rat> ns = nullspace(none, 0.0);
  CHECK(ns == Matrix<Rat>::identity(3));
  Matrix<double> dnone(0, 3);
  CHECK(nullspace(dnone, 1e-12) == Matrix<double>::identity(3));
}

TEST_CASE("approx nullspace is a genuine kernel basis") {
  Matrix<double> m(1, 2);
  m(0, 0) = 1;
  m(0, 1) = 1;
  Matrix<double> ns = nullspace(m, 1e-12);
  REQUIRE(ns.rows == 1);
  CHECK(std::abs(ns(0, 0) + ns(0, 1)) < 1e-12);
  CHECK(std::abs(ns(0, 0)) > 0.1);
}

TEST_CASE("exact inverse") {
  Matrix<Rat> m(2, 2);
  m(0, 0) = Rat(2);
  m(0, 1) = Rat(1);
  m(1, 0) = Rat(1);
  m(1, 1) = Rat(1);
  Matrix<Rat> inv = inverse(m, 0.0);
  CHECK(m * inv == Matrix<Rat>::identity(2));
  CHECK(inv(0, 0) == Rat(1));
  CHECK(inv(0, 1) == Rat(-1));
  CHECK(inv(1, 1) == Rat(2));
}

TEST_CASE("solve_linear: feasible system returns the solution") {
  Matrix<Rat> a = Matrix<Rat>::identity(2);
  Vec<Rat> b{Rat(3), Rat(4)};
  LinSolve<Rat> s = solve_linear(a, b, 0.0);
  REQUIRE(s.feasible);
  CHECK(s.x == Vec<Rat>{Rat(3), Rat(4)});
}

TEST_CASE("solve_linear: infeasible system carries a multiplier certificate") {
  Matrix<Rat> a(2, 1);
  a(0, 0) = Rat(1);
  a(1, 0) = Rat(1);
  Vec<Rat> b{Rat(1), Rat(2)};
  LinSolve<Rat> s = solve_linear(a, b, 0.0);
  REQUIRE_FALSE(s.feasible);
  CHECK(s.rank_a == 1);
  CHECK(s.rank_aug == 2);
  // lambda^T A = 0 and lambda^T b != 0: the standard infeasibility witness
  REQUIRE(s.lambda.size() == 2);
  Rat la = s.lambda[0] * a(0, 0) + s.lambda[1] * a(1, 0);
  Rat lb = s.lambda[0] * b[0] + s.lambda[1] * b[1];
  CHECK(sgn_is_zero(la));
  CHECK_FALSE(sgn_is_zero(lb));
}

TEST_CASE("solve_linear: a zero row with nonzero right side is a one-row certificate") {
  Matrix<Rat> a(2, 1);
  a(0, 0) = Rat(1);
  a(1, 0) = Rat(0);
  Vec<Rat> b{Rat(0), Rat(5)};
  LinSolve<Rat> s = solve_linear(a, b, 0.0);
  REQUIRE_FALSE(s.feasible);
  CHECK(s.certificate_row == 1);
}

TEST_CASE("subspace membership, coordinates and orthogonal complement") {
  Matrix<Rat> rows(2, 3);
  rows(0, 0) = Rat(1);
  rows(0, 2) = Rat(1);
  rows(1, 1) = Rat(2);
  Subspace<Rat> s = Subspace<Rat>::from_rows(rows, 0.0);
  CHECK(s.dim() == 2);
  Vec<Rat> v{Rat(3), Rat(5), Rat(3)};
  REQUIRE(s.contains(v, 0.0));
  Vec<Rat> c = s.coords_in_basis(v, 0.0);
  Vec<Rat> back(3, Rat(0));
  for (int i = 0; i < 2; ++i) vec_axpy(back, c[i], s.basis.row(i));
  CHECK(back == v);
  CHECK_FALSE(s.contains(Vec<Rat>{Rat(1), Rat(0), Rat(0)}, 0.0));

  Subspace<Rat> comp = s.orthogonal_complement(Matrix<Rat>::identity(3), 0.0);
  CHECK(comp.dim() == 1);
  for (int i = 0; i < 2; ++i)
    CHECK(sgn_is_zero(dot(comp.basis.row(0), s.basis.row(i))));
}

TEST_CASE("symmetric eigenvalues come back sorted") {
  Matrix<double> m(3, 3);
  m(0, 0) = 3;
  m(1, 1) = 1;
  m(2, 2) = 2;
  Vec<double> ev = symmetric_eigenvalues(m);
  REQUIRE(ev.size() == 3);
  CHECK(ev[0] == doctest::Approx(1));
  CHECK(ev[1] == doctest::Approx(2));
  CHECK(ev[2] == doctest::Approx(3));
}

TEST_CASE("positive definiteness check") {
  Matrix<Rat> q = Matrix<Rat>::identity(2);
  CHECK(is_positive_definite(q, 0.0));
  q(0, 1) = q(1, 0) = Rat(2);
  CHECK_FALSE(is_positive_definite(q, 0.0));
}

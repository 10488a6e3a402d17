#ifndef GOLIE_HOMOGENEOUS_HPP
#define GOLIE_HOMOGENEOUS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "golie/lie_algebra.hpp"
#include "golie/linalg.hpp"
#include "golie/rng.hpp"

namespace golie {

/// Reductive pair (g, h) with a chosen complement p: g = h + p, [h, p] in p.
/// h_is_compact is a user assertion about the isotropy group, surfaced in
/// reports; it is not verifiable from the algebra data alone (and even a
/// compact-type h says nothing about connectedness of H, which reports flag).
template <class K>
struct HomogeneousPair {
  LieAlgebra<K> g;
  Subspace<K> h;
  Subspace<K> p;
  bool h_is_compact = false;

  int dim_h() const { return h.dim(); }
  int dim_p() const { return p.dim(); }

  void validate() const {
    if (h.ambient != g.n || p.ambient != g.n)
      throw ValidationError("pair spans do not live in the algebra");
    if (h.dim() + p.dim() != g.n)
      throw ValidationError("h and p do not form a direct-sum decomposition");
    Matrix<K> stacked(g.n, g.n);
    for (int i = 0; i < h.dim(); ++i) stacked.set_row(i, h.basis.row(i));
    for (int i = 0; i < p.dim(); ++i) stacked.set_row(h.dim() + i, p.basis.row(i));
    if (rank(stacked, g.eps) != g.n)
      throw ValidationError("h and p overlap (not a direct sum)");
    auto hc = is_subalgebra(g, h);
    if (!hc.closed)
      throw ValidationError("h is not a subalgebra (witness basis rows " +
                            std::to_string(hc.i) + "," + std::to_string(hc.j) + ")");
    for (int i = 0; i < h.dim(); ++i)
      for (int j = 0; j < p.dim(); ++j) {
        Vec<K> br = g.bracket(h.basis.row(i), p.basis.row(j));
        if (!p.contains(br, g.eps))
          throw ValidationError("complement is not reductive: [h_" + std::to_string(i) +
                                ", p_" + std::to_string(j) + "] leaves p");
      }
  }
};

/// Orthogonal complement of h w.r.t. an ad(h)-invariant ambient inner
/// product; the standard way to produce a reductive complement.
template <class K>
Subspace<K> reductive_complement(const LieAlgebra<K>& g, const Subspace<K>& h,
                                 const Matrix<K>& q_ambient) {
  if (!is_symmetric(q_ambient, g.eps) || !is_positive_definite(q_ambient, g.eps))
    throw ValidationError("ambient form must be a symmetric positive definite inner product");
  auto hc = is_subalgebra(g, h);
  if (!hc.closed) throw ValidationError("h is not a subalgebra");
  const double tol =
      scalar_traits<K>::is_exact ? 0.0 : g.eps * std::max(1.0, max_abs(q_ambient));
  for (int w = 0; w < h.dim(); ++w) {
    Vec<K> W = h.basis.row(w);
    for (int i = 0; i < g.n; ++i)
      for (int j = i; j < g.n; ++j) {
        K r = dot_q(g.bracket(W, g.basis_vector(i)), q_ambient, g.basis_vector(j)) +
              dot_q(g.basis_vector(i), q_ambient, g.bracket(W, g.basis_vector(j)));
        if (abs_double(r) > tol)
          throw ValidationError("ambient form is not ad(h)-invariant (witness h-row " +
                                std::to_string(w) + ", basis pair " + std::to_string(i) + "," +
                                std::to_string(j) + ")");
      }
  }
  return h.orthogonal_complement(q_ambient, g.eps);
}

/// Largest ideal of g contained in h (advisory effectivity check: a nonzero
/// result means G acts with a kernel on G/H).
template <class K>
Subspace<K> largest_ideal_in(const LieAlgebra<K>& g, const Subspace<K>& h) {
  Subspace<K> ideal = h;
  for (;;) {
    if (ideal.dim() == 0) return ideal;
    // {x in ideal : [e_j, x] in ideal for all j}
    Matrix<K> cond(g.n * g.n, ideal.dim());
    for (int j = 0; j < g.n; ++j)
      for (int t = 0; t < ideal.dim(); ++t) {
        Vec<K> res = ideal.reduce(g.bracket(g.basis_vector(j), ideal.basis.row(t)), g.eps);
        for (int k = 0; k < g.n; ++k) cond(j * g.n + k, t) = res[k];
      }
    Matrix<K> ker = nullspace(cond, g.eps);
    if (ker.rows == ideal.dim()) return ideal;
    Matrix<K> rows(ker.rows, g.n);
    for (int i = 0; i < ker.rows; ++i) {
      Vec<K> v(g.n, K(0));
      for (int t = 0; t < ideal.dim(); ++t) vec_axpy(v, ker(i, t), ideal.basis.row(t));
      rows.set_row(i, v);
    }
    ideal = Subspace<K>::from_rows(rows, g.eps);
  }
}

template <class K>
struct GeodesicCheck {
  bool geodesic = false;
  double res1 = 0, res2 = 0, res3 = 0;
  bool bracket_left_p = false;  // [X,Y] acquired an h-component (never, when reductive)
};

template <class K>
struct GoSolveResult {
  bool feasible = false;
  Vec<K> y_h_coords;            // solution in h-basis coordinates, when feasible
  LinSolve<K> cert;             // ranks + lambda certificate, when infeasible
  int certificate_p_row = -1;   // p-basis row of a single-row certificate
};

template <class K>
struct GoVerdict {
  bool witness_found = false;
  Vec<K> witness_p_coords;
  Vec<K> witness_ambient;
  GoSolveResult<K> solve;
  long samples_used = 0;
  long total_samples = 0;
  std::uint64_t seed = 0;
};

/// Reductive pair with an ad(h)-invariant metric Qp on the complement.
/// Hosts the geodesic-vector conditions and the geodesic-orbit test.
template <class K>
class InvariantMetricSpace {
 public:
  InvariantMetricSpace(HomogeneousPair<K> pair, Matrix<K> qp)
      : pair_(std::move(pair)), qp_(std::move(qp)) {
    pair_.validate();
    np_ = pair_.dim_p();
    nh_ = pair_.dim_h();
    if (qp_.rows != np_ || qp_.cols != np_)
      throw ValidationError("Qp dimension does not match dim p");
    if (!is_symmetric(qp_, eps()) ) throw ValidationError("Qp is not symmetric");
    if (!is_positive_definite(qp_, eps())) throw ValidationError("Qp is not positive definite");
    build_tables();
    check_invariance();
    qp_inv_ = inverse(qp_, eps());
  }

  const HomogeneousPair<K>& pair() const { return pair_; }
  const Matrix<K>& qp() const { return qp_; }
  int dim_p() const { return np_; }
  int dim_h() const { return nh_; }
  double eps() const { return pair_.g.eps; }

  Vec<K> p_to_ambient(const Vec<K>& x) const {
    Vec<K> v(pair_.g.n, K(0));
    for (int a = 0; a < np_; ++a) vec_axpy(v, x[a], pair_.p.basis.row(a));
    return v;
  }

  Vec<K> h_to_ambient(const Vec<K>& y) const {
    Vec<K> v(pair_.g.n, K(0));
    for (int b = 0; b < nh_; ++b) vec_axpy(v, y[b], pair_.h.basis.row(b));
    return v;
  }

  /// (h-coords, p-coords) of an ambient vector.
  std::pair<Vec<K>, Vec<K>> split(const Vec<K>& v) const {
    Vec<K> coords = mat_vec(minv_, v);
    Vec<K> yh(coords.begin(), coords.begin() + nh_);
    Vec<K> xp(coords.begin() + nh_, coords.end());
    return {yh, xp};
  }

  K inner_p(const Vec<K>& x, const Vec<K>& y) const { return dot_q(x, qp_, y); }

  /// U(X,Y) in p-coordinates: 2 Qp(U(X,Y), Z) = Qp([Z,X]_p, Y) + Qp(X, [Z,Y]_p).
  Vec<K> u_op(const Vec<K>& x, const Vec<K>& y) const {
    Vec<K> rhs(np_);
    for (int a = 0; a < np_; ++a) {
      Vec<K> zx = bracket_zp(a, x);  // [Z_a, X]_p
      Vec<K> zy = bracket_zp(a, y);
      rhs[a] = (inner_p(zx, y) + inner_p(x, zy)) / K(2);
    }
    return mat_vec(qp_inv_, rhs);
  }

  /// The three equivalent geodesic-vector conditions for X in p, Y in h.
  /// Their verdicts must agree; disagreement is an internal error.
  GeodesicCheck<K> geodesic_vector_check(const Vec<K>& x_p, const Vec<K>& y_h) const {
    GeodesicCheck<K> out;
    const double tol = cond_tol(x_p, y_h);

    // 1) [X,Y]_p = U(X,X); the bracket is projected to p and any h-component
    //    is flagged (it cannot appear over a validated reductive pair).
    Vec<K> xy = pair_.g.bracket(p_to_ambient(x_p), h_to_ambient(y_h));
    auto [xy_h, xy_p] = split(xy);
    out.bracket_left_p = max_abs(xy_h) > tol;
    Vec<K> diff = vec_sub(std::move(xy_p), u_op(x_p, x_p));
    out.res1 = max_abs(diff);

    // 2) Qp([Y,X]_p, Z) = Qp(X, [X,Z]_p) for all Z in the p-basis.
    Vec<K> yx(np_, K(0));
    for (int b = 0; b < nh_; ++b)
      for (int c = 0; c < np_; ++c) yx = vec_add(std::move(yx), vec_scale(K(y_h[b] * x_p[c]), wz_p_[b][c]));
    double r2 = 0;
    for (int a = 0; a < np_; ++a) {
      Vec<K> xz = bracket_xz(x_p, a);  // [X, Z_a]_p
      K lhs = inner_p(yx, unit(a));
      K rhs = inner_p(x_p, xz);
      r2 = std::max(r2, abs_double(lhs - rhs));
    }
    out.res2 = r2;

    // 3) Qp([X+Y, Z]_p, X) = 0 for all Z in the p-basis.
    out.res3 = go_residual(x_p, y_h);

    bool v1 = out.res1 <= tol, v2 = out.res2 <= tol, v3 = out.res3 <= tol;
    if (v1 != v2 || v2 != v3)
      throw Error("geodesic-vector criteria disagree (internal consistency failure)");
    out.geodesic = v1;
    return out;
  }

  /// max_Z |Qp([X+Y, Z]_p, X)| over the p-basis.
  double go_residual(const Vec<K>& x_p, const Vec<K>& y_h) const {
    double r = 0;
    for (int a = 0; a < np_; ++a) {
      Vec<K> v(np_, K(0));
      for (int c = 0; c < np_; ++c)
        if (!sgn_is_zero(x_p[c])) vec_axpy(v, x_p[c], zz_p_[c][a]);
      for (int b = 0; b < nh_; ++b)
        if (!sgn_is_zero(y_h[b])) vec_axpy(v, y_h[b], wz_p_[b][a]);
      r = std::max(r, abs_double(inner_p(v, x_p)));
    }
    return r;
  }

  /// Solves the linear system "some X + Y is geodesic" for Y in h at fixed X
  /// (condition 2 rows over the p-basis). Infeasibility certifies that no
  /// geodesic vector projects onto X, i.e. a geodesic-orbit counterexample.
  GoSolveResult<K> go_solve(const Vec<K>& x_p) const {
    Matrix<K> A(np_, nh_);
    Vec<K> b(np_);
    for (int bcol = 0; bcol < nh_; ++bcol) {
      Vec<K> wx(np_, K(0));  // [W_b, X]_p
      for (int c = 0; c < np_; ++c)
        if (!sgn_is_zero(x_p[c])) vec_axpy(wx, x_p[c], wz_p_[bcol][c]);
      Vec<K> qwx = mat_vec(qp_, wx);
      for (int a = 0; a < np_; ++a) A(a, bcol) = qwx[a];
    }
    Vec<K> qx = mat_vec(qp_, x_p);
    for (int a = 0; a < np_; ++a) b[a] = dot(qx, bracket_xz(x_p, a));
    GoSolveResult<K> out;
    out.cert = solve_linear(A, b, eps());
    out.feasible = out.cert.feasible;
    if (out.feasible)
      out.y_h_coords = out.cert.x;
    else
      out.certificate_p_row = out.cert.certificate_row;
    return out;
  }

  /// Deterministic one-sided geodesic-orbit test: iterates go_solve over the
  /// p-basis, all pairwise sums and differences, then seeded random rational
  /// vectors, returning the first infeasible X as witness. "No witness" is a
  /// sampled statement, never a GO certificate.
  GoVerdict<K> go_test(long samples, std::uint64_t seed) const {
    GoVerdict<K> verdict;
    verdict.seed = seed;
    std::vector<Vec<K>> xs;
    for (int a = 0; a < np_; ++a) xs.push_back(unit_vec(a));
    for (int a = 0; a < np_; ++a)
      for (int b = a + 1; b < np_; ++b) {
        Vec<K> s = unit_vec(a);
        s[b] = K(1);
        xs.push_back(s);
        s[b] = K(-1);
        xs.push_back(s);
      }
    SeededRng rng(seed);
    for (long i = 0; i < samples; ++i) xs.push_back(rng.vec_small_nonzero<K>(np_));
    verdict.total_samples = static_cast<long>(xs.size());
    for (size_t i = 0; i < xs.size(); ++i) {
      GoSolveResult<K> r = go_solve(xs[i]);
      if (!r.feasible) {
        verdict.witness_found = true;
        verdict.witness_p_coords = xs[i];
        verdict.witness_ambient = p_to_ambient(xs[i]);
        verdict.solve = std::move(r);
        verdict.samples_used = static_cast<long>(i) + 1;
        return verdict;
      }
    }
    verdict.samples_used = verdict.total_samples;
    return verdict;
  }

  /// Matrices of ad(W_b)|p in p-coordinates, one per h-basis row.
  std::vector<Matrix<K>> isotropy_action_matrices() const {
    std::vector<Matrix<K>> mats;
    mats.reserve(nh_);
    for (int b = 0; b < nh_; ++b) {
      Matrix<K> m(np_, np_);
      for (int a = 0; a < np_; ++a)
        for (int k = 0; k < np_; ++k) m(k, a) = wz_p_[b][a][k];
      mats.push_back(std::move(m));
    }
    return mats;
  }

  /// [p, p] inside h makes the pair symmetric-like (Cartan relation).
  bool symmetric_pair_check() const {
    for (int a = 0; a < np_; ++a)
      for (int b = a + 1; b < np_; ++b)
        if (!is_zero_vec(zz_p_[a][b], eps() * 10)) return false;
    return true;
  }

 private:
  HomogeneousPair<K> pair_;
  Matrix<K> qp_, qp_inv_;
  Matrix<K> minv_;  // inverse of [h-basis | p-basis] columns
  int np_ = 0, nh_ = 0;
  std::vector<std::vector<Vec<K>>> wz_p_;  // [b][a] = ([W_b, Z_a])_p-coords
  std::vector<std::vector<Vec<K>>> zz_p_;  // [c][a] = ([Z_c, Z_a])_p-coords

  Vec<K> unit(int a) const { return unit_vec(a); }

  Vec<K> unit_vec(int a) const {
    Vec<K> v(np_, K(0));
    v[a] = K(1);
    return v;
  }

  /// [Z_a, x]_p for x in p-coords.
  Vec<K> bracket_zp(int a, const Vec<K>& x) const {
    Vec<K> v(np_, K(0));
    for (int c = 0; c < np_; ++c)
      if (!sgn_is_zero(x[c])) vec_axpy(v, x[c], zz_p_[a][c]);
    return v;
  }

  /// [x, Z_a]_p for x in p-coords.
  Vec<K> bracket_xz(const Vec<K>& x, int a) const {
    Vec<K> v(np_, K(0));
    for (int c = 0; c < np_; ++c)
      if (!sgn_is_zero(x[c])) vec_axpy(v, x[c], zz_p_[c][a]);
    return v;
  }

  double cond_tol(const Vec<K>& x, const Vec<K>& y) const {
    if constexpr (scalar_traits<K>::is_exact) return 0.0;
    double sx = std::max(1.0, max_abs(x)), sy = std::max(1.0, max_abs(y));
    return eps() * std::max(1.0, max_abs(qp_)) * sx * (sx + sy);
  }

  void build_tables() {
    const auto& g = pair_.g;
    Matrix<K> m(g.n, g.n);  // columns: h-basis then p-basis
    for (int b = 0; b < nh_; ++b)
      for (int k = 0; k < g.n; ++k) m(k, b) = pair_.h.basis(b, k);
    for (int a = 0; a < np_; ++a)
      for (int k = 0; k < g.n; ++k) m(k, nh_ + a) = pair_.p.basis(a, k);
    minv_ = inverse(m, g.eps);

    wz_p_.assign(nh_, std::vector<Vec<K>>(np_));
    for (int b = 0; b < nh_; ++b)
      for (int a = 0; a < np_; ++a) {
        Vec<K> br = g.bracket(pair_.h.basis.row(b), pair_.p.basis.row(a));
        wz_p_[b][a] = split(br).second;
      }
    zz_p_.assign(np_, std::vector<Vec<K>>(np_));
    for (int c = 0; c < np_; ++c)
      for (int a = 0; a < np_; ++a) {
        Vec<K> br = g.bracket(pair_.p.basis.row(c), pair_.p.basis.row(a));
        zz_p_[c][a] = split(br).second;
      }
  }

  /// ad(h)-skewness of Qp on p, with a witness triple on failure.
  void check_invariance() const {
    const double tol =
        scalar_traits<K>::is_exact ? 0.0 : eps() * std::max(1.0, max_abs(qp_)) * 10;
    for (int b = 0; b < nh_; ++b)
      for (int i = 0; i < np_; ++i)
        for (int j = i; j < np_; ++j) {
          K r = inner_p(wz_p_[b][i], unit(j)) + inner_p(unit(i), wz_p_[b][j]);
          if (abs_double(r) > tol)
            throw ValidationError("Qp is not ad(h)-invariant (witness h-row " +
                                  std::to_string(b) + ", p-rows " + std::to_string(i) + "," +
                                  std::to_string(j) + ")");
        }
  }
};

}  // namespace golie

#endif

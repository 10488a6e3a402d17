#ifndef GOLIE_SOLVMANIFOLD_HPP
#define GOLIE_SOLVMANIFOLD_HPP

#include <cmath>
#include <string>
#include <vector>

#include "golie/homogeneous.hpp"
#include "golie/lie_algebra.hpp"
#include "golie/linalg.hpp"
#include "golie/metric.hpp"

namespace golie {

/// Metabelian metric Lie algebra data: an abelian k-dim part n acted on by
/// an abelian m-dim part a through commuting matrices A_j = ad(f_j)|n, with
/// the f-basis normalized so only A_1 carries trace.
template <class K>
struct MetabelianSpec {
  int k = 0;
  int m = 0;
  std::vector<Matrix<K>> A;
  double eps = 1e-9;

  void validate() const {
    if (k <= 0 || m <= 0) throw ValidationError("metabelian spec needs k >= 1 and m >= 1");
    if (static_cast<int>(A.size()) != m)
      throw ValidationError("metabelian spec needs exactly m matrices");
    for (int j = 0; j < m; ++j)
      if (A[j].rows != k || A[j].cols != k)
        throw ValidationError("A_" + std::to_string(j + 1) + " is not k x k");
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        Matrix<K> comm = A[i] * A[j] - A[j] * A[i];
        if (max_abs(comm) > eps)
          throw ValidationError("A_" + std::to_string(i + 1) + " and A_" + std::to_string(j + 1) +
                                " do not commute");
      }
    if (to_double(trace_of(A[0])) < -eps)
      throw ValidationError("trace(A_1) must be nonnegative");
    for (int j = 1; j < m; ++j)
      if (abs_double(trace_of(A[j])) > eps)
        throw ValidationError("trace(A_" + std::to_string(j + 1) + ") must vanish");
  }

  static K trace_of(const Matrix<K>& a) {
    K t(0);
    for (int i = 0; i < a.rows; ++i) t += a(i, i);
    return t;
  }

  Matrix<K> sym(int j) const {
    Matrix<K> s = A[j] + A[j].transpose();
    for (auto& x : s.a) x /= K(2);
    return s;
  }
};

/// Orthogonal semidirect sum of abelian n = span{e_1..e_k} and abelian
/// a = span{f_1..f_m}, with [f_j, e_i] = A_j e_i and the basis orthonormal.
template <class K>
MetricLieAlgebra<K> build_metabelian(const MetabelianSpec<K>& spec) {
  spec.validate();
  const int n = spec.k + spec.m;
  LieAlgebra<K> g("metabelian", n);
  g.eps = spec.eps;
  for (int i = 0; i < spec.k; ++i) g.labels[i] = "e" + std::to_string(i + 1);
  for (int j = 0; j < spec.m; ++j) g.labels[spec.k + j] = "f" + std::to_string(j + 1);
  for (int j = 0; j < spec.m; ++j)
    for (int i = 0; i < spec.k; ++i) {
      Vec<K> img(n, K(0));
      for (int r = 0; r < spec.k; ++r) img[r] = spec.A[j](r, i);
      g.set_bracket(spec.k + j, i, img);
    }
  auto jr = jacobi_check(g);
  if (!jr.ok) throw ValidationError("metabelian construction violates the Jacobi identity");
  MetricLieAlgebra<K> m{std::move(g), Matrix<K>::identity(n)};
  m.validate();
  return m;
}

/// Ricci tensor in the orthonormal basis, block-diagonal as diag(R, -L):
/// R = 1/2 sum_j [A_j, A_j^t] - trace(A_1) A_1^s on n, L_pq = trace(A_p^s A_q^s).
template <class K>
Matrix<K> ricci_fast(const MetabelianSpec<K>& spec) {
  spec.validate();
  const int k = spec.k, m = spec.m;
  Matrix<K> ric(k + m, k + m);
  Matrix<K> r(k, k);
  for (int j = 0; j < m; ++j) {
    Matrix<K> at = spec.A[j].transpose();
    Matrix<K> comm = spec.A[j] * at - at * spec.A[j];
    for (int u = 0; u < k * k; ++u) r.a[u] += comm.a[u] / K(2);
  }
  K t = MetabelianSpec<K>::trace_of(spec.A[0]);
  Matrix<K> a1s = spec.sym(0);
  for (int u = 0; u < k * k; ++u) r.a[u] -= t * a1s.a[u];
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) ric(i, j) = r(i, j);
  for (int p = 0; p < m; ++p) {
    Matrix<K> ps = spec.sym(p);
    for (int q = 0; q < m; ++q) {
      Matrix<K> qs = spec.sym(q);
      K l(0);
      for (int u = 0; u < k; ++u)
        for (int v = 0; v < k; ++v) l += ps(u, v) * qs(v, u);
      ric(k + p, k + q) = -l;
    }
  }
  return ric;
}

/// Ricci diagonal for m = 1 with A_1 = diag(a): (-t a_1, ..., -t a_k, -sum a_i^2).
template <class K>
Vec<K> ricci_m1_diag(const Vec<K>& a) {
  K t(0), sq(0);
  for (const auto& ai : a) {
    t += ai;
    sq += ai * ai;
  }
  Vec<K> out(a.size() + 1);
  for (size_t i = 0; i < a.size(); ++i) out[i] = -t * a[i];
  out[a.size()] = -sq;
  return out;
}

namespace detail {

template <class K>
bool unit_in(const Vec<K>& v, double eps) {
  return abs_double(dot(v, v) - K(1)) <= eps;
}

}  // namespace detail

/// Sectional curvature of the plane through two orthonormal vectors of the
/// metabelian space, by the closed formulas: zero on a-planes,
/// -Q(A_Y^2 X, X) for mixed planes, and
/// sum_j Q(A_j X, X')^2 - sum_j Q(A_j X, X) Q(A_j X', X') inside n.
/// Vectors are given in the full e_1..e_k, f_1..f_m coordinates and must lie
/// in n or in a outright.
template <class K>
K sectional_fast(const MetabelianSpec<K>& spec, const Vec<K>& v, const Vec<K>& w) {
  const int k = spec.k, n = spec.k + spec.m;
  if (static_cast<int>(v.size()) != n || static_cast<int>(w.size()) != n)
    throw ValidationError("sectional_fast: vectors must have dimension k+m");
  auto in_n = [&](const Vec<K>& x) {
    for (int j = k; j < n; ++j)
      if (abs_double(x[j]) > spec.eps) return false;
    return true;
  };
  auto in_a = [&](const Vec<K>& x) {
    for (int i = 0; i < k; ++i)
      if (abs_double(x[i]) > spec.eps) return false;
    return true;
  };
  if (!detail::unit_in(v, spec.eps) || !detail::unit_in(w, spec.eps))
    throw ValidationError("sectional_fast: arguments must be unit vectors");
  if (abs_double(dot(v, w)) > spec.eps)
    throw ValidationError("sectional_fast: arguments must be orthogonal");

  auto n_part = [&](const Vec<K>& x) { return Vec<K>(x.begin(), x.begin() + k); };
  auto a_part = [&](const Vec<K>& x) { return Vec<K>(x.begin() + k, x.end()); };

  if (in_a(v) && in_a(w)) return K(0);

  if ((in_a(v) && in_n(w)) || (in_n(v) && in_a(w))) {
    Vec<K> y = in_a(v) ? a_part(v) : a_part(w);
    Vec<K> x = in_a(v) ? n_part(w) : n_part(v);
    Matrix<K> ay(k, k);
    for (int j = 0; j < spec.m; ++j)
      for (int u = 0; u < k * k; ++u) ay.a[u] += y[j] * spec.A[j].a[u];
    Vec<K> ax = mat_vec(ay, mat_vec(ay, x));
    return -dot(ax, x);
  }

  if (in_n(v) && in_n(w)) {
    Vec<K> x = n_part(v), xp = n_part(w);
    K total(0);
    for (int j = 0; j < spec.m; ++j) {
      Vec<K> ajx = mat_vec(spec.A[j], x);
      Vec<K> ajxp = mat_vec(spec.A[j], xp);
      K cross = dot(ajx, xp);
      total += cross * cross - dot(ajx, x) * dot(ajxp, xp);
    }
    return total;
  }
  throw ValidationError("sectional_fast: arguments must lie in n or in a");
}

/// Einstein deviation of any metric Lie algebra through the general engine.
template <class K>
EinsteinFit<K> einstein_residual(const MetricLieAlgebra<K>& m) {
  return CurvatureEngine<K>(m).einstein_fit();
}

/// Diagonal Einstein family data: m vectors xi_i in R^k with r^{-1} xi_i
/// orthonormal and xi_1 a positive constant vector.
template <class K>
struct EinsteinFamilySpec {
  K r{};
  int k = 0;
  int m = 0;
  std::vector<Vec<K>> xi;
  double eps = 1e-9;

  void validate() const {
    if (to_double(r) <= 0) throw ValidationError("family needs r > 0");
    if (k <= 0 || m <= 0 || m > k) throw ValidationError("family needs 1 <= m <= k");
    if (static_cast<int>(xi.size()) != m) throw ValidationError("family needs m vectors");
    for (const auto& x : xi)
      if (static_cast<int>(x.size()) != k) throw ValidationError("xi vectors must have length k");
    Matrix<K> gram(m, m);
    K rr = r * r;
    bool ok = true;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        gram(i, j) = dot(xi[i], xi[j]);
        K want = (i == j) ? rr : K(0);
        if (abs_double(gram(i, j) - want) > eps * std::max(1.0, to_double(rr))) ok = false;
      }
    if (!ok) {
      std::string msg = "family vectors are not r-orthonormal; Gram matrix:";
      for (int i = 0; i < m; ++i) {
        msg += "\n ";
        for (int j = 0; j < m; ++j) msg += " " + std::to_string(to_double(gram(i, j)));
      }
      throw ValidationError(msg);
    }
    for (int i = 1; i < k; ++i)
      if (abs_double(xi[0][i] - xi[0][0]) > eps)
        throw ValidationError("xi_1 must have equal coordinates");
    if (to_double(xi[0][0]) <= 0) throw ValidationError("xi_1 must be positive");
  }
};

/// The family's metabelian spec: A_j = diag(xi_j).
template <class K>
MetabelianSpec<K> iwacom_build(const EinsteinFamilySpec<K>& family) {
  family.validate();
  MetabelianSpec<K> spec;
  spec.k = family.k;
  spec.m = family.m;
  spec.eps = family.eps;
  for (int j = 0; j < family.m; ++j) {
    Matrix<K> a(family.k, family.k);
    for (int i = 0; i < family.k; ++i) a(i, i) = family.xi[j][i];
    spec.A.push_back(std::move(a));
  }
  return spec;
}

/// Largest sectional curvature over coordinate planes of n:
/// max over i != j of -sum_l xi_l^i xi_l^j.
template <class K>
K kmax_formula(const EinsteinFamilySpec<K>& family) {
  family.validate();
  if (family.k < 2) throw ValidationError("kmax needs k >= 2");
  bool first = true;
  K best(0);
  for (int i = 0; i < family.k; ++i)
    for (int j = i + 1; j < family.k; ++j) {
      K s(0);
      for (int l = 0; l < family.m; ++l) s += family.xi[l][i] * family.xi[l][j];
      K cand = -s;
      if (first || to_double(cand) > to_double(best)) best = cand;
      first = false;
    }
  return best;
}

/// One-parameter Einstein family with k=3, m=2: ad(f_1) = (r/sqrt 3) Id and
/// ad(f_2) = r diag((t+s)/2, -t, (t-s)/2) with s = sqrt(2-3t^2). The entries
/// are irrational, so this family lives in floating point.
inline EinsteinFamilySpec<double> k3m2_family(double t, double r) {
  const double tmax = 1.0 / std::sqrt(6.0);
  if (!(r > 0)) throw ValidationError("k3m2 needs r > 0");
  if (t < -1e-12 || t > tmax + 1e-12) throw ValidationError("k3m2 needs t in [0, 1/sqrt(6)]");
  t = std::min(std::max(t, 0.0), tmax);
  const double s = std::sqrt(2.0 - 3.0 * t * t);
  EinsteinFamilySpec<double> fam;
  fam.r = r;
  fam.k = 3;
  fam.m = 2;
  fam.xi = {Vec<double>{r / std::sqrt(3.0), r / std::sqrt(3.0), r / std::sqrt(3.0)},
            Vec<double>{r * (t + s) / 2.0, -r * t, r * (t - s) / 2.0}};
  fam.eps = 1e-9;
  return fam;
}

inline MetabelianSpec<double> k3m2_build(double t, double r) {
  return iwacom_build(k3m2_family(t, r));
}

inline double k3m2_kmax(double t, double r) { return kmax_formula(k3m2_family(t, r)); }

/// Block-diagonal metabelian spec whose symmetry group picks up a factor
/// SO(k_1) x ... x SO(k_l): every A_j is scalar on each block.
template <class K>
struct BlockSpaceSpec {
  std::vector<int> blocks;
  MetabelianSpec<K> metab;

  void validate() const {
    metab.validate();
    if (blocks.empty()) throw ValidationError("block spec needs at least one block");
    int total = 0;
    for (size_t q = 0; q < blocks.size(); ++q) {
      if (blocks[q] < 2) throw ValidationError("blocks must have size >= 2");
      if (q + 1 < blocks.size() && blocks[q] < blocks[q + 1])
        throw ValidationError("blocks must be listed in nonincreasing size");
      total += blocks[q];
    }
    if (total != metab.k) throw ValidationError("block sizes must sum to k");
    for (int j = 0; j < metab.m; ++j) {
      const Matrix<K>& a = metab.A[j];
      for (int u = 0; u < metab.k; ++u)
        for (int v = 0; v < metab.k; ++v) {
          if (u != v && abs_double(a(u, v)) > metab.eps)
            throw ValidationError("A_" + std::to_string(j + 1) +
                                  (block_of(u) == block_of(v)
                                       ? " is not scalar on block " + std::to_string(block_of(u) + 1)
                                       : std::string(" couples distinct blocks")));
          if (u != v && block_of(u) == block_of(v) &&
              abs_double(a(u, u) - a(v, v)) > metab.eps)
            throw ValidationError("A_" + std::to_string(j + 1) + " has unequal entries on block " +
                                  std::to_string(block_of(u) + 1));
        }
    }
  }

  int block_of(int i) const {
    int off = 0;
    for (size_t q = 0; q < blocks.size(); ++q) {
      if (i < off + blocks[q]) return static_cast<int>(q);
      off += blocks[q];
    }
    return -1;
  }

  /// Scalar value of A_j on block q.
  K value(int j, int q) const {
    int off = 0;
    for (int u = 0; u < q; ++u) off += blocks[u];
    return metab.A[j](off, off);
  }
};

struct BlockTheoremCheck {
  bool applicable = false;   // the closed-form conditions concern m = 1
  bool all_positive = false;
  bool distinct_blocks = false;
};

template <class K>
BlockTheoremCheck block_theorem_check(const BlockSpaceSpec<K>& spec) {
  BlockTheoremCheck out;
  out.applicable = (spec.metab.m == 1);
  if (!out.applicable) return out;
  out.all_positive = true;
  out.distinct_blocks = true;
  const int l = static_cast<int>(spec.blocks.size());
  for (int q = 0; q < l; ++q)
    if (to_double(spec.value(0, q)) <= 0) out.all_positive = false;
  for (int q = 0; q < l; ++q)
    for (int s = q + 1; s < l; ++s)
      if (abs_double(spec.value(0, q) - spec.value(0, s)) <= spec.metab.eps)
        out.distinct_blocks = false;
  return out;
}

template <class K>
struct BlockSpace {
  HomogeneousPair<K> pair;
  InvariantMetricSpace<K> space;
  MetricLieAlgebra<K> solv;  // the underlying metabelian algebra with its metric
};

/// Assembles g = (so(k_1) + ... + so(k_l)) + s with h the so-sum and
/// p = n + a carrying the orthonormal metric. Basis order: so-block
/// generators (skew E_ab - E_ba per block), then e_1..e_k, then f_1..f_m.
template <class K>
BlockSpace<K> block_space_build(const BlockSpaceSpec<K>& spec) {
  spec.validate();
  const int k = spec.metab.k, m = spec.metab.m;
  int dim_h = 0;
  for (int kq : spec.blocks) dim_h += kq * (kq - 1) / 2;
  const int n = dim_h + k + m;

  // Skew generator matrices, embedded block by block.
  std::vector<Matrix<K>> gens;
  std::vector<std::string> gen_labels;
  int off = 0;
  for (size_t q = 0; q < spec.blocks.size(); ++q) {
    for (int a = 0; a < spec.blocks[q]; ++a)
      for (int b = a + 1; b < spec.blocks[q]; ++b) {
        Matrix<K> w(k, k);
        w(off + a, off + b) = K(1);
        w(off + b, off + a) = K(-1);
        gens.push_back(std::move(w));
        gen_labels.push_back("w" + std::to_string(q + 1) + "_" + std::to_string(a + 1) +
                             std::to_string(b + 1));
      }
    off += spec.blocks[q];
  }

  LieAlgebra<K> g("block-space", n);
  g.eps = spec.metab.eps;
  for (int i = 0; i < dim_h; ++i) g.labels[i] = gen_labels[i];
  for (int i = 0; i < k; ++i) g.labels[dim_h + i] = "e" + std::to_string(i + 1);
  for (int j = 0; j < m; ++j) g.labels[dim_h + k + j] = "f" + std::to_string(j + 1);

  auto coords_of_skew = [&](const Matrix<K>& w) {
    Vec<K> c(n, K(0));
    int idx = 0, o = 0;
    for (size_t q = 0; q < spec.blocks.size(); ++q) {
      for (int a = 0; a < spec.blocks[q]; ++a)
        for (int b = a + 1; b < spec.blocks[q]; ++b) c[idx++] = w(o + a, o + b);
      o += spec.blocks[q];
    }
    return c;
  };

  for (int i = 0; i < dim_h; ++i) {
    for (int j = i + 1; j < dim_h; ++j) {
      Matrix<K> comm = gens[i] * gens[j] - gens[j] * gens[i];
      g.set_bracket(i, j, coords_of_skew(comm));
    }
    for (int c = 0; c < k; ++c) {
      Vec<K> img(n, K(0));
      for (int r = 0; r < k; ++r) img[dim_h + r] = gens[i](r, c);
      g.set_bracket(i, dim_h + c, img);
    }
  }
  for (int j = 0; j < m; ++j)
    for (int c = 0; c < k; ++c) {
      Vec<K> img(n, K(0));
      for (int r = 0; r < k; ++r) img[dim_h + r] = spec.metab.A[j](r, c);
      g.set_bracket(dim_h + k + j, dim_h + c, img);
    }
  auto jr = jacobi_check(g);
  if (!jr.ok) throw ValidationError("block-space construction violates the Jacobi identity");

  Matrix<K> h_rows(dim_h, n), p_rows(k + m, n);
  for (int i = 0; i < dim_h; ++i) h_rows(i, i) = K(1);
  for (int i = 0; i < k + m; ++i) p_rows(i, dim_h + i) = K(1);
  HomogeneousPair<K> pair{std::move(g), Subspace<K>::from_rows(h_rows, spec.metab.eps),
                          Subspace<K>::from_rows(p_rows, spec.metab.eps), true};
  InvariantMetricSpace<K> space(pair, Matrix<K>::identity(k + m));
  MetricLieAlgebra<K> solv = build_metabelian(spec.metab);
  return BlockSpace<K>{std::move(pair), std::move(space), std::move(solv)};
}

}  // namespace golie

#endif

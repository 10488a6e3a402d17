#ifndef GOLIE_LINALG_HPP
#define GOLIE_LINALG_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <cassert>
#include <vector>

#include "golie/scalar.hpp"

namespace golie {

template <class K>
using Vec = std::vector<K>;

/// Dense row-major matrix over an exact or floating-point field.
template <class K>
struct Matrix {
  int rows = 0, cols = 0;
  std::vector<K> a;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, K(0)) {}

  K& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const K& operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = K(1);
    return m;
  }

  Vec<K> row(int i) const {
    Vec<K> r(cols);
    for (int j = 0; j < cols; ++j) r[j] = (*this)(i, j);
    return r;
  }

  void set_row(int i, const Vec<K>& v) {
    assert(static_cast<int>(v.size()) == cols);
    for (int j = 0; j < cols; ++j) (*this)(i, j) = v[j];
  }

  Matrix transpose() const {
    Matrix t(cols, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool operator==(const Matrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

inline bool sgn_is_zero(const Rat& x) { return sgn(x) == 0; }
inline bool sgn_is_zero(double x) { return x == 0.0; }

template <class K>
Matrix<K> operator*(const Matrix<K>& x, const Matrix<K>& y) {
  assert(x.cols == y.rows);
  Matrix<K> z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const K& xik = x(i, k);
      if (scalar_traits<K>::is_exact && sgn_is_zero(xik)) continue;
      for (int j = 0; j < y.cols; ++j) z(i, j) += xik * y(k, j);
    }
  return z;
}

template <class K>
Matrix<K> operator+(const Matrix<K>& x, const Matrix<K>& y) {
  assert(x.rows == y.rows && x.cols == y.cols);
  Matrix<K> z = x;
  for (size_t i = 0; i < z.a.size(); ++i) z.a[i] += y.a[i];
  return z;
}

template <class K>
Matrix<K> operator-(const Matrix<K>& x, const Matrix<K>& y) {
  assert(x.rows == y.rows && x.cols == y.cols);
  Matrix<K> z = x;
  for (size_t i = 0; i < z.a.size(); ++i) z.a[i] -= y.a[i];
  return z;
}

template <class K>
Matrix<K> operator*(const K& c, const Matrix<K>& x) {
  Matrix<K> z = x;
  for (auto& e : z.a) e *= c;
  return z;
}

template <class K>
Vec<K> mat_vec(const Matrix<K>& m, const Vec<K>& v) {
  assert(static_cast<int>(v.size()) == m.cols);
  Vec<K> r(m.rows, K(0));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) r[i] += m(i, j) * v[j];
  return r;
}

template <class K>
K dot(const Vec<K>& x, const Vec<K>& y) {
  assert(x.size() == y.size());
  K s(0);
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

/// x^T Q y for a symmetric form Q.
template <class K>
K dot_q(const Vec<K>& x, const Matrix<K>& q, const Vec<K>& y) {
  return dot(x, mat_vec(q, y));
}

template <class K>
Vec<K> vec_add(Vec<K> x, const Vec<K>& y) {
  for (size_t i = 0; i < x.size(); ++i) x[i] += y[i];
  return x;
}

template <class K>
Vec<K> vec_sub(Vec<K> x, const Vec<K>& y) {
  for (size_t i = 0; i < x.size(); ++i) x[i] -= y[i];
  return x;
}

template <class K>
Vec<K> vec_scale(const K& c, Vec<K> x) {
  for (auto& e : x) e *= c;
  return x;
}

template <class K>
void vec_axpy(Vec<K>& y, const K& c, const Vec<K>& x) {
  for (size_t i = 0; i < y.size(); ++i) y[i] += c * x[i];
}

template <class K>
double max_abs(const Vec<K>& v) {
  double m = 0;
  for (const auto& e : v) m = std::max(m, abs_double(e));
  return m;
}

template <class K>
double max_abs(const Matrix<K>& m) {
  return max_abs(m.a);
}

template <class K>
bool is_zero_vec(const Vec<K>& v, double eps) {
  for (const auto& e : v)
    if (!scalar_traits<K>::is_zero(e, eps)) return false;
  return true;
}

template <class K>
Eigen::MatrixXd to_eigen(const Matrix<K>& m) {
  Eigen::MatrixXd e(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) e(i, j) = to_double(m(i, j));
  return e;
}

inline Matrix<double> from_eigen(const Eigen::MatrixXd& e) {
  Matrix<double> m(static_cast<int>(e.rows()), static_cast<int>(e.cols()));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) m(i, j) = e(i, j);
  return m;
}

template <class K>
Matrix<double> mat_to_double(const Matrix<K>& m) {
  Matrix<double> d(m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); ++i) d.a[i] = to_double(m.a[i]);
  return d;
}

template <class K>
Vec<double> vec_to_double(const Vec<K>& v) {
  Vec<double> d(v.size());
  for (size_t i = 0; i < v.size(); ++i) d[i] = to_double(v[i]);
  return d;
}

// ---------------------------------------------------------------------------
// Row reduction.
//
// Exact mode pivots on the first nonzero entry; approx mode pivots on the
// largest magnitude with dead entries below eps * (initial max magnitude).
// ---------------------------------------------------------------------------

template <class K>
struct RowEchelon {
  Matrix<K> r;                // reduced row-echelon form, zero rows dropped
  std::vector<int> pivots;    // pivot column per kept row
  int rank = 0;
};

template <class K>
RowEchelon<K> rref(Matrix<K> m, double eps) {
  const double scale = std::max(1.0, max_abs(m));
  const double dead = scalar_traits<K>::is_exact ? 0.0 : eps * scale;
  RowEchelon<K> out;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int piv = -1;
    if constexpr (scalar_traits<K>::is_exact) {
      for (int i = r; i < m.rows; ++i)
        if (!sgn_is_zero(m(i, c))) { piv = i; break; }
    } else {
      double best = dead;
      for (int i = r; i < m.rows; ++i)
        if (std::abs(m(i, c)) > best) { best = std::abs(m(i, c)); piv = i; }
    }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m(piv, j), m(r, j));
    K inv = K(1) / m(r, c);
    for (int j = 0; j < m.cols; ++j) m(r, j) *= inv;
    m(r, c) = K(1);
    for (int i = 0; i < m.rows; ++i) {
      if (i == r) continue;
      K f = m(i, c);
      if (sgn_is_zero(f)) continue;
      for (int j = 0; j < m.cols; ++j) m(i, j) -= f * m(r, j);
      m(i, c) = K(0);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.r = Matrix<K>(r, m.cols);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < m.cols; ++j) out.r(i, j) = m(i, j);
  return out;
}

/// Rank. Approx mode counts singular values above eps * sigma_max.
template <class K>
int rank(const Matrix<K>& m, double eps) {
  if (m.rows == 0 || m.cols == 0) return 0;
  if constexpr (scalar_traits<K>::is_exact) {
    return rref(m, eps).rank;
  } else {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(to_eigen(m));
    const auto& s = svd.singularValues();
    if (s.size() == 0) return 0;
    double thresh = eps * s(0);
    int r = 0;
    for (int i = 0; i < s.size(); ++i)
      if (s(i) > thresh) ++r;
    return r;
  }
}

/// Basis of the right nullspace, one vector per row of the result.
template <class K>
Matrix<K> nullspace(const Matrix<K>& m, double eps) {
  if constexpr (scalar_traits<K>::is_exact) {
    auto re = rref(m, eps);
    std::vector<int> free_cols;
    std::vector<int> pivot_of_col(m.cols, -1);
    for (int i = 0; i < re.rank; ++i) pivot_of_col[re.pivots[i]] = i;
    for (int c = 0; c < m.cols; ++c)
      if (pivot_of_col[c] < 0) free_cols.push_back(c);
    Matrix<K> ns(static_cast<int>(free_cols.size()), m.cols);
    for (size_t f = 0; f < free_cols.size(); ++f) {
      int fc = free_cols[f];
      ns(static_cast<int>(f), fc) = K(1);
      for (int i = 0; i < re.rank; ++i) ns(static_cast<int>(f), re.pivots[i]) = -re.r(i, fc);
    }
    return ns;
  } else {
    if (m.rows == 0) return Matrix<K>::identity(m.cols);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(to_eigen(m), Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    double thresh = s.size() ? eps * s(0) : 0.0;
    int r = 0;
    for (int i = 0; i < s.size(); ++i)
      if (s(i) > thresh) ++r;
    Eigen::MatrixXd v = svd.matrixV();
    Matrix<K> ns(m.cols - r, m.cols);
    for (int i = r; i < m.cols; ++i)
      for (int j = 0; j < m.cols; ++j) ns(i - r, j) = v(j, i);
    return ns;
  }
}

// ---------------------------------------------------------------------------
// Linear solve with infeasibility certificate.
// ---------------------------------------------------------------------------

/// Outcome of solving A x = b. When infeasible, lambda satisfies
/// lambda^T A = 0, lambda^T b = 1 and is exactly re-checkable in exact mode;
/// certificate_row is set when lambda is supported on a single equation.
template <class K>
struct LinSolve {
  bool feasible = false;
  Vec<K> x;
  Vec<K> lambda;
  int rank_a = 0;
  int rank_aug = 0;
  int certificate_row = -1;
};

template <class K>
LinSolve<K> solve_linear(const Matrix<K>& A, const Vec<K>& b, double eps) {
  assert(static_cast<int>(b.size()) == A.rows);
  const int m = A.rows, n = A.cols;
  // Work on [A | b | I], eliminating with pivots restricted to A's columns.
  Matrix<K> w(m, n + 1 + m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) w(i, j) = A(i, j);
    w(i, n) = b[i];
    w(i, n + 1 + i) = K(1);
  }
  const double scale = std::max(1.0, std::max(max_abs(A), max_abs(b)));
  const double dead = scalar_traits<K>::is_exact ? 0.0 : eps * scale;

  LinSolve<K> out;
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    int piv = -1;
    if constexpr (scalar_traits<K>::is_exact) {
      for (int i = r; i < m; ++i)
        if (!sgn_is_zero(w(i, c))) { piv = i; break; }
    } else {
      double best = dead;
      for (int i = r; i < m; ++i)
        if (std::abs(w(i, c)) > best) { best = std::abs(w(i, c)); piv = i; }
    }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < w.cols; ++j) std::swap(w(piv, j), w(r, j));
    K inv = K(1) / w(r, c);
    for (int j = 0; j < w.cols; ++j) w(r, j) *= inv;
    w(r, c) = K(1);
    for (int i = 0; i < m; ++i) {
      if (i == r) continue;
      K f = w(i, c);
      if (sgn_is_zero(f)) continue;
      for (int j = 0; j < w.cols; ++j) w(i, j) -= f * w(r, j);
      w(i, c) = K(0);
    }
    pivots.push_back(c);
    ++r;
  }
  out.rank_a = r;
  out.rank_aug = r;

  // A row with zeroed A-part and live b-part certifies infeasibility.
  for (int i = r; i < m; ++i) {
    bool row_dead = true;
    for (int j = 0; j < n; ++j)
      if (!scalar_traits<K>::is_zero(w(i, j), dead)) { row_dead = false; break; }
    if (!row_dead) continue;
    if (scalar_traits<K>::is_zero(w(i, n), dead)) continue;
    out.rank_aug = r + 1;
    out.feasible = false;
    K inv = K(1) / w(i, n);
    out.lambda.assign(m, K(0));
    for (int k = 0; k < m; ++k) out.lambda[k] = inv * w(i, n + 1 + k);
    int support = 0, last = -1;
    for (int k = 0; k < m; ++k)
      if (!scalar_traits<K>::is_zero(out.lambda[k], dead)) { ++support; last = k; }
    if (support == 1) out.certificate_row = last;
    return out;
  }

  out.feasible = true;
  out.x.assign(n, K(0));
  for (int i = 0; i < r; ++i) out.x[pivots[i]] = w(i, n);
  return out;
}

/// Inverse of a square matrix; throws on singularity.
template <class K>
Matrix<K> inverse(const Matrix<K>& m, double eps) {
  assert(m.rows == m.cols);
  const int n = m.rows;
  Matrix<K> w(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) w(i, j) = m(i, j);
    w(i, n + i) = K(1);
  }
  const double scale = std::max(1.0, max_abs(m));
  const double dead = scalar_traits<K>::is_exact ? 0.0 : eps * scale;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    if constexpr (scalar_traits<K>::is_exact) {
      for (int i = c; i < n; ++i)
        if (!sgn_is_zero(w(i, c))) { piv = i; break; }
    } else {
      double best = dead;
      for (int i = c; i < n; ++i)
        if (std::abs(w(i, c)) > best) { best = std::abs(w(i, c)); piv = i; }
    }
    if (piv < 0) throw Error("singular matrix has no inverse");
    if (piv != c)
      for (int j = 0; j < 2 * n; ++j) std::swap(w(piv, j), w(c, j));
    K inv = K(1) / w(c, c);
    for (int j = 0; j < 2 * n; ++j) w(c, j) *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == c) continue;
      K f = w(i, c);
      if (sgn_is_zero(f)) continue;
      for (int j = 0; j < 2 * n; ++j) w(i, j) -= f * w(c, j);
    }
  }
  Matrix<K> out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = w(i, n + j);
  return out;
}

/// Q-orthogonal (NOT normalized) frame from independent rows: classical
/// Gram-Schmidt dividing by squared lengths, so exact mode stays rational.
template <class K>
Matrix<K> gram_schmidt_orthogonal(const Matrix<K>& basis, const Matrix<K>& q, double eps) {
  Matrix<K> u = basis;
  std::vector<Vec<K>> done;
  std::vector<K> sq;
  for (int i = 0; i < u.rows; ++i) {
    Vec<K> v = u.row(i);
    for (size_t j = 0; j < done.size(); ++j) {
      K c = dot_q(v, q, done[j]) / sq[j];
      vec_axpy(v, K(-c), done[j]);
    }
    K len2 = dot_q(v, q, v);
    if (scalar_traits<K>::is_zero(len2, eps * std::max(1.0, max_abs(v))))
      throw Error("gram_schmidt_orthogonal: dependent or isotropic input row");
    u.set_row(i, v);
    done.push_back(std::move(v));
    sq.push_back(len2);
  }
  return u;
}

/// True iff symmetric q is positive definite. Exact mode tests elimination
/// pivots (ratios of leading principal minors); approx mode uses LLT.
template <class K>
bool is_positive_definite(const Matrix<K>& q, double eps) {
  assert(q.rows == q.cols);
  if constexpr (scalar_traits<K>::is_exact) {
    Matrix<K> w = q;
    int n = q.rows;
    for (int c = 0; c < n; ++c) {
      if (sgn(w(c, c)) <= 0) return false;
      for (int i = c + 1; i < n; ++i) {
        K f = w(i, c) / w(c, c);
        if (sgn_is_zero(f)) continue;
        for (int j = c; j < n; ++j) w(i, j) -= f * w(c, j);
      }
    }
    return true;
  } else {
    Eigen::MatrixXd e = to_eigen(q);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(e, Eigen::EigenvaluesOnly);
    double lo = es.eigenvalues().minCoeff();
    double hi = es.eigenvalues().cwiseAbs().maxCoeff();
    return lo > eps * std::max(1.0, hi);
  }
}

template <class K>
bool is_symmetric(const Matrix<K>& q, double eps) {
  if (q.rows != q.cols) return false;
  double tol = scalar_traits<K>::is_exact ? 0.0 : eps * std::max(1.0, max_abs(q));
  for (int i = 0; i < q.rows; ++i)
    for (int j = i + 1; j < q.cols; ++j)
      if (abs_double(q(i, j) - q(j, i)) > tol) return false;
  return true;
}

/// Ascending eigenvalues of a symmetric matrix (double precision bridge).
template <class K>
Vec<double> symmetric_eigenvalues(const Matrix<K>& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(to_eigen(m), Eigen::EigenvaluesOnly);
  Vec<double> v(es.eigenvalues().size());
  for (size_t i = 0; i < v.size(); ++i) v[i] = es.eigenvalues()(static_cast<int>(i));
  return v;
}

// ---------------------------------------------------------------------------
// Subspaces in reduced row-echelon canonical form.
// ---------------------------------------------------------------------------

template <class K>
struct Subspace {
  int ambient = 0;
  Matrix<K> basis;  // RREF rows

  Subspace() = default;
  explicit Subspace(int n) : ambient(n), basis(0, n) {}

  static Subspace from_rows(const Matrix<K>& rows, double eps) {
    Subspace s;
    s.ambient = rows.cols;
    s.basis = rref(rows, eps).r;
    return s;
  }

  static Subspace full(int n) { return from_rows(Matrix<K>::identity(n), 0.0); }

  int dim() const { return basis.rows; }

  /// Residual of v after eliminating along the basis rows; zero iff v is in
  /// the span (up to eps in approx mode).
  Vec<K> reduce(Vec<K> v, double eps) const {
    auto re = pivot_cols(eps);
    for (int i = 0; i < basis.rows; ++i) {
      K c = v[re[i]];
      if (sgn_is_zero(c)) continue;
      for (int j = 0; j < ambient; ++j) v[j] -= c * basis(i, j);
      v[re[i]] = K(0);
    }
    return v;
  }

  bool contains(const Vec<K>& v, double eps) const {
    double tol = scalar_traits<K>::is_exact ? 0.0 : eps * std::max(1.0, max_abs(v));
    return max_abs(reduce(v, eps)) <= tol;
  }

  bool contains_subspace(const Subspace& o, double eps) const {
    for (int i = 0; i < o.basis.rows; ++i)
      if (!contains(o.basis.row(i), eps)) return false;
    return true;
  }

  bool equals(const Subspace& o, double eps) const {
    if constexpr (scalar_traits<K>::is_exact)
      return basis == o.basis;
    else
      return dim() == o.dim() && contains_subspace(o, eps) && o.contains_subspace(*this, eps);
  }

  static Subspace sum(const Subspace& x, const Subspace& y, double eps) {
    Matrix<K> stacked(x.basis.rows + y.basis.rows, x.ambient);
    for (int i = 0; i < x.basis.rows; ++i) stacked.set_row(i, x.basis.row(i));
    for (int i = 0; i < y.basis.rows; ++i) stacked.set_row(x.basis.rows + i, y.basis.row(i));
    return from_rows(stacked, eps);
  }

  /// {v : B Q v^T = 0}, the Q-orthogonal complement.
  Subspace orthogonal_complement(const Matrix<K>& q, double eps) const {
    Matrix<K> bq = basis * q;
    return from_rows(nullspace(bq, eps), eps);
  }

  /// Coordinates of a member vector w.r.t. the RREF basis rows (the entries
  /// at the pivot columns). Only meaningful when contains(v) holds.
  Vec<K> coords_in_basis(const Vec<K>& v, double eps) const {
    auto piv = pivot_cols(eps);
    Vec<K> c(basis.rows);
    for (int i = 0; i < basis.rows; ++i) c[i] = v[piv[i]];
    return c;
  }

 private:
  std::vector<int> pivot_cols(double eps) const {
    std::vector<int> p(basis.rows, -1);
    double tol = scalar_traits<K>::is_exact ? 0.0 : eps;
    for (int i = 0; i < basis.rows; ++i)
      for (int j = 0; j < ambient; ++j)
        if (abs_double(basis(i, j)) > tol) { p[i] = j; break; }
    return p;
  }
};

}  // namespace golie

#endif

#ifndef GOLIE_METRIC_HPP
#define GOLIE_METRIC_HPP

#include <optional>
#include <vector>

#include "golie/lie_algebra.hpp"
#include "golie/linalg.hpp"

namespace golie {

/// Squared-norm threshold under which approx-mode nabla R is reported as
/// locally symmetric.
inline constexpr double kLocallySymmetricThreshold = 1e-8;

/// Left-invariant metric on a Lie group, given as (algebra, inner product Q
/// on the basis). validate() enforces symmetric positive definite Q.
template <class K>
struct MetricLieAlgebra {
  LieAlgebra<K> alg;
  Matrix<K> q;

  void validate() const {
    if (q.rows != alg.n || q.cols != alg.n)
      throw ValidationError("metric dimension does not match algebra dimension");
    if (!is_symmetric(q, alg.eps)) throw ValidationError("metric matrix is not symmetric");
    if (!is_positive_definite(q, alg.eps))
      throw ValidationError("metric matrix is not positive definite");
  }
};

template <class K>
struct EinsteinFit {
  K lambda;
  double residual = 0;
};

/// Levi-Civita connection, curvature tensor, Ricci data and derived
/// quantities for a MetricLieAlgebra. All tensors are computed from the
/// Koszul formula; sign convention R(X,Y)Z = D_X D_Y Z - D_Y D_X Z - D_[X,Y] Z
/// with sectional curvature K(X,Y) = Q(R(X,Y)Y, X) on orthonormal pairs.
template <class K>
class CurvatureEngine {
 public:
  explicit CurvatureEngine(const MetricLieAlgebra<K>& m) : m_(m), n_(m.alg.n) {
    m_.validate();
    qinv_ = inverse(m_.q, m_.alg.eps);
    build_gamma();
    build_curvature();
    build_frame();
    build_ricci();
  }

  const MetricLieAlgebra<K>& metric() const { return m_; }
  int dim() const { return n_; }

  /// nabla_{e_i} e_j as a coefficient vector.
  const Vec<K>& gamma(int i, int j) const { return gamma_[static_cast<size_t>(i) * n_ + j]; }

  /// nabla_x y for left-invariant fields (bilinear in the coefficients).
  Vec<K> nabla(const Vec<K>& x, const Vec<K>& y) const {
    Vec<K> out(n_, K(0));
    for (int i = 0; i < n_; ++i) {
      if (sgn_is_zero(x[i])) continue;
      for (int j = 0; j < n_; ++j) {
        if (sgn_is_zero(y[j])) continue;
        K f = x[i] * y[j];
        vec_axpy(out, f, gamma(i, j));
      }
    }
    return out;
  }

  const Vec<K>& curvature_basis(int i, int j, int k) const {
    return r_[(static_cast<size_t>(i) * n_ + j) * n_ + k];
  }

  /// R(x, y) z, trilinear extension of the basis curvature tensor.
  Vec<K> curvature(const Vec<K>& x, const Vec<K>& y, const Vec<K>& z) const {
    Vec<K> out(n_, K(0));
    for (int i = 0; i < n_; ++i) {
      if (sgn_is_zero(x[i])) continue;
      for (int j = 0; j < n_; ++j) {
        if (sgn_is_zero(y[j])) continue;
        K f = x[i] * y[j];
        for (int k = 0; k < n_; ++k) {
          if (sgn_is_zero(z[k])) continue;
          vec_axpy(out, K(f * z[k]), curvature_basis(i, j, k));
        }
      }
    }
    return out;
  }

  K inner(const Vec<K>& x, const Vec<K>& y) const { return dot_q(x, m_.q, y); }

  /// Q(R(x,y)y, x), the unnormalized sectional numerator.
  K sectional_numerator(const Vec<K>& x, const Vec<K>& y) const {
    return inner(curvature(x, y, y), x);
  }

  /// Sectional curvature of span{x, y}; throws if the plane is degenerate.
  K sectional(const Vec<K>& x, const Vec<K>& y) const {
    K den = inner(x, x) * inner(y, y) - inner(x, y) * inner(x, y);
    double tol = scalar_traits<K>::is_exact
                     ? 0.0
                     : m_.alg.eps * std::max(1.0, max_abs(x)) * std::max(1.0, max_abs(y));
    if (abs_double(den) <= tol) throw Error("sectional: degenerate plane");
    return sectional_numerator(x, y) / den;
  }

  /// Ricci tensor ric(e_a, e_b) on the basis.
  const Matrix<K>& ricci_tensor() const { return ric_; }

  /// Ricci operator (Q-raised tensor) on the basis.
  const Matrix<K>& ricci_operator() const { return ric_op_; }

  K scalar_curvature() const { return scalar_; }

  Vec<double> ricci_eigenvalues() const {
    // The operator is symmetric only in an orthonormal frame; conjugate first.
    return symmetric_eigenvalues(frame_conjugated(ric_op_));
  }

  /// Best-fit Einstein constant and max-norm residual of Ric - lambda Id in a
  /// Q-orthonormal frame (basis coordinates in exact mode, where the residual
  /// vanishes identically iff the metric is Einstein).
  EinsteinFit<K> einstein_fit() const {
    EinsteinFit<K> fit{scalar_ / K(n_), 0.0};
    if constexpr (scalar_traits<K>::is_exact) {
      Matrix<K> d = ric_op_;
      for (int i = 0; i < n_; ++i) d(i, i) -= fit.lambda;
      fit.residual = max_abs(d);
    } else {
      Matrix<double> d = frame_conjugated(ric_op_);
      for (int i = 0; i < n_; ++i) d(i, i) -= to_double(fit.lambda);
      fit.residual = max_abs(d);
    }
    return fit;
  }

  /// Mean curvature vector H with Q(H, x) = trace(ad x).
  Vec<K> mean_curvature_vector() const {
    Vec<K> tau(n_);
    for (int i = 0; i < n_; ++i) tau[i] = m_.alg.ad_trace(i);
    return mat_vec(qinv_, tau);
  }

  /// Squared Q-norm of the covariant derivative of R (cached once computed).
  K nabla_r_norm_sq() const {
    if (!nabla_r_sq_) nabla_r_sq_ = compute_nabla_r_sq();
    return *nabla_r_sq_;
  }

  bool locally_symmetric() const {
    K v = nabla_r_norm_sq();
    if constexpr (scalar_traits<K>::is_exact)
      return sgn_is_zero(v);
    else
      return v <= kLocallySymmetricThreshold;
  }

 private:
  MetricLieAlgebra<K> m_;
  int n_;
  Matrix<K> qinv_;
  std::vector<Vec<K>> gamma_;  // n^2 coefficient vectors
  std::vector<Vec<K>> r_;      // n^3 coefficient vectors
  Matrix<K> frame_;            // Q-orthogonal frame rows
  Vec<K> frame_sq_;            // squared lengths of the frame rows
  bool frame_is_basis_ = false;
  Matrix<K> ric_, ric_op_;
  K scalar_ = K(0);
  mutable std::optional<K> nabla_r_sq_;

  void build_gamma() {
    gamma_.assign(static_cast<size_t>(n_) * n_, Vec<K>());
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        // Koszul: 2 Q(nabla_i e_j, e_k)
        //   = Q([e_i,e_j], e_k) - Q([e_j,e_k], e_i) + Q([e_k,e_i], e_j)
        Vec<K> rhs(n_);
        for (int k = 0; k < n_; ++k) {
          K v = inner(m_.alg.bracket_basis(i, j), m_.alg.basis_vector(k));
          v -= inner(m_.alg.bracket_basis(j, k), m_.alg.basis_vector(i));
          v += inner(m_.alg.bracket_basis(k, i), m_.alg.basis_vector(j));
          rhs[k] = v / K(2);
        }
        gamma_[static_cast<size_t>(i) * n_ + j] = mat_vec(qinv_, rhs);
      }
  }

  Vec<K> nabla_vec(int i, const Vec<K>& v) const {
    Vec<K> out(n_, K(0));
    for (int m = 0; m < n_; ++m) {
      if (sgn_is_zero(v[m])) continue;
      vec_axpy(out, v[m], gamma(i, m));
    }
    return out;
  }

  void build_curvature() {
    r_.assign(static_cast<size_t>(n_) * n_ * n_, Vec<K>(n_, K(0)));
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j) {
        Vec<K> bij = m_.alg.bracket_basis(i, j);
        for (int k = 0; k < n_; ++k) {
          Vec<K> v = nabla_vec(i, gamma(j, k));
          v = vec_sub(std::move(v), nabla_vec(j, gamma(i, k)));
          v = vec_sub(std::move(v), nabla(bij, m_.alg.basis_vector(k)));
          r_[(static_cast<size_t>(i) * n_ + j) * n_ + k] = v;
          r_[(static_cast<size_t>(j) * n_ + i) * n_ + k] = vec_scale(K(-1), v);
        }
      }
  }

  void build_frame() {
    bool diagonal = true;
    for (int i = 0; i < n_ && diagonal; ++i)
      for (int j = 0; j < n_; ++j)
        if (i != j && !sgn_is_zero(m_.q(i, j))) { diagonal = false; break; }
    if (diagonal) {
      frame_ = Matrix<K>::identity(n_);
      frame_is_basis_ = true;
    } else {
      frame_ = gram_schmidt_orthogonal(Matrix<K>::identity(n_), m_.q, m_.alg.eps);
      frame_is_basis_ = false;
    }
    frame_sq_.resize(n_);
    for (int i = 0; i < n_; ++i) {
      Vec<K> u = frame_.row(i);
      frame_sq_[i] = inner(u, u);
    }
  }

  void build_ricci() {
    ric_ = Matrix<K>(n_, n_);
    for (int a = 0; a < n_; ++a)
      for (int b = a; b < n_; ++b) {
        K s(0);
        for (int l = 0; l < n_; ++l) {
          Vec<K> u = frame_.row(l);
          Vec<K> v = curvature(u, m_.alg.basis_vector(a), m_.alg.basis_vector(b));
          s += inner(v, u) / frame_sq_[l];
        }
        ric_(a, b) = s;
        ric_(b, a) = s;
      }
    ric_op_ = qinv_ * ric_;
    scalar_ = K(0);
    for (int i = 0; i < n_; ++i) scalar_ += ric_op_(i, i);
  }

  /// Operator matrix conjugated into an orthonormal frame (for spectra and
  /// residuals in approx mode).
  Matrix<double> frame_conjugated(const Matrix<K>& op) const {
    Matrix<double> opd = mat_to_double(op);
    Eigen::MatrixXd c(n_, n_);  // columns are normalized frame vectors
    for (int j = 0; j < n_; ++j) {
      double len = std::sqrt(to_double(frame_sq_[j]));
      for (int i = 0; i < n_; ++i) c(i, j) = to_double(frame_(j, i)) / len;
    }
    Eigen::MatrixXd e = to_eigen(opd);
    Eigen::MatrixXd out = c.inverse() * e * c;
    return from_eigen(out);
  }

  K compute_nabla_r_sq() const {
    // S[a][b][c][d] = (nabla_{e_a} R)(e_b, e_c) e_d on the basis.
    const size_t n = static_cast<size_t>(n_);
    std::vector<Vec<K>> s(n * n * n * n);
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        for (int c = 0; c < n_; ++c)
          for (int d = 0; d < n_; ++d) {
            Vec<K> v = nabla_vec(a, curvature_basis(b, c, d));
            Vec<K> t(n_, K(0));
            const Vec<K>& gab = gamma(a, b);
            for (int m = 0; m < n_; ++m)
              if (!sgn_is_zero(gab[m])) vec_axpy(t, gab[m], curvature_basis(m, c, d));
            const Vec<K>& gac = gamma(a, c);
            for (int m = 0; m < n_; ++m)
              if (!sgn_is_zero(gac[m])) vec_axpy(t, gac[m], curvature_basis(b, m, d));
            const Vec<K>& gad = gamma(a, d);
            for (int m = 0; m < n_; ++m)
              if (!sgn_is_zero(gad[m])) vec_axpy(t, gad[m], curvature_basis(b, c, m));
            v = vec_sub(std::move(v), t);
            s[((static_cast<size_t>(a) * n + b) * n + c) * n + d] = std::move(v);
          }

    if (!frame_is_basis_) {
      // Contract one lower index at a time into the orthogonal frame.
      for (int pos = 0; pos < 4; ++pos) {
        std::vector<Vec<K>> next(n * n * n * n, Vec<K>(n_, K(0)));
        for (int i0 = 0; i0 < n_; ++i0)
          for (int i1 = 0; i1 < n_; ++i1)
            for (int i2 = 0; i2 < n_; ++i2)
              for (int i3 = 0; i3 < n_; ++i3) {
                size_t dst = ((static_cast<size_t>(i0) * n + i1) * n + i2) * n + i3;
                int idx[4] = {i0, i1, i2, i3};
                for (int m = 0; m < n_; ++m) {
                  const K& f = frame_(idx[pos], m);
                  if (sgn_is_zero(f)) continue;
                  int src_idx[4] = {i0, i1, i2, i3};
                  src_idx[pos] = m;
                  size_t src = ((static_cast<size_t>(src_idx[0]) * n + src_idx[1]) * n + src_idx[2]) * n + src_idx[3];
                  vec_axpy(next[dst], f, s[src]);
                }
              }
        s.swap(next);
      }
    }

    K total(0);
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        for (int c = 0; c < n_; ++c)
          for (int d = 0; d < n_; ++d) {
            const Vec<K>& v = s[((static_cast<size_t>(a) * n + b) * n + c) * n + d];
            total += inner(v, v) / (frame_sq_[a] * frame_sq_[b] * frame_sq_[c] * frame_sq_[d]);
          }
    return total;
  }
};

}  // namespace golie

#endif

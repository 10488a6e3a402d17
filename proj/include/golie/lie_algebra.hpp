#ifndef GOLIE_LIE_ALGEBRA_HPP
#define GOLIE_LIE_ALGEBRA_HPP

#include <optional>
#include <string>
#include <vector>

#include "golie/linalg.hpp"
#include "golie/scalar.hpp"

namespace golie {

/// Finite-dimensional Lie algebra over K given by dense structure constants:
/// [e_i, e_j] = sum_k c[i][j][k] e_k. Antisymmetry is enforced at build time;
/// the Jacobi identity is checked by validate()/jacobi_check.
template <class K>
struct LieAlgebra {
  std::string name;
  int n = 0;
  double eps = 1e-9;
  std::vector<std::string> labels;
  std::vector<K> c;  // flattened (i*n + j)*n + k

  LieAlgebra() = default;
  LieAlgebra(std::string nm, int dim)
      : name(std::move(nm)), n(dim), c(static_cast<size_t>(dim) * dim * dim, K(0)) {
    labels.resize(n);
    for (int i = 0; i < n; ++i) labels[i] = "e" + std::to_string(i);
  }

  K& c_ref(int i, int j, int k) { return c[(static_cast<size_t>(i) * n + j) * n + k]; }
  const K& c_at(int i, int j, int k) const { return c[(static_cast<size_t>(i) * n + j) * n + k]; }

  /// Records [e_i, e_j] = v (i != j) together with the antisymmetric mirror.
  void set_bracket(int i, int j, const Vec<K>& v) {
    if (i == j) throw ValidationError("set_bracket: i == j");
    for (int k = 0; k < n; ++k) {
      c_ref(i, j, k) = v[k];
      c_ref(j, i, k) = -v[k];
    }
  }

  void set_bracket_term(int i, int j, int k, const K& val) {
    c_ref(i, j, k) = val;
    c_ref(j, i, k) = -val;
  }

  Vec<K> bracket_basis(int i, int j) const {
    Vec<K> v(n);
    for (int k = 0; k < n; ++k) v[k] = c_at(i, j, k);
    return v;
  }

  Vec<K> bracket(const Vec<K>& x, const Vec<K>& y) const {
    Vec<K> out(n, K(0));
    for (int i = 0; i < n; ++i) {
      if (sgn_is_zero(x[i])) continue;
      for (int j = 0; j < n; ++j) {
        if (sgn_is_zero(y[j])) continue;
        K f = x[i] * y[j];
        for (int k = 0; k < n; ++k) out[k] += f * c_at(i, j, k);
      }
    }
    return out;
  }

  /// ad(x) as a matrix: column j holds [x, e_j].
  Matrix<K> ad(const Vec<K>& x) const {
    Matrix<K> m(n, n);
    for (int i = 0; i < n; ++i) {
      if (sgn_is_zero(x[i])) continue;
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) m(k, j) += x[i] * c_at(i, j, k);
    }
    return m;
  }

  Matrix<K> ad_basis(int i) const {
    Matrix<K> m(n, n);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) m(k, j) = c_at(i, j, k);
    return m;
  }

  Vec<K> basis_vector(int i) const {
    Vec<K> v(n, K(0));
    v[i] = K(1);
    return v;
  }

  K ad_trace(int i) const {
    K t(0);
    for (int k = 0; k < n; ++k) t += c_at(i, k, k);
    return t;
  }
};

template <class K>
struct JacobiReport {
  bool ok = true;
  double max_residual = 0;
  int i = -1, j = -1, k = -1;  // first violating triple, if any
  Vec<K> residual;
};

/// Checks the Jacobi identity on all basis triples i<j<k.
template <class K>
JacobiReport<K> jacobi_check(const LieAlgebra<K>& L) {
  JacobiReport<K> rep;
  const double tol = scalar_traits<K>::is_exact ? 0.0 : L.eps * std::max(1.0, max_abs(L.c));
  for (int i = 0; i < L.n; ++i)
    for (int j = i + 1; j < L.n; ++j)
      for (int k = j + 1; k < L.n; ++k) {
        Vec<K> r = L.bracket(L.bracket_basis(i, j), L.basis_vector(k));
        r = vec_add(std::move(r), L.bracket(L.bracket_basis(j, k), L.basis_vector(i)));
        r = vec_add(std::move(r), L.bracket(L.bracket_basis(k, i), L.basis_vector(j)));
        double m = max_abs(r);
        if (m > rep.max_residual) rep.max_residual = m;
        if (m > tol && rep.i < 0) {
          rep.ok = false;
          rep.i = i; rep.j = j; rep.k = k;
          rep.residual = r;
        }
      }
  if (rep.i >= 0) rep.ok = false;
  return rep;
}

/// Killing form B(x,y) = trace(ad x . ad y) on the basis.
template <class K>
Matrix<K> killing_form(const LieAlgebra<K>& L) {
  std::vector<Matrix<K>> ads;
  ads.reserve(L.n);
  for (int i = 0; i < L.n; ++i) ads.push_back(L.ad_basis(i));
  Matrix<K> b(L.n, L.n);
  for (int i = 0; i < L.n; ++i)
    for (int j = i; j < L.n; ++j) {
      K t(0);
      for (int p = 0; p < L.n; ++p)
        for (int q = 0; q < L.n; ++q) t += ads[i](p, q) * ads[j](q, p);
      b(i, j) = t;
      b(j, i) = t;
    }
  return b;
}

/// Span of all [x, y] with x from rows of A, y from rows of B.
template <class K>
Subspace<K> bracket_span(const LieAlgebra<K>& L, const Subspace<K>& a, const Subspace<K>& b) {
  Matrix<K> rows(a.dim() * b.dim(), L.n);
  int r = 0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j) rows.set_row(r++, L.bracket(a.basis.row(i), b.basis.row(j)));
  return Subspace<K>::from_rows(rows, L.eps);
}

template <class K>
struct ClosureCheck {
  bool closed = true;
  int i = -1, j = -1;       // witness rows of the subspace basis
  Vec<K> escaped;           // residual of [u_i, u_j] outside the span
};

/// Is the span of s closed under the bracket?
template <class K>
ClosureCheck<K> is_subalgebra(const LieAlgebra<K>& L, const Subspace<K>& s) {
  ClosureCheck<K> out;
  for (int i = 0; i < s.dim(); ++i)
    for (int j = i + 1; j < s.dim(); ++j) {
      Vec<K> br = L.bracket(s.basis.row(i), s.basis.row(j));
      double tol = scalar_traits<K>::is_exact ? 0.0 : L.eps * std::max(1.0, max_abs(br));
      Vec<K> res = s.reduce(br, L.eps);
      if (max_abs(res) > tol) {
        out.closed = false;
        out.i = i; out.j = j;
        out.escaped = res;
        return out;
      }
    }
  return out;
}

/// Is the span of s an ideal ([g, s] inside s)?
template <class K>
ClosureCheck<K> is_ideal(const LieAlgebra<K>& L, const Subspace<K>& s) {
  ClosureCheck<K> out;
  for (int i = 0; i < L.n; ++i)
    for (int j = 0; j < s.dim(); ++j) {
      Vec<K> br = L.bracket(L.basis_vector(i), s.basis.row(j));
      double tol = scalar_traits<K>::is_exact ? 0.0 : L.eps * std::max(1.0, max_abs(br));
      Vec<K> res = s.reduce(br, L.eps);
      if (max_abs(res) > tol) {
        out.closed = false;
        out.i = i; out.j = j;
        out.escaped = res;
        return out;
      }
    }
  return out;
}

/// Center = {x : ad(x) = 0}, the nullspace of the stacked bracket maps.
template <class K>
Subspace<K> center(const LieAlgebra<K>& L) {
  Matrix<K> m(L.n * L.n, L.n);
  for (int j = 0; j < L.n; ++j)
    for (int k = 0; k < L.n; ++k)
      for (int i = 0; i < L.n; ++i) m(j * L.n + k, i) = L.c_at(i, j, k);
  return Subspace<K>::from_rows(nullspace(m, L.eps), L.eps);
}

template <class K>
std::vector<Subspace<K>> derived_series(const LieAlgebra<K>& L) {
  std::vector<Subspace<K>> s;
  s.push_back(Subspace<K>::full(L.n));
  for (;;) {
    Subspace<K> next = bracket_span(L, s.back(), s.back());
    if (next.dim() == s.back().dim()) break;
    s.push_back(next);
    if (next.dim() == 0) break;
  }
  return s;
}

template <class K>
std::vector<Subspace<K>> lower_central_series(const LieAlgebra<K>& L) {
  std::vector<Subspace<K>> s;
  s.push_back(Subspace<K>::full(L.n));
  for (;;) {
    Subspace<K> next = bracket_span(L, s.front(), s.back());
    if (next.dim() == s.back().dim()) break;
    s.push_back(next);
    if (next.dim() == 0) break;
  }
  return s;
}

struct StructureReport {
  std::vector<int> derived_dims;
  std::vector<int> lower_central_dims;
  int center_dim = 0;
  bool solvable = false;
  bool nilpotent = false;
  bool unimodular = false;
  std::vector<double> ad_traces;  // trace of ad(e_i), reported numerically
};

template <class K>
StructureReport structure_report(const LieAlgebra<K>& L) {
  StructureReport rep;
  for (const auto& s : derived_series(L)) rep.derived_dims.push_back(s.dim());
  for (const auto& s : lower_central_series(L)) rep.lower_central_dims.push_back(s.dim());
  rep.center_dim = center(L).dim();
  rep.solvable = rep.derived_dims.back() == 0;
  rep.nilpotent = rep.lower_central_dims.back() == 0;
  rep.unimodular = true;
  const double tol = scalar_traits<K>::is_exact ? 0.0 : L.eps * std::max(1.0, max_abs(L.c));
  for (int i = 0; i < L.n; ++i) {
    K t = L.ad_trace(i);
    rep.ad_traces.push_back(to_double(t));
    if (abs_double(t) > tol) rep.unimodular = false;
  }
  return rep;
}

}  // namespace golie

#endif

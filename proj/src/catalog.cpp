#include "golie/catalog.hpp"

#include <cmath>
#include <cstdio>

namespace golie {

std::vector<std::string> catalog_ids() {
  return {"abelian",
          "so_n",
          "sl2r",
          "so3_mod_so2",
          "so3_mod_trivial",
          "semidirect_compact",
          "sl2r_semidirect_r2_mod_so2",
          "gl_n_semidirect_rn_mod_son",
          "example_I",
          "example_II",
          "iwacom",
          "k3m2",
          "block_space"};
}

namespace catalog_detail {

template <class K>
std::string num_str(const K& v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", to_double(v));
  return buf;
}

template <class K>
Vec<K> unit(int n, int i, K scale = K(1)) {
  Vec<K> v(n, K(0));
  v[i] = scale;
  return v;
}

template <class K>
CatalogEntry<K> build_abelian(const std::map<std::string, K>& params) {
  const int n = getp_int(params, "n", 3);
  if (n < 1) throw ValidationError("abelian entry needs n >= 1");
  CatalogEntry<K> e;
  e.id = "abelian";
  e.params["n"] = K(n);
  LieAlgebra<K> g("abelian", n);
  e.metric_algebra = MetricLieAlgebra<K>{std::move(g), Matrix<K>::identity(n)};
  e.expected["einstein_lambda"] = "0";
  e.expected["einstein_residual_zero"] = "true";
  e.expected["nabla_r_zero"] = "true";
  return e;
}

template <class K>
CatalogEntry<K> build_so_n(const std::map<std::string, K>& params) {
  const int n = getp_int(params, "n", 3);
  CatalogEntry<K> e;
  e.id = "so_n";
  e.params["n"] = K(n);
  LieAlgebra<K> g = so_algebra<K>(n);
  e.expected["killing_scalar"] = num_str(K(-2 * (n - 2)));
  e.metric_algebra = MetricLieAlgebra<K>{std::move(g), Matrix<K>::identity(n * (n - 1) / 2)};
  return e;
}

template <class K>
CatalogEntry<K> build_sl2r(const std::map<std::string, K>&) {
  CatalogEntry<K> e;
  e.id = "sl2r";
  LieAlgebra<K> g = sl2_algebra<K>();
  e.expected["killing_matrix"] = "8,0,0,0,0,4,0,4,0";
  e.metric_algebra = MetricLieAlgebra<K>{std::move(g), Matrix<K>::identity(3)};
  return e;
}

template <class K>
CatalogEntry<K> build_so3_mod_so2(const std::map<std::string, K>& params) {
  K alpha = getp(params, "alpha", K(1));
  if (to_double(alpha) <= 0) throw ValidationError("alpha must be positive");
  CatalogEntry<K> e;
  e.id = "so3_mod_so2";
  e.params["alpha"] = alpha;
  LieAlgebra<K> g = so_algebra<K>(3);
  Matrix<K> h_rows(1, 3), p_rows(2, 3);
  h_rows(0, 2) = K(1);
  p_rows(0, 0) = K(1);
  p_rows(1, 1) = K(1);
  HomogeneousPair<K> pair{std::move(g), Subspace<K>::from_rows(h_rows, 1e-9),
                          Subspace<K>::from_rows(p_rows, 1e-9), true};
  Matrix<K> qp = Matrix<K>::identity(2);
  qp(0, 0) = alpha;
  qp(1, 1) = alpha;
  e.pair = std::move(pair);
  e.qp = std::move(qp);
  e.expected["strong"] = "certified_strong";
  e.expected["go"] = "no_witness";
  e.expected["symmetric_pair"] = "true";
  return e;
}

template <class K>
CatalogEntry<K> build_so3_mod_trivial(const std::map<std::string, K>&) {
  CatalogEntry<K> e;
  e.id = "so3_mod_trivial";
  LieAlgebra<K> g = so_algebra<K>(3);
  HomogeneousPair<K> pair{std::move(g), Subspace<K>::from_rows(Matrix<K>(0, 3), 1e-9),
                          Subspace<K>::from_rows(Matrix<K>::identity(3), 1e-9), true};
  e.pair = std::move(pair);
  e.qp = Matrix<K>::identity(3);
  e.expected["strong"] = "counterexample";
  e.expected["go"] = "no_witness";  // bi-invariant metric
  return e;
}

template <class K>
CatalogEntry<K> build_semidirect_compact(const std::map<std::string, K>& params) {
  const int n = getp_int(params, "n", 3);
  K beta = getp(params, "beta", K(1));
  if (to_double(beta) <= 0) throw ValidationError("beta must be positive");
  CatalogEntry<K> e;
  e.id = "semidirect_compact";
  e.params["n"] = K(n);
  e.params["beta"] = beta;
  LieAlgebra<K> so = so_algebra<K>(n);
  const int d = so.n;
  const int dim = d + n;
  LieAlgebra<K> g("semidirect_compact", dim);
  g.eps = so.eps;
  for (int i = 0; i < d; ++i) g.labels[i] = so.labels[i];
  for (int i = 0; i < n; ++i) g.labels[d + i] = "u" + std::to_string(i + 1);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      Vec<K> c = so.bracket_basis(i, j);
      Vec<K> full(dim, K(0));
      for (int t = 0; t < d; ++t) full[t] = c[t];
      g.set_bracket(i, j, full);
    }
  // action of the so-part on R^n
  if (n == 3) {
    // cross-product basis: [e_i, u_j] = sum_k eps_ijk u_k
    const int epsv[3][3] = {{0, 3, -2}, {-3, 0, 1}, {2, -1, 0}};  // signed (k+1)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        if (epsv[i][j] == 0) continue;
        int k = std::abs(epsv[i][j]) - 1;
        g.set_bracket(i, d + j, unit<K>(dim, d + k, K(epsv[i][j] > 0 ? 1 : -1)));
      }
  } else {
    int t = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        g.set_bracket(t, d + b, unit<K>(dim, d + a, K(1)));
        g.set_bracket(t, d + a, unit<K>(dim, d + b, K(-1)));
        ++t;
      }
  }
  auto jr = jacobi_check(g);
  if (!jr.ok) throw ValidationError("semidirect construction violates the Jacobi identity");
  Matrix<K> h_rows(d, dim), p_rows(n, dim);
  for (int i = 0; i < d; ++i) h_rows(i, i) = K(1);
  for (int i = 0; i < n; ++i) p_rows(i, d + i) = K(1);
  HomogeneousPair<K> pair{std::move(g), Subspace<K>::from_rows(h_rows, 1e-9),
                          Subspace<K>::from_rows(p_rows, 1e-9), true};
  Matrix<K> qp(n, n);
  for (int i = 0; i < n; ++i) qp(i, i) = beta;
  e.pair = std::move(pair);
  e.qp = std::move(qp);
  e.expected["strong"] = "certified_strong";
  e.expected["go"] = "no_witness";
  e.expected["symmetric_pair"] = "true";
  return e;
}

template <class K>
CatalogEntry<K> build_sl2r_semidirect(const std::map<std::string, K>& params) {
  K alpha = getp(params, "alpha", K(1)), beta = getp(params, "beta", K(1));
  if (to_double(alpha) <= 0 || to_double(beta) <= 0)
    throw ValidationError("alpha and beta must be positive");
  CatalogEntry<K> e;
  e.id = "sl2r_semidirect_r2_mod_so2";
  e.params["alpha"] = alpha;
  e.params["beta"] = beta;
  // basis H, E, F, u1, u2; standard rep of sl2 on R^2
  LieAlgebra<K> g("sl2r_semidirect_r2", 5);
  g.labels = {"H", "E", "F", "u1", "u2"};
  g.set_bracket(0, 1, unit<K>(5, 1, K(2)));
  g.set_bracket(0, 2, unit<K>(5, 2, K(-2)));
  g.set_bracket(1, 2, unit<K>(5, 0, K(1)));
  g.set_bracket(0, 3, unit<K>(5, 3, K(1)));
  g.set_bracket(0, 4, unit<K>(5, 4, K(-1)));
  g.set_bracket(1, 4, unit<K>(5, 3, K(1)));
  g.set_bracket(2, 3, unit<K>(5, 4, K(1)));
  auto jr = jacobi_check(g);
  if (!jr.ok) throw ValidationError("sl2 semidirect construction violates the Jacobi identity");
  Matrix<K> h_rows(1, 5), p_rows(4, 5);
  h_rows(0, 1) = K(1);
  h_rows(0, 2) = K(-1);  // E - F spans so(2)
  p_rows(0, 0) = K(1);
  p_rows(1, 1) = K(1);
  p_rows(1, 2) = K(1);  // E + F
  p_rows(2, 3) = K(1);
  p_rows(3, 4) = K(1);
  HomogeneousPair<K> pair{std::move(g), Subspace<K>::from_rows(h_rows, 1e-9),
                          Subspace<K>::from_rows(p_rows, 1e-9), true};
  Matrix<K> qp(4, 4);
  qp(0, 0) = alpha;
  qp(1, 1) = alpha;
  qp(2, 2) = beta;
  qp(3, 3) = beta;
  e.pair = std::move(pair);
  e.qp = std::move(qp);
  e.expected["go"] = "witness_found";
  e.expected["strong"] = "certified_strong";
  return e;
}

template <class K>
CatalogEntry<K> build_gl_n(const std::map<std::string, K>& params) {
  const int n = getp_int(params, "n", 3);
  if (n < 2) throw ValidationError("gl_n entry needs n >= 2");
  K alpha = getp(params, "alpha", K(1));
  K beta = getp(params, "beta", K(1));
  K gamma = getp(params, "gamma", K(1));
  if (to_double(alpha) <= 0 || to_double(beta) <= 0 || to_double(gamma) <= 0)
    throw ValidationError("alpha, beta, gamma must be positive");
  CatalogEntry<K> e;
  e.id = "gl_n_semidirect_rn_mod_son";
  e.params["n"] = K(n);
  e.params["alpha"] = alpha;
  e.params["beta"] = beta;
  e.params["gamma"] = gamma;

  const int nw = n * (n - 1) / 2;
  const int ns = n * (n - 1) / 2;
  const int nd = n - 1;
  const int ngl = n * n;
  const int dim = ngl + n;

  std::vector<Matrix<K>> mats;
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      Matrix<K> m(n, n);
      m(a, b) = K(1);
      m(b, a) = K(-1);
      mats.push_back(std::move(m));
      labels.push_back("w" + std::to_string(a + 1) + std::to_string(b + 1));
    }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      Matrix<K> m(n, n);
      m(a, b) = K(1);
      m(b, a) = K(1);
      mats.push_back(std::move(m));
      labels.push_back("s" + std::to_string(a + 1) + std::to_string(b + 1));
    }
  for (int a = 1; a < n; ++a) {
    Matrix<K> m(n, n);
    m(a - 1, a - 1) = K(1);
    m(a, a) = K(-1);
    mats.push_back(std::move(m));
    labels.push_back("d" + std::to_string(a));
  }
  mats.push_back(Matrix<K>::identity(n));
  labels.push_back("id");

  // coefficients of a gl(n) matrix in the basis above
  auto gl_coords = [&](const Matrix<K>& m) {
    Vec<K> c(dim, K(0));
    int t = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) c[t++] = (m(a, b) - m(b, a)) / K(2);
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) c[t++] = (m(a, b) + m(b, a)) / K(2);
    K tr(0);
    for (int a = 0; a < n; ++a) tr += m(a, a);
    K mean = tr / K(n);
    K acc(0);
    for (int a = 1; a < n; ++a) {
      acc += m(a - 1, a - 1) - mean;
      c[t++] = acc;
    }
    c[t] = mean;
    return c;
  };

  LieAlgebra<K> g("gl" + std::to_string(n) + "_semidirect", dim);
  for (int i = 0; i < ngl; ++i) g.labels[i] = labels[i];
  for (int i = 0; i < n; ++i) g.labels[ngl + i] = "u" + std::to_string(i + 1);
  for (int i = 0; i < ngl; ++i)
    for (int j = i + 1; j < ngl; ++j)
      g.set_bracket(i, j, gl_coords(mats[i] * mats[j] - mats[j] * mats[i]));
  for (int i = 0; i < ngl; ++i)
    for (int j = 0; j < n; ++j) {
      Vec<K> img(dim, K(0));
      for (int r = 0; r < n; ++r) img[ngl + r] = mats[i](r, j);
      g.set_bracket(i, ngl + j, img);
    }
  auto jr = jacobi_check(g);
  if (!jr.ok) throw ValidationError("gl_n construction violates the Jacobi identity");

  Matrix<K> h_rows(nw, dim), p_rows(dim - nw, dim);
  for (int i = 0; i < nw; ++i) h_rows(i, i) = K(1);
  for (int i = 0; i < dim - nw; ++i) p_rows(i, nw + i) = K(1);
  HomogeneousPair<K> pair{std::move(g), Subspace<K>::from_rows(h_rows, 1e-9),
                          Subspace<K>::from_rows(p_rows, 1e-9), true};

  // Q on p = sym matrices + R^n: alpha on the traceless part, gamma on the
  // trace line, beta on R^n.
  const int dp = dim - nw;
  Matrix<K> qp(dp, dp);
  for (int i = 0; i < ns; ++i) qp(i, i) = K(2) * alpha;
  for (int a = 0; a < nd; ++a) {
    qp(ns + a, ns + a) = K(2) * alpha;
    if (a + 1 < nd) {
      qp(ns + a, ns + a + 1) = -alpha;
      qp(ns + a + 1, ns + a) = -alpha;
    }
  }
  qp(ns + nd, ns + nd) = gamma * K(n);
  for (int i = 0; i < n; ++i) qp(ns + nd + 1 + i, ns + nd + 1 + i) = beta;

  e.pair = std::move(pair);
  e.qp = std::move(qp);
  e.expected["go"] = "witness_found";
  e.expected["strong"] = "certified_strong";
  return e;
}

template <class K>
CatalogEntry<K> build_example_I(const std::map<std::string, K>& params) {
  K a = getp(params, "a", K(1)), b = getp(params, "b", K(2));
  if (sgn_is_zero(a) || sgn_is_zero(b))
    throw ValidationError("example_I needs nonzero a and b");
  CatalogEntry<K> e;
  e.id = "example_I";
  e.params["a"] = a;
  e.params["b"] = b;
  // basis w (so(2)), e0 (the R factor), e1..e3 (the nilradical)
  LieAlgebra<K> g("example_I", 5);
  g.labels = {"w", "e0", "e1", "e2", "e3"};
  g.set_bracket(0, 2, unit<K>(5, 3, K(1)));   // [w,e1]=e2
  g.set_bracket(0, 3, unit<K>(5, 2, K(-1)));  // [w,e2]=-e1
  g.set_bracket(1, 2, unit<K>(5, 2, a));      // [e0,e1]=a e1
  g.set_bracket(1, 3, unit<K>(5, 3, a));
  g.set_bracket(1, 4, unit<K>(5, 4, b));      // [e0,e3]=b e3
  auto jr = jacobi_check(g);
  if (!jr.ok) throw ValidationError("example_I construction violates the Jacobi identity");
  Matrix<K> h_rows(1, 5), p_rows(4, 5);
  h_rows(0, 0) = K(1);
  for (int i = 0; i < 4; ++i) p_rows(i, 1 + i) = K(1);  // order e0, e1, e2, e3
  HomogeneousPair<K> pair{std::move(g), Subspace<K>::from_rows(h_rows, 1e-9),
                          Subspace<K>::from_rows(p_rows, 1e-9), true};
  e.pair = std::move(pair);
  e.qp = Matrix<K>::identity(4);

  MetabelianSpec<K> spec;
  spec.k = 3;
  spec.m = 1;
  Matrix<K> a1(3, 3);
  a1(0, 0) = a;
  a1(1, 1) = a;
  a1(2, 2) = b;
  spec.A.push_back(std::move(a1));
  e.metric_algebra = build_metabelian(spec);
  e.metab = std::move(spec);

  Vec<K> diag{a, a, b};
  Vec<K> ric = ricci_m1_diag(diag);
  std::string csv;
  for (size_t i = 0; i < ric.size(); ++i) csv += (i ? "," : "") + num_str(ric[i]);
  e.expected["ricci_diag"] = csv;
  e.expected["go"] = "witness_found";
  e.expected["strong"] = "certified_strong";
  e.expected["einstein_residual_zero"] = abs_double(a - b) <= 1e-12 ? "true" : "false";
  return e;
}

template <class K>
CatalogEntry<K> build_block_space_common(const std::string& id, std::vector<int> blocks,
                                         Vec<K> values, const std::map<std::string, K>& params) {
  CatalogEntry<K> e;
  e.id = id;
  BlockSpaceSpec<K> bspec;
  bspec.blocks = std::move(blocks);
  int k = 0;
  for (int kq : bspec.blocks) k += kq;
  MetabelianSpec<K> mspec;
  mspec.k = k;
  mspec.m = 1;
  Matrix<K> a1(k, k);
  int off = 0;
  for (size_t q = 0; q < bspec.blocks.size(); ++q) {
    for (int i = 0; i < bspec.blocks[q]; ++i) a1(off + i, off + i) = values[q];
    off += bspec.blocks[q];
  }
  mspec.A.push_back(std::move(a1));
  bspec.metab = std::move(mspec);
  bspec.validate();

  BlockSpace<K> bs = block_space_build(bspec);
  e.pair = std::move(bs.pair);
  e.qp = Matrix<K>::identity(k + 1);
  e.metric_algebra = std::move(bs.solv);
  e.metab = bspec.metab;

  Vec<K> diag(k);
  for (int i = 0; i < k; ++i) diag[i] = bspec.metab.A[0](i, i);
  Vec<K> ric = ricci_m1_diag(diag);
  std::string csv;
  for (size_t i = 0; i < ric.size(); ++i) csv += (i ? "," : "") + num_str(ric[i]);
  e.expected["ricci_diag"] = csv;
  e.expected["go"] = "witness_found";

  BlockTheoremCheck tc = block_theorem_check(bspec);
  bool all_equal = true;
  for (size_t q = 1; q < bspec.blocks.size(); ++q)
    if (abs_double(values[q] - values[0]) > 1e-12) all_equal = false;
  // distinct so(k_q) factors act through distinct summands, so the isotypic
  // components have multiplicity one and certification never degrades
  e.expected["strong"] = "certified_strong";
  e.expected["nabla_r_zero"] = all_equal ? "true" : "false";
  if (tc.applicable && tc.all_positive && !all_equal) e.expected["gordon_non_go"] = "true";
  e.block = std::move(bspec);
  for (const auto& kv : params) e.params[kv.first] = kv.second;
  return e;
}

template <class K>
CatalogEntry<K> build_example_II(const std::map<std::string, K>& params) {
  K a = getp(params, "a", K(1)), b = getp(params, "b", K(2));
  if (sgn_is_zero(a) || sgn_is_zero(b))
    throw ValidationError("example_II needs nonzero a and b");
  std::map<std::string, K> p{{"a", a}, {"b", b}};
  return build_block_space_common<K>("example_II", {2, 2}, Vec<K>{a, b}, p);
}

template <class K>
CatalogEntry<K> build_block_space(const std::map<std::string, K>& params) {
  std::vector<int> blocks;
  Vec<K> values;
  for (int q = 1;; ++q) {
    auto bit = params.find("b" + std::to_string(q));
    if (bit == params.end()) break;
    blocks.push_back(getp_int(params, "b" + std::to_string(q), 0));
    values.push_back(getp(params, "a" + std::to_string(q), K(q)));
  }
  if (blocks.empty()) {
    blocks = {2, 2};
    values = {K(1), K(2)};
  }
  return build_block_space_common<K>("block_space", std::move(blocks), std::move(values), params);
}

template <class K>
CatalogEntry<K> build_iwacom(const std::map<std::string, K>& params) {
  const int k = getp_int(params, "k", 2);
  const int m = getp_int(params, "m", 1);
  K r = getp(params, "r", K(1));
  CatalogEntry<K> e;
  e.id = "iwacom";
  e.params["k"] = K(k);
  e.params["m"] = K(m);
  e.params["r"] = r;
  EinsteinFamilySpec<K> fam;
  fam.r = r;
  fam.k = k;
  fam.m = m;
  if constexpr (scalar_traits<K>::is_exact) {
    // exact orthonormal sets exist when sqrt(k) is rational and a sign
    // matrix is available: k = 1 and k = 4 are wired in
    if (k == 1 && m == 1) {
      fam.xi = {Vec<K>{r}};
    } else if (k == 4 && m <= 4) {
      const int h4[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}};
      for (int j = 0; j < m; ++j) {
        Vec<K> row(4);
        for (int i = 0; i < 4; ++i) row[i] = r * K(h4[j][i]) / K(2);
        fam.xi.push_back(std::move(row));
      }
    } else {
      throw ValidationError(
          "iwacom in exact mode is wired for k=1 or k=4 only; use approx mode");
    }
  } else {
    // deterministic orthonormal set: constant vector first, then
    // Gram-Schmidt over standard basis vectors
    std::vector<Vec<double>> rows;
    Vec<double> ones(k, 1.0 / std::sqrt(static_cast<double>(k)));
    rows.push_back(ones);
    for (int j = 1; j < m; ++j) {
      Vec<double> v(k, 0.0);
      v[j - 1] = 1.0;
      for (const auto& prev : rows) {
        double pr = dot(v, prev);
        for (int i = 0; i < k; ++i) v[i] -= pr * prev[i];
      }
      double len = std::sqrt(dot(v, v));
      if (len < 1e-12) throw ValidationError("iwacom needs m <= k");
      for (auto& x : v) x /= len;
      rows.push_back(std::move(v));
    }
    for (auto& row : rows) {
      for (auto& x : row) x *= to_double(r);
      fam.xi.push_back(row);
    }
  }
  fam.validate();
  MetabelianSpec<K> spec = iwacom_build(fam);
  e.metric_algebra = build_metabelian(spec);
  e.metab = std::move(spec);
  e.expected["einstein_lambda"] = num_str(K(-r * r));
  e.expected["einstein_residual_zero"] = "true";
  if (k >= 2) e.expected["kmax"] = num_str(kmax_formula(fam));
  return e;
}

template <class K>
CatalogEntry<K> build_k3m2(const std::map<std::string, K>& params) {
  if constexpr (scalar_traits<K>::is_exact) {
    (void)params;
    throw ValidationError("k3m2 entries require approx mode (irrational structure constants)");
  } else {
    double t = to_double(getp(params, "t", K(0)));
    double r = to_double(getp(params, "r", K(1)));
    CatalogEntry<K> e;
    e.id = "k3m2";
    e.params["t"] = t;
    e.params["r"] = r;
    MetabelianSpec<double> spec = k3m2_build(t, r);
    e.metric_algebra = build_metabelian(spec);
    e.metab = std::move(spec);
    e.expected["einstein_lambda"] = num_str(-r * r);
    e.expected["einstein_residual_zero"] = "true";
    e.expected["kmax"] = num_str(r * r * (1.0 / 6.0 - t * t));
    const double tmax = 1.0 / std::sqrt(6.0);
    e.expected["nabla_r_zero"] = std::abs(t - tmax) <= 1e-12 ? "true" : "false";
    return e;
  }
}

}  // namespace catalog_detail

template <class K>
CatalogEntry<K> catalog_build(const std::string& id, const std::map<std::string, K>& params) {
  using namespace catalog_detail;
  if (id == "abelian") return build_abelian(params);
  if (id == "so_n") return build_so_n(params);
  if (id == "sl2r") return build_sl2r(params);
  if (id == "so3_mod_so2") return build_so3_mod_so2(params);
  if (id == "so3_mod_trivial") return build_so3_mod_trivial(params);
  if (id == "semidirect_compact") return build_semidirect_compact(params);
  if (id == "sl2r_semidirect_r2_mod_so2") return build_sl2r_semidirect(params);
  if (id == "gl_n_semidirect_rn_mod_son") return build_gl_n(params);
  if (id == "example_I") return build_example_I(params);
  if (id == "example_II") return build_example_II(params);
  if (id == "iwacom") return build_iwacom(params);
  if (id == "k3m2") return build_k3m2(params);
  if (id == "block_space") return build_block_space(params);
  throw ValidationError("unknown catalog id: " + id);
}

template CatalogEntry<Rat> catalog_build<Rat>(const std::string&, const std::map<std::string, Rat>&);
template CatalogEntry<double> catalog_build<double>(const std::string&,
                                                    const std::map<std::string, double>&);

}  // namespace golie

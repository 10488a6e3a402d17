#ifndef GOLIE_CATALOG_HPP
#define GOLIE_CATALOG_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "golie/homogeneous.hpp"
#include "golie/lie_algebra.hpp"
#include "golie/metric.hpp"
#include "golie/solvmanifold.hpp"

namespace golie {

/// One named, reproducible object: builders are deterministic in (id, params).
/// Expected properties are machine-checkable key/value assertions filled by
/// the builder from its defining data; verification against the independent
/// engines lives in the test and command layers.
template <class K>
struct CatalogEntry {
  std::string id;
  std::map<std::string, K> params;
  std::optional<MetricLieAlgebra<K>> metric_algebra;
  std::optional<HomogeneousPair<K>> pair;
  std::optional<Matrix<K>> qp;
  std::optional<MetabelianSpec<K>> metab;
  std::optional<BlockSpaceSpec<K>> block;
  std::map<std::string, std::string> expected;
};

std::vector<std::string> catalog_ids();

namespace catalog_detail {

template <class K>
K getp(const std::map<std::string, K>& params, const std::string& name, K dflt) {
  auto it = params.find(name);
  return it == params.end() ? dflt : it->second;
}

template <class K>
int getp_int(const std::map<std::string, K>& params, const std::string& name, int dflt) {
  auto it = params.find(name);
  if (it == params.end()) return dflt;
  double v = to_double(it->second);
  int r = static_cast<int>(v + (v >= 0 ? 0.5 : -0.5));
  if (std::abs(v - r) > 1e-9) throw ValidationError("parameter " + name + " must be an integer");
  return r;
}

/// so(n): cross-product basis for n=3, W_ab = E_ab - E_ba otherwise.
template <class K>
LieAlgebra<K> so_algebra(int n) {
  if (n < 2) throw ValidationError("so(n) needs n >= 2");
  if (n == 3) {
    LieAlgebra<K> g("so3", 3);
    g.labels = {"e1", "e2", "e3"};
    Vec<K> v(3, K(0));
    v[2] = K(1);
    g.set_bracket(0, 1, v);  // [e1,e2]=e3
    v = Vec<K>(3, K(0));
    v[0] = K(1);
    g.set_bracket(1, 2, v);  // [e2,e3]=e1
    v = Vec<K>(3, K(0));
    v[1] = K(1);
    g.set_bracket(2, 0, v);  // [e3,e1]=e2
    return g;
  }
  const int d = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> idx;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) idx.emplace_back(a, b);
  auto skew = [&](int t) {
    Matrix<K> m(n, n);
    m(idx[t].first, idx[t].second) = K(1);
    m(idx[t].second, idx[t].first) = K(-1);
    return m;
  };
  LieAlgebra<K> g("so" + std::to_string(n), d);
  for (int t = 0; t < d; ++t)
    g.labels[t] = "w" + std::to_string(idx[t].first + 1) + std::to_string(idx[t].second + 1);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      Matrix<K> c = skew(i) * skew(j) - skew(j) * skew(i);
      Vec<K> coords(d, K(0));
      for (int t = 0; t < d; ++t) coords[t] = c(idx[t].first, idx[t].second);
      g.set_bracket(i, j, coords);
    }
  return g;
}

/// sl(2,R) with [H,E]=2E, [H,F]=-2F, [E,F]=H.
template <class K>
LieAlgebra<K> sl2_algebra() {
  LieAlgebra<K> g("sl2r", 3);
  g.labels = {"H", "E", "F"};
  Vec<K> v(3, K(0));
  v[1] = K(2);
  g.set_bracket(0, 1, v);
  v = Vec<K>(3, K(0));
  v[2] = K(-2);
  g.set_bracket(0, 2, v);
  v = Vec<K>(3, K(0));
  v[0] = K(1);
  g.set_bracket(1, 2, v);
  return g;
}

}  // namespace catalog_detail

template <class K>
CatalogEntry<K> catalog_build(const std::string& id, const std::map<std::string, K>& params);

}  // namespace golie

#endif

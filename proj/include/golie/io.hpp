#ifndef GOLIE_IO_HPP
#define GOLIE_IO_HPP

#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"

#include "golie/lie_algebra.hpp"
#include "golie/linalg.hpp"
#include "golie/solvmanifold.hpp"

namespace golie {

using json = nlohmann::json;

json load_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const json& j);

/// Mode recorded in a file, with a fallback when the field is absent.
Mode mode_of_json(const json& j, Mode dflt);

/// Scalars travel as strings ("p/q" or decimal) in exact mode; floats are
/// rejected there because a binary double rarely denotes the intended
/// rational. Approx mode takes numbers or numeric strings.
template <class K>
K scalar_from_json(const json& j) {
  if constexpr (scalar_traits<K>::is_exact) {
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_number_float())
      throw ValidationError("exact mode requires scalars as strings or integers, got a float");
    throw ValidationError("bad scalar in JSON");
  } else {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) return to_double(rat_from_string(j.get<std::string>()));
    throw ValidationError("bad scalar in JSON");
  }
}

template <class K>
json scalar_to_json(const K& v) {
  if constexpr (scalar_traits<K>::is_exact)
    return rat_to_string(v);
  else
    return v;
}

template <class K>
Matrix<K> matrix_from_json(const json& rows) {
  if (!rows.is_array() || rows.empty() || !rows[0].is_array())
    throw ValidationError("matrix JSON must be a nonempty array of rows");
  Matrix<K> m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows; ++i) {
    if (static_cast<int>(rows[i].size()) != m.cols)
      throw ValidationError("matrix JSON rows have uneven lengths");
    for (int j = 0; j < m.cols; ++j) m(i, j) = scalar_from_json<K>(rows[i][j]);
  }
  return m;
}

template <class K>
json matrix_to_json(const Matrix<K>& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows; ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(scalar_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Brackets are stored sparsely for i<j only; the loader mirrors them.
template <class K>
LieAlgebra<K> algebra_from_json(const json& j) {
  if (!j.contains("dim")) throw ValidationError("algebra JSON needs a dim field");
  const int n = j.at("dim").get<int>();
  if (n < 0 || n > 64) throw ValidationError("algebra dim out of range");
  LieAlgebra<K> g(j.value("name", std::string("algebra")), n);
  if (j.contains("basis")) {
    const auto& basis = j.at("basis");
    if (static_cast<int>(basis.size()) != n)
      throw ValidationError("basis label count does not match dim");
    for (int i = 0; i < n; ++i) g.labels[i] = basis[i].get<std::string>();
  }
  if (j.contains("eps")) g.eps = j.at("eps").get<double>();
  for (const auto& br : j.value("brackets", json::array())) {
    const int bi = br.at("i").get<int>(), bj = br.at("j").get<int>();
    if (bi < 0 || bj < 0 || bi >= n || bj >= n)
      throw ValidationError("bracket indices out of range");
    if (bi >= bj) throw ValidationError("brackets must be stored with i < j");
    Vec<K> img(n, K(0));
    for (const auto& [key, val] : br.at("terms").items()) {
      int k = -1;
      try {
        k = std::stoi(key);
      } catch (...) {
        throw ValidationError("bracket term key is not an index: " + key);
      }
      if (k < 0 || k >= n) throw ValidationError("bracket term index out of range: " + key);
      img[k] = scalar_from_json<K>(val);
    }
    g.set_bracket(bi, bj, img);
  }
  return g;
}

template <class K>
json algebra_to_json(const LieAlgebra<K>& g) {
  json j;
  j["name"] = g.name;
  j["dim"] = g.n;
  j["mode"] = scalar_traits<K>::is_exact ? "exact" : "approx";
  j["basis"] = g.labels;
  json brackets = json::array();
  for (int i = 0; i < g.n; ++i)
    for (int jj = i + 1; jj < g.n; ++jj) {
      json terms = json::object();
      Vec<K> img = g.bracket_basis(i, jj);
      for (int k = 0; k < g.n; ++k)
        if (!sgn_is_zero(img[k])) terms[std::to_string(k)] = scalar_to_json(img[k]);
      if (!terms.empty()) brackets.push_back({{"i", i}, {"j", jj}, {"terms", std::move(terms)}});
    }
  j["brackets"] = std::move(brackets);
  return j;
}

template <class K>
Matrix<K> metric_from_json(const json& j) {
  if (!j.contains("matrix")) throw ValidationError("metric JSON needs a matrix field");
  return matrix_from_json<K>(j.at("matrix"));
}

template <class K>
json metric_to_json(const Matrix<K>& m) {
  json j;
  j["matrix"] = matrix_to_json(m);
  return j;
}

/// Pair file contents before assembly into a validated HomogeneousPair;
/// p_span may be omitted, in which case callers derive the complement from
/// an ambient metric.
template <class K>
struct PairFile {
  LieAlgebra<K> g;
  Matrix<K> h_rows;
  std::optional<Matrix<K>> p_rows;
  bool h_is_compact = false;
};

/// The algebra field is either inline or a path relative to the pair file.
template <class K>
PairFile<K> pair_from_json(const json& j, const std::filesystem::path& base_dir) {
  PairFile<K> out{LieAlgebra<K>("", 0), Matrix<K>(0, 0), std::nullopt, false};
  if (!j.contains("algebra")) throw ValidationError("pair JSON needs an algebra field");
  const auto& alg = j.at("algebra");
  if (alg.is_string())
    out.g = algebra_from_json<K>(load_json_file(base_dir / alg.get<std::string>()));
  else
    out.g = algebra_from_json<K>(alg);
  if (!j.contains("h_span")) throw ValidationError("pair JSON needs an h_span field");
  const auto& h = j.at("h_span");
  out.h_rows = h.empty() ? Matrix<K>(0, out.g.n) : matrix_from_json<K>(h);
  if (out.h_rows.rows > 0 && out.h_rows.cols != out.g.n)
    throw ValidationError("h_span width does not match the algebra dimension");
  if (j.contains("p_span") && !j.at("p_span").is_null()) {
    out.p_rows = matrix_from_json<K>(j.at("p_span"));
    if (out.p_rows->cols != out.g.n)
      throw ValidationError("p_span width does not match the algebra dimension");
  }
  out.h_is_compact = j.value("h_is_compact", false);
  return out;
}

template <class K>
json pair_to_json(const LieAlgebra<K>& g, const Matrix<K>& h_rows, const Matrix<K>& p_rows,
                  bool h_is_compact) {
  json j;
  j["algebra"] = algebra_to_json(g);
  j["h_span"] = matrix_to_json(h_rows);
  j["p_span"] = matrix_to_json(p_rows);
  j["h_is_compact"] = h_is_compact;
  return j;
}

/// Field extraction only; callers run validate() as a separate stage so the
/// validate command can tell malformed files from failed structural checks.
template <class K>
MetabelianSpec<K> metab_fields_from_json(const json& j) {
  MetabelianSpec<K> spec;
  spec.k = j.at("k").get<int>();
  spec.m = j.at("m").get<int>();
  if (j.contains("eps")) spec.eps = j.at("eps").get<double>();
  for (const auto& a : j.at("A")) spec.A.push_back(matrix_from_json<K>(a));
  return spec;
}

template <class K>
MetabelianSpec<K> metab_from_json(const json& j) {
  MetabelianSpec<K> spec = metab_fields_from_json<K>(j);
  spec.validate();
  return spec;
}

template <class K>
json metab_to_json(const MetabelianSpec<K>& spec) {
  json j;
  j["k"] = spec.k;
  j["m"] = spec.m;
  j["mode"] = scalar_traits<K>::is_exact ? "exact" : "approx";
  json mats = json::array();
  for (const auto& a : spec.A) mats.push_back(matrix_to_json(a));
  j["A"] = std::move(mats);
  return j;
}

template <class K>
EinsteinFamilySpec<K> family_fields_from_json(const json& j) {
  EinsteinFamilySpec<K> fam;
  fam.r = scalar_from_json<K>(j.at("r"));
  fam.k = j.at("k").get<int>();
  fam.m = j.at("m").get<int>();
  for (const auto& row : j.at("xi")) {
    Vec<K> v;
    for (const auto& x : row) v.push_back(scalar_from_json<K>(x));
    fam.xi.push_back(std::move(v));
  }
  return fam;
}

template <class K>
EinsteinFamilySpec<K> family_from_json(const json& j) {
  EinsteinFamilySpec<K> fam = family_fields_from_json<K>(j);
  fam.validate();
  return fam;
}

template <class K>
BlockSpaceSpec<K> block_fields_from_json(const json& j) {
  BlockSpaceSpec<K> spec;
  for (const auto& b : j.at("blocks")) spec.blocks.push_back(b.get<int>());
  json metab = j;
  if (!j.contains("k")) {
    int k = 0;
    for (int b : spec.blocks) k += b;
    metab["k"] = k;
  }
  if (!j.contains("m")) metab["m"] = static_cast<int>(j.at("A").size());
  spec.metab = metab_fields_from_json<K>(metab);
  return spec;
}

template <class K>
BlockSpaceSpec<K> block_from_json(const json& j) {
  BlockSpaceSpec<K> spec = block_fields_from_json<K>(j);
  spec.metab.validate();
  spec.validate();
  return spec;
}

}  // namespace golie

#endif

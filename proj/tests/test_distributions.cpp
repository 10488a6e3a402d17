#include "doctest.h"

#include <algorithm>

#include "golie/catalog.hpp"
#include "golie/distributions.hpp"

using namespace golie;

namespace {

InvariantMetricSpace<Rat> build_space(const std::string& id,
                                      std::map<std::string, Rat> params = {}) {
  auto e = catalog_build<Rat>(id, params);
  REQUIRE(e.pair.has_value());
  REQUIRE(e.qp.has_value());
  return InvariantMetricSpace<Rat>(*e.pair, *e.qp);
}

// so(2) acting on R^4 as two copies of the rotation representation; the
// multiplicity-two module has a continuum of invariant planes.
InvariantMetricSpace<Rat> double_rotation_space() {
  LieAlgebra<Rat> g("rot2x2", 5);
  g.set_bracket_term(0, 1, 2, Rat(1));
  g.set_bracket_term(0, 2, 1, Rat(-1));
  g.set_bracket_term(0, 3, 4, Rat(1));
  g.set_bracket_term(0, 4, 3, Rat(-1));
  Matrix<Rat> hrows(1, 5), prows(4, 5);
  hrows(0, 0) = Rat(1);
  for (int i = 0; i < 4; ++i) prows(i, i + 1) = Rat(1);
  HomogeneousPair<Rat> pair{g, Subspace<Rat>::from_rows(hrows, g.eps),
                            Subspace<Rat>::from_rows(prows, g.eps), true};
  return InvariantMetricSpace<Rat>(pair, Matrix<Rat>::identity(4));
}

}  // namespace

TEST_CASE("commutant dimensions: empty action, one rotation, two equal rotations") {
  CHECK(commutant_basis<Rat>({}, 2, 1e-9).size() == 4);

  Matrix<Rat> j(2, 2);
  j(0, 1) = Rat(-1);
  j(1, 0) = Rat(1);
  CHECK(commutant_basis<Rat>({j}, 2, 1e-9).size() == 2);

  Matrix<Rat> jj(4, 4);
  jj(0, 1) = jj(2, 3) = Rat(-1);
  jj(1, 0) = jj(3, 2) = Rat(1);
  CHECK(commutant_basis<Rat>({jj}, 4, 1e-9).size() == 8);
}

TEST_CASE("restrict_action rejects non-invariant subspaces") {
  Matrix<Rat> j(2, 2);
  j(0, 1) = Rat(-1);
  j(1, 0) = Rat(1);
  Matrix<Rat> line(1, 2);
  line(0, 0) = Rat(1);
  CHECK_THROWS_AS(
      restrict_action<Rat>({j}, Subspace<Rat>::from_rows(line, 1e-9), 1e-9),
      Error);
}

TEST_CASE("isotypic split of the round 2-sphere isotropy module") {
  auto sp = build_space("so3_mod_so2");
  auto dec = isotypic_decompose(sp.isotropy_action_matrices(), sp.qp(), sp.eps(), 1);
  CHECK(dec.trivial.dim() == 0);
  REQUIRE(dec.components.size() == 1);
  CHECK(dec.components[0].space.dim() == 2);
  CHECK(dec.components[0].multiplicity == 1);
  CHECK(dec.commutant_dim == 2);  // complex-type module
}

TEST_CASE("isotypic split of the symmetric-matrix plus vector module") {
  auto sp = build_space("gl_n_semidirect_rn_mod_son", {{"n", Rat(3)}});
  auto dec = isotypic_decompose(sp.isotropy_action_matrices(), sp.qp(), sp.eps(), 1);
  CHECK(dec.trivial.dim() == 1);
  REQUIRE(dec.components.size() == 2);
  std::vector<std::pair<int, int>> dm;
  for (const auto& c : dec.components) dm.emplace_back(c.space.dim(), c.multiplicity);
  std::sort(dm.begin(), dm.end());
  CHECK(dm == std::vector<std::pair<int, int>>{{3, 1}, {5, 1}});
  CHECK(dec.commutant_dim == 3);
}

TEST_CASE("component projectors: idempotent, equivariant, resolution of identity") {
  for (const char* id : {"so3_mod_so2", "gl_n_semidirect_rn_mod_son"}) {
    CAPTURE(id);
    auto sp = build_space(id);
    auto dec = isotypic_decompose(sp.isotropy_action_matrices(), sp.qp(), sp.eps(), 1);
    auto projs = component_projectors(dec, sp.qp(), sp.eps());
    Matrix<Rat> sum(sp.dim_p(), sp.dim_p());
    for (const auto& p : projs) {
      CHECK(p * p == p);
      for (const auto& a : sp.isotropy_action_matrices()) CHECK(p * a == a * p);
      sum = sum + p;
    }
    CHECK(sum == Matrix<Rat>::identity(sp.dim_p()));
  }
}

TEST_CASE("strong verdicts across the catalog spaces") {
  auto r1 = strong_subalgebra_check(build_space("so3_mod_so2"), 50, 1);
  CHECK(r1.status == StrongStatus::certified_strong);
  CHECK_FALSE(r1.has_counterexample);

  auto r2 = strong_subalgebra_check(build_space("semidirect_compact"), 50, 1);
  CHECK(r2.status == StrongStatus::certified_strong);

  auto r3 = strong_subalgebra_check(build_space("block_space"), 50, 1);
  CHECK(r3.status == StrongStatus::certified_strong);

  auto r4 = strong_subalgebra_check(build_space("so3_mod_trivial"), 50, 1);
  REQUIRE(r4.status == StrongStatus::counterexample);
  // The failing subspace really fails to close: [u, v] escapes it.
  Subspace<Rat> q = Subspace<Rat>::from_rows(r4.cex_basis, 1e-9);
  Vec<Rat> br = build_space("so3_mod_trivial").pair().g.bracket(r4.cex_u, r4.cex_v);
  CHECK_FALSE(q.contains(br, 1e-9));
}

TEST_CASE("multiplicity two degrades the verdict to a sampled pass") {
  auto sp = double_rotation_space();
  auto r = strong_subalgebra_check(sp, 40, 9);
  CHECK(r.status == StrongStatus::probabilistic_pass);
  REQUIRE(r.component_dims_mults.size() == 1);
  CHECK(r.component_dims_mults[0] == std::pair<int, int>{4, 2});
  CHECK(r.trivial_dim == 0);
  CHECK(r.commutant_dim == 8);
  CHECK(r.samples_used == 40);
}

TEST_CASE("strong_status_name spells the three verdicts") {
  CHECK(std::string(strong_status_name(StrongStatus::certified_strong)) == "certified_strong");
  CHECK(std::string(strong_status_name(StrongStatus::counterexample)) == "counterexample");
  CHECK(std::string(strong_status_name(StrongStatus::probabilistic_pass)) == "probabilistic_pass");
}

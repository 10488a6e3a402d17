#include "doctest.h"

#include <set>

#include "golie/catalog.hpp"

using namespace golie;

TEST_CASE("catalog ids are distinct and every entry assembles") {
  auto ids = catalog_ids();
  CHECK(ids.size() == 13);
  CHECK(std::set<std::string>(ids.begin(), ids.end()).size() == ids.size());
  for (const auto& id : ids) {
    CAPTURE(id);
    if (id == "k3m2") {
      auto e = catalog_build<double>(id, {});
      REQUIRE(e.metric_algebra.has_value());
      CHECK(jacobi_check(e.metric_algebra->alg).ok);
      continue;
    }
    std::map<std::string, Rat> params;
    if (id == "iwacom") params["k"] = Rat(4);  // the exact-mode size
    auto e = catalog_build<Rat>(id, params);
    CHECK(e.id == id);
    CHECK_FALSE(e.expected.empty());
    if (e.metric_algebra) {
      CHECK(jacobi_check(e.metric_algebra->alg).ok);
      e.metric_algebra->validate();
    }
    if (e.pair) {
      CHECK(jacobi_check(e.pair->g).ok);
      e.pair->validate();
      REQUIRE(e.qp.has_value());
      InvariantMetricSpace<Rat> sp(*e.pair, *e.qp);  // throws if Qp not invariant
      CHECK(sp.dim_p() + sp.dim_h() == e.pair->g.n);
    }
  }
}

TEST_CASE("builders are deterministic in (id, params)") {
  for (const auto& id : catalog_ids()) {
    CAPTURE(id);
    if (id == "k3m2") {
      auto a = catalog_build<double>(id, {{"t", 0.2}});
      auto b = catalog_build<double>(id, {{"t", 0.2}});
      CHECK(a.metric_algebra->alg.c == b.metric_algebra->alg.c);
      CHECK(a.expected == b.expected);
      continue;
    }
    std::map<std::string, Rat> params;
    if (id == "iwacom") params["k"] = Rat(4);
    auto a = catalog_build<Rat>(id, params);
    auto b = catalog_build<Rat>(id, params);
    CHECK(a.expected == b.expected);
    if (a.metric_algebra) CHECK(a.metric_algebra->alg.c == b.metric_algebra->alg.c);
    if (a.pair) {
      CHECK(a.pair->g.c == b.pair->g.c);
      CHECK(a.pair->h.basis == b.pair->h.basis);
      CHECK(*a.qp == *b.qp);
    }
  }
}

TEST_CASE("frozen expectations of the named solvable example") {
  auto e = catalog_build<Rat>("example_I", {{"a", Rat(1)}, {"b", Rat(2)}});
  CHECK(e.expected.at("ricci_diag") == "-4,-4,-8,-6");
  CHECK(e.expected.at("go") == "witness_found");
  CHECK(e.expected.at("strong") == "certified_strong");
  CHECK(e.expected.at("einstein_residual_zero") == "false");

  // a = b collapses to a constant-curvature space, hence Einstein.
  auto iso = catalog_build<Rat>("example_I", {{"a", Rat(1)}, {"b", Rat(1)}});
  CHECK(iso.expected.at("einstein_residual_zero") == "true");
  CHECK(iso.expected.at("ricci_diag") == "-3,-3,-3,-3");
}

TEST_CASE("mode restrictions and parameter validation") {
  CHECK_THROWS_AS(catalog_build<Rat>("not_an_entry", {}), ValidationError);
  CHECK_THROWS_AS(catalog_build<Rat>("abelian", {{"n", Rat(0)}}), ValidationError);
  CHECK_THROWS_AS(catalog_build<Rat>("so3_mod_so2", {{"alpha", Rat(-1)}}), ValidationError);
  CHECK_THROWS_AS(catalog_build<Rat>("abelian", {{"n", Rat(5, 2)}}), ValidationError);

  // irrational structure constants stay out of the exact field
  CHECK_THROWS_WITH_AS(catalog_build<Rat>("k3m2", {}),
                       doctest::Contains("approx mode"), ValidationError);
  CHECK_THROWS_WITH_AS(catalog_build<Rat>("iwacom", {{"k", Rat(3)}}),
                       doctest::Contains("approx mode"), ValidationError);
  // while a sign-matrix size admits an exact orthonormal set
  auto e = catalog_build<Rat>("iwacom", {{"k", Rat(4)}, {"m", Rat(2)}});
  CHECK(e.expected.at("einstein_lambda") == "-1");
  CHECK(e.metab->A[0](0, 0) == Rat(1, 2));
}

TEST_CASE("block entries expose the non-GO marker only for distinct positive blocks") {
  auto distinct = catalog_build<Rat>("block_space", {});
  CHECK(distinct.expected.count("gordon_non_go") == 1);
  CHECK(distinct.expected.at("nabla_r_zero") == "false");

  auto equal = catalog_build<Rat>(
      "block_space", {{"b1", Rat(2)}, {"b2", Rat(2)}, {"a1", Rat(1)}, {"a2", Rat(1)}});
  CHECK(equal.expected.count("gordon_non_go") == 0);
  CHECK(equal.expected.at("nabla_r_zero") == "true");

  auto ex2 = catalog_build<Rat>("example_II", {});
  CHECK(ex2.expected.count("gordon_non_go") == 1);
  CHECK(ex2.metab->k == 4);
  CHECK(ex2.pair->dim_h() == 2);
}

TEST_CASE("defaults used by the spot-check scenarios") {
  auto e = catalog_build<double>("k3m2", {{"t", 0.2}, {"r", 2.0}});
  CHECK(e.expected.at("einstein_lambda") == "-4");
  CHECK(e.metab->k == 3);
  CHECK(e.metab->m == 2);

  auto g = catalog_build<Rat>("gl_n_semidirect_rn_mod_son", {});
  CHECK(g.pair->dim_h() == 3);
  CHECK(g.pair->dim_p() == 9);
  CHECK(g.expected.at("go") == "witness_found");
}

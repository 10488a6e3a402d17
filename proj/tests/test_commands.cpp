#include "doctest.h"

#include <unistd.h>

#include <atomic>
#include <fstream>

#include "golie/catalog.hpp"
#include "golie/commands.hpp"
#include "golie/io.hpp"

using namespace golie;
namespace fs = std::filesystem;

namespace {

struct TmpDir {
  fs::path dir;
  TmpDir() {
    static std::atomic<int> counter{0};
    dir = fs::temp_directory_path() /
          ("golie-cmd-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    fs::create_directories(dir);
  }
  ~TmpDir() {
    std::error_code ec;
    fs::remove_all(dir, ec);
  }
  fs::path put(const std::string& name, const std::string& text) const {
    fs::path p = dir / name;
    std::ofstream(p) << text;
    return p;
  }
};

const char* kSo3Json = R"({
  "name": "so3", "dim": 3, "mode": "exact", "basis": ["e1", "e2", "e3"],
  "brackets": [
    {"i": 0, "j": 1, "terms": {"2": "1"}},
    {"i": 1, "j": 2, "terms": {"0": "1"}},
    {"i": 0, "j": 2, "terms": {"1": "-1"}}
  ]
})";

CmdOptions quick() {
  CmdOptions opt;
  opt.samples = 40;
  return opt;
}

}  // namespace

TEST_CASE("validate: exit 0 on sound input, 1 on structural findings, 2 on bad files") {
  TmpDir t;
  auto opt = quick();

  auto ok = cmd_validate(t.put("so3.json", kSo3Json), opt);
  CHECK(ok.exit_code == 0);
  CHECK(ok.verdicts.at("verdict") == "valid");
  CHECK(ok.verdicts.at("checks").at("jacobi") == true);

  // a perturbed constant breaks the Jacobi identity: a finding, not bad input
  std::string broken = kSo3Json;
  auto pos = broken.find("{\"0\": \"1\"}");
  REQUIRE(pos != std::string::npos);
  broken.replace(pos, 10, "{\"0\": \"1\", \"1\": \"1/7\"}");
  auto bad = cmd_validate(t.put("broken.json", broken), opt);
  CHECK(bad.exit_code == 1);
  CHECK(bad.verdicts.at("verdict") == "invalid_structure");
  CHECK(bad.verdicts.at("checks").at("jacobi") == false);
  CHECK(bad.verdicts.at("checks").contains("jacobi_violation"));

  auto mangled = cmd_validate(t.put("mangled.json", "{ not json"), opt);
  CHECK(mangled.exit_code == 2);
  CHECK(mangled.verdicts.at("error").get<std::string>().find("malformed") != std::string::npos);

  auto missing = cmd_validate(t.dir / "nope.json", opt);
  CHECK(missing.exit_code == 2);

  auto unknown = cmd_validate(t.put("mystery.json", R"({"foo": 1})"), opt);
  CHECK(unknown.exit_code == 2);
}

TEST_CASE("validate: exact mode rejects float scalars and i >= j rows") {
  TmpDir t;
  auto opt = quick();

  auto floaty = cmd_validate(
      t.put("f.json",
            R"({"dim": 2, "mode": "exact", "basis": ["a","b"],
                "brackets": [{"i": 0, "j": 1, "terms": {"0": 0.5}}]})"),
      opt);
  CHECK(floaty.exit_code == 2);
  CHECK(floaty.verdicts.at("error").get<std::string>().find("float") != std::string::npos);

  auto swapped = cmd_validate(
      t.put("s.json",
            R"({"dim": 2, "mode": "exact", "basis": ["a","b"],
                "brackets": [{"i": 1, "j": 0, "terms": {"0": "1"}}]})"),
      opt);
  CHECK(swapped.exit_code == 2);
  CHECK(swapped.verdicts.at("error").get<std::string>().find("i < j") != std::string::npos);

  // the same float is fine once the mode says approx
  CmdOptions ap = quick();
  ap.mode = Mode::approx;
  auto lax = cmd_validate(t.put("f2.json",
                                R"({"dim": 2, "basis": ["a","b"],
                "brackets": [{"i": 0, "j": 1, "terms": {"0": 0.5}}]})"),
                          ap);
  CHECK(lax.exit_code == 0);
}

TEST_CASE("validate: metric, metabelian, family and pair kinds") {
  TmpDir t;
  auto opt = quick();

  auto pd = cmd_validate(t.put("q.json", R"({"matrix": [["2","1"],["1","1"]]})"), opt);
  CHECK(pd.exit_code == 0);
  auto npd = cmd_validate(t.put("q2.json", R"({"matrix": [["1","2"],["2","1"]]})"), opt);
  CHECK(npd.exit_code == 1);
  CHECK(npd.verdicts.at("checks").at("positive_definite") == false);

  auto metab = cmd_validate(
      t.put("m.json", R"({"k": 2, "m": 1, "A": [[["1","0"],["0","2"]]]})"), opt);
  CHECK(metab.exit_code == 0);
  auto noncomm = cmd_validate(
      t.put("m2.json",
            R"({"k": 2, "m": 2, "A": [[["0","1"],["0","0"]], [["0","0"],["1","0"]]]})"),
      opt);
  CHECK(noncomm.exit_code == 1);
  CHECK(noncomm.verdicts.at("checks").at("commuting_and_normalized") == false);

  auto fam = cmd_validate(
      t.put("fam.json", R"({"r": "1", "k": 4, "m": 1, "xi": [["1/2","1/2","1/2","1/2"]]})"),
      opt);
  CHECK(fam.exit_code == 0);
  auto skewfam = cmd_validate(
      t.put("fam2.json", R"({"r": "1", "k": 2, "m": 1, "xi": [["1","1"]]})"), opt);
  CHECK(skewfam.exit_code == 1);

  // pair with the algebra behind a relative path
  t.put("alg.json", kSo3Json);
  auto pair = cmd_validate(t.put("pair.json", R"({
    "algebra": "alg.json",
    "h_span": [["0","0","1"]],
    "h_is_compact": true
  })"),
                           opt);
  CHECK(pair.exit_code == 0);
  CHECK(pair.verdicts.at("checks").at("h_subalgebra") == true);
  CHECK(pair.verdicts.at("checks").at("reductive_complement") == true);
}

TEST_CASE("catalog emit followed by the consuming commands round-trips") {
  TmpDir t;
  CmdOptions opt = quick();
  opt.emit_dir = t.dir / "exI";

  auto cat = cmd_catalog("example_I", {{"a", "1"}, {"b", "2"}}, opt);
  REQUIRE(cat.exit_code == 0);
  CHECK(cat.verdicts.at("verdict") == "expected_properties_hold");
  CHECK(cat.verdicts.at("verified").at("ricci_diag").at("pass") == true);
  CHECK(cat.verdicts.at("verified").at("go").at("computed") == "witness_found");

  CmdOptions opt2 = quick();
  auto curv = cmd_curvature(*opt.emit_dir / "algebra.json", *opt.emit_dir / "metric.json", opt2);
  REQUIRE(curv.exit_code == 0);
  Vec<double> spec = curv.verdicts.at("ricci_spectrum").get<Vec<double>>();
  REQUIRE(spec.size() == 4);
  const double want[4] = {-8, -6, -4, -4};
  for (int i = 0; i < 4; ++i) CHECK(std::abs(spec[i] - want[i]) < 1e-9);
  CHECK(curv.verdicts.at("ricci_diag_exact") ==
        ojson::array({"-4", "-4", "-8", "-6"}));
  CHECK(curv.verdicts.at("locally_symmetric") == false);
  CHECK(curv.verdicts.at("einstein").at("is_einstein") == false);

  auto go = cmd_go_test(*opt.emit_dir / "pair.json", *opt.emit_dir / "metric_p.json", opt2);
  CHECK(go.exit_code == 1);
  CHECK(go.verdicts.at("verdict") == "witness_found");
  bool noted = false;
  for (const auto& n : go.scope_notes)
    if (n == kScopeNonGoGroup) noted = true;
  CHECK(noted);

  auto dist = cmd_distribution_check(*opt.emit_dir / "pair.json",
                                     *opt.emit_dir / "metric_p.json", opt2);
  CHECK(dist.exit_code == 0);
  CHECK(dist.verdicts.at("verdict") == "certified_strong");
}

TEST_CASE("go-test: sampled pass, invalid metric, counterexample-free symmetric space") {
  TmpDir t;
  CmdOptions opt = quick();
  opt.emit_dir = t.dir / "sphere";
  REQUIRE(cmd_catalog("so3_mod_so2", {}, opt).exit_code == 0);

  CmdOptions opt2 = quick();
  auto go = cmd_go_test(*opt.emit_dir / "pair.json", *opt.emit_dir / "metric_p.json", opt2);
  CHECK(go.exit_code == 0);
  CHECK(go.verdicts.at("verdict") == "no_witness");
  bool noted = false;
  for (const auto& n : go.scope_notes)
    if (n == kScopeGoSampled) noted = true;
  CHECK(noted);

  // a non-invariant metric on p is invalid input, not a finding
  t.put("qbad.json", R"({"matrix": [["1","0"],["0","2"]]})");
  auto bad = cmd_go_test(*opt.emit_dir / "pair.json", t.dir / "qbad.json", opt2);
  CHECK(bad.exit_code == 2);
  CHECK(bad.verdicts.at("error").get<std::string>().find("ad(h)-invariant") != std::string::npos);
}

TEST_CASE("distribution-check surfaces the bracket that escapes the subspace") {
  TmpDir t;
  CmdOptions opt = quick();
  opt.emit_dir = t.dir / "so3";
  // full so(3) over a trivial isotropy: coordinate planes fail to close
  auto cat = cmd_catalog("so3_mod_trivial", {}, opt);
  REQUIRE(cat.exit_code == 0);

  auto dist = cmd_distribution_check(*opt.emit_dir / "pair.json",
                                     *opt.emit_dir / "metric_p.json", quick());
  CHECK(dist.exit_code == 1);
  CHECK(dist.verdicts.at("verdict") == "counterexample");
  auto br = dist.verdicts.at("counterexample").at("bracket");
  REQUIRE(br.size() == 3);
}

TEST_CASE("reports are deterministic in (inputs, seed) and the digest tracks the core") {
  TmpDir t;
  CmdOptions opt = quick();
  opt.emit_dir = t.dir / "flat";
  REQUIRE(cmd_catalog("sl2r_semidirect_r2_mod_so2", {}, opt).exit_code == 0);

  auto r1 = cmd_go_test(*opt.emit_dir / "pair.json", *opt.emit_dir / "metric_p.json", quick());
  auto r2 = cmd_go_test(*opt.emit_dir / "pair.json", *opt.emit_dir / "metric_p.json", quick());
  ojson j1 = report_to_json(r1), j2 = report_to_json(r2);
  CHECK(j1.at("digest") == j2.at("digest"));
  j1.erase("timings_ms");
  j2.erase("timings_ms");
  CHECK(j1.dump() == j2.dump());

  CmdOptions other = quick();
  other.seed = 2;
  auto r3 = cmd_go_test(*opt.emit_dir / "pair.json", *opt.emit_dir / "metric_p.json", other);
  CHECK(report_to_json(r3).at("digest") != j2.at("digest"));
}

TEST_CASE("report files land where requested with the exit code inside") {
  TmpDir t;
  CmdOptions opt = quick();
  opt.report_path = t.dir / "report.json";
  auto r = cmd_validate(t.put("so3.json", kSo3Json), opt);
  CHECK(finish_report(r, opt) == 0);
  json loaded = load_json_file(*opt.report_path);
  CHECK(loaded.at("command") == "validate");
  CHECK(loaded.at("exit_code") == 0);
  CHECK(loaded.contains("digest"));
  CHECK(loaded.at("mode") == "exact");
}

TEST_CASE("catalog: unknown ids and malformed parameters are input errors") {
  auto unknown = cmd_catalog("not_a_space", {}, quick());
  CHECK(unknown.exit_code == 2);
  auto badparam = cmd_catalog("so3_mod_so2", {{"alpha", "one"}}, quick());
  CHECK(badparam.exit_code == 2);
}

TEST_CASE("every catalog entry verifies against the independent engines") {
  for (const auto& id : catalog_ids()) {
    CAPTURE(id);
    CmdOptions opt = quick();
    std::map<std::string, std::string> params;
    if (id == "k3m2") opt.mode = Mode::approx;
    if (id == "iwacom") params["k"] = "4";
    auto r = cmd_catalog(id, params, opt);
    CHECK(r.exit_code == 0);
    CHECK(r.verdicts.at("verdict") == "expected_properties_hold");
  }
}

TEST_CASE("reproduce: unknown scenario is an input error, a known one reports rows") {
  auto bad = cmd_reproduce("no-such-scenario", quick());
  CHECK(bad.exit_code == 2);

  auto r = cmd_reproduce("04-constant-curvature-m1", quick());
  CHECK(r.exit_code == 0);
  CHECK(r.verdicts.at("failed") == 0);
  CHECK(r.verdicts.at("total") == 1);
  REQUIRE(r.verdicts.at("scenarios").size() == 1);
  CHECK(r.verdicts.at("scenarios")[0].at("pass") == true);
}

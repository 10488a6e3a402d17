#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "golie/catalog.hpp"
#include "golie/commands.hpp"

namespace {

using golie::CmdOptions;
using golie::Mode;
using golie::RunReport;

struct CliState {
  CmdOptions opt;
  std::string mode_str;
  std::string report_str;
  std::string emit_str;
};

void add_common(CLI::App* sub, CliState& st) {
  sub->add_option("--mode", st.mode_str, "scalar mode (default: the input file's mode field)")
      ->check(CLI::IsMember({"exact", "approx"}));
  sub->add_option("--eps", st.opt.eps, "numeric tolerance for approx mode")
      ->capture_default_str();
  sub->add_option("--samples", st.opt.samples, "sample count for randomized searches")
      ->capture_default_str();
  sub->add_option("--seed", st.opt.seed, "RNG seed, recorded in the report")
      ->capture_default_str();
  sub->add_option("--report", st.report_str, "write the full JSON run report to this path");
}

void resolve(CliState& st) {
  if (st.mode_str == "exact") st.opt.mode = Mode::exact;
  if (st.mode_str == "approx") st.opt.mode = Mode::approx;
  if (!st.report_str.empty()) st.opt.report_path = st.report_str;
  if (!st.emit_str.empty()) st.opt.emit_dir = st.emit_str;
}

int print_and_finish(const RunReport& r, const CmdOptions& opt) {
  if (r.command == "reproduce" && r.verdicts.contains("scenarios")) {
    for (const auto& row : r.verdicts["scenarios"]) {
      std::printf("[%s] %s\n", row["pass"].get<bool>() ? "PASS" : "FAIL",
                  row["id"].get<std::string>().c_str());
      for (const auto& d : row["details"])
        std::printf("    %s\n", d.get<std::string>().c_str());
    }
    if (r.verdicts.contains("total"))
      std::printf("%ld/%ld scenarios passed\n",
                  r.verdicts["total"].get<long>() - r.verdicts["failed"].get<long>(),
                  r.verdicts["total"].get<long>());
  } else {
    std::cout << r.verdicts.dump(2) << "\n";
  }
  for (const auto& n : r.scope_notes) std::cout << "note: " << n << "\n";
  return golie::finish_report(r, opt);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"invariant-metric toolkit: curvature, geodesic orbit tests and distribution "
               "integrability on homogeneous spaces"};
  app.require_subcommand(1);

  CliState st;

  std::string file_arg, metric_arg, id_arg;
  std::vector<std::string> param_args;

  auto* validate = app.add_subcommand("validate", "structural checks on an input JSON file");
  validate->add_option("file", file_arg, "algebra/metric/pair/spec JSON")->required();
  add_common(validate, st);

  auto* curvature =
      app.add_subcommand("curvature", "Ricci spectrum, sectional range, nabla R, Einstein fit");
  curvature->add_option("algebra", file_arg, "algebra JSON")->required();
  curvature->add_option("metric", metric_arg, "metric JSON (default: identity)");
  add_common(curvature, st);

  auto* gotest = app.add_subcommand("go-test", "sampled geodesic orbit test on a pair");
  gotest->add_option("pair", file_arg, "pair JSON")->required();
  gotest->add_option("metric", metric_arg, "metric on the complement (default: identity)");
  add_common(gotest, st);

  auto* dist = app.add_subcommand("distribution-check",
                                  "strong-subalgebra / integrable-distributions verdict");
  dist->add_option("pair", file_arg, "pair JSON")->required();
  dist->add_option("metric", metric_arg, "metric on the complement (default: identity)");
  add_common(dist, st);

  auto* catalog = app.add_subcommand("catalog", "build a named example and verify its "
                                                "expected properties");
  catalog->add_option("id", id_arg, "catalog identifier (see `catalog list`)")->required();
  catalog->add_option("--params", param_args, "name=value pairs")->delimiter(',');
  catalog->add_option("--emit", st.emit_str, "write the JSON files for this entry to a directory");
  add_common(catalog, st);

  auto* repro = app.add_subcommand("reproduce", "run the reproduction scenarios (PASS/FAIL table)");
  repro->add_option("id", id_arg, "scenario id, substring, or \"all\"")->required();
  add_common(repro, st);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;  // invalid invocation
  }

  resolve(st);
  std::optional<std::filesystem::path> metric_path;
  if (!metric_arg.empty()) metric_path = metric_arg;

  RunReport r;
  if (app.got_subcommand(validate)) {
    r = golie::cmd_validate(file_arg, st.opt);
  } else if (app.got_subcommand(curvature)) {
    r = golie::cmd_curvature(file_arg, metric_path, st.opt);
  } else if (app.got_subcommand(gotest)) {
    r = golie::cmd_go_test(file_arg, metric_path, st.opt);
  } else if (app.got_subcommand(dist)) {
    r = golie::cmd_distribution_check(file_arg, metric_path, st.opt);
  } else if (app.got_subcommand(catalog)) {
    if (id_arg == "list") {
      for (const auto& id : golie::catalog_ids()) std::cout << id << "\n";
      return 0;
    }
    std::map<std::string, std::string> params;
    for (const auto& kv : param_args) {
      auto pos = kv.find('=');
      if (pos == std::string::npos) {
        std::cerr << "bad --params entry (expected name=value): " << kv << "\n";
        return 2;
      }
      params[kv.substr(0, pos)] = kv.substr(pos + 1);
    }
    r = golie::cmd_catalog(id_arg, params, st.opt);
  } else {
    r = golie::cmd_reproduce(id_arg, st.opt);
  }
  return print_and_finish(r, st.opt);
}

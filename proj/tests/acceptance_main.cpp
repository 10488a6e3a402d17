// Runs every reproduction scenario and prints one PASS/FAIL line each, with
// the sub-check lines indented under it. Exit code is the failure count, so
// the test harness treats any red line as a failing test.
#include <cstdio>
#include <exception>

#include "golie/scenarios.hpp"

int main() {
  using namespace golie;
  ScenarioOptions opt;  // samples/seed fixed here so the run is reproducible
  opt.samples = 200;
  opt.seed = 1;
  const auto ids = scenario_ids();
  int failed = 0;
  for (const auto& id : ids) {
    ScenarioResult r;
    try {
      r = run_scenario(id, opt);
    } catch (const std::exception& e) {
      r.id = id;
      r.pass = false;
      r.details.push_back(std::string("FAIL: scenario aborted: ") + e.what());
    }
    std::printf("[%s] %s\n", r.pass ? "PASS" : "FAIL", r.id.c_str());
    for (const auto& d : r.details) std::printf("    %s\n", d.c_str());
    if (!r.pass) ++failed;
  }
  std::printf("%d/%d scenarios passed\n", static_cast<int>(ids.size()) - failed,
              static_cast<int>(ids.size()));
  return failed;
}

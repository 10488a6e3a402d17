#ifndef GOLIE_SCENARIOS_HPP
#define GOLIE_SCENARIOS_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace golie {

/// One reproduction scenario: a named end-to-end check with sub-check lines.
/// The same registry backs the `reproduce` command and the acceptance binary.
struct ScenarioResult {
  std::string id;
  bool pass = false;
  std::vector<std::string> details;  // "ok: ..." / "FAIL: ..." sub-lines
};

struct ScenarioOptions {
  long samples = 200;
  std::uint64_t seed = 1;
};

std::vector<std::string> scenario_ids();

/// Runs one scenario by exact id. Unknown ids throw ValidationError.
ScenarioResult run_scenario(const std::string& id, const ScenarioOptions& opt);

/// Resolves a user-supplied name: exact id, unique substring, or "all".
std::vector<std::string> resolve_scenarios(const std::string& name);

}  // namespace golie

#endif

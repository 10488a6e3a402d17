#ifndef GOLIE_COMMANDS_HPP
#define GOLIE_COMMANDS_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "golie/report.hpp"

namespace golie {

/// Options shared by every command. The scalar mode defaults to the input
/// file's "mode" field; an explicitly supplied value wins over the file.
struct CmdOptions {
  std::optional<Mode> mode;
  double eps = 1e-9;
  long samples = 200;
  std::uint64_t seed = 1;
  std::optional<std::filesystem::path> report_path;
  std::optional<std::filesystem::path> emit_dir;
};

/// Exit codes: 0 checks pass, 1 a check failed or a counterexample was
/// found, 2 the input was invalid. Commands never throw; failures land in
/// verdicts["error"] with the matching exit code.
RunReport cmd_validate(const std::filesystem::path& path, const CmdOptions& opt);

RunReport cmd_curvature(const std::filesystem::path& algebra_path,
                        const std::optional<std::filesystem::path>& metric_path,
                        const CmdOptions& opt);

RunReport cmd_go_test(const std::filesystem::path& pair_path,
                      const std::optional<std::filesystem::path>& metric_path,
                      const CmdOptions& opt);

RunReport cmd_distribution_check(const std::filesystem::path& pair_path,
                                 const std::optional<std::filesystem::path>& metric_path,
                                 const CmdOptions& opt);

RunReport cmd_catalog(const std::string& id, const std::map<std::string, std::string>& params,
                      const CmdOptions& opt);

RunReport cmd_reproduce(const std::string& name, const CmdOptions& opt);

/// Writes the report file when requested and hands back the exit code.
int finish_report(const RunReport& r, const CmdOptions& opt);

}  // namespace golie

#endif

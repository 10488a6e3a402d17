#ifndef GOLIE_REPORT_HPP
#define GOLIE_REPORT_HPP

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "golie/scalar.hpp"

namespace golie {

inline constexpr const char* kToolVersion = "0.1.0";

/// Insertion-ordered JSON so report bytes depend only on content.
using ojson = nlohmann::ordered_json;

/// Scope disclaimers. Verdict wording is deliberately conservative: a sampled
/// search proves nothing about the directions it did not visit, and "non-GO"
/// always names the group or theorem the statement is relative to.
inline constexpr const char* kScopeGoSampled =
    "GO (sampled): no witness among the sampled directions; this is evidence, not a proof "
    "of the geodesic orbit property";
inline constexpr const char* kScopeNonGoGroup =
    "non-GO w.r.t. G: the witness rules out geodesic orbit metrics for the acting group "
    "presented here, not for the full isometry group";
inline constexpr const char* kScopeNonGoGordon =
    "non-GO via Gordon: a geodesic orbit solvmanifold of nonpositive Ricci curvature is "
    "symmetric, so negative-definite Ricci together with nabla R != 0 excludes the "
    "geodesic orbit property for the full isometry group";
inline constexpr const char* kScopeIdentityComponent =
    "isotropy statements concern the Lie algebra, hence the identity component of the "
    "isotropy group; disconnected isotropy is out of scope";
inline constexpr const char* kScopeProbabilistic =
    "probabilistic: randomized sampling found no violation; not a certificate";

struct RunReport {
  std::string command;
  std::string tool_version = kToolVersion;
  Mode mode = Mode::exact;
  double eps = 1e-9;
  long samples = 0;
  std::uint64_t seed = 0;
  ojson inputs = ojson::object();   // canonical echo of all inputs, digested below
  ojson params = ojson::object();
  ojson verdicts = ojson::object();
  std::vector<std::string> scope_notes;
  ojson timings_ms = ojson::object();
  int exit_code = 0;

  void note(const char* scope) {
    for (const auto& s : scope_notes)
      if (s == scope) return;
    scope_notes.push_back(scope);
  }
};

/// FNV-1a over the bytes, rendered as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

/// Digest of the deterministic report content: everything except timings.
std::string report_digest(const RunReport& r);

/// Full report JSON. Deterministic given (inputs, seed) once timings_ms is
/// ignored; the digest field already excludes timings.
ojson report_to_json(const RunReport& r);

std::string report_to_string(const RunReport& r);

void write_report_file(const RunReport& r, const std::filesystem::path& path);

class Stopwatch {
 public:
  Stopwatch() : t0_(std::chrono::steady_clock::now()) {}
  double ms() const {
    auto dt = std::chrono::steady_clock::now() - t0_;
    return std::chrono::duration<double, std::milli>(dt).count();
  }

 private:
  std::chrono::steady_clock::time_point t0_;
};

}  // namespace golie

#endif

#include "golie/report.hpp"

#include <cstdio>
#include <fstream>

#include "golie/linalg.hpp"

namespace golie {

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

namespace {

ojson report_core(const RunReport& r) {
  ojson j;
  j["command"] = r.command;
  j["tool_version"] = r.tool_version;
  j["mode"] = r.mode == Mode::exact ? "exact" : "approx";
  j["eps"] = r.eps;
  j["samples"] = r.samples;
  j["seed"] = r.seed;
  j["inputs_digest"] = fnv1a_hex(r.inputs.dump());
  j["params"] = r.params;
  j["verdicts"] = r.verdicts;
  j["scope_notes"] = r.scope_notes;
  j["exit_code"] = r.exit_code;
  return j;
}

}  // namespace

std::string report_digest(const RunReport& r) { return fnv1a_hex(report_core(r).dump()); }

ojson report_to_json(const RunReport& r) {
  ojson j = report_core(r);
  j["digest"] = report_digest(r);
  j["timings_ms"] = r.timings_ms;
  return j;
}

std::string report_to_string(const RunReport& r) { return report_to_json(r).dump(2) + "\n"; }

void write_report_file(const RunReport& r, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write report file: " + path.string());
  out << report_to_string(r);
}

}  // namespace golie

#include "golie/io.hpp"

#include <fstream>

namespace golie {

json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open file: " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ValidationError("malformed JSON in " + path.string() + ": " + e.what());
  }
  return j;
}

void write_json_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write file: " + path.string());
  out << j.dump(2) << "\n";
}

Mode mode_of_json(const json& j, Mode dflt) {
  if (!j.is_object() || !j.contains("mode")) return dflt;
  const std::string s = j.at("mode").get<std::string>();
  if (s == "exact") return Mode::exact;
  if (s == "approx") return Mode::approx;
  throw ValidationError("mode must be \"exact\" or \"approx\", got \"" + s + "\"");
}

}  // namespace golie

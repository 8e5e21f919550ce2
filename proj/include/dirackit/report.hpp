#pragma once

// Uniform machine-readable verification report,
//   {command, params, checks: [{name, max_deviation, tolerance, pass}], pass},
// with an optional free-form details object for module-specific payloads.
// Serialization is deterministic: nlohmann::json keeps keys sorted and its
// number printer is round-trip exact, so identical runs give identical bytes.

#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dirackit {

struct Report {
  struct Entry {
    std::string name;
    double max_deviation;
    double tolerance;
    bool pass;
  };

  std::string command;
  nlohmann::json params = nlohmann::json::object();
  std::vector<Entry> checks;
  nlohmann::json details = nlohmann::json::object();

  // non-finite deviations always fail and are clamped so the JSON stays numeric
  void add(std::string name, double deviation, double tolerance) {
    const bool ok = std::isfinite(deviation) && deviation <= tolerance;
    if (!std::isfinite(deviation)) deviation = 1e300;
    checks.push_back({std::move(name), deviation, tolerance, ok});
  }

  bool pass() const {
    for (const Entry& c : checks)
      if (!c.pass) return false;
    return true;
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["command"] = command;
    j["params"] = params;
    j["checks"] = nlohmann::json::array();
    for (const Entry& c : checks)
      j["checks"].push_back({{"name", c.name},
                             {"max_deviation", c.max_deviation},
                             {"tolerance", c.tolerance},
                             {"pass", c.pass}});
    j["pass"] = pass();
    if (!details.empty()) j["details"] = details;
    return j;
  }

  void write(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open report file: " + path.string());
    out << to_json().dump(2) << "\n";
  }
};

}  // namespace dirackit

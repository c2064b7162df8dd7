#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace cayley {

struct CheckResult {
  std::string id;        // stable identifier, e.g. "table4/S4/cohom"
  std::string anchor;    // which table or subsection of the classification
  std::string expected;
  std::string computed;
  bool pass = false;
  double seconds = 0.0;
};

struct Report {
  std::string suite;
  uint64_t seed = 0;
  int samples = 0;
  long height = 0;
  std::string toolchain;
  std::vector<CheckResult> checks;

  bool all_pass() const;
  int failures() const;
  nlohmann::json to_json() const;
  std::string to_markdown() const;
};

std::string toolchain_stamp();

}  // namespace cayley

#include "cayley/report.hpp"

#include <gmp.h>

#include <sstream>

namespace cayley {

bool Report::all_pass() const { return failures() == 0; }

int Report::failures() const {
  int n = 0;
  for (const auto& c : checks) {
    if (!c.pass) ++n;
  }
  return n;
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["suite"] = suite;
  j["seed"] = seed;
  j["samples"] = samples;
  j["height"] = height;
  j["toolchain"] = toolchain;
  j["pass"] = all_pass();
  auto& arr = j["checks"];
  arr = nlohmann::json::array();
  for (const auto& c : checks) {
    arr.push_back({{"id", c.id},
                   {"anchor", c.anchor},
                   {"expected", c.expected},
                   {"computed", c.computed},
                   {"pass", c.pass},
                   {"seconds", c.seconds}});
  }
  return j;
}

std::string Report::to_markdown() const {
  std::ostringstream out;
  out << "## " << suite << "\n\n";
  out << "seed " << seed << ", samples " << samples << ", height " << height << ", " << toolchain << "\n\n";
  out << "| check | anchor | expected | computed | result |\n";
  out << "|---|---|---|---|---|\n";
  for (const auto& c : checks) {
    out << "| " << c.id << " | " << c.anchor << " | " << c.expected << " | " << c.computed << " | "
        << (c.pass ? "pass" : "FAIL") << " |\n";
  }
  out << "\n" << (all_pass() ? "all checks pass" : std::to_string(failures()) + " check(s) failed") << "\n";
  return out.str();
}

std::string toolchain_stamp() {
  std::ostringstream out;
  out << "cayley 1.0 (";
#if defined(__clang__)
  out << "clang " << __clang_major__ << "." << __clang_minor__;
#elif defined(__GNUC__)
  out << "gcc " << __GNUC__ << "." << __GNUC_MINOR__;
#else
  out << "unknown compiler";
#endif
  out << ", gmp " << __GNU_MP_VERSION << "." << __GNU_MP_VERSION_MINOR << ")";
  return out.str();
}

}  // namespace cayley

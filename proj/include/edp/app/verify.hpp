#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace edp {

struct VerifyOptions {
  unsigned n_max = 8;
  unsigned trials = 50;
  std::uint64_t seed = 1;
  // Runs every check against psi~ tables built from a wrong psi~_3.
  bool corrupt_psi3 = false;
};

struct VerifyCheck {
  std::string theorem;
  std::uint64_t passed = 0;
  std::uint64_t total = 0;
  std::string first_failure;

  bool pass() const { return passed == total; }
};

struct VerifyReport {
  VerifyOptions options;
  std::vector<VerifyCheck> checks;
  std::vector<std::string> notes;

  bool pass() const;
  std::string to_text() const;
  nlohmann::json to_json() const;
};

// Deterministic for a given seed. Every theorem appears once in the report.
VerifyReport run_verify(const VerifyOptions& options);

}  // namespace edp

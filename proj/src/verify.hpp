#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wigner {

// One named invariant check. passed is always measured_error <= tolerance;
// parameters records what the check actually ran over.
struct VerificationReport {
  std::string check_name;
  nlohmann::ordered_json parameters;
  double measured_error = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

nlohmann::ordered_json to_json(const VerificationReport& r);

enum class Suite { Algebra, Contraction, Oscillator, Spectral, Moments, All };

std::optional<Suite> suite_from_name(std::string_view name);
const std::vector<std::string>& suite_names();

// Names of the checks a suite would run, in execution order.
std::vector<std::string> check_names(Suite suite);

// Run every check in the suite. quad_tol tunes internal quadrature
// refinement only; each check's pass tolerance is part of its contract.
std::vector<VerificationReport> run_suite(Suite suite, double quad_tol = 1e-9);

// Run a single check by name; throws std::invalid_argument for unknown names.
VerificationReport run_check(std::string_view name, double quad_tol = 1e-9);

}  // namespace wigner

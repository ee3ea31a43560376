#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "lw/layered_wheel.hpp"

namespace lw {

inline constexpr std::string_view kToolVersion = "0.1.0";

enum class CheckStatus : std::uint8_t { pass, fail, falsified, budget_exceeded };
std::string_view to_string(CheckStatus s);

struct CheckRecord {
  std::string name;
  std::string claim;
  CheckStatus status = CheckStatus::pass;
  nlohmann::ordered_json witness = nlohmann::ordered_json::object();
  double ms = 0;
};

struct Report {
  std::string suite;
  LayeredWheelParams params;
  std::uint64_t seed = 0;
  int samples = 0;
  std::uint64_t budget = 0;
  std::vector<CheckRecord> checks;

  /// 0 when every check passed, 1 on any fail or falsification, otherwise 2
  /// when some search ran out of budget.
  int exit_code() const;
  /// Timing fields are left out unless `with_timing`.
  nlohmann::ordered_json to_json(bool with_timing = true) const;
};

struct SuiteOptions {
  LayeredWheelParams params;
  /// construction, series-parallel, paths, separator, theta or all.
  std::string suite = "all";
  std::uint64_t seed = 1;
  int samples = 20;
  std::uint64_t budget = 10'000'000;
};

/// Throws PreconditionError for an unknown suite name.
Report run_suite(const SuiteOptions& options);

/// The default search budget, or the value of LW_BUDGET when it is set to a
/// positive integer.
std::uint64_t budget_from_env(std::uint64_t fallback = 10'000'000);

}  // namespace lw

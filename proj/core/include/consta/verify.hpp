#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

// Exhaustive cross-check of the spectral code paths against the oracle over a
// grid of (q, n, lambda) and all monic divisors of x^n - lambda.

namespace consta {

struct VerifyOptions {
  std::vector<std::uint64_t> q_values{2, 3, 5};
  std::size_t n_max = 10;
  /// Test hook: corrupt one gcd-method generator so the run must fail.
  bool inject_fault = false;

  static constexpr std::size_t kMaxN = 16;
  static constexpr std::uint64_t kMaxQ = 32;
};

struct CheckTally {
  std::size_t checked = 0;
  std::size_t failed = 0;
};

struct VerifyReport {
  std::map<std::string, CheckTally> checks;
  /// Counters that are reported but never count as failures.
  std::map<std::string, std::size_t> info;
  std::size_t fields = 0;
  std::size_t codes_checked = 0;
  std::size_t pairs_checked = 0;
  std::size_t failures = 0;
  std::optional<nlohmann::json> first_counterexample;

  bool ok() const noexcept { return failures == 0; }
  nlohmann::json to_json() const;
};

/// Throws std::invalid_argument for grids outside the size caps or q that is
/// not a prime power.
VerifyReport run_verification(const VerifyOptions& opt);

/// q = p^m -> (p, m); throws std::invalid_argument if q is not a prime power.
std::pair<std::uint64_t, unsigned> split_prime_power(std::uint64_t q);

}  // namespace consta

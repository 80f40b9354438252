#pragma once

#include <cstdint>

namespace linjac {

/// Per-thread counters of primitive operations and Las Vegas retries. Counts are
/// a deterministic function of (inputs, seed), unlike wall time.
struct OpStats {
  std::uint64_t echelon_calls = 0;
  std::uint64_t kernel_calls = 0;
  std::uint64_t mult_matrices = 0;
  std::uint64_t sums_of_products = 0;
  std::uint64_t divisions = 0;
  std::uint64_t deflations = 0;
  std::uint64_t deflation_attempts = 0;
  std::uint64_t membership_tests = 0;
  std::uint64_t membership_attempts = 0;
  std::uint64_t igs_v_attempts = 0;

  friend bool operator==(const OpStats&, const OpStats&) = default;
};

OpStats& stats() noexcept;
/// Returns the current counters and zeroes them.
OpStats take_stats() noexcept;

}  // namespace linjac

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linjac/cantor.hpp"
#include "linjac/stats.hpp"

namespace linjac {

/// One line of a verification report.
struct CaseResult {
  std::string suite;
  std::string name;
  bool pass = false;
  std::string details;
  std::uint64_t seed = 0;
};

std::string to_json_line(const CaseResult& r);

/// Suites: fixture, axioms, oracle, igs-stats, membership, roundtrip, dual.
const std::vector<std::string>& suite_names();

/// Runs one suite. Failures are reported, not thrown (except for bad suite names).
std::vector<CaseResult> run_suite(const CurveBundle& bundle, const std::string& suite, int trials,
                                  std::uint64_t seed);

/// W_D for D = P_1 + ... + P_k + (m - k) P_inf with distinct affine points that
/// are pairwise not opposite; m = d or 2d. Works in every characteristic.
JacobianPoint points_to_point(const CurveBundle& bundle, const LargeModel& model,
                              const std::vector<RepB0::Point>& pts, PointSize size);

/// A random class: the Cantor bridge when available, otherwise sums of
/// rational points.
JacobianPoint random_point(const CurveBundle& bundle, const LargeModel& model, PointSize size, Rng& rng);

struct IgsStats {
  int trials = 0;
  int successes = 0;
  std::uint64_t deflations = 0;
  std::uint64_t deflation_attempts = 0;
  double success_fraction() const { return trials ? double(successes) / trials : 0.0; }
  double mean_attempts() const { return deflations ? double(deflation_attempts) / double(deflations) : 0.0; }
};

/// Random divisors of degree d from flips of W_2D0, one unverified candidate and
/// one full deflation each.
IgsStats igs_statistics(const CurveBundle& bundle, int trials, std::uint64_t seed);

enum class ScaleOp { AddflipLarge, AddflipSmall, Equal, Flip };
ScaleOp scale_op_from_string(const std::string& s);
std::string to_string(ScaleOp op);

struct ScaleRow {
  int genus = 0;
  ScaleOp op = ScaleOp::AddflipLarge;
  double median_ns = 0;
  int trials = 0;
  OpStats counts;
};

/// Times one operation per genus on generated RepA curves; setup is excluded.
std::vector<ScaleRow> run_scale(const std::vector<int>& genus_list, std::uint64_t p, ScaleOp op, int trials,
                                std::uint64_t seed);

/// Least-squares slope of log y against log x; empty with fewer than two distinct x.
std::optional<double> loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

std::string scale_csv(const std::vector<ScaleRow>& rows);

}  // namespace linjac

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "linjac/divisor.hpp"

namespace linjac {

/// Generator-supplied data for the large model with D_0 of degree d and
/// L = O(3 D_0). All vectors are in the coordinates of the representation.
struct LargePrecomp {
  int d = 0;
  Subspace w_d0;
  Subspace w_2d0;
  Vec s0;
};

struct LargeModel {
  CurveRep rep;
  int d = 0;
  DivisorFull w_d0;
  DivisorFull w_2d0;
  Vec s0;
  DivisorBrief defl_d0;
  DivisorBrief defl_2d0;
  /// Only needed for inflation and the membership test.
  std::optional<IgsV> defl_v;
};

/// Checks the precomputed data and deflates W_D0 and W_2D0.
/// Throws InconsistentPrecomp when the data does not fit the curve.
LargeModel make_large_model(const CurveRep& rep, const LargePrecomp& pre, std::optional<IgsV> defl_v, Rng& rng);

enum class PointSize { Small, Large };
std::string to_string(PointSize size);

/// x_D for D of degree d (small, class of D - D_0) or 2d (large, class of D - 2 D_0).
struct JacobianPoint {
  PointSize size = PointSize::Small;
  Subspace space;
};

JacobianPoint zero_point(const LargeModel& model, PointSize size);

/// Whether the two points are the same class. Throws TagMismatch.
bool equal_class(const LargeModel& model, const JacobianPoint& x, const JacobianPoint& y, Rng& rng);
/// Same with a fixed internal stream; the answer does not depend on the draws.
bool equal_class(const LargeModel& model, const JacobianPoint& x, const JacobianPoint& y);

/// -(x + y) for small points.
JacobianPoint addflip_small(const LargeModel& model, const JacobianPoint& x, const JacobianPoint& y, Rng& rng);
/// -(x + y) for large points.
JacobianPoint addflip_large(const LargeModel& model, const JacobianPoint& x, const JacobianPoint& y, Rng& rng);
/// Dispatches on the common size; throws TagMismatch.
JacobianPoint addflip(const LargeModel& model, const JacobianPoint& x, const JacobianPoint& y, Rng& rng);

JacobianPoint negate(const LargeModel& model, const JacobianPoint& x, Rng& rng);
JacobianPoint add(const LargeModel& model, const JacobianPoint& x, const JacobianPoint& y, Rng& rng);
JacobianPoint scalar_mul(const LargeModel& model, std::int64_t n, const JacobianPoint& x, Rng& rng);

/// Same class, other size.
JacobianPoint to_large(const LargeModel& model, const JacobianPoint& x, Rng& rng);
JacobianPoint to_small(const LargeModel& model, const JacobianPoint& x, Rng& rng);

}  // namespace linjac

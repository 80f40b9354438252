#pragma once

#include "linjac/curve_gen.hpp"

namespace linjac {

/// Reduced divisor div(u, y - v) - deg(u) P_inf with u monic, deg v < deg u and
/// u | v^2 - f. The neutral element is (1, 0).
struct MumfordDivisor {
  Poly u = Poly::constant(1);
  Poly v;
  friend bool operator==(const MumfordDivisor&, const MumfordDivisor&) = default;
};

/// Cantor arithmetic needs y^2 = f(x) over an odd prime field; throws
/// BadCharacteristic otherwise.
void check_cantor_curve(const HyperellipticCurve& c);

bool is_valid_mumford(const HyperellipticCurve& c, const MumfordDivisor& m);

MumfordDivisor cantor_add(const HyperellipticCurve& c, const MumfordDivisor& a, const MumfordDivisor& b);
MumfordDivisor cantor_negate(const HyperellipticCurve& c, const MumfordDivisor& a);
MumfordDivisor cantor_scalar_mul(const HyperellipticCurve& c, std::int64_t n, const MumfordDivisor& a);

/// Sum of g+1 random affine rational points with random signs. Not uniform
/// on the Jacobian.
MumfordDivisor random_mumford(const HyperellipticCurve& c, Rng& rng);

/// W_D for D = div(u, y - v) + (k - deg u) P_inf with k = d (small) or 2d
/// (large), in the coordinates of the requested representation.
/// Throws CurveMismatch when the model was built on another curve.
JacobianPoint mumford_to_point(const CurveBundle& bundle, const LargeModel& model, const MumfordDivisor& m,
                               PointSize size);

/// Whether the engine output is in the class of the Cantor result.
bool oracle_compare(const CurveBundle& bundle, const LargeModel& model, const JacobianPoint& engine,
                    const MumfordDivisor& expected, Rng& rng);

}  // namespace linjac

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "linjac/jacobian.hpp"
#include "linjac/poly.hpp"

namespace linjac {

/// y^2 + h(x) y = f(x) with f monic of degree 2g+1 and deg h <= g, so there is a
/// single point P_inf at infinity. h = 0 in odd characteristic.
struct HyperellipticCurve {
  u64 p = 0;
  int genus = 0;
  Poly f;
  Poly h;
};

/// x^i y^j with j in {0, 1}.
struct Monomial {
  int x = 0;
  int y = 0;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Pole order at P_inf: x has 2, y has 2g+1.
int pole_order(const Monomial& m, int genus);
/// Monomials with pole order <= bound, by increasing pole order.
std::vector<Monomial> monomial_basis(int genus, int bound);

bool is_smooth(const PrimeField& field, const HyperellipticCurve& c);

struct CurveBundle {
  HyperellipticCurve curve;
  int Delta = 0;
  PrimeField field;
  RepA rep_a;
  std::vector<Monomial> basis_v;
  std::vector<Monomial> basis_vp;
  std::optional<CubicData> cubic;
  std::optional<RepB0> rep_b0;
  /// In RepA coordinates.
  std::optional<LargePrecomp> precomp;
  /// Representation requested at generation time.
  RepTag preferred = RepTag::A;
};

struct GenOptions {
  bool with_cubic = true;
  /// Explicit curve coefficients (low degree first); random when empty.
  std::optional<Poly> f;
  std::optional<Poly> h;
  /// Random draws per attempt before giving up with SingularCurve.
  int max_attempts = 64;
};

/// Curve with Delta = 3d, d = max(2g, 2), plus the large-model spaces for D_0 = d P_inf.
/// Throws SingularCurve, BadCharacteristic.
CurveBundle gen_hyperelliptic(int genus, u64 p, Rng& rng, const GenOptions& options = {});

/// y^2 = x^3 + 1 with V = <1, x, y, x^2> and V' = <1, x, y, x^2, xy, x^3, x^2 y, x^4>.
CurveBundle gen_paper_fixture(u64 p = 1009);

/// All affine rational points, by increasing x then y.
std::vector<RepB0::Point> affine_points(const PrimeField& field, const HyperellipticCurve& c);

/// Adds a RepB0 on 2*Delta+1 affine points sampled without replacement.
/// Throws InsufficientRationalPoints.
void gen_rep_b0(CurveBundle& bundle, Rng& rng);

/// Values of the V basis at a point.
Vec evaluate_basis(const PrimeField& field, const std::vector<Monomial>& basis, u64 x, u64 y);

CurveRep bundle_rep(const CurveBundle& bundle, RepTag tag);
/// RepA coordinates to values at the RepB0 points (multiplication by A_V).
Vec a_to_b0(const CurveBundle& bundle, std::span<const u64> v);
Subspace a_to_b0(const CurveBundle& bundle, const Subspace& w);
/// Inverse of a_to_b0 on V.
Subspace b0_to_a(const CurveBundle& bundle, const Subspace& w);

/// Large-model data in the coordinates of the given representation.
LargePrecomp bundle_precomp(const CurveBundle& bundle, RepTag tag);
/// Builds the large model; with_defl_v runs igs_for_v on the cubic tables.
LargeModel bundle_model(const CurveBundle& bundle, RepTag tag, bool with_defl_v, Rng& rng);

void save_bundle(const CurveBundle& bundle, const std::string& path);
std::string bundle_to_json(const CurveBundle& bundle);
/// Throws MalformedFile, VersionMismatch.
CurveBundle load_bundle(const std::string& path);
CurveBundle bundle_from_json(const std::string& text);

}  // namespace linjac

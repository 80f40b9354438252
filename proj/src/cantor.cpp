#include "linjac/cantor.hpp"

#include "linjac/error.hpp"

namespace linjac {

void check_cantor_curve(const HyperellipticCurve& c) {
  if (c.p == 2 || !c.h.is_zero()) {
    throw Error(Errc::BadCharacteristic, "Cantor arithmetic is implemented for y^2 = f(x) with p odd");
  }
}

bool is_valid_mumford(const HyperellipticCurve& c, const MumfordDivisor& m) {
  const PrimeField field(c.p);
  if (!m.u.is_monic() || m.u.degree() > c.genus || m.v.degree() >= m.u.degree()) return false;
  const Poly t = poly_sub(field, poly_mul(field, m.v, m.v), c.f);
  return poly_mod(field, t, m.u).is_zero();
}

namespace {

MumfordDivisor reduce(const PrimeField& field, const HyperellipticCurve& c, Poly u, Poly v) {
  v = poly_mod(field, v, u);
  while (u.degree() > c.genus) {
    const Poly up = poly_div(field, poly_sub(field, c.f, poly_mul(field, v, v)), u);
    u = poly_monic(field, up);
    v = poly_mod(field, poly_neg(field, v), u);
  }
  return {poly_monic(field, u), poly_mod(field, v, u)};
}

}  // namespace

MumfordDivisor cantor_add(const HyperellipticCurve& c, const MumfordDivisor& a, const MumfordDivisor& b) {
  check_cantor_curve(c);
  const PrimeField field(c.p);
  const auto [d1, e1, e2] = poly_xgcd(field, a.u, b.u);
  const auto [d, c1, c2] = poly_xgcd(field, d1, poly_add(field, a.v, b.v));
  const Poly s1 = poly_mul(field, c1, e1);
  const Poly s2 = poly_mul(field, c1, e2);
  const Poly& s3 = c2;
  const Poly u = poly_div(field, poly_mul(field, a.u, b.u), poly_mul(field, d, d));
  Poly num = poly_mul(field, poly_mul(field, s1, a.u), b.v);
  num = poly_add(field, num, poly_mul(field, poly_mul(field, s2, b.u), a.v));
  num = poly_add(field, num, poly_mul(field, s3, poly_add(field, poly_mul(field, a.v, b.v), c.f)));
  const Poly v = poly_div(field, num, d);
  return reduce(field, c, u, v);
}

MumfordDivisor cantor_negate(const HyperellipticCurve& c, const MumfordDivisor& a) {
  check_cantor_curve(c);
  const PrimeField field(c.p);
  return {a.u, poly_mod(field, poly_neg(field, a.v), a.u)};
}

MumfordDivisor cantor_scalar_mul(const HyperellipticCurve& c, std::int64_t n, const MumfordDivisor& a) {
  MumfordDivisor base = n < 0 ? cantor_negate(c, a) : a;
  std::uint64_t k = n < 0 ? std::uint64_t(0) - static_cast<std::uint64_t>(n) : static_cast<std::uint64_t>(n);
  MumfordDivisor acc;
  while (k != 0) {
    if (k & 1) acc = cantor_add(c, acc, base);
    k >>= 1;
    if (k != 0) base = cantor_add(c, base, base);
  }
  return acc;
}

MumfordDivisor random_mumford(const HyperellipticCurve& c, Rng& rng) {
  check_cantor_curve(c);
  const PrimeField field(c.p);
  MumfordDivisor acc;
  for (int i = 0; i <= c.genus; ++i) {
    u64 x = 0, fx = 0;
    do {
      x = field.sample(rng);
      fx = poly_eval(field, c.f, x);
    } while (fx != 0 && !field.is_square(fx));
    u64 y = field.sqrt(fx);
    if (rng.below(2)) y = field.neg(y);
    acc = cantor_add(c, acc, MumfordDivisor{Poly::linear_root(field, x), Poly::constant(y)});
  }
  return acc;
}

JacobianPoint mumford_to_point(const CurveBundle& bundle, const LargeModel& model, const MumfordDivisor& m,
                               PointSize size) {
  const auto& c = bundle.curve;
  check_cantor_curve(c);
  if (!bundle.precomp || model.d != bundle.precomp->d || model.rep.genus() != c.genus ||
      model.rep.field().modulus() != c.p || model.rep.degree() != bundle.Delta) {
    throw Error(Errc::CurveMismatch, "model and bundle describe different curves");
  }
  const PrimeField& field = bundle.field;
  if (!is_valid_mumford(c, m)) throw Error(Errc::InvalidArgument, "not a reduced Mumford divisor");
  const int k = size == PointSize::Small ? model.d : 2 * model.d;
  const int pad = k - m.u.degree();
  if (pad < 0) throw Error(Errc::InvalidArgument, "deg u exceeds the divisor degree");

  const auto& basis = bundle.basis_v;
  const std::size_t delta = basis.size();
  const std::size_t du = static_cast<std::size_t>(m.u.degree());
  Matrix cond(du, delta);
  std::vector<std::size_t> at_infinity;
  for (std::size_t col = 0; col < delta; ++col) {
    const Monomial mono = basis[col];
    if (pole_order(mono, c.genus) > bundle.Delta - pad) at_infinity.push_back(col);
    // x^a v(x)^b mod u
    Poly t = Poly::monomial(1, static_cast<std::size_t>(mono.x));
    if (mono.y) t = poly_mul(field, t, m.v);
    t = poly_mod(field, t, m.u);
    for (std::size_t r = 0; r < du; ++r) cond(r, col) = t[r];
  }
  Vec e(delta, 0);
  for (std::size_t col : at_infinity) {
    e[col] = 1;
    cond.append_row(e);
    e[col] = 0;
  }
  Subspace w = kernel_basis(field, cond);
  if (model.rep.tag() == RepTag::B0) w = a_to_b0(bundle, w);
  return {size, std::move(w)};
}

bool oracle_compare(const CurveBundle& bundle, const LargeModel& model, const JacobianPoint& engine,
                    const MumfordDivisor& expected, Rng& rng) {
  const JacobianPoint want = mumford_to_point(bundle, model, expected, engine.size);
  return equal_class(model, engine, want, rng);
}

}  // namespace linjac

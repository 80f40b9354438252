#include "linjac/jacobian.hpp"

#include <cassert>

#include "linjac/error.hpp"

namespace linjac {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(Errc::InconsistentPrecomp, what);
}

std::size_t expected_codim(const LargeModel& m, PointSize size) {
  return static_cast<std::size_t>(size == PointSize::Small ? m.d : 2 * m.d);
}

void check_point(const LargeModel& m, const JacobianPoint& x) {
  if (x.space.ambient_dim() != m.rep.n()) throw Error(Errc::DimensionMismatch, "point does not live on this curve");
  if (m.rep.codim_in_v(x.space) != expected_codim(m, x.size)) {
    throw Error(Errc::DimensionMismatch, to_string(x.size) + " point has codim " +
                                             std::to_string(m.rep.codim_in_v(x.space)));
  }
}

void check_same(const JacobianPoint& x, const JacobianPoint& y) {
  if (x.size != y.size) throw Error(Errc::TagMismatch, "cannot mix small and large points");
}

DivisorFull as_divisor(const LargeModel& m, const JacobianPoint& x) { return make_divisor(m.rep, x.space); }

JacobianPoint point(PointSize size, DivisorFull d) { return {size, std::move(d.space)}; }

bool is_zero_small(const LargeModel& m, const JacobianPoint& x) { return x.space == m.w_d0.space; }
bool is_zero_large(const LargeModel& m, const JacobianPoint& x) { return x.space == m.w_2d0.space; }

// W_{D0 + E} = (s0 W_E) / defl(W_2D0), flipped back to a small divisor.
JacobianPoint negate_small_shortcut(const LargeModel& m, const JacobianPoint& e, Rng& rng) {
  const Subspace se = simple_mul(m.rep, m.s0, e.space);
  DivisorFull sum = make_divisor(m.rep, divide(m.rep, se, m.defl_2d0.sections));
  assert(sum.degree == 2 * static_cast<std::size_t>(m.d));
  return point(PointSize::Small, flip(m.rep, sum, std::nullopt, rng));
}

}  // namespace

std::string to_string(PointSize size) { return size == PointSize::Small ? "small" : "large"; }

LargeModel make_large_model(const CurveRep& rep, const LargePrecomp& pre, std::optional<IgsV> defl_v, Rng& rng) {
  const int g = rep.genus();
  require(pre.d >= 2, "d must be at least 2");
  require(rep.degree() == 3 * pre.d, "Delta must equal 3d");
  require(rep.degree() >= 2 * g + 2, "Delta must be at least 2g+2");
  require(pre.w_d0.ambient_dim() == rep.n() && pre.w_2d0.ambient_dim() == rep.n() && pre.s0.size() == rep.n(),
          "precomputed data has the wrong ambient dimension");
  require(rep.space_v().contains(rep.field(), pre.w_d0) && rep.space_v().contains(rep.field(), pre.w_2d0),
          "W_D0 and W_2D0 must lie in V");
  require(rep.codim_in_v(pre.w_d0) == static_cast<std::size_t>(pre.d), "W_D0 must have codimension d");
  require(rep.codim_in_v(pre.w_2d0) == static_cast<std::size_t>(2 * pre.d), "W_2D0 must have codimension 2d");
  require(!is_zero_vector(pre.s0), "s0 must be nonzero");
  require(pre.w_d0.contains(rep.field(), pre.s0), "s0 must lie in W_D0");
  require(pre.w_2d0.contains(rep.field(), pre.s0), "s0 must lie in W_2D0");
  require(pre.w_d0.contains(rep.field(), pre.w_2d0), "W_2D0 must lie in W_D0");
  if (defl_v) {
    require(defl_v->sections.size() >= 1, "empty IGS for V");
    for (const auto& s : defl_v->sections) require(s.size() == rep.n(), "IGS for V has the wrong length");
  }

  LargeModel m{rep, pre.d, make_divisor(rep, pre.w_d0), make_divisor(rep, pre.w_2d0), pre.s0, {}, {}, std::move(defl_v)};
  m.defl_d0 = deflate(rep, m.w_d0, rng);
  m.defl_2d0 = deflate(rep, m.w_2d0, rng);
  // (s0) = 3 D_0, so s0 V lies in W'_{2D_0}; the s0 flip of W_2D0 must give back W_D0.
  require(flip_with(rep, m.s0, m.defl_2d0).space == m.w_d0.space, "s0 does not vanish exactly on 3 D_0");
  return m;
}

JacobianPoint zero_point(const LargeModel& model, PointSize size) {
  return {size, size == PointSize::Small ? model.w_d0.space : model.w_2d0.space};
}

bool equal_class(const LargeModel& model, const JacobianPoint& x, const JacobianPoint& y, Rng& rng) {
  check_same(x, y);
  check_point(model, x);
  check_point(model, y);
  if (x.space == y.space) return true;
  const DivisorFull d = as_divisor(model, x);
  const DivisorBrief defl = deflate(model.rep, d, rng);
  const Subspace sw = simple_mul(model.rep, d.space.vector(0), y.space);
  return !divide(model.rep, sw, defl.sections).is_zero();
}

bool equal_class(const LargeModel& model, const JacobianPoint& x, const JacobianPoint& y) {
  Rng rng(0x5eed);
  return equal_class(model, x, y, rng);
}

JacobianPoint addflip_small(const LargeModel& model, const JacobianPoint& x, const JacobianPoint& y, Rng& rng) {
  if (x.size != PointSize::Small || y.size != PointSize::Small) {
    throw Error(Errc::TagMismatch, "addflip_small needs small points");
  }
  check_point(model, x);
  check_point(model, y);
  if (is_zero_small(model, x)) return negate_small_shortcut(model, y, rng);
  if (is_zero_small(model, y)) return negate_small_shortcut(model, x, rng);

  const auto& rep = model.rep;
  const DivisorFull d = as_divisor(model, x);
  const Vec s = d.space.vector_copy(0);
  const DivisorFull d_tilde = flip_with(rep, s, deflate(rep, d, rng));
  assert(d_tilde.degree == 2 * static_cast<std::size_t>(model.d));
  const DivisorBrief defl_tilde = deflate(rep, d_tilde, rng);
  const DivisorFull sum = make_divisor(rep, divide(rep, simple_mul(rep, s, y.space), defl_tilde.sections));
  assert(sum.degree == 2 * static_cast<std::size_t>(model.d));
  return point(PointSize::Small, flip(rep, sum, std::nullopt, rng));
}

JacobianPoint addflip_large(const LargeModel& model, const JacobianPoint& x, const JacobianPoint& y, Rng& rng) {
  if (x.size != PointSize::Large || y.size != PointSize::Large) {
    throw Error(Errc::TagMismatch, "addflip_large needs large points");
  }
  check_point(model, x);
  check_point(model, y);
  const auto& rep = model.rep;

  // With E = 2 D_0 take s = s0, whose deflation partner is already stored.
  const bool y_zero = is_zero_large(model, y);
  const JacobianPoint& dd = y_zero ? x : (is_zero_large(model, x) ? y : x);
  const JacobianPoint& ee = y_zero ? y : (is_zero_large(model, x) ? x : y);
  const bool e_zero = is_zero_large(model, ee);

  const DivisorFull d_tilde = is_zero_large(model, dd) ? model.w_d0 : flip(rep, as_divisor(model, dd), std::nullopt, rng);
  assert(d_tilde.degree == static_cast<std::size_t>(model.d));
  const Vec s = e_zero ? model.s0 : ee.space.vector_copy(0);
  const DivisorBrief defl_e = e_zero ? model.defl_2d0 : deflate(rep, as_divisor(model, ee), rng);
  const DivisorFull f = make_divisor(rep, divide(rep, simple_mul(rep, s, d_tilde.space), defl_e.sections));
  assert(f.degree == 2 * static_cast<std::size_t>(model.d));
  return point(PointSize::Large, f);
}

JacobianPoint addflip(const LargeModel& model, const JacobianPoint& x, const JacobianPoint& y, Rng& rng) {
  check_same(x, y);
  return x.size == PointSize::Small ? addflip_small(model, x, y, rng) : addflip_large(model, x, y, rng);
}

JacobianPoint negate(const LargeModel& model, const JacobianPoint& x, Rng& rng) {
  return addflip(model, zero_point(model, x.size), x, rng);
}

JacobianPoint add(const LargeModel& model, const JacobianPoint& x, const JacobianPoint& y, Rng& rng) {
  return negate(model, addflip(model, x, y, rng), rng);
}

JacobianPoint scalar_mul(const LargeModel& model, std::int64_t n, const JacobianPoint& x, Rng& rng) {
  JacobianPoint base = n < 0 ? negate(model, x, rng) : x;
  // Magnitude without overflowing on INT64_MIN.
  std::uint64_t k = n < 0 ? std::uint64_t(0) - static_cast<std::uint64_t>(n) : static_cast<std::uint64_t>(n);
  JacobianPoint acc = zero_point(model, x.size);
  bool acc_zero = true;
  while (k != 0) {
    if (k & 1) {
      acc = acc_zero ? base : add(model, acc, base, rng);
      acc_zero = false;
    }
    k >>= 1;
    if (k != 0) base = add(model, base, base, rng);
  }
  return acc;
}

JacobianPoint to_large(const LargeModel& model, const JacobianPoint& x, Rng& rng) {
  if (x.size == PointSize::Large) return x;
  check_point(model, x);
  // The flip of a small divisor is large and represents -x.
  JacobianPoint minus{PointSize::Large, flip(model.rep, as_divisor(model, x), std::nullopt, rng).space};
  return negate(model, minus, rng);
}

JacobianPoint to_small(const LargeModel& model, const JacobianPoint& x, Rng& rng) {
  if (x.size == PointSize::Small) return x;
  check_point(model, x);
  JacobianPoint minus{PointSize::Small, flip(model.rep, as_divisor(model, x), std::nullopt, rng).space};
  return negate(model, minus, rng);
}

}  // namespace linjac

#include "linjac/poly.hpp"

#include <algorithm>

#include "linjac/error.hpp"

namespace linjac {

Poly Poly::monomial(u64 c, std::size_t deg) {
  std::vector<u64> v(deg + 1, 0);
  v[deg] = c;
  return Poly(std::move(v));
}

Poly Poly::linear_root(const PrimeField& field, u64 a) {
  return Poly(std::vector<u64>{field.neg(field.reduce(a)), 1});
}

Poly poly_add(const PrimeField& field, const Poly& a, const Poly& b) {
  const std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
  std::vector<u64> r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = field.add(a[i], b[i]);
  return Poly(std::move(r));
}

Poly poly_sub(const PrimeField& field, const Poly& a, const Poly& b) {
  const std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
  std::vector<u64> r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = field.sub(a[i], b[i]);
  return Poly(std::move(r));
}

Poly poly_neg(const PrimeField& field, const Poly& a) {
  std::vector<u64> r(a.coeffs());
  for (auto& x : r) x = field.neg(x);
  return Poly(std::move(r));
}

Poly poly_scale(const PrimeField& field, const Poly& a, u64 c) {
  std::vector<u64> r(a.coeffs());
  for (auto& x : r) x = field.mul(x, c);
  return Poly(std::move(r));
}

Poly poly_mul(const PrimeField& field, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<u64> r(x.size() + y.size() - 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) r[i + j] = field.add(r[i + j], field.mul(x[i], y[j]));
  }
  return Poly(std::move(r));
}

std::pair<Poly, Poly> poly_divmod(const PrimeField& field, const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly{}, a};
  std::vector<u64> rem(a.coeffs());
  const int db = b.degree();
  std::vector<u64> q(static_cast<std::size_t>(a.degree() - db + 1), 0);
  const u64 lead_inv = field.inv(b.lead());
  for (int i = a.degree(); i >= db; --i) {
    const u64 c = field.mul(rem[static_cast<std::size_t>(i)], lead_inv);
    q[static_cast<std::size_t>(i - db)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) {
      auto& slot = rem[static_cast<std::size_t>(i - db + j)];
      slot = field.sub(slot, field.mul(c, b[static_cast<std::size_t>(j)]));
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly(std::move(q)), Poly(std::move(rem))};
}

Poly poly_div(const PrimeField& field, const Poly& a, const Poly& b) { return poly_divmod(field, a, b).first; }
Poly poly_mod(const PrimeField& field, const Poly& a, const Poly& b) { return poly_divmod(field, a, b).second; }

Poly poly_monic(const PrimeField& field, const Poly& a) {
  if (a.is_zero() || a.is_monic()) return a;
  return poly_scale(field, a, field.inv(a.lead()));
}

Poly poly_derivative(const PrimeField& field, const Poly& a) {
  if (a.degree() < 1) return {};
  std::vector<u64> r(a.coeffs().size() - 1);
  for (std::size_t i = 1; i < a.coeffs().size(); ++i) r[i - 1] = field.mul(a[i], field.reduce(i));
  return Poly(std::move(r));
}

u64 poly_eval(const PrimeField& field, const Poly& a, u64 x) {
  u64 acc = 0;
  for (auto it = a.coeffs().rbegin(); it != a.coeffs().rend(); ++it) acc = field.add(field.mul(acc, x), *it);
  return acc;
}

Poly poly_gcd(const PrimeField& field, Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = poly_mod(field, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(field, a);
}

XgcdResult poly_xgcd(const PrimeField& field, const Poly& a, const Poly& b) {
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(1), s1;
  Poly t0, t1 = Poly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = poly_divmod(field, r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = poly_sub(field, s0, poly_mul(field, q, s1));
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly t2 = poly_sub(field, t0, poly_mul(field, q, t1));
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {Poly{}, Poly{}, Poly{}};
  const u64 li = field.inv(r0.lead());
  return {poly_scale(field, r0, li), poly_scale(field, s0, li), poly_scale(field, t0, li)};
}

Poly random_monic(const PrimeField& field, int degree, Rng& rng) {
  std::vector<u64> c(static_cast<std::size_t>(degree) + 1);
  for (int i = 0; i < degree; ++i) c[static_cast<std::size_t>(i)] = field.sample(rng);
  c[static_cast<std::size_t>(degree)] = 1;
  return Poly(std::move(c));
}

}  // namespace linjac

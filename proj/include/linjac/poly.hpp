#pragma once

#include <utility>
#include <vector>

#include "linjac/field.hpp"

namespace linjac {

/// Univariate polynomial over F_p, coefficients low degree first, no trailing zeros.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<u64> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(u64 c) { return Poly(std::vector<u64>{c}); }
  static Poly monomial(u64 c, std::size_t deg);
  /// x - a
  static Poly linear_root(const PrimeField& field, u64 a);

  bool is_zero() const noexcept { return c_.empty(); }
  /// Degree, -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  u64 operator[](std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
  u64 lead() const noexcept { return c_.empty() ? 0 : c_.back(); }
  const std::vector<u64>& coeffs() const noexcept { return c_; }
  bool is_monic() const noexcept { return lead() == 1; }

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<u64> c_;
};

Poly poly_add(const PrimeField& field, const Poly& a, const Poly& b);
Poly poly_sub(const PrimeField& field, const Poly& a, const Poly& b);
Poly poly_neg(const PrimeField& field, const Poly& a);
Poly poly_scale(const PrimeField& field, const Poly& a, u64 c);
Poly poly_mul(const PrimeField& field, const Poly& a, const Poly& b);
/// Quotient and remainder; throws DivisionByZero on b == 0.
std::pair<Poly, Poly> poly_divmod(const PrimeField& field, const Poly& a, const Poly& b);
Poly poly_div(const PrimeField& field, const Poly& a, const Poly& b);
Poly poly_mod(const PrimeField& field, const Poly& a, const Poly& b);
Poly poly_monic(const PrimeField& field, const Poly& a);
Poly poly_derivative(const PrimeField& field, const Poly& a);
u64 poly_eval(const PrimeField& field, const Poly& a, u64 x);
/// Monic gcd (zero if both are zero).
Poly poly_gcd(const PrimeField& field, Poly a, Poly b);

struct XgcdResult {
  Poly gcd;  // monic
  Poly s;    // s*a + t*b = gcd
  Poly t;
};
XgcdResult poly_xgcd(const PrimeField& field, const Poly& a, const Poly& b);

/// Uniformly random monic polynomial of the given degree.
Poly random_monic(const PrimeField& field, int degree, Rng& rng);

}  // namespace linjac

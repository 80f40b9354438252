#include "linjac/field.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "linjac/error.hpp"

namespace linjac {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::CompositeModulus: return "CompositeModulus";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::ZeroSection: return "ZeroSection";
    case Errc::AllZeroSections: return "AllZeroSections";
    case Errc::EmptySpace: return "EmptySpace";
    case Errc::PreconditionDegree: return "PreconditionDegree";
    case Errc::PreconditionCodim: return "PreconditionCodim";
    case Errc::InconsistentPrecomp: return "InconsistentPrecomp";
    case Errc::TagMismatch: return "TagMismatch";
    case Errc::SingularCurve: return "SingularCurve";
    case Errc::BadCharacteristic: return "BadCharacteristic";
    case Errc::InsufficientRationalPoints: return "InsufficientRationalPoints";
    case Errc::MalformedFile: return "MalformedFile";
    case Errc::VersionMismatch: return "VersionMismatch";
    case Errc::CurveMismatch: return "CurveMismatch";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

u64 Rng::below(u64 bound) {
  // Rejection sampling keeps the draw exactly uniform and portable across
  // standard library implementations.
  if ((bound & (bound - 1)) == 0) return next() & (bound - 1);
  const u64 limit = std::numeric_limits<u64>::max() - std::numeric_limits<u64>::max() % bound;
  u64 x;
  do {
    x = next();
  } while (x >= limit);
  return x % bound;
}

namespace {

u64 powmod(u64 a, u64 e, u64 m) {
  u128 r = 1, b = a % m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return static_cast<u64>(r);
}

}  // namespace

bool is_prime(u64 n) noexcept {
  if (n < 2) return false;
  for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = static_cast<u64>(u128{x} * x % n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(u64 p) : PrimeField(p, std::min(p, kSigmaCap)) {}

PrimeField::PrimeField(u64 p, u64 sigma_size) : p_(p), sigma_(sigma_size) {
  if (p >= kMaxModulus) throw Error(Errc::InvalidArgument, "modulus must be below 2^62");
  if (!is_prime(p)) throw Error(Errc::CompositeModulus, std::to_string(p) + " is not prime");
  if (sigma_ < 2 || sigma_ > p_) {
    throw Error(Errc::InvalidArgument, "sigma size must lie in [2, p]");
  }
  const u128 sq = u128{p_ - 1} * (p_ - 1);
  const u128 room = ~u128{0} - p_;
  const u128 terms = sq == 0 ? room : room / sq;
  lazy_terms_ = static_cast<u64>(std::min<u128>(terms, std::numeric_limits<u64>::max()));
}

bool PrimeField::fits_u64(u64 n) const noexcept {
  const u128 sq = u128{p_ - 1} * (p_ - 1);
  if (n == 0 || sq == 0) return true;
  return u128{n} <= (u128{std::numeric_limits<u64>::max()} - p_) / sq;
}

u64 PrimeField::from_signed(std::int64_t a) const noexcept {
  std::int64_t r = a % static_cast<std::int64_t>(p_);
  return static_cast<u64>(r < 0 ? r + static_cast<std::int64_t>(p_) : r);
}

u64 PrimeField::pow(u64 a, u64 e) const noexcept { return powmod(a, e, p_); }

u64 PrimeField::inv(u64 a) const {
  if (a % p_ == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
  // Extended Euclid on (a, p) with signed 128-bit cofactors.
  __int128 r0 = p_, r1 = a % p_, t0 = 0, t1 = 1;
  while (r1 != 0) {
    __int128 q = r0 / r1;
    __int128 tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  __int128 res = t0 % static_cast<__int128>(p_);
  if (res < 0) res += p_;
  return static_cast<u64>(res);
}

bool PrimeField::is_square(u64 a) const noexcept {
  a %= p_;
  if (a == 0 || p_ == 2) return true;
  return pow(a, (p_ - 1) / 2) == 1;
}

u64 PrimeField::sqrt(u64 a) const {
  a %= p_;
  if (a == 0 || p_ == 2) return a;
  if (!is_square(a)) throw Error(Errc::InvalidArgument, "not a quadratic residue");
  if (p_ % 4 == 3) return pow(a, (p_ + 1) / 4);
  u64 q = p_ - 1;
  int s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  u64 z = 2;
  while (is_square(z)) ++z;
  u64 m = static_cast<u64>(s);
  u64 c = pow(z, q);
  u64 t = pow(a, q);
  u64 r = pow(a, (q + 1) / 2);
  while (t != 1) {
    u64 i = 0, t2 = t;
    while (t2 != 1) {
      t2 = mul(t2, t2);
      ++i;
    }
    u64 b = c;
    for (u64 j = 0; j + i + 1 < m; ++j) b = mul(b, b);
    m = i;
    c = mul(b, b);
    t = mul(t, c);
    r = mul(r, b);
  }
  return r;
}

FieldElement fe_arith(const PrimeField& field, FieldElement a, FieldElement b, FieldOp op) {
  switch (op) {
    case FieldOp::Add: return field.add(a, b);
    case FieldOp::Sub: return field.sub(a, b);
    case FieldOp::Mul: return field.mul(a, b);
  }
  return {};
}

}  // namespace linjac

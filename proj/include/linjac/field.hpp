#pragma once

#include <compare>
#include <cstdint>
#include <random>

namespace linjac {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

/// Canonical residue in [0, p).
struct FieldElement {
  u64 value = 0;
  friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

/// Seedable pseudo-random stream. Each stream belongs to one task; use split()
/// to hand an independent child stream to another task.
class Rng {
 public:
  explicit Rng(u64 seed) : engine_(seed) {}

  u64 next() { return engine_(); }

  /// Uniform draw from [0, bound); bound > 0.
  u64 below(u64 bound);

  Rng split() { return Rng(next() ^ 0x9e3779b97f4a7c15ULL); }

 private:
  std::mt19937_64 engine_;
};

/// Prime field F_p with word-sized modulus (p < 2^62) and the sampling subset
/// Sigma = {0, 1, ..., sigma_size - 1}.
class PrimeField {
 public:
  static constexpr u64 kSigmaCap = u64{1} << 16;
  static constexpr u64 kMaxModulus = u64{1} << 62;

  /// Throws Error(CompositeModulus) if p is not prime.
  explicit PrimeField(u64 p);
  PrimeField(u64 p, u64 sigma_size);

  u64 modulus() const noexcept { return p_; }
  u64 sigma_size() const noexcept { return sigma_; }

  u64 reduce(u64 a) const noexcept { return a % p_; }
  u64 from_signed(std::int64_t a) const noexcept;

  u64 add(u64 a, u64 b) const noexcept {
    u64 s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  u64 sub(u64 a, u64 b) const noexcept { return a >= b ? a - b : a + (p_ - b); }
  u64 neg(u64 a) const noexcept { return a == 0 ? 0 : p_ - a; }
  u64 mul(u64 a, u64 b) const noexcept { return static_cast<u64>((u128{a} * b) % p_); }
  u64 pow(u64 a, u64 e) const noexcept;
  /// Extended Euclid; throws Error(DivisionByZero) on a == 0.
  u64 inv(u64 a) const;

  /// Shoup precomputation floor(w * 2^64 / p) for repeated multiplication by w.
  u64 precon(u64 w) const noexcept { return static_cast<u64>((u128{w} << 64) / p_); }
  u64 mul_precon(u64 a, u64 w, u64 wp) const noexcept {
    u64 q = static_cast<u64>((u128{a} * wp) >> 64);
    u64 r = a * w - q * p_;
    return r >= p_ ? r - p_ : r;
  }

  /// Reduce a 128-bit accumulator.
  u64 reduce_wide(u128 a) const noexcept { return static_cast<u64>(a % p_); }
  /// Number of products (p-1)^2 that can be summed into a u128 holding a value < p.
  u64 lazy_terms() const noexcept { return lazy_terms_; }
  /// True when n products (p-1)^2 fit in 64 bits.
  bool fits_u64(u64 n) const noexcept;

  /// Legendre symbol style test; p odd.
  bool is_square(u64 a) const noexcept;
  /// Tonelli-Shanks; precondition is_square(a).
  u64 sqrt(u64 a) const;

  FieldElement element(u64 v) const noexcept { return FieldElement{v % p_}; }
  FieldElement add(FieldElement a, FieldElement b) const noexcept { return {add(a.value, b.value)}; }
  FieldElement sub(FieldElement a, FieldElement b) const noexcept { return {sub(a.value, b.value)}; }
  FieldElement mul(FieldElement a, FieldElement b) const noexcept { return {mul(a.value, b.value)}; }
  FieldElement neg(FieldElement a) const noexcept { return {neg(a.value)}; }
  FieldElement inv(FieldElement a) const { return {inv(a.value)}; }

  /// Uniform element of Sigma.
  u64 sample_sigma(Rng& rng) const { return rng.below(sigma_); }
  /// Uniform element of F_p.
  u64 sample(Rng& rng) const { return rng.below(p_); }

  friend bool operator==(const PrimeField& a, const PrimeField& b) noexcept {
    return a.p_ == b.p_ && a.sigma_ == b.sigma_;
  }

 private:
  u64 p_;
  u64 sigma_;
  u64 lazy_terms_;
};

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(u64 n) noexcept;

enum class FieldOp { Add, Sub, Mul };

FieldElement fe_arith(const PrimeField& field, FieldElement a, FieldElement b, FieldOp op);

}  // namespace linjac

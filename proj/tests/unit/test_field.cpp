#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "linjac/error.hpp"
#include "linjac/field.hpp"

using namespace linjac;

TEST(Field, SigmaSize) {
  EXPECT_EQ(PrimeField(1009).sigma_size(), 1009u);
  EXPECT_EQ(PrimeField((u64{1} << 61) - 1).sigma_size(), 65536u);
  EXPECT_EQ(PrimeField(65537).sigma_size(), 65536u);
  EXPECT_EQ(PrimeField(2).sigma_size(), 2u);
}

TEST(Field, RejectsComposite) {
  try {
    PrimeField f(4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::CompositeModulus);
  }
  EXPECT_THROW(PrimeField(1), Error);
  EXPECT_THROW(PrimeField(561), Error);  // Carmichael
  EXPECT_THROW(PrimeField(u64{1} << 62), Error);
}

TEST(Field, Arithmetic) {
  const PrimeField f(1009);
  EXPECT_EQ(fe_arith(f, {1008}, {2}, FieldOp::Add).value, 1u);
  EXPECT_EQ(fe_arith(f, {0}, {777}, FieldOp::Mul).value, 0u);
  EXPECT_EQ(fe_arith(f, {3}, {5}, FieldOp::Sub).value, 1007u);
  EXPECT_EQ(f.inv(1), 1u);
  EXPECT_EQ(f.inv(2), 505u);
  try {
    f.inv(0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DivisionByZero);
  }
}

TEST(Field, AxiomsOnRandomTriples) {
  for (u64 p : {u64{2}, u64{1009}, u64{65537}, (u64{1} << 61) - 1}) {
    const PrimeField f(p);
    Rng rng(p);
    for (int t = 0; t < 10000; ++t) {
      const u64 a = f.sample(rng), b = f.sample(rng), c = f.sample(rng);
      ASSERT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
      ASSERT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
      ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
      ASSERT_EQ(f.add(a, f.neg(a)), 0u);
      if (a != 0) ASSERT_EQ(f.mul(a, f.inv(a)), 1u);
      ASSERT_EQ(f.mul_precon(a, b, f.precon(b)), f.mul(a, b));
    }
  }
}

TEST(Field, SqrtAndSquares) {
  const PrimeField f(1009);
  int squares = 0;
  for (u64 a = 0; a < 1009; ++a) {
    if (!f.is_square(a)) continue;
    ++squares;
    const u64 r = f.sqrt(a);
    EXPECT_EQ(f.mul(r, r), a);
  }
  EXPECT_EQ(squares, 505);  // 0 and (p-1)/2 nonzero squares
}

TEST(Field, SigmaStreamsReplay) {
  const PrimeField f(1009);
  Rng a(42), b(42);
  for (int i = 0; i < 1000; ++i) ASSERT_EQ(f.sample_sigma(a), f.sample_sigma(b));
}

TEST(Field, TinySigma) {
  const PrimeField f(1009, 2);
  Rng rng(1);
  for (int i = 0; i < 1000; ++i) ASSERT_LT(f.sample_sigma(rng), 2u);
}

TEST(Field, SigmaUniformChiSquare) {
  const PrimeField f(1009);
  Rng rng(7);
  const int draws = 100000;
  std::vector<int> hist(1009, 0);
  for (int i = 0; i < draws; ++i) hist[f.sample_sigma(rng)]++;
  const double expect = double(draws) / 1009;
  double chi2 = 0;
  for (int h : hist) chi2 += (h - expect) * (h - expect) / expect;
  // 1008 degrees of freedom: mean 1008, sd ~ 44.9. Accept within 5 sd.
  EXPECT_LT(std::abs(chi2 - 1008.0), 5 * std::sqrt(2.0 * 1008));
  for (int h : hist) EXPECT_LT(std::abs(h - expect), 5 * std::sqrt(expect));
}

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "linjac/curve_gen.hpp"
#include "linjac/error.hpp"

using namespace linjac;

TEST(Monomials, GenusOneBasis) {
  const auto b = monomial_basis(1, 6);
  const std::vector<Monomial> want{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {3, 0}};  // poles 0,2,3,4,5,6
  EXPECT_EQ(b, want);
  for (int g = 1; g <= 6; ++g)
    for (int bound = 2 * g - 1; bound < 40; ++bound) {
      const auto m = monomial_basis(g, bound);
      ASSERT_EQ(m.size(), static_cast<std::size_t>(bound + 1 - g));
      for (std::size_t i = 1; i < m.size(); ++i) ASSERT_LT(pole_order(m[i - 1], g), pole_order(m[i], g));
    }
}

TEST(Generator, Dimensions) {
  for (int g = 1; g <= 4; ++g) {
    Rng rng(static_cast<u64>(g));
    const auto b = gen_hyperelliptic(g, 1009, rng);
    const int d = std::max(2 * g, 2);
    EXPECT_EQ(b.Delta, 3 * d);
    EXPECT_EQ(b.rep_a.delta(), static_cast<std::size_t>(b.Delta + 1 - g));
    EXPECT_EQ(b.rep_a.delta_prime(), static_cast<std::size_t>(2 * b.Delta + 1 - g));
    EXPECT_EQ(b.cubic->delta_pp, static_cast<std::size_t>(3 * b.Delta + 1 - g));
    EXPECT_TRUE(validate_rep(CurveRep(b.rep_a)).ok());
    EXPECT_TRUE(is_smooth(b.field, b.curve));
    EXPECT_EQ(b.precomp->w_d0.codim(), static_cast<std::size_t>(d));
    EXPECT_EQ(b.precomp->w_2d0.codim(), static_cast<std::size_t>(2 * d));
    EXPECT_TRUE(b.precomp->w_d0.contains(b.field, b.precomp->s0));
    EXPECT_TRUE(b.precomp->w_2d0.contains(b.field, b.precomp->s0));
  }
  Rng rng(2);
  const auto b = gen_hyperelliptic(2, 1009, rng);
  EXPECT_EQ(b.rep_a.delta(), 11u);
}

TEST(Generator, CubicAssociativity) {
  // (T_i T_j) * T_k must not depend on the bracketing.
  Rng rng(3);
  const auto b = gen_hyperelliptic(2, 1009, rng);
  const auto& f = b.field;
  const auto& c = *b.cubic;
  const std::size_t n = b.rep_a.delta();
  for (int t = 0; t < 50; ++t) {
    const std::size_t i = rng.below(n), j = rng.below(n), k = rng.below(n);
    auto bracket = [&](std::size_t a, std::size_t bb, std::size_t cc) {
      Vec out(c.delta_pp, 0);
      const auto prod = b.rep_a.product_rows(a).row(bb);  // T_a T_bb in V'
      for (std::size_t u = 0; u < prod.size(); ++u)
        if (prod[u]) axpy(f, out, c.star_rows[cc].row(u), prod[u]);
      return out;
    };
    ASSERT_EQ(bracket(i, j, k), bracket(j, k, i));
    ASSERT_EQ(bracket(i, j, k), bracket(i, k, j));
  }
}

TEST(Generator, Errors) {
  Rng rng(4);
  try {
    gen_hyperelliptic(2, 2, rng, GenOptions{true, std::nullopt, Poly{}, 64});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::BadCharacteristic);
  }
  GenOptions singular;
  singular.f = Poly(std::vector<u64>{0, 0, 0, 0, 0, 1});  // x^5
  try {
    gen_hyperelliptic(2, 1009, rng, singular);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::SingularCurve);
  }
  EXPECT_THROW(gen_hyperelliptic(2, 4, rng), Error);
  EXPECT_THROW(gen_paper_fixture(3), Error);
}

TEST(Generator, CharacteristicTwo) {
  Rng rng(5);
  const auto b = gen_hyperelliptic(3, 2, rng);
  EXPECT_FALSE(b.curve.h.is_zero());
  EXPECT_TRUE(validate_rep(CurveRep(b.rep_a)).ok());
  EXPECT_EQ(b.field.sigma_size(), 2u);
  CurveBundle copy = b;
  try {
    gen_rep_b0(copy, rng);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InsufficientRationalPoints);
  }
}

TEST(Generator, Determinism) {
  Rng a(7), c(7);
  EXPECT_EQ(bundle_to_json(gen_hyperelliptic(2, 1009, a)), bundle_to_json(gen_hyperelliptic(2, 1009, c)));
}

TEST(Fixture, RepB0Structure) {
  CurveBundle b = gen_paper_fixture();
  Rng rng(6);
  gen_rep_b0(b, rng);
  const auto& r = *b.rep_b0;
  EXPECT_EQ(r.n(), 9u);  // 9 x 4 value matrix, as in the example
  EXPECT_EQ(r.delta(), 4u);
  for (std::size_t i = 0; i < r.n(); ++i) {
    const auto [x, y] = r.points()[i];
    EXPECT_EQ(b.field.mul(y, y), b.field.add(b.field.pow(x, 3), 1));
    EXPECT_EQ(r.a_v()(i, 0), 1u);
    EXPECT_EQ(r.a_v()(i, 1), x);
    EXPECT_EQ(r.a_v()(i, 2), y);
    EXPECT_EQ(r.a_v()(i, 3), b.field.mul(x, x));
  }
  // x * y evaluated pointwise
  const CurveRep rep(r);
  const Vec xy = product(rep, r.a_v().column(1), r.a_v().column(2));
  for (std::size_t i = 0; i < r.n(); ++i) EXPECT_EQ(xy[i], b.field.mul(r.points()[i].first, r.points()[i].second));
}

TEST(Bundle, RoundTrip) {
  CurveBundle b = gen_paper_fixture();
  Rng rng(8);
  gen_rep_b0(b, rng);
  const std::string path = ::testing::TempDir() + "fixture_bundle.json";
  save_bundle(b, path);
  const CurveBundle back = load_bundle(path);
  EXPECT_EQ(back.rep_a.flat_coefficients(), b.rep_a.flat_coefficients());
  EXPECT_EQ(back.rep_b0->a_v(), b.rep_b0->a_v());
  EXPECT_EQ(bundle_to_json(back), bundle_to_json(b));
  EXPECT_TRUE(validate_rep(CurveRep(back.rep_a)).ok());

  Rng r2(9);
  const CurveBundle g2 = gen_hyperelliptic(2, 1009, r2);
  const CurveBundle g2back = bundle_from_json(bundle_to_json(g2));
  EXPECT_EQ(bundle_to_json(g2back), bundle_to_json(g2));
  EXPECT_EQ(g2back.precomp->w_d0, g2.precomp->w_d0);
  std::remove(path.c_str());
}

TEST(Bundle, Malformed) {
  const std::string text = bundle_to_json(gen_paper_fixture());
  auto code_of = [](const std::string& s) {
    try {
      bundle_from_json(s);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::InvalidArgument;
  };
  EXPECT_EQ(code_of(text.substr(0, text.size() / 2)), Errc::MalformedFile);
  EXPECT_EQ(code_of("{}"), Errc::MalformedFile);
  std::string v2 = text;
  v2.replace(v2.find("\"version\":1"), 11, "\"version\":2");
  EXPECT_EQ(code_of(v2), Errc::VersionMismatch);
  EXPECT_THROW(load_bundle("/nonexistent/bundle.json"), Error);
}

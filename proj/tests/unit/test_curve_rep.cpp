#include <gtest/gtest.h>

#include "linjac/curve_gen.hpp"
#include "linjac/error.hpp"
#include "test_helpers.hpp"

using namespace linjac;
using namespace linjac::testing;

namespace {

const CurveBundle& fixture() {
  static const CurveBundle b = gen_paper_fixture();
  return b;
}

const CurveBundle& genus2() {
  static const CurveBundle b = [] {
    Rng rng(21);
    CurveBundle out = gen_hyperelliptic(2, 1009, rng);
    gen_rep_b0(out, rng);
    return out;
  }();
  return b;
}

}  // namespace

TEST(CurveRep, FixtureTableFromPaper) {
  const CurveRep rep(fixture().rep_a);
  EXPECT_EQ(rep.n(), 4u);
  EXPECT_EQ(rep.n_prime(), 8u);
  EXPECT_EQ(product(rep, unit(4, 1), unit(4, 2)), unit(8, 4));  // T2 T3 = U5
  Vec u1u6 = unit(8, 0);
  u1u6[5] = 1;
  EXPECT_EQ(product(rep, unit(4, 2), unit(4, 2)), u1u6);  // T3 T3 = U1 + U6
  for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(product(rep, unit(4, 0), unit(4, j)), unit(8, j));
  EXPECT_TRUE(product(rep, unit(4, 3), Vec(4, 0)) == Vec(8, 0));
  // M_1 is the stored table for the constant section.
  EXPECT_EQ(mult_matrix(rep, unit(4, 0)), fixture().rep_a.table(0));
}

TEST(CurveRep, ValidationFlagsBrokenTables) {
  const auto& a = fixture().rep_a;
  EXPECT_TRUE(validate_rep(CurveRep(a)).ok());

  std::vector<u64> c = a.flat_coefficients();
  // c_{1,2,1} lives at [k=0][i=0][j=1]
  c[1] = (c[1] + 1) % 1009;
  const auto asym = validate_rep(CurveRep(RepA::from_coefficients(a.field(), 1, 4, 4, 8, c)));
  EXPECT_FALSE(asym.find("symmetry")->passed);

  c = a.flat_coefficients();
  for (std::size_t i = 0; i < 16; ++i) c[7 * 16 + i] = 0;  // last row of every M_i
  const auto nosurj = validate_rep(CurveRep(RepA::from_coefficients(a.field(), 1, 4, 4, 8, c)));
  EXPECT_FALSE(nosurj.find("surjectivity")->passed);
  EXPECT_TRUE(nosurj.find("symmetry")->passed);
}

TEST(CurveRep, ProductLaws) {
  const CurveRep rep(genus2().rep_a);
  const auto& f = rep.field();
  Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    const Vec s = random_vec(f, rep.n(), rng), u = random_vec(f, rep.n(), rng), w = random_vec(f, rep.n(), rng);
    const u64 a = f.sample(rng);
    Vec as_w(rep.n());
    for (std::size_t i = 0; i < rep.n(); ++i) as_w[i] = f.add(f.mul(a, s[i]), w[i]);
    const Vec lhs = product(rep, as_w, u);
    Vec rhs = product(rep, w, u);
    axpy(f, rhs, product(rep, s, u), a);
    ASSERT_EQ(lhs, rhs);
    ASSERT_EQ(product(rep, s, u), product(rep, u, s));
    ASSERT_EQ(mat_vec(f, mult_matrix(rep, s), u), product(rep, s, u));
  }
}

TEST(CurveRep, SimpleMultiplication) {
  for (RepTag tag : {RepTag::A, RepTag::B0}) {
    const CurveRep rep = bundle_rep(genus2(), tag);
    const auto& f = rep.field();
    Rng rng(4);
    for (int t = 0; t < 100; ++t) {
      Vec s;
      do s = mat_vec(f, rep.space_v().basis(), random_vec(f, rep.delta(), rng));
      while (is_zero_vector(s));
      const Subspace w = row_span(f, mat_mul_transposed(f, random_matrix(f, rng.below(rep.delta()), rep.delta(), rng),
                                                        rep.space_v().basis()));
      const Subspace sw = simple_mul(rep, s, w);
      ASSERT_EQ(sw.dim(), w.dim());
      ASSERT_EQ(divide(rep, sw, std::vector<Vec>{s}), w);
    }
    Vec s = rep.space_v().vector_copy(1);
    EXPECT_EQ(rep.codim_in_v_prime(simple_mul(rep, s, rep.space_v())), static_cast<std::size_t>(rep.degree()));
    EXPECT_EQ(simple_mul(rep, s, Subspace(rep.n())).dim(), 0u);
    EXPECT_THROW(simple_mul(rep, Vec(rep.n(), 0), rep.space_v()), Error);
  }
}

TEST(CurveRep, SumOfProductsAndDivision) {
  for (RepTag tag : {RepTag::A, RepTag::B0}) {
    const CurveRep rep = bundle_rep(genus2(), tag);
    const Vec s = rep.space_v().vector_copy(0);
    const std::vector<Vec> one{s}, twice{s, s};
    EXPECT_EQ(sum_of_products(rep, one, rep.space_v()), simple_mul(rep, s, rep.space_v()));
    EXPECT_EQ(sum_of_products(rep, twice, rep.space_v()), sum_of_products(rep, one, rep.space_v()));
    EXPECT_EQ(divide(rep, simple_mul(rep, s, rep.space_v()), one), rep.space_v());
    const Subspace vprime = sum_of_products(rep, std::vector<Vec>{s, rep.space_v().vector_copy(2), rep.space_v().vector_copy(5)}, rep.space_v());
    EXPECT_EQ(divide(rep, vprime, one), rep.space_v());
    try {
      sum_of_products(rep, std::vector<Vec>{Vec(rep.n(), 0)}, rep.space_v());
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::AllZeroSections);
    }
    EXPECT_THROW(divide(rep, vprime, std::vector<Vec>{Vec(rep.n(), 0)}), Error);
  }
}

TEST(CurveRep, FullBasisIsGeneratingSet) {
  // W_D0 is base point free of degree d = 4 >= 2g-1; its basis is an IGS.
  const auto& b = genus2();
  const CurveRep rep(b.rep_a);
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < b.precomp->w_d0.dim(); ++i) basis.push_back(b.precomp->w_d0.vector_copy(i));
  EXPECT_EQ(rep.codim_in_v_prime(sum_of_products(rep, basis, rep.space_v())), 4u);
}

TEST(CurveRep, RepB0Shape) {
  const auto& b = genus2();
  const RepB0& r = *b.rep_b0;
  EXPECT_EQ(r.n(), 25u);
  EXPECT_EQ(r.delta_prime(), 23u);
  EXPECT_TRUE(mat_mul(b.field, r.k_v(), r.a_v()).is_zero());
  EXPECT_EQ(r.k_v().rows(), 25u - 11u);
  EXPECT_TRUE(validate_rep(CurveRep(r)).ok());
  Matrix extra = r.a_v();
  extra.append_row(r.a_v().row(0));
  EXPECT_THROW(RepB0(b.field, 2, 12, extra), Error);
  // diagonal multiplication matrix
  const CurveRep rep(r);
  const Vec s = rep.space_v().vector_copy(3);
  const Matrix m = mult_matrix(rep, s);
  for (std::size_t i = 0; i < rep.n(); ++i)
    for (std::size_t j = 0; j < rep.n(); ++j) EXPECT_EQ(m(i, j), i == j ? s[i] : 0u);
}

TEST(CurveRep, EvaluationIntertwinesProducts) {
  const auto& b = genus2();
  const CurveRep ra(b.rep_a), rb(*b.rep_b0);
  Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    const Vec s = random_vec(b.field, ra.n(), rng), u = random_vec(b.field, ra.n(), rng);
    const Vec pa = product(ra, s, u);
    const Vec pb = product(rb, a_to_b0(b, std::span<const u64>(s)), a_to_b0(b, std::span<const u64>(u)));
    for (std::size_t r = 0; r < rb.n(); ++r) {
      const auto [x, y] = b.rep_b0->points()[r];
      ASSERT_EQ(dot(b.field, evaluate_basis(b.field, b.basis_vp, x, y), pa), pb[r]);
    }
  }
}

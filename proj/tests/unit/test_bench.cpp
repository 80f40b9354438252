#include <gtest/gtest.h>

#include <cmath>

#include "linjac/bench.hpp"
#include "linjac/error.hpp"

using namespace linjac;

TEST(Bench, Slope) {
  EXPECT_FALSE(loglog_slope({5}, {100}).has_value());
  EXPECT_FALSE(loglog_slope({5, 5}, {100, 200}).has_value());
  std::vector<double> x{5, 10, 20, 40}, y;
  for (double g : x) y.push_back(7 * std::pow(g, 3));
  EXPECT_NEAR(*loglog_slope(x, y), 3.0, 1e-9);
}

TEST(Bench, FixtureSuite) {
  for (const auto& r : run_suite(gen_paper_fixture(), "fixture", 1, 1)) EXPECT_TRUE(r.pass) << r.name;
  Rng rng(1);
  const auto other = run_suite(gen_hyperelliptic(1, 1009, rng), "fixture", 1, 1);
  EXPECT_FALSE(other.front().pass);
}

TEST(Bench, SuitesPassOnSmallCurve) {
  Rng rng(2);
  const CurveBundle b = gen_hyperelliptic(2, 1009, rng);
  for (const auto& s : {"axioms", "oracle", "igs-stats", "membership", "roundtrip", "dual"}) {
    for (const auto& r : run_suite(b, s, 5, 3)) EXPECT_TRUE(r.pass) << r.suite << "/" << r.name << ": " << r.details;
  }
  EXPECT_THROW(run_suite(b, "nope", 1, 1), Error);
}

TEST(Bench, JsonLine) {
  const std::string line = to_json_line({"oracle", "addflip_small", true, "5/5", 9});
  EXPECT_NE(line.find("\"suite\":\"oracle\""), std::string::npos);
  EXPECT_NE(line.find("\"seed\":9"), std::string::npos);
}

TEST(Bench, ScaleCountsAreReproducible) {
  const auto a = run_scale({2, 3}, 1009, ScaleOp::AddflipLarge, 2, 11);
  const auto b = run_scale({2, 3}, 1009, ScaleOp::AddflipLarge, 2, 11);
  ASSERT_EQ(a.size(), 2u);
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].counts, b[i].counts);
  const std::string csv = scale_csv(a);
  EXPECT_EQ(csv.rfind("genus,op,median_ns,trials\n", 0), 0u);
  for (auto op : {ScaleOp::AddflipSmall, ScaleOp::Equal, ScaleOp::Flip})
    EXPECT_EQ(run_scale({2}, 1009, op, 1, 1).size(), 1u);
}

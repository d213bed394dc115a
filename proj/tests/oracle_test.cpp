#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "semideriv/oracle.hpp"

using namespace semideriv;

TEST(Oracle, EnumerateMatrices) {
  EXPECT_EQ(enumerate_matrices(1).size(), 2u);
  EXPECT_EQ(enumerate_matrices(2).size(), 8u);
  const auto three = enumerate_matrices(3);
  EXPECT_EQ(three.size(), 64u);
  std::set<std::vector<bool>> distinct;
  for (const auto& m : three) distinct.insert(m.entries());
  EXPECT_EQ(distinct.size(), 64u);
  EXPECT_EQ(three.front(), UpperTriangular<Boolean>(3));
  EXPECT_EQ(three[1], UpperTriangular<Boolean>::unit(3, 1, 1));
  EXPECT_EQ(enumerate_matrices(4).size(), 1024u);
  EXPECT_THROW(enumerate_matrices(5), CapacityError);
}

TEST(Oracle, ClassifyDimensionOne) {
  const auto report = brute_force_classify(1);
  EXPECT_EQ(report.total_patterns, 2u);
  ASSERT_EQ(report.derivation_patterns.size(), 2u);
  EXPECT_TRUE(report.derivation_patterns[0].empty());
  EXPECT_EQ(report.derivation_patterns[1], ZeroPattern::full(1));
  EXPECT_EQ(report.interval_form, 2u);
  EXPECT_EQ(report.other, 0u);
  EXPECT_TRUE(report.agrees());
}

TEST(Oracle, ClassifyDimensionTwo) {
  const auto report = brute_force_classify(2);
  EXPECT_EQ(report.total_patterns, 8u);
  const std::vector<ZeroPattern> expected = {
      ZeroPattern(2),
      ZeroPattern(2, {{1, 1}}),
      ZeroPattern(2, {{2, 2}}),
      ZeroPattern(2, {{1, 1}, {2, 2}}),
      ZeroPattern::full(2),
  };
  EXPECT_EQ(report.derivation_patterns, expected);
  EXPECT_EQ(report.interval_form, 4u);
  EXPECT_EQ(report.other, 1u);
  EXPECT_TRUE(report.agrees());
}

TEST(Oracle, ClassifyDimensionThree) {
  const auto report = brute_force_classify(3);
  EXPECT_EQ(report.total_patterns, 64u);
  // Frozen from an independent brute-force sweep.
  EXPECT_EQ(report.derivation_patterns.size(), 13u);
  EXPECT_EQ(report.interval_form, 8u);
  EXPECT_EQ(report.other, 5u);
  EXPECT_TRUE(report.agrees());

  const auto contains = [&](const ZeroPattern& p) {
    return std::find(report.derivation_patterns.begin(), report.derivation_patterns.end(), p) !=
           report.derivation_patterns.end();
  };
  for (const auto& mask : enumerate_family_derivations(3)) EXPECT_TRUE(contains(mask.pattern()));
  EXPECT_TRUE(contains(strip_diagonal(3)));
  for (std::size_t k = 1; k <= 3; ++k)
    for (std::size_t m = 1; m <= 3; ++m)
      EXPECT_EQ(contains(compose(delta_k(3, k), d_m(3, m))), k + m >= 3) << k << " " << m;
}

TEST(Oracle, CapacityGuard) { EXPECT_THROW(brute_force_classify(4), CapacityError); }

TEST(Oracle, ExhaustiveWitnessForNonDerivation) {
  const auto w = exhaustive_leibniz_check(compose(delta_k(3, 1), d_m(3, 1)), 3);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->where.row, 1u);
  EXPECT_EQ(w->where.col, 3u);
  EXPECT_FALSE(exhaustive_leibniz_check(compose(delta_k(3, 1), d_m(3, 2)), 3));
}

TEST(Oracle, ReportText) {
  const std::string text = format_report(brute_force_classify(2));
  EXPECT_EQ(text,
            "pattern={} form=interval Z={}\n"
            "pattern={1,1} form=interval Z={1}\n"
            "pattern={2,2} form=interval Z={2}\n"
            "pattern={1,1;2,2} form=other\n"
            "pattern={1,1;1,2;2,2} form=interval Z={1,2}\n"
            "total=5 interval_form=4 other=1\n");
}

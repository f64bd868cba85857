#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "cdecomp/basecases.hpp"
#include "cdecomp/conditions.hpp"
#include "cdecomp/detach.hpp"
#include "cdecomp/search.hpp"

using namespace cdecomp;

TEST(CompleteConditionsTest, MaxLengthBoundFailsForFourCycleWithTwoCycles) {
  // 2K_4 into one 4-cycle and four 2-cycles: lengths sum correctly but the
  // long cycle is too long for the number of cycles.
  const auto r = check_complete_conditions(2, 4, {4, 2, 2, 2, 2});
  EXPECT_TRUE(r.item("B1").pass);
  EXPECT_TRUE(r.item("B2").pass);
  EXPECT_FALSE(r.item("B3").applicable);
  EXPECT_FALSE(r.item("B4").pass);
  EXPECT_FALSE(r.passed());
}

TEST(CompleteConditionsTest, SimpleCompleteGraph) {
  EXPECT_TRUE(check_complete_conditions(1, 5, {5, 5}).passed());
  EXPECT_TRUE(check_complete_conditions(1, 7, std::vector<int>(7, 3)).passed());
  // A 2-cycle in K_5 leaves too few edges on the long cycles.
  const auto r = check_complete_conditions(1, 5, {4, 4, 2});
  EXPECT_FALSE(r.item("B3").pass);
  EXPECT_FALSE(check_complete_conditions(1, 5, {6, 4}).item("B1").pass);
  EXPECT_FALSE(check_complete_conditions(1, 5, {5, 4}).item("B2").pass);
  // K_4: n*floor(3/2) = 4.
  EXPECT_TRUE(check_complete_conditions(1, 4, {4}).passed());
}

TEST(EquipartiteConditionsTest, EvenLengthsOnTwoParts) {
  const auto r = check_equipartite_conditions(1, 2, 2, {3});
  EXPECT_FALSE(r.item("C1'").pass);
  EXPECT_FALSE(r.passed());
  EXPECT_TRUE(check_equipartite_conditions(1, 2, 2, {4}).passed());
  EXPECT_FALSE(check_equipartite_conditions(1, 2, 3, {6, 6}).item("C1'").applicable);
}

TEST(EquipartiteConditionsTest, Examples) {
  EXPECT_TRUE(check_equipartite_conditions(1, 2, 3, {6, 6}).passed());
  EXPECT_TRUE(check_equipartite_conditions(1, 3, 2, {6}).passed());  // plus a 1-factor
  EXPECT_FALSE(check_equipartite_conditions(1, 3, 2, {4, 2}).item("C3").pass);
  EXPECT_TRUE(check_equipartite_conditions(2, 2, 2, {4, 4}).passed());
  EXPECT_FALSE(check_equipartite_conditions(2, 2, 2, {8}).item("C4").pass);
  EXPECT_FALSE(check_equipartite_conditions(1, 2, 3, {4, 4, 2, 2}).item("C3").pass);
  EXPECT_FALSE(check_equipartite_conditions(1, 2, 3, {7, 5}).item("C1").pass);
}

TEST(ConditionsTest, RejectsBadParameters) {
  EXPECT_THROW(check_complete_conditions(0, 4, {3}), std::invalid_argument);
  EXPECT_THROW(check_equipartite_conditions(1, 0, 3, {3}), std::invalid_argument);
  EXPECT_THROW(check_complete_conditions(1, 4, {3}).item("C9"), std::out_of_range);
}

// The items must agree with a direct evaluation of the defining formulas.
TEST(ConditionsTest, AgreesWithDirectFormulas) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 3000; ++trial) {
    const int lambda = 1 + rng() % 4, m = 1 + rng() % 4, n = 2 + rng() % 4;
    const int k = 1 + rng() % 8;
    std::vector<int> ls;
    for (int i = 0; i < k; ++i) ls.push_back(1 + static_cast<int>(rng() % (m * n + 1)));
    const long sum = std::accumulate(ls.begin(), ls.end(), 0L);
    long long_sum = 0;
    for (int c : ls) long_sum += c >= 3 ? c : 0;
    const int mx = *std::max_element(ls.begin(), ls.end());
    const long pairs = static_cast<long>(n) * (n - 1) / 2;

    const bool c1 = std::all_of(ls.begin(), ls.end(), [&](int c) { return c >= 2 && c <= m * n; });
    const bool c1p = n != 2 || std::all_of(ls.begin(), ls.end(), [](int c) { return c % 2 == 0; });
    const bool c2 = sum == static_cast<long>(m) * n * ((lambda * m * (n - 1)) / 2);
    const long one_factor = (m * (n - 1)) % 2 == 1 ? m * n / 2 : 0;
    const bool c3 = lambda % 2 == 0 || long_sum >= static_cast<long>(m) * m * pairs - one_factor;
    // 2*max <= lambda m^2 C(n,2) - 2k + 4 avoids halving.
    const bool c4 = lambda % 2 == 1 || 2L * mx <= static_cast<long>(lambda) * m * m * pairs - 2L * k + 4;
    const auto r = check_equipartite_conditions(lambda, m, n, ls);
    ASSERT_EQ(r.item("C1").pass, c1);
    ASSERT_EQ(r.item("C1'").pass, c1p);
    ASSERT_EQ(r.item("C2").pass, c2);
    ASSERT_EQ(r.item("C3").pass, c3);
    ASSERT_EQ(r.item("C4").pass, c4);
    ASSERT_EQ(r.passed(), c1 && c1p && c2 && c3 && c4);

    const int mu = lambda;
    const bool b1 = std::all_of(ls.begin(), ls.end(), [&](int c) { return c >= 2 && c <= n; });
    const bool b2 = sum == static_cast<long>(n) * ((mu * (n - 1)) / 2);
    const bool b3 = mu % 2 == 0 || long_sum >= static_cast<long>(n) * ((n - 1) / 2);
    const bool b4 = mu % 2 == 1 || 2L * mx <= mu * pairs - 2L * k + 4;
    const auto rb = check_complete_conditions(mu, n, ls);
    ASSERT_EQ(rb.item("B1").pass, b1);
    ASSERT_EQ(rb.item("B2").pass, b2);
    ASSERT_EQ(rb.item("B3").pass, b3);
    ASSERT_EQ(rb.item("B4").pass, b4);
  }
}

// Every decomposition the exhaustive search finds satisfies the conditions.
TEST(ConditionsTest, NecessaryOnSearchedInstances) {
  for (int mu = 1; mu <= 3; ++mu)
    for (int n = 3; n <= 5; ++n) {
      if (mu * n * (n - 1) / 2 > kSearchEdgeLimit) continue;
      const int target = n * ((mu * (n - 1)) / 2);
      // Nondecreasing length lists summing to the target.
      std::vector<std::vector<int>> lists;
      std::vector<int> cur;
      std::function<void(int, int)> gen = [&](int left, int lo) {
        if (left == 0) {
          lists.push_back(cur);
          return;
        }
        for (int c = lo; c <= std::min(n, left); ++c) {
          cur.push_back(c);
          gen(left - c, c);
          cur.pop_back();
        }
      };
      gen(target, 2);
      for (const auto& ls : lists) {
        if (search_decomposition(mu, n, ls)) {
          EXPECT_TRUE(check_complete_conditions(mu, n, ls).passed()) << "mu=" << mu << " n=" << n;
        }
      }
    }
}

// Detached decompositions satisfy the equipartite conditions, including the
// odd-degree ones that carry a 1-factor.
TEST(ConditionsTest, NecessaryOnDetachedInstances) {
  int checked = 0;
  for (int lambda = 1; lambda <= 3; ++lambda)
    for (int m = 1; m <= 3; ++m)
      for (int n = 2; n <= 4; ++n) {
        const int mu = lambda * m;
        std::vector<CycleDecomposition> seeds;
        if (n == 2) seeds.push_back(decompose_muK2(mu));
        for (int b = 0; n == 3 && 3 * b <= 3 * mu; ++b)
          if ((3 * mu - 3 * b) % 2 == 0) seeds.push_back(decompose_muK3(mu, (3 * mu - 3 * b) / 2, b));
        if (n == 4)
          for (int c = 0; c <= 1; ++c)
            for (int b = 0; b <= 2; ++b) {
              const int rest = 6 * mu - (mu % 2 ? 2 : 0) - 3 * b - 4 * c;
              if (rest >= 0 && rest % 2 == 0 && !muK4_rejection(mu, rest / 2, b, c))
                seeds.push_back(decompose_muK4(mu, rest / 2, b, c));
            }
        for (const auto& s : seeds) {
          const auto d = detach_full(lambda, m, n, s);
          EXPECT_TRUE(check_equipartite_conditions(lambda, m, n, decomposition_lengths(d)).passed())
              << lambda << " " << m << " " << n;
          ++checked;
        }
      }
  EXPECT_GT(checked, 50);
}

#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "cdecomp/refine.hpp"
#include "cdecomp/search.hpp"
#include "oracles.hpp"

using namespace cdecomp;

namespace {

VertexId V(int p, int s = 0) { return {p, s}; }

std::vector<int> scaled(std::vector<int> q, int c) {
  for (int& x : q) x *= c;
  std::sort(q.begin(), q.end());
  return q;
}

// F_i 2-regular with the right edge count, governed classes split as asked,
// union an exact decomposition.
void expect_refined(const RefinedDecomposition& r, int lambda, int m, int n, const std::vector<int>& class_lengths,
                    const std::vector<LengthPartition>& parts) {
  ASSERT_EQ(r.subgraphs.size(), class_lengths.size());
  for (std::size_t i = 0; i < class_lengths.size(); ++i) {
    const auto sizes = oracle::two_regular_components(r.subgraphs[i]);
    ASSERT_TRUE(sizes.has_value()) << "F_" << i + 1;
    EXPECT_EQ(std::accumulate(sizes->begin(), sizes->end(), 0), class_lengths[i] * m) << "F_" << i + 1;
    if (i < parts.size()) EXPECT_EQ(*sizes, scaled(parts[i].q, class_lengths[i])) << "F_" << i + 1;
  }
  EXPECT_EQ(oracle::check_equipartite(lambda, m, n, r.flatten()), "");
}

}  // namespace

TEST(FlowerTest, TwoTriangles) {
  const auto petals = oracle::petals(2, 3);
  const std::vector<VertexId> copies{V(0, 0), V(0, 1)};
  const auto one = flower_detach(petals, V(0, -1), copies, {2});
  ASSERT_EQ(one.cycles.size(), 1u);
  EXPECT_EQ(one.cycles[0].size(), 6u);
  EXPECT_EQ(oracle::check_flower(petals, V(0, -1), copies, {2}, one.cycles), "");

  const auto two = flower_detach(petals, V(0, -1), copies, {1, 1});
  ASSERT_EQ(two.cycles.size(), 2u);
  EXPECT_EQ(two.cycles[0].size(), 3u);
  EXPECT_EQ(two.entry_copy, two.exit_copy);
}

TEST(FlowerTest, ThreeSquaresIntoOneCycle) {
  const auto petals = oracle::petals(3, 4);
  const std::vector<VertexId> copies{V(0, 0), V(0, 1), V(0, 2)};
  const auto r = flower_detach(petals, V(0, -1), copies, {3});
  ASSERT_EQ(r.cycles.size(), 1u);
  EXPECT_EQ(r.cycles[0].size(), 12u);
  // Petal t enters through copy t and leaves through copy t+1.
  EXPECT_EQ(r.entry_copy, (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(r.exit_copy, (std::vector<int>{1, 2, 0}));
}

TEST(FlowerTest, RandomCompositions) {
  std::mt19937 rng(41);
  for (int m = 1; m <= 6; ++m)
    for (int c = 2; c <= 8; ++c)
      for (int t = 0; t < 40; ++t) {
        const auto q = oracle::random_composition(rng, m);
        const auto petals = oracle::petals(m, c);
        std::vector<VertexId> copies;
        for (int s = 0; s < m; ++s) copies.push_back(V(0, s));
        const auto r = flower_detach(petals, V(0, -1), copies, q);
        ASSERT_EQ(oracle::check_flower(petals, V(0, -1), copies, q, r.cycles), "") << m << " " << c;
      }
}

TEST(FlowerTest, RejectsBadInput) {
  auto petals = oracle::petals(2, 3);
  const std::vector<VertexId> copies{V(0, 0), V(0, 1)};
  EXPECT_THROW(flower_detach(petals, V(0, -1), copies, {1}), std::invalid_argument);
  EXPECT_THROW(flower_detach(petals, V(0, -1), copies, {0, 2}), std::invalid_argument);
  EXPECT_THROW(flower_detach(petals, V(0, -1), {V(0, 0), V(0, 0)}, {2}), std::invalid_argument);
  auto touching = petals;
  touching[1][1] = touching[0][1];
  EXPECT_THROW(flower_detach(touching, V(0, -1), copies, {2}), std::invalid_argument);
  auto uneven = petals;
  uneven[1].push_back(V(9));
  EXPECT_THROW(flower_detach(uneven, V(0, -1), copies, {2}), std::invalid_argument);
  auto off_hub = petals;
  std::rotate(off_hub[0].begin(), off_hub[0].begin() + 1, off_hub[0].end());
  EXPECT_THROW(flower_detach(off_hub, V(0, -1), copies, {2}), std::invalid_argument);
}

TEST(OneFactorizationTest, Shifts) {
  EXPECT_EQ(one_factorization_Kmm(1, 2), (std::vector<std::vector<int>>{{0, 1}, {1, 0}}));
  EXPECT_EQ(one_factorization_Kmm(1, 3), (std::vector<std::vector<int>>{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}));
  EXPECT_EQ(one_factorization_Kmm(2, 2), (std::vector<std::vector<int>>{{0, 1}, {0, 1}, {1, 0}, {1, 0}}));
}

TEST(OneFactorizationTest, PartitionsTheEdges) {
  for (int lambda = 1; lambda <= 3; ++lambda)
    for (int m = 1; m <= 6; ++m) {
      const auto f = one_factorization_Kmm(lambda, m);
      ASSERT_EQ(static_cast<int>(f.size()), lambda * m);
      std::vector<std::vector<int>> count(m, std::vector<int>(m, 0));
      for (const auto& matching : f) {
        std::vector<int> sorted = matching;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> ids(m);
        std::iota(ids.begin(), ids.end(), 0);
        ASSERT_EQ(sorted, ids);
        for (int i = 0; i < m; ++i) ++count[i][matching[i]];
      }
      for (const auto& row : count)
        for (int x : row) EXPECT_EQ(x, lambda);
    }
}

TEST(CheckOrderingTest, Examples) {
  const auto k5 = search_decomposition(1, 5, {5, 5});
  ASSERT_TRUE(k5);
  EXPECT_TRUE(check_ordering(*k5, {0, 1}, 1));
  EXPECT_FALSE(check_ordering(*k5, {0, 1}, 2));  // 2 > 5 - 5 + 1
  EXPECT_FALSE(check_ordering(*k5, {0, 0}, 1));
  EXPECT_FALSE(check_ordering(*k5, {0, 1}, 0));

  CycleDecomposition tri;
  tri.context = {2, 1, 3};
  tri.cycles = {{V(0), V(1), V(2)}, {V(0), V(1), V(2)}};
  EXPECT_TRUE(check_ordering(tri, {0, 1}, 1));
  EXPECT_FALSE(check_ordering(tri, {0, 1}, 2));
}

TEST(RefinedDetachTest, FourFiveCycles) {
  const auto seed = search_decomposition(2, 5, {5, 5, 5, 5});
  ASSERT_TRUE(seed);
  const std::vector<LengthPartition> parts{{{1, 1}}};
  const auto r = refined_detach(1, 2, 5, {*seed, {0, 1, 2, 3}, 1}, parts);
  EXPECT_EQ(r.component_lengths(1), (std::vector<int>{5, 5}));
  expect_refined(r, 1, 2, 5, {5, 5, 5, 5}, parts);
  EXPECT_EQ(r.context, (DecompositionContext{1, 2, 5}));
}

TEST(RefinedDetachTest, TwoGovernedTriangles) {
  const auto seed = search_decomposition(2, 5, {3, 3, 3, 3, 4, 4});
  ASSERT_TRUE(seed);
  const int k = static_cast<int>(seed->cycles.size());
  std::vector<int> order;
  for (int i = 0; i < k && order.empty(); ++i)
    for (int j = 0; j < k && order.empty(); ++j) {
      if (i == j || seed->cycles[i].size() != 3 || seed->cycles[j].size() != 3) continue;
      std::vector<int> o{i, j};
      for (int t = 0; t < k; ++t)
        if (t != i && t != j) o.push_back(t);
      if (check_ordering(*seed, o, 2)) order = o;
    }
  ASSERT_FALSE(order.empty());
  const std::vector<LengthPartition> parts{{{2}}, {{1, 1}}};
  int stages = 0;
  RefineOptions o;
  o.observer = [&](int s, const StageSnapshot& snap) {
    EXPECT_EQ(s, ++stages);
    EXPECT_TRUE(snap.report.ok());
  };
  const auto r = refined_detach(1, 2, 5, {*seed, order, 2}, parts, o);
  EXPECT_EQ(stages, 2);
  std::vector<int> lengths;
  for (int i : order) lengths.push_back(static_cast<int>(seed->cycles[i].size()));
  expect_refined(r, 1, 2, 5, lengths, parts);
  EXPECT_EQ(r.component_lengths(1), (std::vector<int>{6}));
  EXPECT_EQ(r.component_lengths(2), (std::vector<int>{3, 3}));
}

TEST(RefinedDetachTest, OddModeKeepsOneFactor) {
  // 3K_4 with m = 3 on lambda = 1: degree 3 * 3 = 9 is odd.
  const auto seed = search_decomposition(3, 4, {4, 4, 4, 4});
  ASSERT_TRUE(seed);
  ASSERT_TRUE(seed->one_factor);
  const std::vector<LengthPartition> parts{{{1, 2}}};
  const auto r = refined_detach(1, 3, 4, {*seed, {0, 1, 2, 3}, 1}, parts);
  ASSERT_TRUE(r.one_factor);
  EXPECT_EQ(r.one_factor->size(), 6u);
  expect_refined(r, 1, 3, 4, {4, 4, 4, 4}, parts);
}

TEST(RefinedDetachTest, Rejections) {
  const auto seed = search_decomposition(2, 5, {5, 5, 5, 5});
  ASSERT_TRUE(seed);
  EXPECT_THROW(refined_detach(1, 2, 5, {*seed, {0, 1, 2, 3}, 2}, {{{1, 1}}, {{2}}}), std::invalid_argument);
  EXPECT_THROW(refined_detach(1, 2, 5, {*seed, {0, 1, 2, 3}, 1}, {{{1}}}), std::invalid_argument);
  EXPECT_THROW(refined_detach(1, 2, 5, {*seed, {0, 1, 2, 3}, 1}, {{{0, 2}}}), std::invalid_argument);
  EXPECT_THROW(refined_detach(1, 2, 5, {*seed, {0, 1, 2, 3}, 1}, {}), std::invalid_argument);
  EXPECT_THROW(refined_detach(1, 3, 5, {*seed, {0, 1, 2, 3}, 1}, {{{3}}}), std::invalid_argument);
}

// Random seeds of 2K_5 and 3K_4 with random governed partitions.
TEST(RefinedDetachTest, RandomInstances) {
  std::mt19937 rng(5);
  struct Host {
    int mu, n;
    std::vector<std::vector<int>> length_lists;
  };
  const std::vector<Host> hosts{
      {2, 5, {{5, 5, 5, 5}, {4, 4, 4, 4, 4}, {3, 3, 3, 3, 4, 4}, {3, 3, 4, 5, 5}}},
      {2, 4, {{4, 4, 4}, {3, 3, 3, 3}, {3, 3, 2, 2, 2}}},
  };
  int built = 0;
  for (const auto& h : hosts)
    for (const auto& ls : h.length_lists) {
      const auto seed = search_decomposition(h.mu, h.n, ls);
      ASSERT_TRUE(seed) << h.n;
      const int k = static_cast<int>(seed->cycles.size());
      for (int trial = 0; trial < 4; ++trial) {
        std::vector<int> order(k);
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        int N = 0;
        while (N < k && check_ordering(*seed, order, N + 1)) ++N;
        if (N == 0) continue;
        std::vector<LengthPartition> parts;
        std::vector<int> lengths;
        for (int i : order) lengths.push_back(static_cast<int>(seed->cycles[i].size()));
        for (int i = 0; i < N; ++i)
          parts.push_back({lengths[i] == 2 ? std::vector<int>{2} : oracle::random_composition(rng, 2)});
        const auto r = refined_detach(1, 2, h.n, {*seed, order, N}, parts);
        expect_refined(r, 1, 2, h.n, lengths, parts);
        ++built;
      }
    }
  EXPECT_GT(built, 10);
}

TEST(UniformRefinedTest, FiveCyclesOnFive) {
  const std::vector<LengthPartition> parts{{{1, 1}}, {{1, 1}}};
  const auto r = uniform_refined(5, 2, {5, 5}, parts);
  expect_refined(r, 1, 2, 5, {5, 5, 5, 5}, parts);
  EXPECT_EQ(r.component_lengths(1), (std::vector<int>{5, 5}));

  const std::vector<LengthPartition> three{{{1, 2}}, {{3}}};
  const auto t = uniform_refined(5, 3, {5, 5}, three);
  expect_refined(t, 1, 3, 5, {5, 5, 5, 5, 5, 5}, three);
  EXPECT_EQ(t.component_lengths(2), (std::vector<int>{15}));
}

TEST(UniformRefinedTest, SteinerTriples) {
  const std::vector<LengthPartition> parts(7, LengthPartition{{2}});
  const auto r = uniform_refined(7, 2, std::vector<int>(7, 3), parts);
  ASSERT_EQ(r.subgraphs.size(), 14u);
  expect_refined(r, 1, 2, 7, std::vector<int>(14, 3), parts);
  for (int i = 1; i <= 7; ++i) EXPECT_EQ(r.component_lengths(i), (std::vector<int>{6}));
}

TEST(UniformRefinedTest, Rejections) {
  EXPECT_THROW(uniform_refined(4, 2, {4, 2}, {{{2}}, {{2}}}), std::invalid_argument);
  EXPECT_THROW(uniform_refined(5, 2, {5, 4}, {{{2}}, {{2}}}), std::invalid_argument);
  EXPECT_THROW(uniform_refined(5, 2, {5, 5}, {{{2}}}), std::invalid_argument);
  EXPECT_THROW(uniform_refined(5, 2, {6, 4}, {{{2}}, {{2}}}), std::invalid_argument);
}

TEST(CorollarySmallTest, Examples) {
  EXPECT_EQ(decomposition_lengths(corollary_small(1, 2, 2, 1, 0, 0)), (std::vector<int>{4}));
  const auto a = corollary_small(1, 3, 3, 0, 3, 0);
  EXPECT_EQ(decomposition_lengths(a), (std::vector<int>{9, 9, 9}));
  EXPECT_EQ(oracle::check_equipartite(1, 3, 3, a), "");
  const auto b = corollary_small(1, 2, 4, 0, 4, 0);
  EXPECT_EQ(decomposition_lengths(b), (std::vector<int>{6, 6, 6, 6}));
  EXPECT_EQ(oracle::check_equipartite(1, 2, 4, b), "");
  EXPECT_THROW(corollary_small(1, 2, 2, 0, 0, 0), std::invalid_argument);
  EXPECT_THROW(corollary_small(1, 2, 5, 0, 0, 0), std::invalid_argument);
  EXPECT_THROW(corollary_small(1, 2, 4, 4, 0, 1), std::invalid_argument);
}

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "jdt/rsk.hpp"
#include "jdt/sampling.hpp"

namespace jdt {
namespace {

TEST(Rsk, HandExamples) {
  const auto id = rsk({1, 2, 3, 4});
  EXPECT_EQ(id.insertion, StandardTableau({{1, 2, 3, 4}}));
  EXPECT_EQ(id.recording, StandardTableau({{1, 2, 3, 4}}));

  const auto swap = rsk({2, 1});
  EXPECT_EQ(swap.insertion, StandardTableau({{1}, {2}}));
  EXPECT_EQ(swap.recording, StandardTableau({{1}, {2}}));

  const auto p132 = rsk({1, 3, 2});
  EXPECT_EQ(p132.insertion, StandardTableau({{1, 2}, {3}}));
  EXPECT_EQ(p132.recording, StandardTableau({{1, 2}, {3}}));

  EXPECT_THROW(rsk({1, 1}), InputError);
  EXPECT_THROW(rsk({0, 1}), InputError);
  EXPECT_THROW(rsk({1, 3}), InputError);
}

TEST(Rsk, ShapesAgreeAndBothStandard) {
  Rng rng(RngSpec{31, 0});
  for (int trial = 0; trial < 200; ++trial) {
    const auto sigma = sample_permutation(rng.between(1, 40), rng);
    const auto [p, q] = rsk(sigma);
    EXPECT_EQ(p.shape(), q.shape());
    EXPECT_FALSE(validate(p).has_value());
    EXPECT_FALSE(validate(q).has_value());
  }
}

TEST(Rsk, BijectiveOnS5) {
  std::vector<int> sigma{1, 2, 3, 4, 5};
  std::set<std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>>> pairs;
  do {
    const auto [p, q] = rsk(sigma);
    pairs.emplace(p.rows(), q.rows());
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  EXPECT_EQ(pairs.size(), 120u);
}

TEST(SchuetzenbergerStar, Examples) {
  EXPECT_EQ(schuetzenberger_star({2, 1, 3}), (std::vector<int>{1, 3, 2}));
  EXPECT_EQ(schuetzenberger_star({1}), std::vector<int>{1});
  Rng rng(RngSpec{32, 0});
  for (int i = 0; i < 100; ++i) {
    const auto sigma = sample_permutation(rng.between(1, 30), rng);
    EXPECT_EQ(schuetzenberger_star(schuetzenberger_star(sigma)), sigma);
  }
}

TEST(ShiftIdentity, Examples) {
  EXPECT_TRUE(check_shift_identity({2, 1}));
  EXPECT_EQ(standardize(jdt_slide(rsk({2, 1}).recording).after), StandardTableau({{1}}));
  EXPECT_TRUE(check_shift_identity({1, 2, 3}));
  EXPECT_THROW(check_shift_identity({1}), InputError);
}

TEST(ShiftIdentity, RandomSweep) {
  Rng rng(RngSpec{33, 0});
  for (int i = 0; i < 200; ++i)
    EXPECT_TRUE(check_shift_identity(sample_permutation(rng.between(2, 64), rng)));
}

TEST(PathEquivalence, ExhaustiveS4) {
  EXPECT_TRUE(path_equivalence_check({1}));
  std::vector<int> sigma{1, 2, 3, 4};
  do {
    EXPECT_TRUE(path_equivalence_check(sigma));
    EXPECT_TRUE(check_shift_identity(sigma));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
}

TEST(PathEquivalence, RandomSquareLengths) {
  Rng rng(RngSpec{34, 0});
  for (int i = 0; i < 100; ++i) EXPECT_TRUE(path_equivalence_check(sample_permutation(25, rng)));
}

TEST(PathEquivalence, LazyPathIsDifferenceOfRecordingShapes) {
  // q_p(Q(sigma)) = Q(sigma_1..sigma_p) \ Q(sigma_2..sigma_p).
  Rng rng(RngSpec{35, 0});
  for (int i = 0; i < 50; ++i) {
    const auto sigma = sample_permutation(rng.between(2, 20), rng);
    const auto q = lazy_jdt_path(rsk(sigma).recording).q;
    for (std::size_t p = 1; p <= sigma.size(); ++p) {
      const std::vector<int> head(sigma.begin(), sigma.begin() + static_cast<long>(p));
      const std::vector<int> tail(sigma.begin() + 1, sigma.begin() + static_cast<long>(p));
      const auto big = rsk_word(head).recording.shape();
      const auto small = rsk_word(tail).recording.shape();
      Position diff{};
      for (int y = 1; y <= big.num_rows(); ++y)
        if (big.row_length(y) != small.row_length(y)) diff = Position{big.row_length(y), y};
      EXPECT_EQ(q[p - 1], diff);
    }
  }
}

TEST(Greene, Examples) {
  EXPECT_EQ(greene_shape({1, 2, 3}, 3), YoungDiagram({3}));
  EXPECT_EQ(greene_shape({3, 2, 1}, 3), YoungDiagram({1, 1, 1}));
  EXPECT_EQ(greene_shape({1, 3, 2}, 3), YoungDiagram({2, 1}));
  EXPECT_EQ(greene_shape({1, 3, 2}, 2), YoungDiagram({2}));
  EXPECT_THROW(greene_shape({1, 2}, 3), InputError);
  EXPECT_THROW(greene_shape({1, 1}, 2), InputError);
}

TEST(Greene, MatchesInsertionOnPrefixes) {
  Rng rng(RngSpec{36, 0});
  for (int i = 0; i < 60; ++i) {
    const auto word = sample_permutation(rng.between(1, 30), rng);
    for (int p = 1; p <= static_cast<int>(word.size()); ++p) {
      const std::vector<int> prefix(word.begin(), word.begin() + p);
      EXPECT_EQ(greene_shape(word, p), rsk_word(prefix).recording.shape());
    }
  }
}

}  // namespace
}  // namespace jdt

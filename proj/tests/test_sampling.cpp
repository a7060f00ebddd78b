#include <gtest/gtest.h>

#include <map>

#include "fixtures.hpp"
#include "jdt/sampling.hpp"
#include "jdt/stats.hpp"

namespace jdt {
namespace {

TEST(Rng, StreamSeedsAreDistinctAndStable) {
  EXPECT_NE(stream_seed({1, 0}), stream_seed({1, 1}));
  EXPECT_NE(stream_seed({1, 0}), stream_seed({2, 0}));
  EXPECT_EQ(stream_seed({7, 3}), stream_seed({7, 3}));
  // Frozen so that a change of the mixing function is noticed.
  EXPECT_EQ(mix64(0), 0xE220A8397B1DCDAFULL);
}

TEST(Rng, BelowStaysInRange) {
  Rng rng(RngSpec{3, 4});
  std::vector<int> hist(7, 0);
  for (int i = 0; i < 70000; ++i) ++hist[rng.below(7)];
  for (int h : hist) EXPECT_NEAR(h, 10000, 500);
  for (int i = 0; i < 1000; ++i) {
    const double u = rng.uniform01();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

TEST(HookWalk, SingleBox) {
  for (std::uint64_t s = 0; s < 5; ++s)
    EXPECT_EQ(sample_uniform_syt(YoungDiagram({1}), RngSpec{s, 0}), StandardTableau({{1}}));
  EXPECT_THROW(sample_uniform_syt(YoungDiagram(), RngSpec{}), InputError);
}

TEST(HookWalk, OutputsAreValidWithExactShape) {
  Rng rng(RngSpec{17, 2});
  for (int i = 0; i < 200; ++i) {
    const YoungDiagram shape({rng.between(4, 9), rng.between(2, 4), rng.between(1, 2)});
    const auto t = sample_uniform_syt(shape, rng);
    EXPECT_EQ(t.shape(), shape);
    EXPECT_FALSE(validate(t).has_value());
  }
  const auto big = sample_uniform_syt(YoungDiagram::square(60), RngSpec{1, 1});
  EXPECT_FALSE(validate(big).has_value());
}

TEST(HookWalk, Deterministic) {
  const auto shape = YoungDiagram::square(12);
  EXPECT_EQ(to_text(sample_uniform_syt(shape, RngSpec{99, 5})),
            to_text(sample_uniform_syt(shape, RngSpec{99, 5})));
  EXPECT_NE(to_text(sample_uniform_syt(shape, RngSpec{99, 5})),
            to_text(sample_uniform_syt(shape, RngSpec{99, 6})));
}

// Frequencies over the support given by enumeration; 10^4 draws.
void expect_uniform(const YoungDiagram& shape, std::uint64_t seed) {
  const auto support = enumerate_syt(shape);
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < support.size(); ++i) index[support[i].reading_word()] = i;
  std::vector<std::uint64_t> counts(support.size(), 0);
  Rng rng(RngSpec{seed, 0});
  const int draws = 10000;
  for (int i = 0; i < draws; ++i) {
    const auto t = sample_uniform_syt(shape, rng);
    auto it = index.find(t.reading_word());
    ASSERT_NE(it, index.end());
    ++counts[it->second];
  }
  for (auto c : counts)
    EXPECT_NEAR(static_cast<double>(c) / draws, 1.0 / static_cast<double>(support.size()), 0.02);
  EXPECT_LT(chi_square_uniform(counts),
            chi_square_quantile(static_cast<double>(support.size() - 1), 0.999));
}

TEST(HookWalk, UniformOnSquare2) { expect_uniform(YoungDiagram({2, 2}), 101); }
TEST(HookWalk, UniformOnShape32) { expect_uniform(YoungDiagram({3, 2}), 102); }

// A single chi-square test at the 0.999 level fails on about one stream in a
// thousand. Across many streams the exceedance rate at 0.95 should be 5%.
TEST(HookWalk, ChiSquareCalibratedAcrossStreams) {
  const YoungDiagram shape({2, 2});
  const auto support = enumerate_syt(shape);
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < support.size(); ++i) index[support[i].reading_word()] = i;
  const double limit = chi_square_quantile(static_cast<double>(support.size() - 1), 0.95);
  const int streams = 400;
  int over = 0;
  for (int s = 0; s < streams; ++s) {
    Rng rng(RngSpec{103, static_cast<std::uint64_t>(s)});
    std::vector<std::uint64_t> counts(support.size(), 0);
    for (int d = 0; d < 2000; ++d) ++counts[index.at(sample_uniform_syt(shape, rng).reading_word())];
    if (chi_square_uniform(counts) >= limit) ++over;
  }
  // Binomial(400, 0.05) has mean 20 and sd about 4.4.
  EXPECT_GE(over, 5);
  EXPECT_LE(over, 38);
}

TEST(Pieri, Square2WithTwoSurfersIsForced) {
  Rng rng(RngSpec{8, 0});
  for (int i = 0; i < 200; ++i)
    EXPECT_EQ(sample_uniform_pieri(YoungDiagram::square(2), 2, rng), fixtures::square2_rows());
}

TEST(Pieri, KOneIsUnconditioned) {
  Rng rng(RngSpec{9, 0});
  PieriSamplerStats stats;
  for (int i = 0; i < 1000; ++i)
    EXPECT_TRUE(is_pieri(sample_uniform_pieri(YoungDiagram::square(3), 1, rng, &stats), 1));
  EXPECT_EQ(stats.attempts, stats.accepted);
  EXPECT_THROW(sample_uniform_pieri(YoungDiagram::square(2), 5, rng), InputError);
}

TEST(Pieri, AcceptanceNearInverseFactorial) {
  // N = 16 and N = 81 give k = floor(N^{1/4}) = 2 and 3.
  for (auto [side, k] : {std::pair{16, 2}, std::pair{81, 3}}) {
    Rng rng(RngSpec{10, static_cast<std::uint64_t>(side)});
    PieriSamplerStats stats;
    const int draws = side == 16 ? 400 : 40;
    for (int i = 0; i < draws; ++i) sample_uniform_pieri(YoungDiagram::square(side), k, rng, &stats);
    const double target = k == 2 ? 0.5 : 1.0 / 6.0;
    EXPECT_GT(stats.acceptance_rate(), target / 2) << "N=" << side;
    EXPECT_LT(stats.acceptance_rate(), target * 2) << "N=" << side;
  }
}

TEST(Permutation, SmallCases) {
  EXPECT_EQ(sample_permutation(1, RngSpec{}), std::vector<int>{1});
  EXPECT_EQ(sample_permutation(30, RngSpec{4, 4}), sample_permutation(30, RngSpec{4, 4}));
  EXPECT_THROW(sample_permutation(0, RngSpec{}), InputError);
  Rng rng(RngSpec{12, 0});
  int identity = 0;
  for (int i = 0; i < 10000; ++i) identity += sample_permutation(2, rng)[0] == 1;
  EXPECT_NEAR(identity / 10000.0, 0.5, 0.02);
}

TEST(Permutation, UniformOverS3) {
  Rng rng(RngSpec{13, 0});
  std::map<std::vector<int>, std::uint64_t> counts;
  for (int i = 0; i < 12000; ++i) ++counts[sample_permutation(3, rng)];
  ASSERT_EQ(counts.size(), 6u);
  std::vector<std::uint64_t> c;
  for (auto& [k, v] : counts) c.push_back(v);
  EXPECT_LT(chi_square_uniform(c), chi_square_quantile(5, 0.999));
}

}  // namespace
}  // namespace jdt

#include "ppe/complexity.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "test_support.hpp"

namespace ppe {
namespace {

GrayImage Neighbours(int up, int right, int down, int left) {
  GrayImage img(8, 8, 60);
  img(2, 3) = static_cast<std::uint8_t>(up);
  img(3, 4) = static_cast<std::uint8_t>(right);
  img(4, 3) = static_cast<std::uint8_t>(down);
  img(3, 2) = static_cast<std::uint8_t>(left);
  return img;
}

// Direct population standard deviation of the six differences.
double DirectEpsilon(int up, int right, int down, int left) {
  const double r[6] = {
      static_cast<double>(std::abs(up - right)),
      static_cast<double>(std::abs(up - down)),
      static_cast<double>(std::abs(up - left)),
      static_cast<double>(std::abs(right - down)),
      static_cast<double>(std::abs(right - left)),
      static_cast<double>(std::abs(down - left)),
  };
  double mean = 0;
  for (double v : r) mean += v / 6;
  double var = 0;
  for (double v : r) var += (v - mean) * (v - mean) / 6;
  return std::sqrt(var);
}

TEST(LocalComplexityTest, EqualNeighboursAreZero) {
  EXPECT_EQ(LocalComplexity(Neighbours(9, 9, 9, 9), {3, 3}), 0.0);
}

TEST(LocalComplexityTest, WorkedExample) {
  // Oracle: differences (10,20,30,10,20,10), variance 500/9.
  const GrayImage img = Neighbours(10, 20, 30, 40);
  EXPECT_NEAR(LocalComplexity(img, {3, 3}), 7.453559924999299, 1e-12);
  EXPECT_EQ(ComplexityKey(img, {3, 3}), 2000);  // 36 * 500/9
}

TEST(LocalComplexityTest, AlternatingExtremes) {
  // Oracle: differences (255,0,255,255,0,255), variance 14450.
  const GrayImage img = Neighbours(0, 255, 0, 255);
  EXPECT_NEAR(LocalComplexity(img, {3, 3}), 120.20815280171308, 1e-9);
  EXPECT_EQ(ComplexityKey(img, {3, 3}), 36 * 14450);
}

TEST(LocalComplexityTest, KeyOrdersLikeEpsilon) {
  std::mt19937_64 gen(3);
  std::uniform_int_distribution<int> px(0, 255);
  for (int trial = 0; trial < 2000; ++trial) {
    const int a[4] = {px(gen), px(gen), px(gen), px(gen)};
    const int b[4] = {px(gen), px(gen), px(gen), px(gen)};
    const auto ia = Neighbours(a[0], a[1], a[2], a[3]);
    const auto ib = Neighbours(b[0], b[1], b[2], b[3]);
    const double ea = DirectEpsilon(a[0], a[1], a[2], a[3]);
    const double eb = DirectEpsilon(b[0], b[1], b[2], b[3]);
    EXPECT_NEAR(LocalComplexity(ia, {3, 3}), ea, 1e-9);
    if (std::abs(ea - eb) > 1e-9) {
      EXPECT_EQ(ComplexityKey(ia, {3, 3}) < ComplexityKey(ib, {3, 3}), ea < eb);
    }
  }
}

TEST(OrderedSequenceTest, ConstantImageKeepsRasterOrder) {
  const GrayImage img(16, 12, 128);
  for (const Parity p : {Parity::kCross, Parity::kDot}) {
    const auto seq = OrderedPpeSequence(img, p);
    const auto sites = EmbeddableSites(img, p);
    ASSERT_EQ(seq.size(), sites.size());
    for (std::size_t k = 0; k < seq.size(); ++k) {
      EXPECT_EQ(seq[k].site, sites[k]);
      EXPECT_EQ(seq[k].epsilon, 0.0);
    }
  }
}

TEST(OrderedSequenceTest, LowerComplexityFirst) {
  GrayImage img(12, 12, 100);
  // Make the cross site (5,6)'s neighbourhood busy; every other site stays
  // flat except those sharing a neighbour with it.
  img(4, 6) = 10;
  img(5, 7) = 200;
  const auto seq = OrderedPpeSequence(img, Parity::kCross);
  ASSERT_FALSE(seq.empty());
  EXPECT_EQ(seq.front().epsilon, 0.0);
  const auto busy = std::find_if(seq.begin(), seq.end(), [](const PeRecord& r) {
    return r.site == Site{5, 6};
  });
  ASSERT_NE(busy, seq.end());
  EXPECT_GT(busy->epsilon, 5.0);
  for (auto it = seq.begin(); it != busy; ++it) {
    EXPECT_LE(it->complexity_key, busy->complexity_key);
  }
}

TEST(OrderedSequenceTest, PermutationSortedStableAndTargetInvariant) {
  std::mt19937_64 gen(17);
  for (int trial = 0; trial < 8; ++trial) {
    const GrayImage img = testing::SmoothImage(48, 40, gen(), 5.0);
    for (const Parity p : {Parity::kCross, Parity::kDot}) {
      const auto seq = OrderedPpeSequence(img, p);
      auto sites = EmbeddableSites(img, p);
      ASSERT_EQ(seq.size(), sites.size());
      for (std::size_t k = 1; k < seq.size(); ++k) {
        const auto& a = seq[k - 1];
        const auto& b = seq[k];
        ASSERT_LE(a.complexity_key, b.complexity_key);
        if (a.complexity_key == b.complexity_key) {
          EXPECT_LT(LinearIndex(img.width(), a.site),
                    LinearIndex(img.width(), b.site));
        }
      }
      std::vector<std::size_t> got;
      for (const auto& r : seq) got.push_back(LinearIndex(img.width(), r.site));
      std::sort(got.begin(), got.end());
      for (std::size_t k = 0; k < sites.size(); ++k) {
        EXPECT_EQ(got[k], LinearIndex(img.width(), sites[k]));
      }

      GrayImage scrambled = img;
      for (const Site s : sites) {
        scrambled(s.row, s.col) = static_cast<std::uint8_t>(gen() & 0xFF);
      }
      const auto again = OrderedPpeSequence(scrambled, p);
      for (std::size_t k = 0; k < seq.size(); ++k) {
        EXPECT_EQ(again[k].site, seq[k].site);
        EXPECT_EQ(again[k].base(), seq[k].base());
      }
    }
  }
}

}  // namespace
}  // namespace ppe

//
// Copyright 2026 The mtnoise Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "mtnoise/random.h"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

namespace mtnoise {
namespace {

TEST(RandomSourceTest, SameSeedAndStreamGiveSameSequence) {
  RandomSource a(42, 7);
  RandomSource b(42, 7);
  for (int i = 0; i < 1000; ++i) ASSERT_EQ(a.NextU64(), b.NextU64());
}

TEST(RandomSourceTest, StreamsAndSeedsAreDistinct) {
  RandomSource base(42, 0);
  RandomSource other_stream(42, 1);
  RandomSource other_seed(43, 0);
  const auto x = base.NextU64();
  EXPECT_NE(x, other_stream.NextU64());
  EXPECT_NE(x, other_seed.NextU64());
  EXPECT_NE(DeriveSeed(1, 2), DeriveSeed(2, 1));
}

TEST(RandomSourceTest, SplitIsDeterministic) {
  const RandomSource parent(5, 3);
  RandomSource a = parent.Split(9);
  RandomSource b = parent.Split(9);
  RandomSource c = parent.Split(10);
  const auto va = a.NextU64();
  EXPECT_EQ(va, b.NextU64());
  EXPECT_NE(va, c.NextU64());
}

TEST(RandomSourceTest, UniformDoubleInUnitInterval) {
  RandomSource rng(1);
  double sum = 0.0;
  constexpr int kDraws = 100000;
  for (int i = 0; i < kDraws; ++i) {
    const double u = rng.UniformDouble();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
  }
  // Mean of U(0,1): 0.5, sd of the sample mean sqrt(1/12/N).
  EXPECT_NEAR(sum / kDraws, 0.5, 3.0 * std::sqrt(1.0 / 12.0 / kDraws));
}

TEST(RandomSourceTest, UniformIndexIsUniform) {
  RandomSource rng(2);
  constexpr int kBins = 7;
  constexpr int kDraws = 140000;
  std::vector<int> counts(kBins, 0);
  for (int i = 0; i < kDraws; ++i) {
    const auto k = rng.UniformIndex(kBins);
    ASSERT_LT(k, static_cast<std::uint64_t>(kBins));
    ++counts[k];
  }
  double chi2 = 0.0;
  const double expected = static_cast<double>(kDraws) / kBins;
  for (int c : counts) chi2 += (c - expected) * (c - expected) / expected;
  // Chi-square critical value, 6 degrees of freedom, alpha = 0.001.
  EXPECT_LT(chi2, 22.458);
}

TEST(RandomSourceTest, UniformIndexOfOneIsZero) {
  RandomSource rng(3);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(rng.UniformIndex(1), 0u);
}

}  // namespace
}  // namespace mtnoise

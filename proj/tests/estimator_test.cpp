// Copyright 2026 The edgedispatch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software distributed under the License is
// distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and limitations under the License.

#include "edgedispatch/errors.hpp"
#include "edgedispatch/estimator.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace edgedispatch;

namespace {

constexpr LambdaId      kLambda{0};
constexpr DestinationId kDest{1};

Weight ms(double aMillis) {
  return Weight::finite(Time::ms(aMillis));
}

} // namespace

TEST(WeightTable, FirstSampleInitializes) {
  WeightTable myTable;
  EXPECT_FALSE(myTable.weight(kLambda, kDest).has_value());
  EXPECT_EQ(myTable.observe(kLambda, kDest, Time::ms(20)), ms(20));
  EXPECT_EQ(myTable.weight(kLambda, kDest), ms(20));
}

TEST(WeightTable, HalfAlphaAverages) {
  WeightTable myTable(0.5);
  myTable.observe(kLambda, kDest, Time::ms(10));
  EXPECT_EQ(myTable.observe(kLambda, kDest, Time::ms(20)), ms(15));
}

TEST(WeightTable, UnitAlphaIgnoresSamples) {
  WeightTable myTable(1.0);
  myTable.observe(kLambda, kDest, Time::ms(10));
  EXPECT_EQ(myTable.observe(kLambda, kDest, Time::ms(20)), ms(10));
}

TEST(WeightTable, DefaultAlpha) {
  WeightTable myTable;
  myTable.observe(kLambda, kDest, Time::ms(10));
  // 0.9 * 10 + 0.1 * 100
  EXPECT_EQ(myTable.observe(kLambda, kDest, Time::ms(100)), ms(19));
}

TEST(WeightTable, WeightsArePerLambdaAndDestination) {
  WeightTable myTable;
  myTable.observe(LambdaId{0}, DestinationId{1}, Time::ms(10));
  myTable.observe(LambdaId{1}, DestinationId{1}, Time::ms(30));
  myTable.observe(LambdaId{0}, DestinationId{2}, Time::ms(50));
  EXPECT_EQ(myTable.weight(LambdaId{0}, DestinationId{1}), ms(10));
  EXPECT_EQ(myTable.weight(LambdaId{1}, DestinationId{1}), ms(30));
  EXPECT_EQ(myTable.weight(LambdaId{0}, DestinationId{2}), ms(50));
  EXPECT_FALSE(myTable.weight(LambdaId{1}, DestinationId{2}));
}

TEST(WeightTable, MarkCongestedShadowsCurrent) {
  WeightTable myTable;
  myTable.observe(kLambda, kDest, Time::ms(12));
  myTable.markCongested(kLambda, kDest);
  const auto* myEntry = myTable.entry(kLambda, kDest);
  ASSERT_NE(myEntry, nullptr);
  EXPECT_EQ(myEntry->current, Weight::infinite());
  EXPECT_EQ(myEntry->shadow, Time::ms(12));
  EXPECT_TRUE(myEntry->congested);
}

TEST(WeightTable, MarkCongestedNeverMeasured) {
  WeightTable myTable;
  myTable.markCongested(kLambda, kDest);
  const auto* myEntry = myTable.entry(kLambda, kDest);
  ASSERT_NE(myEntry, nullptr);
  EXPECT_EQ(myEntry->current, Weight::infinite());
  EXPECT_FALSE(myEntry->shadow.has_value());
}

TEST(WeightTable, MarkCongestedIdempotent) {
  WeightTable myTable;
  myTable.observe(kLambda, kDest, Time::ms(12));
  myTable.markCongested(kLambda, kDest);
  myTable.markCongested(kLambda, kDest);
  EXPECT_EQ(myTable.entry(kLambda, kDest)->shadow, Time::ms(12));
  EXPECT_EQ(myTable.clearCongestion(kLambda, kDest), ms(12));
}

TEST(WeightTable, ClearRestoresShadow) {
  WeightTable myTable;
  myTable.observe(kLambda, kDest, Time::ms(12));
  myTable.markCongested(kLambda, kDest);
  EXPECT_EQ(myTable.clearCongestion(kLambda, kDest), ms(12));
  EXPECT_EQ(myTable.weight(kLambda, kDest), ms(12));
  EXPECT_FALSE(myTable.congested(kLambda, kDest));
}

TEST(WeightTable, ClearWithoutShadowRevertsToUnmeasured) {
  WeightTable myTable;
  myTable.markCongested(kLambda, kDest);
  EXPECT_FALSE(myTable.clearCongestion(kLambda, kDest).has_value());
  EXPECT_FALSE(myTable.weight(kLambda, kDest).has_value());
  // the next sample initializes the weight again
  EXPECT_EQ(myTable.observe(kLambda, kDest, Time::ms(8)), ms(8));
}

TEST(WeightTable, ObserveWhileCongestedThrows) {
  WeightTable myTable;
  myTable.observe(kLambda, kDest, Time::ms(12));
  myTable.markCongested(kLambda, kDest);
  EXPECT_THROW(myTable.observe(kLambda, kDest, Time::ms(5)), ObservationWhileCongested);
  EXPECT_EQ(myTable.entry(kLambda, kDest)->shadow, Time::ms(12));
}

TEST(WeightTable, ClearWhenNotCongestedThrows) {
  WeightTable myTable;
  EXPECT_THROW(myTable.clearCongestion(kLambda, kDest), NotCongested);
  myTable.observe(kLambda, kDest, Time::ms(12));
  EXPECT_THROW(myTable.clearCongestion(kLambda, kDest), NotCongested);
}

TEST(WeightTable, RoundTripIsBitExact) {
  std::mt19937_64 myGen(7);
  for (int i = 0; i < 2000; ++i) {
    WeightTable myTable(0.9);
    const auto  mySamples = 1 + myGen() % 20;
    for (std::uint64_t k = 0; k < mySamples; ++k) {
      myTable.observe(kLambda, kDest, Time::us(static_cast<std::int64_t>(1 + myGen() % 100000)));
    }
    const auto myBefore = myTable.weight(kLambda, kDest);
    myTable.markCongested(kLambda, kDest);
    const auto myRestored = myTable.clearCongestion(kLambda, kDest);
    ASSERT_EQ(myRestored, myBefore);
    ASSERT_EQ(myTable.weight(kLambda, kDest), myBefore);
  }
}

TEST(WeightTable, EstimateStaysWithinSampleRange) {
  std::mt19937_64 myGen(11);
  for (const double myAlpha : {0.1, 0.5, 0.9, 0.99}) {
    WeightTable myTable(myAlpha);
    const std::int64_t myLo = 2000;
    const std::int64_t myHi = 40000;
    for (int i = 0; i < 20000; ++i) {
      const auto mySample =
          Time::us(myLo + static_cast<std::int64_t>(myGen() % static_cast<std::uint64_t>(myHi - myLo + 1)));
      const auto myPrev = myTable.weight(kLambda, kDest);
      const auto myNew  = myTable.observe(kLambda, kDest, mySample).value();
      ASSERT_GE(myNew, Time::us(myLo));
      ASSERT_LE(myNew, Time::us(myHi));
      if (myPrev) {
        const auto myOld = myPrev->value();
        ASSERT_GE(myNew, std::min(myOld, mySample));
        ASSERT_LE(myNew, std::max(myOld, mySample));
      }
    }
  }
}

TEST(WeightTable, FiniteWeightsStayPositive) {
  WeightTable myTable(0.5);
  myTable.observe(kLambda, kDest, Time::us(1));
  EXPECT_GT(myTable.observe(kLambda, kDest, Time::zero()).value(), Time::zero());
  WeightTable myFresh;
  EXPECT_GT(myFresh.observe(kLambda, kDest, Time::zero()).value(), Time::zero());
}

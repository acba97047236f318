// Copyright 2026 The edgedispatch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software distributed under the License is
// distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and limitations under the License.

#include "edgedispatch/fairness.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

using namespace edgedispatch;

namespace {

std::vector<Time> weightsMs(std::initializer_list<double> aMs) {
  std::vector<Time> ret;
  for (const auto myMs : aMs) {
    ret.push_back(Time::ms(myMs));
  }
  return ret;
}

struct NaiveStep {
  std::size_t                selected; // 0-based
  std::vector<std::int64_t>  deficits;
  std::vector<std::uint64_t> counts;
};

// Linear scan for the smallest (deficit, index); integer microseconds.
std::vector<NaiveStep> naiveReplay(const std::vector<Time>& aWeights, std::size_t aSteps) {
  std::vector<std::int64_t>  myDeficits(aWeights.size(), 0);
  std::vector<std::uint64_t> myCounts(aWeights.size(), 0);
  std::vector<NaiveStep>     ret;
  for (std::size_t n = 0; n < aSteps; ++n) {
    std::size_t myBest = 0;
    for (std::size_t i = 1; i < aWeights.size(); ++i) {
      if (myDeficits[i] < myDeficits[myBest]) {
        myBest = i;
      }
    }
    myDeficits[myBest] += aWeights[myBest].micros();
    ++myCounts[myBest];
    ret.push_back({myBest, myDeficits, myCounts});
  }
  return ret;
}

FairnessSuiteConfig smallConfig(std::uint64_t aSeed) {
  FairnessSuiteConfig ret;
  ret.seed            = aSeed;
  ret.runs            = 50;
  ret.steps           = 2000;
  ret.convergenceSets = 20;
  return ret;
}

} // namespace

TEST(ReplaySchedule, FrozenTwoThreeFour) {
  const auto myWeights  = weightsMs({2, 3, 4});
  const auto mySchedule = replaySchedule(myWeights, 13);
  ASSERT_EQ(mySchedule.size(), 13u);
  const auto& myLast = mySchedule.back();
  EXPECT_EQ(myLast.step, 13u);
  EXPECT_EQ(myLast.counts, (std::vector<std::uint64_t>{6, 4, 3}));
  EXPECT_EQ(myLast.deficits, weightsMs({12, 12, 12}));
  // the deficits are equal for the first time at the last step
  for (std::size_t n = 0; n + 1 < mySchedule.size(); ++n) {
    const auto& myDeficits = mySchedule[n].deficits;
    EXPECT_FALSE(std::all_of(myDeficits.begin(), myDeficits.end(),
                             [&](Time aDeficit) { return aDeficit == myDeficits.front(); }))
        << "step " << n + 1;
  }
}

TEST(ReplaySchedule, MatchesNaiveReplay) {
  std::mt19937_64 myGen(5);
  for (int myRun = 0; myRun < 300; ++myRun) {
    std::vector<Time> myWeights;
    const auto        myCount = 1 + myGen() % 8;
    for (std::uint64_t i = 0; i < myCount; ++i) {
      // coarse values so that ties are frequent
      myWeights.push_back(Time::us(static_cast<std::int64_t>(500 * (1 + myGen() % 12))));
    }
    const auto mySchedule = replaySchedule(myWeights, 500);
    const auto myOracle   = naiveReplay(myWeights, 500);
    ASSERT_EQ(mySchedule.size(), myOracle.size());
    for (std::size_t n = 0; n < myOracle.size(); ++n) {
      ASSERT_EQ(mySchedule[n].step, n + 1);
      ASSERT_EQ(mySchedule[n].selected.value, static_cast<std::int64_t>(myOracle[n].selected + 1))
          << "run " << myRun << " step " << n + 1;
      ASSERT_EQ(mySchedule[n].counts, myOracle[n].counts);
      for (std::size_t i = 0; i < myWeights.size(); ++i) {
        ASSERT_EQ(mySchedule[n].deficits[i].micros(), myOracle[n].deficits[i]);
      }
    }
  }
}

TEST(ReplaySchedule, FormattedTable) {
  const auto myWeights = weightsMs({2, 3, 4});
  const auto myText    = formatSchedule(myWeights, replaySchedule(myWeights, 13));
  EXPECT_NE(myText.find("weights (ms): 2 3 4"), std::string::npos);
  EXPECT_NE(myText.find("  13     1       12       12       12     6     4     3"), std::string::npos);
  EXPECT_EQ(std::count(myText.begin(), myText.end(), '\n'), 15);
}

TEST(ConvergenceStep, TableExample) {
  EXPECT_EQ(convergenceStep(weightsMs({2, 3, 4})), 13u);
}

TEST(ConvergenceStep, AgainstDirectFormula) {
  std::mt19937_64 myGen(9);
  for (int i = 0; i < 1000; ++i) {
    std::vector<Time> myWeights;
    std::int64_t      myLcm = 1;
    const auto        myCount = 1 + myGen() % 5;
    for (std::uint64_t k = 0; k < myCount; ++k) {
      const auto myMicros = static_cast<std::int64_t>(1 + myGen() % 3000);
      myWeights.push_back(Time::us(myMicros));
      myLcm = std::lcm(myLcm, myMicros);
    }
    std::uint64_t myExpected = 0;
    for (const auto& myWeight : myWeights) {
      myExpected += static_cast<std::uint64_t>(myLcm / myWeight.micros());
    }
    ASSERT_EQ(convergenceStep(myWeights), myExpected);
  }
}

TEST(ConvergenceStep, RationalWeightsScaleOut) {
  // 1/2, 1/4 and 3/8 ms: T = 1.5 ms, n* = 3 + 6 + 4
  EXPECT_EQ(convergenceStep(weightsMs({0.5, 0.25, 0.375})), 13u);
}

TEST(ConvergenceStep, OverflowIsReported) {
  std::vector<Time> myPrimes;
  for (const std::int64_t myPrime : {1000003, 1000033, 1000037, 1000039}) {
    myPrimes.push_back(Time::us(myPrime));
  }
  EXPECT_FALSE(convergenceStep(myPrimes).has_value());
  EXPECT_FALSE(convergenceStep(weightsMs({0, 2})).has_value());
}

TEST(RandomRationalWeights, RangeAndDenominators) {
  FairnessSuiteConfig myConfig;
  std::set<std::int64_t> myResidues;
  for (std::uint64_t mySeed = 0; mySeed < 500; ++mySeed) {
    for (const auto& myWeight : randomRationalWeights(mySeed, 10, myConfig)) {
      ASSERT_GE(myWeight, myConfig.minWeight);
      ASSERT_LE(myWeight, myConfig.maxWeight);
      // k / q ms with q in {1, 2, 4, 5, 8} is a multiple of 125 or 200 us
      ASSERT_TRUE(myWeight.micros() % 125 == 0 or myWeight.micros() % 200 == 0);
      myResidues.insert(myWeight.micros() % 1000);
    }
  }
  // fractional parts actually occur
  EXPECT_GT(myResidues.size(), 5u);
  EXPECT_EQ(randomRationalWeights(3, 6, myConfig), randomRationalWeights(3, 6, myConfig));
}

TEST(FairnessSuites, SmallConfigurationsPass) {
  for (const std::uint64_t mySeed : {1u, 2u, 3u}) {
    for (const auto& myResult : runFairnessSuites(smallConfig(mySeed))) {
      EXPECT_TRUE(myResult.passed) << myResult.name << ": " << myResult.detail;
      EXPECT_EQ(myResult.violations, 0u);
      EXPECT_GT(myResult.checks, 0u);
    }
  }
}

TEST(FairnessSuites, CheckCountsCoverEveryStep) {
  const auto myConfig = smallConfig(4);
  EXPECT_EQ(checkDeficitSpread(myConfig).checks, myConfig.runs * myConfig.steps);
  EXPECT_EQ(checkWeightedServiceSpread(myConfig).checks, myConfig.runs * myConfig.steps);
  EXPECT_EQ(checkLongTermConvergence(myConfig).checks, myConfig.convergenceSets);
}

// The bounds themselves, checked on the naive replay.
TEST(FairnessSuites, BoundsHoldOnNaiveReplay) {
  FairnessSuiteConfig myConfig;
  for (std::uint64_t mySeed = 0; mySeed < 100; ++mySeed) {
    const auto myWeights = randomRationalWeights(mySeed, 2 + mySeed % 9, myConfig);
    const auto myMax     = std::max_element(myWeights.begin(), myWeights.end())->micros();
    for (const auto& myStep : naiveReplay(myWeights, 3000)) {
      const auto [myLo, myHi] = std::minmax_element(myStep.deficits.begin(), myStep.deficits.end());
      ASSERT_LE(*myHi - *myLo, myMax);
      std::int64_t myServiceLo = INT64_MAX;
      std::int64_t myServiceHi = INT64_MIN;
      for (std::size_t i = 0; i < myWeights.size(); ++i) {
        const auto myService = static_cast<std::int64_t>(myStep.counts[i]) * myWeights[i].micros();
        myServiceLo          = std::min(myServiceLo, myService);
        myServiceHi          = std::max(myServiceHi, myService);
      }
      ASSERT_LE(myServiceHi - myServiceLo, myMax);
    }
  }
}

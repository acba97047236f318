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

#include "edgedispatch/estimator.hpp"
#include "edgedispatch/policy.hpp"
#include "edgedispatch/random.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <numeric>
#include <sstream>

namespace edgedispatch {

namespace {

constexpr LambdaId theLambda{0};

std::uint64_t splitmix(std::uint64_t aValue) {
  aValue += 0x9e3779b97f4a7c15ULL;
  aValue = (aValue ^ (aValue >> 30)) * 0xbf58476d1ce4e5b9ULL;
  aValue = (aValue ^ (aValue >> 27)) * 0x94d049bb133111ebULL;
  return aValue ^ (aValue >> 31);
}

// Drives round-robin with frozen weights; aVisit is called after every
// selection with the 0-based index of the selected destination.
void runFrozen(
    std::span<const Time>                                                aWeights,
    std::size_t                                                          aSteps,
    const std::function<bool(std::size_t, const Policy&, std::size_t)>& aVisit) {
  std::vector<DestinationId> myDests;
  for (std::size_t i = 0; i < aWeights.size(); ++i) {
    myDests.push_back(DestinationId{static_cast<std::int64_t>(i + 1)});
  }
  PolicyConfig myConfig;
  myConfig.kind = PolicyKind::RoundRobin;
  WeightTable myTable(myConfig.alpha);
  Policy      myPolicy(myConfig, theLambda, myDests, 0);
  for (std::size_t i = 0; i < aWeights.size(); ++i) {
    myPolicy.activate(myTable, myDests[i], aWeights[i]);
  }
  for (std::size_t n = 1; n <= aSteps; ++n) {
    const auto mySel = myPolicy.select(myTable, Time::zero());
    if (not aVisit(n, myPolicy, static_cast<std::size_t>(mySel.destination.value - 1))) {
      return;
    }
  }
}

std::string describeWeights(std::span<const Time> aWeights) {
  std::stringstream myStream;
  myStream << "weights (us) {";
  for (std::size_t i = 0; i < aWeights.size(); ++i) {
    myStream << (i ? "," : "") << aWeights[i].micros();
  }
  myStream << "}";
  return myStream.str();
}

PropertySuiteResult finish(PropertySuiteResult aResult) {
  aResult.passed = aResult.violations == 0 and aResult.checks > 0;
  return aResult;
}

std::size_t drawCount(Rng& aRng, std::size_t aMin, std::size_t aMax) {
  return aMin + aRng.below(aMax - aMin + 1);
}

} // namespace

std::vector<ScheduleStep> replaySchedule(std::span<const Time> aWeights,
                                         std::size_t           aSteps) {
  std::vector<ScheduleStep>  ret;
  std::vector<std::uint64_t> myCounts(aWeights.size(), 0);
  runFrozen(aWeights,
            aSteps,
            [&](std::size_t aStep, const Policy& aPolicy, std::size_t aIndex) {
              ++myCounts[aIndex];
              ScheduleStep myStep;
              myStep.step     = aStep;
              myStep.selected = DestinationId{static_cast<std::int64_t>(aIndex + 1)};
              myStep.deficits.resize(aWeights.size());
              for (const auto& [myDest, myDeficit] : aPolicy.ledger().decode()) {
                myStep.deficits[static_cast<std::size_t>(myDest.value - 1)] = myDeficit;
              }
              myStep.counts = myCounts;
              ret.push_back(std::move(myStep));
              return true;
            });
  return ret;
}

std::optional<std::uint64_t> convergenceStep(std::span<const Time> aWeights) {
  std::uint64_t myLcm = 1;
  for (const auto& myWeight : aWeights) {
    if (myWeight <= Time::zero()) {
      return std::nullopt;
    }
    const auto myValue = static_cast<std::uint64_t>(myWeight.micros());
    if (__builtin_mul_overflow(myLcm / std::gcd(myLcm, myValue), myValue, &myLcm)) {
      return std::nullopt;
    }
  }
  std::uint64_t ret = 0;
  for (const auto& myWeight : aWeights) {
    if (__builtin_add_overflow(
            ret, myLcm / static_cast<std::uint64_t>(myWeight.micros()), &ret)) {
      return std::nullopt;
    }
  }
  return ret;
}

std::string formatSchedule(std::span<const Time>            aWeights,
                           const std::vector<ScheduleStep>& aSchedule) {
  std::stringstream myStream;
  myStream << "weights (ms):";
  for (const auto& myWeight : aWeights) {
    myStream << ' ' << myWeight.millis();
  }
  myStream << "\n" << std::setw(4) << "n" << std::setw(6) << "sel";
  for (std::size_t i = 0; i < aWeights.size(); ++i) {
    myStream << std::setw(9) << ("D" + std::to_string(i + 1));
  }
  for (std::size_t i = 0; i < aWeights.size(); ++i) {
    myStream << std::setw(6) << ("s" + std::to_string(i + 1));
  }
  myStream << '\n';
  for (const auto& myStep : aSchedule) {
    myStream << std::setw(4) << myStep.step << std::setw(6)
             << myStep.selected.value;
    for (const auto& myDeficit : myStep.deficits) {
      myStream << std::setw(9) << myDeficit.millis();
    }
    for (const auto& myCount : myStep.counts) {
      myStream << std::setw(6) << myCount;
    }
    myStream << '\n';
  }
  return myStream.str();
}

std::vector<Time> randomRationalWeights(std::uint64_t              aSeed,
                                        std::size_t                aCount,
                                        const FairnessSuiteConfig& aConfig) {
  static constexpr std::int64_t myDenominators[] = {1, 2, 4, 5, 8};
  Rng                           myRng(splitmix(aSeed));
  std::vector<Time>             ret;
  for (std::size_t i = 0; i < aCount; ++i) {
    const auto myDen = myDenominators[myRng.below(std::size(myDenominators))];
    // numerators k such that minWeight <= k / den ms <= maxWeight
    const auto myLo = (aConfig.minWeight.micros() * myDen + 999) / 1000;
    const auto myHi = aConfig.maxWeight.micros() * myDen / 1000;
    const auto myNum =
        myLo + static_cast<std::int64_t>(
                   myRng.below(static_cast<std::size_t>(myHi - myLo + 1)));
    ret.push_back(Time::us(myNum * 1000 / myDen));
  }
  return ret;
}

PropertySuiteResult checkDeficitSpread(const FairnessSuiteConfig& aConfig) {
  PropertySuiteResult ret;
  ret.name = "deficit spread bounded by max weight";
  for (std::size_t myRun = 0; myRun < aConfig.runs; ++myRun) {
    Rng        mySizeRng(splitmix(aConfig.seed * 1000003 + myRun));
    const auto myWeights = randomRationalWeights(
        aConfig.seed * 1000003 + myRun,
        drawCount(mySizeRng, aConfig.minDestinations, aConfig.maxDestinations),
        aConfig);
    const auto myMax = *std::max_element(myWeights.begin(), myWeights.end());
    runFrozen(myWeights,
              aConfig.steps,
              [&](std::size_t aStep, const Policy& aPolicy, std::size_t) {
                ++ret.checks;
                const auto& myLedger = aPolicy.ledger();
                const auto  mySpread =
                    myLedger.maxDeficit() - myLedger.minDeficit();
                if (mySpread > myMax) {
                  if (ret.violations++ == 0) {
                    ret.detail = "run " + std::to_string(myRun) + " step " +
                                 std::to_string(aStep) + ": " +
                                 describeWeights(myWeights);
                  }
                  return false;
                }
                return true;
              });
  }
  return finish(ret);
}

PropertySuiteResult checkWeightedServiceSpread(const FairnessSuiteConfig& aConfig) {
  PropertySuiteResult ret;
  ret.name = "weighted service spread bounded by max weight";
  for (std::size_t myRun = 0; myRun < aConfig.runs; ++myRun) {
    Rng        mySizeRng(splitmix(aConfig.seed * 1000003 + myRun));
    const auto myWeights = randomRationalWeights(
        aConfig.seed * 1000003 + myRun,
        drawCount(mySizeRng, aConfig.minDestinations, aConfig.maxDestinations),
        aConfig);
    const auto myMax = *std::max_element(myWeights.begin(), myWeights.end());
    std::vector<std::int64_t> myService(myWeights.size(), 0);
    runFrozen(myWeights,
              aConfig.steps,
              [&](std::size_t aStep, const Policy&, std::size_t aIndex) {
                ++ret.checks;
                myService[aIndex] += myWeights[aIndex].micros();
                const auto [myLo, myHi] =
                    std::minmax_element(myService.begin(), myService.end());
                if (*myHi - *myLo > myMax.micros()) {
                  if (ret.violations++ == 0) {
                    ret.detail = "run " + std::to_string(myRun) + " step " +
                                 std::to_string(aStep) + ": " +
                                 describeWeights(myWeights);
                  }
                  return false;
                }
                return true;
              });
  }
  return finish(ret);
}

PropertySuiteResult checkLongTermConvergence(const FairnessSuiteConfig& aConfig) {
  PropertySuiteResult ret;
  ret.name = "exact convergence to reciprocal-weight shares";
  std::uint64_t myDraw = 0;
  for (std::size_t mySet = 0; mySet < aConfig.convergenceSets; ++mySet) {
    // redraw until the convergence step is small enough to simulate
    std::vector<Time>            myWeights;
    std::optional<std::uint64_t> myStar;
    do {
      ++myDraw;
      Rng mySizeRng(splitmix(aConfig.seed * 7919 + myDraw));
      myWeights = randomRationalWeights(
          aConfig.seed * 7919 + myDraw,
          drawCount(mySizeRng,
                    aConfig.minDestinations,
                    std::max(aConfig.minDestinations,
                             aConfig.convergenceMaxDestinations)),
          aConfig);
      myStar = convergenceStep(myWeights);
    } while (not myStar or *myStar > aConfig.convergenceMaxSteps);

    std::int64_t myLcm = 1;
    for (const auto& myWeight : myWeights) {
      myLcm = std::lcm(myLcm, myWeight.micros());
    }

    std::vector<std::uint64_t> myCounts(myWeights.size(), 0);
    std::vector<Time>          myDeficits(myWeights.size());
    runFrozen(myWeights,
              *myStar,
              [&](std::size_t aStep, const Policy& aPolicy, std::size_t aIndex) {
                ++myCounts[aIndex];
                if (aStep == *myStar) {
                  for (const auto& [myDest, myDeficit] :
                       aPolicy.ledger().decode()) {
                    myDeficits[static_cast<std::size_t>(myDest.value - 1)] =
                        myDeficit;
                  }
                }
                return true;
              });

    ++ret.checks;
    bool myOk = true;
    for (std::size_t i = 0; i < myWeights.size(); ++i) {
      myOk = myOk and myDeficits[i] == myDeficits[0];
      myOk = myOk and myCounts[i] == static_cast<std::uint64_t>(
                                         myLcm / myWeights[i].micros());
    }
    if (not myOk and ret.violations++ == 0) {
      ret.detail = "set " + std::to_string(mySet) + " at n*=" +
                   std::to_string(*myStar) + ": " + describeWeights(myWeights);
    }
  }
  return finish(ret);
}

std::vector<PropertySuiteResult>
runFairnessSuites(const FairnessSuiteConfig& aConfig) {
  return {checkDeficitSpread(aConfig),
          checkWeightedServiceSpread(aConfig),
          checkLongTermConvergence(aConfig)};
}

} // namespace edgedispatch

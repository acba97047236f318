// Copyright 2026 The edgedispatch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software distributed under the License is
// distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and limitations under the License.

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include "edgedispatch/deficit_ledger.hpp"
#include "edgedispatch/errors.hpp"
#include "edgedispatch/estimator.hpp"
#include "edgedispatch/fairness.hpp"
#include "edgedispatch/metrics.hpp"
#include "edgedispatch/policy.hpp"
#include "edgedispatch/scenario.hpp"
#include "edgedispatch/simulator.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace edgedispatch;

namespace {

struct Outcome {
  bool        passed = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double secondsSince(Clock::time_point aStart) {
  return std::chrono::duration<double>(Clock::now() - aStart).count();
}

int theFailures = 0;

void criterion(int aNumber, const std::string& aName, const std::function<Outcome()>& aBody) {
  const auto myStart = Clock::now();
  Outcome    myOutcome;
  try {
    myOutcome = aBody();
  } catch (const std::exception& aErr) {
    myOutcome = {false, std::string("exception: ") + aErr.what()};
  }
  const auto mySeconds = secondsSince(myStart);
  theFailures += myOutcome.passed ? 0 : 1;
  std::cout << (myOutcome.passed ? "PASS" : "FAIL") << " [" << aNumber << "] " << aName
            << ": " << myOutcome.detail << " (" << std::fixed << std::setprecision(2)
            << mySeconds << " s)" << std::endl;
}

std::vector<DestinationId> numbered(std::size_t aCount) {
  std::vector<DestinationId> ret;
  for (std::size_t i = 0; i < aCount; ++i) {
    ret.push_back(DestinationId{static_cast<std::int64_t>(i + 1)});
  }
  return ret;
}

// Round-robin with frozen weights, destination i + 1 weighing aWeights[i].
struct FrozenRoundRobin {
  explicit FrozenRoundRobin(const std::vector<Time>& aWeights)
      : policy(PolicyConfig{}, LambdaId{0}, numbered(aWeights.size()), 0) {
    for (std::size_t i = 0; i < aWeights.size(); ++i) {
      policy.activate(table, DestinationId{static_cast<std::int64_t>(i + 1)}, aWeights[i]);
    }
  }

  std::size_t next() {
    return static_cast<std::size_t>(policy.select(table, Time::zero()).destination.value - 1);
  }

  WeightTable table;
  Policy      policy;
};

// Index of the smallest deficit, lowest index on ties.
std::size_t naiveArgmin(const std::vector<std::int64_t>& aDeficits) {
  return static_cast<std::size_t>(
      std::min_element(aDeficits.begin(), aDeficits.end()) - aDeficits.begin());
}

// Rational weights k / q ms in [1, 50] ms with q in {1, 2, 4, 5, 8}, all
// integral in microseconds.
std::vector<Time> drawWeights(std::mt19937_64& aGen, std::size_t aMin, std::size_t aMax) {
  static constexpr std::array<std::int64_t, 5> myDens{1, 2, 4, 5, 8};
  const auto myCount = std::uniform_int_distribution<std::size_t>(aMin, aMax)(aGen);
  std::vector<Time> ret;
  for (std::size_t i = 0; i < myCount; ++i) {
    const auto myDen = myDens[std::uniform_int_distribution<std::size_t>(0, 4)(aGen)];
    const auto myNum = std::uniform_int_distribution<std::int64_t>(myDen, 50 * myDen)(aGen);
    ret.push_back(Time::us(myNum * 1000 / myDen));
  }
  return ret;
}

// Spread bounds checked against a naive deficit array for randomized runs.
struct SpreadOracleResult {
  std::uint64_t steps               = 0;
  std::uint64_t selectionMismatches = 0;
  std::uint64_t deficitViolations   = 0;
  std::uint64_t serviceViolations   = 0;
};

const SpreadOracleResult& spreadOracle() {
  static const SpreadOracleResult ret = [] {
    SpreadOracleResult myResult;
    std::mt19937_64    myGen(20240601);
    for (int myRun = 0; myRun < 1000; ++myRun) {
      const auto myWeights = drawWeights(myGen, 2, 10);
      const auto myMax = std::max_element(myWeights.begin(), myWeights.end())->micros();
      FrozenRoundRobin          myRr(myWeights);
      std::vector<std::int64_t> myDeficits(myWeights.size(), 0);
      std::vector<std::int64_t> myService(myWeights.size(), 0);
      for (int myStep = 0; myStep < 10000; ++myStep) {
        ++myResult.steps;
        const auto myExpected = naiveArgmin(myDeficits);
        const auto myChosen   = myRr.next();
        myResult.selectionMismatches += myChosen != myExpected ? 1 : 0;
        myDeficits[myChosen] += myWeights[myChosen].micros();
        myService[myChosen] += myWeights[myChosen].micros();
        const auto [myDLo, myDHi] = std::minmax_element(myDeficits.begin(), myDeficits.end());
        myResult.deficitViolations += *myDHi - *myDLo > myMax ? 1 : 0;
        const auto [mySLo, mySHi] = std::minmax_element(myService.begin(), myService.end());
        myResult.serviceViolations += *mySHi - *mySLo > myMax ? 1 : 0;
      }
    }
    return myResult;
  }();
  return ret;
}

std::string suiteDetail(const PropertySuiteResult& aResult, double aSeconds) {
  std::ostringstream myOut;
  myOut << aResult.checks << " steps checked, " << aResult.violations << " violations in "
        << std::fixed << std::setprecision(2) << aSeconds << " s";
  if (not aResult.detail.empty()) {
    myOut << " (" << aResult.detail << ")";
  }
  return myOut.str();
}

Outcome criterionTableReplay() {
  const auto              myStart = Clock::now();
  const std::vector<Time> myWeights{Time::ms(2), Time::ms(3), Time::ms(4)};
  const auto              myStep = convergenceStep(myWeights);
  // T = lcm(2, 3, 4) = 12 ms, n* = 12/2 + 12/3 + 12/4
  if (not myStep or *myStep != 13) {
    return {false, "convergence step is not 13"};
  }
  const auto mySchedule = replaySchedule(myWeights, 13);
  if (mySchedule.size() != 13) {
    return {false, "schedule has " + std::to_string(mySchedule.size()) + " steps"};
  }
  std::vector<std::int64_t> myDeficits(3, 0);
  for (const auto& myRow : mySchedule) {
    const auto myExpected = naiveArgmin(myDeficits);
    myDeficits[myExpected] += myWeights[myExpected].micros();
    if (myRow.selected.value != static_cast<std::int64_t>(myExpected + 1)) {
      return {false, "step " + std::to_string(myRow.step) + " selected " +
                         std::to_string(myRow.selected.value)};
    }
  }
  const auto& myLast = mySchedule.back();
  const bool  myCounts =
      myLast.counts == std::vector<std::uint64_t>{6, 4, 3};
  const bool myEqual = myLast.deficits ==
                       std::vector<Time>{Time::ms(12), Time::ms(12), Time::ms(12)};
  return {myCounts and myEqual and secondsSince(myStart) < 1.0,
          "counts (" + std::to_string(myLast.counts[0]) + "," +
              std::to_string(myLast.counts[1]) + "," + std::to_string(myLast.counts[2]) +
              "), deficits (" + std::to_string(myLast.deficits[0].micros()) + "," +
              std::to_string(myLast.deficits[1].micros()) + "," +
              std::to_string(myLast.deficits[2].micros()) + ") us at n*=13"};
}

Outcome criterionDeficitSpread() {
  FairnessSuiteConfig myConfig;
  myConfig.runs            = 1000;
  myConfig.minDestinations = 2;
  myConfig.maxDestinations = 10;
  myConfig.steps           = 10000;
  const auto myStart  = Clock::now();
  const auto myResult = checkDeficitSpread(myConfig);
  const auto mySeconds = secondsSince(myStart);
  const auto& myOracle = spreadOracle();
  const bool  myPassed = myResult.passed and myResult.violations == 0 and
                        myResult.checks == 1000u * 10000u and mySeconds < 30.0 and
                        myOracle.selectionMismatches == 0 and myOracle.deficitViolations == 0;
  return {myPassed, "suite " + suiteDetail(myResult, mySeconds) + "; naive oracle " +
                        std::to_string(myOracle.steps) + " steps, " +
                        std::to_string(myOracle.selectionMismatches) + " selection mismatches, " +
                        std::to_string(myOracle.deficitViolations) + " violations"};
}

Outcome criterionWeightedService() {
  FairnessSuiteConfig myConfig;
  const auto          myStart  = Clock::now();
  const auto          myResult = checkWeightedServiceSpread(myConfig);
  const auto          mySeconds = secondsSince(myStart);
  const auto&         myOracle = spreadOracle();
  const bool myPassed = myResult.passed and myResult.violations == 0 and
                        myResult.checks == 1000u * 10000u and myOracle.serviceViolations == 0;
  return {myPassed, "suite " + suiteDetail(myResult, mySeconds) + "; naive oracle " +
                        std::to_string(myOracle.serviceViolations) + " violations"};
}

Outcome criterionConvergence() {
  FairnessSuiteConfig myConfig;
  myConfig.convergenceSets = 100;
  const auto myResult      = checkLongTermConvergence(myConfig);

  // independent sets: T = lcm of the weights, s_i = T / w_i, n* = sum s_i
  std::mt19937_64 myGen(77);
  int             mySets     = 0;
  int             myFailures = 0;
  std::uint64_t   myLargest  = 0;
  while (mySets < 100) {
    const auto   myWeights = drawWeights(myGen, 2, 5);
    std::int64_t myLcm     = 1;
    bool         myOverflow = false;
    for (const auto& myWeight : myWeights) {
      myLcm = std::lcm(myLcm, myWeight.micros());
      myOverflow = myOverflow or myLcm > (std::int64_t{1} << 40);
    }
    if (myOverflow) {
      continue;
    }
    std::uint64_t myStar = 0;
    for (const auto& myWeight : myWeights) {
      myStar += static_cast<std::uint64_t>(myLcm / myWeight.micros());
    }
    if (myStar > 200000) {
      continue;
    }
    ++mySets;
    myLargest = std::max(myLargest, myStar);
    const auto myLibraryStar = convergenceStep(myWeights);
    FrozenRoundRobin           myRr(myWeights);
    std::vector<std::uint64_t> myCounts(myWeights.size(), 0);
    for (std::uint64_t n = 0; n < myStar; ++n) {
      ++myCounts[myRr.next()];
    }
    bool myOk = myLibraryStar == myStar;
    for (std::size_t i = 0; i < myWeights.size(); ++i) {
      myOk = myOk and myCounts[i] == static_cast<std::uint64_t>(myLcm / myWeights[i].micros());
    }
    const auto myDecoded = myRr.policy.ledger().decode();
    myOk = myOk and myDecoded.size() == myWeights.size();
    for (const auto& [myDest, myDeficit] : myDecoded) {
      myOk = myOk and myDeficit == Time::us(myLcm);
    }
    myFailures += myOk ? 0 : 1;
  }
  return {myResult.passed and myResult.checks == 100 and myFailures == 0,
          "suite " + std::to_string(myResult.checks) + " sets, " +
              std::to_string(myResult.violations) + " violations; independent 100 sets, " +
              std::to_string(myFailures) + " failures, largest n*=" + std::to_string(myLargest)};
}

Outcome criterionRandomProportional() {
  const std::vector<std::int64_t> myMs{1, 2, 4};
  PolicyConfig                    myConfig;
  myConfig.kind = PolicyKind::RandomProportional;
  WeightTable myTable(myConfig.alpha);
  Policy      myPolicy(myConfig, LambdaId{0}, numbered(3), 12345);
  for (std::size_t i = 0; i < myMs.size(); ++i) {
    const auto myDest = myPolicy.select(myTable, Time::zero()).destination;
    myPolicy.onResponse(myTable, myDest,
                        Time::ms(static_cast<double>(myMs[static_cast<std::size_t>(myDest.value - 1)])),
                        Time::zero());
  }
  std::array<std::uint64_t, 3> myCounts{};
  for (int i = 0; i < 1'000'000; ++i) {
    ++myCounts[static_cast<std::size_t>(myPolicy.select(myTable, Time::zero()).destination.value - 1)];
  }
  double myWorst = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      const auto myEmpirical = static_cast<double>(myCounts[i]) / static_cast<double>(myCounts[j]);
      const auto myExpected  = static_cast<double>(myMs[j]) / static_cast<double>(myMs[i]);
      myWorst = std::max(myWorst, std::abs(myEmpirical / myExpected - 1.0));
    }
  }
  std::ostringstream myOut;
  myOut << "counts (" << myCounts[0] << "," << myCounts[1] << "," << myCounts[2]
        << "), worst ratio error " << std::setprecision(3) << myWorst * 100 << "%";
  return {myWorst <= 0.01, myOut.str()};
}

// Reference ledger: unsorted (destination, absolute deficit) pairs.
struct ReferenceLedger {
  std::vector<std::pair<std::int64_t, std::int64_t>> items;

  bool has(std::int64_t aDest) const {
    return std::any_of(items.begin(), items.end(),
                       [&](const auto& aItem) { return aItem.first == aDest; });
  }
  std::int64_t& at(std::int64_t aDest) {
    return std::find_if(items.begin(), items.end(),
                        [&](const auto& aItem) { return aItem.first == aDest; })
        ->second;
  }
  void admit(std::int64_t aDest, std::int64_t aInitial) {
    if (not items.empty()) {
      std::int64_t myMin = items.front().second;
      for (const auto& myItem : items) {
        myMin = std::min(myMin, myItem.second);
      }
      for (auto& myItem : items) {
        myItem.second -= myMin;
      }
    }
    items.emplace_back(aDest, aInitial);
  }
  void evict(std::int64_t aDest) {
    items.erase(std::find_if(items.begin(), items.end(),
                             [&](const auto& aItem) { return aItem.first == aDest; }));
  }
  // ordered by (deficit, id)
  std::vector<std::pair<std::int64_t, std::int64_t>> ordered() const {
    auto ret = items;
    std::sort(ret.begin(), ret.end(), [](const auto& aLhs, const auto& aRhs) {
      return std::pair(aLhs.second, aLhs.first) < std::pair(aRhs.second, aRhs.first);
    });
    return ret;
  }
};

bool agrees(const DeficitLedger& aLedger, const ReferenceLedger& aReference) {
  const auto  myExpected = aReference.ordered();
  const auto& myNodes    = aLedger.nodes();
  if (myNodes.size() != myExpected.size()) {
    return false;
  }
  std::int64_t myRunning = 0;
  for (std::size_t i = 0; i < myNodes.size(); ++i) {
    myRunning += myNodes[i].delta.micros();
    if (myNodes[i].delta < Time::zero() or myNodes[i].dest.value != myExpected[i].first or
        myRunning != myExpected[i].second) {
      return false;
    }
  }
  return myExpected.empty() or aLedger.popMin().value == myExpected.front().first;
}

struct LedgerExplorer {
  static constexpr std::array<std::int64_t, 4> kWeights{2000, 2000, 3000, 5000};

  std::uint64_t sequences  = 0;
  std::uint64_t mismatches = 0;

  void explore(const DeficitLedger& aLedger, const ReferenceLedger& aReference, int aDepth) {
    ++sequences;
    if (not agrees(aLedger, aReference)) {
      ++mismatches;
      return;
    }
    if (aDepth == 0) {
      return;
    }
    for (std::size_t i = 0; i < kWeights.size(); ++i) {
      const auto          myId = static_cast<std::int64_t>(i + 1);
      const DestinationId myDest{myId};
      if (aReference.has(myId)) {
        {
          auto myLedger    = aLedger;
          auto myReference = aReference;
          myLedger.charge(myDest, Time::us(kWeights[i]));
          myReference.at(myId) += kWeights[i];
          explore(myLedger, myReference, aDepth - 1);
        }
        {
          auto myLedger    = aLedger;
          auto myReference = aReference;
          myLedger.evict(myDest);
          myReference.evict(myId);
          explore(myLedger, myReference, aDepth - 1);
        }
      } else {
        for (const std::int64_t myInitial : {std::int64_t{0}, kWeights[i]}) {
          auto myLedger    = aLedger;
          auto myReference = aReference;
          myLedger.admit(myDest, Time::us(myInitial));
          myReference.admit(myId, myInitial);
          explore(myLedger, myReference, aDepth - 1);
        }
      }
    }
  }
};

// Sequences of length <= aDepth: each state with m admitted destinations
// out of 4 offers 2m (charge or evict) + 2(4 - m) (admit with two initial
// deficits) = 8 operations.
std::uint64_t expectedSequences(int aDepth) {
  std::uint64_t ret   = 0;
  std::uint64_t level = 1;
  for (int d = 0; d <= aDepth; ++d) {
    ret += level;
    level *= 8;
  }
  return ret;
}

Outcome criterionLedger() {
  // verbatim encoding example
  DeficitLedger myExample;
  for (std::int64_t myId = 1; myId <= 4; ++myId) {
    myExample.admit(DestinationId{myId}, Time::zero());
  }
  myExample.charge(DestinationId{1}, Time::ms(4));
  myExample.charge(DestinationId{2}, Time::ms(6));
  myExample.charge(DestinationId{3}, Time::ms(7));
  myExample.charge(DestinationId{4}, Time::ms(7));
  const bool myEncoding =
      myExample.deltas() == std::vector<Time>{Time::ms(4), Time::ms(2), Time::ms(1), Time::ms(0)};

  LedgerExplorer myExplorer;
  myExplorer.explore(DeficitLedger{}, ReferenceLedger{}, 8);
  const bool myExhaustive = myExplorer.mismatches == 0 and
                            myExplorer.sequences == expectedSequences(8);

  std::mt19937_64 myGen(99);
  std::uint64_t   myRandomMismatches = 0;
  for (int mySeq = 0; mySeq < 100000; ++mySeq) {
    const auto      myDests  = static_cast<std::int64_t>(1 + myGen() % 8);
    const auto      myLength = 1 + myGen() % 40;
    DeficitLedger   myLedger;
    ReferenceLedger myReference;
    bool            myOk = true;
    for (std::uint64_t k = 0; k < myLength and myOk; ++k) {
      const auto myId     = static_cast<std::int64_t>(1 + myGen() % static_cast<std::uint64_t>(myDests));
      const auto myAmount = static_cast<std::int64_t>(myGen() % 5000);
      switch (myGen() % 4) {
        case 0:
          if (not myReference.has(myId)) {
            myLedger.admit(DestinationId{myId}, Time::us(myAmount));
            myReference.admit(myId, myAmount);
          }
          break;
        case 1:
          if (myReference.has(myId)) {
            myLedger.evict(DestinationId{myId});
            myReference.evict(myId);
          }
          break;
        default:
          if (not myReference.items.empty()) {
            const auto myMin = myReference.ordered().front().first;
            myOk = myLedger.popMin().value == myMin;
            myLedger.charge(DestinationId{myMin}, Time::us(myAmount));
            myReference.at(myMin) += myAmount;
          }
          break;
      }
      myOk = myOk and agrees(myLedger, myReference);
    }
    myRandomMismatches += myOk ? 0 : 1;
  }

  return {myEncoding and myExhaustive and myRandomMismatches == 0,
          std::string("encoding {4,6,7,7} -> {4,2,1,0} ") + (myEncoding ? "ok" : "WRONG") +
              "; exhaustive " + std::to_string(myExplorer.sequences) + " sequences, " +
              std::to_string(myExplorer.mismatches) + " mismatches; random 100000 sequences, " +
              std::to_string(myRandomMismatches) + " mismatches"};
}

Outcome criterionBlackout() {
  const auto myScenario = ringTreeScenario();
  if (myScenario.policy.kind != PolicyKind::RoundRobin or myScenario.congestion.empty()) {
    return {false, "ring-tree scenario lacks round-robin or congestion windows"};
  }
  const auto    myResult     = simulate(myScenario);
  std::uint64_t myViolations = 0;
  for (const auto& myWindow : myScenario.congestion) {
    for (const auto& myDispatch : myResult.dispatches) {
      if (myDispatch.router == myWindow.router and
          myDispatch.destination == myWindow.destination and
          myDispatch.at >= myWindow.from and myDispatch.at < myWindow.to) {
        ++myViolations;
      }
    }
  }
  std::map<std::tuple<RouterId, LambdaId, DestinationId>, std::optional<Weight>> myBefore;
  std::uint64_t myRestored   = 0;
  std::uint64_t myMismatches = 0;
  std::uint64_t myUnmeasured = 0;
  for (const auto& myEntry : myResult.congestionLog) {
    const auto myKey = std::tuple(myEntry.router, myEntry.lambda, myEntry.destination);
    if (myEntry.on) {
      myBefore[myKey] = myEntry.weight;
      continue;
    }
    const auto it = myBefore.find(myKey);
    if (it == myBefore.end() or it->second != myEntry.weight) {
      ++myMismatches;
    } else if (myEntry.weight and myEntry.weight->isFinite()) {
      ++myRestored;
    } else {
      ++myUnmeasured;
    }
  }
  const bool myPassed = myViolations == 0 and myMismatches == 0 and myRestored > 0 and
                        myResult.congestionLog.size() == 2 * myScenario.congestion.size();
  return {myPassed, std::to_string(myScenario.congestion.size()) + " windows, " +
                        std::to_string(myViolations) + " dispatches inside windows, " +
                        std::to_string(myRestored) + " weights restored bit-exactly, " +
                        std::to_string(myUnmeasured) + " never measured, " +
                        std::to_string(myMismatches) + " mismatches"};
}

Outcome criterionHerd() {
  std::ostringstream myOut;
  bool               myPassed = true;
  myOut << std::fixed << std::setprecision(1);
  for (std::uint64_t mySeed = 1; mySeed <= 5; ++mySeed) {
    std::map<PolicyKind, LatencyStats> myStats;
    for (const auto myKind : {PolicyKind::RoundRobin, PolicyKind::LeastImpedance}) {
      auto myScenario        = lineScenario();
      myScenario.seed        = mySeed;
      myScenario.policy.kind = myKind;
      const auto myRun       = simulate(myScenario);
      const auto mySummary   = summarize(myRun.trace, myRun.snapshot);
      if (not mySummary.latency) {
        return {false, "no completed requests for seed " + std::to_string(mySeed)};
      }
      myStats[myKind] = *mySummary.latency;
    }
    const auto& myRr = myStats.at(PolicyKind::RoundRobin);
    const auto& myLi = myStats.at(PolicyKind::LeastImpedance);
    myPassed = myPassed and myRr.meanMs <= myLi.meanMs and myRr.p95 <= myLi.p95;
    myOut << (mySeed > 1 ? "; " : "") << "seed " << mySeed << " mean " << myRr.meanMs << "/"
          << myLi.meanMs << " p95 " << myRr.p95.millis() << "/" << myLi.p95.millis();
  }
  return {myPassed, "rr/li ms: " + myOut.str()};
}

Outcome criterionDeterminism() {
  std::uint64_t myRuns = 0;
  for (const auto* myName : {"line", "ring-tree"}) {
    for (const auto myKind :
         {PolicyKind::RoundRobin, PolicyKind::LeastImpedance, PolicyKind::RandomProportional}) {
      auto myScenario        = builtinScenario(myName);
      myScenario.policy.kind = myKind;
      myScenario.seed        = 42;
      std::string myTraces[2];
      for (auto& myTrace : myTraces) {
        std::ostringstream myOut;
        writeTrace(myOut, simulate(myScenario).trace);
        myTrace = myOut.str();
      }
      if (myTraces[0] != myTraces[1]) {
        return {false, std::string(myName) + " " + std::string(toString(myKind)) +
                           " traces differ"};
      }
      ++myRuns;
    }
  }
  return {true, std::to_string(myRuns) + " scenario/policy pairs, identical traces"};
}

} // namespace

int main() {
  criterion(1, "frozen-weight schedule replay", criterionTableReplay);
  criterion(2, "deficit spread bound", criterionDeficitSpread);
  criterion(3, "weighted service spread bound", criterionWeightedService);
  criterion(4, "exact long-term convergence", criterionConvergence);
  criterion(5, "random-proportional long-term shares", criterionRandomProportional);
  criterion(6, "deficit ledger oracle equivalence", criterionLedger);
  criterion(7, "congestion blackout and weight restore", criterionBlackout);
  criterion(8, "round-robin avoids herding", criterionHerd);
  criterion(9, "deterministic traces", criterionDeterminism);
  std::cout << (theFailures == 0 ? "all criteria passed" : std::to_string(theFailures) + " criteria failed")
            << std::endl;
  return theFailures == 0 ? 0 : 1;
}

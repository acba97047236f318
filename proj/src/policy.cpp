// Copyright 2026 The edgedispatch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software distributed under the License is
// distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and limitations under the License.

#include "edgedispatch/policy.hpp"

#include "edgedispatch/errors.hpp"

#include <algorithm>
#include <sstream>

namespace edgedispatch {

std::string_view toString(PolicyKind aKind) noexcept {
  switch (aKind) {
    case PolicyKind::LeastImpedance:
      return "li";
    case PolicyKind::RandomProportional:
      return "rp";
    case PolicyKind::RoundRobin:
      return "rr";
  }
  return "?";
}

PolicyKind policyKindFromString(std::string_view aName) {
  if (aName == "li") {
    return PolicyKind::LeastImpedance;
  }
  if (aName == "rp") {
    return PolicyKind::RandomProportional;
  }
  if (aName == "rr") {
    return PolicyKind::RoundRobin;
  }
  throw std::invalid_argument("unknown policy '" + std::string(aName) +
                              "', expected one of li, rp, rr");
}

Policy::Policy(const PolicyConfig&        aConfig,
               LambdaId                   aLambda,
               std::vector<DestinationId> aDestinations,
               std::uint64_t              aSeed)
    : theConfig(aConfig)
    , theLambda(aLambda)
    , theDestinations(std::move(aDestinations))
    , theRng(aSeed) {
  if (theConfig.backoffMin <= Time::zero()) {
    throw std::invalid_argument("minimum backoff must be positive");
  }
  std::sort(theDestinations.begin(), theDestinations.end());
  if (std::adjacent_find(theDestinations.begin(), theDestinations.end()) !=
      theDestinations.end()) {
    throw std::invalid_argument("duplicate destination");
  }
  for (const auto& myDest : theDestinations) {
    theStates.emplace(myDest, DestinationState{theConfig.backoffMin,
                                               Time::zero()});
  }
}

SelectionOutcome Policy::select(const WeightTable& aWeights, Time aNow) {
  switch (theConfig.kind) {
    case PolicyKind::LeastImpedance:
      return selectLeastImpedance(aWeights);
    case PolicyKind::RandomProportional:
      return selectRandomProportional(aWeights);
    case PolicyKind::RoundRobin:
      return selectRoundRobin(aWeights, aNow);
  }
  throw std::logic_error("invalid policy kind");
}

std::optional<DestinationId>
Policy::bootstrapCandidate(const WeightTable& aWeights) {
  for (const auto& myDest : theDestinations) {
    auto& myState = theStates.at(myDest);
    if (not myState.dispatched and
        not aWeights.weight(theLambda, myDest).has_value()) {
      myState.dispatched = true;
      return myDest;
    }
  }
  return std::nullopt;
}

SelectionOutcome Policy::selectLeastImpedance(const WeightTable& aWeights) {
  if (const auto myBoot = bootstrapCandidate(aWeights)) {
    return {*myBoot, false};
  }
  std::optional<DestinationId> ret;
  Weight                       myBest = Weight::infinite();
  for (const auto& myDest : theDestinations) {
    const auto myWeight = aWeights.weight(theLambda, myDest);
    if (myWeight and myWeight->isFinite() and *myWeight < myBest) {
      myBest = *myWeight;
      ret    = myDest;
    }
  }
  if (not ret) {
    throw NoEligibleDestination();
  }
  return {*ret, false};
}

SelectionOutcome
Policy::selectRandomProportional(const WeightTable& aWeights) {
  if (const auto myBoot = bootstrapCandidate(aWeights)) {
    return {*myBoot, false};
  }
  std::vector<std::pair<DestinationId, double>> myMass;
  double                                        myTotal = 0;
  for (const auto& myDest : theDestinations) {
    const auto myWeight = aWeights.weight(theLambda, myDest);
    if (myWeight and myWeight->isFinite()) {
      const auto myInverse =
          1.0 / static_cast<double>(myWeight->value().micros());
      myMass.emplace_back(myDest, myInverse);
      myTotal += myInverse;
    }
  }
  if (myMass.empty()) {
    throw NoEligibleDestination();
  }
  auto myDraw = theRng.uniform() * myTotal;
  for (const auto& [myDest, myInverse] : myMass) {
    if (myDraw < myInverse) {
      return {myDest, false};
    }
    myDraw -= myInverse;
  }
  // only reachable through floating-point round-off
  return {myMass.back().first, false};
}

SelectionOutcome Policy::selectRoundRobin(const WeightTable& aWeights,
                                          Time               aNow) {
  theCandidates.clear();
  const auto myIdle = theDestinations.size() - theLedger.size() - theProbingCount;
  for (std::size_t i = 0; myIdle > 0 and i < theDestinations.size(); ++i) {
    const auto& myDest = theDestinations[i];
    const auto& myState = theStates.at(myDest);
    if (myState.active or myState.probing or
        aWeights.congested(theLambda, myDest)) {
      continue;
    }
    const auto myEligible = theConfig.literalProbeCondition ?
                                myState.eligibleAt > aNow :
                                myState.eligibleAt <= aNow;
    if (myEligible) {
      theCandidates.push_back(myDest);
    }
  }

  if (not theCandidates.empty()) {
    const auto myDest = theCandidates[theRng.below(theCandidates.size())];
    mutableState(myDest).probing = true;
    ++theProbingCount;
    ++theProbesLaunched;
    return {myDest, true};
  }

  if (theLedger.empty()) {
    throw NoEligibleDestination();
  }
  const auto myDest = theLedger.popMin();
  theLedger.charge(myDest, aWeights.weight(theLambda, myDest)->value());
  return {myDest, false};
}

void Policy::onResponse(WeightTable&  aWeights,
                        DestinationId aDest,
                        Time          aMeasured,
                        Time          aNow) {
  auto& myState = mutableState(aDest);
  if (theConfig.kind == PolicyKind::RoundRobin) {
    onRoundRobinResponse(aWeights, aDest, aMeasured, aNow);
    return;
  }
  myState.dispatched = true;
  if (aWeights.congested(theLambda, aDest)) {
    ++theDroppedResponses;
    return;
  }
  aWeights.observe(theLambda, aDest, aMeasured);
}

void Policy::onRoundRobinResponse(WeightTable&  aWeights,
                                  DestinationId aDest,
                                  Time          aMeasured,
                                  Time          aNow) {
  auto&      myState     = mutableState(aDest);
  const bool myCongested = aWeights.congested(theLambda, aDest);

  if (myState.probing) {
    myState.probing = false;
    --theProbingCount;
    if (myCongested) {
      ++theDroppedResponses;
      return;
    }
    const auto myMin = minActiveWeight(aWeights);
    if (myMin.isInfinite() or aMeasured <= myMin.value() * 2) {
      theLedger.admit(aDest, aMeasured);
      aWeights.assign(theLambda, aDest, aMeasured);
      myState.active  = true;
      myState.backoff = theConfig.backoffMin;
    } else {
      ++theProbesRejected;
      myState.backoff    = myState.backoff * 2;
      myState.eligibleAt = aNow + myState.backoff;
    }
    return;
  }

  if (myCongested) {
    ++theDroppedResponses;
    return;
  }

  const auto myWeight = aWeights.observe(theLambda, aDest, aMeasured);
  if (myState.active) {
    const auto myMin = minActiveWeight(aWeights);
    if (myWeight.value() > myMin.value() * 2) {
      deactivate(aDest);
      myState.eligibleAt = aNow + myState.backoff;
    }
  }
}

void Policy::syncCongestion(WeightTable&  aWeights,
                            DestinationId aDest,
                            bool          aCongested,
                            Time          aNow) {
  auto& myState = mutableState(aDest);
  if (aCongested) {
    aWeights.markCongested(theLambda, aDest);
    if (myState.active) {
      deactivate(aDest);
    }
    return;
  }
  if (not aWeights.congested(theLambda, aDest)) {
    return;
  }
  aWeights.clearCongestion(theLambda, aDest);
  if (theConfig.kind == PolicyKind::RoundRobin) {
    myState.eligibleAt = aNow;
  }
}

void Policy::activate(WeightTable&  aWeights,
                      DestinationId aDest,
                      Time          aWeight,
                      Time          aDeficit) {
  auto& myState = mutableState(aDest);
  aWeights.assign(theLambda, aDest, aWeight);
  myState.dispatched = true;
  if (theConfig.kind == PolicyKind::RoundRobin and not myState.active) {
    if (myState.probing) {
      myState.probing = false;
      --theProbingCount;
    }
    myState.active  = true;
    theLedger.admit(aDest, aDeficit);
  }
}

const Policy::DestinationState& Policy::state(DestinationId aDest) const {
  const auto it = theStates.find(aDest);
  if (it == theStates.end()) {
    std::stringstream myStream;
    myStream << aDest << " is not a destination of " << theLambda;
    throw UnknownDestination(myStream.str());
  }
  return it->second;
}

Policy::DestinationState& Policy::mutableState(DestinationId aDest) {
  return const_cast<DestinationState&>(std::as_const(*this).state(aDest));
}

std::vector<DestinationId> Policy::active() const {
  std::vector<DestinationId> ret;
  for (const auto& [myDest, myState] : theStates) {
    if (myState.active) {
      ret.push_back(myDest);
    }
  }
  return ret;
}

std::vector<DestinationId> Policy::probing() const {
  std::vector<DestinationId> ret;
  for (const auto& [myDest, myState] : theStates) {
    if (myState.probing) {
      ret.push_back(myDest);
    }
  }
  return ret;
}

Weight Policy::minActiveWeight(const WeightTable& aWeights) const {
  auto ret = Weight::infinite();
  for (const auto& myNode : theLedger.nodes()) {
    const auto myWeight = aWeights.weight(theLambda, myNode.dest);
    if (myWeight and *myWeight < ret) {
      ret = *myWeight;
    }
  }
  return ret;
}

void Policy::deactivate(DestinationId aDest) {
  mutableState(aDest).active = false;
  theLedger.evict(aDest);
}

} // namespace edgedispatch

// Copyright 2026 The edgedispatch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software distributed under the License is
// distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and limitations under the License.

#pragma once

#include "edgedispatch/deficit_ledger.hpp"
#include "edgedispatch/estimator.hpp"
#include "edgedispatch/random.hpp"
#include "edgedispatch/types.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace edgedispatch {

enum class PolicyKind {
  LeastImpedance,
  RandomProportional,
  RoundRobin,
};

/// "li", "rp", "rr".
std::string_view toString(PolicyKind aKind) noexcept;
PolicyKind       policyKindFromString(std::string_view aName);

struct PolicyConfig {
  PolicyKind kind  = PolicyKind::RoundRobin;
  double     alpha = WeightTable::defaultAlpha;
  // Initial probe backoff; doubled on every failed probe, no cap.
  Time backoffMin = Time::ms(100);
  // Wait before retrying a request that found no eligible destination.
  Time retryInterval = Time::ms(50);
  // Probe destinations whose eligibility time is still in the future instead
  // of those already due. Never makes progress from a fresh state; only kept
  // for comparison.
  bool literalProbeCondition = false;
};

struct SelectionOutcome {
  DestinationId destination;
  bool          isProbe = false;
};

/// Destination selection state of one e-router for one lambda.
///
/// Least-impedance picks the smallest weight. Random-proportional picks a
/// destination with probability proportional to 1/w. Round-robin keeps an
/// active list of destinations whose weight is within twice the minimum and
/// serves them by smallest deficit, charging each selection with the
/// current weight; excluded destinations are re-admitted through single
/// probes with exponential backoff.
///
/// Under least-impedance and random-proportional, destinations that have
/// never been measured are served once each, in id order, before any
/// weighted choice is made.
class Policy {
 public:
  struct DestinationState {
    Time backoff;
    Time eligibleAt;
    bool active     = false;
    bool probing    = false;
    bool dispatched = false;
  };

  Policy(const PolicyConfig&        aConfig,
         LambdaId                   aLambda,
         std::vector<DestinationId> aDestinations,
         std::uint64_t              aSeed);

  /// Throws NoEligibleDestination.
  SelectionOutcome select(const WeightTable& aWeights, Time aNow);

  /// Throws UnknownDestination. Responses on congested paths are dropped.
  void onResponse(WeightTable&  aWeights,
                  DestinationId aDest,
                  Time          aMeasured,
                  Time          aNow);

  /// Apply a congestion signal from the controller. Idempotent.
  void syncCongestion(WeightTable&  aWeights,
                      DestinationId aDest,
                      bool          aCongested,
                      Time          aNow);

  /// Put aDest directly in service with a given weight and initial deficit,
  /// bypassing probing. Used to analyse schedules with frozen weights.
  void activate(WeightTable& aWeights,
                DestinationId aDest,
                Time          aWeight,
                Time          aDeficit = Time::zero());

  PolicyKind                        kind() const noexcept { return theConfig.kind; }
  LambdaId                          lambda() const noexcept { return theLambda; }
  const PolicyConfig&               config() const noexcept { return theConfig; }
  const std::vector<DestinationId>& destinations() const noexcept {
    return theDestinations;
  }
  const DeficitLedger&    ledger() const noexcept { return theLedger; }
  const DestinationState& state(DestinationId aDest) const;
  std::vector<DestinationId> active() const;
  std::vector<DestinationId> probing() const;

  std::uint64_t probesLaunched() const noexcept { return theProbesLaunched; }
  std::uint64_t probesRejected() const noexcept { return theProbesRejected; }
  std::uint64_t droppedResponses() const noexcept { return theDroppedResponses; }

 private:
  DestinationState& mutableState(DestinationId aDest);
  std::optional<DestinationId> bootstrapCandidate(const WeightTable& aWeights);
  SelectionOutcome selectLeastImpedance(const WeightTable& aWeights);
  SelectionOutcome selectRandomProportional(const WeightTable& aWeights);
  SelectionOutcome selectRoundRobin(const WeightTable& aWeights, Time aNow);
  void             onRoundRobinResponse(WeightTable&  aWeights,
                                        DestinationId aDest,
                                        Time          aMeasured,
                                        Time          aNow);
  // Infinite if the active list is empty.
  Weight minActiveWeight(const WeightTable& aWeights) const;
  void   deactivate(DestinationId aDest);

  PolicyConfig                              theConfig;
  LambdaId                                  theLambda;
  std::vector<DestinationId>                theDestinations;
  std::map<DestinationId, DestinationState> theStates;
  DeficitLedger                             theLedger;
  Rng                                       theRng;
  std::vector<DestinationId>                theCandidates;
  std::size_t                               theProbingCount = 0;

  std::uint64_t theProbesLaunched   = 0;
  std::uint64_t theProbesRejected   = 0;
  std::uint64_t theDroppedResponses = 0;
};

} // namespace edgedispatch

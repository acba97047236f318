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

#include "edgedispatch/types.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace edgedispatch {

/// One round-robin selection with frozen weights.
struct ScheduleStep {
  std::size_t                step = 0; // 1-based
  DestinationId              selected;
  std::vector<Time>          deficits; // after the charge, by destination
  std::vector<std::uint64_t> counts;   // selections so far, by destination
};

/// Run round-robin over destinations 1..N with frozen weights (destination
/// k has weight aWeights[k-1]), all starting with zero deficit.
std::vector<ScheduleStep> replaySchedule(std::span<const Time> aWeights,
                                         std::size_t           aSteps);

/// Number of selections after which every deficit equals the least common
/// multiple T of the weights, i.e. the sum of T / w_i. Empty on overflow.
std::optional<std::uint64_t> convergenceStep(std::span<const Time> aWeights);

/// Human-readable schedule table, one line per step.
std::string formatSchedule(std::span<const Time>            aWeights,
                           const std::vector<ScheduleStep>& aSchedule);

struct PropertySuiteResult {
  std::string   name;
  bool          passed     = false;
  std::uint64_t checks     = 0;
  std::uint64_t violations = 0;
  std::string   detail;
};

struct FairnessSuiteConfig {
  std::uint64_t seed            = 1;
  std::size_t   runs            = 1000;
  std::size_t   minDestinations = 2;
  std::size_t   maxDestinations = 10;
  std::size_t   steps           = 10000;
  // Weights are drawn as rationals k / q ms with q in {1, 2, 4, 5, 8}.
  Time          minWeight = Time::ms(1);
  Time          maxWeight = Time::ms(50);
  std::size_t   convergenceSets          = 100;
  std::size_t   convergenceMaxDestinations = 5;
  std::uint64_t convergenceMaxSteps      = 200000;
};

/// Draw a random rational weight set for the suites.
std::vector<Time> randomRationalWeights(std::uint64_t              aSeed,
                                        std::size_t                aCount,
                                        const FairnessSuiteConfig& aConfig);

/// Deficit spread never exceeds the largest weight.
PropertySuiteResult checkDeficitSpread(const FairnessSuiteConfig& aConfig);

/// s_i * w_i - s_j * w_j never exceeds the largest weight.
PropertySuiteResult checkWeightedServiceSpread(const FairnessSuiteConfig& aConfig);

/// At the convergence step all deficits are equal and s_i = T / w_i.
PropertySuiteResult checkLongTermConvergence(const FairnessSuiteConfig& aConfig);

std::vector<PropertySuiteResult> runFairnessSuites(const FairnessSuiteConfig& aConfig);

} // namespace edgedispatch

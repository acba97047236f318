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

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace edgedispatch {

/// State of one (lambda, destination) weight.
///
/// current is empty until the first sample is observed. While congested,
/// current holds Infinite and shadow holds the last finite estimate (if any).
struct WeightEntry {
  std::optional<Weight> current;
  std::optional<Time>   shadow;
  bool                  congested = false;
};

/// Per e-router table of smoothed latency estimates, one per
/// (lambda, destination) pair:
///
///   w(t+) = inf                               if the path is congested
///   w(t+) = alpha * w(t-) + (1 - alpha) * d   otherwise
///
/// where d is the latency sample. The first sample initializes the weight.
/// When congestion clears the weight goes back to its pre-congestion value.
class WeightTable {
 public:
  static constexpr double defaultAlpha = 0.9;

  explicit WeightTable(double aAlpha = defaultAlpha);

  double alpha() const noexcept { return theAlpha; }

  /// Fold a latency sample into the estimate and return the new weight.
  /// Throws ObservationWhileCongested if the entry is congested.
  Weight observe(LambdaId aLambda, DestinationId aDest, Time aSample);

  /// Overwrite the estimate with the given value (probe admission).
  void assign(LambdaId aLambda, DestinationId aDest, Time aValue);

  /// Idempotent.
  void markCongested(LambdaId aLambda, DestinationId aDest);

  /// Returns the restored weight, or nothing if the entry had never been
  /// measured. Throws NotCongested if the entry is not congested.
  std::optional<Weight> clearCongestion(LambdaId aLambda, DestinationId aDest);

  /// Empty if the pair has never been measured and is not congested.
  std::optional<Weight> weight(LambdaId aLambda, DestinationId aDest) const;

  bool congested(LambdaId aLambda, DestinationId aDest) const;

  const WeightEntry* entry(LambdaId aLambda, DestinationId aDest) const;

  using Key = std::pair<LambdaId, DestinationId>;
  const std::map<Key, WeightEntry>& entries() const noexcept {
    return theEntries;
  }

 private:
  double                     theAlpha;
  std::map<Key, WeightEntry> theEntries;
};

} // namespace edgedispatch

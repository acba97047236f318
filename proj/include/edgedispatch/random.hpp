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

#include <cstddef>
#include <cstdint>
#include <random>

namespace edgedispatch {

/// Seeded pseudo-random stream. Draws are computed here rather than through
/// the <random> distributions, whose output is implementation-defined, so
/// that traces are reproducible across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t aSeed)
      : theEngine(aSeed) {
  }

  /// Uniform in [0, 1) with 53 bits of precision.
  double uniform() {
    return static_cast<double>(theEngine() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, aBound).
  std::size_t below(std::size_t aBound) {
    return static_cast<std::size_t>(uniform() * static_cast<double>(aBound));
  }

  /// Exponential variate with the given rate.
  double exponential(double aRate);

 private:
  std::mt19937_64 theEngine;
};

} // namespace edgedispatch

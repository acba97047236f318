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

#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>
#include <stdexcept>

namespace edgedispatch {

/// Simulated time (or duration) with microsecond resolution.
///
/// Fixed-point so that replays are bit-exact and rational weights with a
/// denominator dividing 1000 ms are represented without rounding.
class Time {
 public:
  constexpr Time() noexcept = default;

  static constexpr Time us(std::int64_t aMicros) { return Time(aMicros); }
  static Time ms(double aMillis);
  static constexpr Time zero() noexcept { return Time(); }

  constexpr std::int64_t micros() const noexcept { return theMicros; }
  constexpr double millis() const noexcept {
    return static_cast<double>(theMicros) / 1000.0;
  }

  // Rounds to the nearest microsecond.
  Time scaled(double aFactor) const;

  constexpr auto operator<=>(const Time&) const noexcept = default;

  constexpr Time& operator+=(Time aOther) {
    theMicros += aOther.theMicros;
    return *this;
  }
  constexpr Time& operator-=(Time aOther) {
    theMicros -= aOther.theMicros;
    return *this;
  }
  friend constexpr Time operator+(Time aLhs, Time aRhs) {
    return aLhs += aRhs;
  }
  friend constexpr Time operator-(Time aLhs, Time aRhs) {
    return aLhs -= aRhs;
  }
  friend constexpr Time operator*(Time aLhs, std::int64_t aMul) {
    return Time(aLhs.theMicros * aMul);
  }

 private:
  constexpr explicit Time(std::int64_t aMicros) noexcept
      : theMicros(aMicros) {
  }

  std::int64_t theMicros = 0;
};

std::ostream& operator<<(std::ostream& aStream, Time aTime);

/// Identifier of an e-computer (a destination for lambda requests).
struct DestinationId {
  std::int64_t value = 0;
  constexpr auto operator<=>(const DestinationId&) const noexcept = default;
};

/// Identifier of a lambda function class.
struct LambdaId {
  std::int64_t value = 0;
  constexpr auto operator<=>(const LambdaId&) const noexcept = default;
};

/// Identifier of an e-router.
struct RouterId {
  std::int64_t value = 0;
  constexpr auto operator<=>(const RouterId&) const noexcept = default;
};

std::ostream& operator<<(std::ostream& aStream, DestinationId aId);
std::ostream& operator<<(std::ostream& aStream, LambdaId aId);
std::ostream& operator<<(std::ostream& aStream, RouterId aId);

/// Latency estimate for a (lambda, destination) pair, or Infinite for a
/// path that the controller has flagged as congested.
///
/// Infinite compares greater than any finite value and cannot be read as a
/// number: value() throws on it.
class Weight {
 public:
  static constexpr Weight finite(Time aValue) noexcept {
    return Weight(aValue);
  }
  static constexpr Weight infinite() noexcept { return Weight(); }

  constexpr bool isInfinite() const noexcept { return !theValue.has_value(); }
  constexpr bool isFinite() const noexcept { return theValue.has_value(); }

  Time value() const {
    if (!theValue) {
      throw std::logic_error("infinite weight has no numeric value");
    }
    return *theValue;
  }

  constexpr bool operator==(const Weight&) const noexcept = default;
  constexpr std::strong_ordering operator<=>(const Weight& aOther) const {
    if (isInfinite() || aOther.isInfinite()) {
      return isInfinite() <=> aOther.isInfinite();
    }
    return *theValue <=> *aOther.theValue;
  }

 private:
  constexpr Weight() noexcept = default;
  constexpr explicit Weight(Time aValue) noexcept
      : theValue(aValue) {
  }

  std::optional<Time> theValue;
};

std::ostream& operator<<(std::ostream& aStream, const Weight& aWeight);

/// Outcome of one lambda invocation as observed end to end.
///
/// completedAt - issuedAt always equals the sum of the three delay
/// components.
struct RequestRecord {
  std::uint64_t seq = 0;
  LambdaId      lambda;
  RouterId      router;
  DestinationId destination;
  Time          issuedAt;
  Time          completedAt;
  Time          transferDelay;
  Time          queueDelay;
  Time          processingDelay;
  bool          isProbe = false;
};

Time latency(const RequestRecord& aRecord);

} // namespace edgedispatch

template <>
struct std::hash<edgedispatch::DestinationId> {
  std::size_t operator()(edgedispatch::DestinationId aId) const noexcept {
    return std::hash<std::int64_t>{}(aId.value);
  }
};

template <>
struct std::hash<edgedispatch::LambdaId> {
  std::size_t operator()(edgedispatch::LambdaId aId) const noexcept {
    return std::hash<std::int64_t>{}(aId.value);
  }
};

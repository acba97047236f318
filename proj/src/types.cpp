// Copyright 2026 The edgedispatch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software distributed under the License is
// distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and limitations under the License.

#include "edgedispatch/types.hpp"

#include "edgedispatch/errors.hpp"

#include <cmath>

namespace edgedispatch {

Time Time::ms(double aMillis) {
  if (!std::isfinite(aMillis)) {
    throw std::invalid_argument("time must be finite");
  }
  return Time(std::llround(aMillis * 1000.0));
}

Time Time::scaled(double aFactor) const {
  return Time(std::llround(static_cast<double>(theMicros) * aFactor));
}

std::ostream& operator<<(std::ostream& aStream, Time aTime) {
  return aStream << aTime.millis() << " ms";
}

std::ostream& operator<<(std::ostream& aStream, DestinationId aId) {
  return aStream << "dest#" << aId.value;
}

std::ostream& operator<<(std::ostream& aStream, LambdaId aId) {
  return aStream << "lambda#" << aId.value;
}

std::ostream& operator<<(std::ostream& aStream, RouterId aId) {
  return aStream << "router#" << aId.value;
}

std::ostream& operator<<(std::ostream& aStream, const Weight& aWeight) {
  if (aWeight.isInfinite()) {
    return aStream << "inf";
  }
  return aStream << aWeight.value();
}

Time latency(const RequestRecord& aRecord) {
  return aRecord.completedAt - aRecord.issuedAt;
}

namespace {

std::string joinDiagnostics(const std::vector<std::string>& aDiagnostics) {
  std::string ret = "invalid scenario";
  for (const auto& myDiag : aDiagnostics) {
    ret += "\n  ";
    ret += myDiag;
  }
  return ret;
}

} // namespace

InvalidScenario::InvalidScenario(std::vector<std::string> aDiagnostics)
    : Error(joinDiagnostics(aDiagnostics))
    , theDiagnostics(std::move(aDiagnostics)) {
}

} // namespace edgedispatch

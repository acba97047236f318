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

#include <stdexcept>
#include <string>
#include <vector>

namespace edgedispatch {

struct Error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ObservationWhileCongested final : public Error {
  using Error::Error;
};

struct NotCongested final : public Error {
  using Error::Error;
};

struct EmptyLedger final : public Error {
  EmptyLedger()
      : Error("deficit ledger is empty") {
  }
};

struct UnknownDestination final : public Error {
  using Error::Error;
};

struct AlreadyAdmitted final : public Error {
  using Error::Error;
};

struct NoEligibleDestination final : public Error {
  NoEligibleDestination()
      : Error("no eligible destination") {
  }
};

struct UnknownLambda final : public Error {
  using Error::Error;
};

struct EmptyTrace final : public Error {
  EmptyTrace()
      : Error("trace is empty") {
  }
};

/// Thrown by scenario validation; carries one diagnostic per offending field,
/// each prefixed with the field path (e.g. "lambdas[0].destinations: ...").
class InvalidScenario final : public Error {
 public:
  explicit InvalidScenario(std::vector<std::string> aDiagnostics);

  const std::vector<std::string>& diagnostics() const noexcept {
    return theDiagnostics;
  }

 private:
  std::vector<std::string> theDiagnostics;
};

} // namespace edgedispatch

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

#include "edgedispatch/policy.hpp"
#include "edgedispatch/random.hpp"
#include "edgedispatch/scenario.hpp"
#include "edgedispatch/types.hpp"

#include <cstdint>
#include <deque>
#include <optional>
#include <vector>

namespace edgedispatch {

/// Request inter-arrival generator for one client population.
class ArrivalProcess {
 public:
  ArrivalProcess(ArrivalKind aKind, double aRatePerSecond, std::uint64_t aSeed);

  /// Absolute time of the next arrival; the first one is one inter-arrival
  /// after time zero.
  Time next();

 private:
  ArrivalKind theKind;
  double      theRatePerMicro;
  Rng         theRng;
  Time        theLast;
  std::uint64_t theCount = 0;
};

/// Execution node with a fixed pool of workers and a FIFO queue.
class EComputer {
 public:
  explicit EComputer(const ComputerSpec& aSpec);

  DestinationId id() const noexcept { return theSpec.id; }
  int           workers() const noexcept { return theSpec.workers; }
  int           busy() const noexcept { return theBusy; }
  double        beta() const noexcept { return theSpec.beta; }
  bool          idleWorker() const noexcept { return theBusy < theSpec.workers; }

  /// Base service time; throws UnknownLambda.
  Time baseServiceTime(LambdaId aLambda) const;

  void occupy() { ++theBusy; }
  void release() { --theBusy; }

  std::deque<std::size_t>& queue() noexcept { return theQueue; }

 private:
  ComputerSpec            theSpec;
  int                     theBusy = 0;
  std::deque<std::size_t> theQueue;
};

/// base * (1 + beta * busy / workers), with busy the number of workers in
/// use (including the request being started). Throws UnknownLambda.
Time serviceTime(const EComputer& aComputer, LambdaId aLambda);

enum class EventKind {
  RequestArrival,
  RouterDispatch, // first dispatch attempt or retry after no destination
  DeliverToComputer,
  ServiceEnd,
  DeliverResponse,
  CongestionToggle,
};

struct SimEvent {
  Time          at;
  std::uint64_t seq = 0; // insertion order, breaks ties
  EventKind     kind;
  std::size_t   request = 0; // request index or router index for arrivals
  RouterId      router;
  DestinationId destination;
  bool          on = false;
};

struct UnservedRequest {
  std::uint64_t                seq = 0;
  LambdaId                     lambda;
  RouterId                     router;
  Time                         issuedAt;
  std::optional<DestinationId> destination;
  bool                         isProbe = false;
};

struct DispatchRecord {
  std::uint64_t seq = 0;
  RouterId      router;
  LambdaId      lambda;
  DestinationId destination;
  Time          at;
  bool          isProbe = false;
};

/// Weight of a (router, lambda, destination) right before congestion is
/// signalled (on) or right after it is cleared (off).
struct CongestionLogEntry {
  Time                  at;
  RouterId              router;
  LambdaId              lambda;
  DestinationId         destination;
  bool                  on = false;
  std::optional<Weight> weight;
};

struct WeightSnapshotEntry {
  RouterId              router;
  LambdaId              lambda;
  DestinationId         destination;
  std::optional<Weight> weight;
};

struct PolicySnapshotEntry {
  RouterId      router;
  LambdaId      lambda;
  std::uint64_t probesLaunched   = 0;
  std::uint64_t probesRejected   = 0;
  std::uint64_t droppedResponses = 0;
};

struct Snapshot {
  std::vector<WeightSnapshotEntry> weights;
  std::vector<PolicySnapshotEntry> policies;
};

struct Trace {
  PolicyKind                   policy = PolicyKind::RoundRobin;
  std::vector<RequestRecord>   completed;
  std::vector<UnservedRequest> unserved;
};

struct RunResult {
  Trace                           trace;
  Snapshot                        snapshot;
  std::vector<DispatchRecord>     dispatches;
  std::vector<CongestionLogEntry> congestionLog;
  std::uint64_t                   arrivals = 0;
};

/// Deterministic discrete-event run. Throws InvalidScenario.
RunResult simulate(const Scenario& aScenario);

} // namespace edgedispatch

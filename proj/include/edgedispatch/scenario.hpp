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
#include "edgedispatch/types.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace edgedispatch {

enum class ArrivalKind {
  Poisson,
  Deterministic,
};

struct LambdaSpec {
  LambdaId                   id;
  std::vector<DestinationId> destinations;
};

struct ComputerSpec {
  DestinationId            id;
  int                      workers = 1;
  double                   beta    = 0.0;
  std::map<LambdaId, Time> serviceTime;
};

struct LambdaShare {
  LambdaId lambda;
  double   weight = 1.0;
};

struct RouterSpec {
  RouterId                 id;
  Time                     clientLatency; // one way, client <-> router
  ArrivalKind              arrival       = ArrivalKind::Poisson;
  double                   ratePerSecond = 0.0;
  std::vector<LambdaShare> mix;
};

/// Undirected link between two nodes. Routers, computers and switches share
/// one node id space.
struct LinkSpec {
  std::int64_t a = 0;
  std::int64_t b = 0;
  Time         latency;
};

/// Controller-signalled congestion of the path from a router to a
/// destination over [from, to).
struct CongestionWindow {
  RouterId      router;
  DestinationId destination;
  Time          from;
  Time          to;
};

struct Scenario {
  std::string                   name;
  std::vector<RouterSpec>       routers;
  std::vector<ComputerSpec>     computers;
  std::vector<std::int64_t>     switches;
  std::vector<LinkSpec>         links;
  std::vector<LambdaSpec>       lambdas;
  PolicyConfig                  policy;
  std::vector<CongestionWindow> congestion;
  // Arrivals are generated over [0, duration); in-flight requests then have
  // up to drain to complete before being reported as unserved.
  Time          duration = Time::ms(10000);
  Time          drain    = Time::ms(5000);
  std::uint64_t seed     = 1;
};

/// Field-level problems, empty if the scenario is valid.
std::vector<std::string> validate(const Scenario& aScenario);

/// Throws InvalidScenario.
void validateOrThrow(const Scenario& aScenario);

/// Parse a JSON scenario document. Throws InvalidScenario on malformed
/// input; the result is not otherwise validated.
Scenario parseScenario(std::string_view aText);
Scenario loadScenarioFile(const std::string& aPath);
std::string dumpScenario(const Scenario& aScenario);

struct LineParams {
  std::size_t computers   = 4;
  int         workers     = 1;
  Time        service     = Time::ms(10);
  Time        hopLatency  = Time::ms(1);
  Time        clientLatency = Time::ms(1);
  double      utilization = 0.8;
  Time        duration    = Time::ms(60000);
};

/// One router in front of a chain of identical computers. Poisson arrivals
/// sized so that the aggregate utilization of the computers matches
/// utilization (ignoring load-dependent slowdown).
Scenario lineScenario(const LineParams& aParams = {});

struct RingTreeParams {
  std::size_t routers            = 4;
  std::size_t computersPerRouter = 2;
  int         workers            = 2;
  Time        service            = Time::ms(10);
  Time        ringLatency        = Time::ms(2);
  Time        leafLatency        = Time::ms(1);
  Time        clientLatency      = Time::ms(1);
  double      utilization        = 0.5;
  Time        duration           = Time::ms(30000);
  // The arc between router 0 and router 1 is congested over this window.
  Time congestionFrom = Time::ms(10000);
  Time congestionTo   = Time::ms(20000);
};

/// Routers connected in a ring, each the root of a small tree of computers.
/// Every router can dispatch to every computer along shortest paths. The
/// congestion schedule covers every (router, computer) pair whose path
/// crosses the congested arc.
Scenario ringTreeScenario(const RingTreeParams& aParams = {});

/// "line" or "ring-tree"; throws std::invalid_argument otherwise.
Scenario builtinScenario(std::string_view aName);
bool     isBuiltinScenario(std::string_view aName) noexcept;

/// Shortest-path one-way latency from every router to every computer.
/// Unreachable pairs are absent.
std::map<std::pair<RouterId, DestinationId>, Time>
pathLatencies(const Scenario& aScenario);

/// Links on the shortest path between two nodes, as (a, b) pairs with a < b.
std::vector<std::pair<std::int64_t, std::int64_t>>
shortestPathLinks(const Scenario& aScenario, std::int64_t aFrom, std::int64_t aTo);

} // namespace edgedispatch

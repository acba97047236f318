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
#include "edgedispatch/simulator.hpp"
#include "edgedispatch/types.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace edgedispatch {

/// Percentiles use the nearest-rank method over completed requests.
struct LatencyStats {
  double meanMs = 0;
  Time   median;
  Time   p95;
  Time   p99;
};

struct DestinationShare {
  DestinationId         destination;
  std::uint64_t         selections = 0;
  std::optional<Weight> weight; // final snapshot value
};

/// Selection counts of one (router, lambda) pair and the matrix of
/// s_i * w_i / s_j * w_j over the destinations that were selected and have
/// a finite final weight. A perfectly proportional-fair split gives all
/// ones.
struct FairnessGroup {
  RouterId                         router;
  LambdaId                         lambda;
  std::vector<DestinationShare>    shares;
  std::vector<DestinationId>       matrixDestinations;
  std::vector<std::vector<double>> matrix;
  double                           maxDeviation = 0;
};

struct Summary {
  PolicyKind                  policy   = PolicyKind::RoundRobin;
  std::uint64_t               requests = 0;
  std::uint64_t               completed = 0;
  std::uint64_t               unserved = 0;
  std::uint64_t               probes   = 0;
  std::uint64_t               probeRejections  = 0;
  std::uint64_t               droppedResponses = 0;
  std::optional<LatencyStats> latency;
  std::vector<FairnessGroup>  groups;
  double                      maxFairnessDeviation = 0;
};

/// Nearest-rank percentile of a sorted sample, aPercent in (0, 100].
Time nearestRank(const std::vector<Time>& aSorted, double aPercent);

/// Throws EmptyTrace.
Summary summarize(const Trace& aTrace, const Snapshot& aSnapshot);

void  writeTrace(std::ostream& aStream, const Trace& aTrace);
Trace readTrace(std::istream& aStream);

std::string summaryToJson(const Summary& aSummary, bool aVerbose);
std::string snapshotToJson(const Snapshot& aSnapshot);

/// Summary document as written by the command-line tool: the summary plus
/// the snapshot it was computed from.
std::string summaryDocument(const Summary&  aSummary,
                            const Snapshot& aSnapshot,
                            bool            aVerbose);

/// Accepts either a summary document or a bare snapshot.
Snapshot parseSnapshot(std::string_view aText);

} // namespace edgedispatch

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

#include <cstddef>
#include <unordered_map>
#include <utility>
#include <vector>

namespace edgedispatch {

/// Deficit counters of the active destinations, kept sorted by increasing
/// deficit (ties by increasing id) and stored as differences with the
/// previous element. For instance deficits {4, 6, 7, 7} are held as
/// {4, 2, 1, 0}.
///
/// Since the front element carries the minimum, subtracting the minimum from
/// every counter amounts to zeroing the front delta.
class DeficitLedger {
 public:
  struct Node {
    DestinationId dest;
    Time          delta;
  };

  bool        empty() const noexcept { return theNodes.empty(); }
  std::size_t size() const noexcept { return theNodes.size(); }
  bool        contains(DestinationId aDest) const;

  /// Destination with the smallest deficit, smallest id on ties.
  DestinationId popMin() const;

  /// Increase the deficit of aDest by aAmount.
  void charge(DestinationId aDest, Time aAmount);

  /// Subtract the current minimum from all deficits, then insert aDest.
  void admit(DestinationId aDest, Time aInitialDeficit);

  void evict(DestinationId aDest);

  Time deficit(DestinationId aDest) const;
  Time minDeficit() const;
  Time maxDeficit() const;

  const std::vector<Node>& nodes() const noexcept { return theNodes; }
  std::vector<Time>        deltas() const;

  /// Absolute deficits in ledger order.
  std::vector<std::pair<DestinationId, Time>> decode() const;

 private:
  std::size_t position(DestinationId aDest) const;
  void        removeAt(std::size_t aPos);
  void        insertAbsolute(DestinationId aDest, Time aDeficit);
  void        reindexFrom(std::size_t aPos);

  std::vector<Node>                              theNodes;
  std::unordered_map<DestinationId, std::size_t> theIndex;
};

} // namespace edgedispatch

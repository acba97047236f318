// Copyright 2026 The edgedispatch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software distributed under the License is
// distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and limitations under the License.

#include "edgedispatch/deficit_ledger.hpp"

#include "edgedispatch/errors.hpp"

#include <sstream>

namespace edgedispatch {

namespace {

std::string unknown(DestinationId aDest) {
  std::stringstream myStream;
  myStream << aDest << " not in deficit ledger";
  return myStream.str();
}

} // namespace

bool DeficitLedger::contains(DestinationId aDest) const {
  return theIndex.count(aDest) > 0;
}

DestinationId DeficitLedger::popMin() const {
  if (theNodes.empty()) {
    throw EmptyLedger();
  }
  return theNodes.front().dest;
}

void DeficitLedger::charge(DestinationId aDest, Time aAmount) {
  if (aAmount < Time::zero()) {
    throw std::invalid_argument("negative deficit charge");
  }
  const auto myPos     = position(aDest);
  const auto myDeficit = deficit(aDest);
  removeAt(myPos);
  insertAbsolute(aDest, myDeficit + aAmount);
}

void DeficitLedger::admit(DestinationId aDest, Time aInitialDeficit) {
  if (contains(aDest)) {
    std::stringstream myStream;
    myStream << aDest << " already in deficit ledger";
    throw AlreadyAdmitted(myStream.str());
  }
  if (aInitialDeficit < Time::zero()) {
    throw std::invalid_argument("negative initial deficit");
  }
  if (not theNodes.empty()) {
    theNodes.front().delta = Time::zero();
  }
  insertAbsolute(aDest, aInitialDeficit);
}

void DeficitLedger::evict(DestinationId aDest) {
  const auto myPos = position(aDest);
  theIndex.erase(aDest);
  removeAt(myPos);
}

Time DeficitLedger::deficit(DestinationId aDest) const {
  const auto myPos = position(aDest);
  Time       ret;
  for (std::size_t i = 0; i <= myPos; ++i) {
    ret += theNodes[i].delta;
  }
  return ret;
}

Time DeficitLedger::minDeficit() const {
  if (theNodes.empty()) {
    throw EmptyLedger();
  }
  return theNodes.front().delta;
}

Time DeficitLedger::maxDeficit() const {
  if (theNodes.empty()) {
    throw EmptyLedger();
  }
  Time ret;
  for (const auto& myNode : theNodes) {
    ret += myNode.delta;
  }
  return ret;
}

std::vector<Time> DeficitLedger::deltas() const {
  std::vector<Time> ret;
  ret.reserve(theNodes.size());
  for (const auto& myNode : theNodes) {
    ret.push_back(myNode.delta);
  }
  return ret;
}

std::vector<std::pair<DestinationId, Time>> DeficitLedger::decode() const {
  std::vector<std::pair<DestinationId, Time>> ret;
  ret.reserve(theNodes.size());
  Time myAcc;
  for (const auto& myNode : theNodes) {
    myAcc += myNode.delta;
    ret.emplace_back(myNode.dest, myAcc);
  }
  return ret;
}

std::size_t DeficitLedger::position(DestinationId aDest) const {
  const auto it = theIndex.find(aDest);
  if (it == theIndex.end()) {
    throw UnknownDestination(unknown(aDest));
  }
  return it->second;
}

// The caller is responsible for the index entry of the removed node.
void DeficitLedger::removeAt(std::size_t aPos) {
  if (aPos + 1 < theNodes.size()) {
    theNodes[aPos + 1].delta += theNodes[aPos].delta;
  }
  theNodes.erase(theNodes.begin() + static_cast<std::ptrdiff_t>(aPos));
  reindexFrom(aPos);
}

void DeficitLedger::insertAbsolute(DestinationId aDest, Time aDeficit) {
  std::size_t myPos = 0;
  Time        myAcc;
  for (; myPos < theNodes.size(); ++myPos) {
    const auto myNext = myAcc + theNodes[myPos].delta;
    if (myNext > aDeficit ||
        (myNext == aDeficit && aDest < theNodes[myPos].dest)) {
      break;
    }
    myAcc = myNext;
  }
  const auto myDelta = aDeficit - myAcc;
  if (myPos < theNodes.size()) {
    theNodes[myPos].delta -= myDelta;
  }
  theNodes.insert(theNodes.begin() + static_cast<std::ptrdiff_t>(myPos),
                  Node{aDest, myDelta});
  reindexFrom(myPos);
}

void DeficitLedger::reindexFrom(std::size_t aPos) {
  for (auto i = aPos; i < theNodes.size(); ++i) {
    theIndex[theNodes[i].dest] = i;
  }
}

} // namespace edgedispatch

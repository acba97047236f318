// Copyright 2026 The edgedispatch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software distributed under the License is
// distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and limitations under the License.

#include "edgedispatch/estimator.hpp"

#include "edgedispatch/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace edgedispatch {

namespace {

// Weights are kept strictly positive: a zero estimate would give an
// unbounded selection probability under random-proportional.
constexpr Time theMinWeight = Time::us(1);

std::string describe(LambdaId aLambda, DestinationId aDest) {
  std::stringstream myStream;
  myStream << aLambda << " -> " << aDest;
  return myStream.str();
}

} // namespace

WeightTable::WeightTable(double aAlpha)
    : theAlpha(aAlpha) {
  if (!(aAlpha >= 0.0 && aAlpha <= 1.0)) {
    throw std::invalid_argument("smoothing factor must be in [0,1]");
  }
}

Weight WeightTable::observe(LambdaId      aLambda,
                            DestinationId aDest,
                            Time          aSample) {
  if (aSample < Time::zero()) {
    throw std::invalid_argument("negative latency sample");
  }
  auto& myEntry = theEntries[{aLambda, aDest}];
  if (myEntry.congested) {
    throw ObservationWhileCongested("observation on congested path " +
                                    describe(aLambda, aDest));
  }

  Time myNew = aSample;
  if (myEntry.current) {
    const auto myPrev = myEntry.current->value();
    myNew = Time::us(std::llround(
        theAlpha * static_cast<double>(myPrev.micros()) +
        (1.0 - theAlpha) * static_cast<double>(aSample.micros())));
  }
  myEntry.current = Weight::finite(std::max(myNew, theMinWeight));
  return *myEntry.current;
}

void WeightTable::assign(LambdaId aLambda, DestinationId aDest, Time aValue) {
  if (aValue < Time::zero()) {
    throw std::invalid_argument("negative weight");
  }
  auto& myEntry = theEntries[{aLambda, aDest}];
  if (myEntry.congested) {
    throw ObservationWhileCongested("assignment on congested path " +
                                    describe(aLambda, aDest));
  }
  myEntry.current = Weight::finite(std::max(aValue, theMinWeight));
}

void WeightTable::markCongested(LambdaId aLambda, DestinationId aDest) {
  auto& myEntry = theEntries[{aLambda, aDest}];
  if (myEntry.congested) {
    return;
  }
  if (myEntry.current) {
    myEntry.shadow = myEntry.current->value();
  }
  myEntry.current   = Weight::infinite();
  myEntry.congested = true;
}

std::optional<Weight> WeightTable::clearCongestion(LambdaId      aLambda,
                                                   DestinationId aDest) {
  const auto it = theEntries.find({aLambda, aDest});
  if (it == theEntries.end() || !it->second.congested) {
    throw NotCongested("clearing non-congested path " +
                       describe(aLambda, aDest));
  }
  auto& myEntry     = it->second;
  myEntry.congested = false;
  if (myEntry.shadow) {
    myEntry.current = Weight::finite(*myEntry.shadow);
  } else {
    myEntry.current.reset();
  }
  myEntry.shadow.reset();
  return myEntry.current;
}

std::optional<Weight> WeightTable::weight(LambdaId      aLambda,
                                          DestinationId aDest) const {
  const auto* myEntry = entry(aLambda, aDest);
  if (myEntry == nullptr) {
    return std::nullopt;
  }
  return myEntry->current;
}

bool WeightTable::congested(LambdaId aLambda, DestinationId aDest) const {
  const auto* myEntry = entry(aLambda, aDest);
  return myEntry != nullptr && myEntry->congested;
}

const WeightEntry* WeightTable::entry(LambdaId      aLambda,
                                      DestinationId aDest) const {
  const auto it = theEntries.find({aLambda, aDest});
  return it == theEntries.end() ? nullptr : &it->second;
}

} // namespace edgedispatch

// Copyright 2026 The edgedispatch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software distributed under the License is
// distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and limitations under the License.

#include "edgedispatch/metrics.hpp"

#include "edgedispatch/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace edgedispatch {

using json = nlohmann::json;

namespace {

constexpr const char* theTraceHeader =
    "seq,lambda,router,destination,issued_us,completed_us,transfer_us,"
    "queue_us,processing_us,is_probe,policy";

json weightJson(const std::optional<Weight>& aWeight) {
  if (not aWeight) {
    return nullptr;
  }
  if (aWeight->isInfinite()) {
    return "inf";
  }
  return aWeight->value().micros();
}

std::optional<Weight> weightFromJson(const json& aNode) {
  if (aNode.is_null()) {
    return std::nullopt;
  }
  if (aNode.is_string() and aNode.get<std::string>() == "inf") {
    return Weight::infinite();
  }
  return Weight::finite(Time::us(aNode.get<std::int64_t>()));
}

std::vector<std::string> splitCsv(const std::string& aLine) {
  std::vector<std::string> ret;
  std::string              myField;
  std::stringstream        myStream(aLine);
  while (std::getline(myStream, myField, ',')) {
    ret.push_back(myField);
  }
  if (not aLine.empty() and aLine.back() == ',') {
    ret.emplace_back();
  }
  return ret;
}

std::int64_t toInt(const std::string& aField, std::size_t aLine) {
  try {
    std::size_t myPos = 0;
    const auto  ret   = std::stoll(aField, &myPos);
    if (myPos == aField.size()) {
      return ret;
    }
  } catch (const std::exception&) {
  }
  throw std::runtime_error("trace line " + std::to_string(aLine) +
                           ": invalid integer '" + aField + "'");
}

} // namespace

Time nearestRank(const std::vector<Time>& aSorted, double aPercent) {
  if (aSorted.empty()) {
    throw std::invalid_argument("percentile of empty sample");
  }
  auto myRank = static_cast<std::size_t>(
      std::ceil(aPercent / 100.0 * static_cast<double>(aSorted.size())));
  myRank = std::clamp<std::size_t>(myRank, 1, aSorted.size());
  return aSorted[myRank - 1];
}

Summary summarize(const Trace& aTrace, const Snapshot& aSnapshot) {
  if (aTrace.completed.empty() and aTrace.unserved.empty()) {
    throw EmptyTrace();
  }
  Summary ret;
  ret.policy    = aTrace.policy;
  ret.completed = aTrace.completed.size();
  ret.unserved  = aTrace.unserved.size();
  ret.requests  = ret.completed + ret.unserved;

  if (not aTrace.completed.empty()) {
    std::vector<Time> myLatencies;
    myLatencies.reserve(aTrace.completed.size());
    std::int64_t mySum = 0;
    for (const auto& myRecord : aTrace.completed) {
      myLatencies.push_back(latency(myRecord));
      mySum += latency(myRecord).micros();
    }
    std::sort(myLatencies.begin(), myLatencies.end());
    LatencyStats myStats;
    myStats.meanMs = static_cast<double>(mySum) /
                     static_cast<double>(myLatencies.size()) / 1000.0;
    myStats.median = nearestRank(myLatencies, 50);
    myStats.p95    = nearestRank(myLatencies, 95);
    myStats.p99    = nearestRank(myLatencies, 99);
    ret.latency    = myStats;
  }

  std::map<std::pair<RouterId, LambdaId>, std::map<DestinationId, DestinationShare>>
      myGroups;
  for (const auto& myEntry : aSnapshot.weights) {
    myGroups[{myEntry.router, myEntry.lambda}][myEntry.destination] =
        DestinationShare{myEntry.destination, 0, myEntry.weight};
  }
  for (const auto& myRecord : aTrace.completed) {
    auto& myShare =
        myGroups[{myRecord.router, myRecord.lambda}][myRecord.destination];
    myShare.destination = myRecord.destination;
    ++myShare.selections;
    if (myRecord.isProbe) {
      ++ret.probes;
    }
  }
  for (const auto& myRequest : aTrace.unserved) {
    if (myRequest.isProbe) {
      ++ret.probes;
    }
  }
  for (const auto& myPolicy : aSnapshot.policies) {
    ret.probeRejections += myPolicy.probesRejected;
    ret.droppedResponses += myPolicy.droppedResponses;
  }

  for (const auto& [myKey, myShares] : myGroups) {
    FairnessGroup myGroup;
    myGroup.router = myKey.first;
    myGroup.lambda = myKey.second;
    std::vector<double> myService;
    for (const auto& [myDest, myShare] : myShares) {
      myGroup.shares.push_back(myShare);
      if (myShare.selections > 0 and myShare.weight and
          myShare.weight->isFinite()) {
        myGroup.matrixDestinations.push_back(myDest);
        myService.push_back(static_cast<double>(myShare.selections) *
                            static_cast<double>(myShare.weight->value().micros()));
      }
    }
    for (std::size_t i = 0; i < myService.size(); ++i) {
      std::vector<double> myRow;
      for (std::size_t j = 0; j < myService.size(); ++j) {
        const auto myRatio = myService[i] / myService[j];
        myRow.push_back(myRatio);
        myGroup.maxDeviation =
            std::max(myGroup.maxDeviation, std::abs(myRatio - 1.0));
      }
      myGroup.matrix.push_back(std::move(myRow));
    }
    ret.maxFairnessDeviation =
        std::max(ret.maxFairnessDeviation, myGroup.maxDeviation);
    ret.groups.push_back(std::move(myGroup));
  }
  return ret;
}

void writeTrace(std::ostream& aStream, const Trace& aTrace) {
  const auto myPolicy = toString(aTrace.policy);
  aStream << theTraceHeader << '\n';

  // completed and unserved rows interleaved by sequence number
  auto itDone = aTrace.completed.begin();
  auto itLost = aTrace.unserved.begin();
  while (itDone != aTrace.completed.end() or itLost != aTrace.unserved.end()) {
    const bool myDone =
        itLost == aTrace.unserved.end() or
        (itDone != aTrace.completed.end() and itDone->seq < itLost->seq);
    if (myDone) {
      const auto& r = *itDone++;
      aStream << r.seq << ',' << r.lambda.value << ',' << r.router.value << ','
              << r.destination.value << ',' << r.issuedAt.micros() << ','
              << r.completedAt.micros() << ',' << r.transferDelay.micros()
              << ',' << r.queueDelay.micros() << ','
              << r.processingDelay.micros() << ',' << (r.isProbe ? 1 : 0)
              << ',' << myPolicy << '\n';
    } else {
      const auto& r = *itLost++;
      aStream << r.seq << ',' << r.lambda.value << ',' << r.router.value << ',';
      if (r.destination) {
        aStream << r.destination->value;
      }
      aStream << ',' << r.issuedAt.micros() << ",,,,," << (r.isProbe ? 1 : 0)
              << ',' << myPolicy << '\n';
    }
  }
}

Trace readTrace(std::istream& aStream) {
  Trace       ret;
  std::string myLine;
  if (not std::getline(aStream, myLine) or myLine != theTraceHeader) {
    throw std::runtime_error("trace: missing or unexpected header");
  }
  bool        myPolicySeen = false;
  std::size_t myLineNo     = 1;
  while (std::getline(aStream, myLine)) {
    ++myLineNo;
    if (myLine.empty()) {
      continue;
    }
    const auto f = splitCsv(myLine);
    if (f.size() != 11) {
      throw std::runtime_error("trace line " + std::to_string(myLineNo) +
                               ": expected 11 fields");
    }
    const auto myPolicy = policyKindFromString(f[10]);
    if (myPolicySeen and myPolicy != ret.policy) {
      throw std::runtime_error("trace line " + std::to_string(myLineNo) +
                               ": mixed policies");
    }
    ret.policy   = myPolicy;
    myPolicySeen = true;

    const auto mySeq   = static_cast<std::uint64_t>(toInt(f[0], myLineNo));
    const auto myProbe = toInt(f[9], myLineNo) != 0;
    if (f[5].empty()) {
      UnservedRequest myRequest;
      myRequest.seq      = mySeq;
      myRequest.lambda   = LambdaId{toInt(f[1], myLineNo)};
      myRequest.router   = RouterId{toInt(f[2], myLineNo)};
      myRequest.issuedAt = Time::us(toInt(f[4], myLineNo));
      if (not f[3].empty()) {
        myRequest.destination = DestinationId{toInt(f[3], myLineNo)};
      }
      myRequest.isProbe = myProbe;
      ret.unserved.push_back(myRequest);
      continue;
    }
    RequestRecord r;
    r.seq             = mySeq;
    r.lambda          = LambdaId{toInt(f[1], myLineNo)};
    r.router          = RouterId{toInt(f[2], myLineNo)};
    r.destination     = DestinationId{toInt(f[3], myLineNo)};
    r.issuedAt        = Time::us(toInt(f[4], myLineNo));
    r.completedAt     = Time::us(toInt(f[5], myLineNo));
    r.transferDelay   = Time::us(toInt(f[6], myLineNo));
    r.queueDelay      = Time::us(toInt(f[7], myLineNo));
    r.processingDelay = Time::us(toInt(f[8], myLineNo));
    r.isProbe         = myProbe;
    ret.completed.push_back(r);
  }
  return ret;
}

namespace {

json summaryJson(const Summary& aSummary, bool aVerbose) {
  json ret;
  ret["policy"]            = std::string(toString(aSummary.policy));
  ret["requests"]          = aSummary.requests;
  ret["completed"]         = aSummary.completed;
  ret["unserved"]          = aSummary.unserved;
  ret["probes"]            = aSummary.probes;
  ret["probe_rejections"]  = aSummary.probeRejections;
  ret["dropped_responses"] = aSummary.droppedResponses;
  if (aSummary.latency) {
    ret["latency"] = {{"mean_ms", aSummary.latency->meanMs},
                      {"median_ms", aSummary.latency->median.millis()},
                      {"p95_ms", aSummary.latency->p95.millis()},
                      {"p99_ms", aSummary.latency->p99.millis()}};
  } else {
    ret["latency"] = nullptr;
  }
  ret["max_fairness_deviation"] = aSummary.maxFairnessDeviation;
  ret["groups"]                 = json::array();
  for (const auto& myGroup : aSummary.groups) {
    json myNode;
    myNode["router"] = myGroup.router.value;
    myNode["lambda"] = myGroup.lambda.value;
    myNode["selections"] = json::array();
    for (const auto& myShare : myGroup.shares) {
      myNode["selections"].push_back({{"destination", myShare.destination.value},
                                      {"count", myShare.selections},
                                      {"weight_us", weightJson(myShare.weight)}});
    }
    myNode["max_fairness_deviation"] = myGroup.maxDeviation;
    if (aVerbose) {
      json myDests = json::array();
      for (const auto& myDest : myGroup.matrixDestinations) {
        myDests.push_back(myDest.value);
      }
      myNode["fairness_matrix"] = {{"destinations", myDests},
                                   {"ratios", myGroup.matrix}};
    }
    ret["groups"].push_back(std::move(myNode));
  }
  return ret;
}

json snapshotJson(const Snapshot& aSnapshot) {
  json ret;
  ret["weights"] = json::array();
  for (const auto& myEntry : aSnapshot.weights) {
    ret["weights"].push_back({{"router", myEntry.router.value},
                              {"lambda", myEntry.lambda.value},
                              {"destination", myEntry.destination.value},
                              {"weight_us", weightJson(myEntry.weight)}});
  }
  ret["policies"] = json::array();
  for (const auto& myEntry : aSnapshot.policies) {
    ret["policies"].push_back({{"router", myEntry.router.value},
                               {"lambda", myEntry.lambda.value},
                               {"probes_launched", myEntry.probesLaunched},
                               {"probes_rejected", myEntry.probesRejected},
                               {"dropped_responses", myEntry.droppedResponses}});
  }
  return ret;
}

} // namespace

std::string summaryToJson(const Summary& aSummary, bool aVerbose) {
  return summaryJson(aSummary, aVerbose).dump(2) + "\n";
}

std::string snapshotToJson(const Snapshot& aSnapshot) {
  return snapshotJson(aSnapshot).dump(2) + "\n";
}

std::string summaryDocument(const Summary&  aSummary,
                            const Snapshot& aSnapshot,
                            bool            aVerbose) {
  json myDoc;
  myDoc["summary"]  = summaryJson(aSummary, aVerbose);
  myDoc["snapshot"] = snapshotJson(aSnapshot);
  return myDoc.dump(2) + "\n";
}

Snapshot parseSnapshot(std::string_view aText) {
  try {
    auto myDoc = json::parse(aText);
    if (myDoc.contains("snapshot")) {
      myDoc = myDoc.at("snapshot");
    }
    Snapshot ret;
    for (const auto& myNode : myDoc.at("weights")) {
      ret.weights.push_back(
          WeightSnapshotEntry{RouterId{myNode.at("router").get<std::int64_t>()},
                              LambdaId{myNode.at("lambda").get<std::int64_t>()},
                              DestinationId{myNode.at("destination").get<std::int64_t>()},
                              weightFromJson(myNode.at("weight_us"))});
    }
    for (const auto& myNode : myDoc.at("policies")) {
      ret.policies.push_back(PolicySnapshotEntry{
          RouterId{myNode.at("router").get<std::int64_t>()},
          LambdaId{myNode.at("lambda").get<std::int64_t>()},
          myNode.at("probes_launched").get<std::uint64_t>(),
          myNode.at("probes_rejected").get<std::uint64_t>(),
          myNode.at("dropped_responses").get<std::uint64_t>()});
    }
    return ret;
  } catch (const json::exception& aErr) {
    throw std::runtime_error(std::string("snapshot: ") + aErr.what());
  }
}

} // namespace edgedispatch

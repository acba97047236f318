// Copyright 2026 The edgedispatch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software distributed under the License is
// distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and limitations under the License.

#include "edgedispatch/scenario.hpp"

#include "edgedispatch/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <utility>
#include <queue>
#include <set>
#include <sstream>
#include <tuple>

namespace edgedispatch {

using json = nlohmann::json;

namespace {

using Adjacency = std::map<std::int64_t, std::vector<std::pair<std::int64_t, Time>>>;

Adjacency adjacency(const Scenario& aScenario) {
  Adjacency ret;
  for (const auto& myLink : aScenario.links) {
    ret[myLink.a].emplace_back(myLink.b, myLink.latency);
    ret[myLink.b].emplace_back(myLink.a, myLink.latency);
  }
  return ret;
}

struct ShortestPaths {
  std::map<std::int64_t, Time>         distance;
  std::map<std::int64_t, std::int64_t> previous;
};

// Dijkstra; ties on distance are settled by node id, so paths are stable.
ShortestPaths dijkstra(const Adjacency& aGraph, std::int64_t aSource) {
  ShortestPaths ret;
  using Item = std::pair<Time, std::int64_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> myQueue;
  ret.distance[aSource] = Time::zero();
  myQueue.emplace(Time::zero(), aSource);
  std::set<std::int64_t> myDone;
  while (not myQueue.empty()) {
    const auto [myDist, myNode] = myQueue.top();
    myQueue.pop();
    if (not myDone.insert(myNode).second) {
      continue;
    }
    const auto it = aGraph.find(myNode);
    if (it == aGraph.end()) {
      continue;
    }
    for (const auto& [myNext, myLatency] : it->second) {
      const auto myCandidate = myDist + myLatency;
      const auto jt          = ret.distance.find(myNext);
      if (jt == ret.distance.end() or myCandidate < jt->second) {
        ret.distance[myNext] = myCandidate;
        ret.previous[myNext] = myNode;
        myQueue.emplace(myCandidate, myNext);
      }
    }
  }
  return ret;
}

template <class... T>
std::string cat(const T&... aArgs) {
  std::stringstream myStream;
  (myStream << ... << aArgs);
  return myStream.str();
}

// Collects type errors while reading a JSON document.
class Reader {
 public:
  std::vector<std::string> errors;

  bool isObject(const json& aNode, const std::string& aPath) {
    if (not aNode.is_object()) {
      errors.push_back(aPath + ": expected an object");
      return false;
    }
    return true;
  }

  // Flags keys outside aKnown; aPrefix is the field path prefix ("" or
  // "routers[0].").
  void onlyKeys(const json&                         aNode,
                const std::string&                  aPrefix,
                std::initializer_list<std::string_view> aKnown) {
    for (const auto& [myKey, myValue] : aNode.items()) {
      if (std::find(aKnown.begin(), aKnown.end(), myKey) == aKnown.end()) {
        errors.push_back(aPrefix + myKey + ": unknown key");
      }
    }
  }

  const json* array(const json&        aParent,
                    const char*        aKey,
                    const std::string& aPath,
                    bool               aRequired) {
    const auto it = aParent.find(aKey);
    if (it == aParent.end()) {
      if (aRequired) {
        errors.push_back(aPath + aKey + ": missing");
      }
      return nullptr;
    }
    if (not it->is_array()) {
      errors.push_back(aPath + aKey + ": expected an array");
      return nullptr;
    }
    return &*it;
  }

  template <class T>
  T value(const json&        aParent,
          const char*        aKey,
          const std::string& aPath,
          std::optional<T>   aDefault = std::nullopt) {
    const auto it = aParent.find(aKey);
    if (it == aParent.end()) {
      if (aDefault) {
        return *aDefault;
      }
      errors.push_back(aPath + aKey + ": missing");
      return T{};
    }
    return convert<T>(*it, aPath + aKey);
  }

  template <class T>
  T convert(const json& aNode, const std::string& aPath) {
    if constexpr (std::is_same_v<T, bool>) {
      if (aNode.is_boolean()) {
        return aNode.get<bool>();
      }
      errors.push_back(aPath + ": expected a boolean");
    } else if constexpr (std::is_same_v<T, std::string>) {
      if (aNode.is_string()) {
        return aNode.get<std::string>();
      }
      errors.push_back(aPath + ": expected a string");
    } else if constexpr (std::is_integral_v<T>) {
      if (aNode.is_number_unsigned()) {
        const auto myValue = aNode.get<std::uint64_t>();
        if (myValue <= static_cast<std::uint64_t>(std::numeric_limits<T>::max())) {
          return static_cast<T>(myValue);
        }
        errors.push_back(aPath + ": out of range");
      } else if (aNode.is_number_integer()) {
        const auto myValue = aNode.get<std::int64_t>();
        if (std::in_range<T>(myValue)) {
          return static_cast<T>(myValue);
        }
        errors.push_back(aPath + ": out of range");
      } else {
        errors.push_back(aPath + ": expected an integer");
      }
    } else {
      if (aNode.is_number()) {
        return aNode.get<T>();
      }
      errors.push_back(aPath + ": expected a number");
    }
    return T{};
  }

  Time millis(const json&         aParent,
              const char*         aKey,
              const std::string&  aPath,
              std::optional<Time> aDefault = std::nullopt) {
    const auto it = aParent.find(aKey);
    if (it == aParent.end() and aDefault) {
      return *aDefault;
    }
    const auto myValue = value<double>(aParent, aKey, aPath);
    if (not std::isfinite(myValue) or std::abs(myValue) > 1e12) {
      errors.push_back(aPath + aKey + ": out of range");
      return Time::zero();
    }
    return Time::ms(myValue);
  }
};

std::string index(const std::string& aPrefix, std::size_t aIndex) {
  return aPrefix + "[" + std::to_string(aIndex) + "].";
}

json timeJson(Time aTime) {
  // integral milliseconds are written as integers to keep documents tidy
  if (aTime.micros() % 1000 == 0) {
    return aTime.micros() / 1000;
  }
  return aTime.millis();
}

} // namespace

std::vector<std::string> validate(const Scenario& aScenario) {
  std::vector<std::string> ret;

  if (aScenario.duration <= Time::zero()) {
    ret.push_back("duration_ms: must be positive");
  }
  if (aScenario.drain < Time::zero()) {
    ret.push_back("drain_ms: must be non-negative");
  }
  const auto& myPolicy = aScenario.policy;
  if (not(myPolicy.alpha >= 0.0 and myPolicy.alpha <= 1.0)) {
    ret.push_back("policy.alpha: must be in [0,1]");
  }
  if (myPolicy.backoffMin <= Time::zero()) {
    ret.push_back("policy.backoff_min_ms: must be positive");
  }
  if (myPolicy.retryInterval <= Time::zero()) {
    ret.push_back("policy.retry_ms: must be positive");
  }

  // node ids
  std::map<std::int64_t, std::string> myNodes;
  const auto addNode = [&](std::int64_t aId, const std::string& aWhere) {
    const auto [it, myNew] = myNodes.emplace(aId, aWhere);
    if (not myNew) {
      ret.push_back(cat(aWhere, "id: node id ", aId, " already used by ",
                        it->second));
    }
  };
  std::map<DestinationId, const ComputerSpec*> myComputers;
  for (std::size_t i = 0; i < aScenario.computers.size(); ++i) {
    const auto& myComputer = aScenario.computers[i];
    const auto  myPath     = index("computers", i);
    addNode(myComputer.id.value, myPath);
    myComputers.emplace(myComputer.id, &myComputer);
    if (myComputer.workers < 1) {
      ret.push_back(myPath + "workers: must be at least 1");
    }
    if (not(myComputer.beta >= 0.0)) {
      ret.push_back(myPath + "beta: must be non-negative");
    }
    for (const auto& [myLambda, myTime] : myComputer.serviceTime) {
      if (myTime <= Time::zero()) {
        ret.push_back(cat(myPath, "service: non-positive service time for lambda ",
                          myLambda.value));
      }
    }
  }
  std::set<RouterId> myRouters;
  for (std::size_t i = 0; i < aScenario.routers.size(); ++i) {
    addNode(aScenario.routers[i].id.value, index("routers", i));
    myRouters.insert(aScenario.routers[i].id);
  }
  for (std::size_t i = 0; i < aScenario.switches.size(); ++i) {
    addNode(aScenario.switches[i], "switches[" + std::to_string(i) + "].");
  }
  if (aScenario.routers.empty()) {
    ret.push_back("routers: at least one router is required");
  }
  if (aScenario.computers.empty()) {
    ret.push_back("computers: at least one computer is required");
  }

  for (std::size_t i = 0; i < aScenario.links.size(); ++i) {
    const auto& myLink = aScenario.links[i];
    const auto  myPath = index("links", i);
    for (const auto myEnd : {myLink.a, myLink.b}) {
      if (myNodes.count(myEnd) == 0) {
        ret.push_back(cat(myPath, "endpoint ", myEnd, " is not a declared node"));
      }
    }
    if (myLink.a == myLink.b) {
      ret.push_back(myPath + "self loop");
    }
    if (myLink.latency < Time::zero()) {
      ret.push_back(myPath + "latency_ms: must be non-negative");
    }
  }

  std::map<LambdaId, const LambdaSpec*> myLambdas;
  if (aScenario.lambdas.empty()) {
    ret.push_back("lambdas: at least one lambda is required");
  }
  for (std::size_t i = 0; i < aScenario.lambdas.size(); ++i) {
    const auto& myLambda = aScenario.lambdas[i];
    const auto  myPath   = index("lambdas", i);
    if (not myLambdas.emplace(myLambda.id, &myLambda).second) {
      ret.push_back(cat(myPath, "id: duplicate lambda ", myLambda.id.value));
    }
    if (myLambda.destinations.empty()) {
      ret.push_back(cat(myPath, "destinations: empty destination set for lambda ",
                        myLambda.id.value));
    }
    std::set<DestinationId> mySeen;
    for (const auto& myDest : myLambda.destinations) {
      if (not mySeen.insert(myDest).second) {
        ret.push_back(cat(myPath, "destinations: duplicate destination ",
                          myDest.value));
      }
      const auto it = myComputers.find(myDest);
      if (it == myComputers.end()) {
        ret.push_back(cat(myPath, "destinations: ", myDest.value,
                          " is not a computer"));
      } else if (it->second->serviceTime.count(myLambda.id) == 0) {
        ret.push_back(cat(myPath, "destinations: computer ", myDest.value,
                          " has no service time for lambda ",
                          myLambda.id.value));
      }
    }
  }

  const auto myPaths = pathLatencies(aScenario);
  for (std::size_t i = 0; i < aScenario.routers.size(); ++i) {
    const auto& myRouter = aScenario.routers[i];
    const auto  myPath   = index("routers", i);
    if (myRouter.clientLatency < Time::zero()) {
      ret.push_back(myPath + "client_latency_ms: must be non-negative");
    }
    if (not(myRouter.ratePerSecond > 0.0)) {
      ret.push_back(myPath + "rate_per_s: must be positive");
    }
    if (myRouter.mix.empty()) {
      ret.push_back(myPath + "mix: at least one lambda is required");
    }
    for (std::size_t j = 0; j < myRouter.mix.size(); ++j) {
      const auto& myShare = myRouter.mix[j];
      const auto  myMixPath =
          myPath + "mix[" + std::to_string(j) + "].";
      if (not(myShare.weight > 0.0)) {
        ret.push_back(myMixPath + "weight: must be positive");
      }
      const auto it = myLambdas.find(myShare.lambda);
      if (it == myLambdas.end()) {
        ret.push_back(cat(myMixPath, "lambda: unknown lambda ",
                          myShare.lambda.value));
        continue;
      }
      for (const auto& myDest : it->second->destinations) {
        if (myComputers.count(myDest) > 0 and
            myPaths.count({myRouter.id, myDest}) == 0) {
          ret.push_back(cat(myMixPath, "lambda: computer ", myDest.value,
                            " unreachable from router ", myRouter.id.value));
        }
      }
    }
  }

  for (std::size_t i = 0; i < aScenario.congestion.size(); ++i) {
    const auto& myWindow = aScenario.congestion[i];
    const auto  myPath   = index("congestion", i);
    if (myRouters.count(myWindow.router) == 0) {
      ret.push_back(cat(myPath, "router: unknown router ", myWindow.router.value));
    }
    if (myComputers.count(myWindow.destination) == 0) {
      ret.push_back(cat(myPath, "destination: unknown computer ",
                        myWindow.destination.value));
    }
    if (myWindow.from < Time::zero() or myWindow.to <= myWindow.from) {
      ret.push_back(myPath + "window: need 0 <= from_ms < to_ms");
    }
  }
  return ret;
}

void validateOrThrow(const Scenario& aScenario) {
  auto myErrors = validate(aScenario);
  if (not myErrors.empty()) {
    throw InvalidScenario(std::move(myErrors));
  }
}

Scenario parseScenario(std::string_view aText) {
  json myDoc;
  try {
    myDoc = json::parse(aText);
  } catch (const json::parse_error& aErr) {
    throw InvalidScenario({std::string("document: ") + aErr.what()});
  }

  Reader   myReader;
  Scenario ret;
  if (not myReader.isObject(myDoc, "document")) {
    throw InvalidScenario(myReader.errors);
  }
  myReader.onlyKeys(myDoc, "", {"name", "seed", "duration_ms", "drain_ms", "policy",
                                "lambdas", "computers", "routers", "switches", "links",
                                "congestion"});

  ret.name     = myReader.value<std::string>(myDoc, "name", "", std::string());
  ret.seed     = myReader.value<std::uint64_t>(myDoc, "seed", "", ret.seed);
  ret.duration = myReader.millis(myDoc, "duration_ms", "");
  ret.drain    = myReader.millis(myDoc, "drain_ms", "", ret.drain);

  if (const auto it = myDoc.find("policy"); it != myDoc.end()) {
    if (myReader.isObject(*it, "policy")) {
      myReader.onlyKeys(*it, "policy.", {"kind", "alpha", "backoff_min_ms", "retry_ms",
                                         "literal_probe_condition"});
      auto& myPolicy = ret.policy;
      const auto myKind =
          myReader.value<std::string>(*it, "kind", "policy.", std::string("rr"));
      try {
        myPolicy.kind = policyKindFromString(myKind);
      } catch (const std::invalid_argument& aErr) {
        myReader.errors.push_back(std::string("policy.kind: ") + aErr.what());
      }
      myPolicy.alpha = myReader.value<double>(*it, "alpha", "policy.", myPolicy.alpha);
      myPolicy.backoffMin =
          myReader.millis(*it, "backoff_min_ms", "policy.", myPolicy.backoffMin);
      myPolicy.retryInterval =
          myReader.millis(*it, "retry_ms", "policy.", myPolicy.retryInterval);
      myPolicy.literalProbeCondition = myReader.value<bool>(
          *it, "literal_probe_condition", "policy.", false);
    }
  }

  if (const auto* myArray = myReader.array(myDoc, "lambdas", "", true)) {
    for (std::size_t i = 0; i < myArray->size(); ++i) {
      const auto& myNode = (*myArray)[i];
      const auto  myPath = index("lambdas", i);
      if (not myReader.isObject(myNode, myPath.substr(0, myPath.size() - 1))) {
        continue;
      }
      myReader.onlyKeys(myNode, myPath, {"id", "destinations"});
      LambdaSpec myLambda;
      myLambda.id.value = myReader.value<std::int64_t>(myNode, "id", myPath);
      if (const auto* myDests =
              myReader.array(myNode, "destinations", myPath, true)) {
        for (std::size_t j = 0; j < myDests->size(); ++j) {
          myLambda.destinations.push_back(DestinationId{
              myReader.convert<std::int64_t>((*myDests)[j],
                                             myPath + "destinations[" +
                                                 std::to_string(j) + "]")});
        }
      }
      ret.lambdas.push_back(std::move(myLambda));
    }
  }

  if (const auto* myArray = myReader.array(myDoc, "computers", "", true)) {
    for (std::size_t i = 0; i < myArray->size(); ++i) {
      const auto& myNode = (*myArray)[i];
      const auto  myPath = index("computers", i);
      if (not myReader.isObject(myNode, myPath.substr(0, myPath.size() - 1))) {
        continue;
      }
      myReader.onlyKeys(myNode, myPath, {"id", "workers", "beta", "service"});
      ComputerSpec myComputer;
      myComputer.id.value = myReader.value<std::int64_t>(myNode, "id", myPath);
      myComputer.workers  = myReader.value<int>(myNode, "workers", myPath, 1);
      myComputer.beta     = myReader.value<double>(myNode, "beta", myPath, 0.0);
      if (const auto* myServices =
              myReader.array(myNode, "service", myPath, true)) {
        for (std::size_t j = 0; j < myServices->size(); ++j) {
          const auto& myService = (*myServices)[j];
          const auto  mySubPath =
              myPath + "service[" + std::to_string(j) + "].";
          if (not myReader.isObject(myService,
                                    mySubPath.substr(0, mySubPath.size() - 1))) {
            continue;
          }
          myReader.onlyKeys(myService, mySubPath, {"lambda", "ms"});
          const LambdaId myLambda{
              myReader.value<std::int64_t>(myService, "lambda", mySubPath)};
          myComputer.serviceTime[myLambda] =
              myReader.millis(myService, "ms", mySubPath);
        }
      }
      ret.computers.push_back(std::move(myComputer));
    }
  }

  if (const auto* myArray = myReader.array(myDoc, "routers", "", true)) {
    for (std::size_t i = 0; i < myArray->size(); ++i) {
      const auto& myNode = (*myArray)[i];
      const auto  myPath = index("routers", i);
      if (not myReader.isObject(myNode, myPath.substr(0, myPath.size() - 1))) {
        continue;
      }
      myReader.onlyKeys(myNode, myPath,
                        {"id", "client_latency_ms", "arrival", "rate_per_s", "mix"});
      RouterSpec myRouter;
      myRouter.id.value = myReader.value<std::int64_t>(myNode, "id", myPath);
      myRouter.clientLatency =
          myReader.millis(myNode, "client_latency_ms", myPath, Time::zero());
      const auto myArrival = myReader.value<std::string>(
          myNode, "arrival", myPath, std::string("poisson"));
      if (myArrival == "poisson") {
        myRouter.arrival = ArrivalKind::Poisson;
      } else if (myArrival == "deterministic") {
        myRouter.arrival = ArrivalKind::Deterministic;
      } else {
        myReader.errors.push_back(myPath + "arrival: expected poisson or deterministic");
      }
      myRouter.ratePerSecond = myReader.value<double>(myNode, "rate_per_s", myPath);
      if (const auto* myMix = myReader.array(myNode, "mix", myPath, true)) {
        for (std::size_t j = 0; j < myMix->size(); ++j) {
          const auto& myShare = (*myMix)[j];
          const auto  mySubPath = myPath + "mix[" + std::to_string(j) + "].";
          if (not myReader.isObject(myShare,
                                    mySubPath.substr(0, mySubPath.size() - 1))) {
            continue;
          }
          myReader.onlyKeys(myShare, mySubPath, {"lambda", "weight"});
          myRouter.mix.push_back(LambdaShare{
              LambdaId{myReader.value<std::int64_t>(myShare, "lambda", mySubPath)},
              myReader.value<double>(myShare, "weight", mySubPath, 1.0)});
        }
      }
      ret.routers.push_back(std::move(myRouter));
    }
  }

  if (const auto* myArray = myReader.array(myDoc, "switches", "", false)) {
    for (std::size_t i = 0; i < myArray->size(); ++i) {
      ret.switches.push_back(myReader.convert<std::int64_t>(
          (*myArray)[i], "switches[" + std::to_string(i) + "]"));
    }
  }

  if (const auto* myArray = myReader.array(myDoc, "links", "", false)) {
    for (std::size_t i = 0; i < myArray->size(); ++i) {
      const auto& myNode = (*myArray)[i];
      const auto  myPath = index("links", i);
      if (not myReader.isObject(myNode, myPath.substr(0, myPath.size() - 1))) {
        continue;
      }
      myReader.onlyKeys(myNode, myPath, {"a", "b", "latency_ms"});
      ret.links.push_back(
          LinkSpec{myReader.value<std::int64_t>(myNode, "a", myPath),
                   myReader.value<std::int64_t>(myNode, "b", myPath),
                   myReader.millis(myNode, "latency_ms", myPath)});
    }
  }

  if (const auto* myArray = myReader.array(myDoc, "congestion", "", false)) {
    for (std::size_t i = 0; i < myArray->size(); ++i) {
      const auto& myNode = (*myArray)[i];
      const auto  myPath = index("congestion", i);
      if (not myReader.isObject(myNode, myPath.substr(0, myPath.size() - 1))) {
        continue;
      }
      myReader.onlyKeys(myNode, myPath, {"router", "destination", "from_ms", "to_ms"});
      ret.congestion.push_back(CongestionWindow{
          RouterId{myReader.value<std::int64_t>(myNode, "router", myPath)},
          DestinationId{
              myReader.value<std::int64_t>(myNode, "destination", myPath)},
          myReader.millis(myNode, "from_ms", myPath),
          myReader.millis(myNode, "to_ms", myPath)});
    }
  }

  if (not myReader.errors.empty()) {
    throw InvalidScenario(std::move(myReader.errors));
  }
  return ret;
}

Scenario loadScenarioFile(const std::string& aPath) {
  std::ifstream myStream(aPath);
  if (not myStream) {
    throw std::runtime_error("cannot open scenario file " + aPath);
  }
  std::stringstream myBuffer;
  myBuffer << myStream.rdbuf();
  return parseScenario(myBuffer.str());
}

std::string dumpScenario(const Scenario& aScenario) {
  json myDoc;
  myDoc["name"]        = aScenario.name;
  myDoc["seed"]        = aScenario.seed;
  myDoc["duration_ms"] = timeJson(aScenario.duration);
  myDoc["drain_ms"]    = timeJson(aScenario.drain);
  myDoc["policy"]      = {
      {"kind", std::string(toString(aScenario.policy.kind))},
      {"alpha", aScenario.policy.alpha},
      {"backoff_min_ms", timeJson(aScenario.policy.backoffMin)},
      {"retry_ms", timeJson(aScenario.policy.retryInterval)},
      {"literal_probe_condition", aScenario.policy.literalProbeCondition}};

  myDoc["lambdas"] = json::array();
  for (const auto& myLambda : aScenario.lambdas) {
    json myDests = json::array();
    for (const auto& myDest : myLambda.destinations) {
      myDests.push_back(myDest.value);
    }
    myDoc["lambdas"].push_back({{"id", myLambda.id.value}, {"destinations", myDests}});
  }
  myDoc["computers"] = json::array();
  for (const auto& myComputer : aScenario.computers) {
    json myService = json::array();
    for (const auto& [myLambda, myTime] : myComputer.serviceTime) {
      myService.push_back({{"lambda", myLambda.value}, {"ms", timeJson(myTime)}});
    }
    myDoc["computers"].push_back({{"id", myComputer.id.value},
                                  {"workers", myComputer.workers},
                                  {"beta", myComputer.beta},
                                  {"service", myService}});
  }
  myDoc["routers"] = json::array();
  for (const auto& myRouter : aScenario.routers) {
    json myMix = json::array();
    for (const auto& myShare : myRouter.mix) {
      myMix.push_back({{"lambda", myShare.lambda.value}, {"weight", myShare.weight}});
    }
    myDoc["routers"].push_back(
        {{"id", myRouter.id.value},
         {"client_latency_ms", timeJson(myRouter.clientLatency)},
         {"arrival",
          myRouter.arrival == ArrivalKind::Poisson ? "poisson" : "deterministic"},
         {"rate_per_s", myRouter.ratePerSecond},
         {"mix", myMix}});
  }
  myDoc["switches"] = aScenario.switches;
  myDoc["links"]    = json::array();
  for (const auto& myLink : aScenario.links) {
    myDoc["links"].push_back(
        {{"a", myLink.a}, {"b", myLink.b}, {"latency_ms", timeJson(myLink.latency)}});
  }
  myDoc["congestion"] = json::array();
  for (const auto& myWindow : aScenario.congestion) {
    myDoc["congestion"].push_back({{"router", myWindow.router.value},
                                   {"destination", myWindow.destination.value},
                                   {"from_ms", timeJson(myWindow.from)},
                                   {"to_ms", timeJson(myWindow.to)}});
  }
  return myDoc.dump(2) + "\n";
}

Scenario lineScenario(const LineParams& aParams) {
  Scenario ret;
  ret.name     = "line";
  ret.duration = aParams.duration;

  const RouterId myRouter{100};
  LambdaSpec     myLambda{LambdaId{0}, {}};
  std::int64_t   myPrev = myRouter.value;
  for (std::size_t i = 0; i < aParams.computers; ++i) {
    const DestinationId myDest{static_cast<std::int64_t>(i + 1)};
    ret.computers.push_back(
        ComputerSpec{myDest, aParams.workers, 0.0, {{myLambda.id, aParams.service}}});
    ret.links.push_back(LinkSpec{myPrev, myDest.value, aParams.hopLatency});
    myLambda.destinations.push_back(myDest);
    myPrev = myDest.value;
  }
  ret.lambdas.push_back(myLambda);

  // aggregate capacity in requests per second
  const auto myCapacity = static_cast<double>(aParams.computers) *
                          aParams.workers * 1000.0 / aParams.service.millis();
  ret.routers.push_back(RouterSpec{myRouter,
                                   aParams.clientLatency,
                                   ArrivalKind::Poisson,
                                   aParams.utilization * myCapacity,
                                   {LambdaShare{myLambda.id, 1.0}}});
  return ret;
}

Scenario ringTreeScenario(const RingTreeParams& aParams) {
  Scenario ret;
  ret.name     = "ring-tree";
  ret.duration = aParams.duration;

  const auto myRouterId = [](std::size_t aIndex) {
    return RouterId{static_cast<std::int64_t>(100 + aIndex)};
  };
  LambdaSpec myLambda{LambdaId{0}, {}};
  for (std::size_t r = 0; r < aParams.routers; ++r) {
    ret.links.push_back(LinkSpec{myRouterId(r).value,
                                 myRouterId((r + 1) % aParams.routers).value,
                                 aParams.ringLatency});
    for (std::size_t c = 0; c < aParams.computersPerRouter; ++c) {
      const DestinationId myDest{
          static_cast<std::int64_t>(r * aParams.computersPerRouter + c + 1)};
      ret.computers.push_back(ComputerSpec{
          myDest, aParams.workers, 0.0, {{myLambda.id, aParams.service}}});
      ret.links.push_back(
          LinkSpec{myRouterId(r).value, myDest.value, aParams.leafLatency});
      myLambda.destinations.push_back(myDest);
    }
  }
  ret.lambdas.push_back(myLambda);

  const auto myCapacity = static_cast<double>(ret.computers.size()) *
                          aParams.workers * 1000.0 / aParams.service.millis();
  const auto myRate =
      aParams.utilization * myCapacity / static_cast<double>(aParams.routers);
  for (std::size_t r = 0; r < aParams.routers; ++r) {
    ret.routers.push_back(RouterSpec{myRouterId(r),
                                     aParams.clientLatency,
                                     ArrivalKind::Poisson,
                                     myRate,
                                     {LambdaShare{myLambda.id, 1.0}}});
  }

  const std::pair<std::int64_t, std::int64_t> myArc{
      std::min(myRouterId(0).value, myRouterId(1).value),
      std::max(myRouterId(0).value, myRouterId(1).value)};
  for (const auto& myRouter : ret.routers) {
    for (const auto& myComputer : ret.computers) {
      const auto myLinks =
          shortestPathLinks(ret, myRouter.id.value, myComputer.id.value);
      if (std::find(myLinks.begin(), myLinks.end(), myArc) != myLinks.end()) {
      ret.congestion.push_back(CongestionWindow{myRouter.id,
                                                  myComputer.id,
                                                  aParams.congestionFrom,
                                                  aParams.congestionTo});
      }
    }
  }
  return ret;
}

bool isBuiltinScenario(std::string_view aName) noexcept {
  return aName == "line" or aName == "ring-tree";
}

Scenario builtinScenario(std::string_view aName) {
  if (aName == "line") {
    return lineScenario();
  }
  if (aName == "ring-tree") {
    return ringTreeScenario();
  }
  throw std::invalid_argument("unknown built-in scenario '" +
                              std::string(aName) + "'");
}

std::map<std::pair<RouterId, DestinationId>, Time>
pathLatencies(const Scenario& aScenario) {
  std::map<std::pair<RouterId, DestinationId>, Time> ret;
  const auto myGraph = adjacency(aScenario);
  for (const auto& myRouter : aScenario.routers) {
    const auto myPaths = dijkstra(myGraph, myRouter.id.value);
    for (const auto& myComputer : aScenario.computers) {
      const auto it = myPaths.distance.find(myComputer.id.value);
      if (it != myPaths.distance.end()) {
        ret.emplace(std::make_pair(myRouter.id, myComputer.id), it->second);
      }
    }
  }
  return ret;
}

std::vector<std::pair<std::int64_t, std::int64_t>>
shortestPathLinks(const Scenario& aScenario, std::int64_t aFrom, std::int64_t aTo) {
  std::vector<std::pair<std::int64_t, std::int64_t>> ret;
  const auto myPaths = dijkstra(adjacency(aScenario), aFrom);
  if (myPaths.distance.count(aTo) == 0) {
    return ret;
  }
  for (auto myNode = aTo; myNode != aFrom;) {
    const auto myPrev = myPaths.previous.at(myNode);
    ret.emplace_back(std::min(myPrev, myNode), std::max(myPrev, myNode));
    myNode = myPrev;
  }
  std::reverse(ret.begin(), ret.end());
  return ret;
}

} // namespace edgedispatch

// Copyright 2026 The edgedispatch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software distributed under the License is
// distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and limitations under the License.

#include "edgedispatch/simulator.hpp"

#include "edgedispatch/errors.hpp"
#include "edgedispatch/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <sstream>

namespace edgedispatch {

ArrivalProcess::ArrivalProcess(ArrivalKind   aKind,
                               double        aRatePerSecond,
                               std::uint64_t aSeed)
    : theKind(aKind)
    , theRatePerMicro(aRatePerSecond / 1e6)
    , theRng(aSeed) {
  if (not(aRatePerSecond > 0.0) or not std::isfinite(aRatePerSecond)) {
    throw std::invalid_argument("arrival rate must be positive");
  }
}

Time ArrivalProcess::next() {
  ++theCount;
  if (theKind == ArrivalKind::Deterministic) {
    theLast = Time::us(
        std::llround(static_cast<double>(theCount) / theRatePerMicro));
  } else {
    theLast += Time::us(std::llround(theRng.exponential(theRatePerMicro)));
  }
  return theLast;
}

EComputer::EComputer(const ComputerSpec& aSpec)
    : theSpec(aSpec) {
}

Time EComputer::baseServiceTime(LambdaId aLambda) const {
  const auto it = theSpec.serviceTime.find(aLambda);
  if (it == theSpec.serviceTime.end()) {
    std::stringstream myStream;
    myStream << theSpec.id << " cannot execute " << aLambda;
    throw UnknownLambda(myStream.str());
  }
  return it->second;
}

Time serviceTime(const EComputer& aComputer, LambdaId aLambda) {
  const auto myBase = aComputer.baseServiceTime(aLambda);
  if (aComputer.beta() == 0.0) {
    return myBase;
  }
  return myBase.scaled(1.0 + aComputer.beta() *
                                 static_cast<double>(aComputer.busy()) /
                                 static_cast<double>(aComputer.workers()));
}

namespace {

std::uint64_t mixSeed(std::uint64_t aSeed, std::uint64_t aA, std::uint64_t aB) {
  auto myValue = aSeed ^ (aA * 0x9e3779b97f4a7c15ULL) ^ (aB * 0xc2b2ae3d27d4eb4fULL);
  myValue      = (myValue ^ (myValue >> 30)) * 0xbf58476d1ce4e5b9ULL;
  myValue      = (myValue ^ (myValue >> 27)) * 0x94d049bb133111ebULL;
  return myValue ^ (myValue >> 31);
}

struct Request {
  std::uint64_t seq = 0;
  LambdaId      lambda;
  std::size_t   router = 0;
  Time          issuedAt;
  Time          atRouter;
  Time          dispatchedAt;
  Time          atComputer;
  Time          serviceStart;
  Time          service;
  std::optional<DestinationId> destination;
  bool          isProbe   = false;
  bool          completed = false;
};

struct RouterState {
  RouterSpec                 spec;
  WeightTable                weights;
  std::map<LambdaId, Policy> policies;
  ArrivalProcess             arrivals;
  Rng                        mixRng;
  double                     mixTotal = 0;
};

struct EventOrder {
  bool operator()(const SimEvent& aLhs, const SimEvent& aRhs) const {
    if (aLhs.at != aRhs.at) {
      return aLhs.at > aRhs.at;
    }
    return aLhs.seq > aRhs.seq;
  }
};

class Simulation {
 public:
  explicit Simulation(const Scenario& aScenario)
      : theScenario(aScenario)
      , thePaths(pathLatencies(aScenario))
      , theHorizon(aScenario.duration + aScenario.drain) {
    for (const auto& myLambda : aScenario.lambdas) {
      theLambdas.emplace(myLambda.id, &myLambda);
    }
    for (const auto& myComputer : aScenario.computers) {
      theComputers.emplace(myComputer.id, EComputer(myComputer));
    }
    for (std::size_t r = 0; r < aScenario.routers.size(); ++r) {
      const auto& mySpec = aScenario.routers[r];
      RouterState myRouter{
          mySpec,
          WeightTable(aScenario.policy.alpha),
          {},
          ArrivalProcess(mySpec.arrival,
                         mySpec.ratePerSecond,
                         mixSeed(aScenario.seed, 1, r)),
          Rng(mixSeed(aScenario.seed, 2, r)),
          0.0};
      for (const auto& myShare : mySpec.mix) {
        myRouter.mixTotal += myShare.weight;
        if (myRouter.policies.count(myShare.lambda) > 0) {
          continue;
        }
        const auto* myLambda = theLambdas.at(myShare.lambda);
        myRouter.policies.emplace(
            myShare.lambda,
            Policy(aScenario.policy,
                   myShare.lambda,
                   myLambda->destinations,
                   mixSeed(aScenario.seed,
                           3 + r,
                           static_cast<std::uint64_t>(myShare.lambda.value))));
      }
      theRouters.push_back(std::move(myRouter));
      theRouterIndex.emplace(mySpec.id, r);
    }
  }

  RunResult run() {
    for (std::size_t r = 0; r < theRouters.size(); ++r) {
      scheduleArrival(r);
    }
    for (const auto& myWindow : theScenario.congestion) {
      SimEvent myEvent;
      myEvent.kind        = EventKind::CongestionToggle;
      myEvent.router      = myWindow.router;
      myEvent.destination = myWindow.destination;
      myEvent.on          = true;
      push(myWindow.from, myEvent);
      myEvent.on = false;
      push(myWindow.to, myEvent);
    }

    while (not theQueue.empty()) {
      const auto myEvent = theQueue.top();
      if (myEvent.at > theHorizon) {
        break;
      }
      theQueue.pop();
      theNow = myEvent.at;
      handle(myEvent);
    }
    return collect();
  }

 private:
  void push(Time aAt, SimEvent aEvent) {
    aEvent.at  = aAt;
    aEvent.seq = theEventSeq++;
    theQueue.push(aEvent);
  }

  void push(Time aAt, EventKind aKind, std::size_t aRequest) {
    SimEvent myEvent;
    myEvent.kind    = aKind;
    myEvent.request = aRequest;
    push(aAt, myEvent);
  }

  void scheduleArrival(std::size_t aRouter) {
    const auto myAt = theRouters[aRouter].arrivals.next();
    if (myAt < theScenario.duration) {
      push(myAt, EventKind::RequestArrival, aRouter);
    }
  }

  void handle(const SimEvent& aEvent) {
    switch (aEvent.kind) {
      case EventKind::RequestArrival:
        onArrival(aEvent.request);
        break;
      case EventKind::RouterDispatch:
        onDispatch(aEvent.request);
        break;
      case EventKind::DeliverToComputer:
        onDeliverToComputer(aEvent.request);
        break;
      case EventKind::ServiceEnd:
        onServiceEnd(aEvent.request);
        break;
      case EventKind::DeliverResponse:
        onDeliverResponse(aEvent.request);
        break;
      case EventKind::CongestionToggle:
        onCongestionToggle(aEvent.router, aEvent.destination, aEvent.on);
        break;
    }
  }

  void onArrival(std::size_t aRouter) {
    auto& myRouter = theRouters[aRouter];

    Request myRequest;
    myRequest.seq      = theRequests.size();
    myRequest.router   = aRouter;
    myRequest.issuedAt = theNow;
    myRequest.atRouter = theNow + myRouter.spec.clientLatency;
    auto myDraw        = myRouter.mixRng.uniform() * myRouter.mixTotal;
    myRequest.lambda   = myRouter.spec.mix.back().lambda;
    for (const auto& myShare : myRouter.spec.mix) {
      if (myDraw < myShare.weight) {
        myRequest.lambda = myShare.lambda;
        break;
      }
      myDraw -= myShare.weight;
    }
    theRequests.push_back(myRequest);
    push(myRequest.atRouter, EventKind::RouterDispatch, myRequest.seq);
    scheduleArrival(aRouter);
  }

  void onDispatch(std::size_t aRequest) {
    auto& myRequest = theRequests[aRequest];
    auto& myRouter  = theRouters[myRequest.router];
    auto& myPolicy  = myRouter.policies.at(myRequest.lambda);

    SelectionOutcome myOutcome;
    try {
      myOutcome = myPolicy.select(myRouter.weights, theNow);
    } catch (const NoEligibleDestination&) {
      push(theNow + theScenario.policy.retryInterval,
           EventKind::RouterDispatch,
           aRequest);
      return;
    }
    myRequest.destination  = myOutcome.destination;
    myRequest.isProbe      = myOutcome.isProbe;
    myRequest.dispatchedAt = theNow;
    theDispatches.push_back(DispatchRecord{myRequest.seq,
                                           myRouter.spec.id,
                                           myRequest.lambda,
                                           myOutcome.destination,
                                           theNow,
                                           myOutcome.isProbe});
    push(theNow + path(myRequest), EventKind::DeliverToComputer, aRequest);
  }

  void onDeliverToComputer(std::size_t aRequest) {
    auto& myRequest     = theRequests[aRequest];
    myRequest.atComputer = theNow;
    auto& myComputer    = theComputers.at(*myRequest.destination);
    if (myComputer.idleWorker()) {
      startService(myComputer, aRequest);
    } else {
      myComputer.queue().push_back(aRequest);
    }
  }

  void startService(EComputer& aComputer, std::size_t aRequest) {
    auto& myRequest = theRequests[aRequest];
    aComputer.occupy();
    myRequest.serviceStart = theNow;
    myRequest.service      = serviceTime(aComputer, myRequest.lambda);
    push(theNow + myRequest.service, EventKind::ServiceEnd, aRequest);
  }

  void onServiceEnd(std::size_t aRequest) {
    auto& myRequest  = theRequests[aRequest];
    auto& myComputer = theComputers.at(*myRequest.destination);
    myComputer.release();
    push(theNow + path(myRequest), EventKind::DeliverResponse, aRequest);
    if (not myComputer.queue().empty()) {
      const auto myNext = myComputer.queue().front();
      myComputer.queue().pop_front();
      startService(myComputer, myNext);
    }
  }

  void onDeliverResponse(std::size_t aRequest) {
    auto& myRequest = theRequests[aRequest];
    auto& myRouter  = theRouters[myRequest.router];
    myRouter.policies.at(myRequest.lambda)
        .onResponse(myRouter.weights,
                    *myRequest.destination,
                    theNow - myRequest.dispatchedAt,
                    theNow);
    myRequest.completed = true;

    const auto myClient = myRouter.spec.clientLatency;
    const auto myPath   = path(myRequest);
    RequestRecord myRecord;
    myRecord.seq             = myRequest.seq;
    myRecord.lambda          = myRequest.lambda;
    myRecord.router          = myRouter.spec.id;
    myRecord.destination     = *myRequest.destination;
    myRecord.issuedAt        = myRequest.issuedAt;
    myRecord.completedAt     = theNow + myClient;
    myRecord.transferDelay   = myClient * 2 + myPath * 2;
    myRecord.queueDelay      = (myRequest.dispatchedAt - myRequest.atRouter) +
                          (myRequest.serviceStart - myRequest.atComputer);
    myRecord.processingDelay = myRequest.service;
    myRecord.isProbe         = myRequest.isProbe;
    theCompleted.push_back(myRecord);
  }

  void onCongestionToggle(RouterId aRouter, DestinationId aDest, bool aOn) {
    auto& myRouter = theRouters[theRouterIndex.at(aRouter)];
    for (auto& [myLambda, myPolicy] : myRouter.policies) {
      const auto& myDests = myPolicy.destinations();
      if (not std::binary_search(myDests.begin(), myDests.end(), aDest)) {
        continue;
      }
      if (aOn) {
        theCongestionLog.push_back(CongestionLogEntry{
            theNow, aRouter, myLambda, aDest, true,
            myRouter.weights.weight(myLambda, aDest)});
      }
      myPolicy.syncCongestion(myRouter.weights, aDest, aOn, theNow);
      if (not aOn) {
        theCongestionLog.push_back(CongestionLogEntry{
            theNow, aRouter, myLambda, aDest, false,
            myRouter.weights.weight(myLambda, aDest)});
      }
    }
  }

  Time path(const Request& aRequest) const {
    return thePaths.at({theRouters[aRequest.router].spec.id,
                        *aRequest.destination});
  }

  RunResult collect() {
    RunResult ret;
    ret.arrivals     = theRequests.size();
    ret.trace.policy = theScenario.policy.kind;
    std::sort(theCompleted.begin(),
              theCompleted.end(),
              [](const RequestRecord& aLhs, const RequestRecord& aRhs) {
                return aLhs.seq < aRhs.seq;
              });
    ret.trace.completed = std::move(theCompleted);
    for (const auto& myRequest : theRequests) {
      if (not myRequest.completed) {
        ret.trace.unserved.push_back(
            UnservedRequest{myRequest.seq,
                            myRequest.lambda,
                            theRouters[myRequest.router].spec.id,
                            myRequest.issuedAt,
                            myRequest.destination,
                            myRequest.isProbe});
      }
    }
    for (const auto& myRouter : theRouters) {
      for (const auto& [myLambda, myPolicy] : myRouter.policies) {
        for (const auto& myDest : myPolicy.destinations()) {
          ret.snapshot.weights.push_back(
              WeightSnapshotEntry{myRouter.spec.id,
                                  myLambda,
                                  myDest,
                                  myRouter.weights.weight(myLambda, myDest)});
        }
        ret.snapshot.policies.push_back(
            PolicySnapshotEntry{myRouter.spec.id,
                                myLambda,
                                myPolicy.probesLaunched(),
                                myPolicy.probesRejected(),
                                myPolicy.droppedResponses()});
      }
    }
    ret.dispatches    = std::move(theDispatches);
    ret.congestionLog = std::move(theCongestionLog);
    return ret;
  }

  const Scenario&                                    theScenario;
  std::map<std::pair<RouterId, DestinationId>, Time> thePaths;
  Time                                               theHorizon;
  std::map<LambdaId, const LambdaSpec*>              theLambdas;
  std::map<DestinationId, EComputer>                 theComputers;
  std::vector<RouterState>                           theRouters;
  std::map<RouterId, std::size_t>                    theRouterIndex;

  std::priority_queue<SimEvent, std::vector<SimEvent>, EventOrder> theQueue;
  std::uint64_t                                                    theEventSeq = 0;
  Time                                                             theNow;

  std::vector<Request>            theRequests;
  std::vector<RequestRecord>      theCompleted;
  std::vector<DispatchRecord>     theDispatches;
  std::vector<CongestionLogEntry> theCongestionLog;
};

} // namespace

RunResult simulate(const Scenario& aScenario) {
  validateOrThrow(aScenario);
  return Simulation(aScenario).run();
}

} // namespace edgedispatch

// Copyright 2026 The edgedispatch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software distributed under the License is
// distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and limitations under the License.

#include "edgedispatch/edgedispatch.h"

#include "edgedispatch/errors.hpp"
#include "edgedispatch/estimator.hpp"
#include "edgedispatch/fairness.hpp"
#include "edgedispatch/metrics.hpp"
#include "edgedispatch/policy.hpp"
#include "edgedispatch/scenario.hpp"
#include "edgedispatch/simulator.hpp"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

struct ed_scenario {
  edgedispatch::Scenario scenario;
};

struct ed_run {
  edgedispatch::RunResult result;
};

struct ed_dispatcher {
  edgedispatch::WeightTable weights;
  edgedispatch::Policy      policy;
};

namespace {

using namespace edgedispatch;

thread_local std::string theLastError;

struct IoError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

ed_status fail(ed_status aStatus, std::string aMessage) {
  theLastError = std::move(aMessage);
  return aStatus;
}

// Runs aBody translating exceptions into status codes.
template <class F>
ed_status guarded(F&& aBody) noexcept {
  try {
    theLastError.clear();
    aBody();
    return ED_OK;
  } catch (const InvalidScenario& aErr) {
    return fail(ED_ERR_INVALID_SCENARIO, aErr.what());
  } catch (const NoEligibleDestination& aErr) {
    return fail(ED_ERR_NO_ELIGIBLE, aErr.what());
  } catch (const UnknownDestination& aErr) {
    return fail(ED_ERR_UNKNOWN_DESTINATION, aErr.what());
  } catch (const ObservationWhileCongested& aErr) {
    return fail(ED_ERR_PROTOCOL, aErr.what());
  } catch (const NotCongested& aErr) {
    return fail(ED_ERR_PROTOCOL, aErr.what());
  } catch (const EmptyTrace& aErr) {
    return fail(ED_ERR_EMPTY_TRACE, aErr.what());
  } catch (const IoError& aErr) {
    return fail(ED_ERR_IO, aErr.what());
  } catch (const std::invalid_argument& aErr) {
    return fail(ED_ERR_INVALID_ARGUMENT, aErr.what());
  } catch (const std::exception& aErr) {
    return fail(ED_ERR_INTERNAL, aErr.what());
  } catch (...) {
    return fail(ED_ERR_INTERNAL, "unknown error");
  }
}

void require(bool aCondition, const char* aMessage) {
  if (not aCondition) {
    throw std::invalid_argument(aMessage);
  }
}

char* duplicate(const std::string& aText) {
  auto* ret = static_cast<char*>(std::malloc(aText.size() + 1));
  if (ret == nullptr) {
    throw std::bad_alloc();
  }
  std::memcpy(ret, aText.c_str(), aText.size() + 1);
  return ret;
}

std::string readFile(const std::string& aPath) {
  std::ifstream myStream(aPath);
  if (not myStream) {
    throw IoError("cannot open " + aPath);
  }
  std::stringstream myBuffer;
  myBuffer << myStream.rdbuf();
  return myBuffer.str();
}

void writeFile(const std::string& aPath, const std::string& aContent) {
  std::ofstream myStream(aPath, std::ios::binary);
  if (not myStream) {
    throw IoError("cannot write " + aPath);
  }
  myStream << aContent;
  if (not myStream) {
    throw IoError("error writing " + aPath);
  }
}

PolicyKind toKind(ed_policy_kind aKind) {
  switch (aKind) {
    case ED_POLICY_LEAST_IMPEDANCE:
      return PolicyKind::LeastImpedance;
    case ED_POLICY_RANDOM_PROPORTIONAL:
      return PolicyKind::RandomProportional;
    case ED_POLICY_ROUND_ROBIN:
      return PolicyKind::RoundRobin;
  }
  throw std::invalid_argument("invalid policy kind");
}

std::string traceCsv(const RunResult& aResult) {
  std::stringstream myStream;
  writeTrace(myStream, aResult.trace);
  return myStream.str();
}

std::string summaryText(const RunResult& aResult, bool aVerbose) {
  return summaryDocument(
      summarize(aResult.trace, aResult.snapshot), aResult.snapshot, aVerbose);
}

std::vector<Time> toTimes(const int64_t* aWeights, size_t aCount) {
  require(aWeights != nullptr or aCount == 0, "null weights");
  std::vector<Time> ret;
  for (size_t i = 0; i < aCount; ++i) {
    require(aWeights[i] > 0, "weights must be positive");
    ret.push_back(Time::us(aWeights[i]));
  }
  return ret;
}

} // namespace

extern "C" {

const char* ed_version(void) {
  return "1.0.0";
}

const char* ed_last_error(void) {
  return theLastError.c_str();
}

void ed_string_free(char* s) {
  std::free(s);
}

ed_status ed_scenario_builtin(const char* name, ed_scenario** out) {
  return guarded([&] {
    require(name != nullptr and out != nullptr, "null argument");
    *out = new ed_scenario{builtinScenario(name)};
  });
}

ed_status ed_scenario_load_file(const char* path, ed_scenario** out) {
  return guarded([&] {
    require(path != nullptr and out != nullptr, "null argument");
    const auto myText = readFile(path);
    *out              = new ed_scenario{parseScenario(myText)};
  });
}

ed_status ed_scenario_parse(const char* json_text, ed_scenario** out) {
  return guarded([&] {
    require(json_text != nullptr and out != nullptr, "null argument");
    *out = new ed_scenario{parseScenario(json_text)};
  });
}

ed_status ed_scenario_open(const char* name_or_path, ed_scenario** out) {
  if (name_or_path == nullptr) {
    return fail(ED_ERR_INVALID_ARGUMENT, "null argument");
  }
  if (isBuiltinScenario(name_or_path)) {
    return ed_scenario_builtin(name_or_path, out);
  }
  return ed_scenario_load_file(name_or_path, out);
}

void ed_scenario_free(ed_scenario* scenario) {
  delete scenario;
}

ed_status ed_scenario_validate(const ed_scenario* scenario, char** diagnostics) {
  if (diagnostics != nullptr) {
    *diagnostics = nullptr;
  }
  std::vector<std::string> myErrors;
  const auto myStatus = guarded([&] {
    require(scenario != nullptr, "null scenario");
    myErrors = validate(scenario->scenario);
  });
  if (myStatus != ED_OK) {
    return myStatus;
  }
  if (myErrors.empty()) {
    return ED_OK;
  }
  std::string myText;
  for (const auto& myError : myErrors) {
    myText += myError + "\n";
  }
  if (diagnostics != nullptr) {
    *diagnostics = duplicate(myText);
  }
  return fail(ED_ERR_INVALID_SCENARIO, myText);
}

ed_status ed_scenario_set_policy(ed_scenario* scenario, ed_policy_kind kind) {
  return guarded([&] {
    require(scenario != nullptr, "null scenario");
    scenario->scenario.policy.kind = toKind(kind);
  });
}

ed_status ed_scenario_set_policy_name(ed_scenario* scenario, const char* name) {
  return guarded([&] {
    require(scenario != nullptr and name != nullptr, "null argument");
    scenario->scenario.policy.kind = policyKindFromString(name);
  });
}

ed_status ed_scenario_set_seed(ed_scenario* scenario, uint64_t seed) {
  return guarded([&] {
    require(scenario != nullptr, "null scenario");
    scenario->scenario.seed = seed;
  });
}

ed_status ed_scenario_set_duration_us(ed_scenario* scenario, int64_t duration) {
  return guarded([&] {
    require(scenario != nullptr, "null scenario");
    require(duration > 0, "duration must be positive");
    scenario->scenario.duration = Time::us(duration);
  });
}

ed_status ed_scenario_to_json(const ed_scenario* scenario, char** out) {
  return guarded([&] {
    require(scenario != nullptr and out != nullptr, "null argument");
    *out = duplicate(dumpScenario(scenario->scenario));
  });
}

ed_status ed_run_simulation(const ed_scenario* scenario, ed_run** out) {
  return guarded([&] {
    require(scenario != nullptr and out != nullptr, "null argument");
    *out = new ed_run{simulate(scenario->scenario)};
  });
}

void ed_run_free(ed_run* run) {
  delete run;
}

ed_status ed_run_counts(const ed_run* run,
                        uint64_t*     arrivals,
                        uint64_t*     completed,
                        uint64_t*     unserved) {
  return guarded([&] {
    require(run != nullptr, "null run");
    if (arrivals != nullptr) {
      *arrivals = run->result.arrivals;
    }
    if (completed != nullptr) {
      *completed = run->result.trace.completed.size();
    }
    if (unserved != nullptr) {
      *unserved = run->result.trace.unserved.size();
    }
  });
}

ed_status ed_run_write_trace(const ed_run* run, const char* path) {
  return guarded([&] {
    require(run != nullptr and path != nullptr, "null argument");
    writeFile(path, traceCsv(run->result));
  });
}

ed_status ed_run_trace_csv(const ed_run* run, char** out) {
  return guarded([&] {
    require(run != nullptr and out != nullptr, "null argument");
    *out = duplicate(traceCsv(run->result));
  });
}

ed_status ed_run_write_summary(const ed_run* run, const char* path, int verbose) {
  return guarded([&] {
    require(run != nullptr and path != nullptr, "null argument");
    writeFile(path, summaryText(run->result, verbose != 0));
  });
}

ed_status ed_run_summary_json(const ed_run* run, int verbose, char** out) {
  return guarded([&] {
    require(run != nullptr and out != nullptr, "null argument");
    *out = duplicate(summaryText(run->result, verbose != 0));
  });
}

ed_status ed_summarize_files(const char* trace_path,
                             const char* snapshot_path,
                             int         verbose,
                             char**      out) {
  return guarded([&] {
    require(trace_path != nullptr and snapshot_path != nullptr and out != nullptr,
            "null argument");
    std::stringstream myText(readFile(trace_path));
    const auto        mySnapshotText = readFile(snapshot_path);
    Trace             myTrace;
    Snapshot          mySnapshot;
    try {
      myTrace    = readTrace(myText);
      mySnapshot = parseSnapshot(mySnapshotText);
    } catch (const std::runtime_error& aErr) {
      // malformed input files are the caller's problem
      throw std::invalid_argument(aErr.what());
    }
    const auto mySummary = summarize(myTrace, mySnapshot);
    *out = duplicate(summaryDocument(mySummary, mySnapshot, verbose != 0));
  });
}

ed_status ed_fairness_suites(uint64_t          seed,
                             ed_suite_callback callback,
                             void*             user,
                             int*              failed) {
  return guarded([&] {
    FairnessSuiteConfig myConfig;
    myConfig.seed = seed;
    int myFailed  = 0;
    for (const auto& myResult : runFairnessSuites(myConfig)) {
      myFailed += myResult.passed ? 0 : 1;
      if (callback != nullptr) {
        callback(myResult.name.c_str(),
                 myResult.passed ? 1 : 0,
                 myResult.checks,
                 myResult.violations,
                 myResult.detail.c_str(),
                 user);
      }
    }
    if (failed != nullptr) {
      *failed = myFailed;
    }
  });
}

ed_status ed_replay_schedule(const int64_t* weights_us,
                             size_t         count,
                             size_t         steps,
                             char**         out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    require(count > 0, "at least one weight is required");
    const auto myWeights = toTimes(weights_us, count);
    *out = duplicate(formatSchedule(myWeights, replaySchedule(myWeights, steps)));
  });
}

ed_status ed_convergence_step(const int64_t* weights_us, size_t count, uint64_t* out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    require(count > 0, "at least one weight is required");
    const auto myStep = convergenceStep(toTimes(weights_us, count));
    require(myStep.has_value(), "convergence step overflows");
    *out = *myStep;
  });
}

ed_status ed_dispatcher_create(ed_policy_kind  kind,
                               double          alpha,
                               int64_t         backoff_min_us,
                               uint64_t        seed,
                               const int64_t*  destinations,
                               size_t          count,
                               ed_dispatcher** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    require(destinations != nullptr and count > 0, "no destinations");
    PolicyConfig myConfig;
    myConfig.kind       = toKind(kind);
    myConfig.alpha      = alpha;
    myConfig.backoffMin = Time::us(backoff_min_us);
    std::vector<DestinationId> myDests;
    for (size_t i = 0; i < count; ++i) {
      myDests.push_back(DestinationId{destinations[i]});
    }
    *out = new ed_dispatcher{WeightTable(alpha),
                             Policy(myConfig, LambdaId{0}, myDests, seed)};
  });
}

void ed_dispatcher_free(ed_dispatcher* dispatcher) {
  delete dispatcher;
}

ed_status ed_dispatcher_select(ed_dispatcher* dispatcher,
                               int64_t        now_us,
                               int64_t*       destination,
                               int*           is_probe) {
  return guarded([&] {
    require(dispatcher != nullptr and destination != nullptr, "null argument");
    const auto myOutcome =
        dispatcher->policy.select(dispatcher->weights, Time::us(now_us));
    *destination = myOutcome.destination.value;
    if (is_probe != nullptr) {
      *is_probe = myOutcome.isProbe ? 1 : 0;
    }
  });
}

ed_status ed_dispatcher_on_response(ed_dispatcher* dispatcher,
                                    int64_t        destination,
                                    int64_t        measured_us,
                                    int64_t        now_us) {
  return guarded([&] {
    require(dispatcher != nullptr, "null dispatcher");
    require(measured_us >= 0, "negative latency");
    dispatcher->policy.onResponse(dispatcher->weights,
                                  DestinationId{destination},
                                  Time::us(measured_us),
                                  Time::us(now_us));
  });
}

ed_status ed_dispatcher_set_congested(ed_dispatcher* dispatcher,
                                      int64_t        destination,
                                      int            congested,
                                      int64_t        now_us) {
  return guarded([&] {
    require(dispatcher != nullptr, "null dispatcher");
    dispatcher->policy.syncCongestion(dispatcher->weights,
                                      DestinationId{destination},
                                      congested != 0,
                                      Time::us(now_us));
  });
}

ed_status ed_dispatcher_weight(const ed_dispatcher* dispatcher,
                               int64_t              destination,
                               int*                 state,
                               int64_t*             weight_us) {
  return guarded([&] {
    require(dispatcher != nullptr and state != nullptr, "null argument");
    // validates the destination
    dispatcher->policy.state(DestinationId{destination});
    const auto myWeight = dispatcher->weights.weight(
        dispatcher->policy.lambda(), DestinationId{destination});
    if (not myWeight) {
      *state = 0;
    } else if (myWeight->isInfinite()) {
      *state = 2;
    } else {
      *state = 1;
      if (weight_us != nullptr) {
        *weight_us = myWeight->value().micros();
      }
    }
  });
}

} // extern "C"

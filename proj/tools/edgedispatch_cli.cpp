// Copyright 2026 The edgedispatch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software distributed under the License is
// distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and limitations under the License.

// Command-line front end. Talks to the library only through the C API.

#include "edgedispatch/edgedispatch.h"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk         = 0;
constexpr int kExitValidation = 1;
constexpr int kExitRuntime    = 2;

struct ScenarioDeleter {
  void operator()(ed_scenario* aScenario) const { ed_scenario_free(aScenario); }
};
struct RunDeleter {
  void operator()(ed_run* aRun) const { ed_run_free(aRun); }
};
struct StringDeleter {
  void operator()(char* aText) const { ed_string_free(aText); }
};

using ScenarioPtr = std::unique_ptr<ed_scenario, ScenarioDeleter>;
using RunPtr      = std::unique_ptr<ed_run, RunDeleter>;
using StringPtr   = std::unique_ptr<char, StringDeleter>;

// Bad input maps to 1, everything else to 2.
int exitCodeFor(ed_status aStatus) {
  switch (aStatus) {
    case ED_OK:
      return kExitOk;
    case ED_ERR_INVALID_ARGUMENT:
    case ED_ERR_INVALID_SCENARIO:
      return kExitValidation;
    default:
      return kExitRuntime;
  }
}

int report(ed_status aStatus, const std::string& aContext) {
  std::cerr << "edgedispatch: " << aContext << ": " << ed_last_error() << '\n';
  return exitCodeFor(aStatus);
}

struct RunOptions {
  std::string           scenario = "line";
  std::string           policy;
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t>  durationMs;
  std::string           traceOut   = "trace.csv";
  std::string           summaryOut = "summary.json";
  bool                  verbose    = false;
};

int openScenario(const std::string& aName, ScenarioPtr& aOut) {
  ed_scenario* myScenario = nullptr;
  const auto   myStatus   = ed_scenario_open(aName.c_str(), &myScenario);
  if (myStatus != ED_OK) {
    return report(myStatus, aName);
  }
  aOut.reset(myScenario);
  return kExitOk;
}

int runCommand(const RunOptions& aOptions) {
  ScenarioPtr myScenario;
  if (const auto myCode = openScenario(aOptions.scenario, myScenario)) {
    return myCode;
  }
  if (not aOptions.policy.empty()) {
    if (const auto myStatus =
            ed_scenario_set_policy_name(myScenario.get(), aOptions.policy.c_str())) {
      return report(myStatus, "--policy");
    }
  }
  if (aOptions.seed) {
    ed_scenario_set_seed(myScenario.get(), *aOptions.seed);
  }
  if (aOptions.durationMs) {
    if (const auto myStatus =
            ed_scenario_set_duration_us(myScenario.get(), *aOptions.durationMs * 1000)) {
      return report(myStatus, "--duration-ms");
    }
  }

  ed_run* myRaw = nullptr;
  if (const auto myStatus = ed_run_simulation(myScenario.get(), &myRaw)) {
    return report(myStatus, aOptions.scenario);
  }
  RunPtr myRun(myRaw);

  if (const auto myStatus = ed_run_write_trace(myRun.get(), aOptions.traceOut.c_str())) {
    return report(myStatus, "trace");
  }
  if (const auto myStatus = ed_run_write_summary(
          myRun.get(), aOptions.summaryOut.c_str(), aOptions.verbose ? 1 : 0)) {
    return report(myStatus, "summary");
  }

  std::uint64_t myArrivals  = 0;
  std::uint64_t myCompleted = 0;
  std::uint64_t myUnserved  = 0;
  ed_run_counts(myRun.get(), &myArrivals, &myCompleted, &myUnserved);
  std::cout << "requests " << myArrivals << ", completed " << myCompleted
            << ", unserved " << myUnserved << '\n'
            << "trace   " << aOptions.traceOut << '\n'
            << "summary " << aOptions.summaryOut << '\n';
  return kExitOk;
}

int validateCommand(const std::string& aPath) {
  ScenarioPtr myScenario;
  if (const auto myCode = openScenario(aPath, myScenario)) {
    return myCode;
  }
  char*      myDiagnostics = nullptr;
  const auto myStatus      = ed_scenario_validate(myScenario.get(), &myDiagnostics);
  StringPtr  myText(myDiagnostics);
  if (myStatus == ED_ERR_INVALID_SCENARIO) {
    std::cerr << (myText ? myText.get() : ed_last_error());
    return kExitValidation;
  }
  if (myStatus != ED_OK) {
    return report(myStatus, aPath);
  }
  std::cout << aPath << ": ok\n";
  return kExitOk;
}

void printSuite(const char*   aName,
                int           aPassed,
                std::uint64_t aChecks,
                std::uint64_t aViolations,
                const char*   aDetail,
                void*) {
  std::cout << (aPassed ? "PASS " : "FAIL ") << aName << ": " << aChecks
            << " checks, " << aViolations << " violations";
  if (aDetail != nullptr and *aDetail != '\0') {
    std::cout << " (" << aDetail << ')';
  }
  std::cout << '\n';
}

int suitesCommand(std::uint64_t aSeed) {
  int myFailed = 0;
  if (const auto myStatus = ed_fairness_suites(aSeed, printSuite, nullptr, &myFailed)) {
    return report(myStatus, "lemmas");
  }
  return myFailed == 0 ? kExitOk : kExitRuntime;
}

int replayCommand(const std::vector<double>& aWeightsMs, std::int64_t aSteps) {
  std::vector<std::int64_t> myWeights;
  for (const auto myMs : aWeightsMs) {
    myWeights.push_back(static_cast<std::int64_t>(myMs * 1000.0 + 0.5));
  }
  std::uint64_t mySteps = 0;
  if (aSteps > 0) {
    mySteps = static_cast<std::uint64_t>(aSteps);
  } else if (const auto myStatus =
                 ed_convergence_step(myWeights.data(), myWeights.size(), &mySteps)) {
    return report(myStatus, "replay-table");
  }
  char* myRaw = nullptr;
  if (const auto myStatus =
          ed_replay_schedule(myWeights.data(), myWeights.size(), mySteps, &myRaw)) {
    return report(myStatus, "replay-table");
  }
  StringPtr myText(myRaw);
  std::cout << myText.get();
  return kExitOk;
}

int summarizeCommand(const std::string& aTrace,
                     const std::string& aSnapshot,
                     const std::string& aOut,
                     bool               aVerbose) {
  char* myRaw = nullptr;
  if (const auto myStatus = ed_summarize_files(
          aTrace.c_str(), aSnapshot.c_str(), aVerbose ? 1 : 0, &myRaw)) {
    return report(myStatus, "summarize");
  }
  StringPtr myText(myRaw);
  if (aOut.empty() or aOut == "-") {
    std::cout << myText.get();
    return kExitOk;
  }
  std::ofstream myStream(aOut, std::ios::binary);
  myStream << myText.get();
  if (not myStream) {
    std::cerr << "edgedispatch: cannot write " << aOut << '\n';
    return kExitRuntime;
  }
  return kExitOk;
}

int showCommand(const std::string& aName) {
  ScenarioPtr myScenario;
  if (const auto myCode = openScenario(aName, myScenario)) {
    return myCode;
  }
  char* myRaw = nullptr;
  if (const auto myStatus = ed_scenario_to_json(myScenario.get(), &myRaw)) {
    return report(myStatus, aName);
  }
  StringPtr myText(myRaw);
  std::cout << myText.get();
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App myApp{"Edge lambda dispatch simulator"};
  myApp.set_version_flag("--version", std::string(ed_version()));
  myApp.require_subcommand(1);

  RunOptions myRun;
  auto*      myRunCmd = myApp.add_subcommand("run", "Simulate a scenario");
  myRunCmd->add_option("--scenario", myRun.scenario, "Scenario file, or 'line' / 'ring-tree'")
      ->capture_default_str();
  myRunCmd->add_option("--policy", myRun.policy, "Override the scenario policy")
      ->check(CLI::IsMember({"li", "rp", "rr"}));
  myRunCmd->add_option("--seed", myRun.seed, "Override the scenario seed");
  myRunCmd->add_option("--duration-ms", myRun.durationMs, "Override the arrival window")
      ->check(CLI::PositiveNumber);
  myRunCmd->add_option("--trace-out", myRun.traceOut, "Trace CSV path")->capture_default_str();
  myRunCmd->add_option("--summary-out", myRun.summaryOut, "Summary JSON path")
      ->capture_default_str();
  myRunCmd->add_flag("--verbose", myRun.verbose, "Include full fairness matrices");

  std::string myValidatePath;
  auto*       myValidateCmd = myApp.add_subcommand("validate", "Check a scenario");
  myValidateCmd->add_option("scenario,--scenario", myValidatePath, "Scenario file or built-in name")
      ->required();

  std::uint64_t mySuiteSeed = 1;
  auto*         mySuitesCmd =
      myApp.add_subcommand("lemmas", "Run the round-robin fairness property suites");
  mySuitesCmd->add_option("--seed", mySuiteSeed)->capture_default_str();

  std::vector<double> myReplayWeights{2, 3, 4};
  std::int64_t        myReplaySteps = 0;
  auto*               myReplayCmd =
      myApp.add_subcommand("replay-table", "Print a round-robin schedule for frozen weights");
  myReplayCmd->add_option("--weights", myReplayWeights, "Weights in ms")
      ->delimiter(',')
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  myReplayCmd->add_option("--steps", myReplaySteps, "Steps to print, 0 for the convergence step")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  std::string mySumTrace;
  std::string mySumSnapshot;
  std::string mySumOut;
  bool        mySumVerbose = false;
  auto*       mySumCmd =
      myApp.add_subcommand("summarize", "Recompute a summary from a trace and snapshot");
  mySumCmd->add_option("--trace", mySumTrace, "Trace CSV")->required();
  mySumCmd->add_option("--snapshot", mySumSnapshot, "Summary or snapshot JSON")->required();
  mySumCmd->add_option("--out", mySumOut, "Output path, stdout if omitted");
  mySumCmd->add_flag("--verbose", mySumVerbose, "Include full fairness matrices");

  std::string myShowName;
  auto*       myShowCmd = myApp.add_subcommand("show", "Print a scenario as JSON");
  myShowCmd->add_option("scenario,--scenario", myShowName)->required();

  try {
    myApp.parse(argc, argv);
  } catch (const CLI::Success& aErr) {
    return myApp.exit(aErr);
  } catch (const CLI::ParseError& aErr) {
    myApp.exit(aErr);
    return kExitValidation;
  }

  if (myRunCmd->parsed()) {
    return runCommand(myRun);
  }
  if (myValidateCmd->parsed()) {
    return validateCommand(myValidatePath);
  }
  if (mySuitesCmd->parsed()) {
    return suitesCommand(mySuiteSeed);
  }
  if (myReplayCmd->parsed()) {
    return replayCommand(myReplayWeights, myReplaySteps);
  }
  if (mySumCmd->parsed()) {
    return summarizeCommand(mySumTrace, mySumSnapshot, mySumOut, mySumVerbose);
  }
  if (myShowCmd->parsed()) {
    return showCommand(myShowName);
  }
  return kExitRuntime;
}

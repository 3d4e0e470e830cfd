// SPDX-License-Identifier: Apache-2.0
//
// tvwsplan - coverage, sizing and energy-efficiency planner for TVWS and LTE
// networks.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TVWS_WORKFLOW_HPP
#define TVWS_WORKFLOW_HPP

#include "tvws/config.hpp"
#include "tvws/planner.hpp"
#include "tvws/sizing.hpp"

#include <cstdint>
#include <optional>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace tvws {

// Command-line style overrides of scenario settings.
struct RunOptions {
    bool mimo_4x4 = false;
    std::optional<int> runs;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> mcs;
    std::optional<int> workers;
    std::optional<bool> growth;
};

// $TVWSPLAN_WORKERS when set, else the hardware concurrency.
int default_workers();

TechnologyProfile effective_profile(const TechnologyBundle& tech, bool mimo_4x4);

// Reference model for range queries: technology frequency, lattice (or first
// site) antenna height.
PathLossModel scenario_model(const Scenario& scenario, const TechnologyProfile& profile);

std::vector<CoveragePoint> run_coverage(const Scenario& scenario, const TechnologyBundle& tech, bool mimo_4x4);
std::vector<SizingResult> run_sweep(const Scenario& scenario, const TechnologyBundle& tech, bool mimo_4x4);

PlannerConfig effective_config(const Scenario& scenario, const RunOptions& options);

// Problem with the scenario's listed sites, or none for lattice scenarios.
PlanningProblem build_problem(const Scenario& scenario, const TechnologyBundle& tech, bool mimo_4x4);

struct PlanResult {
    PlanningProblem problem;
    PlannerConfig config;
    CampaignResult campaign;
    std::optional<GrowthResult> growth;
    std::vector<std::string> warnings;
};

PlanResult run_plan(const Scenario& scenario, const TechnologyBundle& tech, const RunOptions& options);

struct CalibrationOutcome {
    std::string id;
    std::string target;   // file the parameters belong in
    std::string method;
    std::vector<std::pair<std::string, double>> parameters;
    std::vector<std::pair<std::string, double>> diagnostics;
};

// Re-derives every shipped calibrated coefficient from data_dir/calibration.
std::vector<CalibrationOutcome> run_calibrations(const std::filesystem::path& data_dir);

} // namespace tvws

#endif

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

#ifndef TVWS_REPORT_HPP
#define TVWS_REPORT_HPP

#include "tvws/config.hpp"
#include "tvws/sizing.hpp"
#include "tvws/workflow.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace tvws {

inline constexpr int kReportSchemaVersion = 1;

std::string tool_version();

// Ordered key/value pairs attached to every output.
struct Provenance {
    std::vector<std::pair<std::string, std::string>> entries;

    void add(std::string key, std::string value) { entries.emplace_back(std::move(key), std::move(value)); }
};

Provenance make_provenance(const Scenario& scenario, const TechnologyBundle& tech, bool mimo_4x4);
void add_plan_provenance(Provenance& prov, const PlanResult& plan);

void write_comment_block(std::ostream& out, const Provenance& prov);

void write_pathloss_csv(std::ostream& out, const Provenance& prov, const PathLossModel& model, double d_min_km,
                        double d_max_km, int points);
void write_coverage_csv(std::ostream& out, const Provenance& prov, const std::vector<CoveragePoint>& curve);
void write_sweep_csv(std::ostream& out, const Provenance& prov, const std::vector<SizingResult>& sweep);

void write_sites_csv(std::ostream& out, const Provenance& prov, const RunOutcome& run);
void write_assignment_csv(std::ostream& out, const Provenance& prov, const RunOutcome& run);
void write_power_csv(std::ostream& out, const Provenance& prov, const PlanningProblem& problem,
                     const PlannerConfig& config, const RunOutcome& run);
void write_runs_csv(std::ostream& out, const Provenance& prov, const CampaignResult& campaign);
void write_progressive_csv(std::ostream& out, const Provenance& prov, const CampaignResult& campaign);
void write_raster_csv(std::ostream& out, const Provenance& prov, const PlanningProblem& problem, double pl_max_db,
                      const RunOutcome& run);
void write_map_svg(std::ostream& out, const Provenance& prov, const PlanningProblem& problem, const RunOutcome& run);

std::string report_json(const Scenario& scenario, const PlanResult& plan, const Provenance& prov);

// report.json, runs.csv, progressive.csv and the run-0 deployment files.
std::vector<std::filesystem::path> write_plan_outputs(const std::filesystem::path& dir, const Scenario& scenario,
                                                      const PlanResult& plan, const Provenance& prov);

} // namespace tvws

#endif

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

#ifndef TVWS_CHECKER_HPP
#define TVWS_CHECKER_HPP

#include "tvws/planner.hpp"

#include <string>
#include <vector>

namespace tvws {

struct CheckReport {
    std::vector<std::string> violations;

    bool ok() const noexcept { return violations.empty(); }
};

// Recomputes losses, budgets and loads from the problem and checks that every
// connected user is in range of an active site, no site is over capacity, and
// the reported totals agree.
CheckReport check_deployment(const PlanningProblem& problem, const PlannerConfig& config, const RunOutcome& run);

// Replays the event log on a fresh state, re-deciding every capacity test, and
// checks each decision and the final assignment against the recorded ones.
CheckReport replay_events(const PlanningProblem& problem, const PlannerConfig& config, const RunOutcome& run);

// Aggregates of a campaign recomputed from its per-run outcomes.
CheckReport check_campaign(const CampaignResult& campaign);

} // namespace tvws

#endif

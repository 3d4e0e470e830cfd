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

#ifndef TVWS_PLANNER_HPP
#define TVWS_PLANNER_HPP

#include "tvws/link_budget.hpp"
#include "tvws/power_energy.hpp"
#include "tvws/propagation.hpp"
#include "tvws/scenario.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace tvws {

enum class McsMode { Fixed, Adaptive };

// Which active sites a re-balancing pass may move users to.
enum class RebalanceScope { NewSiteOnly, AnyActive };

enum class LoadFactorMode { Full, ServedProportional };

// What counts as B_ij in the energy-efficiency metric.
enum class BitrateAccounting { ServedDemand, OfferedCapacity };

struct PlannerConfig {
    McsMode mcs_mode = McsMode::Fixed;
    std::string mcs_label;  // empty: the sweep optimum
    double coverage_target_fraction = 0.95;
    int runs = 40;
    std::uint64_t base_seed = 1;
    RebalanceScope rebalance = RebalanceScope::NewSiteOnly;
    bool shuffle_user_order = false;
    LoadFactorMode load_factor = LoadFactorMode::Full;
    BitrateAccounting bitrate_accounting = BitrateAccounting::ServedDemand;
    EeUserFactor ee_user_factor = EeUserFactor::Literal;
    int workers = 1;
};

void validate(const PlannerConfig& config);

struct PlanningProblem {
    Region region;
    std::vector<CandidateSite> sites;
    PopulationSpec population;
    TechnologyProfile profile;
    EnvironmentMargins margins;
    // For Hata the BS height is taken from each site's antenna height.
    PathLossModel model;
    BsPowerModel power;
};

PathLossModel model_for_site(const PathLossModel& model, const CandidateSite& site);

// MCS the planner serves with in fixed mode (config label or sweep optimum).
const McsEntry& planning_mcs(const PlanningProblem& problem, const PlannerConfig& config);

enum class EventType {
    TryActive,   // user offered to an already-active site
    Activate,    // site switched on for user
    TrySwitch,   // re-balancing: user offered to a lower-loss site
    Uncovered,   // no feasible site
};

struct PlanEvent {
    EventType type = EventType::TryActive;
    int user = -1;       // index into the population
    int site = -1;       // target site index
    int from_site = -1;  // TrySwitch only
    bool accepted = false;

    friend bool operator==(const PlanEvent&, const PlanEvent&) = default;
};

struct Deployment {
    std::vector<CandidateSite> sites;
    std::vector<bool> active;
    std::vector<int> assignment;          // per user, site index or -1
    std::vector<double> assigned_pl_db;   // per user, NaN when uncovered
    std::vector<std::string> assigned_mcs;
    std::vector<double> served_mbps;      // per site
    std::vector<double> airtime;          // per site, adaptive mode
    std::vector<double> capacity_mbps;    // per site B_BS (fixed mode)
    std::vector<double> power_w;          // per site, 0 when inactive
    std::vector<int> uncovered_users;
    std::vector<PlanEvent> events;

    int active_count() const noexcept;
};

struct RunOutcome {
    std::uint64_t seed = 0;
    UserPopulation population;
    Deployment deployment;
    double coverage_fraction = 0.0;
    double total_power_w = 0.0;
    double served_mbps_total = 0.0;
    double energy_efficiency = 0.0;
};

// Pre-computed per-problem quantities shared by all runs.
struct PlanningContext {
    const McsEntry* mcs = nullptr;           // fixed mode
    double pl_max_db = 0.0;                  // fixed mode; adaptive: lowest MCS
    double capacity_mbps = 0.0;              // fixed mode B_BS
    std::vector<const McsEntry*> adaptive;   // hardware-available, ascending SNR
    std::vector<double> adaptive_pl_max_db;
    std::vector<double> adaptive_bitrate;
};

PlanningContext make_context(const PlanningProblem& problem, const PlannerConfig& config);

RunOutcome plan_population(const PlanningProblem& problem, const PlannerConfig& config,
                           const PlanningContext& context, UserPopulation population);

RunOutcome plan_single_run(const PlanningProblem& problem, const PlannerConfig& config, std::uint64_t seed);

EnergySample energy_sample(const RunOutcome& run, BitrateAccounting accounting);

struct Summary {
    double mean = 0.0;
    double stddev = 0.0;   // sample standard deviation (n - 1)
    double min = 0.0;
    double max = 0.0;
};

Summary summarize(const std::vector<double>& values);

struct CampaignResult {
    std::string technology;
    std::string mcs_label;
    double pl_max_db = 0.0;
    double range_km = 0.0;
    double capacity_mbps = 0.0;
    std::vector<RunOutcome> runs;
    Summary coverage;
    Summary power_w;
    Summary energy_efficiency;
    Summary served_mbps;
    Summary active_sites;
    double network_ee = 0.0;            // mean over runs of the per-run EE
    double coverage_sem = 0.0;          // standard error of the mean coverage
    std::vector<double> progressive_coverage;
};

CampaignResult run_campaign(const PlanningProblem& problem, const PlannerConfig& config);

struct GrowthStep {
    int lattice_target = 0;
    int site_count = 0;
    double mean_coverage = 0.0;
};

struct GrowthResult {
    std::vector<CandidateSite> sites;
    SiteLattice lattice;
    std::vector<GrowthStep> history;
};

inline constexpr int kDefaultGrowthCap = 200;

// Densifies the lattice from `initial` one target step at a time until the
// pilot campaign's mean coverage exceeds target. Throws PlanningError once the
// site count passes growth_cap.
GrowthResult grow_site_set(const PlanningProblem& problem, const SiteLattice& initial,
                           const PlannerConfig& pilot, double target_coverage,
                           int growth_cap = kDefaultGrowthCap);

} // namespace tvws

#endif

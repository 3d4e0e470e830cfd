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

#include "tvws/checker.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace tvws {

namespace {

constexpr double kTol = 1e-6;

struct Recomputed {
    std::vector<std::vector<double>> pl;  // [user][site]
    std::vector<double> pl_max;           // per MCS tier (fixed: one entry)
    std::vector<double> rate;
    std::vector<std::string> labels;
};

Recomputed recompute(const PlanningProblem& problem, const PlannerConfig& config, const RunOutcome& run)
{
    Recomputed r;
    const auto& users = run.population.users;
    r.pl.assign(users.size(), std::vector<double>(problem.sites.size()));
    for (std::size_t s = 0; s < problem.sites.size(); ++s) {
        const PathLossModel m = model_for_site(problem.model, problem.sites[s]);
        for (std::size_t u = 0; u < users.size(); ++u) {
            const double dx = users[u].position.x - problem.sites[s].position.x;
            const double dy = users[u].position.y - problem.sites[s].position.y;
            r.pl[u][s] = path_loss_db(m, std::max(std::hypot(dx, dy), kMinDistanceKm));
        }
    }
    const double bw = problem.profile.bandwidth_mhz;
    const double floor_dbm = kThermalNoiseDbmPerHz + 10.0 * std::log10(occupied_bandwidth_hz(problem.profile));
    auto budget = [&](const McsEntry& e) {
        const TechnologyProfile& p = problem.profile;
        const double sens = floor_dbm + p.rx_noise_figure_db + e.required_snr_db;
        return p.eirp_dbm + p.rx_antenna_gain_db - p.rx_feeder_loss_db + p.mimo_gain_db - sens -
               problem.margins.shadow_margin_db - problem.margins.fade_margin_db - p.interference_margin_db;
    };
    if (config.mcs_mode == McsMode::Fixed) {
        const McsEntry& e = planning_mcs(problem, config);
        r.pl_max.push_back(budget(e));
        r.rate.push_back(e.bitrate_at(bw));
        r.labels.push_back(e.label);
    } else {
        for (const McsEntry& e : problem.profile.mcs_table)
            if (e.hardware_available) {
                r.pl_max.push_back(budget(e));
                r.rate.push_back(e.bitrate_at(bw));
                r.labels.push_back(e.label);
            }
    }
    return r;
}

int best_tier(const Recomputed& r, double pl)
{
    int k = -1;
    for (std::size_t i = 0; i < r.pl_max.size(); ++i)
        if (pl <= r.pl_max[i] + kTol)
            k = static_cast<int>(i);
    return k;
}

template <class... Args>
std::string msg(Args&&... args)
{
    std::ostringstream os;
    (os << ... << args);
    return os.str();
}

} // namespace

CheckReport check_deployment(const PlanningProblem& problem, const PlannerConfig& config, const RunOutcome& run)
{
    CheckReport rep;
    const Deployment& d = run.deployment;
    const auto& users = run.population.users;
    const std::size_t n_sites = problem.sites.size();
    if (d.assignment.size() != users.size() || d.active.size() != n_sites || d.served_mbps.size() != n_sites) {
        rep.violations.push_back("deployment vectors do not match problem dimensions");
        return rep;
    }
    const Recomputed r = recompute(problem, config, run);
    const bool fixed = config.mcs_mode == McsMode::Fixed;
    std::vector<double> load(n_sites, 0.0), air(n_sites, 0.0);
    std::size_t covered = 0;
    for (std::size_t u = 0; u < users.size(); ++u) {
        const int s = d.assignment[u];
        if (s < 0)
            continue;
        ++covered;
        if (s >= static_cast<int>(n_sites)) {
            rep.violations.push_back(msg("user ", users[u].id, " assigned to unknown site ", s));
            continue;
        }
        if (!d.active[s])
            rep.violations.push_back(msg("user ", users[u].id, " assigned to inactive site ", d.sites[s].id));
        const double pl = r.pl[u][s];
        if (std::abs(pl - d.assigned_pl_db[u]) > kTol)
            rep.violations.push_back(msg("user ", users[u].id, " reported loss ", d.assigned_pl_db[u],
                                         " differs from recomputed ", pl));
        const int k = best_tier(r, pl);
        if (k < 0) {
            rep.violations.push_back(msg("user ", users[u].id, " out of range: loss ", pl, " > ", r.pl_max.front()));
            continue;
        }
        load[s] += users[u].demand_mbps;
        air[s] += users[u].demand_mbps / r.rate[k];
        if (d.assigned_mcs[u] != r.labels[fixed ? 0 : k])
            rep.violations.push_back(msg("user ", users[u].id, " reported MCS '", d.assigned_mcs[u], "'"));
    }
    for (std::size_t s = 0; s < n_sites; ++s) {
        if (std::abs(load[s] - d.served_mbps[s]) > kTol)
            rep.violations.push_back(msg("site ", problem.sites[s].id, " served ", d.served_mbps[s],
                                         " but assigned demand sums to ", load[s]));
        if (fixed && load[s] > r.rate[0] + kTol)
            rep.violations.push_back(msg("site ", problem.sites[s].id, " over capacity: ", load[s], " > ", r.rate[0]));
        if (!fixed && air[s] > 1.0 + kTol)
            rep.violations.push_back(msg("site ", problem.sites[s].id, " airtime ", air[s], " > 1"));
        if (fixed && s < d.capacity_mbps.size() && std::abs(d.capacity_mbps[s] - r.rate[0]) > kTol)
            rep.violations.push_back(msg("site ", problem.sites[s].id, " capacity ", d.capacity_mbps[s],
                                         " differs from recomputed ", r.rate[0]));
        if (!d.active[s] && d.power_w[s] != 0.0)
            rep.violations.push_back(msg("inactive site ", problem.sites[s].id, " draws power"));
        if (d.active[s] && !(d.power_w[s] > 0.0))
            rep.violations.push_back(msg("active site ", problem.sites[s].id, " draws no power"));
    }
    const double cov = users.empty() ? 1.0 : static_cast<double>(covered) / static_cast<double>(users.size());
    if (std::abs(cov - run.coverage_fraction) > kTol)
        rep.violations.push_back(msg("coverage ", run.coverage_fraction, " but ", covered, " users connected"));
    if (d.uncovered_users.size() != users.size() - covered)
        rep.violations.push_back("uncovered list size disagrees with the assignment");
    const double total = std::accumulate(d.power_w.begin(), d.power_w.end(), 0.0);
    if (std::abs(total - run.total_power_w) > kTol)
        rep.violations.push_back(msg("total power ", run.total_power_w, " but sites sum to ", total));
    return rep;
}

CheckReport replay_events(const PlanningProblem& problem, const PlannerConfig& config, const RunOutcome& run)
{
    CheckReport rep;
    const auto& users = run.population.users;
    const Deployment& d = run.deployment;
    const Recomputed r = recompute(problem, config, run);
    const bool fixed = config.mcs_mode == McsMode::Fixed;
    const std::size_t n_sites = problem.sites.size();
    std::vector<bool> active(n_sites, false);
    std::vector<int> at(users.size(), -1);
    std::vector<double> load(n_sites, 0.0), air(n_sites, 0.0);

    auto cost = [&](int u, int s) {
        const int k = best_tier(r, r.pl[u][s]);
        return k < 0 ? INFINITY : users[u].demand_mbps / r.rate[k];
    };
    auto fits = [&](int u, int s) {
        if (fixed)
            return r.rate[0] - load[s] + 1e-9 >= users[u].demand_mbps;
        return air[s] + cost(u, s) <= 1.0 + 1e-9;
    };
    auto move = [&](int u, int s) {
        if (at[u] >= 0) {
            load[at[u]] -= users[u].demand_mbps;
            air[at[u]] -= cost(u, at[u]);
        }
        at[u] = s;
        load[s] += users[u].demand_mbps;
        air[s] += cost(u, s);
    };

    for (std::size_t i = 0; i < d.events.size(); ++i) {
        const PlanEvent& e = d.events[i];
        if (e.user < 0 || e.user >= static_cast<int>(users.size()) ||
            (e.type != EventType::Uncovered && (e.site < 0 || e.site >= static_cast<int>(n_sites)))) {
            rep.violations.push_back(msg("event ", i, " references unknown user or site"));
            return rep;
        }
        switch (e.type) {
        case EventType::TryActive: {
            const bool ok = active[e.site] && r.pl[e.user][e.site] <= r.pl_max.front() + kTol && fits(e.user, e.site);
            if (ok != e.accepted)
                rep.violations.push_back(msg("event ", i, ": try-active decision not reproduced"));
            if (e.accepted)
                move(e.user, e.site);
            break;
        }
        case EventType::Activate:
            if (!e.accepted || active[e.site] || !fits(e.user, e.site) || r.pl[e.user][e.site] > r.pl_max.front() + kTol)
                rep.violations.push_back(msg("event ", i, ": activation not admissible"));
            active[e.site] = true;
            move(e.user, e.site);
            break;
        case EventType::TrySwitch: {
            if (at[e.user] != e.from_site)
                rep.violations.push_back(msg("event ", i, ": switch source does not match replayed state"));
            const bool ok = active[e.site] && r.pl[e.user][e.site] < r.pl[e.user][e.from_site] &&
                            r.pl[e.user][e.site] <= r.pl_max.front() + kTol && fits(e.user, e.site);
            if (ok != e.accepted)
                rep.violations.push_back(msg("event ", i, ": switch decision not reproduced"));
            if (e.accepted)
                move(e.user, e.site);
            break;
        }
        case EventType::Uncovered:
            if (at[e.user] >= 0)
                rep.violations.push_back(msg("event ", i, ": connected user reported uncovered"));
            break;
        }
    }
    if (at != d.assignment)
        rep.violations.push_back("replayed assignment differs from the recorded deployment");
    if (active != d.active)
        rep.violations.push_back("replayed active set differs from the recorded deployment");
    return rep;
}

CheckReport check_campaign(const CampaignResult& c)
{
    CheckReport rep;
    std::vector<double> cov, power, ee, served, act;
    for (const RunOutcome& r : c.runs) {
        cov.push_back(r.coverage_fraction);
        power.push_back(r.total_power_w);
        ee.push_back(r.energy_efficiency);
        served.push_back(r.served_mbps_total);
        act.push_back(r.deployment.active_count());
    }
    auto same = [&](const char* name, const Summary& got, const std::vector<double>& v) {
        if (v.empty())
            return;
        const double mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
        double var = 0.0;
        for (double x : v)
            var += (x - mean) * (x - mean);
        const double sd = v.size() > 1 ? std::sqrt(var / static_cast<double>(v.size() - 1)) : 0.0;
        const double scale = std::max(1.0, std::abs(mean));
        if (std::abs(mean - got.mean) > 1e-9 * scale || std::abs(sd - got.stddev) > 1e-9 * scale)
            rep.violations.push_back(msg(name, " aggregate not recomputable from runs"));
    };
    same("coverage", c.coverage, cov);
    same("power", c.power_w, power);
    same("energy efficiency", c.energy_efficiency, ee);
    same("served", c.served_mbps, served);
    same("active sites", c.active_sites, act);
    if (c.progressive_coverage.size() != c.runs.size())
        rep.violations.push_back("progressive trace length differs from run count");
    return rep;
}

} // namespace tvws

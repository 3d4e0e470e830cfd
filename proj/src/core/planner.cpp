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

#include "tvws/planner.hpp"

#include "tvws/error.hpp"
#include "tvws/rng.hpp"
#include "tvws/sizing.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>
#include <thread>

namespace tvws {

namespace {

constexpr double kCapacityEps = 1e-9;

} // namespace

void validate(const PlannerConfig& c)
{
    if (c.runs < 1)
        throw InvalidArgument("planner runs must be at least 1");
    if (!(c.coverage_target_fraction > 0.0 && c.coverage_target_fraction <= 1.0))
        throw InvalidArgument("coverage target must be in (0, 1]");
    if (c.workers < 1)
        throw InvalidArgument("worker count must be at least 1");
}

PathLossModel model_for_site(const PathLossModel& model, const CandidateSite& site)
{
    if (const auto* hata = std::get_if<OkumuraHataRuralModel>(&model)) {
        OkumuraHataRuralModel m = *hata;
        m.bs_height_m = site.antenna_height_m;
        return m;
    }
    return model;
}

const McsEntry& planning_mcs(const PlanningProblem& problem, const PlannerConfig& config)
{
    if (!config.mcs_label.empty()) {
        const McsEntry& e = problem.profile.mcs(config.mcs_label);
        if (!e.hardware_available)
            throw InvalidArgument("MCS '" + e.label + "' is not available on current hardware");
        return e;
    }
    const double height = problem.sites.empty() ? 30.0 : problem.sites.front().antenna_height_m;
    const PathLossModel model = model_for_site(problem.model, {"", {}, height});
    const auto sweep = sweep_mcs(problem.profile, problem.margins, model, problem.region.area_km2,
                                 std::max(problem.population.expected_traffic_mbps(), 1e-9));
    return problem.profile.mcs(optimal_row(sweep).mcs_label);
}

int Deployment::active_count() const noexcept
{
    return static_cast<int>(std::count(active.begin(), active.end(), true));
}

PlanningContext make_context(const PlanningProblem& problem, const PlannerConfig& config)
{
    validate(config);
    validate(problem.profile);
    validate(problem.margins);
    validate(problem.model);
    PlanningContext ctx;
    const double bw = problem.profile.bandwidth_mhz;
    if (config.mcs_mode == McsMode::Fixed) {
        ctx.mcs = &planning_mcs(problem, config);
        ctx.pl_max_db = max_allowable_path_loss_db(problem.profile, problem.margins, *ctx.mcs);
        ctx.capacity_mbps = ctx.mcs->bitrate_at(bw);
    } else {
        for (const McsEntry& e : problem.profile.mcs_table) {
            if (!e.hardware_available)
                continue;
            ctx.adaptive.push_back(&e);
            ctx.adaptive_pl_max_db.push_back(max_allowable_path_loss_db(problem.profile, problem.margins, e));
            ctx.adaptive_bitrate.push_back(e.bitrate_at(bw));
        }
        if (ctx.adaptive.empty())
            throw DomainError("technology '" + problem.profile.name + "' has no hardware-available MCS");
        ctx.pl_max_db = ctx.adaptive_pl_max_db.front();
    }
    return ctx;
}

namespace {

// Mutable state of one greedy run.
class GreedyRun {
public:
    GreedyRun(const PlanningProblem& problem, const PlannerConfig& config, const PlanningContext& ctx,
              const UserPopulation& population)
        : problem_(problem), config_(config), ctx_(ctx), users_(population.users)
    {
        const std::size_t n_sites = problem.sites.size();
        const std::size_t n_users = users_.size();
        site_models_.reserve(n_sites);
        for (const CandidateSite& s : problem.sites)
            site_models_.push_back(model_for_site(problem.model, s));
        pl_.resize(n_users * n_sites);
        for (std::size_t u = 0; u < n_users; ++u)
            for (std::size_t s = 0; s < n_sites; ++s)
                pl_[u * n_sites + s] =
                    path_loss_db(site_models_[s], std::max(distance_km(users_[u].position, problem.sites[s].position),
                                                           kMinDistanceKm));

        d_.sites = problem.sites;
        d_.active.assign(n_sites, false);
        d_.assignment.assign(n_users, -1);
        d_.assigned_pl_db.assign(n_users, std::numeric_limits<double>::quiet_NaN());
        d_.assigned_mcs.assign(n_users, std::string{});
        d_.served_mbps.assign(n_sites, 0.0);
        d_.airtime.assign(n_sites, 0.0);
        d_.capacity_mbps.assign(n_sites, config.mcs_mode == McsMode::Fixed ? ctx.capacity_mbps : 0.0);
        d_.power_w.assign(n_sites, 0.0);
    }

    Deployment run(std::uint64_t order_seed)
    {
        std::vector<int> order(users_.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return users_[a].id < users_[b].id; });
        if (config_.shuffle_user_order) {
            Rng rng(mix_seed(order_seed ^ 0x5eed5eedULL));
            for (std::size_t i = order.size(); i > 1; --i)
                std::swap(order[i - 1], order[rng.below(i)]);
        }
        std::vector<int> by_id = order;
        std::stable_sort(by_id.begin(), by_id.end(), [&](int a, int b) { return users_[a].id < users_[b].id; });
        rebalance_order_ = std::move(by_id);

        for (int u : order)
            place(u);
        finish();
        return std::move(d_);
    }

private:
    double pl(int u, int s) const { return pl_[static_cast<std::size_t>(u) * problem_.sites.size() + s]; }

    // Index into ctx_.adaptive of the fastest MCS the link supports, or -1.
    int link_mcs(int u, int s) const
    {
        const double loss = pl(u, s);
        int best = -1;
        for (std::size_t k = 0; k < ctx_.adaptive.size(); ++k)
            if (loss <= ctx_.adaptive_pl_max_db[k])
                best = static_cast<int>(k);
        return best;
    }

    bool in_range(int u, int s) const { return pl(u, s) <= ctx_.pl_max_db; }

    double airtime_cost(int u, int s) const
    {
        const int k = link_mcs(u, s);
        return k < 0 ? std::numeric_limits<double>::infinity() : users_[u].demand_mbps / ctx_.adaptive_bitrate[k];
    }

    bool fits(int u, int s) const
    {
        if (config_.mcs_mode == McsMode::Fixed)
            return d_.capacity_mbps[s] - d_.served_mbps[s] + kCapacityEps >= users_[u].demand_mbps;
        return d_.airtime[s] + airtime_cost(u, s) <= 1.0 + kCapacityEps;
    }

    void attach(int u, int s)
    {
        d_.assignment[u] = s;
        d_.assigned_pl_db[u] = pl(u, s);
        d_.served_mbps[s] += users_[u].demand_mbps;
        if (config_.mcs_mode == McsMode::Fixed) {
            d_.assigned_mcs[u] = ctx_.mcs->label;
        } else {
            d_.airtime[s] += airtime_cost(u, s);
            d_.assigned_mcs[u] = ctx_.adaptive[link_mcs(u, s)]->label;
        }
    }

    void detach(int u)
    {
        const int s = d_.assignment[u];
        d_.served_mbps[s] -= users_[u].demand_mbps;
        if (config_.mcs_mode == McsMode::Adaptive)
            d_.airtime[s] -= airtime_cost(u, s);
        d_.assignment[u] = -1;
    }

    std::vector<int> sites_by_loss(int u) const
    {
        std::vector<int> order(problem_.sites.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return pl(u, a) < pl(u, b); });
        return order;
    }

    void place(int u)
    {
        const std::vector<int> order = sites_by_loss(u);
        for (int s : order) {
            if (!in_range(u, s))
                break;
            if (!d_.active[s])
                continue;
            const bool ok = fits(u, s);
            d_.events.push_back({EventType::TryActive, u, s, -1, ok});
            if (ok) {
                attach(u, s);
                return;
            }
        }
        for (int s : order) {
            if (!in_range(u, s))
                break;
            if (d_.active[s] || !fits(u, s))
                continue;
            d_.active[s] = true;
            d_.events.push_back({EventType::Activate, u, s, -1, true});
            attach(u, s);
            rebalance(s, u);
            return;
        }
        d_.events.push_back({EventType::Uncovered, u, -1, -1, false});
    }

    // Single pass over connected users in ascending id.
    void rebalance(int new_site, int trigger)
    {
        for (int v : rebalance_order_) {
            if (v == trigger || d_.assignment[v] < 0)
                continue;
            const int from = d_.assignment[v];
            if (config_.rebalance == RebalanceScope::NewSiteOnly) {
                try_switch(v, from, new_site);
                continue;
            }
            for (int t : sites_by_loss(v)) {
                if (!(pl(v, t) < pl(v, from)))
                    break;
                if (!d_.active[t] || !in_range(v, t))
                    continue;
                if (try_switch(v, from, t))
                    break;
            }
        }
    }

    bool try_switch(int v, int from, int to)
    {
        if (to == from || !in_range(v, to) || !(pl(v, to) < pl(v, from)))
            return false;
        const bool ok = fits(v, to);
        d_.events.push_back({EventType::TrySwitch, v, to, from, ok});
        if (ok) {
            detach(v);
            attach(v, to);
        }
        return ok;
    }

    void finish()
    {
        for (std::size_t u = 0; u < users_.size(); ++u)
            if (d_.assignment[u] < 0)
                d_.uncovered_users.push_back(users_[u].id);
        const double pr_w = dbm_to_w(problem_.profile.eirp_dbm);
        for (std::size_t s = 0; s < problem_.sites.size(); ++s) {
            if (!d_.active[s])
                continue;
            double load = 1.0;
            if (config_.load_factor == LoadFactorMode::ServedProportional)
                load = config_.mcs_mode == McsMode::Fixed
                           ? std::clamp(d_.served_mbps[s] / d_.capacity_mbps[s], 0.0, 1.0)
                           : std::clamp(d_.airtime[s], 0.0, 1.0);
            d_.power_w[s] = bs_power_w(problem_.power, {1, problem_.profile.n_transmitters, pr_w, load});
        }
    }

    const PlanningProblem& problem_;
    const PlannerConfig& config_;
    const PlanningContext& ctx_;
    const std::vector<User>& users_;
    std::vector<PathLossModel> site_models_;
    std::vector<double> pl_;
    std::vector<int> rebalance_order_;
    Deployment d_;
};

} // namespace

RunOutcome plan_population(const PlanningProblem& problem, const PlannerConfig& config,
                           const PlanningContext& context, UserPopulation population)
{
    if (problem.sites.empty())
        throw PlanningError("no candidate sites to plan with");
    RunOutcome out;
    out.seed = population.seed;
    {
        GreedyRun run(problem, config, context, population);
        out.deployment = run.run(population.seed);
    }
    out.population = std::move(population);
    const std::size_t n_users = out.population.users.size();
    out.coverage_fraction =
        n_users == 0 ? 1.0 : 1.0 - static_cast<double>(out.deployment.uncovered_users.size()) / n_users;
    out.total_power_w = std::accumulate(out.deployment.power_w.begin(), out.deployment.power_w.end(), 0.0);
    out.served_mbps_total =
        std::accumulate(out.deployment.served_mbps.begin(), out.deployment.served_mbps.end(), 0.0);
    if (out.total_power_w > 0.0) {
        out.energy_efficiency = run_energy_efficiency(energy_sample(out, config.bitrate_accounting),
                                                      problem.region.area_km2, problem.population.user_count,
                                                      config.ee_user_factor);
    }
    return out;
}

RunOutcome plan_single_run(const PlanningProblem& problem, const PlannerConfig& config, std::uint64_t seed)
{
    const PlanningContext ctx = make_context(problem, config);
    return plan_population(problem, config, ctx, generate_population(problem.region, problem.population, seed));
}

EnergySample energy_sample(const RunOutcome& run, BitrateAccounting accounting)
{
    EnergySample s;
    s.coverage_fraction = run.coverage_fraction;
    const Deployment& d = run.deployment;
    for (std::size_t i = 0; i < d.active.size(); ++i) {
        if (!d.active[i])
            continue;
        double offered = d.capacity_mbps[i];
        if (offered <= 0.0)  // adaptive: airtime-weighted delivered bitrate
            offered = d.airtime[i] > 0.0 ? d.served_mbps[i] / d.airtime[i] : 0.0;
        s.bitrate_mbps.push_back(accounting == BitrateAccounting::ServedDemand ? d.served_mbps[i] : offered);
        s.power_w.push_back(d.power_w[i]);
    }
    return s;
}

Summary summarize(const std::vector<double>& v)
{
    Summary s;
    if (v.empty())
        return s;
    s.min = *std::min_element(v.begin(), v.end());
    s.max = *std::max_element(v.begin(), v.end());
    s.mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
    if (v.size() > 1) {
        double acc = 0.0;
        for (double x : v)
            acc += (x - s.mean) * (x - s.mean);
        s.stddev = std::sqrt(acc / static_cast<double>(v.size() - 1));
    }
    return s;
}

CampaignResult run_campaign(const PlanningProblem& problem, const PlannerConfig& config)
{
    const PlanningContext ctx = make_context(problem, config);
    CampaignResult result;
    result.technology = problem.profile.name;
    result.pl_max_db = ctx.pl_max_db;
    if (ctx.mcs) {
        result.mcs_label = ctx.mcs->label;
        result.capacity_mbps = ctx.capacity_mbps;
    } else {
        result.mcs_label = "adaptive";
    }
    const double height = problem.sites.empty() ? 30.0 : problem.sites.front().antenna_height_m;
    result.range_km = invert_range_km(model_for_site(problem.model, {"", {}, height}), ctx.pl_max_db);

    result.runs.resize(static_cast<std::size_t>(config.runs));
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    auto worker = [&] {
        for (int i = next++; i < config.runs; i = next++) {
            if (failed)
                return;
            try {
                const std::uint64_t seed = config.base_seed + static_cast<std::uint64_t>(i);
                result.runs[static_cast<std::size_t>(i)] = plan_population(
                    problem, config, ctx, generate_population(problem.region, problem.population, seed));
            } catch (...) {
                if (!failed.exchange(true))
                    failure = std::current_exception();
                return;
            }
        }
    };
    const int n_workers = std::min(config.workers, config.runs);
    if (n_workers <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int w = 0; w < n_workers; ++w)
            pool.emplace_back(worker);
    }
    if (failure)
        std::rethrow_exception(failure);

    std::vector<double> cov, power, ee, served, active;
    double running = 0.0;
    for (std::size_t i = 0; i < result.runs.size(); ++i) {
        const RunOutcome& r = result.runs[i];
        if (!(r.total_power_w > 0.0))
            throw DomainError("run with seed " + std::to_string(r.seed) + " activated no base station");
        cov.push_back(r.coverage_fraction);
        power.push_back(r.total_power_w);
        ee.push_back(r.energy_efficiency);
        served.push_back(r.served_mbps_total);
        active.push_back(r.deployment.active_count());
        running += r.coverage_fraction;
        result.progressive_coverage.push_back(running / static_cast<double>(i + 1));
    }
    result.coverage = summarize(cov);
    result.power_w = summarize(power);
    result.energy_efficiency = summarize(ee);
    result.served_mbps = summarize(served);
    result.active_sites = summarize(active);
    result.network_ee = result.energy_efficiency.mean;
    result.coverage_sem = result.coverage.stddev / std::sqrt(static_cast<double>(cov.size()));
    return result;
}

GrowthResult grow_site_set(const PlanningProblem& problem, const SiteLattice& initial, const PlannerConfig& pilot,
                           double target_coverage, int growth_cap)
{
    GrowthResult out;
    PlanningProblem trial = problem;
    SiteLattice lattice = initial;
    std::size_t previous = 0;
    double best = 0.0;
    for (;;) {
        trial.sites = generate_site_lattice(problem.region, lattice);
        if (static_cast<int>(trial.sites.size()) > growth_cap)
            throw PlanningError("site growth cap of " + std::to_string(growth_cap) +
                                " reached; best mean coverage " + std::to_string(best));
        if (!trial.sites.empty() && trial.sites.size() != previous) {
            previous = trial.sites.size();
            const CampaignResult c = run_campaign(trial, pilot);
            best = std::max(best, c.coverage.mean);
            out.history.push_back({lattice.target_count, static_cast<int>(trial.sites.size()), c.coverage.mean});
            if (c.coverage.mean > target_coverage) {
                out.sites = std::move(trial.sites);
                out.lattice = lattice;
                return out;
            }
        }
        ++lattice.target_count;
    }
}

} // namespace tvws

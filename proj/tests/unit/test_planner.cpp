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

#include "doctest.h"
#include "fixtures.hpp"

#include "tvws/checker.hpp"
#include "tvws/error.hpp"
#include "tvws/planner.hpp"
#include "tvws/report.hpp"
#include "tvws/sizing.hpp"

#include <cmath>
#include <sstream>

using namespace tvws;

namespace {

PlanningProblem micro_problem()
{
    const Scenario sc = fixtures::scenario("micro");
    return build_problem(sc, fixtures::technology("802.22b", sc.environment), false);
}

PlannerConfig micro_config()
{
    return effective_config(fixtures::scenario("micro"), {});
}

void require_clean(const PlanningProblem& p, const PlannerConfig& c, const RunOutcome& r)
{
    const CheckReport a = check_deployment(p, c, r);
    const CheckReport b = replay_events(p, c, r);
    for (const auto& v : a.violations)
        FAIL_CHECK(v);
    for (const auto& v : b.violations)
        FAIL_CHECK(v);
    CHECK(a.ok());
    CHECK(b.ok());
}

std::string runs_csv(const CampaignResult& c)
{
    std::ostringstream os;
    write_runs_csv(os, {}, c);
    return os.str();
}

} // namespace

TEST_SUITE("planner")
{
    TEST_CASE("one site, one user")
    {
        PlanningProblem p = micro_problem();
        p.sites.resize(1);
        const PlannerConfig c = micro_config();
        UserPopulation pop;
        pop.users = {{0, {1.5, 2.0}, 1.0}};
        const RunOutcome r = plan_population(p, c, make_context(p, c), pop);
        CHECK(r.deployment.active_count() == 1);
        CHECK(r.deployment.assignment[0] == 0);
        CHECK(r.coverage_fraction == 1.0);
        require_clean(p, c, r);
    }

    TEST_CASE("lower-loss site wins and the other stays off")
    {
        PlanningProblem p = micro_problem();
        p.sites.resize(2);
        const PlannerConfig c = micro_config();
        UserPopulation pop;
        pop.users = {{0, {2.2, 2.1}, 1.0}};
        const RunOutcome r = plan_population(p, c, make_context(p, c), pop);
        CHECK(r.deployment.assignment[0] == 1);
        CHECK_FALSE(r.deployment.active[0]);
        CHECK(r.deployment.events.size() == 1);
        CHECK(r.deployment.events[0].type == EventType::Activate);
    }

    TEST_CASE("capacity forces a second site and triggers re-balancing")
    {
        PlanningProblem p = micro_problem();
        p.sites.resize(2);
        const PlannerConfig c = micro_config();
        UserPopulation pop;
        // 16.1 Mbps per site at the planning MCS.
        for (int i = 0; i < 5; ++i)
            pop.users.push_back({i, {1.2 + 0.3 * i, 2.0}, 4.0});
        const RunOutcome r = plan_population(p, c, make_context(p, c), pop);
        CHECK(r.deployment.active_count() == 2);
        CHECK(r.coverage_fraction == 1.0);
        bool switched = false;
        for (const PlanEvent& e : r.deployment.events)
            switched = switched || (e.type == EventType::TrySwitch && e.accepted);
        CHECK(switched);
        require_clean(p, c, r);
    }

    TEST_CASE("nobody in range is a valid outcome")
    {
        PlanningProblem p = micro_problem();
        p.margins.shadow_margin_db = 80;
        CHECK_THROWS_AS(plan_single_run(p, micro_config(), 1), DomainError);
        PlannerConfig c = micro_config();
        c.mcs_label = "1/2 QPSK";
        const RunOutcome r = plan_single_run(p, c, 1);
        CHECK(r.coverage_fraction == 0.0);
        CHECK(r.deployment.active_count() == 0);
        CHECK(r.deployment.uncovered_users.size() == r.population.users.size());
        require_clean(p, c, r);
        CHECK_THROWS_AS(run_campaign(p, c), DomainError);
    }

    TEST_CASE("empty candidate list is rejected")
    {
        PlanningProblem p = micro_problem();
        p.sites.clear();
        CHECK_THROWS(plan_single_run(p, micro_config(), 1));
    }

    TEST_CASE("checker catches tampering")
    {
        const PlanningProblem p = micro_problem();
        const PlannerConfig c = micro_config();
        const RunOutcome good = plan_single_run(p, c, 3);
        REQUIRE(check_deployment(p, c, good).ok());

        RunOutcome r = good;
        int covered = -1;
        for (std::size_t u = 0; u < r.deployment.assignment.size(); ++u)
            if (r.deployment.assignment[u] >= 0)
                covered = static_cast<int>(u);
        REQUIRE(covered >= 0);
        r.deployment.power_w[r.deployment.assignment[covered]] += 1.0;
        CHECK_FALSE(check_deployment(p, c, r).ok());

        r = good;
        r.deployment.served_mbps[r.deployment.assignment[covered]] += 100.0;
        CHECK_FALSE(check_deployment(p, c, r).ok());

        r = good;
        r.deployment.capacity_mbps.assign(r.deployment.capacity_mbps.size(), 0.5);
        CHECK_FALSE(check_deployment(p, c, r).ok());

        r = good;
        r.coverage_fraction = 1.0 - r.coverage_fraction + 0.25;
        CHECK_FALSE(check_deployment(p, c, r).ok());

        r = good;
        r.population.users[covered].position = {60.0, 60.0};
        CHECK_FALSE(check_deployment(p, c, r).ok());

        r = good;
        REQUIRE_FALSE(r.deployment.events.empty());
        r.deployment.events.front().accepted = !r.deployment.events.front().accepted;
        CHECK_FALSE(replay_events(p, c, r).ok());

        r = good;
        r.deployment.events.pop_back();
        CHECK_FALSE(replay_events(p, c, r).ok());
    }

    TEST_CASE("every shipped cell passes the checker and the replay")
    {
        for (const char* sc : fixtures::kScenarios)
            for (const char* t : fixtures::kTechnologies)
                for (bool mimo : {false, true}) {
                    CAPTURE(sc);
                    CAPTURE(t);
                    CAPTURE(mimo);
                    const PlanResult plan = fixtures::plan(sc, t, mimo, 4);
                    for (const RunOutcome& r : plan.campaign.runs) {
                        const CheckReport a = check_deployment(plan.problem, plan.config, r);
                        const CheckReport b = replay_events(plan.problem, plan.config, r);
                        CHECK(a.ok());
                        CHECK(b.ok());
                    }
                    CHECK(check_campaign(plan.campaign).ok());
                }
    }

    TEST_CASE("alternative planner modes stay feasible")
    {
        const Scenario sc = fixtures::scenario("ghent_suburban");
        const PlanResult base = fixtures::plan("ghent_suburban", "802.22b");
        for (int variant = 0; variant < 4; ++variant) {
            PlannerConfig c = base.config;
            c.runs = 8;
            c.workers = 2;
            if (variant == 0)
                c.mcs_mode = McsMode::Adaptive;
            if (variant == 1)
                c.rebalance = RebalanceScope::AnyActive;
            if (variant == 2)
                c.shuffle_user_order = true;
            if (variant == 3) {
                c.load_factor = LoadFactorMode::ServedProportional;
                c.bitrate_accounting = BitrateAccounting::OfferedCapacity;
                c.ee_user_factor = EeUserFactor::CoveredFraction;
            }
            CAPTURE(variant);
            const CampaignResult camp = run_campaign(base.problem, c);
            for (const RunOutcome& r : camp.runs) {
                CHECK(check_deployment(base.problem, c, r).ok());
                CHECK(replay_events(base.problem, c, r).ok());
            }
            CHECK(check_campaign(camp).ok());
        }
    }

    TEST_CASE("results do not depend on the worker count")
    {
        const PlanResult base = fixtures::plan("boyeros_rural", "LTE");
        PlannerConfig c = base.config;
        std::string reference;
        for (int workers : {1, 2, 3, 8, 40}) {
            c.workers = workers;
            const CampaignResult camp = run_campaign(base.problem, c);
            const std::string csv = runs_csv(camp);
            if (reference.empty())
                reference = csv;
            CHECK(csv == reference);
            for (std::size_t i = 0; i < camp.runs.size(); ++i)
                CHECK(camp.runs[i].deployment.events == base.campaign.runs[i].deployment.events);
        }
    }

    TEST_CASE("repeated runs reproduce the event log")
    {
        const PlanningProblem p = micro_problem();
        const PlannerConfig c = micro_config();
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            const RunOutcome a = plan_single_run(p, c, seed);
            const RunOutcome b = plan_single_run(p, c, seed);
            CHECK(a.deployment.events == b.deployment.events);
            CHECK(a.deployment.assignment == b.deployment.assignment);
        }
    }

    TEST_CASE("a single-run campaign is that run")
    {
        const PlanningProblem p = micro_problem();
        PlannerConfig c = micro_config();
        c.runs = 1;
        c.base_seed = 9;
        const CampaignResult camp = run_campaign(p, c);
        const RunOutcome r = plan_single_run(p, c, 9);
        CHECK(camp.coverage.mean == r.coverage_fraction);
        CHECK(camp.power_w.mean == r.total_power_w);
        CHECK(camp.energy_efficiency.mean == r.energy_efficiency);
        CHECK(camp.coverage.stddev == 0.0);
        CHECK(camp.progressive_coverage.size() == 1);
    }

    TEST_CASE("more candidate sites never lower mean coverage")
    {
        const Scenario sc = fixtures::scenario("ghent_suburban");
        const auto tech = fixtures::technology("802.22b", sc.environment);
        PlanningProblem p = build_problem(sc, tech, false);
        PlannerConfig c = effective_config(sc, {});
        c.workers = 4;
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            SiteLattice lat = *sc.sites.lattice;
            lat.seed = seed;
            lat.target_count = 10;
            p.sites = generate_site_lattice(sc.region, lat);
            const double sparse = run_campaign(p, c).coverage.mean;
            lat.target_count = 20;
            lat.seed = seed + 100;
            for (CandidateSite s : generate_site_lattice(sc.region, lat)) {
                s.id = "X" + s.id;
                p.sites.push_back(s);
            }
            const CampaignResult dense = run_campaign(p, c);
            CAPTURE(seed);
            CHECK(dense.coverage.mean >= sparse);
        }
    }

    TEST_CASE("deployments meeting the target respect the sizing bound")
    {
        for (const char* sc : fixtures::kScenarios)
            for (const char* t : fixtures::kTechnologies) {
                const PlanResult plan = fixtures::plan(sc, t, false, 4);
                const Scenario s = fixtures::scenario(sc);
                const auto sweep = run_sweep(s, fixtures::technology(t, s.environment), false);
                const SizingResult& row = optimal_row(sweep);
                for (const RunOutcome& r : plan.campaign.runs)
                    if (r.coverage_fraction >= plan.config.coverage_target_fraction)
                        CHECK(r.deployment.active_count() >= row.n_bs_load);
            }
    }

    TEST_CASE("campaign coverage levels")
    {
        const PlanResult sub = fixtures::plan("ghent_suburban", "802.22b", false, 4);
        CHECK(sub.campaign.coverage.mean > 0.96);
        CHECK(sub.campaign.coverage_sem < 0.005);
        const PlanResult rur = fixtures::plan("boyeros_rural", "802.22b", false, 4);
        CHECK(rur.campaign.coverage.mean > 0.99);
    }

    TEST_CASE("4x4 needs fewer active sites in the suburban scenario")
    {
        for (const char* t : fixtures::kTechnologies) {
            CAPTURE(t);
            const PlanResult siso = fixtures::plan("ghent_suburban", t, false, 4);
            const PlanResult mimo = fixtures::plan("ghent_suburban", t, true, 4);
            CHECK(mimo.campaign.active_sites.mean < siso.campaign.active_sites.mean);
        }
    }

    TEST_CASE("growth")
    {
        const Scenario sc = fixtures::scenario("boyeros_rural");
        const auto tech = fixtures::technology("802.22b", sc.environment);
        PlanningProblem p = build_problem(sc, tech, false);
        PlannerConfig pilot = effective_config(sc, {});
        pilot.runs = 10;
        pilot.workers = 4;
        SiteLattice lat = *sc.sites.lattice;
        lat.target_count = 40;
        const GrowthResult met = grow_site_set(p, lat, pilot, 0.5);
        CHECK(met.history.size() == 1);
        CHECK(met.lattice.target_count == 40);
        CHECK(met.sites.size() == generate_site_lattice(sc.region, lat).size());

        lat.target_count = 1;
        const GrowthResult grown = grow_site_set(p, lat, pilot, 0.95);
        CHECK(grown.history.back().mean_coverage > 0.95);
        for (std::size_t i = 1; i < grown.history.size(); ++i)
            CHECK(grown.history[i].site_count != grown.history[i - 1].site_count);

        p.margins.shadow_margin_db = 40;
        CHECK_THROWS_AS(grow_site_set(p, lat, pilot, 0.95, 30), PlanningError);
    }

    TEST_CASE("config validation")
    {
        PlannerConfig c = micro_config();
        c.runs = 0;
        CHECK_THROWS(validate(c));
        c = micro_config();
        c.coverage_target_fraction = 1.5;
        CHECK_THROWS(validate(c));
        c = micro_config();
        c.mcs_label = "7/8 256-QAM";
        CHECK_THROWS_AS(make_context(micro_problem(), c), InvalidArgument);
        c.mcs_label = "9/10 QPSK";
        CHECK_THROWS(make_context(micro_problem(), c));
        c.mcs_label = "1/2 QPSK";
        CHECK(make_context(micro_problem(), c).capacity_mbps == doctest::Approx(6.0));
    }
}

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

// One line per criterion.

#include "fixtures.hpp"
#include "oracles.hpp"
#include "properties.hpp"

#include "tvws/checker.hpp"
#include "tvws/link_budget.hpp"
#include "tvws/planner.hpp"
#include "tvws/power_energy.hpp"
#include "tvws/propagation.hpp"
#include "tvws/report.hpp"
#include "tvws/sizing.hpp"
#include "tvws/workflow.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

using namespace tvws;

namespace {

struct Verdict {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            detail << " [FAIL " << what << "]";
        }
    }
};

int failures = 0;
int unexpected = 0;
std::vector<int> known;

void criterion(int n, const std::function<void(Verdict&)>& body)
{
    Verdict v;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(v);
    } catch (const std::exception& e) {
        v.pass = false;
        v.detail << " exception: " << e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool expected = std::find(known.begin(), known.end(), n) != known.end();
    if (!v.pass) {
        ++failures;
        if (!expected)
            ++unexpected;
    }
    std::printf("criterion %d: %s%s (%.1fs)%s\n", n, v.pass ? "PASS" : "FAIL", !v.pass && expected ? " (known)" : "", s,
                v.detail.str().c_str());
    std::fflush(stdout);
}

bool within(double x, double ref, double rel)
{
    return std::abs(x - ref) <= rel * std::abs(ref);
}

std::string fmt(double x, int prec = 3)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", prec, x);
    return buf;
}

Environment env_of(const std::string& scenario)
{
    return fixtures::scenario(scenario).environment;
}

const CoveragePoint& point(const std::vector<CoveragePoint>& curve, const std::string& label)
{
    for (const CoveragePoint& p : curve)
        if (p.mcs_label == label)
            return p;
    throw std::runtime_error("no MCS " + label);
}

std::vector<CoveragePoint> curve(const std::string& scenario, const std::string& tech)
{
    const Scenario sc = fixtures::scenario(scenario);
    return run_coverage(sc, fixtures::technology(tech, sc.environment), false);
}

std::string runs_csv(const CampaignResult& c)
{
    std::ostringstream os;
    write_runs_csv(os, {}, c);
    return os.str();
}

// Campaigns are shared between criteria 8 to 10.
std::map<std::string, PlanResult> plans;

const PlanResult& plan(const std::string& scenario, const std::string& tech, bool mimo)
{
    const std::string key = scenario + "|" + tech + (mimo ? "|4x4" : "|siso");
    auto it = plans.find(key);
    if (it == plans.end())
        it = plans.emplace(key, fixtures::plan(scenario, tech, mimo, default_workers())).first;
    return it->second;
}

} // namespace

// --known-fail N keeps criterion N out of the exit status. Its line still reads FAIL.
int main(int argc, char** argv)
{
    for (int i = 1; i + 1 < argc; i += 2)
        if (std::string(argv[i]) == "--known-fail")
            known.push_back(std::stoi(argv[i + 1]));

    criterion(1, [](Verdict& v) {
        const TechnologyBundle t = fixtures::technology("802.22b", Environment::Suburban);
        const double p = bs_power_w(t.power, {1, 1, 4.0, 1.0});
        v.detail << " P_BS=" << fmt(p) << " W";
        v.require(std::abs(p - 64.0) <= 0.1, "within 0.1 W of 64");
    });

    criterion(2, [](Verdict& v) {
        for (const char* tech : {"802.22", "802.22b", "802.11af"}) {
            const TechnologyBundle t = fixtures::technology(tech, Environment::Rural);
            const double p = bs_power_w(t.power, {1, 1, 0.0, 0.0});
            v.detail << " " << tech << "=" << fmt(p) << " W";
            v.require(p == 38.0, std::string(tech) + " idle == 38");
        }
    });

    criterion(3, [](Verdict& v) {
        const int area = min_bs_for_area(169.0, 17.6);
        const int load = min_bs_for_load(205.28, 24.1);
        v.detail << " area_bound=" << area << " load_bound=" << load;
        v.require(area == 1 && area == static_cast<int>(std::ceil(169.0 / (std::numbers::pi * 17.6 * 17.6))), "area bound 1");
        v.require(load == 9 && load == static_cast<int>(std::ceil(205.28 / 24.1)), "load bound 9");
        v.require(area >= 1 && area <= 3, "1 to 3 rural BSs");
    });

    criterion(4, [](Verdict& v) {
        const double dist[] = {1, 1.5, 2, 3, 5, 7, 10, 12.5, 15, 20};
        const OkumuraHataRuralModel cfgs[] = {{605, 30, 3, 0}, {821, 30, 3, 1.785}, {602, 50, 1.5, 0}};
        double worst_db = 0, worst_m = 0;
        for (const auto& m : cfgs)
            for (double d : dist) {
                const double pl = path_loss_db(m, d);
                worst_db = std::max(worst_db, std::abs(
                    pl - oracle::hata_rural_db(m.freq_mhz, m.bs_height_m, m.rx_height_m, d, m.excess_loss_db)));
                worst_m = std::max(worst_m, 1000.0 * std::abs(invert_range_km(m, pl) - d));
            }
        v.detail << " max_dev=" << fmt(worst_db, 6) << " dB max_roundtrip=" << fmt(worst_m, 6) << " m";
        v.require(worst_db <= 0.01, "0.01 dB");
        v.require(worst_m < 1.0, "1 m");
    });

    criterion(5, [](Verdict& v) {
        struct Case {
            const char* scenario;
            const char* tech;
            double ref_km;
            double tol;
        };
        for (const Case& c : {Case{"boyeros_rural", "802.22b", 17.6, 0.05}, Case{"ghent_suburban", "802.22b", 7.0, 0.10},
                              Case{"boyeros_rural", "LTE", 12.1, 0.05}, Case{"ghent_suburban", "LTE", 3.2, 0.10}}) {
            const double r = point(curve(c.scenario, c.tech), "1/2 QPSK").range_km;
            v.detail << " " << c.tech << "/" << to_string(env_of(c.scenario)) << "=" << fmt(r) << " km";
            v.require(within(r, c.ref_km, c.tol), std::string(c.tech) + " " + c.scenario);
        }
    });

    criterion(6, [](Verdict& v) {
        for (const char* sc : fixtures::kScenarios) {
            const auto c22 = curve(sc, "802.22");
            const auto c22b = curve(sc, "802.22b");
            const auto c11 = curve(sc, "802.11af");
            const auto lte = curve(sc, "LTE");
            int tiers = 0;
            for (const CoveragePoint& tier : c22) {
                const double b = tier.bitrate_mbps;
                const double r22 = range_at_bitrate_km(c22, b), r22b = range_at_bitrate_km(c22b, b),
                             r11 = range_at_bitrate_km(c11, b), rl = range_at_bitrate_km(lte, b);
                const std::string at = std::string(sc) + " @" + fmt(b, 1) + " Mbps";
                v.require(r22b > r22, at + " 22b>22");
                v.require(r22 > r11, at + " 22>11af");
                v.require(rl < r22b, at + " LTE<22b");
                ++tiers;
            }
            v.detail << " " << sc << ":" << tiers << " tiers";
        }
    });

    criterion(7, [](Verdict& v) {
        const std::map<std::string, std::vector<std::string>> expect = {
            {"ghent_suburban", {"2/3 16-QAM", "2/3 16-QAM", "3/4 16-QAM", "1/2 16-QAM"}},
            {"boyeros_rural", {"2/3 64-QAM", "2/3 64-QAM", "5/6 64-QAM", "2/3 16-QAM"}},
        };
        for (const auto& [sc_name, labels] : expect) {
            const Scenario sc = fixtures::scenario(sc_name);
            for (std::size_t i = 0; i < labels.size(); ++i) {
                const char* tech = fixtures::kTechnologies[i];
                const std::string got =
                    optimal_row(run_sweep(sc, fixtures::technology(tech, sc.environment), false)).mcs_label;
                if (got != labels[i])
                    v.require(false, sc_name + " " + tech + " got " + got);
            }
        }
        v.detail << " 8 optima checked";
    });

    criterion(8, [](Verdict& v) {
        const std::map<std::string, std::pair<std::vector<double>, double>> counts = {
            {"ghent_suburban", {{20, 20, 21, 36}, 0.15}},
            {"boyeros_rural", {{10, 10, 10, 13}, 0.20}},
        };
        for (const auto& [sc, ref] : counts) {
            double best_tvws = 0, lte = 0;
            v.detail << " " << sc << ":";
            for (std::size_t i = 0; i < 4; ++i) {
                const std::string tech = fixtures::kTechnologies[i];
                const PlanResult& p = plan(sc, tech, false);
                const auto sites = static_cast<double>(p.problem.sites.size());
                const CampaignResult& c = p.campaign;
                v.detail << " " << tech << "{sites " << sites << " active " << fmt(c.active_sites.mean, 2) << " cov "
                         << fmt(c.coverage.mean) << " P " << fmt(c.power_w.mean, 1) << " EE " << fmt(c.network_ee, 1)
                         << "}";
                v.require(within(sites, ref.first[i], ref.second), sc + " " + tech + " site count");
                v.require(c.coverage.mean >= 0.95, sc + " " + tech + " coverage");
                if (tech == "LTE")
                    lte = c.network_ee;
                else
                    best_tvws = std::max(best_tvws, c.network_ee);
                if (sc == "ghent_suburban") {
                    if (tech == "LTE")
                        v.require(within(c.power_w.mean, 13769.0, 0.10), "LTE suburban power");
                    else
                        v.require(c.power_w.mean >= 900.0 && c.power_w.mean <= 1150.0, tech + " suburban power");
                    if (tech == "802.22b")
                        v.require(within(c.network_ee, 2996.8, 0.25), "802.22b suburban EE");
                }
            }
            const double ratio = best_tvws / lte;
            v.detail << " ratio " << fmt(ratio, 2);
            v.require(ratio >= (sc == "ghent_suburban" ? 10.0 : 9.0), sc + " EE ratio");
        }
    });

    criterion(9, [](Verdict& v) {
        struct Case {
            const char* scenario;
            const char* tech;
            int sign;  // +1 positive, 0 non-negative within noise, -1 negative
        };
        for (const Case& c : {Case{"ghent_suburban", "LTE", 1}, Case{"ghent_suburban", "802.22b", 0},
                              Case{"ghent_suburban", "802.11af", -1}, Case{"boyeros_rural", "802.11af", -1}}) {
            const CampaignResult& s = plan(c.scenario, c.tech, false).campaign;
            const CampaignResult& m = plan(c.scenario, c.tech, true).campaign;
            const double change = (m.network_ee - s.network_ee) / s.network_ee;
            const double noise = std::hypot(s.energy_efficiency.stddev, m.energy_efficiency.stddev) / s.network_ee;
            v.detail << " " << c.tech << "/" << to_string(env_of(c.scenario)) << " " << fmt(100 * change, 1)
                     << "% (noise " << fmt(100 * noise, 1) << "%)";
            const std::string what = std::string(c.tech) + " " + c.scenario;
            if (c.sign > 0)
                v.require(change > 0, what + " positive");
            else if (c.sign < 0)
                v.require(change < 0, what + " negative");
            else
                v.require(change >= -noise, what + " non-negative within noise");
        }
    });

    criterion(10, [](Verdict& v) {
        int runs = 0;
        for (const char* sc : fixtures::kScenarios)
            for (const char* tech : fixtures::kTechnologies)
                for (bool mimo : {false, true}) {
                    const PlanResult& p = plan(sc, tech, mimo);
                    const std::string what = std::string(sc) + " " + tech + (mimo ? " 4x4" : "");
                    for (const RunOutcome& r : p.campaign.runs) {
                        v.require(check_deployment(p.problem, p.config, r).ok(), what + " check");
                        v.require(replay_events(p.problem, p.config, r).ok(), what + " replay");
                        ++runs;
                    }
                    v.require(check_campaign(p.campaign).ok(), what + " campaign");
                }
        for (const char* sc : fixtures::kScenarios) {
            const PlanResult& p = plan(sc, "802.11af", false);
            const std::string reference = runs_csv(p.campaign);
            for (int workers : {1, 3, 16}) {
                PlannerConfig c = p.config;
                c.workers = workers;
                const CampaignResult again = run_campaign(p.problem, c);
                v.require(runs_csv(again) == reference, std::string(sc) + " workers " + std::to_string(workers));
                for (std::size_t i = 0; i < again.runs.size(); ++i)
                    if (again.runs[i].deployment.events != p.campaign.runs[i].deployment.events)
                        v.require(false, std::string(sc) + " event log");
            }
        }
        v.detail << " " << runs << " runs checked";
    });

    criterion(11, [](Verdict& v) {
        const Scenario sc = fixtures::scenario("micro");
        const PlanningProblem p = build_problem(sc, fixtures::technology("802.22b", sc.environment), false);
        const PlannerConfig c = effective_config(sc, {});
        const McsEntry& mcs = planning_mcs(p, c);
        int max_gap = 0, greedy_total = 0, opt_total = 0;
        for (std::uint64_t seed = 1; seed <= 200; ++seed) {
            const RunOutcome r = plan_single_run(p, c, seed);
            v.require(check_deployment(p, c, r).ok(), "feasible seed " + std::to_string(seed));
            v.require(plan_single_run(p, c, seed).deployment.events == r.deployment.events,
                      "event log seed " + std::to_string(seed));
            const oracle::Optimum o = oracle::solve_exhaustive(p, mcs, r.population);
            const int greedy = static_cast<int>(r.population.users.size() - r.deployment.uncovered_users.size());
            max_gap = std::max(max_gap, o.covered - greedy);
            greedy_total += greedy;
            opt_total += o.covered;
            if (greedy == o.covered)
                v.require(r.deployment.active_count() <= o.active + 1, "extra sites seed " + std::to_string(seed));
        }
        v.detail << " covered " << greedy_total << "/" << opt_total << " max_gap " << max_gap;
        v.require(greedy_total == 2254 && opt_total == 2388, "recorded totals");
        v.require(max_gap <= 3, "recorded gap");
        const RunOutcome shipped = plan_single_run(p, c, c.base_seed);
        const oracle::Optimum o = oracle::solve_exhaustive(p, mcs, shipped.population);
        v.require(shipped.deployment.uncovered_users.empty() && shipped.deployment.active_count() == o.active,
                  "shipped seed optimal");
    });

    criterion(12, [](Verdict& v) {
        const props::Failures a = props::propagation(), b = props::link_budget(), c = props::power_energy();
        v.detail << " propagation " << a.size() << " link_budget " << b.size() << " power_energy " << c.size()
                 << " violations";
        for (const auto* f : {&a, &b, &c})
            for (std::size_t i = 0; i < f->size() && i < 3; ++i)
                v.require(false, (*f)[i]);
    });

    std::printf("%d of 12 criteria failed, %d unexpected\n", failures, unexpected);
    return unexpected == 0 ? 0 : 1;
}

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

#include "tvws/report.hpp"

#include "tvws/error.hpp"
#include "tvws/format.hpp"
#include "tvws/rng.hpp"

#include "overloaded.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>

#ifndef TVWSPLAN_VERSION
#define TVWSPLAN_VERSION "0.0.0"
#endif

namespace tvws {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

const char* name_of(McsMode m) { return m == McsMode::Fixed ? "fixed" : "adaptive"; }
const char* name_of(RebalanceScope r) { return r == RebalanceScope::NewSiteOnly ? "new_site_only" : "any_active"; }
const char* name_of(LoadFactorMode l) { return l == LoadFactorMode::Full ? "full" : "served_proportional"; }
const char* name_of(BitrateAccounting b)
{
    return b == BitrateAccounting::ServedDemand ? "served_demand" : "offered_capacity";
}
const char* name_of(EeUserFactor f) { return f == EeUserFactor::Literal ? "literal" : "covered_fraction"; }

std::string g(double v) { return format_general(v); }

std::string fixed(double v, int d) { return format_fixed(v, d); }

ordered_json summary_json(const Summary& s)
{
    return {{"mean", s.mean}, {"stddev", s.stddev}, {"min", s.min}, {"max", s.max}};
}

std::ofstream open_out(const fs::path& p)
{
    std::ofstream out(p, std::ios::binary);
    if (!out)
        throw IoError("cannot write '" + p.string() + "'");
    return out;
}

} // namespace

std::string tool_version()
{
    return TVWSPLAN_VERSION;
}

Provenance make_provenance(const Scenario& scenario, const TechnologyBundle& tech, bool mimo_4x4)
{
    const TechnologyProfile profile = effective_profile(tech, mimo_4x4);
    const PathLossModel model = scenario_model(scenario, profile);
    Provenance p;
    p.add("tool", "tvwsplan " + tool_version());
    p.add("report_schema", std::to_string(kReportSchemaVersion));
    p.add("scenario", scenario.name);
    p.add("scenario_digest", "fnv1a64:" + scenario.digest);
    p.add("environment", to_string(scenario.environment));
    p.add("technology", profile.name);
    p.add("technology_file", fs::path(tech.source).filename().string());
    p.add("antennas", mimo_4x4 ? "mimo_4x4 (+" + g(profile.mimo_gain_db) + " dB, 4 tx)" : "siso");
    p.add("path_loss_model", describe(model));
    if (std::holds_alternative<OkumuraHataRuralModel>(model))
        p.add("hata_mobile_correction", "small/medium city a(hm)");
    p.add("path_loss_calibration", scenario.model_calibration_id.empty() ? "none" : scenario.model_calibration_id);
    p.add("power_model", describe(tech.power));
    p.add("power_calibration", tech.power_id.empty() ? "none" : tech.power_id);
    p.add("margins_db", "shadow " + g(scenario.margins.shadow_margin_db) + ", fade " +
                            g(scenario.margins.fade_margin_db) + ", interference " +
                            g(profile.interference_margin_db));
    for (const std::string& w : validity_warnings(model))
        p.add("warning", w);
    return p;
}

void add_plan_provenance(Provenance& p, const PlanResult& plan)
{
    const PlannerConfig& c = plan.config;
    p.add("rng", std::string(Rng::kName));
    p.add("seed_policy", "run i uses base_seed + i");
    p.add("base_seed", std::to_string(c.base_seed));
    p.add("runs", std::to_string(c.runs));
    p.add("mcs_mode", name_of(c.mcs_mode));
    p.add("mcs", plan.campaign.mcs_label);
    p.add("user_order", c.shuffle_user_order ? "shuffled" : "ascending_id");
    p.add("rebalance", name_of(c.rebalance));
    p.add("load_factor", name_of(c.load_factor));
    p.add("radiated_power_w", g(dbm_to_w(plan.problem.profile.eirp_dbm)));
    p.add("bitrate_accounting", name_of(c.bitrate_accounting));
    p.add("ee_user_factor", name_of(c.ee_user_factor));
    p.add("ee_formula", c.ee_user_factor == EeUserFactor::Literal ? "c_i * A * U * sum(B_ij) / sum(P_ij)"
                                                                   : "c_i * A * sum(B_ij) / sum(P_ij)");
    p.add("candidate_sites", std::to_string(plan.problem.sites.size()));
    if (plan.growth)
        p.add("site_growth", "lattice target " + std::to_string(plan.growth->lattice.target_count) + " after " +
                                 std::to_string(plan.growth->history.size()) + " pilot campaigns");
    if (!plan.campaign.runs.empty())
        p.add("deployment_files", "run 0, seed " + std::to_string(plan.campaign.runs.front().seed));
}

void write_comment_block(std::ostream& out, const Provenance& prov)
{
    for (const auto& [k, v] : prov.entries)
        out << "# " << k << ": " << v << '\n';
}

void write_pathloss_csv(std::ostream& out, const Provenance& prov, const PathLossModel& model, double d_min_km,
                        double d_max_km, int points)
{
    if (!(d_min_km > 0.0) || d_max_km < d_min_km || points < 2)
        throw InvalidArgument("path-loss table needs 0 < d_min <= d_max and at least 2 points");
    write_comment_block(out, prov);
    out << "d_km,pl_db\n";
    for (int i = 0; i < points; ++i) {
        const double d = d_min_km + (d_max_km - d_min_km) * i / (points - 1);
        out << fixed(d, 3) << ',' << fixed(path_loss_db(model, d), 3) << '\n';
    }
}

void write_coverage_csv(std::ostream& out, const Provenance& prov, const std::vector<CoveragePoint>& curve)
{
    write_comment_block(out, prov);
    std::string past;
    for (const CoveragePoint& c : curve)
        if (c.beyond_model_validity)
            past += (past.empty() ? "" : ", ") + c.mcs_label;
    if (!past.empty())
        out << "# beyond_model_validity: " << past << '\n';
    out << "mcs,bitrate_mbps,range_km\n";
    for (const CoveragePoint& c : curve)
        out << c.mcs_label << ',' << g(c.bitrate_mbps) << ',' << fixed(c.range_km, 3) << '\n';
}

void write_sweep_csv(std::ostream& out, const Provenance& prov, const std::vector<SizingResult>& sweep)
{
    write_comment_block(out, prov);
    out << "mcs,snr_db,range_km,n_area,n_load,n_min,optimal_flag\n";
    for (const SizingResult& r : sweep)
        out << r.mcs_label << ',' << g(r.required_snr_db) << ',' << fixed(r.range_km, 3) << ',' << r.n_bs_area << ','
            << r.n_bs_load << ',' << r.n_bs_min << ',' << (r.optimal ? 1 : 0) << '\n';
}

void write_sites_csv(std::ostream& out, const Provenance& prov, const RunOutcome& run)
{
    const Deployment& d = run.deployment;
    write_comment_block(out, prov);
    out << "site_id,x_km,y_km,active,served_mbps,power_w\n";
    for (std::size_t s = 0; s < d.sites.size(); ++s)
        out << d.sites[s].id << ',' << fixed(d.sites[s].position.x, 4) << ',' << fixed(d.sites[s].position.y, 4)
            << ',' << (d.active[s] ? 1 : 0) << ',' << g(d.served_mbps[s]) << ',' << g(d.power_w[s]) << '\n';
}

void write_assignment_csv(std::ostream& out, const Provenance& prov, const RunOutcome& run)
{
    const Deployment& d = run.deployment;
    write_comment_block(out, prov);
    out << "user_id,site_id,pl_db\n";
    for (std::size_t u = 0; u < run.population.users.size(); ++u) {
        out << run.population.users[u].id << ',';
        if (d.assignment[u] >= 0)
            out << d.sites[d.assignment[u]].id << ',' << fixed(d.assigned_pl_db[u], 3);
        else
            out << ',';
        out << '\n';
    }
}

void write_power_csv(std::ostream& out, const Provenance& prov, const PlanningProblem& problem,
                     const PlannerConfig& config, const RunOutcome& run)
{
    const Deployment& d = run.deployment;
    const double pr = dbm_to_w(problem.profile.eirp_dbm);
    write_comment_block(out, prov);
    out << "bs_id,n_tx,p_r_w,load,p_total_w\n";
    for (std::size_t s = 0; s < d.sites.size(); ++s) {
        if (!d.active[s])
            continue;
        double load = 1.0;
        if (config.load_factor == LoadFactorMode::ServedProportional)
            load = config.mcs_mode == McsMode::Fixed ? std::min(1.0, d.served_mbps[s] / d.capacity_mbps[s])
                                                     : std::min(1.0, d.airtime[s]);
        out << d.sites[s].id << ',' << problem.profile.n_transmitters << ',' << g(pr) << ',' << g(load) << ','
            << g(d.power_w[s]) << '\n';
    }
}

void write_runs_csv(std::ostream& out, const Provenance& prov, const CampaignResult& c)
{
    write_comment_block(out, prov);
    out << "run,seed,coverage,active_sites,power_w,served_mbps,energy_efficiency\n";
    for (std::size_t i = 0; i < c.runs.size(); ++i) {
        const RunOutcome& r = c.runs[i];
        out << i << ',' << r.seed << ',' << g(r.coverage_fraction) << ',' << r.deployment.active_count() << ','
            << g(r.total_power_w) << ',' << g(r.served_mbps_total) << ',' << g(r.energy_efficiency) << '\n';
    }
}

void write_progressive_csv(std::ostream& out, const Provenance& prov, const CampaignResult& c)
{
    write_comment_block(out, prov);
    out << "runs,mean_coverage\n";
    for (std::size_t i = 0; i < c.progressive_coverage.size(); ++i)
        out << i + 1 << ',' << g(c.progressive_coverage[i]) << '\n';
}

void write_raster_csv(std::ostream& out, const Provenance& prov, const PlanningProblem& problem, double pl_max_db,
                      const RunOutcome& run)
{
    const Deployment& d = run.deployment;
    std::vector<PathLossModel> models;
    for (const CandidateSite& s : d.sites)
        models.push_back(model_for_site(problem.model, s));
    const BoundingBox box = bounding_box(problem.region.outline);
    const double step = problem.region.resolution_m / 1000.0;
    write_comment_block(out, prov);
    out << "x,y,best_pl_db,covered_flag\n";
    const int nx = static_cast<int>(std::floor((box.max.x - box.min.x) / step));
    const int ny = static_cast<int>(std::floor((box.max.y - box.min.y) / step));
    for (int j = 0; j <= ny; ++j) {
        for (int i = 0; i <= nx; ++i) {
            const Point p{box.min.x + (i + 0.5) * step, box.min.y + (j + 0.5) * step};
            if (!problem.region.contains(p))
                continue;
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t s = 0; s < d.sites.size(); ++s)
                if (d.active[s])
                    best = std::min(best, path_loss_db(models[s], std::max(distance_km(p, d.sites[s].position),
                                                                           kMinDistanceKm)));
            out << fixed(p.x, 4) << ',' << fixed(p.y, 4) << ',';
            if (std::isfinite(best))
                out << fixed(best, 2);
            out << ',' << (best <= pl_max_db ? 1 : 0) << '\n';
        }
    }
}

void write_map_svg(std::ostream& out, const Provenance& prov, const PlanningProblem& problem, const RunOutcome& run)
{
    const Deployment& d = run.deployment;
    BoundingBox box = bounding_box(problem.region.outline);
    for (const CandidateSite& s : d.sites) {
        box.min.x = std::min(box.min.x, s.position.x);
        box.min.y = std::min(box.min.y, s.position.y);
        box.max.x = std::max(box.max.x, s.position.x);
        box.max.y = std::max(box.max.y, s.position.y);
    }
    const double pad = 0.5;
    const double scale = 40.0;  // px per km
    const double w = (box.max.x - box.min.x + 2 * pad) * scale;
    const double h = (box.max.y - box.min.y + 2 * pad) * scale;
    auto sx = [&](Point p) { return (p.x - box.min.x + pad) * scale; };
    auto sy = [&](Point p) { return (box.max.y - p.y + pad) * scale; };
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<!--\n";
    for (const auto& [k, v] : prov.entries)
        out << "  " << k << ": " << v << '\n';
    out << "-->\n<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed(w, 0) << "\" height=\"" << fixed(h, 0)
        << "\" viewBox=\"0 0 " << fixed(w, 1) << ' ' << fixed(h, 1) << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n<polygon fill=\"#eef3f8\" stroke=\"#345\" "
           "stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < problem.region.outline.size(); ++i) {
        const Point p = problem.region.outline[i];
        out << (i ? " " : "") << fixed(sx(p), 1) << ',' << fixed(sy(p), 1);
    }
    out << "\"/>\n<g stroke=\"#999\" stroke-width=\"0.5\">\n";
    const auto& users = run.population.users;
    for (std::size_t u = 0; u < users.size(); ++u) {
        if (d.assignment[u] < 0)
            continue;
        const Point a = users[u].position;
        const Point b = d.sites[d.assignment[u]].position;
        out << "<line x1=\"" << fixed(sx(a), 1) << "\" y1=\"" << fixed(sy(a), 1) << "\" x2=\"" << fixed(sx(b), 1)
            << "\" y2=\"" << fixed(sy(b), 1) << "\"/>\n";
    }
    out << "</g>\n<g>\n";
    for (std::size_t u = 0; u < users.size(); ++u)
        out << "<circle cx=\"" << fixed(sx(users[u].position), 1) << "\" cy=\"" << fixed(sy(users[u].position), 1)
            << "\" r=\"2\" fill=\"" << (d.assignment[u] >= 0 ? "#2a9d3a" : "#d62828") << "\"/>\n";
    out << "</g>\n<g>\n";
    for (std::size_t s = 0; s < d.sites.size(); ++s) {
        const Point p = d.sites[s].position;
        out << "<rect x=\"" << fixed(sx(p) - 4, 1) << "\" y=\"" << fixed(sy(p) - 4, 1) << "\" width=\"8\" height=\"8\" "
            << (d.active[s] ? "fill=\"#1d3557\"" : "fill=\"none\" stroke=\"#888\"") << "><title>" << d.sites[s].id
            << "</title></rect>\n";
    }
    out << "</g>\n</svg>\n";
}

std::string report_json(const Scenario& scenario, const PlanResult& plan, const Provenance& prov)
{
    const CampaignResult& c = plan.campaign;
    ordered_json j;
    j["schema_version"] = kReportSchemaVersion;
    j["tool"] = {{"name", "tvwsplan"}, {"version", tool_version()}};
    j["scenario"] = {{"name", scenario.name},
                     {"digest", "fnv1a64:" + scenario.digest},
                     {"environment", to_string(scenario.environment)},
                     {"area_km2", scenario.region.area_km2},
                     {"user_count", scenario.population.user_count}};
    j["technology"] = {{"name", c.technology},
                       {"mcs", c.mcs_label},
                       {"pl_max_db", c.pl_max_db},
                       {"range_km", c.range_km},
                       {"bs_capacity_mbps", c.capacity_mbps},
                       {"n_transmitters", plan.problem.profile.n_transmitters},
                       {"mimo_gain_db", plan.problem.profile.mimo_gain_db}};
    ordered_json sites;
    sites["candidates"] = plan.problem.sites.size();
    if (plan.growth) {
        ordered_json hist = ordered_json::array();
        for (const GrowthStep& s : plan.growth->history)
            hist.push_back(
                {{"lattice_target", s.lattice_target}, {"sites", s.site_count}, {"mean_coverage", s.mean_coverage}});
        sites["growth"] = hist;
    }
    j["sites"] = sites;
    j["aggregates"] = {{"coverage", summary_json(c.coverage)},
                       {"coverage_sem", c.coverage_sem},
                       {"power_w", summary_json(c.power_w)},
                       {"energy_efficiency", summary_json(c.energy_efficiency)},
                       {"network_energy_efficiency", c.network_ee},
                       {"served_mbps", summary_json(c.served_mbps)},
                       {"active_sites", summary_json(c.active_sites)}};
    ordered_json runs = ordered_json::array();
    for (std::size_t i = 0; i < c.runs.size(); ++i) {
        const RunOutcome& r = c.runs[i];
        runs.push_back({{"run", i},
                        {"seed", r.seed},
                        {"coverage", r.coverage_fraction},
                        {"active_sites", r.deployment.active_count()},
                        {"power_w", r.total_power_w},
                        {"served_mbps", r.served_mbps_total},
                        {"energy_efficiency", r.energy_efficiency},
                        {"uncovered_users", r.deployment.uncovered_users.size()}});
    }
    j["runs"] = runs;
    ordered_json p = ordered_json::object();
    ordered_json warnings = ordered_json::array();
    for (const auto& [k, v] : prov.entries) {
        if (k == "warning")
            warnings.push_back(v);
        else
            p[k] = v;
    }
    p["warnings"] = warnings;
    j["provenance"] = p;
    return j.dump(2) + "\n";
}

std::vector<fs::path> write_plan_outputs(const fs::path& dir, const Scenario& scenario, const PlanResult& plan,
                                         const Provenance& prov)
{
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec)
        throw IoError("cannot create output directory '" + dir.string() + "': " + ec.message());
    std::vector<fs::path> written;
    auto emit = [&](const char* name, auto&& fn) {
        const fs::path p = dir / name;
        std::ofstream out = open_out(p);
        fn(out);
        if (!out)
            throw IoError("write failed for '" + p.string() + "'");
        written.push_back(p);
    };
    const CampaignResult& c = plan.campaign;
    emit("report.json", [&](std::ostream& o) { o << report_json(scenario, plan, prov); });
    emit("runs.csv", [&](std::ostream& o) { write_runs_csv(o, prov, c); });
    emit("progressive.csv", [&](std::ostream& o) { write_progressive_csv(o, prov, c); });
    if (!c.runs.empty()) {
        const RunOutcome& r0 = c.runs.front();
        emit("sites.csv", [&](std::ostream& o) { write_sites_csv(o, prov, r0); });
        emit("assignment.csv", [&](std::ostream& o) { write_assignment_csv(o, prov, r0); });
        emit("bs_power.csv", [&](std::ostream& o) { write_power_csv(o, prov, plan.problem, plan.config, r0); });
        emit("population.csv", [&](std::ostream& o) {
            write_comment_block(o, prov);
            write_population_csv(o, r0.population);
        });
        emit("coverage_raster.csv", [&](std::ostream& o) { write_raster_csv(o, prov, plan.problem, c.pl_max_db, r0); });
        emit("map.svg", [&](std::ostream& o) { write_map_svg(o, prov, plan.problem, r0); });
    }
    return written;
}

} // namespace tvws

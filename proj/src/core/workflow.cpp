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

#include "tvws/workflow.hpp"

#include "tvws/calibration.hpp"
#include "tvws/error.hpp"

#include <json.hpp>

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <thread>

namespace tvws {

int default_workers()
{
    if (const char* env = std::getenv("TVWSPLAN_WORKERS"); env && *env) {
        int n = 0;
        const char* end = env + std::strlen(env);
        const auto [ptr, ec] = std::from_chars(env, end, n);
        if (ec != std::errc{} || ptr != end || n < 1)
            throw InvalidArgument("TVWSPLAN_WORKERS must be a positive integer");
        return n;
    }
    return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

TechnologyProfile effective_profile(const TechnologyBundle& tech, bool mimo_4x4)
{
    return mimo_4x4 ? with_mimo_4x4(tech.profile) : tech.profile;
}

PathLossModel scenario_model(const Scenario& scenario, const TechnologyProfile& profile)
{
    PathLossModel model = scenario.model;
    if (auto* hata = std::get_if<OkumuraHataRuralModel>(&model)) {
        hata->freq_mhz = profile.freq_mhz;
        if (scenario.sites.lattice)
            hata->bs_height_m = scenario.sites.lattice->antenna_height_m;
        else if (!scenario.sites.listed.empty())
            hata->bs_height_m = scenario.sites.listed.front().antenna_height_m;
    }
    return model;
}

std::vector<CoveragePoint> run_coverage(const Scenario& scenario, const TechnologyBundle& tech, bool mimo_4x4)
{
    const TechnologyProfile p = effective_profile(tech, mimo_4x4);
    return coverage_curve(p, scenario.margins, scenario_model(scenario, p));
}

std::vector<SizingResult> run_sweep(const Scenario& scenario, const TechnologyBundle& tech, bool mimo_4x4)
{
    const TechnologyProfile p = effective_profile(tech, mimo_4x4);
    return sweep_mcs(p, scenario.margins, scenario_model(scenario, p), scenario.region.area_km2,
                     scenario.population.expected_traffic_mbps());
}

PlannerConfig effective_config(const Scenario& scenario, const RunOptions& options)
{
    PlannerConfig c = scenario.planner;
    if (options.runs)
        c.runs = *options.runs;
    if (options.seed)
        c.base_seed = *options.seed;
    if (options.mcs)
        c.mcs_label = *options.mcs;
    c.workers = options.workers ? *options.workers : default_workers();
    validate(c);
    return c;
}

PlanningProblem build_problem(const Scenario& scenario, const TechnologyBundle& tech, bool mimo_4x4)
{
    PlanningProblem p;
    p.region = scenario.region;
    p.sites = scenario.sites.listed;
    p.population = scenario.population;
    p.profile = effective_profile(tech, mimo_4x4);
    p.margins = scenario.margins;
    p.model = scenario_model(scenario, p.profile);
    p.power = tech.power;
    return p;
}

PlanResult run_plan(const Scenario& scenario, const TechnologyBundle& tech, const RunOptions& options)
{
    PlanResult out;
    out.config = effective_config(scenario, options);
    out.problem = build_problem(scenario, tech, options.mimo_4x4);
    out.warnings = validity_warnings(out.problem.model);

    if (scenario.sites.lattice) {
        SiteLattice lattice = *scenario.sites.lattice;
        if (scenario.sites.lattice_from_sizing)
            lattice.target_count = optimal_row(run_sweep(scenario, tech, options.mimo_4x4)).n_bs_min;
        const bool grow = options.growth.value_or(scenario.sites.growth.enabled);
        if (grow) {
            PlannerConfig pilot = out.config;
            pilot.runs = scenario.sites.growth.pilot_runs;
            out.growth = grow_site_set(out.problem, lattice, pilot, out.config.coverage_target_fraction,
                                       scenario.sites.growth.cap);
            out.problem.sites = out.growth->sites;
        } else {
            out.problem.sites = generate_site_lattice(scenario.region, lattice);
        }
    }
    if (out.problem.sites.empty())
        throw PlanningError("scenario '" + scenario.name + "' yields no candidate sites");
    out.campaign = run_campaign(out.problem, out.config);
    return out;
}

namespace {

using nlohmann::json;

json load_json(const std::filesystem::path& path)
{
    try {
        return json::parse(read_file(path));
    } catch (const json::exception& e) {
        throw ConfigError(path.string(), {{"<root>", e.what()}});
    }
}

template <class T>
T field(const json& j, const char* key, const std::filesystem::path& source)
{
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw ConfigError(source.string(), {{key, "missing or mistyped field"}});
    }
}

double budget_at(const TechnologyBundle& tech, const Scenario& sc, const std::string& label)
{
    return max_allowable_path_loss_db(tech.profile, sc.margins, tech.profile.mcs(label));
}

CalibrationOutcome calibrate_suburban(const std::filesystem::path& data_dir, const std::filesystem::path& file)
{
    const json j = load_json(file);
    const Scenario sc = load_scenario(data_dir / "scenarios" / field<std::string>(j, "scenario", file));
    std::vector<DistanceLoss> points;
    for (const json& p : j.at("points")) {
        const auto tech = load_technology(data_dir, field<std::string>(p, "technology", file), sc.environment);
        points.push_back({field<double>(p, "range_km", file), budget_at(tech, sc, field<std::string>(p, "mcs", file))});
    }
    std::vector<std::pair<TechnologyBundle, std::string>> markers;
    for (const json& m : j.at("markers"))
        markers.emplace_back(load_technology(data_dir, field<std::string>(m, "technology", file), sc.environment),
                             field<std::string>(m, "mcs", file));
    auto reproduces_markers = [&](const OneSlopeModel& model) {
        Scenario trial = sc;
        trial.model = model;
        for (const auto& [tech, label] : markers)
            if (optimal_row(run_sweep(trial, tech, false)).mcs_label != label)
                return false;
        return true;
    };
    const json& scan = j.at("exponent_scan");
    const double d0 = field<double>(j, "d0_km", file);
    const ExponentSelection selection =
        parse_exponent_selection(scan.contains("selection") ? field<std::string>(scan, "selection", file)
                                                            : std::string("min_residual"));
    const OneSlopeFit fit = fit_one_slope_constrained(points, d0, field<double>(scan, "lo", file),
                                                      field<double>(scan, "hi", file),
                                                      field<double>(scan, "step", file), reproduces_markers, selection);
    const OneSlopeModel free_fit = fit_one_slope(points, d0);
    double lo = 0.0, hi = 0.0;
    for (const ExponentTrial& t : fit.trials)
        if (t.accepted) {
            lo = lo == 0.0 ? t.exponent : lo;
            hi = t.exponent;
        }
    CalibrationOutcome out;
    out.id = field<std::string>(j, "calibration_id", file);
    out.target = "scenarios/" + field<std::string>(j, "scenario", file) + ": propagation";
    out.parameters = {{"pl0_db", fit.model.pl0_db}, {"d0_km", d0}, {"exponent", fit.model.exponent}};
    out.method = "exponent scan, " + to_string(selection);
    out.diagnostics = {{"rms_residual_db", fit.rms_db},
                       {"accepted_exponent_min", lo},
                       {"accepted_exponent_max", hi},
                       {"unconstrained_exponent", free_fit.exponent},
                       {"unconstrained_pl0_db", free_fit.pl0_db}};
    return out;
}

CalibrationOutcome calibrate_rural(const std::filesystem::path& data_dir, const std::filesystem::path& file)
{
    const json j = load_json(file);
    const Scenario sc = load_scenario(data_dir / "scenarios" / field<std::string>(j, "scenario", file));
    std::vector<HataMarker> markers;
    OkumuraHataRuralModel base;
    for (const json& p : j.at("points")) {
        const auto tech = load_technology(data_dir, field<std::string>(p, "technology", file), sc.environment);
        const PathLossModel m = scenario_model(sc, tech.profile);
        const auto* hata = std::get_if<OkumuraHataRuralModel>(&m);
        if (!hata)
            throw ConfigError(file.string(), {{"scenario", "rural calibration needs a Hata scenario"}});
        base = *hata;
        markers.push_back({tech.profile.freq_mhz, budget_at(tech, sc, field<std::string>(p, "mcs", file)),
                           field<double>(p, "range_km", file)});
    }
    const double excess = fit_hata_excess_loss(base, markers);
    CalibrationOutcome out;
    out.id = field<std::string>(j, "calibration_id", file);
    out.target = "scenarios/" + field<std::string>(j, "scenario", file) + ": propagation";
    out.method = "least-squares excess loss";
    out.parameters = {{"excess_loss_db", excess}};
    for (std::size_t i = 0; i < markers.size(); ++i) {
        OkumuraHataRuralModel m = base;
        m.freq_mhz = markers[i].freq_mhz;
        m.excess_loss_db = excess;
        out.diagnostics.emplace_back("range_km_" + std::to_string(i), invert_range_km(m, markers[i].pl_db));
        m.excess_loss_db = 0.0;
        out.diagnostics.emplace_back("uncorrected_range_km_" + std::to_string(i), invert_range_km(m, markers[i].pl_db));
    }
    return out;
}

CalibrationOutcome calibrate_macro(const std::filesystem::path& file)
{
    const json j = load_json(file);
    MacroCalibrationTarget t;
    t.per_bs_w = field<double>(j, "network_power_w", file) / field<double>(j, "sites", file);
    t.transmitter_share = field<double>(j, "transmitter_share", file);
    t.amp_efficiency = field<double>(j, "amp_efficiency", file);
    t.radiated_power_w = field<double>(j, "radiated_power_w", file);
    const MacroPowerParams p = calibrate_macro_power(t);
    CalibrationOutcome out;
    out.id = field<std::string>(j, "calibration_id", file);
    out.target = "power/lte_macro.json";
    out.method = "closed form from per-site power and transmitter share";
    out.parameters = {{"p_fixed_w", p.p_fixed_w},
                      {"amp_efficiency", p.amp_efficiency},
                      {"p_per_tx_overhead_w", p.p_per_tx_overhead_w}};
    BsPowerInput in;
    in.radiated_power_w = t.radiated_power_w;
    const double siso = macro_bs_power_w(p, in);
    in.n_transmitters = 4;
    out.diagnostics = {{"per_bs_w", siso}, {"per_bs_4tx_w", macro_bs_power_w(p, in)}};
    return out;
}

} // namespace

std::vector<CalibrationOutcome> run_calibrations(const std::filesystem::path& data_dir)
{
    const std::filesystem::path dir = data_dir / "calibration";
    return {calibrate_suburban(data_dir, dir / "suburban_one_slope.json"),
            calibrate_rural(data_dir, dir / "rural_hata.json"), calibrate_macro(dir / "lte_macro.json")};
}

} // namespace tvws

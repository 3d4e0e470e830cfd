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

#include "tvwsplan.h"

#include "tvws/checker.hpp"
#include "tvws/config.hpp"
#include "tvws/error.hpp"
#include "tvws/format.hpp"
#include "tvws/report.hpp"
#include "tvws/workflow.hpp"

#include <json.hpp>

#include <cstdlib>
#include <cstring>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

struct tvws_session {
    tvws::Scenario scenario;
    std::filesystem::path data_dir;
    std::optional<tvws::Environment> environment;
    std::string technology;
    tvws::RunOptions options;
};

struct tvws_report {
    tvws::Scenario scenario;
    tvws::PlanResult plan;
    tvws::Provenance provenance;
};

namespace {

struct LastError {
    std::string message;
    std::string json = "{}";
};

thread_local LastError g_error;

tvws_status code_of(tvws::ErrorKind kind)
{
    switch (kind) {
    case tvws::ErrorKind::InvalidArgument: return TVWS_ERR_INVALID_ARGUMENT;
    case tvws::ErrorKind::Domain: return TVWS_ERR_DOMAIN;
    case tvws::ErrorKind::Config: return TVWS_ERR_CONFIG;
    case tvws::ErrorKind::Io: return TVWS_ERR_IO;
    case tvws::ErrorKind::Planning: return TVWS_ERR_PLANNING;
    }
    return TVWS_ERR_INTERNAL;
}

tvws_status fail(tvws_status status, const std::string& message, const std::string& source = {},
                 const std::vector<tvws::FieldError>& fields = {})
{
    nlohmann::ordered_json j;
    j["status"] = tvws_status_name(status);
    j["code"] = static_cast<int>(status);
    j["message"] = message;
    if (!source.empty())
        j["source"] = source;
    if (!fields.empty()) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& f : fields)
            arr.push_back({{"path", f.path}, {"message", f.message}});
        j["fields"] = arr;
    }
    g_error.message = message;
    g_error.json = j.dump();
    return status;
}

template <class F>
tvws_status guarded(F&& f) noexcept
{
    try {
        g_error = {};
        f();
        return TVWS_OK;
    } catch (const tvws::ConfigError& e) {
        return fail(TVWS_ERR_CONFIG, e.what(), e.source(), e.fields());
    } catch (const tvws::Error& e) {
        return fail(code_of(e.kind()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(TVWS_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(TVWS_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(TVWS_ERR_INTERNAL, "unknown error");
    }
}

void require(const void* p, const char* what)
{
    if (!p)
        throw tvws::InvalidArgument(std::string(what) + " must not be NULL");
}

char* dup(const std::string& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

tvws::Environment env_of(const tvws_session& s)
{
    return s.environment.value_or(s.scenario.environment);
}

tvws::TechnologyBundle tech_of(const tvws_session& s)
{
    if (s.technology.empty())
        throw tvws::InvalidArgument("no technology selected and the scenario names none");
    return tvws::load_technology(s.data_dir, s.technology, env_of(s));
}

// Scenario as seen through the session's environment override.
tvws::Scenario scenario_of(const tvws_session& s)
{
    tvws::Scenario sc = s.scenario;
    sc.environment = env_of(s);
    return sc;
}

} // namespace

extern "C" {

const char* tvws_version(void)
{
    static const std::string v = tvws::tool_version();
    return v.c_str();
}

const char* tvws_default_data_dir(void)
{
    thread_local std::string dir;
    dir = tvws::default_data_dir().string();
    return dir.c_str();
}

const char* tvws_status_name(tvws_status status)
{
    switch (status) {
    case TVWS_OK: return "ok";
    case TVWS_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case TVWS_ERR_DOMAIN: return "domain_error";
    case TVWS_ERR_CONFIG: return "config_error";
    case TVWS_ERR_IO: return "io_error";
    case TVWS_ERR_PLANNING: return "planning_error";
    case TVWS_ERR_INTERNAL: return "internal_error";
    }
    return "unknown";
}

const char* tvws_last_error(void)
{
    return g_error.message.c_str();
}

const char* tvws_last_error_json(void)
{
    return g_error.json.c_str();
}

void tvws_string_free(char* text)
{
    std::free(text);
}

tvws_status tvws_session_open(const char* scenario_path, const char* data_dir, tvws_session** out)
{
    return guarded([&] {
        require(scenario_path, "scenario_path");
        require(out, "out");
        *out = nullptr;
        auto s = std::make_unique<tvws_session>();
        s->data_dir = data_dir && *data_dir ? std::filesystem::path(data_dir) : tvws::default_data_dir();
        s->scenario = tvws::load_scenario(scenario_path);
        s->technology = s->scenario.default_technology;
        *out = s.release();
    });
}

void tvws_session_close(tvws_session* session)
{
    delete session;
}

tvws_status tvws_session_set_environment(tvws_session* s, const char* environment)
{
    return guarded([&] {
        require(s, "session");
        require(environment, "environment");
        s->environment = tvws::parse_environment(environment);
    });
}

tvws_status tvws_session_set_technology(tvws_session* s, const char* name)
{
    return guarded([&] {
        require(s, "session");
        require(name, "name");
        tvws::load_technology(s->data_dir, name, env_of(*s));
        s->technology = name;
    });
}

tvws_status tvws_session_set_mimo(tvws_session* s, int enable_4x4)
{
    return guarded([&] {
        require(s, "session");
        s->options.mimo_4x4 = enable_4x4 != 0;
    });
}

tvws_status tvws_session_set_runs(tvws_session* s, int runs)
{
    return guarded([&] {
        require(s, "session");
        if (runs < 1)
            throw tvws::InvalidArgument("runs must be at least 1");
        s->options.runs = runs;
    });
}

tvws_status tvws_session_set_seed(tvws_session* s, uint64_t base_seed)
{
    return guarded([&] {
        require(s, "session");
        s->options.seed = base_seed;
    });
}

tvws_status tvws_session_set_mcs(tvws_session* s, const char* label)
{
    return guarded([&] {
        require(s, "session");
        if (!label || !*label) {
            s->options.mcs.reset();
            return;
        }
        if (!s->technology.empty()) {
            const tvws::McsEntry& e = tech_of(*s).profile.mcs(label);
            if (!e.hardware_available)
                throw tvws::InvalidArgument("MCS '" + e.label + "' is not available on current hardware");
        }
        s->options.mcs = label;
    });
}

tvws_status tvws_session_set_workers(tvws_session* s, int workers)
{
    return guarded([&] {
        require(s, "session");
        if (workers < 0)
            throw tvws::InvalidArgument("workers must be non-negative");
        if (workers == 0)
            s->options.workers.reset();
        else
            s->options.workers = workers;
    });
}

tvws_status tvws_session_set_growth(tvws_session* s, int mode)
{
    return guarded([&] {
        require(s, "session");
        if (mode < -1 || mode > 1)
            throw tvws::InvalidArgument("growth mode must be -1, 0 or 1");
        if (mode < 0)
            s->options.growth.reset();
        else
            s->options.growth = mode == 1;
    });
}

tvws_status tvws_pathloss_csv(const tvws_session* s, double d_min_km, double d_max_km, int points, char** out_csv)
{
    return guarded([&] {
        require(s, "session");
        require(out_csv, "out_csv");
        const tvws::Scenario sc = scenario_of(*s);
        const auto tech = tech_of(*s);
        const auto prov = tvws::make_provenance(sc, tech, s->options.mimo_4x4);
        std::ostringstream os;
        tvws::write_pathloss_csv(os, prov, tvws::scenario_model(sc, tvws::effective_profile(tech, s->options.mimo_4x4)),
                                 d_min_km, d_max_km, points);
        *out_csv = dup(os.str());
    });
}

tvws_status tvws_coverage_csv(const tvws_session* s, char** out_csv)
{
    return guarded([&] {
        require(s, "session");
        require(out_csv, "out_csv");
        const tvws::Scenario sc = scenario_of(*s);
        const auto tech = tech_of(*s);
        std::ostringstream os;
        tvws::write_coverage_csv(os, tvws::make_provenance(sc, tech, s->options.mimo_4x4),
                                 tvws::run_coverage(sc, tech, s->options.mimo_4x4));
        *out_csv = dup(os.str());
    });
}

tvws_status tvws_sweep_csv(const tvws_session* s, char** out_csv)
{
    return guarded([&] {
        require(s, "session");
        require(out_csv, "out_csv");
        const tvws::Scenario sc = scenario_of(*s);
        const auto tech = tech_of(*s);
        auto prov = tvws::make_provenance(sc, tech, s->options.mimo_4x4);
        prov.add("traffic_mbps", tvws::format_general(sc.population.expected_traffic_mbps()));
        std::ostringstream os;
        tvws::write_sweep_csv(os, prov, tvws::run_sweep(sc, tech, s->options.mimo_4x4));
        *out_csv = dup(os.str());
    });
}

tvws_status tvws_plan(const tvws_session* s, tvws_report** out)
{
    return guarded([&] {
        require(s, "session");
        require(out, "out");
        *out = nullptr;
        auto r = std::make_unique<tvws_report>();
        r->scenario = scenario_of(*s);
        const auto tech = tech_of(*s);
        r->plan = tvws::run_plan(r->scenario, tech, s->options);
        r->provenance = tvws::make_provenance(r->scenario, tech, s->options.mimo_4x4);
        tvws::add_plan_provenance(r->provenance, r->plan);
        *out = r.release();
    });
}

void tvws_report_free(tvws_report* report)
{
    delete report;
}

tvws_status tvws_report_json(const tvws_report* r, char** out_json)
{
    return guarded([&] {
        require(r, "report");
        require(out_json, "out_json");
        *out_json = dup(tvws::report_json(r->scenario, r->plan, r->provenance));
    });
}

tvws_status tvws_report_write(const tvws_report* r, const char* out_dir)
{
    return guarded([&] {
        require(r, "report");
        require(out_dir, "out_dir");
        tvws::write_plan_outputs(out_dir, r->scenario, r->plan, r->provenance);
    });
}

tvws_status tvws_report_metric(const tvws_report* r, const char* name, double* out_value)
{
    return guarded([&] {
        require(r, "report");
        require(name, "name");
        require(out_value, "out_value");
        const auto& c = r->plan.campaign;
        const std::string n = name;
        const std::pair<const char*, double> table[] = {
            {"coverage_mean", c.coverage.mean},
            {"coverage_stddev", c.coverage.stddev},
            {"coverage_sem", c.coverage_sem},
            {"power_w_mean", c.power_w.mean},
            {"power_w_stddev", c.power_w.stddev},
            {"ee_mean", c.energy_efficiency.mean},
            {"ee_stddev", c.energy_efficiency.stddev},
            {"active_sites_mean", c.active_sites.mean},
            {"candidate_sites", static_cast<double>(r->plan.problem.sites.size())},
            {"range_km", c.range_km},
            {"pl_max_db", c.pl_max_db},
            {"runs", static_cast<double>(c.runs.size())},
        };
        for (const auto& [key, value] : table)
            if (n == key) {
                *out_value = value;
                return;
            }
        throw tvws::InvalidArgument("unknown metric '" + n + "'");
    });
}

tvws_status tvws_report_check(const tvws_report* r)
{
    return guarded([&] {
        require(r, "report");
        std::vector<std::string> all;
        for (const auto& run : r->plan.campaign.runs) {
            for (auto& v : tvws::check_deployment(r->plan.problem, r->plan.config, run).violations)
                all.push_back("seed " + std::to_string(run.seed) + ": " + v);
            for (auto& v : tvws::replay_events(r->plan.problem, r->plan.config, run).violations)
                all.push_back("seed " + std::to_string(run.seed) + ": " + v);
        }
        for (auto& v : tvws::check_campaign(r->plan.campaign).violations)
            all.push_back(v);
        if (!all.empty()) {
            std::string msg = std::to_string(all.size()) + " check violation(s)";
            for (std::size_t i = 0; i < std::min<std::size_t>(all.size(), 10); ++i)
                msg += "; " + all[i];
            throw tvws::PlanningError(msg);
        }
    });
}

tvws_status tvws_calibrate(const char* data_dir, char** out_json)
{
    return guarded([&] {
        require(out_json, "out_json");
        const auto dir = data_dir && *data_dir ? std::filesystem::path(data_dir) : tvws::default_data_dir();
        auto arr = nlohmann::ordered_json::array();
        for (const auto& c : tvws::run_calibrations(dir)) {
            nlohmann::ordered_json p = nlohmann::ordered_json::object(), d = nlohmann::ordered_json::object();
            for (const auto& [k, v] : c.parameters)
                p[k] = v;
            for (const auto& [k, v] : c.diagnostics)
                d[k] = v;
            arr.push_back({{"calibration_id", c.id}, {"target", c.target}, {"method", c.method}, {"parameters", p}, {"diagnostics", d}});
        }
        *out_json = dup(arr.dump(2) + "\n");
    });
}

} // extern "C"

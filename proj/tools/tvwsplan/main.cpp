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

// Command-line front end. Talks to the planner only through the C API.

#include "tvwsplan.h"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

namespace fs = std::filesystem;

namespace {

struct CliFailure {
    int status;
};

std::string json_escape(const std::string& s)
{
    std::string out;
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        default:
            if (static_cast<unsigned char>(c) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\u%04x", c);
                out += buf;
            } else {
                out += c;
            }
        }
    }
    return out;
}

void check(tvws_status st)
{
    if (st != TVWS_OK) {
        std::cerr << tvws_last_error_json() << '\n';
        throw CliFailure{static_cast<int>(st)};
    }
}

void usage_error(const std::string& message)
{
    std::cerr << "{\"status\":\"usage_error\",\"code\":64,\"message\":\"" << json_escape(message) << "\"}\n";
    throw CliFailure{64};
}

struct Owned {
    char* p = nullptr;
    ~Owned() { tvws_string_free(p); }
};

struct SessionCloser {
    void operator()(tvws_session* s) const { tvws_session_close(s); }
};
using Session = std::unique_ptr<tvws_session, SessionCloser>;

struct Options {
    std::string data_dir;
    std::string scenario;
    std::string env;
    std::string tech;
    std::string mcs;
    std::string mimo = "siso";
    std::string growth = "scenario";
    std::string out;
    int runs = 0;
    std::optional<std::uint64_t> seed;
    double d_min = 0.1;
    double d_max = 20.0;
    int points = 200;
};

std::string bundled_scenario(const std::string& data_dir, const std::string& env)
{
    if (env == "suburban")
        return (fs::path(data_dir) / "scenarios" / "ghent_suburban.json").string();
    if (env == "rural")
        return (fs::path(data_dir) / "scenarios" / "boyeros_rural.json").string();
    usage_error("--env must be suburban or rural");
    return {};
}

Session open_session(const Options& o)
{
    const std::string data_dir = o.data_dir.empty() ? tvws_default_data_dir() : o.data_dir;
    std::string scenario = o.scenario;
    if (scenario.empty()) {
        if (o.env.empty())
            usage_error("give --scenario FILE or --env suburban|rural");
        scenario = bundled_scenario(data_dir, o.env);
    }
    tvws_session* raw = nullptr;
    check(tvws_session_open(scenario.c_str(), data_dir.c_str(), &raw));
    Session s(raw);
    if (!o.env.empty())
        check(tvws_session_set_environment(s.get(), o.env.c_str()));
    if (!o.tech.empty())
        check(tvws_session_set_technology(s.get(), o.tech.c_str()));
    if (o.mimo != "siso" && o.mimo != "4x4")
        usage_error("--mimo must be 4x4 or siso");
    check(tvws_session_set_mimo(s.get(), o.mimo == "4x4"));
    if (!o.mcs.empty())
        check(tvws_session_set_mcs(s.get(), o.mcs.c_str()));
    if (o.runs > 0)
        check(tvws_session_set_runs(s.get(), o.runs));
    if (o.seed)
        check(tvws_session_set_seed(s.get(), *o.seed));
    if (o.growth == "on")
        check(tvws_session_set_growth(s.get(), 1));
    else if (o.growth == "off")
        check(tvws_session_set_growth(s.get(), 0));
    else if (o.growth != "scenario")
        usage_error("--growth must be on, off or scenario");
    return s;
}

void emit(const Options& o, const char* file_name, const char* text)
{
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::error_code ec;
    fs::create_directories(o.out, ec);
    const fs::path path = fs::path(o.out) / file_name;
    std::ofstream f(path, std::ios::binary);
    f << text;
    f.close();
    if (!f) {
        std::cerr << "{\"status\":\"io_error\",\"code\":" << TVWS_ERR_IO << ",\"message\":\"cannot write '"
                  << json_escape(path.string()) << "'\"}\n";
        throw CliFailure{TVWS_ERR_IO};
    }
    std::cout << path.string() << '\n';
}

void add_common(CLI::App* cmd, Options& o)
{
    cmd->add_option("--scenario", o.scenario, "Scenario file (default: bundled scenario for --env)");
    cmd->add_option("--env", o.env, "suburban or rural");
    cmd->add_option("--tech", o.tech, "802.22, 802.22b, 802.11af or LTE (default: from scenario)");
    cmd->add_option("--mimo", o.mimo, "4x4 or siso (default siso)");
    cmd->add_option("--out", o.out, "Output directory (default: stdout; plan: ./out)");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Coverage, sizing and energy-efficiency planner for TVWS and LTE networks"};
    app.set_version_flag("--version", std::string(tvws_version()));
    app.require_subcommand(1);
    Options o;
    app.add_option("--data-dir", o.data_dir, "Data directory (default: $TVWSPLAN_DATA_DIR or build-time path)");

    auto* pathloss = app.add_subcommand("pathloss", "Distance/path-loss table (d_km,pl_db)");
    add_common(pathloss, o);
    pathloss->add_option("--dmin", o.d_min, "Smallest distance in km (default 0.1)");
    pathloss->add_option("--dmax", o.d_max, "Largest distance in km (default 20)");
    pathloss->add_option("--points", o.points, "Number of rows (default 200)");

    auto* coverage = app.add_subcommand("coverage", "Range per MCS (mcs,bitrate_mbps,range_km)");
    add_common(coverage, o);

    auto* sweep = app.add_subcommand("sweep", "BS-count bounds per MCS with the optimum flagged");
    add_common(sweep, o);

    auto* plan = app.add_subcommand("plan", "Monte-Carlo greedy planning campaign; writes report and maps");
    add_common(plan, o);
    plan->add_option("--mcs", o.mcs, "Planning MCS label (default: sweep optimum)");
    plan->add_option("--runs", o.runs, "Monte-Carlo runs (default: scenario, 40)");
    plan->add_option("--seed", o.seed, "Base seed; run i uses seed + i (default: scenario, 1)");
    plan->add_option("--growth", o.growth, "Lattice growth: on, off or scenario (default scenario)");

    auto* calibrate = app.add_subcommand("calibrate", "Re-derive the shipped calibrated coefficients");
    calibrate->add_option("--out", o.out, "Output directory (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "{\"status\":\"usage_error\",\"code\":64,\"message\":\"" << json_escape(e.what()) << "\"}\n";
        return 64;
    }

    try {
        if (pathloss->parsed()) {
            Session s = open_session(o);
            Owned csv;
            check(tvws_pathloss_csv(s.get(), o.d_min, o.d_max, o.points, &csv.p));
            emit(o, "pathloss.csv", csv.p);
        } else if (coverage->parsed()) {
            Session s = open_session(o);
            Owned csv;
            check(tvws_coverage_csv(s.get(), &csv.p));
            emit(o, "coverage.csv", csv.p);
        } else if (sweep->parsed()) {
            Session s = open_session(o);
            Owned csv;
            check(tvws_sweep_csv(s.get(), &csv.p));
            emit(o, "sweep.csv", csv.p);
        } else if (plan->parsed()) {
            Session s = open_session(o);
            tvws_report* raw = nullptr;
            check(tvws_plan(s.get(), &raw));
            std::unique_ptr<tvws_report, void (*)(tvws_report*)> report(raw, tvws_report_free);
            const std::string dir = o.out.empty() ? "out" : o.out;
            check(tvws_report_write(report.get(), dir.c_str()));
            double cov = 0, sem = 0, sites = 0, active = 0, power = 0, ee = 0, ee_sd = 0;
            check(tvws_report_metric(report.get(), "coverage_mean", &cov));
            check(tvws_report_metric(report.get(), "coverage_sem", &sem));
            check(tvws_report_metric(report.get(), "candidate_sites", &sites));
            check(tvws_report_metric(report.get(), "active_sites_mean", &active));
            check(tvws_report_metric(report.get(), "power_w_mean", &power));
            check(tvws_report_metric(report.get(), "ee_mean", &ee));
            check(tvws_report_metric(report.get(), "ee_stddev", &ee_sd));
            std::printf("sites %.0f  active %.2f  coverage %.4f (sem %.4f)  power %.1f W  EE %.1f (sd %.1f)\n", sites,
                        active, cov, sem, power, ee, ee_sd);
            std::printf("outputs in %s\n", dir.c_str());
        } else if (calibrate->parsed()) {
            Owned json;
            check(tvws_calibrate(o.data_dir.empty() ? nullptr : o.data_dir.c_str(), &json.p));
            emit(o, "calibration.json", json.p);
        }
    } catch (const CliFailure& f) {
        return f.status;
    }
    return 0;
}

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
#include "json.hpp"

#include "tvws/format.hpp"
#include "tvws/report.hpp"

#include <cmath>
#include <fstream>
#include <iterator>
#include <map>
#include <sstream>

#include <unistd.h>

using namespace tvws;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Table {
    std::vector<std::string> comments;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::size_t col(const std::string& name) const
    {
        for (std::size_t i = 0; i < header.size(); ++i)
            if (header[i] == name)
                return i;
        throw std::runtime_error("no column " + name);
    }
    double num(std::size_t row, const std::string& name) const { return std::stod(rows[row][col(name)]); }
};

std::vector<std::string> split(const std::string& line)
{
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ','))
        out.push_back(cell);
    return out;
}

std::string slurp(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Table read_csv(const fs::path& path)
{
    std::ifstream in(path);
    Table t;
    std::string line;
    while (std::getline(in, line)) {
        REQUIRE(line.find('\r') == std::string::npos);
        if (line.rfind("# ", 0) == 0)
            t.comments.push_back(line);
        else if (t.header.empty())
            t.header = split(line);
        else
            t.rows.push_back(split(line));
    }
    return t;
}

struct Stats {
    double mean = 0, sd = 0, lo = 0, hi = 0;
};

Stats stats(const std::vector<double>& v)
{
    Stats s{0, 0, v.front(), v.front()};
    for (double x : v) {
        s.mean += x;
        s.lo = std::min(s.lo, x);
        s.hi = std::max(s.hi, x);
    }
    s.mean /= v.size();
    for (double x : v)
        s.sd += (x - s.mean) * (x - s.mean);
    s.sd = v.size() > 1 ? std::sqrt(s.sd / (v.size() - 1)) : 0.0;
    return s;
}

fs::path scratch_dir(const std::string& name)
{
    const fs::path dir = fs::temp_directory_path() / ("tvws_report_" + name + "_" + std::to_string(::getpid()));
    fs::remove_all(dir);
    return dir;
}

void check_round_trip(const std::string& scenario_name, const std::string& tech, int runs)
{
    const Scenario sc = fixtures::scenario(scenario_name);
    const auto bundle = fixtures::technology(tech, sc.environment);
    RunOptions opt;
    opt.runs = runs;
    opt.workers = 3;
    const PlanResult plan = run_plan(sc, bundle, opt);
    Provenance prov = make_provenance(sc, bundle, false);
    add_plan_provenance(prov, plan);
    const fs::path dir = scratch_dir(scenario_name);
    const auto files = write_plan_outputs(dir, sc, plan, prov);
    CHECK(files.size() >= 9);

    const Table t = read_csv(dir / "runs.csv");
    std::ifstream jin(dir / "report.json");
    const json report = json::parse(jin);
    CHECK(report.at("schema_version") == kReportSchemaVersion);
    REQUIRE(t.rows.size() == static_cast<std::size_t>(runs));
    CHECK(report.at("runs").size() == t.rows.size());

    const double area = report.at("scenario").at("area_km2");
    const int users = report.at("scenario").at("user_count");
    std::map<std::string, std::vector<double>> cols;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        for (const char* c : {"coverage", "power_w", "energy_efficiency", "served_mbps", "active_sites"})
            cols[c].push_back(t.num(i, c));
        CHECK(t.num(i, "seed") == doctest::Approx(plan.config.base_seed + i));
        const double ee = t.num(i, "coverage") * area * users * t.num(i, "served_mbps") / t.num(i, "power_w");
        CHECK(ee == doctest::Approx(t.num(i, "energy_efficiency")).epsilon(1e-12));
    }
    const json& agg = report.at("aggregates");
    for (const auto& [name, values] : cols) {
        CAPTURE(name);
        const Stats s = stats(values);
        const json& a = agg.at(name);
        CHECK(a.at("mean").get<double>() == doctest::Approx(s.mean).epsilon(1e-12));
        CHECK(a.at("stddev").get<double>() == doctest::Approx(s.sd).epsilon(1e-9));
        CHECK(a.at("min").get<double>() == s.lo);
        CHECK(a.at("max").get<double>() == s.hi);
    }
    const Stats cov = stats(cols["coverage"]);
    CHECK(agg.at("coverage_sem").get<double>() == doctest::Approx(cov.sd / std::sqrt(runs)).epsilon(1e-9));
    CHECK(agg.at("network_energy_efficiency").get<double>() ==
          doctest::Approx(stats(cols["energy_efficiency"]).mean).epsilon(1e-12));

    const Table prog = read_csv(dir / "progressive.csv");
    double running = 0;
    for (std::size_t i = 0; i < prog.rows.size(); ++i) {
        running += cols["coverage"][i];
        CHECK(prog.num(i, "mean_coverage") == doctest::Approx(running / (i + 1)).epsilon(1e-12));
    }

    const Table power = read_csv(dir / "bs_power.csv");
    double total = 0;
    for (std::size_t i = 0; i < power.rows.size(); ++i)
        total += power.num(i, "p_total_w");
    CHECK(total == doctest::Approx(cols["power_w"][0]).epsilon(1e-12));

    const Table sites = read_csv(dir / "sites.csv");
    int active = 0;
    double served = 0;
    for (std::size_t i = 0; i < sites.rows.size(); ++i) {
        active += static_cast<int>(sites.num(i, "active"));
        served += sites.num(i, "served_mbps");
    }
    CHECK(active == cols["active_sites"][0]);
    CHECK(served == doctest::Approx(cols["served_mbps"][0]).epsilon(1e-9));
    CHECK(static_cast<int>(report.at("sites").at("candidates")) == static_cast<int>(sites.rows.size()));

    const Table assign = read_csv(dir / "assignment.csv");
    CHECK(assign.rows.size() == static_cast<std::size_t>(users));

    for (const char* f : {"runs.csv", "progressive.csv", "sites.csv", "assignment.csv", "bs_power.csv",
                          "population.csv", "coverage_raster.csv"}) {
        const Table any = read_csv(dir / f);
        CHECK(any.comments.size() >= 8);
        CHECK(any.comments[0].rfind("# tool: tvwsplan", 0) == 0);
    }
    const std::string svg = slurp(dir / "map.svg");
    CHECK(svg.find("<svg xmlns=") != std::string::npos);
    CHECK(svg.rfind("</svg>\n") == svg.size() - 7);
    fs::remove_all(dir);
}

} // namespace

TEST_SUITE("report")
{
    TEST_CASE("number formatting is locale independent")
    {
        CHECK(format_fixed(3.14159, 3) == "3.142");
        CHECK(format_fixed(-0.5, 1) == "-0.5");
        CHECK(format_general(0.1) == "0.1");
        CHECK(format_general(1.0) == "1");
        CHECK(std::stod(format_general(2.0 / 3.0)) == 2.0 / 3.0);
        CHECK(format_int(7, 3) == "007");
    }

    TEST_CASE("aggregates recompute from the per-run files")
    {
        check_round_trip("micro", "802.22b", 7);
        check_round_trip("boyeros_rural", "LTE", 12);
    }

    TEST_CASE("provenance names the inputs")
    {
        const Scenario sc = fixtures::scenario("boyeros_rural");
        const auto tech = fixtures::technology("802.11af", sc.environment);
        const Provenance prov = make_provenance(sc, tech, true);
        std::ostringstream os;
        write_comment_block(os, prov);
        const std::string text = os.str();
        for (const char* key : {"# tool:", "# scenario_digest: fnv1a64:", "# technology: 802.11af", "# antennas: mimo_4x4",
                                "# path_loss_calibration: rural-hata-excess/v1", "# power_calibration:"})
            CHECK(text.find(key) != std::string::npos);
    }

    TEST_CASE("curve writers")
    {
        const Scenario sc = fixtures::scenario("ghent_suburban");
        const auto tech = fixtures::technology("LTE", sc.environment);
        std::ostringstream cov, sweep, pl;
        write_coverage_csv(cov, {}, run_coverage(sc, tech, false));
        write_sweep_csv(sweep, {}, run_sweep(sc, tech, false));
        write_pathloss_csv(pl, {}, scenario_model(sc, tech.profile), 0.1, 10, 5);
        CHECK(cov.str().find("1/2 QPSK,4.32,") != std::string::npos);
        CHECK(sweep.str().find("1/2 16-QAM,14,0.937,") != std::string::npos);
        CHECK(sweep.str().find(",1\n") != std::string::npos);
        int lines = 0;
        for (char ch : pl.str())
            lines += ch == '\n';
        CHECK(lines == 6);
    }
}

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

#include "tvws/config.hpp"

#include "tvws/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <sstream>

#ifndef TVWSPLAN_DATA_DIR
#define TVWSPLAN_DATA_DIR "data"
#endif

namespace tvws {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string lower(std::string_view s)
{
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
    return out;
}

// Reads members of one JSON object, recording every problem instead of
// stopping at the first.
class Reader {
public:
    Reader(const json& obj, std::string path, std::vector<FieldError>& errors)
        : obj_(obj), path_(std::move(path)), errors_(errors)
    {
        if (!obj_.is_object())
            fail("", "expected an object");
    }

    std::string at(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

    bool has(const std::string& key) const { return obj_.is_object() && obj_.contains(key); }

    const json* child(const std::string& key, bool required = true) const
    {
        if (!has(key)) {
            if (required)
                fail(key, "missing required field");
            return nullptr;
        }
        return &obj_.at(key);
    }

    double number(const std::string& key, std::optional<double> fallback = std::nullopt) const
    {
        const json* v = child(key, !fallback);
        if (!v)
            return fallback.value_or(0.0);
        if (!v->is_number()) {
            fail(key, "expected a number");
            return fallback.value_or(0.0);
        }
        return v->get<double>();
    }

    double positive(const std::string& key, std::optional<double> fallback = std::nullopt) const
    {
        const double v = number(key, fallback);
        if (has(key) && !(v > 0.0))
            fail(key, "must be positive");
        return v;
    }

    double non_negative(const std::string& key, std::optional<double> fallback = std::nullopt) const
    {
        const double v = number(key, fallback);
        if (has(key) && v < 0.0)
            fail(key, "must be non-negative");
        return v;
    }

    long long integer(const std::string& key, std::optional<long long> fallback = std::nullopt) const
    {
        const json* v = child(key, !fallback);
        if (!v)
            return fallback.value_or(0);
        if (!v->is_number_integer()) {
            fail(key, "expected an integer");
            return fallback.value_or(0);
        }
        return v->get<long long>();
    }

    std::uint64_t unsigned_integer(const std::string& key, std::uint64_t fallback) const
    {
        const json* v = child(key, false);
        if (!v)
            return fallback;
        if (!v->is_number_unsigned()) {
            fail(key, "expected a non-negative integer");
            return fallback;
        }
        return v->get<std::uint64_t>();
    }

    std::string text(const std::string& key, std::optional<std::string> fallback = std::nullopt) const
    {
        const json* v = child(key, !fallback);
        if (!v)
            return fallback.value_or("");
        if (!v->is_string()) {
            fail(key, "expected a string");
            return fallback.value_or("");
        }
        return v->get<std::string>();
    }

    bool boolean(const std::string& key, bool fallback) const
    {
        const json* v = child(key, false);
        if (!v)
            return fallback;
        if (!v->is_boolean()) {
            fail(key, "expected true or false");
            return fallback;
        }
        return v->get<bool>();
    }

    template <class E>
    E choice(const std::string& key, std::initializer_list<std::pair<const char*, E>> options, E fallback) const
    {
        if (!has(key))
            return fallback;
        const std::string v = text(key, "");
        std::string known;
        for (const auto& [name, value] : options) {
            if (v == name)
                return value;
            known += known.empty() ? name : std::string(", ") + name;
        }
        fail(key, "unknown value '" + v + "' (expected one of: " + known + ")");
        return fallback;
    }

    void fail(const std::string& key, const std::string& message) const
    {
        errors_.push_back({key.empty() ? (path_.empty() ? "<root>" : path_) : at(key), message});
    }

private:
    const json& obj_;
    std::string path_;
    std::vector<FieldError>& errors_;
};

json parse_json(std::string_view text, const std::string& source)
{
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ConfigError(source, {{"<root>", std::string("invalid JSON: ") + e.what()}});
    }
}

template <class F>
void guard(std::vector<FieldError>& errors, const std::string& path, F&& f)
{
    try {
        f();
    } catch (const Error& e) {
        errors.push_back({path, e.what()});
    }
}

std::vector<Point> read_points(const json& arr, const std::string& path, std::vector<FieldError>& errors)
{
    std::vector<Point> pts;
    if (!arr.is_array()) {
        errors.push_back({path, "expected an array of [x, y] pairs"});
        return pts;
    }
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const json& p = arr[i];
        if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
            errors.push_back({path + "[" + std::to_string(i) + "]", "expected [x, y] in km"});
            continue;
        }
        pts.push_back({p[0].get<double>(), p[1].get<double>()});
    }
    return pts;
}

PathLossModel read_model(const Reader& r, std::string* calibration_id)
{
    const std::string kind = r.text("model");
    if (calibration_id)
        *calibration_id = r.text("calibration_id", "");
    if (kind == "one_slope") {
        OneSlopeModel m;
        m.pl0_db = r.number("pl0_db");
        m.d0_km = r.positive("d0_km", 1.0);
        m.exponent = r.positive("exponent");
        return m;
    }
    if (kind == "okumura_hata_rural") {
        OkumuraHataRuralModel m;
        m.freq_mhz = r.positive("freq_mhz", 600.0);
        m.bs_height_m = r.positive("bs_height_m", 30.0);
        m.rx_height_m = r.positive("rx_height_m", 3.0);
        m.excess_loss_db = r.number("excess_loss_db", 0.0);
        return m;
    }
    if (r.has("model"))
        r.fail("model", "unknown model '" + kind + "' (expected one_slope or okumura_hata_rural)");
    return OneSlopeModel{};
}

void read_planner(const Reader& r, PlannerConfig& c)
{
    c.runs = static_cast<int>(r.integer("runs", c.runs));
    if (r.has("runs") && c.runs < 1)
        r.fail("runs", "must be at least 1");
    c.base_seed = r.unsigned_integer("base_seed", c.base_seed);
    c.mcs_label = r.text("mcs", "");
    c.coverage_target_fraction = r.number("coverage_target", c.coverage_target_fraction);
    if (!(c.coverage_target_fraction > 0.0 && c.coverage_target_fraction <= 1.0))
        r.fail("coverage_target", "must be in (0, 1]");
    c.mcs_mode = r.choice("mcs_mode", {{"fixed", McsMode::Fixed}, {"adaptive", McsMode::Adaptive}}, c.mcs_mode);
    c.rebalance = r.choice("rebalance",
                           {{"new_site_only", RebalanceScope::NewSiteOnly}, {"any_active", RebalanceScope::AnyActive}},
                           c.rebalance);
    c.load_factor = r.choice(
        "load_factor", {{"full", LoadFactorMode::Full}, {"served_proportional", LoadFactorMode::ServedProportional}},
        c.load_factor);
    c.bitrate_accounting = r.choice("bitrate_accounting",
                                    {{"served_demand", BitrateAccounting::ServedDemand},
                                     {"offered_capacity", BitrateAccounting::OfferedCapacity}},
                                    c.bitrate_accounting);
    c.ee_user_factor = r.choice(
        "ee_user_factor", {{"literal", EeUserFactor::Literal}, {"covered_fraction", EeUserFactor::CoveredFraction}},
        c.ee_user_factor);
    c.shuffle_user_order = r.boolean("shuffle_user_order", c.shuffle_user_order);
}

void read_sites(const Reader& r, const Region& region, bool region_ok, SiteSpec& spec,
                std::vector<FieldError>& errors)
{
    if (const json* list = r.child("list", false)) {
        if (!list->is_array()) {
            r.fail("list", "expected an array of sites");
        } else {
            for (std::size_t i = 0; i < list->size(); ++i) {
                const std::string path = r.at("list") + "[" + std::to_string(i) + "]";
                Reader s((*list)[i], path, errors);
                CandidateSite site;
                site.id = s.text("id");
                site.position = {s.number("x_km"), s.number("y_km")};
                site.antenna_height_m = s.positive("antenna_height_m", 30.0);
                if (region_ok)
                    guard(errors, path, [&] { validate_site(region, site); });
                spec.listed.push_back(std::move(site));
            }
        }
    }
    if (const json* lat = r.child("lattice", false)) {
        Reader l(*lat, r.at("lattice"), errors);
        SiteLattice lattice;
        if (l.has("target") && l.child("target")->is_string()) {
            if (l.text("target") != "sizing")
                l.fail("target", "expected an integer or \"sizing\"");
            spec.lattice_from_sizing = true;
        } else {
            lattice.target_count = static_cast<int>(l.integer("target"));
            if (lattice.target_count < 1)
                l.fail("target", "must be at least 1");
        }
        lattice.jitter_fraction = l.non_negative("jitter_fraction", lattice.jitter_fraction);
        if (lattice.jitter_fraction >= 0.5)
            l.fail("jitter_fraction", "must be below 0.5");
        lattice.margin_km = l.non_negative("margin_km", lattice.margin_km);
        if (lattice.margin_km > kMaxSiteOffsetKm)
            l.fail("margin_km", "must not exceed the 2 km site offset limit");
        lattice.seed = l.unsigned_integer("seed", lattice.seed);
        lattice.antenna_height_m = l.positive("antenna_height_m", lattice.antenna_height_m);
        spec.lattice = lattice;
    }
    if (const json* g = r.child("growth", false)) {
        Reader gr(*g, r.at("growth"), errors);
        spec.growth.enabled = gr.boolean("enabled", true);
        spec.growth.pilot_runs = static_cast<int>(gr.integer("pilot_runs", spec.growth.pilot_runs));
        spec.growth.cap = static_cast<int>(gr.integer("cap", spec.growth.cap));
        if (spec.growth.pilot_runs < 1)
            gr.fail("pilot_runs", "must be at least 1");
        if (spec.growth.cap < 1)
            gr.fail("cap", "must be at least 1");
        if (spec.growth.enabled && !spec.lattice)
            gr.fail("enabled", "growth needs a lattice");
    }
    if (spec.listed.empty() && !spec.lattice)
        r.fail("", "needs a non-empty \"list\" or a \"lattice\"");
    if (!spec.listed.empty() && spec.lattice)
        r.fail("", "\"list\" and \"lattice\" are mutually exclusive");
}

} // namespace

std::string to_string(Environment env)
{
    return env == Environment::Suburban ? "suburban" : "rural";
}

Environment parse_environment(std::string_view text)
{
    const std::string t = lower(text);
    if (t == "suburban")
        return Environment::Suburban;
    if (t == "rural")
        return Environment::Rural;
    throw InvalidArgument("unknown environment '" + std::string(text) + "' (expected suburban or rural)");
}

std::string fnv1a_hex(std::string_view bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i, h >>= 4)
        out[static_cast<std::size_t>(i)] = digits[h & 0xf];
    return out;
}

std::string read_file(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open file '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path default_data_dir()
{
    if (const char* env = std::getenv("TVWSPLAN_DATA_DIR"); env && *env)
        return env;
    return TVWSPLAN_DATA_DIR;
}

Scenario parse_scenario(std::string_view text, const std::string& source)
{
    const json j = parse_json(text, source);
    std::vector<FieldError> errors;
    Reader root(j, "", errors);
    Scenario sc;
    sc.source = source;
    sc.digest = fnv1a_hex(text);

    const long long version = root.integer("schema_version");
    if (root.has("schema_version") && version != kScenarioSchemaVersion)
        root.fail("schema_version", "unsupported version " + std::to_string(version));
    sc.name = root.text("name");
    if (root.has("environment"))
        guard(errors, "environment", [&] { sc.environment = parse_environment(root.text("environment")); });
    else
        root.fail("environment", "missing required field");
    sc.default_technology = root.text("technology", "");

    bool region_ok = false;
    if (const json* reg = root.child("region")) {
        Reader r(*reg, "region", errors);
        std::vector<Point> outline;
        if (const json* o = r.child("outline_km"))
            outline = read_points(*o, "region.outline_km", errors);
        const double area = r.positive("area_km2", 0.0);
        const double res = r.positive("resolution_m", 250.0);
        if (!outline.empty()) {
            const std::size_t before = errors.size();
            guard(errors, "region", [&] { sc.region = make_region(sc.name, outline, res, area); });
            region_ok = errors.size() == before;
        }
    }
    if (const json* pop = root.child("population")) {
        Reader p(*pop, "population", errors);
        const long long users = p.integer("user_count");
        if (users < 0 || users > 1000000)
            p.fail("user_count", "must be in [0, 1000000]");
        sc.population.user_count = static_cast<int>(users);
        sc.population.data_fraction = p.number("data_fraction");
        if (sc.population.data_fraction < 0.0 || sc.population.data_fraction > 1.0)
            p.fail("data_fraction", "must be in [0, 1]");
        sc.population.data_bitrate_mbps = p.positive("data_bitrate_mbps");
        sc.population.voice_bitrate_mbps = p.positive("voice_bitrate_mbps");
    }
    if (const json* m = root.child("margins")) {
        Reader r(*m, "margins", errors);
        sc.margins.shadow_margin_db = r.non_negative("shadow_margin_db");
        sc.margins.fade_margin_db = r.non_negative("fade_margin_db");
    }
    if (const json* m = root.child("propagation")) {
        Reader r(*m, "propagation", errors);
        const std::size_t before = errors.size();
        sc.model = read_model(r, &sc.model_calibration_id);
        if (errors.size() == before)
            guard(errors, "propagation", [&] { validate(sc.model); });
    }
    if (const json* s = root.child("sites")) {
        Reader r(*s, "sites", errors);
        read_sites(r, sc.region, region_ok, sc.sites, errors);
    }
    if (const json* p = root.child("planner", false)) {
        Reader r(*p, "planner", errors);
        read_planner(r, sc.planner);
    }
    if (!errors.empty())
        throw ConfigError(source, std::move(errors));
    return sc;
}

Scenario load_scenario(const fs::path& path)
{
    return parse_scenario(read_file(path), path.string());
}

BsPowerModel load_power_model(const fs::path& path, std::string* id)
{
    const std::string source = path.string();
    const json j = parse_json(read_file(path), source);
    std::vector<FieldError> errors;
    Reader r(j, "", errors);
    const std::string kind = r.text("model");
    if (id)
        *id = r.text("calibration_id", "");
    BsPowerModel model;
    if (kind == "tvws") {
        TvwsPowerParams p;
        p.p_backhaul_w = r.positive("p_backhaul_w", p.p_backhaul_w);
        p.p_poe_w = r.positive("p_poe_w", p.p_poe_w);
        p.p_idle_w = r.positive("p_idle_w", p.p_idle_w);
        p.ru_efficiency = r.positive("ru_efficiency", p.ru_efficiency);
        if (p.ru_efficiency > 1.0)
            r.fail("ru_efficiency", "must be in (0, 1]");
        model = p;
    } else if (kind == "macro") {
        MacroPowerParams p;
        p.p_fixed_w = r.positive("p_fixed_w", p.p_fixed_w);
        p.amp_efficiency = r.positive("amp_efficiency", p.amp_efficiency);
        p.p_per_tx_overhead_w = r.positive("p_per_tx_overhead_w", p.p_per_tx_overhead_w);
        if (p.amp_efficiency > 1.0)
            r.fail("amp_efficiency", "must be in (0, 1]");
        model = p;
    } else if (r.has("model")) {
        r.fail("model", "unknown power model '" + kind + "' (expected tvws or macro)");
    }
    if (!errors.empty())
        throw ConfigError(source, std::move(errors));
    return model;
}

TechnologyBundle parse_technology(std::string_view text, const std::string& source, Environment env,
                                  const fs::path& data_dir)
{
    const json j = parse_json(text, source);
    std::vector<FieldError> errors;
    Reader r(j, "", errors);
    TechnologyBundle b;
    b.source = source;
    TechnologyProfile& p = b.profile;
    p.name = r.text("name");
    p.eirp_dbm = r.number("eirp_dbm");
    p.sampling_factor = r.positive("sampling_factor");
    p.interference_margin_db = r.non_negative("interference_margin_db", 0.0);
    p.mimo_gain_db = r.non_negative("mimo_gain_db", 0.0);
    if (r.has("mimo_4x4_gain_db"))
        p.mimo_4x4_gain_db = r.non_negative("mimo_4x4_gain_db");
    if (const json* rx = r.child("receiver")) {
        Reader x(*rx, "receiver", errors);
        p.rx_antenna_gain_db = x.number("antenna_gain_db");
        p.rx_feeder_loss_db = x.non_negative("feeder_loss_db");
        p.rx_noise_figure_db = x.non_negative("noise_figure_db");
        p.rx_height_m = x.positive("height_m", 3.0);
    }
    const std::string env_key = to_string(env);
    if (const json* envs = r.child("environments")) {
        Reader e(*envs, "environments", errors);
        if (const json* blk = e.child(env_key)) {
            Reader x(*blk, "environments." + env_key, errors);
            p.freq_mhz = x.positive("freq_mhz");
            p.bandwidth_mhz = x.positive("bandwidth_mhz");
            p.total_subcarriers = static_cast<int>(x.integer("total_subcarriers"));
            p.used_subcarriers = static_cast<int>(x.integer("used_subcarriers"));
        }
    }
    if (const json* table = r.child("mcs")) {
        if (!table->is_array() || table->empty()) {
            r.fail("mcs", "expected a non-empty array");
        } else {
            for (std::size_t i = 0; i < table->size(); ++i) {
                const std::string path = "mcs[" + std::to_string(i) + "]";
                Reader m((*table)[i], path, errors);
                McsEntry e;
                e.label = m.text("label");
                e.required_snr_db = m.number("snr_db");
                e.hardware_available = m.boolean("hardware_available", true);
                if (const json* br = m.child("bitrate_mbps")) {
                    if (!br->is_object()) {
                        m.fail("bitrate_mbps", "expected an object keyed by bandwidth in MHz");
                    } else {
                        for (const auto& [bw, rate] : br->items()) {
                            char* end = nullptr;
                            const double key = std::strtod(bw.c_str(), &end);
                            if (end == bw.c_str() || *end != '\0' || !(key > 0.0) || !rate.is_number() ||
                                !(rate.get<double>() > 0.0)) {
                                errors.push_back({path + ".bitrate_mbps." + bw, "expected a positive bitrate"});
                                continue;
                            }
                            e.bitrate_mbps[key] = rate.get<double>();
                        }
                    }
                }
                p.mcs_table.push_back(std::move(e));
            }
        }
    }
    const std::string power_file = r.text("power_model");
    if (errors.empty())
        guard(errors, "<profile>", [&] { validate(p); });
    if (errors.empty())
        guard(errors, "power_model", [&] { b.power = load_power_model(data_dir / "power" / power_file, &b.power_id); });
    if (!errors.empty())
        throw ConfigError(source, std::move(errors));
    return b;
}

namespace {

std::vector<fs::path> technology_files(const fs::path& data_dir)
{
    const fs::path dir = data_dir / "technologies";
    std::error_code ec;
    if (!fs::is_directory(dir, ec))
        throw IoError("technology directory '" + dir.string() + "' not found");
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.path().extension() == ".json")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    return files;
}

std::vector<std::string> names_of(const json& j)
{
    std::vector<std::string> names;
    if (j.contains("name") && j["name"].is_string())
        names.push_back(j["name"].get<std::string>());
    if (j.contains("aliases") && j["aliases"].is_array())
        for (const json& a : j["aliases"])
            if (a.is_string())
                names.push_back(a.get<std::string>());
    return names;
}

} // namespace

std::vector<std::string> list_technologies(const fs::path& data_dir)
{
    std::vector<std::string> out;
    for (const fs::path& f : technology_files(data_dir)) {
        const auto names = names_of(parse_json(read_file(f), f.string()));
        if (!names.empty())
            out.push_back(names.front());
    }
    return out;
}

TechnologyBundle load_technology(const fs::path& data_dir, std::string_view name, Environment env)
{
    const std::string want = lower(name);
    for (const fs::path& f : technology_files(data_dir)) {
        const std::string text = read_file(f);
        for (const std::string& n : names_of(parse_json(text, f.string())))
            if (lower(n) == want)
                return parse_technology(text, f.string(), env, data_dir);
    }
    throw InvalidArgument("unknown technology '" + std::string(name) + "' in '" +
                          (data_dir / "technologies").string() + "'");
}

} // namespace tvws

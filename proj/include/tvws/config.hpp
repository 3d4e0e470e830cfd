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

#ifndef TVWS_CONFIG_HPP
#define TVWS_CONFIG_HPP

#include "tvws/link_budget.hpp"
#include "tvws/planner.hpp"
#include "tvws/power_energy.hpp"
#include "tvws/propagation.hpp"
#include "tvws/scenario.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tvws {

inline constexpr int kScenarioSchemaVersion = 1;

enum class Environment { Suburban, Rural };

std::string to_string(Environment env);
Environment parse_environment(std::string_view text);

struct GrowthSpec {
    bool enabled = false;
    int pilot_runs = 10;
    int cap = kDefaultGrowthCap;
};

struct SiteSpec {
    std::vector<CandidateSite> listed;
    std::optional<SiteLattice> lattice;
    bool lattice_from_sizing = false;  // target count = sweep optimum n_min
    GrowthSpec growth;
};

struct Scenario {
    std::string name;
    Environment environment = Environment::Suburban;
    Region region;
    PopulationSpec population;
    EnvironmentMargins margins;
    // Hata frequency is overridden by the technology, BS height by each site.
    PathLossModel model;
    std::string model_calibration_id;
    SiteSpec sites;
    PlannerConfig planner;
    std::string default_technology;
    std::string digest;  // FNV-1a 64 of the file bytes
    std::string source;
};

Scenario parse_scenario(std::string_view text, const std::string& source);
Scenario load_scenario(const std::filesystem::path& path);

struct TechnologyBundle {
    TechnologyProfile profile;
    BsPowerModel power;
    std::string power_id;
    std::string source;
};

// Resolves `name` (case-insensitive, aliases allowed) among the technology
// files in data_dir/technologies and selects the environment block.
TechnologyBundle load_technology(const std::filesystem::path& data_dir, std::string_view name, Environment env);
TechnologyBundle parse_technology(std::string_view text, const std::string& source, Environment env,
                                  const std::filesystem::path& data_dir);
std::vector<std::string> list_technologies(const std::filesystem::path& data_dir);

BsPowerModel load_power_model(const std::filesystem::path& path, std::string* id = nullptr);

std::string fnv1a_hex(std::string_view bytes);
std::string read_file(const std::filesystem::path& path);

// $TVWSPLAN_DATA_DIR, else the directory configured at build time.
std::filesystem::path default_data_dir();

} // namespace tvws

#endif

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

#ifndef TVWS_TEST_FIXTURES_HPP
#define TVWS_TEST_FIXTURES_HPP

#include "tvws/config.hpp"
#include "tvws/workflow.hpp"

#include <array>
#include <filesystem>
#include <string>

namespace fixtures {

inline std::filesystem::path data_dir()
{
    return TVWSPLAN_TEST_DATA_DIR;
}

inline tvws::Scenario scenario(const std::string& name)
{
    return tvws::load_scenario(data_dir() / "scenarios" / (name + ".json"));
}

inline tvws::TechnologyBundle technology(const std::string& name, tvws::Environment env)
{
    return tvws::load_technology(data_dir(), name, env);
}

inline constexpr std::array<const char*, 4> kTechnologies = {"802.22", "802.22b", "802.11af", "LTE"};
inline constexpr std::array<const char*, 2> kScenarios = {"ghent_suburban", "boyeros_rural"};

inline tvws::PlanResult plan(const std::string& scenario_name, const std::string& tech, bool mimo = false,
                             int workers = 1)
{
    const tvws::Scenario sc = scenario(scenario_name);
    tvws::RunOptions opt;
    opt.mimo_4x4 = mimo;
    opt.workers = workers;
    return tvws::run_plan(sc, technology(tech, sc.environment), opt);
}

} // namespace fixtures

#endif

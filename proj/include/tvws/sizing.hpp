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

#ifndef TVWS_SIZING_HPP
#define TVWS_SIZING_HPP

#include "tvws/link_budget.hpp"
#include "tvws/propagation.hpp"

#include <string>
#include <vector>

namespace tvws {

// ceil(A / (pi R^2))
int min_bs_for_area(double area_km2, double range_km);

// ceil(T / B_BS)
int min_bs_for_load(double total_demand_mbps, double bs_bitrate_mbps);

struct SizingResult {
    std::string mcs_label;
    double required_snr_db = 0.0;
    double range_km = 0.0;
    double bs_bitrate_mbps = 0.0;
    int n_bs_area = 0;
    int n_bs_load = 0;
    int n_bs_min = 0;
    bool hardware_available = true;
    bool optimal = false;
};

// One row per MCS. Exactly one row, among the hardware-available entries, is
// marked optimal: the smallest n_bs_min, ties going to the larger range.
std::vector<SizingResult> sweep_mcs(const TechnologyProfile& profile, const EnvironmentMargins& margins,
                                    const PathLossModel& model, double area_km2, double total_demand_mbps);

const SizingResult& optimal_row(const std::vector<SizingResult>& sweep);

} // namespace tvws

#endif

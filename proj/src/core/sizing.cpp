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

#include "tvws/sizing.hpp"

#include "tvws/error.hpp"

#include <cmath>
#include <numbers>

namespace tvws {

int min_bs_for_area(double area_km2, double range_km)
{
    if (!(area_km2 > 0.0) || !(range_km > 0.0))
        throw DomainError("area and range must be positive");
    return static_cast<int>(std::ceil(area_km2 / (std::numbers::pi * range_km * range_km)));
}

int min_bs_for_load(double total_demand_mbps, double bs_bitrate_mbps)
{
    if (!(total_demand_mbps > 0.0) || !(bs_bitrate_mbps > 0.0))
        throw DomainError("traffic and BS bitrate must be positive");
    return static_cast<int>(std::ceil(total_demand_mbps / bs_bitrate_mbps));
}

std::vector<SizingResult> sweep_mcs(const TechnologyProfile& profile, const EnvironmentMargins& margins,
                                    const PathLossModel& model, double area_km2, double total_demand_mbps)
{
    std::vector<SizingResult> rows;
    for (const CoveragePoint& pt : coverage_curve(profile, margins, model)) {
        SizingResult r;
        r.mcs_label = pt.mcs_label;
        r.required_snr_db = pt.required_snr_db;
        r.range_km = pt.range_km;
        r.bs_bitrate_mbps = pt.bitrate_mbps;
        r.n_bs_area = min_bs_for_area(area_km2, pt.range_km);
        r.n_bs_load = min_bs_for_load(total_demand_mbps, pt.bitrate_mbps);
        r.n_bs_min = std::max(r.n_bs_area, r.n_bs_load);
        r.hardware_available = profile.mcs(pt.mcs_label).hardware_available;
        rows.push_back(std::move(r));
    }
    SizingResult* best = nullptr;
    for (SizingResult& r : rows) {
        if (!r.hardware_available)
            continue;
        if (!best || r.n_bs_min < best->n_bs_min || (r.n_bs_min == best->n_bs_min && r.range_km > best->range_km))
            best = &r;
    }
    if (!best)
        throw DomainError("technology '" + profile.name + "' has no hardware-available MCS");
    best->optimal = true;
    return rows;
}

const SizingResult& optimal_row(const std::vector<SizingResult>& sweep)
{
    for (const SizingResult& r : sweep)
        if (r.optimal)
            return r;
    throw InvalidArgument("sweep has no optimal row");
}

} // namespace tvws

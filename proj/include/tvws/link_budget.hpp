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

#ifndef TVWS_LINK_BUDGET_HPP
#define TVWS_LINK_BUDGET_HPP

#include "tvws/propagation.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tvws {

struct McsEntry {
    std::string label;           // e.g. "1/2 QPSK"
    double required_snr_db = 0.0;
    std::map<double, double> bitrate_mbps;  // channel bandwidth (MHz) -> PHY bitrate
    bool hardware_available = true;         // false: listed but never planned with

    // Bitrate at the given channel bandwidth; throws if the table lacks it.
    double bitrate_at(double bandwidth_mhz) const;
};

struct TechnologyProfile {
    std::string name;
    double eirp_dbm = 36.0;
    double freq_mhz = 600.0;
    double bandwidth_mhz = 8.0;
    int total_subcarriers = 1;
    int used_subcarriers = 1;
    double sampling_factor = 1.0;
    double interference_margin_db = 0.0;
    double mimo_gain_db = 0.0;      // 0 for SISO
    int n_transmitters = 1;
    double rx_antenna_gain_db = 0.0;
    double rx_feeder_loss_db = 0.0;
    double rx_noise_figure_db = 0.0;
    double rx_height_m = 3.0;
    std::vector<McsEntry> mcs_table;  // ascending required SNR

    // Gain a 4x4 configuration would add; empty when the technology has none.
    std::optional<double> mimo_4x4_gain_db;

    const McsEntry& mcs(const std::string& label) const;
};

void validate(const TechnologyProfile& profile);

// Copy of the profile with the 4x4 MIMO link gain and four transmitters.
TechnologyProfile with_mimo_4x4(const TechnologyProfile& profile);

struct EnvironmentMargins {
    double shadow_margin_db = 0.0;
    double fade_margin_db = 0.0;
};

void validate(const EnvironmentMargins& margins);

inline constexpr double kThermalNoiseDbmPerHz = -174.0;

// Subcarrier spacing (bandwidth * sampling factor / total) times used subcarriers.
double occupied_bandwidth_hz(const TechnologyProfile& profile);

double noise_floor_dbm(const TechnologyProfile& profile);

double sensitivity_dbm(const TechnologyProfile& profile, const McsEntry& mcs);

double max_allowable_path_loss_db(const TechnologyProfile& profile, const EnvironmentMargins& margins,
                                  const McsEntry& mcs);

struct CoveragePoint {
    std::string mcs_label;
    double bitrate_mbps = 0.0;
    double required_snr_db = 0.0;
    double pl_max_db = 0.0;
    double range_km = 0.0;
    bool beyond_model_validity = false;  // Hata range past 20 km
};

std::vector<CoveragePoint> coverage_curve(const TechnologyProfile& profile, const EnvironmentMargins& margins,
                                          const PathLossModel& model);

// Largest range over the MCS entries delivering at least bitrate_mbps, or 0
// when none does. This is the Fig.-6 style reading of a bitrate/range curve.
double range_at_bitrate_km(const std::vector<CoveragePoint>& curve, double bitrate_mbps) noexcept;

} // namespace tvws

#endif

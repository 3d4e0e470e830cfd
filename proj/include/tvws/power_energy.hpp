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

#ifndef TVWS_POWER_ENERGY_HPP
#define TVWS_POWER_ENERGY_HPP

#include <span>
#include <string>
#include <variant>
#include <vector>

namespace tvws {

// Radio unit + PoE + optical backhaul model of a TVWS base station.
struct TvwsPowerParams {
    double p_backhaul_w = 32.0;
    double p_poe_w = 4.0;
    double p_idle_w = 6.0;
    double ru_efficiency = 0.182;
};

// Macrocell model: fixed overhead (rectifier, processing, backhaul) plus a
// per-transmitter chain of power amplifier and transceiver overhead.
struct MacroPowerParams {
    double p_fixed_w = 346.14;
    double amp_efficiency = 0.25;
    double p_per_tx_overhead_w = 20.33;
};

using BsPowerModel = std::variant<TvwsPowerParams, MacroPowerParams>;

struct BsPowerInput {
    int n_sectors = 1;
    int n_transmitters = 1;
    double radiated_power_w = 4.0;  // per transmitter
    double load_factor = 1.0;       // alpha in [0, 1]
};

void validate(const TvwsPowerParams& params);
void validate(const MacroPowerParams& params);
void validate(const BsPowerInput& input);

// P_bh + P_idle + n_st * n_tx * alpha * (P_r / eta_ru + P_PoE)
double tvws_bs_power_w(const TvwsPowerParams& params, const BsPowerInput& input);

// p_fixed + n_st * n_tx * (P_r / eta_amp + p_per_tx_overhead)
double macro_bs_power_w(const MacroPowerParams& params, const BsPowerInput& input);

double bs_power_w(const BsPowerModel& model, const BsPowerInput& input);

std::string describe(const BsPowerModel& model);

double dbm_to_w(double dbm) noexcept;

// How the user count U enters the network energy-efficiency average.
//   Literal:         c_i * A_T * U * sum_j B_ij / sum_j P_ij  (as printed)
//   CoveredFraction: c_i * A_T * sum_j B_ij / sum_j P_ij      (km^2 Mbps / W)
enum class EeUserFactor { Literal, CoveredFraction };

struct EnergySample {
    double coverage_fraction = 0.0;     // c_i
    std::vector<double> bitrate_mbps;   // B_ij per active BS
    std::vector<double> power_w;        // P_BSij per active BS
};

double run_energy_efficiency(const EnergySample& sample, double area_km2, int user_count,
                             EeUserFactor user_factor);

// Mean of run_energy_efficiency over the runs.
double network_energy_efficiency(std::span<const EnergySample> runs, double area_km2, int user_count,
                                 EeUserFactor user_factor);

} // namespace tvws

#endif

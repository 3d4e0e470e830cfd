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

#include "tvws/link_budget.hpp"

#include "tvws/error.hpp"
#include "tvws/format.hpp"

#include <cmath>

namespace tvws {

double McsEntry::bitrate_at(double bandwidth_mhz) const
{
    const auto it = bitrate_mbps.find(bandwidth_mhz);
    if (it == bitrate_mbps.end())
        throw DomainError("MCS '" + label + "' has no bitrate for " + format_general(bandwidth_mhz) + " MHz");
    return it->second;
}

const McsEntry& TechnologyProfile::mcs(const std::string& label) const
{
    for (const McsEntry& e : mcs_table)
        if (e.label == label)
            return e;
    throw InvalidArgument("technology '" + name + "' has no MCS '" + label + "'");
}

void validate(const TechnologyProfile& p)
{
    const std::string who = "technology '" + p.name + "': ";
    if (p.total_subcarriers <= 0)
        throw DomainError(who + "total_subcarriers must be positive");
    if (p.used_subcarriers <= 0 || p.used_subcarriers > p.total_subcarriers)
        throw DomainError(who + "used_subcarriers must be in [1, total_subcarriers]");
    if (!(p.bandwidth_mhz > 0.0) || !(p.sampling_factor > 0.0) || !(p.freq_mhz > 0.0))
        throw DomainError(who + "bandwidth, sampling factor and frequency must be positive");
    if (p.interference_margin_db < 0.0 || p.mimo_gain_db < 0.0)
        throw DomainError(who + "margins and MIMO gain must be non-negative");
    if (p.n_transmitters < 1)
        throw DomainError(who + "n_transmitters must be at least 1");
    if (p.mcs_table.empty())
        throw DomainError(who + "MCS table is empty");
    for (std::size_t i = 0; i < p.mcs_table.size(); ++i) {
        const McsEntry& e = p.mcs_table[i];
        const double rate = e.bitrate_at(p.bandwidth_mhz);
        if (!(rate > 0.0))
            throw DomainError(who + "MCS '" + e.label + "' bitrate must be positive");
        if (i > 0) {
            const McsEntry& prev = p.mcs_table[i - 1];
            if (!(e.required_snr_db > prev.required_snr_db))
                throw DomainError(who + "MCS table must be sorted by strictly ascending required SNR");
            if (!(rate > prev.bitrate_at(p.bandwidth_mhz)))
                throw DomainError(who + "bitrate must increase with required SNR");
        }
    }
}

TechnologyProfile with_mimo_4x4(const TechnologyProfile& profile)
{
    if (!profile.mimo_4x4_gain_db)
        throw InvalidArgument("technology '" + profile.name + "' has no MIMO 4x4 configuration");
    TechnologyProfile out = profile;
    out.mimo_gain_db = *profile.mimo_4x4_gain_db;
    out.n_transmitters = 4;
    return out;
}

void validate(const EnvironmentMargins& m)
{
    if (!(m.shadow_margin_db >= 0.0) || !(m.fade_margin_db >= 0.0))
        throw DomainError("shadow and fade margins must be non-negative");
}

double occupied_bandwidth_hz(const TechnologyProfile& p)
{
    if (p.total_subcarriers <= 0)
        throw DomainError("total_subcarriers must be positive");
    const double sampling_rate_hz = p.bandwidth_mhz * 1.0e6 * p.sampling_factor;
    const double spacing_hz = sampling_rate_hz / p.total_subcarriers;
    return spacing_hz * p.used_subcarriers;
}

double noise_floor_dbm(const TechnologyProfile& p)
{
    return kThermalNoiseDbmPerHz + 10.0 * std::log10(occupied_bandwidth_hz(p));
}

double sensitivity_dbm(const TechnologyProfile& p, const McsEntry& mcs)
{
    return noise_floor_dbm(p) + p.rx_noise_figure_db + mcs.required_snr_db;
}

double max_allowable_path_loss_db(const TechnologyProfile& p, const EnvironmentMargins& m, const McsEntry& mcs)
{
    return p.eirp_dbm + p.rx_antenna_gain_db - p.rx_feeder_loss_db + p.mimo_gain_db - sensitivity_dbm(p, mcs) -
           m.shadow_margin_db - m.fade_margin_db - p.interference_margin_db;
}

std::vector<CoveragePoint> coverage_curve(const TechnologyProfile& p, const EnvironmentMargins& m,
                                          const PathLossModel& model)
{
    std::vector<CoveragePoint> curve;
    curve.reserve(p.mcs_table.size());
    for (const McsEntry& e : p.mcs_table) {
        CoveragePoint pt;
        pt.mcs_label = e.label;
        pt.bitrate_mbps = e.bitrate_at(p.bandwidth_mhz);
        pt.required_snr_db = e.required_snr_db;
        pt.pl_max_db = max_allowable_path_loss_db(p, m, e);
        pt.range_km = invert_range_km(model, pt.pl_max_db);
        pt.beyond_model_validity =
            std::holds_alternative<OkumuraHataRuralModel>(model) && pt.range_km > kHataMaxDistanceKm;
        curve.push_back(std::move(pt));
    }
    return curve;
}

double range_at_bitrate_km(const std::vector<CoveragePoint>& curve, double bitrate_mbps) noexcept
{
    double best = 0.0;
    for (const CoveragePoint& pt : curve)
        if (pt.bitrate_mbps >= bitrate_mbps)
            best = std::max(best, pt.range_km);
    return best;
}

} // namespace tvws

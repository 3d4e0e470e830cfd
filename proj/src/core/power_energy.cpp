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

#include "tvws/power_energy.hpp"

#include "tvws/error.hpp"
#include "tvws/format.hpp"
#include "overloaded.hpp"

#include <cmath>

namespace tvws {

using detail::overloaded;

void validate(const TvwsPowerParams& p)
{
    if (!(p.p_backhaul_w > 0.0) || !(p.p_poe_w > 0.0) || !(p.p_idle_w > 0.0))
        throw DomainError("TVWS power parameters must be positive");
    if (!(p.ru_efficiency > 0.0 && p.ru_efficiency <= 1.0))
        throw DomainError("TVWS radio-unit efficiency must be in (0, 1]");
}

void validate(const MacroPowerParams& p)
{
    if (!(p.p_fixed_w > 0.0) || !(p.p_per_tx_overhead_w > 0.0))
        throw DomainError("macro power parameters must be positive");
    if (!(p.amp_efficiency > 0.0 && p.amp_efficiency <= 1.0))
        throw DomainError("macro amplifier efficiency must be in (0, 1]");
}

void validate(const BsPowerInput& in)
{
    if (in.n_sectors < 1 || in.n_transmitters < 1)
        throw DomainError("sector and transmitter counts must be at least 1");
    if (!(in.radiated_power_w >= 0.0))
        throw DomainError("radiated power must be non-negative");
    if (!(in.load_factor >= 0.0 && in.load_factor <= 1.0))
        throw DomainError("load factor must be in [0, 1]");
}

double tvws_bs_power_w(const TvwsPowerParams& p, const BsPowerInput& in)
{
    validate(p);
    validate(in);
    const double chains = static_cast<double>(in.n_sectors) * in.n_transmitters;
    return p.p_backhaul_w + p.p_idle_w + chains * in.load_factor * (in.radiated_power_w / p.ru_efficiency + p.p_poe_w);
}

double macro_bs_power_w(const MacroPowerParams& p, const BsPowerInput& in)
{
    validate(p);
    validate(in);
    const double chains = static_cast<double>(in.n_sectors) * in.n_transmitters;
    return p.p_fixed_w + chains * (in.radiated_power_w / p.amp_efficiency + p.p_per_tx_overhead_w);
}

double bs_power_w(const BsPowerModel& model, const BsPowerInput& input)
{
    return std::visit(overloaded{
                          [&](const TvwsPowerParams& p) { return tvws_bs_power_w(p, input); },
                          [&](const MacroPowerParams& p) { return macro_bs_power_w(p, input); },
                      },
                      model);
}

std::string describe(const BsPowerModel& model)
{
    return std::visit(overloaded{
                          [](const TvwsPowerParams& p) {
                              return "tvws(p_backhaul_w=" + format_general(p.p_backhaul_w) +
                                     ", p_poe_w=" + format_general(p.p_poe_w) +
                                     ", p_idle_w=" + format_general(p.p_idle_w) +
                                     ", ru_efficiency=" + format_general(p.ru_efficiency) + ")";
                          },
                          [](const MacroPowerParams& p) {
                              return "macro(p_fixed_w=" + format_general(p.p_fixed_w) +
                                     ", amp_efficiency=" + format_general(p.amp_efficiency) +
                                     ", p_per_tx_overhead_w=" + format_general(p.p_per_tx_overhead_w) + ")";
                          },
                      },
                      model);
}

double dbm_to_w(double dbm) noexcept
{
    return std::pow(10.0, (dbm - 30.0) / 10.0);
}

double run_energy_efficiency(const EnergySample& s, double area_km2, int user_count, EeUserFactor user_factor)
{
    double bitrate = 0.0, power = 0.0;
    for (double b : s.bitrate_mbps)
        bitrate += b;
    for (double p : s.power_w)
        power += p;
    if (!(power > 0.0))
        throw DomainError("energy efficiency of a run with zero total power");
    const double users = user_factor == EeUserFactor::Literal ? static_cast<double>(user_count) : 1.0;
    return s.coverage_fraction * area_km2 * users * bitrate / power;
}

double network_energy_efficiency(std::span<const EnergySample> runs, double area_km2, int user_count,
                                 EeUserFactor user_factor)
{
    if (runs.empty())
        throw InvalidArgument("energy efficiency needs at least one run");
    double sum = 0.0;
    for (const EnergySample& s : runs)
        sum += run_energy_efficiency(s, area_km2, user_count, user_factor);
    return sum / static_cast<double>(runs.size());
}

} // namespace tvws

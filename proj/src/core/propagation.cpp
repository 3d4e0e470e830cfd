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

#include "tvws/propagation.hpp"

#include "tvws/error.hpp"
#include "tvws/format.hpp"
#include "overloaded.hpp"

#include <cmath>

namespace tvws {

namespace {

using detail::overloaded;

bool positive_finite(double v) noexcept
{
    return std::isfinite(v) && v > 0.0;
}

double one_slope(const OneSlopeModel& m, double d) noexcept
{
    return m.pl0_db + 10.0 * m.exponent * std::log10(d / m.d0_km);
}

double hata_rural(const OkumuraHataRuralModel& m, double d) noexcept
{
    const double lf = std::log10(m.freq_mhz);
    const double lhb = std::log10(m.bs_height_m);
    const double urban = 69.55 + 26.16 * lf - 13.82 * lhb - hata_mobile_correction_db(m.freq_mhz, m.rx_height_m) +
                         (44.9 - 6.55 * lhb) * std::log10(d);
    return urban - hata_open_area_correction_db(m.freq_mhz) + m.excess_loss_db;
}

} // namespace

double hata_mobile_correction_db(double freq_mhz, double rx_height_m) noexcept
{
    const double lf = std::log10(freq_mhz);
    return (1.1 * lf - 0.7) * rx_height_m - (1.56 * lf - 0.8);
}

double hata_open_area_correction_db(double freq_mhz) noexcept
{
    const double lf = std::log10(freq_mhz);
    return 4.78 * lf * lf - 18.33 * lf + 40.94;
}

void validate(const PathLossModel& model)
{
    std::visit(overloaded{
                   [](const OneSlopeModel& m) {
                       if (!std::isfinite(m.pl0_db))
                           throw DomainError("one-slope pl0_db must be finite");
                       if (!positive_finite(m.d0_km))
                           throw DomainError("one-slope d0_km must be positive");
                       if (!positive_finite(m.exponent))
                           throw DomainError("one-slope exponent must be positive");
                   },
                   [](const OkumuraHataRuralModel& m) {
                       if (!positive_finite(m.freq_mhz) || !positive_finite(m.bs_height_m) ||
                           !positive_finite(m.rx_height_m))
                           throw DomainError("Hata frequency and antenna heights must be positive");
                       if (!std::isfinite(m.excess_loss_db))
                           throw DomainError("Hata excess_loss_db must be finite");
                   },
               },
               model);
}

std::vector<std::string> validity_warnings(const PathLossModel& model)
{
    std::vector<std::string> out;
    if (const auto* m = std::get_if<OkumuraHataRuralModel>(&model)) {
        if (m->freq_mhz < 150.0 || m->freq_mhz > 1500.0)
            out.push_back("Hata frequency " + format_general(m->freq_mhz) + " MHz outside [150, 1500]");
        if (m->bs_height_m < 30.0 || m->bs_height_m > 200.0)
            out.push_back("Hata BS height " + format_general(m->bs_height_m) + " m outside [30, 200]");
        if (m->rx_height_m < 1.0 || m->rx_height_m > 10.0)
            out.push_back("Hata receiver height " + format_general(m->rx_height_m) + " m outside [1, 10]");
    }
    return out;
}

double path_loss_db(const PathLossModel& model, double distance_km)
{
    if (!(distance_km > 0.0) || !std::isfinite(distance_km))
        throw DomainError("path loss distance must be positive and finite");
    const double d = std::max(distance_km, kMinDistanceKm);
    return std::visit(overloaded{
                          [d](const OneSlopeModel& m) { return one_slope(m, d); },
                          [d](const OkumuraHataRuralModel& m) { return hata_rural(m, d); },
                      },
                      model);
}

double invert_range_km(const PathLossModel& model, double pl_max_db)
{
    if (!std::isfinite(pl_max_db))
        throw DomainError("pl_max must be finite");
    if (pl_max_db < path_loss_db(model, kMinDistanceKm))
        throw DomainError("range below model floor");

    if (const auto* m = std::get_if<OneSlopeModel>(&model))
        return m->d0_km * std::pow(10.0, (pl_max_db - m->pl0_db) / (10.0 * m->exponent));

    double lo = kMinDistanceKm;
    double hi = 1.0;
    while (path_loss_db(model, hi) < pl_max_db) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1.0e5)
            throw DomainError("range inversion did not bracket pl_max");
    }
    while (hi - lo > 1.0e-5) {
        const double mid = 0.5 * (lo + hi);
        if (path_loss_db(model, mid) < pl_max_db)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

std::string describe(const PathLossModel& model)
{
    return std::visit(overloaded{
                          [](const OneSlopeModel& m) {
                              return "one_slope(pl0_db=" + format_general(m.pl0_db) +
                                     ", d0_km=" + format_general(m.d0_km) +
                                     ", exponent=" + format_general(m.exponent) + ")";
                          },
                          [](const OkumuraHataRuralModel& m) {
                              return "okumura_hata_rural(freq_mhz=" + format_general(m.freq_mhz) +
                                     ", bs_height_m=" + format_general(m.bs_height_m) +
                                     ", rx_height_m=" + format_general(m.rx_height_m) +
                                     ", excess_loss_db=" + format_general(m.excess_loss_db) +
                                     ", a(hm)=small/medium city, open-area correction)";
                          },
                      },
                      model);
}

} // namespace tvws

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

#include "tvws/calibration.hpp"

#include "tvws/error.hpp"

#include <cmath>
#include <limits>

namespace tvws {

namespace {

void require_points(std::span<const DistanceLoss> points, std::size_t n)
{
    if (points.size() < n)
        throw InvalidArgument("calibration needs at least " + std::to_string(n) + " points");
    for (const DistanceLoss& p : points)
        if (!(p.distance_km > 0.0) || !std::isfinite(p.pl_db))
            throw DomainError("calibration point has non-positive distance or non-finite loss");
}

} // namespace

double fit_one_slope_intercept(std::span<const DistanceLoss> points, double exponent, double d0_km)
{
    require_points(points, 1);
    double acc = 0.0;
    for (const DistanceLoss& p : points)
        acc += p.pl_db - 10.0 * exponent * std::log10(p.distance_km / d0_km);
    return acc / static_cast<double>(points.size());
}

OneSlopeModel fit_one_slope(std::span<const DistanceLoss> points, double d0_km)
{
    require_points(points, 2);
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const DistanceLoss& p : points) {
        const double x = 10.0 * std::log10(p.distance_km / d0_km);
        sx += x;
        sy += p.pl_db;
        sxx += x * x;
        sxy += x * p.pl_db;
    }
    const double n = static_cast<double>(points.size());
    const double den = n * sxx - sx * sx;
    if (std::abs(den) < 1e-12)
        throw DomainError("calibration points share one distance");
    OneSlopeModel m;
    m.d0_km = d0_km;
    m.exponent = (n * sxy - sx * sy) / den;
    m.pl0_db = (sy - m.exponent * sx) / n;
    return m;
}

double rms_residual_db(const PathLossModel& model, std::span<const DistanceLoss> points)
{
    require_points(points, 1);
    double acc = 0.0;
    for (const DistanceLoss& p : points) {
        const double r = path_loss_db(model, p.distance_km) - p.pl_db;
        acc += r * r;
    }
    return std::sqrt(acc / static_cast<double>(points.size()));
}

std::string to_string(ExponentSelection s)
{
    return s == ExponentSelection::MinResidual ? "min_residual" : "feasible_midpoint";
}

ExponentSelection parse_exponent_selection(const std::string& text)
{
    if (text == "min_residual")
        return ExponentSelection::MinResidual;
    if (text == "feasible_midpoint")
        return ExponentSelection::FeasibleMidpoint;
    throw InvalidArgument("unknown exponent selection '" + text + "'");
}

OneSlopeFit fit_one_slope_constrained(std::span<const DistanceLoss> points, double d0_km, double lo, double hi,
                                      double step, const std::function<bool(const OneSlopeModel&)>& accept,
                                      ExponentSelection selection)
{
    if (!(step > 0.0) || !(lo > 0.0) || hi < lo)
        throw InvalidArgument("exponent scan needs 0 < lo <= hi and a positive step");
    OneSlopeFit fit;
    fit.rms_db = std::numeric_limits<double>::infinity();
    const int n_steps = static_cast<int>(std::floor((hi - lo) / step + 1e-9));
    double first = 0.0, last = 0.0;
    bool any = false;
    for (int i = 0; i <= n_steps; ++i) {
        const double n = lo + step * i;
        OneSlopeModel m{fit_one_slope_intercept(points, n, d0_km), d0_km, n};
        ExponentTrial t{n, m.pl0_db, rms_residual_db(m, points), accept(m)};
        if (t.accepted) {
            first = any ? first : n;
            last = n;
            any = true;
            if (t.rms_db < fit.rms_db) {
                fit.rms_db = t.rms_db;
                fit.model = m;
            }
        }
        fit.trials.push_back(t);
    }
    if (!any)
        throw DomainError("no exponent in the scan satisfies the calibration constraints");
    if (selection == ExponentSelection::FeasibleMidpoint) {
        const double mid = 0.5 * (first + last);
        OneSlopeModel m{fit_one_slope_intercept(points, mid, d0_km), d0_km, mid};
        if (!accept(m)) {
            const ExponentTrial* best = nullptr;
            for (const ExponentTrial& t : fit.trials)
                if (t.accepted && (!best || std::abs(t.exponent - mid) < std::abs(best->exponent - mid)))
                    best = &t;
            m = {best->pl0_db, d0_km, best->exponent};
        }
        fit.model = m;
        fit.rms_db = rms_residual_db(m, points);
    }
    return fit;
}

double fit_hata_excess_loss(const OkumuraHataRuralModel& base, std::span<const HataMarker> markers)
{
    if (markers.empty())
        throw InvalidArgument("excess-loss fit needs at least one marker");
    double acc = 0.0;
    for (const HataMarker& mk : markers) {
        OkumuraHataRuralModel m = base;
        m.freq_mhz = mk.freq_mhz;
        m.excess_loss_db = 0.0;
        acc += mk.pl_db - path_loss_db(m, mk.distance_km);
    }
    return acc / static_cast<double>(markers.size());
}

MacroPowerParams calibrate_macro_power(const MacroCalibrationTarget& t)
{
    if (!(t.per_bs_w > 0.0) || !(t.transmitter_share > 0.0 && t.transmitter_share < 1.0) ||
        !(t.amp_efficiency > 0.0 && t.amp_efficiency <= 1.0) || t.radiated_power_w < 0.0)
        throw InvalidArgument("macro calibration target out of range");
    const double per_tx = t.transmitter_share * t.per_bs_w;
    MacroPowerParams p;
    p.amp_efficiency = t.amp_efficiency;
    p.p_per_tx_overhead_w = per_tx - t.radiated_power_w / t.amp_efficiency;
    p.p_fixed_w = t.per_bs_w - per_tx;
    if (!(p.p_per_tx_overhead_w > 0.0))
        throw DomainError("transmitter share too small for the amplifier draw");
    return p;
}

} // namespace tvws

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

#ifndef TVWS_CALIBRATION_HPP
#define TVWS_CALIBRATION_HPP

#include "tvws/link_budget.hpp"
#include "tvws/power_energy.hpp"
#include "tvws/propagation.hpp"

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace tvws {

struct DistanceLoss {
    double distance_km = 0.0;
    double pl_db = 0.0;
};

// Least-squares intercept for a fixed exponent.
double fit_one_slope_intercept(std::span<const DistanceLoss> points, double exponent, double d0_km);

// Unconstrained two-parameter least squares in dB.
OneSlopeModel fit_one_slope(std::span<const DistanceLoss> points, double d0_km);

double rms_residual_db(const PathLossModel& model, std::span<const DistanceLoss> points);

struct ExponentTrial {
    double exponent = 0.0;
    double pl0_db = 0.0;
    double rms_db = 0.0;
    bool accepted = false;
};

struct OneSlopeFit {
    OneSlopeModel model;
    double rms_db = 0.0;
    std::vector<ExponentTrial> trials;
};

enum class ExponentSelection { MinResidual, FeasibleMidpoint };

std::string to_string(ExponentSelection s);
ExponentSelection parse_exponent_selection(const std::string& text);

// Scans exponents on [lo, hi] in `step` increments and fits the intercept for
// each. MinResidual keeps the lowest-residual admitted model. FeasibleMidpoint
// takes the centre of the admitted span, falling back to the admitted trial
// nearest it when the centre itself is rejected.
OneSlopeFit fit_one_slope_constrained(std::span<const DistanceLoss> points, double d0_km, double lo, double hi,
                                      double step, const std::function<bool(const OneSlopeModel&)>& accept,
                                      ExponentSelection selection = ExponentSelection::MinResidual);

struct HataMarker {
    double freq_mhz = 0.0;
    double pl_db = 0.0;       // budget the range was read at
    double distance_km = 0.0;
};

// Least-squares excess loss against the markers; `base.excess_loss_db` is ignored.
double fit_hata_excess_loss(const OkumuraHataRuralModel& base, std::span<const HataMarker> markers);

struct MacroCalibrationTarget {
    double per_bs_w = 382.47;        // SISO, single sector, full load
    double transmitter_share = 0.095;
    double amp_efficiency = 0.25;
    double radiated_power_w = 4.0;
};

MacroPowerParams calibrate_macro_power(const MacroCalibrationTarget& target);

} // namespace tvws

#endif

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

#ifndef TVWS_PROPAGATION_HPP
#define TVWS_PROPAGATION_HPP

#include <string>
#include <variant>
#include <vector>

namespace tvws {

// PL(d) = pl0 + 10 n log10(d / d0)
struct OneSlopeModel {
    double pl0_db = 100.0;
    double d0_km = 1.0;
    double exponent = 3.0;
};

// Okumura-Hata median loss with the small/medium-city mobile correction and
// the open-area (rural) correction, plus a constant calibration term.
struct OkumuraHataRuralModel {
    double freq_mhz = 600.0;
    double bs_height_m = 30.0;
    double rx_height_m = 3.0;
    double excess_loss_db = 0.0;
};

using PathLossModel = std::variant<OneSlopeModel, OkumuraHataRuralModel>;

// Distances below this are evaluated at the floor.
inline constexpr double kMinDistanceKm = 0.05;

// Hata's nominal validity window.
inline constexpr double kHataMaxDistanceKm = 20.0;

// Throws DomainError for non-finite or non-positive structural parameters
// (n, d0, heights, frequency). Out-of-window Hata parameters are not errors.
void validate(const PathLossModel& model);

// Human-readable notes for parameters outside the model's validity window.
std::vector<std::string> validity_warnings(const PathLossModel& model);

double path_loss_db(const PathLossModel& model, double distance_km);

// Mobile-antenna correction a(h_m) for small/medium cities.
double hata_mobile_correction_db(double freq_mhz, double rx_height_m) noexcept;

// Open-area correction subtracted from the urban median.
double hata_open_area_correction_db(double freq_mhz) noexcept;

// Distance at which path_loss_db reaches pl_max_db. Closed form for the one-slope
// model; bisection to below 1 m for Hata. Throws DomainError("range below model
// floor") when pl_max_db is under the loss at kMinDistanceKm.
double invert_range_km(const PathLossModel& model, double pl_max_db);

std::string describe(const PathLossModel& model);

} // namespace tvws

#endif

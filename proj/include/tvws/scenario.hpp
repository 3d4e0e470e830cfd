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

#ifndef TVWS_SCENARIO_HPP
#define TVWS_SCENARIO_HPP

#include "tvws/geometry.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace tvws {

struct Region {
    std::string name;
    std::vector<Point> outline;   // km, either winding
    double area_km2 = 0.0;        // recomputed from the outline, never trusted
    double resolution_m = 250.0;  // raster step for coverage maps

    bool contains(Point p) const noexcept { return point_in_polygon(outline, p); }
};

// Validates the outline and returns a Region with the computed area. When
// declared_area_km2 is given it must agree with the outline within 0.5 %.
Region make_region(std::string name, std::vector<Point> outline, double resolution_m,
                   double declared_area_km2 = 0.0);

struct CandidateSite {
    std::string id;
    Point position;
    double antenna_height_m = 30.0;
};

// Sites must lie inside the region or within this distance of its outline.
inline constexpr double kMaxSiteOffsetKm = 2.0;

void validate_site(const Region& region, const CandidateSite& site);

// Hexagonal lattice of roughly target_count sites over the region, each site
// displaced by a deterministic jitter of up to jitter_fraction * spacing per
// axis. Sites are kept when they fall inside the region or within margin_km
// of it.
struct SiteLattice {
    int target_count = 1;
    double jitter_fraction = 0.2;
    double margin_km = 0.0;
    std::uint64_t seed = 1;
    double antenna_height_m = 30.0;
};

std::vector<CandidateSite> generate_site_lattice(const Region& region, const SiteLattice& lattice);

struct PopulationSpec {
    int user_count = 0;
    double data_fraction = 1.0;
    double data_bitrate_mbps = 1.0;
    double voice_bitrate_mbps = 0.064;

    // U * (f * B_data + (1 - f) * B_voice)
    double expected_traffic_mbps() const noexcept;
};

void validate_population_spec(const PopulationSpec& spec);

struct User {
    int id = 0;
    Point position;
    double demand_mbps = 0.0;
};

struct UserPopulation {
    std::vector<User> users;
    std::uint64_t seed = 0;
};

// Rejection sampling over the bounding box. Per user: one (x, y) pair per
// attempt until inside, then one variate for the demand class.
UserPopulation generate_population(const Region& region, const PopulationSpec& spec, std::uint64_t seed);

double total_demand(const UserPopulation& population) noexcept;

// `user_id,x_km,y_km,demand_mbps`
void write_population_csv(std::ostream& out, const UserPopulation& population);

} // namespace tvws

#endif

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

#include "tvws/scenario.hpp"

#include "tvws/error.hpp"
#include "tvws/format.hpp"
#include "tvws/rng.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>

namespace tvws {

namespace {

constexpr int kMaxAttemptsPerUser = 100000;

} // namespace

Region make_region(std::string name, std::vector<Point> outline, double resolution_m, double declared_area_km2)
{
    if (outline.size() < 3)
        throw DomainError("region '" + name + "' needs at least three vertices");
    for (const Point& p : outline)
        if (!std::isfinite(p.x) || !std::isfinite(p.y))
            throw DomainError("region '" + name + "' has a non-finite vertex");
    const double area = polygon_area(outline);
    if (!(area > 0.0))
        throw DomainError("region '" + name + "' has zero area");
    if (!polygon_is_simple(outline))
        throw DomainError("region '" + name + "' outline is self-intersecting");
    if (!(resolution_m > 0.0))
        throw DomainError("region '" + name + "' resolution_m must be positive");
    if (declared_area_km2 > 0.0 && std::abs(declared_area_km2 - area) > 0.005 * area) {
        std::ostringstream msg;
        msg << "region '" << name << "' declares " << declared_area_km2 << " km2 but its outline encloses "
            << area << " km2";
        throw DomainError(msg.str());
    }
    Region region;
    region.name = std::move(name);
    region.outline = std::move(outline);
    region.area_km2 = area;
    region.resolution_m = resolution_m;
    return region;
}

void validate_site(const Region& region, const CandidateSite& site)
{
    if (!(site.antenna_height_m > 0.0))
        throw DomainError("site '" + site.id + "' antenna height must be positive");
    if (!region.contains(site.position) && distance_to_outline(region.outline, site.position) > kMaxSiteOffsetKm)
        throw DomainError("site '" + site.id + "' lies more than 2 km outside region '" + region.name + "'");
}

std::vector<CandidateSite> generate_site_lattice(const Region& region, const SiteLattice& lattice)
{
    if (lattice.target_count < 1)
        throw InvalidArgument("site lattice target_count must be at least 1");
    if (lattice.jitter_fraction < 0.0 || lattice.jitter_fraction > 0.5)
        throw InvalidArgument("site lattice jitter_fraction must be in [0, 0.5]");
    if (lattice.margin_km < 0.0 || lattice.margin_km > kMaxSiteOffsetKm)
        throw InvalidArgument("site lattice margin_km must be in [0, 2]");

    const double spacing =
        std::sqrt(2.0 * region.area_km2 / (std::numbers::sqrt3 * static_cast<double>(lattice.target_count)));
    const double row_step = spacing * std::numbers::sqrt3 / 2.0;
    const Point centre = polygon_centroid(region.outline);
    const BoundingBox box = bounding_box(region.outline);
    const double reach = lattice.margin_km + spacing;

    const int row_lo = static_cast<int>(std::floor((box.min.y - reach - centre.y) / row_step));
    const int row_hi = static_cast<int>(std::ceil((box.max.y + reach - centre.y) / row_step));
    const int col_lo = static_cast<int>(std::floor((box.min.x - reach - centre.x) / spacing)) - 1;
    const int col_hi = static_cast<int>(std::ceil((box.max.x + reach - centre.x) / spacing)) + 1;

    std::vector<CandidateSite> sites;
    for (int row = row_lo; row <= row_hi; ++row) {
        const double shift = (row & 1) ? 0.5 : 0.0;
        for (int col = col_lo; col <= col_hi; ++col) {
            const auto key = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(row)) << 32) |
                             static_cast<std::uint32_t>(col);
            Rng rng(mix_seed(lattice.seed ^ mix_seed(key)));
            const double jx = rng.uniform(-1.0, 1.0) * lattice.jitter_fraction * spacing;
            const double jy = rng.uniform(-1.0, 1.0) * lattice.jitter_fraction * spacing;
            const Point p{centre.x + (col + shift) * spacing + jx, centre.y + row * row_step + jy};
            const bool keep = region.contains(p) ||
                              (lattice.margin_km > 0.0 && distance_to_outline(region.outline, p) <= lattice.margin_km);
            if (!keep)
                continue;
            CandidateSite site;
            site.position = p;
            site.antenna_height_m = lattice.antenna_height_m;
            sites.push_back(std::move(site));
        }
    }
    for (std::size_t i = 0; i < sites.size(); ++i)
        sites[i].id = "S" + format_int(static_cast<long long>(i + 1), 3);
    return sites;
}

double PopulationSpec::expected_traffic_mbps() const noexcept
{
    return user_count * (data_fraction * data_bitrate_mbps + (1.0 - data_fraction) * voice_bitrate_mbps);
}

void validate_population_spec(const PopulationSpec& spec)
{
    if (spec.user_count < 0)
        throw DomainError("population user_count must be non-negative");
    if (!(spec.data_fraction >= 0.0 && spec.data_fraction <= 1.0))
        throw DomainError("population data_fraction must be in [0, 1]");
    if (!(spec.data_bitrate_mbps > 0.0) || !std::isfinite(spec.data_bitrate_mbps))
        throw DomainError("population data_bitrate_mbps must be positive");
    if (!(spec.voice_bitrate_mbps > 0.0) || !std::isfinite(spec.voice_bitrate_mbps))
        throw DomainError("population voice_bitrate_mbps must be positive");
}

UserPopulation generate_population(const Region& region, const PopulationSpec& spec, std::uint64_t seed)
{
    validate_population_spec(spec);
    if (!(polygon_area(region.outline) > 0.0))
        throw DomainError("region '" + region.name + "' has zero area");

    const BoundingBox box = bounding_box(region.outline);
    Rng rng(seed);
    UserPopulation population;
    population.seed = seed;
    population.users.reserve(static_cast<std::size_t>(spec.user_count));
    for (int id = 0; id < spec.user_count; ++id) {
        Point p;
        int attempts = 0;
        do {
            if (++attempts > kMaxAttemptsPerUser)
                throw DomainError("rejection sampling failed to place a user inside region '" + region.name + "'");
            p.x = rng.uniform(box.min.x, box.max.x);
            p.y = rng.uniform(box.min.y, box.max.y);
        } while (!region.contains(p));
        const bool data = rng.uniform01() < spec.data_fraction;
        population.users.push_back({id, p, data ? spec.data_bitrate_mbps : spec.voice_bitrate_mbps});
    }
    return population;
}

double total_demand(const UserPopulation& population) noexcept
{
    double sum = 0.0;
    for (const User& u : population.users)
        sum += u.demand_mbps;
    return sum;
}

void write_population_csv(std::ostream& out, const UserPopulation& population)
{
    out << "user_id,x_km,y_km,demand_mbps\n";
    for (const User& u : population.users)
        out << u.id << ',' << format_fixed(u.position.x, 4) << ',' << format_fixed(u.position.y, 4) << ','
            << format_fixed(u.demand_mbps, 3) << '\n';
}

} // namespace tvws

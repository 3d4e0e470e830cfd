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

#ifndef TVWS_GEOMETRY_HPP
#define TVWS_GEOMETRY_HPP

#include <span>
#include <vector>

namespace tvws {

// Planar point, kilometres.
struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

double distance_km(Point a, Point b) noexcept;

struct BoundingBox {
    Point min;
    Point max;
};

// Shoelace area, always non-negative.
double polygon_area(std::span<const Point> outline) noexcept;

Point polygon_centroid(std::span<const Point> outline) noexcept;

BoundingBox bounding_box(std::span<const Point> outline) noexcept;

// Even-odd ray casting. Points exactly on an edge may land on either side.
bool point_in_polygon(std::span<const Point> outline, Point p) noexcept;

// No two non-adjacent edges intersect and no edge is degenerate.
bool polygon_is_simple(std::span<const Point> outline) noexcept;

// Shortest distance from p to the polygon boundary.
double distance_to_outline(std::span<const Point> outline, Point p) noexcept;

} // namespace tvws

#endif

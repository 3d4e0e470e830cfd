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

#include "tvws/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tvws {

double distance_km(Point a, Point b) noexcept
{
    return std::hypot(a.x - b.x, a.y - b.y);
}

double polygon_area(std::span<const Point> outline) noexcept
{
    const std::size_t n = outline.size();
    if (n < 3)
        return 0.0;
    double twice = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = outline[i];
        const Point& b = outline[(i + 1) % n];
        twice += a.x * b.y - b.x * a.y;
    }
    return std::abs(twice) * 0.5;
}

Point polygon_centroid(std::span<const Point> outline) noexcept
{
    const std::size_t n = outline.size();
    double twice = 0.0, cx = 0.0, cy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = outline[i];
        const Point& b = outline[(i + 1) % n];
        const double cross = a.x * b.y - b.x * a.y;
        twice += cross;
        cx += (a.x + b.x) * cross;
        cy += (a.y + b.y) * cross;
    }
    if (twice == 0.0)
        return n ? outline[0] : Point{};
    return {cx / (3.0 * twice), cy / (3.0 * twice)};
}

BoundingBox bounding_box(std::span<const Point> outline) noexcept
{
    BoundingBox box{{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()},
                    {-std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()}};
    for (const Point& p : outline) {
        box.min.x = std::min(box.min.x, p.x);
        box.min.y = std::min(box.min.y, p.y);
        box.max.x = std::max(box.max.x, p.x);
        box.max.y = std::max(box.max.y, p.y);
    }
    return box;
}

bool point_in_polygon(std::span<const Point> outline, Point p) noexcept
{
    bool inside = false;
    const std::size_t n = outline.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const Point& a = outline[i];
        const Point& b = outline[j];
        if ((a.y > p.y) != (b.y > p.y)) {
            const double x_cross = (b.x - a.x) * (p.y - a.y) / (b.y - a.y) + a.x;
            if (p.x < x_cross)
                inside = !inside;
        }
    }
    return inside;
}

namespace {

double cross(Point o, Point a, Point b) noexcept
{
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool on_segment(Point a, Point b, Point p) noexcept
{
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
           p.y <= std::max(a.y, b.y);
}

bool segments_intersect(Point p1, Point p2, Point q1, Point q2) noexcept
{
    const double d1 = cross(q1, q2, p1);
    const double d2 = cross(q1, q2, p2);
    const double d3 = cross(p1, p2, q1);
    const double d4 = cross(p1, p2, q2);
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
        return true;
    return (d1 == 0 && on_segment(q1, q2, p1)) || (d2 == 0 && on_segment(q1, q2, p2)) ||
           (d3 == 0 && on_segment(p1, p2, q1)) || (d4 == 0 && on_segment(p1, p2, q2));
}

double point_segment_distance(Point p, Point a, Point b) noexcept
{
    const double dx = b.x - a.x, dy = b.y - a.y;
    const double len2 = dx * dx + dy * dy;
    double t = len2 > 0.0 ? ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return distance_km(p, {a.x + t * dx, a.y + t * dy});
}

} // namespace

bool polygon_is_simple(std::span<const Point> outline) noexcept
{
    const std::size_t n = outline.size();
    if (n < 3)
        return false;
    for (std::size_t i = 0; i < n; ++i)
        if (outline[i] == outline[(i + 1) % n])
            return false;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
            if (adjacent)
                continue;
            if (segments_intersect(outline[i], outline[(i + 1) % n], outline[j], outline[(j + 1) % n]))
                return false;
        }
    }
    return true;
}

double distance_to_outline(std::span<const Point> outline, Point p) noexcept
{
    double best = std::numeric_limits<double>::infinity();
    const std::size_t n = outline.size();
    for (std::size_t i = 0; i < n; ++i)
        best = std::min(best, point_segment_distance(p, outline[i], outline[(i + 1) % n]));
    return best;
}

} // namespace tvws

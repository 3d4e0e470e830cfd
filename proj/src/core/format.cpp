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

#include "tvws/format.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace tvws {

std::string format_fixed(double value, int decimals)
{
    if (std::isnan(value))
        return "nan";
    if (value == 0.0)
        value = 0.0;  // drop the sign of -0
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::fixed, decimals);
    std::string s(buf.data(), end);
    if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos)
        s.erase(0, 1);
    return s;
}

std::string format_general(double value)
{
    if (std::isnan(value))
        return "nan";
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), end);
}

std::string format_int(long long value, int min_width)
{
    std::string s = std::to_string(value < 0 ? -value : value);
    if (static_cast<int>(s.size()) < min_width)
        s.insert(0, static_cast<std::size_t>(min_width) - s.size(), '0');
    return value < 0 ? "-" + s : s;
}

} // namespace tvws

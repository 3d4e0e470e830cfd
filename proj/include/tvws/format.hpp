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

#ifndef TVWS_FORMAT_HPP
#define TVWS_FORMAT_HPP

#include <string>

namespace tvws {

// Locale-independent number formatting for CSV/JSON/SVG output.
std::string format_fixed(double value, int decimals);
std::string format_general(double value);   // shortest round-trip form
std::string format_int(long long value, int min_width = 0);

} // namespace tvws

#endif

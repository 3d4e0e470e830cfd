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

#include "tvws/error.hpp"

namespace tvws {

namespace {

std::string summarize(const std::string& source, const std::vector<FieldError>& fields)
{
    std::string msg = source + ": " + std::to_string(fields.size()) + " field error(s)";
    for (const FieldError& f : fields)
        msg += "; " + f.path + ": " + f.message;
    return msg;
}

} // namespace

ConfigError::ConfigError(std::string source, std::vector<FieldError> fields)
    : Error(ErrorKind::Config, summarize(source, fields)), source_(std::move(source)), fields_(std::move(fields))
{
}

} // namespace tvws

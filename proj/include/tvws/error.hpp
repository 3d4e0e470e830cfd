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

#ifndef TVWS_ERROR_HPP
#define TVWS_ERROR_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace tvws {

// Error kinds map one-to-one onto the status codes of the C API.
enum class ErrorKind {
    InvalidArgument,
    Domain,
    Config,
    Io,
    Planning,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(ErrorKind::Domain, what) {}
};

class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& what) : Error(ErrorKind::InvalidArgument, what) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(ErrorKind::Io, what) {}
};

class PlanningError : public Error {
public:
    explicit PlanningError(const std::string& what) : Error(ErrorKind::Planning, what) {}
};

struct FieldError {
    std::string path;     // JSON pointer-ish path, e.g. "population.user_count"
    std::string message;
};

// Raised by the loaders with every schema violation found in one file.
class ConfigError : public Error {
public:
    ConfigError(std::string source, std::vector<FieldError> fields);

    const std::string& source() const noexcept { return source_; }
    const std::vector<FieldError>& fields() const noexcept { return fields_; }

private:
    std::string source_;
    std::vector<FieldError> fields_;
};

} // namespace tvws

#endif

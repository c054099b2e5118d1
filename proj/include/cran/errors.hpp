// SPDX-License-Identifier: Apache-2.0
//
// cran-noma: rate analysis for eMBB/URLLC coexistence over analog-fronthaul C-RAN
// Copyright (C) 2026 The cran-noma authors
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
// ------------------------------------------------------------------------

#ifndef CRAN_ERRORS_HPP
#define CRAN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cran
{

// Matrix or vector sizes that the model does not define (e.g. M < 3).
class dimension_error : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// Scalar argument outside its admissible range.
class domain_error : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// Factorization or solver failure.
class numerical_error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Malformed sweep configuration. Carries the 1-based line of the offending
// key in the source document when known (0 otherwise).
class config_error : public std::invalid_argument
{
public:
    explicit config_error(const std::string &msg, std::size_t line = 0)
        : std::invalid_argument(line ? "line " + std::to_string(line) + ": " + msg : msg), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class io_error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

} // namespace cran

#endif

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

#ifndef CRAN_QFUNC_HPP
#define CRAN_QFUNC_HPP

#include <cmath>
#include <numbers>

#include "errors.hpp"

namespace cran
{

// Standard normal tail probability Q(x) = P[N(0,1) > x].
inline double q_function(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

inline double normal_pdf(double x) { return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi); }

// Inverse of Q on (0, 1). Safeguarded Newton: every iterate stays inside a
// bracket that is shrunk by bisection whenever a Newton step would leave it.
inline double q_function_inverse(double p)
{
    if (!(p > 0.0 && p < 1.0))
        throw domain_error("q_function_inverse: p must lie in (0, 1)");
    if (p == 0.5)
        return 0.0;
    if (p > 0.5)
        return -q_function_inverse(1.0 - p);

    // Q(x) = p with p < 1/2 has x in (0, 40): Q(40) underflows below any double p.
    double lo = 0.0, hi = 40.0;
    double x = std::sqrt(-2.0 * std::log(p));
    x = std::min(std::max(x - 0.5, lo), hi);
    for (int it = 0; it < 200; ++it)
    {
        const double f = q_function(x) - p; // decreasing in x
        if (f > 0.0)
            lo = x;
        else
            hi = x;
        const double d = normal_pdf(x);
        double next = d > 0.0 ? x + f / d : 0.5 * (lo + hi);
        if (!(next > lo && next < hi))
            next = 0.5 * (lo + hi);
        if (std::abs(next - x) <= 1e-15 * std::max(1.0, x) || hi - lo <= 1e-15 * std::max(1.0, x))
            return next;
        x = next;
    }
    return x;
}

} // namespace cran

#endif

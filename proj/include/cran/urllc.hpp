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

#ifndef CRAN_URLLC_HPP
#define CRAN_URLLC_HPP

#include <algorithm>
#include <cmath>
#include <vector>

#include "params.hpp"
#include "qfunc.hpp"

namespace cran
{

struct UrllcResult
{
    double rate = 0.0;          // bits per symbol
    double eps_U_D = 0.0;       // decoding error target
    double blockage_prob = 0.0; // OMA only
    double sinr = 0.0;
    double dispersion = 0.0;    // sinr / (1 + sinr)
    bool feasible = false;
};

struct BlockageBudget
{
    double blockage_prob = 0.0;
    double weight = 1.0;
    double eps_U_D = 0.0;
    bool feasible = false;
};

// pmf of Binomial(n, q) for k = 0..n, built by the multiplicative recurrence.
inline std::vector<double> binomial_pmf(int n, double q)
{
    std::vector<double> pmf(std::size_t(n) + 1, 0.0);
    if (q <= 0.0)
    {
        pmf[0] = 1.0;
        return pmf;
    }
    if (q >= 1.0)
    {
        pmf[std::size_t(n)] = 1.0;
        return pmf;
    }
    // log-domain start avoids underflow of (1-q)^n for large n
    double logp = double(n) * std::log1p(-q);
    const double lratio = std::log(q) - std::log1p(-q);
    for (int k = 0; k <= n; ++k)
    {
        pmf[std::size_t(k)] = std::exp(logp);
        logp += std::log(double(n - k)) - std::log(double(k + 1)) + lratio;
    }
    return pmf;
}

/// OMA error budget. With N ~ Bin(L_U - 1, q) extra arrivals between two
/// transmission opportunities, a packet is blocked with probability
/// sum p(n) n/(n+1) and transmitted with weight sum p(n)/(n+1). The decoding
/// target solves blockage + weight * eps_D = eps_U exactly.
inline BlockageBudget oma_blockage_and_target(double q, int L_U, double eps_U)
{
    if (L_U < 2)
        throw domain_error("oma_blockage_and_target: L_U must be >= 2");
    if (!(q >= 0.0 && q <= 1.0))
        throw domain_error("oma_blockage_and_target: q must lie in [0, 1]");
    if (!(eps_U > 0.0 && eps_U < 1.0))
        throw domain_error("oma_blockage_and_target: eps_U must lie in (0, 1)");

    const auto pmf = binomial_pmf(L_U - 1, q);
    BlockageBudget b;
    b.blockage_prob = 0.0;
    b.weight = 0.0;
    for (std::size_t n = 0; n < pmf.size(); ++n)
    {
        b.blockage_prob += pmf[n] * double(n) / double(n + 1);
        b.weight += pmf[n] / double(n + 1);
    }
    b.eps_U_D = (eps_U - b.blockage_prob) / b.weight;
    b.feasible = b.eps_U_D > 0.0 && b.eps_U_D < 1.0;
    return b;
}

/// Normal approximation log2(1+s) - sqrt(V/n) Q^-1(eps), clamped at zero.
inline double finite_blocklength_rate(double sinr, long long n_F, double eps_D)
{
    if (!(sinr > 0.0) || !std::isfinite(sinr))
        throw domain_error("finite_blocklength_rate: sinr must be positive");
    if (n_F < 1)
        throw domain_error("finite_blocklength_rate: n_F must be >= 1");
    if (!(eps_D > 0.0 && eps_D < 1.0))
        throw domain_error("finite_blocklength_rate: eps_D must lie in (0, 1)");
    const double V = sinr / (1.0 + sinr);
    const double r = std::log2(1.0 + sinr) - std::sqrt(V / double(n_F)) * q_function_inverse(eps_D);
    return std::max(0.0, r);
}

/// URLLC rate. OMA sees the URLLC user alone at SNR beta^2 P_U but must absorb
/// blockage in its error budget; NOMA transmits immediately against the full
/// eMBB interference of the own cell and both neighbours.
inline UrllcResult urllc_rate(const SystemParams &p, AccessMode mode)
{
    validate(p, mode);
    UrllcResult r;
    if (mode == AccessMode::OMA)
    {
        const auto b = oma_blockage_and_target(p.q, p.L_U, p.eps_U);
        r.sinr = p.beta_sq * p.P_U;
        r.blockage_prob = b.blockage_prob;
        r.eps_U_D = std::clamp(b.eps_U_D, 0.0, 1.0);
        r.feasible = b.feasible;
    }
    else
    {
        r.sinr = p.beta_sq * p.P_U / (1.0 + (1.0 + 2.0 * p.alpha * p.alpha) * p.P_B);
        r.blockage_prob = 0.0;
        r.eps_U_D = p.eps_U;
        r.feasible = true;
    }
    r.dispersion = r.sinr / (1.0 + r.sinr);
    if (r.feasible && r.sinr > 0.0)
        r.rate = finite_blocklength_rate(r.sinr, p.n_F, r.eps_U_D);
    if (r.rate <= 0.0)
    {
        r.rate = 0.0;
        r.feasible = false;
    }
    return r;
}

} // namespace cran

#endif

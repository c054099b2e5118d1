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

#include <catch_amalgamated.hpp>

#include <cmath>

#include "cran/urllc.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace
{

// Independent inverse: bisection on erfc, no Newton, no shared code.
// The upper half is mirrored so erfc is never evaluated close to 2.
double qinv_bisect(double p)
{
    if (p > 0.5)
        return -qinv_bisect(1.0 - p);
    double lo = -40.0, hi = 40.0;
    for (int i = 0; i < 200; ++i)
    {
        const double mid = 0.5 * (lo + hi);
        if (0.5 * std::erfc(mid / std::sqrt(2.0)) > p)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

// Enumerate every arrival pattern of the other L_U - 1 slots; the tagged
// packet wins the single opportunity with probability 1/(n+1).
std::pair<double, double> blockage_brute(double q, int L)
{
    double blocked = 0.0, weight = 0.0;
    const int others = L - 1;
    for (unsigned mask = 0; mask < (1u << others); ++mask)
    {
        int n = 0;
        double pr = 1.0;
        for (int i = 0; i < others; ++i)
        {
            const bool arr = (mask >> i) & 1u;
            n += arr;
            pr *= arr ? q : 1.0 - q;
        }
        blocked += pr * (1.0 - 1.0 / (n + 1));
        weight += pr / (n + 1);
    }
    return {blocked, weight};
}

} // namespace

TEST_CASE("Q-function inverse")
{
    CHECK_THAT(cran::q_function_inverse(1e-3), WithinRel(3.090232306167813541540, 1e-13));
    CHECK_THAT(cran::q_function_inverse(5.00250125062531e-4), WithinRel(3.290386022218208, 1e-12));
    CHECK(cran::q_function_inverse(0.5) == Catch::Approx(0.0).margin(1e-15));

    for (double p : {1e-300, 1e-100, 1e-20, 1e-9, 1e-5, 0.01, 0.2, 0.49, 0.51, 0.8, 0.999, 1.0 - 1e-9})
    {
        const double x = cran::q_function_inverse(p);
        CHECK_THAT(x, WithinAbs(qinv_bisect(p), 1e-10 * std::max(1.0, std::abs(x))));
        CHECK_THAT(cran::q_function(x), WithinRel(p, 1e-10));
    }
    CHECK_THAT(cran::q_function_inverse(0.3), WithinAbs(-cran::q_function_inverse(0.7), 1e-13));

    CHECK_THROWS_AS(cran::q_function_inverse(0.0), cran::domain_error);
    CHECK_THROWS_AS(cran::q_function_inverse(1.0), cran::domain_error);
    CHECK_THROWS_AS(cran::q_function_inverse(NAN), cran::domain_error);
}

TEST_CASE("Binomial pmf")
{
    for (int n : {0, 1, 5, 30})
        for (double q : {0.0, 1e-3, 0.3, 1.0})
        {
            const auto pmf = cran::binomial_pmf(n, q);
            REQUIRE(pmf.size() == std::size_t(n) + 1);
            double s = 0.0, m = 0.0;
            for (std::size_t k = 0; k < pmf.size(); ++k)
                s += pmf[k], m += double(k) * pmf[k];
            CHECK_THAT(s, WithinAbs(1.0, 1e-12));
            CHECK_THAT(m, WithinAbs(n * q, 1e-11));
        }
}

TEST_CASE("OMA blockage budget - examples")
{
    auto b = cran::oma_blockage_and_target(1e-3, 2, 1e-3);
    CHECK_THAT(b.blockage_prob, WithinRel(5e-4, 1e-13));
    CHECK_THAT(b.weight, WithinRel(0.9995, 1e-13));
    CHECK_THAT(b.eps_U_D, WithinRel(5.00250125062531e-4, 1e-12));
    CHECK(b.feasible);

    b = cran::oma_blockage_and_target(1e-3, 3, 1e-3);
    CHECK_THAT(b.blockage_prob, WithinRel(9.99666666666667e-4, 1e-12));
    CHECK_THAT(b.weight, WithinRel(0.999000333333333, 1e-12));
    CHECK_THAT(b.eps_U_D, WithinRel(3.33666889000037e-7, 1e-7));
    CHECK(b.feasible);

    b = cran::oma_blockage_and_target(1e-3, 4, 1e-3);
    CHECK_THAT(b.blockage_prob, WithinRel(1.4990002500e-3, 1e-9));
    CHECK(b.eps_U_D < 0.0);
    CHECK_FALSE(b.feasible);

    b = cran::oma_blockage_and_target(0.0, 5, 1e-3);
    CHECK(b.blockage_prob == 0.0);
    CHECK(b.eps_U_D == 1e-3);

    CHECK_THROWS_AS(cran::oma_blockage_and_target(0.1, 1, 1e-3), cran::domain_error);
    CHECK_THROWS_AS(cran::oma_blockage_and_target(1.1, 2, 1e-3), cran::domain_error);
}

TEST_CASE("OMA blockage budget - matches arrival-pattern enumeration")
{
    for (int L = 2; L <= 12; ++L)
        for (double q : {1e-4, 1e-3, 0.05, 0.3, 0.7, 1.0})
        {
            const auto [bl, w] = blockage_brute(q, L);
            const auto b = cran::oma_blockage_and_target(q, L, 0.5);
            CHECK_THAT(b.blockage_prob, WithinAbs(bl, 1e-13));
            CHECK_THAT(b.weight, WithinAbs(w, 1e-13));
            CHECK_THAT(b.blockage_prob + b.weight, WithinAbs(1.0, 1e-13));
        }
}

TEST_CASE("Finite-blocklength rate")
{
    CHECK_THAT(cran::finite_blocklength_rate(10.0, 60, 5.0025e-4), WithinRel(3.0544130886068485, 1e-12));
    CHECK_THAT(cran::finite_blocklength_rate(10.0, 1'000'000'000LL, 1e-3), WithinAbs(3.4594316186372973, 1e-4));
    CHECK(cran::finite_blocklength_rate(1e-3, 10, 1e-5) == 0.0); // clamped

    double prev = 0.0;
    for (long long n : {10LL, 60LL, 500LL, 100000LL})
    {
        const double r = cran::finite_blocklength_rate(3.0, n, 1e-3);
        CHECK(r > prev);
        CHECK(r < 2.0);
        prev = r;
    }
    CHECK_THROWS_AS(cran::finite_blocklength_rate(0.0, 60, 1e-3), cran::domain_error);
    CHECK_THROWS_AS(cran::finite_blocklength_rate(1.0, 0, 1e-3), cran::domain_error);
    CHECK_THROWS_AS(cran::finite_blocklength_rate(1.0, 60, 0.0), cran::domain_error);
}

TEST_CASE("URLLC rate - defaults")
{
    cran::SystemParams p; // P_U = 10 dB, P_B = 7 dB, alpha^2 = 0.2, q = eps_U = 1e-3, n_F = 60, L_U = 2
    p.P_U = 10.0;
    const auto oma = cran::urllc_rate(p, cran::AccessMode::OMA);
    CHECK_THAT(oma.rate, WithinRel(3.054413097264902186, 1e-12));
    CHECK_THAT(oma.rate, WithinAbs(3.054, 1e-3));
    CHECK_THAT(oma.eps_U_D, WithinRel(5.00250125062531e-4, 1e-12));
    CHECK(oma.feasible);

    const auto noma = cran::urllc_rate(p, cran::AccessMode::NOMA);
    CHECK_THAT(noma.sinr, WithinRel(1.247408311085745133, 1e-13));
    CHECK_THAT(noma.rate, WithinRel(0.87104171175597192, 1e-12));
    CHECK_THAT(noma.rate, WithinAbs(0.871, 1e-3));
    CHECK(noma.eps_U_D == p.eps_U);

    p.L_U = 3;
    CHECK_THAT(cran::urllc_rate(p, cran::AccessMode::OMA).rate, WithinRel(2.847588531403491929, 1e-10));
    p.L_U = 4;
    const auto inf = cran::urllc_rate(p, cran::AccessMode::OMA);
    CHECK_FALSE(inf.feasible);
    CHECK(inf.rate == 0.0);
}

TEST_CASE("URLLC rate - invariants")
{
    cran::SystemParams p;
    p.P_U = 10.0;
    const double base = cran::urllc_rate(p, cran::AccessMode::NOMA).rate;
    for (double q : {0.0, 1e-4, 0.1, 0.5, 1.0})
    {
        p.q = q;
        CHECK(cran::urllc_rate(p, cran::AccessMode::NOMA).rate == base);
    }

    // OMA rate non-increasing in q and in L_U while feasible
    p = cran::SystemParams{};
    p.P_U = 10.0;
    for (int L = 2; L <= 3; ++L)
    {
        p.L_U = L;
        double prev = std::numeric_limits<double>::infinity();
        for (double q : {0.0, 1e-5, 1e-4, 5e-4})
        {
            p.q = q;
            const double r = cran::urllc_rate(p, cran::AccessMode::OMA).rate;
            CHECK(r <= prev);
            prev = r;
        }
    }

    // NOMA never beats the interference-free link
    p = cran::SystemParams{};
    p.P_U = 10.0;
    p.q = 0.0;
    CHECK(cran::urllc_rate(p, cran::AccessMode::NOMA).rate < cran::urllc_rate(p, cran::AccessMode::OMA).rate);

    p.P_U = 0.0;
    const auto z = cran::urllc_rate(p, cran::AccessMode::NOMA);
    CHECK(z.rate == 0.0);
    CHECK_FALSE(z.feasible);
}

TEST_CASE("URLLC rate - feasibility boundary")
{
    cran::SystemParams p;
    p.P_U = 10.0;
    for (int L = 2; L <= 3; ++L)
    {
        p.L_U = L;
        const auto r = cran::urllc_rate(p, cran::AccessMode::OMA);
        CHECK(r.feasible);
        CHECK(r.rate > 0.0);
    }
    for (int L = 4; L <= 10; ++L)
    {
        p.L_U = L;
        const auto r = cran::urllc_rate(p, cran::AccessMode::OMA);
        CHECK_FALSE(r.feasible);
        CHECK(r.rate == 0.0);
    }
}

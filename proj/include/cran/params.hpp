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

#ifndef CRAN_PARAMS_HPP
#define CRAN_PARAMS_HPP

#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>

#include "errors.hpp"

namespace cran
{

enum class AccessMode
{
    OMA,
    NOMA
};

inline const char *to_string(AccessMode m) { return m == AccessMode::OMA ? "OMA" : "NOMA"; }

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

// Exact non-negative rational. Stored in lowest terms with den > 0.
class Rational
{
public:
    constexpr Rational() = default;
    Rational(std::int64_t num, std::int64_t den)
    {
        if (den == 0)
            throw domain_error("Rational: zero denominator");
        if (den < 0)
            num = -num, den = -den;
        const auto g = std::gcd(num < 0 ? -num : num, den);
        num_ = num / (g ? g : 1);
        den_ = den / (g ? g : 1);
    }

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }
    double value() const noexcept { return double(num_) / double(den_); }
    bool is_integer() const noexcept { return den_ == 1; }

    Rational operator*(std::int64_t k) const { return Rational(num_ * k, den_); }
    Rational reciprocal() const { return Rational(den_, num_); }
    friend bool operator==(const Rational &, const Rational &) = default;

    std::string str() const
    {
        return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
    }

    // Accepts "1/4", "1", "0.25" (decimals must be exact reciprocals of small integers).
    static Rational parse(const std::string &s)
    {
        const auto slash = s.find('/');
        try
        {
            if (slash != std::string::npos)
                return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
            if (s.find('.') == std::string::npos)
                return Rational(std::stoll(s), 1);
            return from_double(std::stod(s));
        }
        catch (const std::logic_error &)
        {
            throw domain_error("cannot parse rational '" + s + "'");
        }
    }

    static Rational from_double(double x, std::int64_t max_den = 1024)
    {
        for (std::int64_t d = 1; d <= max_den; ++d)
        {
            const double n = std::round(x * double(d));
            if (std::abs(n / double(d) - x) < 1e-12)
                return Rational(std::int64_t(n), d);
        }
        throw domain_error("value " + std::to_string(x) + " is not a small rational");
    }

private:
    std::int64_t num_ = 1;
    std::int64_t den_ = 1;
};

// All scalar model parameters. Powers are linear; amplitudes (alpha, gamma, rho)
// are stored as amplitudes, not squared.
struct SystemParams
{
    int M = 6;          // cells / edge nodes
    int n_F = 60;       // radio frequency channels per minislot
    int n_T = 100;      // minislots per frame; not used by the rate formulas
    int l_S = 4;        // twisted pairs per cable
    Rational mu{1, 1};  // normalized cable bandwidth l_F / n_F
    double alpha = std::sqrt(0.2);
    double beta_sq = 1.0;
    double gamma = std::sqrt(0.5);
    double P_B = db_to_linear(7.0);
    double P_U = db_to_linear(10.0);
    double P_c = db_to_linear(7.0);
    double q = 1e-3;
    double eps_U = 1e-3;
    int L_U = 2;
    double rho = 0.0;

    // Bandwidth amplification factor mu * l_S.
    int eta() const { return int((mu * l_S).num() / (mu * l_S).den()); }
    // Number of sub-vectors the radio band is split into, 1/mu.
    int segments() const { return int(mu.den() / mu.num()); }
    // Frequency channels per pair, mu * n_F.
    int l_F() const { return int((mu * n_F).num() / (mu * n_F).den()); }
};

// Throws on any violated invariant. OMA additionally requires L_U >= 2.
inline void validate(const SystemParams &p)
{
    if (p.M < 3)
        throw dimension_error("M must be >= 3 (got " + std::to_string(p.M) + ")");
    if (p.n_F < 1 || p.n_T < 1 || p.l_S < 1)
        throw dimension_error("n_F, n_T and l_S must be positive");
    if (p.mu.num() <= 0 || p.mu.value() > 1.0)
        throw domain_error("mu must lie in (0, 1] (got " + p.mu.str() + ")");
    if (!p.mu.reciprocal().is_integer())
        throw domain_error("1/mu must be an integer (mu = " + p.mu.str() + ")");
    const Rational eta = p.mu * p.l_S;
    if (!eta.is_integer() || eta.num() < 1)
        throw domain_error("eta = mu*l_S must be an integer >= 1 (mu = " + p.mu.str() +
                           ", l_S = " + std::to_string(p.l_S) + ")");
    const Rational lF = p.mu * p.n_F;
    if (!lF.is_integer() || lF.num() < 1)
        throw domain_error("l_F = mu*n_F must be a positive integer");
    if (!(p.alpha >= 0.0 && p.alpha <= 1.0))
        throw domain_error("alpha must lie in [0, 1]");
    if (!(p.beta_sq >= 0.0) || !std::isfinite(p.beta_sq))
        throw domain_error("beta_sq must be finite and non-negative");
    if (!(p.gamma >= 0.0) || !std::isfinite(p.gamma))
        throw domain_error("gamma must be finite and non-negative");
    if (!(p.P_B >= 0.0 && std::isfinite(p.P_B)) || !(p.P_U >= 0.0 && std::isfinite(p.P_U)))
        throw domain_error("P_B and P_U must be finite and non-negative");
    if (!(p.P_c > 0.0 && std::isfinite(p.P_c)))
        throw domain_error("P_c must be finite and positive");
    if (!(p.q >= 0.0 && p.q <= 1.0))
        throw domain_error("q must lie in [0, 1]");
    if (!(p.eps_U > 0.0 && p.eps_U < 1.0))
        throw domain_error("eps_U must lie in (0, 1)");
    if (p.L_U < 1)
        throw domain_error("L_U must be >= 1");
    if (!(p.rho >= 0.0 && p.rho <= 1.0))
        throw domain_error("rho must lie in [0, 1]");
}

inline void validate(const SystemParams &p, AccessMode mode)
{
    validate(p);
    if (mode == AccessMode::OMA && p.L_U < 2)
        throw domain_error("OMA requires L_U >= 2 (delta = (1 - 1/L_U)^-1 diverges at L_U = 1)");
}

} // namespace cran

#endif

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

#ifndef CRAN_CHANNEL_HPP
#define CRAN_CHANNEL_HPP

#include <cstdio>
#include <ostream>
#include <string>

#include "linalg.hpp"
#include "params.hpp"

namespace cran
{

/// Circulant Wyner radio channel, first column [1, alpha, 0, ..., 0, alpha]^T.
/// Cell k hears its own eMBB user with unit gain and both neighbours with
/// gain alpha; indices wrap around.
inline Matrix build_radio_channel(int M, double alpha)
{
    if (M < 3)
        throw dimension_error("radio channel needs M >= 3 (got " + std::to_string(M) + ")");
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw domain_error("alpha must lie in [0, 1]");
    Matrix h = Matrix::Zero(M, M);
    for (int i = 0; i < M; ++i)
    {
        h(i, i) = 1.0;
        h(i, (i + 1) % M) = alpha;
        h(i, (i + M - 1) % M) = alpha;
    }
    return h;
}

/// Cable channel across l_S pairs: unit direct gain, uniform crosstalk gamma.
inline Matrix build_fronthaul_channel(double gamma, int l_S)
{
    if (l_S < 1)
        throw dimension_error("l_S must be positive");
    if (!(gamma >= 0.0) || !std::isfinite(gamma))
        throw domain_error("gamma must be finite and non-negative");
    return gamma * ones(l_S, l_S) + (1.0 - gamma) * Matrix::Identity(l_S, l_S);
}

/// Equivalent post-combining cable channel, (1/mu) x (1/mu):
/// gamma*eta * 11^T + (1 - gamma) I.
inline Matrix build_equivalent_fronthaul(double gamma, int l_S, Rational mu)
{
    if (l_S < 1)
        throw dimension_error("l_S must be positive");
    if (!(gamma >= 0.0) || !std::isfinite(gamma))
        throw domain_error("gamma must be finite and non-negative");
    if (mu.num() <= 0 || mu.value() > 1.0 || !mu.reciprocal().is_integer())
        throw domain_error("1/mu must be a positive integer (mu = " + mu.str() + ")");
    const Rational eta = mu * l_S;
    if (!eta.is_integer() || eta.num() < 1)
        throw domain_error("eta = mu*l_S must be an integer >= 1");
    const auto n = Eigen::Index(mu.den() / mu.num());
    return gamma * double(eta.num()) * ones(n, n) + (1.0 - gamma) * Matrix::Identity(n, n);
}

inline double delta_factor(const SystemParams &p, AccessMode mode)
{
    if (mode == AccessMode::NOMA)
        return 1.0;
    if (p.L_U < 2)
        throw domain_error("OMA requires L_U >= 2");
    return 1.0 / (1.0 - 1.0 / double(p.L_U));
}

/// Squared cable power scaling: P_c / (delta * P_B * (1 + 2 alpha^2) + 1).
inline double compute_lambda_sq(const SystemParams &p, AccessMode mode)
{
    const double delta = delta_factor(p, mode);
    return p.P_c / (delta * p.P_B * (1.0 + 2.0 * p.alpha * p.alpha) + 1.0);
}

/// Per-entry variance of the cable noise after combining and power scaling, 1/(eta lambda^2).
inline double effective_cable_noise_variance(const SystemParams &p, AccessMode mode)
{
    validate(p, mode);
    return 1.0 / (double(p.eta()) * compute_lambda_sq(p, mode));
}

struct ChannelSet
{
    Matrix H;
    Matrix H_c;
    Matrix H_c_eta;
    double lambda_sq = 1.0;
    AccessMode mode = AccessMode::NOMA;
};

inline ChannelSet make_channel_set(const SystemParams &p, AccessMode mode)
{
    validate(p, mode);
    return ChannelSet{build_radio_channel(p.M, p.alpha), build_fronthaul_channel(p.gamma, p.l_S),
                      build_equivalent_fronthaul(p.gamma, p.l_S, p.mu), compute_lambda_sq(p, mode), mode};
}

namespace detail
{
inline void dump_matrix(std::ostream &os, const char *name, const Matrix &m)
{
    os << name << " " << m.rows() << "x" << m.cols() << "\n";
    char buf[32];
    for (Eigen::Index i = 0; i < m.rows(); ++i)
    {
        for (Eigen::Index j = 0; j < m.cols(); ++j)
        {
            std::snprintf(buf, sizeof buf, "%.12g", m(i, j));
            os << (j ? " " : "") << buf;
        }
        os << "\n";
    }
}
} // namespace detail

// Debug dump: row-major, 12 significant digits.
inline void dump(std::ostream &os, const ChannelSet &cs)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", cs.lambda_sq);
    os << "mode " << to_string(cs.mode) << "\nlambda_sq " << buf << "\n";
    detail::dump_matrix(os, "H", cs.H);
    detail::dump_matrix(os, "H_c", cs.H_c);
    detail::dump_matrix(os, "H_c_eta", cs.H_c_eta);
}

} // namespace cran

#endif

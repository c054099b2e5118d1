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

#ifndef CRAN_EMBB_HPP
#define CRAN_EMBB_HPP

#include <cmath>
#include <limits>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "channel.hpp"
#include "interference.hpp"
#include "linalg.hpp"
#include "params.hpp"

namespace cran
{

enum class EmbbScheme
{
    OMA,
    Puncturing,
    TIN,
    SIC
};

inline const char *to_string(EmbbScheme s)
{
    switch (s)
    {
    case EmbbScheme::OMA: return "OMA";
    case EmbbScheme::Puncturing: return "NOMA-punct";
    case EmbbScheme::TIN: return "NOMA-TIN";
    case EmbbScheme::SIC: return "NOMA-SIC";
    }
    return "?";
}

inline AccessMode access_mode(EmbbScheme s) { return s == EmbbScheme::OMA ? AccessMode::OMA : AccessMode::NOMA; }

struct KernelValue
{
    double bits = 0.0;
    bool jittered = false;
};

inline constexpr double kernel_jitter = 1e-12;

namespace detail
{
// log det of a symmetric positive definite matrix from its Cholesky factor.
// Retries once with kernel_jitter * I when the factorization fails.
inline double logdet_spd(const Matrix &a, bool &jittered)
{
    Eigen::LLT<Matrix> llt(symmetrize(a));
    if (llt.info() != Eigen::Success)
    {
        llt.compute(symmetrize(a) + kernel_jitter * Matrix::Identity(a.rows(), a.cols()));
        if (llt.info() != Eigen::Success)
            throw numerical_error("Cholesky factorization failed: matrix is not positive definite");
        jittered = true;
    }
    const auto d = llt.matrixLLT().diagonal();
    double s = 0.0;
    for (Eigen::Index i = 0; i < d.size(); ++i)
        s += std::log(d(i));
    return 2.0 * s;
}

// log2 det(R + P G) - log2 det(R) for a precomputed Gram matrix G = H H^T.
inline KernelValue logdet_gain(const Matrix &R, const Matrix &gram, double P)
{
    KernelValue out;
    if (P == 0.0 || gram.cwiseAbs().maxCoeff() == 0.0)
    {
        bool j = false;
        logdet_spd(R, j); // still reject an indefinite R
        out.jittered = j;
        return out;
    }
    const double num = logdet_spd(R + P * gram, out.jittered);
    const double den = logdet_spd(R, out.jittered);
    out.bits = std::max(0.0, (num - den) / std::numbers::ln2);
    return out;
}
} // namespace detail

/// log2 det(I + P R^-1 H H^T), evaluated as log2 det(R + P H H^T) - log2 det(R)
/// from two Cholesky factorizations.
inline KernelValue logdet_rate_kernel_ex(const Matrix &H_eff, const Matrix &R_noise, double P)
{
    if (R_noise.rows() != R_noise.cols() || H_eff.rows() != R_noise.rows())
        throw dimension_error("logdet_rate_kernel: H_eff rows must match the square noise covariance");
    if (!(P >= 0.0) || !std::isfinite(P))
        throw domain_error("logdet_rate_kernel: power must be finite and non-negative");
    return detail::logdet_gain(R_noise, H_eff * H_eff.transpose(), P);
}

inline double logdet_rate_kernel(const Matrix &H_eff, const Matrix &R_noise, double P)
{
    return logdet_rate_kernel_ex(H_eff, R_noise, P).bits;
}

/// What the BBU sees of one EN's signal after the cable: the equivalent cable
/// matrix, the post-combining cable noise variance and the bandwidth fraction
/// that scales the per-symbol rate.
struct FronthaulModel
{
    Matrix H_c_eta;
    double cable_noise_var = 0.0;
    double mu = 1.0;
};

inline FronthaulModel analog_fronthaul(const SystemParams &p, AccessMode mode)
{
    validate(p, mode);
    return FronthaulModel{build_equivalent_fronthaul(p.gamma, p.l_S, p.mu),
                          effective_cable_noise_variance(p, mode), p.mu.value()};
}

// Reference cable: unit gain, noiseless, full bandwidth.
inline FronthaulModel ideal_fronthaul() { return FronthaulModel{Matrix::Identity(1, 1), 0.0, 1.0}; }

/// Per-realization log-det evaluator for a fixed radio channel and cable.
/// A realization is described per cell by a gain on the received eMBB signal
/// (0 = discarded, 1 = kept) and the power of residual URLLC interference
/// relayed with it. With S = diag(keep), V = diag(interference):
///   H_eff H_eff^T = (S H H^T S) (x) (H_c^eta)^2
///   R             = (I + V) (x) (H_c^eta)^2 + sigma_c^2 I
class RealizationKernel
{
public:
    RealizationKernel(Matrix H, FronthaulModel fh)
        : H_(std::move(H)), fh_(std::move(fh)), hht_(H_ * H_.transpose()),
          hc_sq_(fh_.H_c_eta * fh_.H_c_eta.transpose())
    {
    }

    Eigen::Index cells() const { return H_.rows(); }
    Eigen::Index dim() const { return H_.rows() * fh_.H_c_eta.rows(); }
    const FronthaulModel &fronthaul() const { return fh_; }
    const Matrix &radio() const { return H_; }

    KernelValue operator()(std::span<const double> keep, std::span<const double> interference, double P) const
    {
        const auto M = H_.rows();
        if (Eigen::Index(keep.size()) != M || Eigen::Index(interference.size()) != M)
            throw dimension_error("RealizationKernel: per-cell vectors must have M entries");
        Vector s(M), v(M);
        for (Eigen::Index k = 0; k < M; ++k)
        {
            s(k) = keep[std::size_t(k)];
            v(k) = 1.0 + interference[std::size_t(k)];
        }
        const Matrix gram = kron(s.asDiagonal() * hht_ * s.asDiagonal(), hc_sq_);
        Matrix R = kron(Matrix(v.asDiagonal()), hc_sq_);
        R.diagonal().array() += fh_.cable_noise_var;
        return detail::logdet_gain(R, gram, P);
    }

private:
    Matrix H_;
    FronthaulModel fh_;
    Matrix hht_;
    Matrix hc_sq_;
};

/// Transmit power of the eMBB users: boosted by (1 - 1/L_U)^-1 under OMA.
inline double embb_power(const SystemParams &p, EmbbScheme s)
{
    return s == EmbbScheme::OMA ? p.P_B * delta_factor(p, AccessMode::OMA) : p.P_B;
}

/// Realization log-det (bits, before the mu/M normalization) for one scheme.
inline KernelValue realization_bits(const RealizationKernel &kernel, const SystemParams &p, EmbbScheme scheme,
                                    const InterferenceState &st)
{
    const auto M = std::size_t(kernel.cells());
    std::vector<double> keep(M, 1.0), interf(M, 0.0);
    const double pu = p.beta_sq * p.P_U;
    for (std::size_t k = 0; k < M; ++k)
    {
        switch (scheme)
        {
        case EmbbScheme::OMA: break;
        case EmbbScheme::Puncturing: keep[k] = st.b[k]; break;
        case EmbbScheme::TIN: interf[k] = pu * st.a[k]; break;
        case EmbbScheme::SIC:
            keep[k] = 1.0 - double(st.a[k] * st.e[k]);
            interf[k] = p.rho * p.rho * pu * double(st.a[k] * (1 - st.e[k]));
            break;
        }
    }
    return kernel(keep, interf, embb_power(p, scheme));
}

struct EmbbRate
{
    double value = 0.0;   // bits per symbol
    double std_err = 0.0; // Monte Carlo standard error, 0 when exact
    bool exact = true;
    bool jittered = false;
    std::uint64_t evaluations = 0;
};

/// Rate of `scheme` over an arbitrary cable model. eps_U_D only enters SIC.
inline EmbbRate embb_rate(const SystemParams &p, EmbbScheme scheme, const ExpectationPolicy &policy,
                          const FronthaulModel &fh, double eps_U_D,
                          DecodeFailureModel failure_model = DecodeFailureModel::Conditional)
{
    validate(p, access_mode(scheme));
    if (scheme == EmbbScheme::SIC && !(eps_U_D >= 0.0 && eps_U_D <= 1.0))
        throw domain_error("noma_sic_rate: eps_U_D must lie in [0, 1]");
    const RealizationKernel kernel(build_radio_channel(p.M, p.alpha), fh);

    double scale = fh.mu / double(p.M);
    if (scheme == EmbbScheme::OMA)
        scale *= 1.0 - 1.0 / double(p.L_U);

    bool jittered = false;
    auto eval = [&](const InterferenceState &st) {
        const auto kv = realization_bits(kernel, p, scheme, st);
        jittered = jittered || kv.jittered;
        return kv.bits;
    };

    Expectation e;
    switch (scheme)
    {
    case EmbbScheme::OMA:
        e.value = eval(decode_state(0, CellLaw::arrivals(0.0), p.M));
        e.evaluations = 1;
        break;
    case EmbbScheme::Puncturing:
    case EmbbScheme::TIN: e = expectation(CellLaw::arrivals(p.q), p.M, policy, eval); break;
    case EmbbScheme::SIC:
        e = expectation(CellLaw::arrivals_with_decoding(p.q, eps_U_D, failure_model), p.M, policy, eval);
        break;
    }
    return EmbbRate{scale * e.value, scale * e.std_err, e.exact, jittered, e.evaluations};
}

inline EmbbRate oma_embb_rate(const SystemParams &p)
{
    return embb_rate(p, EmbbScheme::OMA, ExpectationPolicy{}, analog_fronthaul(p, AccessMode::OMA), 0.0);
}

inline EmbbRate noma_puncturing_rate(const SystemParams &p, const ExpectationPolicy &policy = {})
{
    return embb_rate(p, EmbbScheme::Puncturing, policy, analog_fronthaul(p, AccessMode::NOMA), 0.0);
}

inline EmbbRate noma_tin_rate(const SystemParams &p, const ExpectationPolicy &policy = {})
{
    return embb_rate(p, EmbbScheme::TIN, policy, analog_fronthaul(p, AccessMode::NOMA), 0.0);
}

inline EmbbRate noma_sic_rate(const SystemParams &p, double eps_U_D, const ExpectationPolicy &policy = {},
                              DecodeFailureModel failure_model = DecodeFailureModel::Conditional)
{
    return embb_rate(p, EmbbScheme::SIC, policy, analog_fronthaul(p, AccessMode::NOMA), eps_U_D, failure_model);
}

/// Same scheme with the cable replaced by a noiseless unit-gain link at full
/// bandwidth. For SIC, eps_U_D defaults to the NOMA target eps_U.
inline EmbbRate ideal_fronthaul_rate(const SystemParams &p, EmbbScheme scheme, const ExpectationPolicy &policy = {},
                                     double eps_U_D = std::numeric_limits<double>::quiet_NaN())
{
    if (std::isnan(eps_U_D))
        eps_U_D = p.eps_U;
    return embb_rate(p, scheme, policy, ideal_fronthaul(), eps_U_D);
}

} // namespace cran

#endif

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

#ifndef CRAN_ORACLE_HPP
#define CRAN_ORACLE_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "channel.hpp"
#include "embb.hpp"
#include "interference.hpp"
#include "linalg.hpp"
#include "params.hpp"

// Brute-force checks of the structured reductions used by the rate code.
// Everything here works at full signal dimension (n_F per EN, l_S pairs per
// cable) and never calls the reduced-form helpers it is checking, apart from
// the final comparison.

namespace cran::oracle
{

struct OracleReport
{
    std::string check_name;
    double max_abs_error = 0.0;
    double max_rel_error = 0.0;
    std::uint64_t instances_tested = 0;
    bool passed = true;
    double tolerance = 0.0;

    // Record one comparison of `got` against `want`.
    void record(double got, double want)
    {
        const double abs_err = std::abs(got - want);
        const double rel_err = std::abs(want) > 0.0 ? abs_err / std::abs(want) : abs_err;
        max_abs_error = std::max(max_abs_error, abs_err);
        max_rel_error = std::max(max_rel_error, rel_err);
        ++instances_tested;
        passed = passed && (rel_err <= tolerance || abs_err <= tolerance);
    }

    void merge(const OracleReport &o)
    {
        max_abs_error = std::max(max_abs_error, o.max_abs_error);
        max_rel_error = std::max(max_rel_error, o.max_rel_error);
        instances_tested += o.instances_tested;
        passed = passed && o.passed;
        tolerance = std::max(tolerance, o.tolerance);
    }
};

namespace detail
{
class Gaussian
{
public:
    explicit Gaussian(std::uint64_t seed, std::uint64_t stream = 0) : g_(cran::detail::substream(seed, stream)) {}

    double uniform() { return cran::detail::uniform01(g_); }

    // Box-Muller, spelled out so draws do not depend on the standard library's distributions.
    double normal()
    {
        if (has_spare_)
        {
            has_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 <= 0.0)
            u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        spare_ = r * std::sin(2.0 * std::numbers::pi * u2);
        has_spare_ = true;
        return r * std::cos(2.0 * std::numbers::pi * u2);
    }

    // Circularly-symmetric complex Gaussian with unit variance.
    std::complex<double> cn() { return {normal() * std::numbers::sqrt2 / 2.0, normal() * std::numbers::sqrt2 / 2.0}; }

    CMatrix cn_matrix(Eigen::Index r, Eigen::Index c)
    {
        CMatrix m(r, c);
        for (Eigen::Index j = 0; j < c; ++j)
            for (Eigen::Index i = 0; i < r; ++i)
                m(i, j) = cn();
        return m;
    }

    Matrix real_matrix(Eigen::Index r, Eigen::Index c)
    {
        Matrix m(r, c);
        for (Eigen::Index j = 0; j < c; ++j)
            for (Eigen::Index i = 0; i < r; ++i)
                m(i, j) = normal();
        return m;
    }

private:
    std::mt19937_64 g_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

// Combining matrix (1/eta) (I_{1/mu} (x) 1_eta), l_S x (1/mu).
inline Matrix combiner(int segments, int eta)
{
    return kron(Matrix::Identity(segments, segments), ones(eta, 1)) / double(eta);
}

// log2 det(I + P R^-1 G) through an LU factorization of the explicitly formed
// product; deliberately a different route from the Cholesky difference.
inline double brute_logdet_bits(const Matrix &R, const Matrix &H, double P)
{
    const Eigen::PartialPivLU<Matrix> lu_r(R);
    const Matrix t = Matrix::Identity(R.rows(), R.cols()) + P * lu_r.solve(H * H.transpose());
    const Eigen::PartialPivLU<Matrix> lu_t(t);
    const auto u = lu_t.matrixLU().diagonal();
    double s = 0.0;
    for (Eigen::Index i = 0; i < u.size(); ++i)
        s += std::log(std::abs(u(i)));
    return s / std::numbers::ln2;
}
} // namespace detail

/// Push random radio spectra through the explicit mapping, cable and
/// combiner, and compare with (H_c^eta (x) I_{l_F}) y. Noiseless.
inline OracleReport verify_lemma1_mapping(const SystemParams &p, int trials, std::uint64_t seed)
{
    validate(p);
    if (trials < 1)
        throw domain_error("verify_lemma1_mapping: trials must be >= 1");
    OracleReport rep{"cable_mapping", 0, 0, 0, true, 1e-12};
    const int s = p.segments(), eta = p.eta(), lF = p.l_F();
    const Matrix Hc = build_fronthaul_channel(p.gamma, p.l_S);
    const Matrix G = detail::combiner(s, eta);
    const CMatrix reduced = kron(build_equivalent_fronthaul(p.gamma, p.l_S, p.mu), Matrix::Identity(lF, lF)).cast<std::complex<double>>();

    detail::Gaussian rng(seed, 1);
    for (int t = 0; t < trials; ++t)
    {
        const CVector y = rng.cn_matrix(p.n_F, 1);
        const CMatrix Yk = unvec(y, s);                                     // l_F x 1/mu
        const CMatrix Ytilde = kron(Yk, CMatrix::Ones(1, eta));             // l_F x l_S, eta copies per segment
        const CMatrix Rtilde = Ytilde * Hc.cast<std::complex<double>>();   // through the cable
        const CMatrix Rk = Rtilde * G.cast<std::complex<double>>();        // combine replicas
        const CVector r = vec(Rk);
        const CVector want = reduced * y;
        const double err = max_rel_diff(r, want);
        rep.max_rel_error = std::max(rep.max_rel_error, err);
        rep.max_abs_error = std::max(rep.max_abs_error, (r - want).cwiseAbs().maxCoeff());
        ++rep.instances_tested;
        rep.passed = rep.passed && err <= rep.tolerance;
    }
    return rep;
}

/// Empirical covariance of combined unit-variance cable noise against (1/eta) I.
/// Passes when the largest entrywise deviation is within 5/sqrt(samples) + 1e-3.
inline OracleReport verify_mrc_noise_covariance(const SystemParams &p, int samples, std::uint64_t seed)
{
    validate(p);
    if (samples < 10000)
        throw domain_error("verify_mrc_noise_covariance: samples must be >= 1e4");
    const int s = p.segments(), eta = p.eta(), lF = p.l_F();
    OracleReport rep{"mrc_noise_covariance", 0, 0, 0, true, 5.0 * std::sqrt(1.0 / samples) + 1e-3};
    const CMatrix G = detail::combiner(s, eta).cast<std::complex<double>>();

    detail::Gaussian rng(seed, 2);
    CMatrix W(p.n_F, samples);
    for (int n = 0; n < samples; ++n)
        W.col(n) = vec(CMatrix(rng.cn_matrix(lF, p.l_S) * G));
    const CMatrix cov = W * W.adjoint() / double(samples);
    const CMatrix want = CMatrix::Identity(p.n_F, p.n_F) / double(eta);
    const double dev = (cov - want).cwiseAbs().maxCoeff();
    rep.max_abs_error = dev;
    rep.max_rel_error = dev * double(eta);
    rep.instances_tested = std::uint64_t(samples);
    rep.passed = dev <= rep.tolerance;
    return rep;
}

namespace detail
{
// Full n_F*M dimensional per-symbol rate for one realization of a scheme,
// built from the vectorized received signal r = Hbar x + (interference) + zbar.
inline double full_dimensional_rate(const SystemParams &p, EmbbScheme scheme, const InterferenceState &st)
{
    const int M = p.M, lF = p.l_F();
    const Matrix H = build_radio_channel(M, p.alpha);
    const Matrix Hce = build_equivalent_fronthaul(p.gamma, p.l_S, p.mu);
    const Matrix IlF = Matrix::Identity(lF, lF);
    const double sigma2 = effective_cable_noise_variance(p, access_mode(scheme));

    Vector keep = Vector::Ones(M), interf = Vector::Zero(M);
    for (int k = 0; k < M; ++k)
    {
        const auto a = double(st.a[std::size_t(k)]), b = double(st.b[std::size_t(k)]), e = double(st.e[std::size_t(k)]);
        if (scheme == EmbbScheme::Puncturing)
            keep(k) = b;
        else if (scheme == EmbbScheme::TIN)
            interf(k) = p.beta_sq * p.P_U * a;
        else if (scheme == EmbbScheme::SIC)
        {
            keep(k) = 1.0 - a * e;
            interf(k) = p.rho * p.rho * p.beta_sq * p.P_U * a * (1.0 - e);
        }
    }
    // Y = X H D, D = diag(keep): the radio signal at EN k is column k.
    const Matrix HD = H * keep.asDiagonal();
    const Matrix Hbar = kron(kron(HD.transpose(), Hce), IlF);
    const Matrix cable = kron(Hce, IlF);
    // radio noise and interference pass through the same cable map
    const Matrix radio_cov = kron(Matrix((Vector::Ones(M) + interf).asDiagonal()), Matrix(cable * cable.transpose()));
    Matrix R = radio_cov;
    R.diagonal().array() += sigma2;

    double P = p.P_B, pre = 1.0;
    if (scheme == EmbbScheme::OMA)
    {
        P *= delta_factor(p, AccessMode::OMA);
        pre = 1.0 - 1.0 / double(p.L_U);
    }
    return pre / double(p.n_F * M) * brute_logdet_bits(R, Hbar, P);
}

inline InterferenceState random_state(Gaussian &rng, int M)
{
    InterferenceState st;
    st.a.resize(std::size_t(M));
    st.b.resize(std::size_t(M));
    st.e.resize(std::size_t(M));
    for (std::size_t k = 0; k < std::size_t(M); ++k)
    {
        st.a[k] = rng.uniform() < 0.5;
        st.b[k] = 1 - st.a[k];
        st.e[k] = st.a[k] && rng.uniform() < 0.5;
    }
    st.weight = 1.0;
    return st;
}
} // namespace detail

/// Full-dimensional rate (size n_F*M) against the reduced (M/mu) forms: the
/// deterministic OMA rate, then `trials` random realizations of each NOMA
/// scheme against the reduced per-realization kernel.
inline OracleReport verify_lemma2_reduction(const SystemParams &p, int trials, std::uint64_t seed)
{
    validate(p, AccessMode::OMA);
    OracleReport rep{"kronecker_reduction", 0, 0, 0, true, 1e-9};
    const InterferenceState none = decode_state(0, CellLaw::arrivals(0.0), p.M);

    rep.record(oma_embb_rate(p).value, detail::full_dimensional_rate(p, EmbbScheme::OMA, none));

    const RealizationKernel kernel(build_radio_channel(p.M, p.alpha), analog_fronthaul(p, AccessMode::NOMA));
    const double scale = p.mu.value() / double(p.M);
    detail::Gaussian rng(seed, 3);
    for (int t = 0; t < trials; ++t)
    {
        const auto st = detail::random_state(rng, p.M);
        for (auto scheme : {EmbbScheme::Puncturing, EmbbScheme::TIN, EmbbScheme::SIC})
            rep.record(scale * realization_bits(kernel, p, scheme, st).bits,
                       detail::full_dimensional_rate(p, scheme, st));
    }
    return rep;
}

/// Fixed-realization variant: compares one given state for one scheme.
inline OracleReport verify_realization(const SystemParams &p, EmbbScheme scheme, const InterferenceState &st)
{
    validate(p, access_mode(scheme));
    OracleReport rep{std::string("realization_") + to_string(scheme), 0, 0, 0, true, 1e-9};
    const RealizationKernel kernel(build_radio_channel(p.M, p.alpha), analog_fronthaul(p, access_mode(scheme)));
    double scale = p.mu.value() / double(p.M);
    if (scheme == EmbbScheme::OMA)
        scale *= 1.0 - 1.0 / double(p.L_U);
    rep.record(scale * realization_bits(kernel, p, scheme, st).bits, detail::full_dimensional_rate(p, scheme, st));
    return rep;
}

/// Randomized Kronecker identities at dims {m, n, p, q, r, s}:
///   (A (x) B)(C (x) D) = AC (x) BD with A m x n, B p x q, C n x r, D q x s
///   vec(A X C) = (C^T (x) A) vec(X)
/// plus the combiner identity 1_{l_S}^T (I_{1/mu} (x) 1_eta) = eta 1_{1/mu}^T
/// for every l_S = eta / mu with 1/mu, eta in 1..4.
inline OracleReport verify_kron_mixed_product(std::array<int, 6> dims, int trials, std::uint64_t seed)
{
    const auto [m, n, pp, q, r, s] = dims;
    if (trials < 1 || std::min({m, n, pp, q, r, s}) < 1)
        throw domain_error("verify_kron_mixed_product: sizes and trials must be positive");
    OracleReport rep{"kron_identities", 0, 0, 0, true, 1e-12};
    auto note = [&](double err) {
        rep.max_rel_error = std::max(rep.max_rel_error, err);
        rep.max_abs_error = std::max(rep.max_abs_error, err);
        ++rep.instances_tested;
        rep.passed = rep.passed && err <= rep.tolerance;
    };

    detail::Gaussian rng(seed, 4);
    for (int t = 0; t < trials; ++t)
    {
        const Matrix A = rng.real_matrix(m, n), B = rng.real_matrix(pp, q);
        const Matrix C = rng.real_matrix(n, r), D = rng.real_matrix(q, s);
        note(max_rel_diff(Matrix(kron(A, B) * kron(C, D)), kron(Matrix(A * C), Matrix(B * D))));
        const Matrix X = rng.real_matrix(n, r), E = rng.real_matrix(r, s);
        note(max_rel_diff(vec(Matrix(A * X * E)), Vector(kron(E.transpose(), A) * vec(X))));
    }
    for (int segs = 1; segs <= 4; ++segs)
        for (int eta = 1; eta <= 4; ++eta)
        {
            const Matrix lhs = ones(1, segs * eta) * detail::combiner(segs, eta) * double(eta);
            note(max_rel_diff(lhs, Matrix(double(eta) * ones(1, segs))));
        }
    return rep;
}

/// Reference point of the equivalence checks: M = 6, n_F = 60, l_S = 4,
/// mu = 1/4, gamma^2 = 0.5 (full form 360 x 360, reduced form 24 x 24).
inline SystemParams verification_defaults()
{
    SystemParams p;
    p.mu = Rational(1, 4);
    p.gamma = std::sqrt(0.5);
    return p;
}

struct VerifyOptions
{
    int random_tuples = 50;
    int mapping_trials = 20;
    int reduction_trials = 1;
    int covariance_samples = 10000;
    std::uint64_t seed = 1;
};

/// Runs all four checks at the default parameters and on a grid of random
/// tuples (alpha, gamma ~ U[0,1], mu in {1/4, 1/2, 1}, l_S = 4, M in {3,4,6}).
/// Returns one merged report per check.
inline std::vector<OracleReport> verify_all(const SystemParams &defaults, const VerifyOptions &opt = {})
{
    std::vector<SystemParams> tuples{defaults};
    detail::Gaussian rng(opt.seed, 5);
    const Rational mus[] = {{1, 4}, {1, 2}, {1, 1}};
    const int Ms[] = {3, 4, 6};
    for (int i = 0; i < opt.random_tuples; ++i)
    {
        SystemParams p = defaults;
        p.l_S = 4;
        p.alpha = rng.uniform();
        p.gamma = rng.uniform();
        p.rho = rng.uniform();
        p.mu = mus[std::size_t(rng.uniform() * 3.0) % 3];
        p.M = Ms[std::size_t(rng.uniform() * 3.0) % 3];
        tuples.push_back(p);
    }

    OracleReport mapping{"cable_mapping", 0, 0, 0, true, 1e-12};
    OracleReport cov{"mrc_noise_covariance", 0, 0, 0, true, 0};
    OracleReport reduction{"kronecker_reduction", 0, 0, 0, true, 1e-9};
    OracleReport kron_rep{"kron_identities", 0, 0, 0, true, 1e-12};
    for (std::size_t i = 0; i < tuples.size(); ++i)
    {
        const auto &p = tuples[i];
        const auto sd = opt.seed + 7919 * i;
        mapping.merge(verify_lemma1_mapping(p, opt.mapping_trials, sd));
        cov.merge(verify_mrc_noise_covariance(p, opt.covariance_samples, sd));
        reduction.merge(verify_lemma2_reduction(p, opt.reduction_trials, sd));
        kron_rep.merge(verify_kron_mixed_product({p.segments(), p.segments(), p.l_F(), p.l_F(), p.M, p.segments()}, 2, sd));
    }
    return {mapping, reduction, cov, kron_rep};
}

} // namespace cran::oracle

#endif

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

#ifndef CRAN_INTERFERENCE_HPP
#define CRAN_INTERFERENCE_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <unordered_map>
#include <vector>

#include "errors.hpp"

namespace cran
{

/// One joint realization of the per-cell indicators.
///   a[k] = 1: URLLC transmission in cell k
///   b[k] = 1 - a[k]: cell k kept by a puncturing receiver
///   e[k] = 1: URLLC decoding failed at EN k (only meaningful with a[k] = 1)
struct InterferenceState
{
    std::vector<std::uint8_t> a, b, e;
    double weight = 0.0;
};

enum class ExpectationStrategy
{
    ExactEnumeration,
    MonteCarlo
};

struct ExpectationPolicy
{
    ExpectationStrategy strategy = ExpectationStrategy::ExactEnumeration;
    std::uint64_t sample_count = 100000;
    std::uint64_t seed = 1;
    // Above this many joint states, ExactEnumeration falls back to Monte Carlo.
    std::uint64_t exact_state_limit = 59049;
};

inline void validate(const ExpectationPolicy &p)
{
    if (p.sample_count < 1)
        throw domain_error("ExpectationPolicy: sample_count must be >= 1");
    if (p.exact_state_limit < 1)
        throw domain_error("ExpectationPolicy: exact_state_limit must be >= 1");
}

// How E relates to A in the SIC model.
//   Conditional: decoding fails with probability eps_D given a transmission.
//   Marginal:    E ~ Bernoulli(q eps_D) independently of A.
enum class DecodeFailureModel
{
    Conditional,
    Marginal
};

/// Per-cell law over a small outcome alphabet. Outcome o maps to (a, e) by
/// the fixed table {0: (0,0), 1: (1,0), 2: (1,1)}; Bernoulli arrival laws use
/// only outcomes 0 and 1.
struct CellLaw
{
    std::vector<double> prob;

    static CellLaw arrivals(double q) { return CellLaw{{1.0 - q, q}}; }

    static CellLaw arrivals_with_decoding(double q, double eps_D,
                                          DecodeFailureModel model = DecodeFailureModel::Conditional)
    {
        if (model == DecodeFailureModel::Conditional)
            return CellLaw{{1.0 - q, q * (1.0 - eps_D), q * eps_D}};
        return CellLaw{{1.0 - q, q * (1.0 - q * eps_D), q * q * eps_D}};
    }

    std::size_t outcomes() const { return prob.size(); }
};

inline std::uint64_t state_count(const CellLaw &law, int M)
{
    std::uint64_t n = 1;
    for (int k = 0; k < M; ++k)
    {
        if (n > std::numeric_limits<std::uint64_t>::max() / law.outcomes())
            return std::numeric_limits<std::uint64_t>::max();
        n *= law.outcomes();
    }
    return n;
}

inline InterferenceState decode_state(std::uint64_t code, const CellLaw &law, int M)
{
    InterferenceState s;
    s.a.resize(std::size_t(M));
    s.b.resize(std::size_t(M));
    s.e.resize(std::size_t(M));
    s.weight = 1.0;
    const auto K = law.outcomes();
    for (int k = 0; k < M; ++k)
    {
        const auto o = std::size_t(code % K);
        code /= K;
        s.a[std::size_t(k)] = o >= 1;
        s.b[std::size_t(k)] = o == 0;
        s.e[std::size_t(k)] = o == 2;
        s.weight *= law.prob[o];
    }
    return s;
}

/// Every state with non-zero probability, in increasing code order.
inline std::vector<InterferenceState> enumerate_states(const CellLaw &law, int M)
{
    std::vector<InterferenceState> out;
    const auto n = state_count(law, M);
    for (std::uint64_t c = 0; c < n; ++c)
    {
        auto s = decode_state(c, law, M);
        if (s.weight > 0.0)
            out.push_back(std::move(s));
    }
    return out;
}

struct Expectation
{
    double value = 0.0;
    double std_err = 0.0; // zero for exact enumeration
    bool exact = true;
    std::uint64_t evaluations = 0; // distinct states evaluated
};

namespace detail
{
inline constexpr std::uint64_t mc_chunk = 4096;

inline std::mt19937_64 substream(std::uint64_t seed, std::uint64_t index)
{
    std::seed_seq seq{std::uint32_t(seed), std::uint32_t(seed >> 32), std::uint32_t(index),
                      std::uint32_t(index >> 32)};
    return std::mt19937_64(seq);
}

inline double uniform01(std::mt19937_64 &g) { return double(g() >> 11) * 0x1.0p-53; }
} // namespace detail

/// E[f(state)] under i.i.d. cells drawn from `law`. Exact enumeration when the
/// state space fits the policy, otherwise Monte Carlo. Monte Carlo splits the
/// samples into fixed chunks with independent substreams keyed by
/// (seed, chunk index) and reduces chunk sums in index order, so the estimate
/// depends only on (seed, sample_count).
template <typename F>
Expectation expectation(const CellLaw &law, int M, const ExpectationPolicy &policy, F &&f)
{
    validate(policy);
    const auto n_states = state_count(law, M);
    if (n_states == std::numeric_limits<std::uint64_t>::max())
        throw dimension_error("expectation: state space does not fit a 64-bit state code");
    Expectation out;

    if (policy.strategy == ExpectationStrategy::ExactEnumeration && n_states <= policy.exact_state_limit)
    {
        for (std::uint64_t c = 0; c < n_states; ++c)
        {
            const auto s = decode_state(c, law, M);
            if (s.weight == 0.0)
                continue;
            out.value += s.weight * f(s);
            ++out.evaluations;
        }
        return out;
    }

    std::vector<double> cdf(law.outcomes());
    double acc = 0.0;
    for (std::size_t o = 0; o < law.outcomes(); ++o)
        cdf[o] = (acc += law.prob[o]);

    std::unordered_map<std::uint64_t, double> cache;
    double sum = 0.0, sumsq = 0.0;
    const std::uint64_t N = policy.sample_count;
    for (std::uint64_t chunk = 0; chunk * detail::mc_chunk < N; ++chunk)
    {
        auto g = detail::substream(policy.seed, chunk);
        const auto end = std::min(N, (chunk + 1) * detail::mc_chunk);
        double csum = 0.0, csumsq = 0.0;
        for (std::uint64_t i = chunk * detail::mc_chunk; i < end; ++i)
        {
            std::uint64_t code = 0, place = 1;
            for (int k = 0; k < M; ++k)
            {
                const double u = detail::uniform01(g);
                std::size_t o = 0;
                while (o + 1 < cdf.size() && u >= cdf[o])
                    ++o;
                code += place * o;
                place *= law.outcomes();
            }
            auto it = cache.find(code);
            if (it == cache.end())
                it = cache.emplace(code, f(decode_state(code, law, M))).first;
            csum += it->second;
            csumsq += it->second * it->second;
        }
        sum += csum;
        sumsq += csumsq;
    }
    const double n = double(N);
    out.value = sum / n;
    const double var = N > 1 ? std::max(0.0, (sumsq - n * out.value * out.value) / (n - 1.0)) : 0.0;
    out.std_err = std::sqrt(var / n);
    out.exact = false;
    out.evaluations = cache.size();
    return out;
}

} // namespace cran

#endif

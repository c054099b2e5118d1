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

// Acceptance gate: one PASS/FAIL line per criterion, detail lines indented.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "cran/cran.hpp"
#include "cran/oracle.hpp"

using namespace cran;

namespace
{

int failures = 0;

struct Criterion
{
    int id;
    const char *title;
    bool ok = true;
    std::vector<std::string> notes = {};

    void expect(bool cond, const std::string &what)
    {
        ok = ok && cond;
        notes.push_back(std::string(cond ? "ok   " : "FAIL ") + what);
    }
    void note(const std::string &what) { notes.push_back("     " + what); }

    ~Criterion()
    {
        std::printf("%s [%d] %s\n", ok ? "PASS" : "FAIL", id, title);
        for (const auto &n : notes)
            std::printf("       %s\n", n.c_str());
        std::fflush(stdout);
        failures += !ok;
    }
};

std::string fmt(const char *f, auto... args)
{
    char buf[256];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

EmbbRate rate_of(const SystemParams &p, EmbbScheme s, bool ideal = false, double eps = 0.0)
{
    const auto fh = ideal ? ideal_fronthaul() : analog_fronthaul(p, access_mode(s));
    return embb_rate(p, s, ExpectationPolicy{}, fh, eps);
}

void oracle_equivalence()
{
    Criterion c{1, "oracle equivalence on defaults + 50 random tuples"};
    oracle::VerifyOptions opt;
    opt.random_tuples = 50;
    const auto reps = oracle::verify_all(oracle::verification_defaults(), opt);
    const double tol[] = {1e-12, 1e-9, -1.0, 1e-12}; // covariance tolerance is statistical
    for (std::size_t i = 0; i < reps.size(); ++i)
    {
        const auto &r = reps[i];
        bool ok = r.passed && r.instances_tested > 0;
        if (tol[i] > 0)
            ok = ok && r.max_rel_error <= tol[i];
        c.expect(ok, fmt("%-22s n=%-6llu max_rel=%.3g max_abs=%.3g tol=%.3g", r.check_name.c_str(),
                         (unsigned long long)r.instances_tested, r.max_rel_error, r.max_abs_error,
                         tol[i] > 0 ? tol[i] : r.tolerance));
    }
}

void sic_equals_tin()
{
    Criterion c{2, "SIC(rho=1, eps_D=0) equals TIN on a 100-point grid (<= 1e-12 rel)"};
    SystemParams p;
    p.mu = Rational(1, 4);
    p.rho = 1.0;
    double worst = 0.0, worst_real = 0.0;
    int points = 0;
    for (double q : {0.01, 0.1, 0.3, 0.6, 0.9})
        for (double a2 : {0.0, 0.2, 0.5, 1.0})
            for (double g2 : {0.0, 0.25, 0.5, 0.75, 1.0})
            {
                p.q = q;
                p.alpha = std::sqrt(a2);
                p.gamma = std::sqrt(g2);
                worst = std::max(worst, rel(rate_of(p, EmbbScheme::SIC).value, rate_of(p, EmbbScheme::TIN).value));
                ++points;
            }
    // per realization, at one grid point
    const RealizationKernel k(build_radio_channel(p.M, p.alpha), analog_fronthaul(p, AccessMode::NOMA));
    const auto law = CellLaw::arrivals_with_decoding(0.5, 0.0);
    for (std::uint64_t code = 0; code < state_count(law, p.M); ++code)
    {
        const auto st = decode_state(code, law, p.M);
        if (st.weight == 0.0)
            continue;
        worst_real = std::max(worst_real, rel(realization_bits(k, p, EmbbScheme::SIC, st).bits,
                                              realization_bits(k, p, EmbbScheme::TIN, st).bits));
    }
    c.expect(points >= 100, fmt("grid points: %d", points));
    c.expect(worst <= 1e-12, fmt("max rel gap after expectation: %.3g", worst));
    c.expect(worst_real <= 1e-12, fmt("max rel gap per realization: %.3g", worst_real));
}

void dominance()
{
    Criterion c{3, "dominance: TIN >= puncturing; SIC non-increasing in rho; SIC(0,0) interference-free"};
    const auto qp = preset("q");
    double min_gap = INFINITY;
    bool all_ge = true, strict = true;
    for (double q : qp.values)
    {
        auto p = qp.base;
        p.q = q;
        const double tin = rate_of(p, EmbbScheme::TIN).value;
        const double punct = rate_of(p, EmbbScheme::Puncturing).value;
        all_ge = all_ge && tin >= punct;
        if (q > 0.0 && q < 1.0)
        {
            strict = strict && tin > punct;
            min_gap = std::min(min_gap, tin - punct);
        }
    }
    c.expect(all_ge, fmt("TIN >= punct on all %zu q-preset points", qp.values.size()));
    c.expect(strict, fmt("strict on q in (0,1), smallest gap %.3g bits", min_gap));

    const auto rp = preset("rho");
    auto p = rp.base;
    set_param(p, "P_U_db", 10.0);
    double prev = INFINITY;
    bool mono = true;
    for (double r2 : rp.values)
    {
        p.rho = std::sqrt(r2);
        const double v = rate_of(p, EmbbScheme::SIC, false, 1e-3).value;
        mono = mono && v <= prev;
        prev = v;
    }
    c.expect(mono, fmt("SIC non-increasing over %zu rho^2 points (q=0.3, eps_D=1e-3)", rp.values.size()));

    p.rho = 0.0;
    auto free = p;
    free.q = 0.0;
    const double sic0 = rate_of(p, EmbbScheme::SIC, false, 0.0).value;
    const double ref = rate_of(free, EmbbScheme::TIN).value;
    c.expect(rel(sic0, ref) <= 1e-12, fmt("SIC(0,0)=%.12g interference-free=%.12g", sic0, ref));
}

void feasibility_boundary()
{
    Criterion c{4, "URLLC OMA feasibility boundary (q = eps_U = 1e-3)"};
    SystemParams p;
    p.q = 1e-3;
    p.eps_U = 1e-3;
    for (int L = 2; L <= 8; ++L)
    {
        p.L_U = L;
        const auto u = urllc_rate(p, AccessMode::OMA);
        if (L <= 3)
            c.expect(u.rate > 0.0 && u.feasible, fmt("L_U=%d R_U=%.6f eps_D=%.6g", L, u.rate, u.eps_U_D));
        else
            c.expect(u.rate == 0.0 && !u.feasible, fmt("L_U=%d R_U=%g blockage=%.6g", L, u.rate, u.blockage_prob));
    }
    p.L_U = 2;
    const double e2 = urllc_rate(p, AccessMode::OMA).eps_U_D;
    c.expect(std::abs(e2 - 5.0025e-4) <= 5e-8, fmt("eps_D(L_U=2) = %.8g (~5.0025e-4)", e2));
    const auto b4 = oma_blockage_and_target(1e-3, 4, 1e-3);
    c.expect(b4.blockage_prob > 1e-3, fmt("blockage(L_U=4) = %.6g > eps_U", b4.blockage_prob));
}

void urllc_checkpoints()
{
    Criterion c{5, "URLLC rate checkpoints"};
    SystemParams p;
    const double oma = urllc_rate(p, AccessMode::OMA).rate;
    const double noma = urllc_rate(p, AccessMode::NOMA).rate;
    c.expect(std::abs(oma - 3.054) <= 1e-3, fmt("OMA  R_U = %.6f (3.054 +- 0.001)", oma));
    c.expect(std::abs(noma - 0.871) <= 1e-3, fmt("NOMA R_U = %.6f (0.871 +- 0.001)", noma));
    bool inv = true;
    for (double q : {0.0, 1e-6, 1e-3, 0.1, 0.5, 0.99, 1.0})
    {
        p.q = q;
        inv = inv && urllc_rate(p, AccessMode::NOMA).rate == noma;
    }
    c.expect(inv, "NOMA R_U bit-identical for q in {0, 1e-6, 1e-3, 0.1, 0.5, 0.99, 1}");
}

void gamma_trend()
{
    Criterion c{6, "gamma^2 sweep trend (mu=1 up and within 1% of ideal at 1; mu=1/4 down)"};
    const auto values = linspace_step(0.0, 1.0, 0.05);
    for (auto s : {EmbbScheme::OMA, EmbbScheme::Puncturing})
        for (auto mu : {Rational(1, 1), Rational(1, 4)})
        {
            SystemParams p;
            p.mu = mu;
            const bool up = mu == Rational(1, 1);
            bool mono = true;
            double prev = up ? -INFINITY : INFINITY;
            for (double g2 : values)
            {
                p.gamma = std::sqrt(g2);
                const double v = rate_of(p, s).value;
                mono = mono && (up ? v >= prev : v <= prev);
                prev = v;
            }
            c.expect(mono, fmt("%-10s mu=%-3s monotone %s", to_string(s), mu.str().c_str(),
                               up ? "non-decreasing" : "non-increasing"));
            if (up)
            {
                const double ideal = rate_of(p, s, true).value;
                const double gap = (ideal - prev) / ideal;
                c.expect(gap <= 0.01, fmt("%-10s mu=1   at gamma^2=1: %.6f vs ideal %.6f, gap %.3f%% (limit 1%%)",
                                          to_string(s), prev, ideal, 100.0 * gap));
            }
        }
}

void cube_law()
{
    Criterion c{7, "post-combining SNR amplification l_S (1 + gamma (l_S-1))^2 (<= 1e-12 rel)"};
    double worst = 0.0;
    for (double g : {0.0, 0.25, 0.5, 1.0})
        for (int lS : {2, 4, 8})
        {
            const double want = lS * std::pow(1.0 + g * (lS - 1), 2);
            // explicit cable + combiner: signal replicated on all pairs, unit noise per pair
            const Matrix Hc = build_fronthaul_channel(g, lS);
            const Matrix G = oracle::detail::combiner(1, lS);
            const double sig = (G.transpose() * Hc * ones(lS, 1))(0, 0);
            const double noise = (G.transpose() * G)(0, 0);
            worst = std::max(worst, rel(sig * sig / noise, want));
            // equivalent cable
            const Matrix He = build_equivalent_fronthaul(g, lS, Rational(1, 1));
            worst = std::max(worst, rel(He(0, 0) * He(0, 0) * lS, want));
        }
    c.expect(worst <= 1e-12, fmt("12 (gamma, l_S) pairs, two routes, max rel error %.3g", worst));
}

void exact_vs_mc()
{
    Criterion c{8, "exact vs Monte Carlo: M=6 TIN q=0.3, 1e5 samples x 20 seeds within 4 SE"};
    SystemParams p;
    p.q = 0.3;
    const auto fh = analog_fronthaul(p, AccessMode::NOMA);
    const auto ex = embb_rate(p, EmbbScheme::TIN, ExpectationPolicy{}, fh, 0.0);
    int inside = 0;
    double worst_z = 0.0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed)
    {
        ExpectationPolicy pol;
        pol.strategy = ExpectationStrategy::MonteCarlo;
        pol.sample_count = 100000;
        pol.seed = seed;
        const auto mc = embb_rate(p, EmbbScheme::TIN, pol, fh, 0.0);
        const double z = std::abs(mc.value - ex.value) / mc.std_err;
        worst_z = std::max(worst_z, z);
        inside += z <= 4.0;
    }
    c.expect(ex.exact, fmt("exact = %.12g over %llu states", ex.value, (unsigned long long)ex.evaluations));
    c.expect(inside >= 19, fmt("%d/20 seeds within 4 SE (worst |z| = %.2f)", inside, worst_z));
}

void determinism()
{
    Criterion c{9, "byte-identical CSV for equal seeds"};
    for (const char *name : {"gamma", "q", "rho", "latency"})
    {
        const auto cfg = preset(name);
        const auto a = to_csv(run_sweep(cfg, 1));
        const auto b = to_csv(run_sweep(cfg, 2));
        c.expect(a == b && !a.empty(), fmt("preset %-8s %zu bytes", name, a.size()));
    }
    auto cfg = preset("q");
    cfg.policy.strategy = ExpectationStrategy::MonteCarlo;
    cfg.policy.sample_count = 20000;
    cfg.policy.seed = 1234;
    const auto a = to_csv(run_sweep(cfg, 1));
    const auto b = to_csv(run_sweep(cfg, 2));
    c.expect(a == b, fmt("preset q, Monte Carlo seed 1234, %zu bytes", a.size()));
}

} // namespace

int main()
{
    const auto t0 = std::chrono::steady_clock::now();
    oracle_equivalence();
    sic_equals_tin();
    dominance();
    feasibility_boundary();
    urllc_checkpoints();
    gamma_trend();
    cube_law();
    exact_vs_mc();
    determinism();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%d of 9 criteria failed (%.1f s)\n", failures, secs);
    return failures;
}

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

#ifndef CRAN_SWEEP_HPP
#define CRAN_SWEEP_HPP

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "embb.hpp"
#include "params.hpp"
#include "urllc.hpp"

namespace cran
{

inline constexpr const char *tool_version = "1.0.0";

inline constexpr const char *csv_header = "swept_param,swept_value,scheme,R_U_bits,R_B_bits,feasible,eps_U_D,mc_std_err,seed";

enum class SchemeId
{
    OMA,
    NomaPunct,
    NomaTIN,
    NomaSIC,
    IdealOMA,
    IdealPunct,
    IdealTIN,
    IdealSIC
};

struct SchemeInfo
{
    SchemeId id;
    const char *name;
    EmbbScheme embb;
    bool ideal;
};

inline constexpr SchemeInfo scheme_table[] = {
    {SchemeId::OMA, "OMA", EmbbScheme::OMA, false},
    {SchemeId::NomaPunct, "NOMA-punct", EmbbScheme::Puncturing, false},
    {SchemeId::NomaTIN, "NOMA-TIN", EmbbScheme::TIN, false},
    {SchemeId::NomaSIC, "NOMA-SIC", EmbbScheme::SIC, false},
    {SchemeId::IdealOMA, "ideal-OMA", EmbbScheme::OMA, true},
    {SchemeId::IdealPunct, "ideal-NOMA-punct", EmbbScheme::Puncturing, true},
    {SchemeId::IdealTIN, "ideal-NOMA-TIN", EmbbScheme::TIN, true},
    {SchemeId::IdealSIC, "ideal-NOMA-SIC", EmbbScheme::SIC, true},
};

inline const SchemeInfo &info(SchemeId id)
{
    for (const auto &s : scheme_table)
        if (s.id == id)
            return s;
    throw domain_error("unknown scheme id");
}

inline const char *to_string(SchemeId id) { return info(id).name; }

inline SchemeId parse_scheme(const std::string &name)
{
    for (const auto &s : scheme_table)
        if (name == s.name)
            return s.id;
    throw config_error("unknown scheme '" + name + "'");
}

// ---- parameter access by name -------------------------------------------

/// Sets one parameter from its textual value. Keys ending in `_sq` take the
/// squared amplitude; keys ending in `_db` take powers in dB.
inline void set_param(SystemParams &p, const std::string &key, const std::string &text)
{
    double v = 0.0;
    if (key != "mu")
    {
        std::size_t pos = 0;
        try
        {
            v = std::stod(text, &pos);
        }
        catch (const std::logic_error &)
        {
            throw config_error("parameter '" + key + "': '" + text + "' is not a number");
        }
        if (pos != text.size())
            throw config_error("parameter '" + key + "': '" + text + "' is not a number");
    }
    auto as_int = [&](int &dst) {
        if (v != std::floor(v))
            throw config_error("parameter '" + key + "' must be an integer");
        dst = int(v);
    };
    auto sqrt_of = [&](double x) {
        if (x < 0.0)
            throw config_error("parameter '" + key + "' must be non-negative");
        return std::sqrt(x);
    };

    if (key == "M") as_int(p.M);
    else if (key == "n_F") as_int(p.n_F);
    else if (key == "n_T") as_int(p.n_T);
    else if (key == "l_S") as_int(p.l_S);
    else if (key == "L_U") as_int(p.L_U);
    else if (key == "mu")
    {
        try { p.mu = Rational::parse(text); }
        catch (const domain_error &e) { throw config_error(std::string("parameter 'mu': ") + e.what()); }
    }
    else if (key == "alpha") p.alpha = v;
    else if (key == "alpha_sq") p.alpha = sqrt_of(v);
    else if (key == "beta_sq") p.beta_sq = v;
    else if (key == "gamma") p.gamma = v;
    else if (key == "gamma_sq") p.gamma = sqrt_of(v);
    else if (key == "rho") p.rho = v;
    else if (key == "rho_sq") p.rho = sqrt_of(v);
    else if (key == "P_B") p.P_B = v;
    else if (key == "P_B_db") p.P_B = db_to_linear(v);
    else if (key == "P_U") p.P_U = v;
    else if (key == "P_U_db") p.P_U = db_to_linear(v);
    else if (key == "P_c") p.P_c = v;
    else if (key == "P_c_db") p.P_c = db_to_linear(v);
    else if (key == "q") p.q = v;
    else if (key == "eps_U") p.eps_U = v;
    else throw config_error("unknown parameter '" + key + "'");
}

inline std::string format_g(double v, int digits = 9)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

inline void set_param(SystemParams &p, const std::string &key, double v)
{
    if (key == "mu")
        p.mu = Rational::from_double(v);
    else
        set_param(p, key, format_g(v, 17));
}

inline bool is_known_param(const std::string &key)
{
    static const char *keys[] = {"M", "n_F", "n_T", "l_S", "L_U", "mu", "alpha", "alpha_sq", "beta_sq",
                                 "gamma", "gamma_sq", "rho", "rho_sq", "P_B", "P_B_db", "P_U", "P_U_db",
                                 "P_c", "P_c_db", "q", "eps_U"};
    return std::find_if(std::begin(keys), std::end(keys), [&](const char *k) { return key == k; }) != std::end(keys);
}

// ---- configuration --------------------------------------------------------

/// A named set of parameter overrides applied on top of the base parameters,
/// e.g. {"mu=1/4", {{"mu", "1/4"}}}. Used for the secondary axis of a figure.
struct Variant
{
    std::string label;
    std::vector<std::pair<std::string, std::string>> overrides;
};

struct SweepConfig
{
    SystemParams base;
    std::string swept_parameter = "gamma_sq"; // gamma_sq | q | rho_sq | L_U | any other parameter key
    std::vector<double> values;
    std::vector<SchemeId> schemes;
    std::vector<Variant> variants;
    ExpectationPolicy policy;
    std::string output_path;
};

inline void validate(const SweepConfig &c)
{
    if (!is_known_param(c.swept_parameter))
        throw config_error("swept_parameter: unknown parameter '" + c.swept_parameter + "'");
    if (c.values.empty())
        throw config_error("values: must be non-empty");
    const bool up = c.values.size() < 2 || c.values[1] > c.values[0];
    for (std::size_t i = 1; i < c.values.size(); ++i)
        if (up ? !(c.values[i] > c.values[i - 1]) : !(c.values[i] < c.values[i - 1]))
            throw config_error("values: must be strictly monotone");
    if (c.schemes.empty())
        throw config_error("schemes: must be non-empty");
    for (const auto &v : c.variants)
    {
        if (v.label.empty())
            throw config_error("variants: every variant needs a label");
        for (const auto &[k, _] : v.overrides)
            if (!is_known_param(k))
                throw config_error("variants: unknown parameter '" + k + "'");
    }
    validate(c.policy);
}

inline std::vector<double> linspace_step(double lo, double hi, double step)
{
    std::vector<double> v;
    const auto n = int(std::llround((hi - lo) / step));
    for (int i = 0; i <= n; ++i)
        v.push_back(lo + step * i);
    return v;
}

/// The four figure configurations of the numerical study. Common settings:
/// M = 6, n_F = 60, l_S = 4, P_B = P_c = 7 dB, P_U = 10 dB, beta^2 = 1,
/// eps_U = 1e-3, L_U = 2 (OMA).
///   gamma:   gamma^2 in [0,1] step 0.05, mu in {1/4, 1}, q = 1e-3, alpha^2 = 0.2
///   q:       q in 1e-4..1 (4 points per decade), mu = 1, gamma^2 = 1, alpha^2 = 0.2
///   rho:     rho^2 in [0,1] step 0.1, q = 0.3, alpha^2 = 0.4, gamma^2 = 0.5, mu = 1,
///            one variant per P_U value (dB)
///   latency: L_U in 1..8, mu in {1/4, 1}, q = 1e-3, alpha^2 = 0.2, gamma^2 = 0.5
inline SweepConfig preset(const std::string &name, const std::vector<double> &pu_db_list = {10.0})
{
    SweepConfig c;
    c.base = SystemParams{};
    c.base.alpha = std::sqrt(0.2);
    c.base.q = 1e-3;
    const std::vector<Variant> mu_variants{{"mu=1/4", {{"mu", "1/4"}}}, {"mu=1", {{"mu", "1"}}}};

    if (name == "gamma")
    {
        c.swept_parameter = "gamma_sq";
        c.values = linspace_step(0.0, 1.0, 0.05);
        c.schemes = {SchemeId::OMA, SchemeId::NomaPunct, SchemeId::IdealOMA, SchemeId::IdealPunct};
        c.variants = mu_variants;
    }
    else if (name == "q")
    {
        c.swept_parameter = "q";
        for (int i = 0; i <= 16; ++i)
            c.values.push_back(std::pow(10.0, -4.0 + 0.25 * i));
        c.values.back() = 1.0;
        c.base.mu = Rational(1, 1);
        c.base.gamma = 1.0;
        c.base.rho = 0.0;
        c.schemes = {SchemeId::OMA, SchemeId::NomaPunct, SchemeId::NomaTIN, SchemeId::NomaSIC};
    }
    else if (name == "rho")
    {
        c.swept_parameter = "rho_sq";
        c.values = linspace_step(0.0, 1.0, 0.1);
        c.base.q = 0.3;
        c.base.alpha = std::sqrt(0.4);
        c.base.gamma = std::sqrt(0.5);
        c.base.mu = Rational(1, 1);
        c.schemes = {SchemeId::NomaSIC, SchemeId::NomaTIN, SchemeId::IdealSIC};
        if (pu_db_list.empty())
            throw config_error("rho preset: P_U list must be non-empty");
        for (double pu : pu_db_list)
            c.variants.push_back({"P_U_db=" + format_g(pu, 6), {{"P_U_db", format_g(pu, 17)}}});
    }
    else if (name == "latency")
    {
        c.swept_parameter = "L_U";
        for (int l = 1; l <= 8; ++l)
            c.values.push_back(l);
        c.base.gamma = std::sqrt(0.5);
        c.schemes = {SchemeId::OMA, SchemeId::NomaPunct};
        c.variants = mu_variants;
    }
    else
        throw config_error("unknown preset '" + name + "' (expected gamma, q, rho or latency)");
    return c;
}

// ---- evaluation -------------------------------------------------------------

struct SweepRow
{
    double swept_value = 0.0;
    std::string scheme;
    double R_U = 0.0;
    double R_B = 0.0;
    bool feasible = false;
    double eps_U_D = 0.0;
    double mc_std_err = 0.0;
};

struct SweepResult
{
    std::string swept_param;
    std::uint64_t seed = 0;
    std::vector<SweepRow> rows;
};

/// Parameters of one sweep point: base, then the variant overrides, then the swept value.
inline SystemParams point_params(const SweepConfig &c, std::size_t value_index, const Variant *variant)
{
    SystemParams p = c.base;
    if (variant)
        for (const auto &[k, v] : variant->overrides)
            set_param(p, k, v);
    set_param(p, c.swept_parameter, c.values[value_index]);
    return p;
}

/// One row: URLLC rate of the scheme's access mode plus its eMBB rate.
inline SweepRow evaluate_point(const SystemParams &p, SchemeId id, const ExpectationPolicy &policy)
{
    const auto &si = info(id);
    SweepRow row;
    row.scheme = si.name;
    const auto mode = access_mode(si.embb);
    if (mode == AccessMode::OMA && p.L_U < 2)
        return row; // OMA is undefined with L_U = 1: reported as an infeasible zero row

    const auto u = urllc_rate(p, mode);
    row.R_U = u.rate;
    row.feasible = u.feasible;
    row.eps_U_D = u.eps_U_D;

    const FronthaulModel fh = si.ideal ? ideal_fronthaul() : analog_fronthaul(p, mode);
    const auto b = embb_rate(p, si.embb, policy, fh, u.eps_U_D);
    row.R_B = b.value;
    row.mc_std_err = b.std_err;
    return row;
}

/// Evaluates every (value, variant, scheme) point on up to `jobs` threads.
/// Rows are placed by task index and then ordered by swept value, so the
/// output does not depend on scheduling.
inline SweepResult run_sweep(const SweepConfig &c, unsigned jobs = 1)
{
    validate(c);
    const std::vector<Variant> no_variant{Variant{}};
    const auto &variants = c.variants.empty() ? no_variant : c.variants;

    struct Task
    {
        std::size_t value, variant, scheme;
    };
    std::vector<Task> tasks;
    for (std::size_t i = 0; i < c.values.size(); ++i)
        for (std::size_t v = 0; v < variants.size(); ++v)
            for (std::size_t s = 0; s < c.schemes.size(); ++s)
                tasks.push_back({i, v, s});

    // validate every point before spending time on any of them
    for (std::size_t i = 0; i < c.values.size(); ++i)
        for (const auto &v : variants)
            try
            {
                validate(point_params(c, i, c.variants.empty() ? nullptr : &v));
            }
            catch (const std::invalid_argument &e)
            {
                throw config_error("point " + c.swept_parameter + "=" + format_g(c.values[i]) + ": " + e.what());
            }
            catch (const std::domain_error &e)
            {
                throw config_error("point " + c.swept_parameter + "=" + format_g(c.values[i]) + ": " + e.what());
            }

    std::vector<SweepRow> rows(tasks.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t t; (t = next.fetch_add(1)) < tasks.size();)
        {
            try
            {
                const auto &task = tasks[t];
                const Variant *var = c.variants.empty() ? nullptr : &variants[task.variant];
                auto row = evaluate_point(point_params(c, task.value, var), c.schemes[task.scheme], c.policy);
                row.swept_value = c.values[task.value];
                if (var)
                    row.scheme += "/" + var->label;
                rows[t] = std::move(row);
            }
            catch (...)
            {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        }
    };
    jobs = std::max(1u, std::min<unsigned>(jobs, unsigned(tasks.size())));
    if (jobs == 1)
        worker();
    else
    {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j)
            pool.emplace_back(worker);
        for (auto &th : pool)
            th.join();
    }
    if (failure)
        std::rethrow_exception(failure);

    std::stable_sort(rows.begin(), rows.end(), [&](const SweepRow &a, const SweepRow &b) {
        const bool up = c.values.size() < 2 || c.values[1] > c.values[0];
        if (a.swept_value != b.swept_value)
            return up ? a.swept_value < b.swept_value : a.swept_value > b.swept_value;
        return a.scheme < b.scheme;
    });
    return SweepResult{c.swept_parameter, c.policy.seed, std::move(rows)};
}

// ---- output -----------------------------------------------------------------

inline void write_csv(std::ostream &os, const SweepResult &r)
{
    os << csv_header << "\n";
    for (const auto &row : r.rows)
        os << r.swept_param << "," << format_g(row.swept_value) << "," << row.scheme << "," << format_g(row.R_U)
           << "," << format_g(row.R_B) << "," << (row.feasible ? 1 : 0) << "," << format_g(row.eps_U_D) << ","
           << format_g(row.mc_std_err) << "," << r.seed << "\n";
}

inline std::string to_csv(const SweepResult &r)
{
    std::ostringstream os;
    write_csv(os, r);
    return os.str();
}

/// gnuplot data: one index block per scheme, columns swept_value R_U R_B.
inline void write_plot_data(std::ostream &os, const SweepResult &r)
{
    std::vector<std::string> names;
    for (const auto &row : r.rows)
        if (std::find(names.begin(), names.end(), row.scheme) == names.end())
            names.push_back(row.scheme);
    std::sort(names.begin(), names.end());
    for (std::size_t i = 0; i < names.size(); ++i)
    {
        os << (i ? "\n\n" : "") << "# " << names[i] << "\n# " << r.swept_param << " R_U_bits R_B_bits\n";
        for (const auto &row : r.rows)
            if (row.scheme == names[i])
                os << format_g(row.swept_value) << " " << format_g(row.R_U) << " " << format_g(row.R_B) << "\n";
    }
}

inline void write_file(const std::string &path, const std::string &content)
{
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw io_error("cannot open '" + path + "' for writing");
    f << content;
    if (!f)
        throw io_error("write to '" + path + "' failed");
}

} // namespace cran

#endif

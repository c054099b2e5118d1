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

// cran_sim: command-line front end.
//
//   cran_sim sweep  --preset gamma|q|rho|latency | --config file.json  [--out file.csv] ...
//   cran_sim verify [--seed N] [--tuples 50]
//   cran_sim rate   --scheme NOMA-TIN [--set key=value ...]
//
// Exit codes: 0 success, 1 validation error, 2 numerical failure, 3 I/O error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cran/config.hpp"
#include "cran/cran.hpp"

namespace
{

enum Exit : int
{
    ok = 0,
    validation = 1,
    numerical = 2,
    io = 3
};

std::optional<std::uint64_t> env_seed()
{
    const char *s = std::getenv("CRAN_SIM_SEED");
    if (!s || !*s)
        return std::nullopt;
    try
    {
        return std::stoull(s);
    }
    catch (const std::exception &)
    {
        throw cran::config_error(std::string("CRAN_SIM_SEED is not an unsigned integer: '") + s + "'");
    }
}

void apply_sets(cran::SystemParams &p, const std::vector<std::string> &sets)
{
    for (const auto &kv : sets)
    {
        const auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw cran::config_error("--set expects key=value, got '" + kv + "'");
        cran::set_param(p, kv.substr(0, eq), kv.substr(eq + 1));
    }
}

struct SweepArgs
{
    std::string preset, config, out, plot;
    std::optional<std::uint64_t> seed;
    unsigned jobs = 1;
    std::vector<std::string> sets;
    std::vector<double> pu_db;
    std::optional<std::uint64_t> samples;
    bool monte_carlo = false;
};

int run_sweep_cmd(const SweepArgs &a)
{
    cran::SweepConfig cfg;
    if (!a.config.empty())
        cfg = cran::load_sweep_config(a.config);
    else if (!a.preset.empty())
        cfg = cran::preset(a.preset, a.pu_db.empty() ? std::vector<double>{10.0} : a.pu_db);
    else
        throw cran::config_error("sweep needs --preset or --config");

    apply_sets(cfg.base, a.sets);
    if (a.seed)
        cfg.policy.seed = *a.seed;
    else if (a.config.empty())
        if (auto s = env_seed())
            cfg.policy.seed = *s;
    if (a.monte_carlo)
        cfg.policy.strategy = cran::ExpectationStrategy::MonteCarlo;
    if (a.samples)
        cfg.policy.sample_count = *a.samples;
    if (!a.out.empty())
        cfg.output_path = a.out;

    const auto result = cran::run_sweep(cfg, a.jobs);
    const auto csv = cran::to_csv(result);
    if (cfg.output_path.empty())
        std::cout << csv;
    else
    {
        cran::write_file(cfg.output_path, csv);
        nlohmann::json meta = {{"config", cran::to_json(cfg)},
                               {"seed", cfg.policy.seed},
                               {"tool_version", cran::tool_version},
                               {"rows", result.rows.size()}};
        cran::write_file(cfg.output_path + ".meta.json", meta.dump(2) + "\n");
    }
    if (!a.plot.empty())
    {
        std::ostringstream os;
        cran::write_plot_data(os, result);
        cran::write_file(a.plot, os.str());
    }
    return ok;
}

int run_verify_cmd(std::uint64_t seed, int tuples, bool as_json)
{
    cran::oracle::VerifyOptions opt;
    opt.seed = seed;
    opt.random_tuples = tuples;
    const auto reports = cran::oracle::verify_all(cran::oracle::verification_defaults(), opt);
    bool all = true;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto &r : reports)
    {
        all = all && r.passed;
        if (as_json)
            arr.push_back({{"check_name", r.check_name},
                           {"max_abs_error", r.max_abs_error},
                           {"max_rel_error", r.max_rel_error},
                           {"instances_tested", r.instances_tested},
                           {"passed", r.passed},
                           {"tolerance", r.tolerance}});
        else
            std::printf("%-22s %s  max_rel=%.3e max_abs=%.3e tol=%.3e instances=%llu\n", r.check_name.c_str(),
                        r.passed ? "PASS" : "FAIL", r.max_rel_error, r.max_abs_error, r.tolerance,
                        (unsigned long long)r.instances_tested);
    }
    if (as_json)
        std::cout << arr.dump(2) << "\n";
    return all ? ok : numerical;
}

int run_rate_cmd(const std::string &scheme_name, const std::vector<std::string> &sets,
                 std::optional<std::uint64_t> seed, bool monte_carlo, std::optional<std::uint64_t> samples)
{
    cran::SystemParams p;
    apply_sets(p, sets);
    const auto id = cran::parse_scheme(scheme_name);
    const auto &si = cran::info(id);
    const auto mode = cran::access_mode(si.embb);
    cran::validate(p, mode);

    cran::ExpectationPolicy policy;
    if (seed)
        policy.seed = *seed;
    else if (auto s = env_seed())
        policy.seed = *s;
    if (monte_carlo)
        policy.strategy = cran::ExpectationStrategy::MonteCarlo;
    if (samples)
        policy.sample_count = *samples;

    const auto u = cran::urllc_rate(p, mode);
    const auto fh = si.ideal ? cran::ideal_fronthaul() : cran::analog_fronthaul(p, mode);
    const auto b = cran::embb_rate(p, si.embb, policy, fh, u.eps_U_D);

    nlohmann::json out = {{"scheme", si.name},
                          {"R_U", u.rate},
                          {"R_B", b.value},
                          {"urllc_feasible", u.feasible},
                          {"eps_U_D", u.eps_U_D},
                          {"diagnostics",
                           {{"S_U", u.sinr},
                            {"V", u.dispersion},
                            {"lambda_sq", cran::compute_lambda_sq(p, mode)},
                            {"blockage_prob", u.blockage_prob},
                            {"mc_std_err", b.std_err},
                            {"exact_expectation", b.exact},
                            {"jitter_applied", b.jittered},
                            {"seed", policy.seed}}}};
    std::cout << out.dump(2) << "\n";
    return ok;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Achievable URLLC/eMBB rates for analog-fronthaul C-RAN uplink"};
    app.require_subcommand(1);

    SweepArgs sw;
    auto *sweep = app.add_subcommand("sweep", "Run a parameter sweep and write CSV");
    sweep->add_option("--preset", sw.preset, "gamma | q | rho | latency");
    sweep->add_option("--config", sw.config, "JSON sweep configuration");
    sweep->add_option("--out", sw.out, "CSV output path (stdout when omitted)");
    sweep->add_option("--plot-data", sw.plot, "Also write gnuplot data blocks to this path");
    sweep->add_option("--seed", sw.seed, "Monte Carlo seed (default: config, then CRAN_SIM_SEED, then 1)");
    sweep->add_option("--jobs", sw.jobs, "Worker threads")->check(CLI::PositiveNumber);
    sweep->add_option("--set", sw.sets, "Override a base parameter, key=value (repeatable)");
    sweep->add_option("--pu-db-list", sw.pu_db, "P_U values in dB for the rho preset")->delimiter(',');
    sweep->add_flag("--monte-carlo", sw.monte_carlo, "Force Monte Carlo expectations");
    sweep->add_option("--samples", sw.samples, "Monte Carlo sample count");

    std::optional<std::uint64_t> vseed;
    int tuples = 50;
    bool vjson = false;
    auto *verify = app.add_subcommand("verify", "Run the full-dimensional oracle checks");
    verify->add_option("--seed", vseed, "Seed for random instances");
    verify->add_option("--tuples", tuples, "Number of random parameter tuples")->check(CLI::NonNegativeNumber);
    verify->add_flag("--json", vjson, "Print reports as JSON");

    std::string scheme = "NOMA-punct";
    std::vector<std::string> rsets;
    std::optional<std::uint64_t> rseed, rsamples;
    bool rmc = false;
    auto *rate = app.add_subcommand("rate", "Evaluate one parameter point and print it as JSON");
    rate->add_option("--scheme", scheme, "OMA | NOMA-punct | NOMA-TIN | NOMA-SIC | ideal-*");
    rate->add_option("--set", rsets, "Parameter override key=value (repeatable)");
    rate->add_option("--seed", rseed, "Monte Carlo seed");
    rate->add_flag("--monte-carlo", rmc, "Force Monte Carlo expectation");
    rate->add_option("--samples", rsamples, "Monte Carlo sample count");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int rc = app.exit(e);
        return rc == 0 ? ok : validation;
    }

    try
    {
        if (*sweep)
            return run_sweep_cmd(sw);
        if (*verify)
            return run_verify_cmd(vseed ? *vseed : env_seed().value_or(1), tuples, vjson);
        return run_rate_cmd(scheme, rsets, rseed, rmc, rsamples);
    }
    catch (const cran::numerical_error &e)
    {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return numerical;
    }
    catch (const cran::io_error &e)
    {
        std::cerr << "I/O error: " << e.what() << "\n";
        return io;
    }
    catch (const std::invalid_argument &e)
    {
        std::cerr << "invalid configuration: " << e.what() << "\n";
        return validation;
    }
    catch (const std::domain_error &e)
    {
        std::cerr << "invalid configuration: " << e.what() << "\n";
        return validation;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return numerical;
    }
}

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

#ifndef CRAN_CONFIG_HPP
#define CRAN_CONFIG_HPP

// JSON sweep configuration. Requires nlohmann/json ("json.hpp") on the include path.

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "sweep.hpp"

namespace cran
{

namespace detail
{
// 1-based line of the first occurrence of "key" in the document, 0 if absent.
inline std::size_t line_of_key(const std::string &doc, const std::string &key)
{
    const auto pos = doc.find("\"" + key + "\"");
    if (pos == std::string::npos)
        return 0;
    return std::size_t(std::count(doc.begin(), doc.begin() + std::ptrdiff_t(pos), '\n')) + 1;
}

inline std::size_t line_of_offset(const std::string &doc, std::size_t byte)
{
    byte = std::min(byte, doc.size());
    return std::size_t(std::count(doc.begin(), doc.begin() + std::ptrdiff_t(byte), '\n')) + 1;
}

inline std::string scalar_text(const nlohmann::json &v)
{
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_number_integer())
        return std::to_string(v.get<long long>());
    if (v.is_number())
        return format_g(v.get<double>(), 17);
    throw config_error("expected a number or string");
}
} // namespace detail

/// Parses a sweep configuration document. Field names mirror SweepConfig:
///
///   {
///     "preset": "gamma",                  optional starting point
///     "base": {"M": 6, "mu": "1/4", "alpha_sq": 0.2, "P_B_db": 7, ...},
///     "swept_parameter": "gamma_sq",
///     "values": [0, 0.5, 1],
///     "schemes": ["OMA", "NOMA-punct"],
///     "variants": [{"label": "mu=1", "set": {"mu": "1"}}],
///     "policy": {"strategy": "exact" | "monte_carlo", "sample_count": 100000,
///                "seed": 1, "exact_state_limit": 59049},
///     "output_path": "out.csv"
///   }
///
/// Errors carry the line of the offending key.
inline SweepConfig parse_sweep_config(const std::string &doc)
{
    nlohmann::json j;
    try
    {
        j = nlohmann::json::parse(doc);
    }
    catch (const nlohmann::json::parse_error &e)
    {
        throw config_error(std::string("malformed JSON: ") + e.what(), detail::line_of_offset(doc, e.byte));
    }
    if (!j.is_object())
        throw config_error("top level must be a JSON object", 1);

    auto fail = [&](const std::string &key, const std::string &msg) -> config_error {
        return config_error(key + ": " + msg, detail::line_of_key(doc, key));
    };

    static const char *top_keys[] = {"preset", "base", "swept_parameter", "values", "schemes",
                                     "variants", "policy", "output_path", "P_U_db_list"};
    for (const auto &[k, _] : j.items())
        if (std::find_if(std::begin(top_keys), std::end(top_keys), [&](const char *t) { return k == t; }) ==
            std::end(top_keys))
            throw fail(k, "unknown field");

    SweepConfig c;
    try
    {
        if (j.contains("preset"))
        {
            std::vector<double> pu{10.0};
            if (j.contains("P_U_db_list"))
                pu = j.at("P_U_db_list").get<std::vector<double>>();
            c = preset(j.at("preset").get<std::string>(), pu);
        }
    }
    catch (const std::exception &e)
    {
        throw fail("preset", e.what());
    }

    if (j.contains("base"))
    {
        if (!j["base"].is_object())
            throw fail("base", "must be an object");
        for (const auto &[k, v] : j["base"].items())
        {
            try
            {
                set_param(c.base, k, detail::scalar_text(v));
            }
            catch (const std::exception &e)
            {
                throw fail(k, e.what());
            }
        }
    }
    try
    {
        if (j.contains("swept_parameter"))
            c.swept_parameter = j["swept_parameter"].get<std::string>();
    }
    catch (const std::exception &e)
    {
        throw fail("swept_parameter", e.what());
    }
    if (!is_known_param(c.swept_parameter))
        throw fail("swept_parameter", "unknown parameter '" + c.swept_parameter + "'");
    try
    {
        if (j.contains("values"))
            c.values = j["values"].get<std::vector<double>>();
    }
    catch (const std::exception &e)
    {
        throw fail("values", std::string("must be a list of numbers (") + e.what() + ")");
    }
    if (j.contains("schemes"))
    {
        c.schemes.clear();
        try
        {
            for (const auto &s : j["schemes"])
                c.schemes.push_back(parse_scheme(s.get<std::string>()));
        }
        catch (const std::exception &e)
        {
            throw fail("schemes", e.what());
        }
    }
    if (j.contains("variants"))
    {
        c.variants.clear();
        try
        {
            for (const auto &v : j["variants"])
            {
                Variant var{v.at("label").get<std::string>(), {}};
                for (const auto &[k, val] : v.at("set").items())
                    var.overrides.emplace_back(k, detail::scalar_text(val));
                c.variants.push_back(std::move(var));
            }
        }
        catch (const std::exception &e)
        {
            throw fail("variants", e.what());
        }
    }
    if (j.contains("policy"))
    {
        try
        {
            const auto &p = j["policy"];
            for (const auto &[k, _] : p.items())
                if (k != "strategy" && k != "sample_count" && k != "seed" && k != "exact_state_limit")
                    throw fail(k, "unknown policy field");
            if (p.contains("strategy"))
            {
                const auto s = p["strategy"].get<std::string>();
                if (s == "exact")
                    c.policy.strategy = ExpectationStrategy::ExactEnumeration;
                else if (s == "monte_carlo")
                    c.policy.strategy = ExpectationStrategy::MonteCarlo;
                else
                    throw fail("strategy", "expected 'exact' or 'monte_carlo'");
            }
            if (p.contains("sample_count"))
                c.policy.sample_count = p["sample_count"].get<std::uint64_t>();
            if (p.contains("seed"))
                c.policy.seed = p["seed"].get<std::uint64_t>();
            if (p.contains("exact_state_limit"))
                c.policy.exact_state_limit = p["exact_state_limit"].get<std::uint64_t>();
        }
        catch (const config_error &)
        {
            throw;
        }
        catch (const std::exception &e)
        {
            throw fail("policy", e.what());
        }
    }
    if (j.contains("output_path"))
        c.output_path = j["output_path"].get<std::string>();

    try
    {
        validate(c);
    }
    catch (const config_error &e)
    {
        const std::string msg = e.what();
        const auto key = msg.substr(0, msg.find(':'));
        throw config_error(msg, detail::line_of_key(doc, key));
    }
    return c;
}

inline SweepConfig load_sweep_config(const std::string &path)
{
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw io_error("cannot read config '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_sweep_config(ss.str());
}

/// Config echo for the metadata sidecar.
inline nlohmann::json to_json(const SweepConfig &c)
{
    const auto &b = c.base;
    nlohmann::json base = {{"M", b.M}, {"n_F", b.n_F}, {"n_T", b.n_T}, {"l_S", b.l_S}, {"mu", b.mu.str()},
                           {"alpha_sq", b.alpha * b.alpha}, {"beta_sq", b.beta_sq}, {"gamma_sq", b.gamma * b.gamma},
                           {"P_B_db", linear_to_db(b.P_B)}, {"P_U_db", linear_to_db(b.P_U)},
                           {"P_c_db", linear_to_db(b.P_c)}, {"q", b.q}, {"eps_U", b.eps_U}, {"L_U", b.L_U},
                           {"rho_sq", b.rho * b.rho}};
    nlohmann::json schemes = nlohmann::json::array();
    for (auto s : c.schemes)
        schemes.push_back(to_string(s));
    nlohmann::json variants = nlohmann::json::array();
    for (const auto &v : c.variants)
    {
        nlohmann::json set = nlohmann::json::object();
        for (const auto &[k, val] : v.overrides)
            set[k] = val;
        variants.push_back({{"label", v.label}, {"set", set}});
    }
    return {{"base", base},
            {"swept_parameter", c.swept_parameter},
            {"values", c.values},
            {"schemes", schemes},
            {"variants", variants},
            {"policy",
             {{"strategy", c.policy.strategy == ExpectationStrategy::MonteCarlo ? "monte_carlo" : "exact"},
              {"sample_count", c.policy.sample_count},
              {"seed", c.policy.seed},
              {"exact_state_limit", c.policy.exact_state_limit}}},
            {"output_path", c.output_path}};
}

} // namespace cran

#endif

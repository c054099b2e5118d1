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

// Minimal library usage: URLLC and eMBB rates at the default operating point
// for every access scheme.

#include <cstdio>

#include "cran/cran.hpp"

int main()
{
    cran::SystemParams p; // M = 6, n_F = 60, l_S = 4, mu = 1, P_B = P_c = 7 dB, P_U = 10 dB
    p.mu = cran::Rational(1, 4);

    const auto oma_u = cran::urllc_rate(p, cran::AccessMode::OMA);
    const auto noma_u = cran::urllc_rate(p, cran::AccessMode::NOMA);

    std::printf("URLLC  OMA  %.4f bits/symbol (eps_D = %.4g)\n", oma_u.rate, oma_u.eps_U_D);
    std::printf("URLLC  NOMA %.4f bits/symbol (SINR = %.4f)\n", noma_u.rate, noma_u.sinr);
    std::printf("eMBB   OMA        %.4f\n", cran::oma_embb_rate(p).value);
    std::printf("eMBB   NOMA-punct %.4f\n", cran::noma_puncturing_rate(p).value);
    std::printf("eMBB   NOMA-TIN   %.4f\n", cran::noma_tin_rate(p).value);
    std::printf("eMBB   NOMA-SIC   %.4f\n", cran::noma_sic_rate(p, noma_u.eps_U_D).value);
    return 0;
}

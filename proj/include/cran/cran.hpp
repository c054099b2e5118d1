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

#ifndef CRAN_CRAN_HPP
#define CRAN_CRAN_HPP

#include "channel.hpp"
#include "embb.hpp"
#include "errors.hpp"
#include "interference.hpp"
#include "linalg.hpp"
#include "oracle.hpp"
#include "params.hpp"
#include "qfunc.hpp"
#include "sweep.hpp"
#include "urllc.hpp"

#endif

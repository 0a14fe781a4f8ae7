// SPDX-License-Identifier: Apache-2.0
//
// xband - cross-band spatial channel similarity toolkit
// Copyright (C) 2026 The xband authors
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

#pragma once

#include "xband/pas.hpp"

namespace xband
{
    struct PspResult
    {
        double d_tv = 0.0;          // total variation distance, [0, 1]
        double psp_percent = 100.0; // (1 - d_tv) * 100
    };

    // Half the L1 distance between two densities on the same grid (Riemann sum with the grid step)
    double total_variation(const NormalizedPas &a, const NormalizedPas &b);

    PspResult psp(const NormalizedPas &a, const NormalizedPas &b);

    // Filters both channels, normalizes and compares them
    PspResult psp(const BandChannel &low, const BandChannel &high,
                  const Beampattern &pattern_low, const Beampattern &pattern_high,
                  const AngularGrid &grid);
}

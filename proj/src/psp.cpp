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

#include "xband/psp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace xband
{
    double total_variation(const NormalizedPas &a, const NormalizedPas &b)
    {
        if (!(a.grid == b.grid) || a.density.size() != b.density.size())
            throw std::invalid_argument("Cannot compare PAS on different angular grids.");

        double sum = 0.0;
        for (std::size_t k = 0; k < a.density.size(); ++k)
            sum += std::abs(a.density[k] - b.density[k]);
        return std::clamp(0.5 * sum * a.grid.step_deg(), 0.0, 1.0);
    }

    PspResult psp(const NormalizedPas &a, const NormalizedPas &b)
    {
        const double d = total_variation(a, b);
        return {d, (1.0 - d) * 100.0};
    }

    PspResult psp(const BandChannel &low, const BandChannel &high,
                  const Beampattern &pattern_low, const Beampattern &pattern_high,
                  const AngularGrid &grid)
    {
        return psp(normalize_pas(filter_pas(low, pattern_low, grid)),
                   normalize_pas(filter_pas(high, pattern_high, grid)));
    }
}

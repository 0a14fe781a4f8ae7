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

#include "xband/pas.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace xband
{
    AngularGrid::AngularGrid(double step_deg)
        : step_(step_deg), n_(0)
    {
        if (!(step_deg > 0.0 && step_deg <= 10.0))
            throw std::invalid_argument("Grid step must be in (0, 10] degrees.");
        const double count = 360.0 / step_deg;
        const double n = std::round(count);
        if (std::abs(count - n) > 1e-9)
            throw std::invalid_argument("Grid step must divide 360 degrees.");
        n_ = std::size_t(n);
    }

    std::optional<std::size_t> AngularGrid::index_of(double angle_deg) const
    {
        const double a = normalize_angle_deg(angle_deg);
        auto k = std::size_t(std::llround(a / step_)) % n_;
        const double diff = std::abs(wrap_offset_deg(a - angle(k)));
        if (diff > 1e-9)
            return std::nullopt;
        return k;
    }

    double FilteredPas::max_value() const
    {
        return values[argmax()];
    }

    std::size_t FilteredPas::argmax() const
    {
        // max_element returns the first maximum, i.e. the smallest angle
        return std::size_t(std::max_element(values.begin(), values.end()) - values.begin());
    }

    double NormalizedPas::total_mass() const
    {
        double sum = 0.0;
        for (double d : density)
            sum += d;
        return sum * grid.step_deg();
    }

    FilteredPas filter_pas(const BandChannel &channel, const Beampattern &pattern, const AngularGrid &grid)
    {
        FilteredPas out{grid, std::vector<double>(grid.size(), 0.0), channel.frequency_ghz()};
        for (std::size_t k = 0; k < grid.size(); ++k)
        {
            const double alpha = grid.angle(k);
            double sum = 0.0;
            // fixed ray order per grid point keeps the result bit-reproducible
            for (const auto &ray : channel.rays())
                sum += ray.power() * gain_at(pattern, wrap_offset_deg(alpha - ray.aoa_deg()));
            out.values[k] = sum;
        }
        return out;
    }

    NormalizedPas normalize_pas(const FilteredPas &pas)
    {
        double sum = 0.0;
        for (double v : pas.values)
            sum += v;
        const double mass = sum * pas.grid.step_deg();
        if (!(mass > 0.0) || !std::isfinite(mass))
            throw std::invalid_argument("Filtered PAS has no positive finite mass.");

        NormalizedPas out{pas.grid, std::vector<double>(pas.values.size())};
        for (std::size_t k = 0; k < pas.values.size(); ++k)
            out.density[k] = pas.values[k] / mass;
        return out;
    }
}

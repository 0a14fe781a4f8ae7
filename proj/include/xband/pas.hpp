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

#include "xband/beampattern.hpp"
#include "xband/channel.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace xband
{
    // Circular azimuth grid {0, step, ..., 360 - step}
    class AngularGrid
    {
    public:
        explicit AngularGrid(double step_deg = 1.0);

        double step_deg() const { return step_; }
        std::size_t size() const { return n_; }
        double angle(std::size_t k) const { return double(k) * step_; }

        // Index of a grid angle, or nullopt if the angle is not on the grid (1e-9 deg tolerance)
        std::optional<std::size_t> index_of(double angle_deg) const;

        bool operator==(const AngularGrid &other) const { return n_ == other.n_; }

    private:
        double step_;
        std::size_t n_;
    };

    // Received power versus steering angle, B(alpha)
    struct FilteredPas
    {
        AngularGrid grid;
        std::vector<double> values;
        double source_frequency_ghz = 0.0;

        double max_value() const;
        // Index of the largest value; ties resolve to the smallest angle
        std::size_t argmax() const;
    };

    // Unit-mass version of a FilteredPas (density per degree)
    struct NormalizedPas
    {
        AngularGrid grid;
        std::vector<double> density;

        double total_mass() const;
    };

    FilteredPas filter_pas(const BandChannel &channel, const Beampattern &pattern, const AngularGrid &grid);

    NormalizedPas normalize_pas(const FilteredPas &pas);
}

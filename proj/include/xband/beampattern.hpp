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

#include <string>
#include <vector>

namespace xband
{
    struct PatternSample
    {
        double offset_deg;
        double gain_db;
    };

    // Azimuth antenna gain pattern used as an angular filter.
    // Gain is normalized to 0 dB at offset 0 and never exceeds it.
    class Beampattern
    {
    public:
        enum class Kind
        {
            gpp3,
            ula,
            tabulated
        };

        // Parabolic main lobe clipped at -a_max_db (3GPP TR 38.901 horizontal cut)
        static Beampattern gpp3(double hpbw_deg, double a_max_db);

        // Bore-sight array factor of an N-element uniform linear array with isotropic elements.
        // The back half plane (|offset| > 90 deg) is held at backplane_floor_db.
        static Beampattern ula(int n_elements, double spacing_wavelengths, double backplane_floor_db);

        // Linear interpolation in dB between samples, circular across +-180 deg.
        // The pattern is re-normalized so that offset 0 reads 0 dB; samples above that are rejected.
        static Beampattern tabulated(std::vector<PatternSample> samples);

        Kind kind() const { return kind_; }

        double gain_db(double offset_deg) const;
        double gain(double offset_deg) const;

        // Ratio between the peak and the smallest gain the pattern can return, in dB
        double peak_to_min_db() const;

        // Canonical text form, e.g. "gpp3:hpbw=10,amax=30"
        std::string describe() const;

        double hpbw_param() const { return hpbw_deg_; }
        double a_max_db() const { return a_max_db_; }
        int n_elements() const { return n_elements_; }
        double spacing_wavelengths() const { return spacing_; }
        double backplane_floor_db() const { return floor_db_; }
        const std::vector<PatternSample> &samples() const { return samples_; }

    private:
        Beampattern() = default;

        double ula_front_db(double offset_deg) const;
        double tabulated_db(double offset_deg) const;

        Kind kind_ = Kind::gpp3;
        double hpbw_deg_ = 0.0;
        double a_max_db_ = 0.0;
        int n_elements_ = 0;
        double spacing_ = 0.0;
        double floor_db_ = 0.0;
        std::vector<PatternSample> samples_;
    };

    // Numeric floor applied to the ULA array factor so that exact nulls stay strictly positive
    inline constexpr double ula_null_floor_db = -300.0;

    Beampattern synth_3gpp(double hpbw_deg, double a_max_db);
    Beampattern synth_ula(int n_elements, double spacing_wavelengths = 0.5, double backplane_floor_db = -60.0);

    // Linear gain at an arbitrary offset (wrapped into (-180, 180])
    double gain_at(const Beampattern &pattern, double offset_deg);

    // Full -3 dB width of the main lobe around offset 0, in degrees
    double hpbw(const Beampattern &pattern);

    // Samples the pattern at offsets -180, -180 + step, ..., 180 (step must divide 360)
    std::vector<PatternSample> tabulate(const Beampattern &pattern, double step_deg);
}

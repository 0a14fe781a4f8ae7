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
#include "xband/psp.hpp"

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace xband
{
    enum class Band
    {
        low,
        high
    };

    enum class SelectionMethod
    {
        m1, // local maxima of B(alpha) within delta_th of the peak
        m2  // power-ordered candidates gated by CFR correlation
    };

    std::string to_string(SelectionMethod m);
    SelectionMethod parse_method(const std::string &s);

    // Best beam directions found on one band. Angles are grid angles sorted ascending.
    struct DirectionSet
    {
        std::vector<double> angles;
        Band band = Band::low;
        SelectionMethod method = SelectionMethod::m1;
        double threshold_db = 10.0;

        std::size_t size() const { return angles.size(); }
    };

    struct SimilarityConfig
    {
        double delta_th_db = 10.0;
        double delta_p_db = -30.0;
        SelectionMethod method = SelectionMethod::m1;
        double m2_correlation_threshold = 0.7;
        int m2_frequency_points = 101;
        double m2_bandwidth_ghz = 2.0;
        bool include_psp = false;

        // Throws std::invalid_argument on out-of-range fields
        void validate() const;
    };

    struct SimilarityReport
    {
        std::string link_id;
        double power_ratio_db = 0.0;
        int n_false = 0;
        int card_low = 0;
        int card_high = 0;
        std::vector<double> low_directions;
        std::vector<double> high_directions;
        std::optional<PspResult> psp;
    };

    DirectionSet select_m1(const FilteredPas &pas, double delta_th_db, Band band = Band::low);

    // Beam-weighted channel frequency response when steering to steer_deg.
    // Samples span [f_c - BW/2, f_c + BW/2] around the channel carrier.
    std::vector<std::complex<double>> beam_cfr(const BandChannel &channel, const Beampattern &pattern,
                                               double steer_deg, int freq_points, double bandwidth_ghz);

    // |<a, b>| / (|a| |b|)
    double cfr_correlation(const std::vector<std::complex<double>> &a, const std::vector<std::complex<double>> &b);

    DirectionSet select_m2(const BandChannel &channel, const Beampattern &pattern, const AngularGrid &grid,
                           const SimilarityConfig &config, Band band = Band::low);

    // Selection dispatch on config.method
    DirectionSet select_directions(const BandChannel &channel, const FilteredPas &pas, const Beampattern &pattern,
                                   const SimilarityConfig &config, Band band);

    // 10 lg of the high-band power collected over a_low relative to a_high
    double power_ratio(const DirectionSet &a_low, const DirectionSet &a_high, const FilteredPas &pas_high);

    // Number of a_low directions whose high-band power is more than |delta_p_db| below the best a_high direction
    int false_directions(const DirectionSet &a_low, const DirectionSet &a_high, const FilteredPas &pas_high,
                         double delta_p_db);

    SimilarityReport analyze_pair(const LinkPair &pair, const Beampattern &pattern_low,
                                  const Beampattern &pattern_high, const AngularGrid &grid,
                                  const SimilarityConfig &config);
}

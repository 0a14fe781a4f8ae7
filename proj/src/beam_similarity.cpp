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

#include "xband/beam_similarity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace xband
{
    std::string to_string(SelectionMethod m)
    {
        return m == SelectionMethod::m1 ? "m1" : "m2";
    }

    SelectionMethod parse_method(const std::string &s)
    {
        if (s == "m1" || s == "M1")
            return SelectionMethod::m1;
        if (s == "m2" || s == "M2")
            return SelectionMethod::m2;
        throw std::invalid_argument("Unknown selection method '" + s + "' (expected m1 or m2).");
    }

    void SimilarityConfig::validate() const
    {
        if (!(delta_th_db > 0.0) || !std::isfinite(delta_th_db))
            throw std::invalid_argument("delta_th_db must be positive.");
        if (!(delta_p_db < 0.0) || !std::isfinite(delta_p_db))
            throw std::invalid_argument("delta_p_db must be negative.");
        if (!(m2_correlation_threshold > 0.0 && m2_correlation_threshold < 1.0))
            throw std::invalid_argument("m2_correlation_threshold must be in (0, 1).");
        if (m2_frequency_points < 2)
            throw std::invalid_argument("m2_frequency_points must be at least 2.");
        if (!(m2_bandwidth_ghz > 0.0) || !std::isfinite(m2_bandwidth_ghz))
            throw std::invalid_argument("m2_bandwidth_ghz must be positive.");
    }

    namespace
    {
        bool within_threshold(double value, double peak, double delta_th_db)
        {
            return linear_to_db(value / peak) >= -delta_th_db;
        }

        DirectionSet make_set(const AngularGrid &grid, std::vector<std::size_t> idx, Band band,
                              SelectionMethod method, double threshold_db)
        {
            std::sort(idx.begin(), idx.end());
            idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
            DirectionSet out;
            out.band = band;
            out.method = method;
            out.threshold_db = threshold_db;
            out.angles.reserve(idx.size());
            for (auto k : idx)
                out.angles.push_back(grid.angle(k));
            return out;
        }

        std::size_t grid_index(const FilteredPas &pas, double angle_deg)
        {
            auto k = pas.grid.index_of(angle_deg);
            if (!k)
                throw std::invalid_argument("Direction " + std::to_string(angle_deg) +
                                            " deg is not on the angular grid.");
            return *k;
        }

        // Per-ray phasors exp(-j 2 pi f_m tau_p), shared by all steering angles
        struct CfrBasis
        {
            std::vector<std::vector<std::complex<double>>> phasors;

            CfrBasis(const BandChannel &channel, int freq_points, double bandwidth_ghz)
            {
                if (freq_points < 2)
                    throw std::invalid_argument("CFR needs at least 2 frequency points.");
                const double fc = channel.frequency_ghz() * 1e9;
                const double bw = bandwidth_ghz * 1e9;
                const double df = bw / double(freq_points - 1);
                phasors.reserve(channel.size());
                for (const auto &ray : channel.rays())
                {
                    std::vector<std::complex<double>> ph(static_cast<std::size_t>(freq_points));
                    for (int m = 0; m < freq_points; ++m)
                    {
                        const double f = fc - 0.5 * bw + df * double(m);
                        ph[std::size_t(m)] = std::polar(1.0, -2.0 * std::numbers::pi * f * ray.delay());
                    }
                    phasors.push_back(std::move(ph));
                }
            }

            std::vector<std::complex<double>> response(const BandChannel &channel, const Beampattern &pattern,
                                                       double steer_deg) const
            {
                const auto &rays = channel.rays();
                std::vector<std::complex<double>> h(phasors.front().size(), 0.0);
                for (std::size_t p = 0; p < rays.size(); ++p)
                {
                    const double amp = std::sqrt(rays[p].power() *
                                                 gain_at(pattern, wrap_offset_deg(steer_deg - rays[p].aoa_deg())));
                    for (std::size_t m = 0; m < h.size(); ++m)
                        h[m] += amp * phasors[p][m];
                }
                return h;
            }
        };
    }

    DirectionSet select_m1(const FilteredPas &pas, double delta_th_db, Band band)
    {
        if (!(delta_th_db > 0.0))
            throw std::invalid_argument("delta_th_db must be positive.");

        const auto &v = pas.values;
        const std::size_t n = v.size();
        const double peak = pas.max_value();

        // Start scanning at a run boundary so that no run of equal values wraps around the start
        std::size_t start = n;
        for (std::size_t k = 0; k < n; ++k)
            if (v[k] != v[(k + n - 1) % n])
            {
                start = k;
                break;
            }
        if (start == n)
            return make_set(pas.grid, {0}, band, SelectionMethod::m1, delta_th_db);

        std::vector<std::size_t> picked;
        std::size_t done = 0;
        while (done < n)
        {
            const std::size_t a = (start + done) % n;
            std::size_t len = 1;
            while (len < n && v[(a + len) % n] == v[a])
                ++len;

            const double left = v[(a + n - 1) % n];
            const double right = v[(a + len) % n];
            if (left < v[a] && right < v[a] && within_threshold(v[a], peak, delta_th_db))
                picked.push_back((a + (len - 1) / 2) % n);

            done += len;
        }
        return make_set(pas.grid, std::move(picked), band, SelectionMethod::m1, delta_th_db);
    }

    std::vector<std::complex<double>> beam_cfr(const BandChannel &channel, const Beampattern &pattern,
                                               double steer_deg, int freq_points, double bandwidth_ghz)
    {
        return CfrBasis(channel, freq_points, bandwidth_ghz).response(channel, pattern, steer_deg);
    }

    double cfr_correlation(const std::vector<std::complex<double>> &a, const std::vector<std::complex<double>> &b)
    {
        if (a.size() != b.size())
            throw std::invalid_argument("CFR length mismatch.");
        std::complex<double> inner = 0.0;
        double na = 0.0, nb = 0.0;
        for (std::size_t m = 0; m < a.size(); ++m)
        {
            inner += a[m] * std::conj(b[m]);
            na += std::norm(a[m]);
            nb += std::norm(b[m]);
        }
        return std::abs(inner) / std::sqrt(na * nb);
    }

    namespace
    {
        DirectionSet select_m2_from(const BandChannel &channel, const FilteredPas &pas, const Beampattern &pattern,
                                    const SimilarityConfig &config, Band band)
        {
            config.validate();
            const auto &v = pas.values;
            const double peak = pas.max_value();

            std::vector<std::size_t> candidates;
            for (std::size_t k = 0; k < v.size(); ++k)
                if (within_threshold(v[k], peak, config.delta_th_db))
                    candidates.push_back(k);
            // descending power; equal powers keep ascending angle order
            std::stable_sort(candidates.begin(), candidates.end(),
                             [&](std::size_t i, std::size_t j)
                             { return v[i] > v[j]; });

            const CfrBasis basis(channel, config.m2_frequency_points, config.m2_bandwidth_ghz);
            std::vector<std::size_t> accepted;
            std::vector<std::vector<std::complex<double>>> accepted_cfr;
            for (auto k : candidates)
            {
                auto h = basis.response(channel, pattern, pas.grid.angle(k));
                bool distinct = true;
                for (const auto &other : accepted_cfr)
                    if (!(cfr_correlation(h, other) < config.m2_correlation_threshold))
                    {
                        distinct = false;
                        break;
                    }
                if (distinct)
                {
                    accepted.push_back(k);
                    accepted_cfr.push_back(std::move(h));
                }
            }
            return make_set(pas.grid, std::move(accepted), band, SelectionMethod::m2, config.delta_th_db);
        }
    }

    DirectionSet select_m2(const BandChannel &channel, const Beampattern &pattern, const AngularGrid &grid,
                           const SimilarityConfig &config, Band band)
    {
        return select_m2_from(channel, filter_pas(channel, pattern, grid), pattern, config, band);
    }

    DirectionSet select_directions(const BandChannel &channel, const FilteredPas &pas, const Beampattern &pattern,
                                   const SimilarityConfig &config, Band band)
    {
        if (config.method == SelectionMethod::m1)
            return select_m1(pas, config.delta_th_db, band);
        return select_m2_from(channel, pas, pattern, config, band);
    }

    double power_ratio(const DirectionSet &a_low, const DirectionSet &a_high, const FilteredPas &pas_high)
    {
        if (a_low.angles.empty() || a_high.angles.empty())
            throw std::invalid_argument("Direction sets must not be empty.");
        double num = 0.0, den = 0.0;
        for (double a : a_low.angles)
            num += pas_high.values[grid_index(pas_high, a)];
        for (double a : a_high.angles)
            den += pas_high.values[grid_index(pas_high, a)];
        return linear_to_db(num / den);
    }

    int false_directions(const DirectionSet &a_low, const DirectionSet &a_high, const FilteredPas &pas_high,
                         double delta_p_db)
    {
        if (!(delta_p_db < 0.0))
            throw std::invalid_argument("delta_p_db must be negative.");
        if (a_high.angles.empty())
            throw std::invalid_argument("High-band direction set must not be empty.");

        double best = 0.0;
        for (double a : a_high.angles)
            best = std::max(best, pas_high.values[grid_index(pas_high, a)]);

        int count = 0;
        for (double a : a_low.angles)
            if (linear_to_db(pas_high.values[grid_index(pas_high, a)] / best) < delta_p_db)
                ++count;
        return count;
    }

    SimilarityReport analyze_pair(const LinkPair &pair, const Beampattern &pattern_low,
                                  const Beampattern &pattern_high, const AngularGrid &grid,
                                  const SimilarityConfig &config)
    {
        config.validate();

        const FilteredPas pas_low = filter_pas(pair.low(), pattern_low, grid);
        const FilteredPas pas_high = filter_pas(pair.high(), pattern_high, grid);

        const DirectionSet a_low = select_directions(pair.low(), pas_low, pattern_low, config, Band::low);
        const DirectionSet a_high = select_directions(pair.high(), pas_high, pattern_high, config, Band::high);

        SimilarityReport report;
        report.link_id = pair.link_id();
        report.power_ratio_db = power_ratio(a_low, a_high, pas_high);
        report.n_false = false_directions(a_low, a_high, pas_high, config.delta_p_db);
        report.card_low = int(a_low.size());
        report.card_high = int(a_high.size());
        report.low_directions = a_low.angles;
        report.high_directions = a_high.angles;
        if (config.include_psp)
            report.psp = psp(normalize_pas(pas_low), normalize_pas(pas_high));
        return report;
    }
}

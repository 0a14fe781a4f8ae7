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

// Brute-force reference implementations used by the tests.
// They follow the defining formulas directly and share no code with the library's numerics.

#include "xband/beampattern.hpp"
#include "xband/channel.hpp"
#include "xband/pas.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

namespace oracle
{
    inline double wrap(double deg)
    {
        double r = std::remainder(deg, 360.0); // [-180, 180]
        return r == -180.0 ? 180.0 : r;
    }

    inline double gpp3_linear(double offset_deg, double hpbw_deg, double a_max_db)
    {
        const double x = wrap(offset_deg);
        const double att = std::min(12.0 * (x / hpbw_deg) * (x / hpbw_deg), a_max_db);
        return std::exp(-att / 10.0 * std::log(10.0));
    }

    // Closed-form Dirichlet kernel instead of the explicit element sum
    inline double ula_linear(double offset_deg, int n, double spacing, double floor_db)
    {
        const double x = wrap(offset_deg);
        if (std::abs(x) > 90.0)
            return std::exp(floor_db / 10.0 * std::log(10.0));
        const double psi = 2.0 * std::numbers::pi * spacing * std::sin(x * std::numbers::pi / 180.0);
        const double den = n * std::sin(psi / 2.0);
        if (std::abs(den) < 1e-300)
            return 1.0;
        const double r = std::sin(n * psi / 2.0) / den;
        return r * r;
    }

    inline double pattern_linear(const xband::Beampattern &p, double offset_deg)
    {
        switch (p.kind())
        {
        case xband::Beampattern::Kind::gpp3:
            return gpp3_linear(offset_deg, p.hpbw_param(), p.a_max_db());
        case xband::Beampattern::Kind::ula:
            return ula_linear(offset_deg, p.n_elements(), p.spacing_wavelengths(), p.backplane_floor_db());
        default:
            return p.gain(offset_deg);
        }
    }

    // Ray-major double loop
    inline std::vector<double> filter(const xband::BandChannel &ch, const xband::Beampattern &p, double step_deg)
    {
        const std::size_t n = std::size_t(std::llround(360.0 / step_deg));
        std::vector<double> out(n, 0.0);
        for (const auto &ray : ch.rays())
            for (std::size_t k = 0; k < n; ++k)
                out[k] += ray.power() * pattern_linear(p, double(k) * step_deg - ray.aoa_deg());
        return out;
    }

    inline double total_variation(const std::vector<double> &a, const std::vector<double> &b, double step)
    {
        long double s = 0.0L;
        for (std::size_t k = 0; k < a.size(); ++k)
            s += std::fabs((long double)a[k] - (long double)b[k]);
        return double(0.5L * s * step);
    }

    // Local maxima by expanding the equal-value run around every index
    inline std::vector<std::size_t> local_maxima(const std::vector<double> &v, double delta_th_db)
    {
        const std::size_t n = v.size();
        double peak = v[0];
        for (double x : v)
            peak = std::max(peak, x);

        std::vector<std::size_t> out;
        for (std::size_t k = 0; k < n; ++k)
        {
            std::size_t left = 0, right = 0;
            while (left < n && v[(k + n - left - 1) % n] == v[k])
                ++left;
            if (left >= n)
            {
                if (k == 0)
                    out.push_back(0);
                continue;
            }
            while (v[(k + right + 1) % n] == v[k])
                ++right;
            const std::size_t len = left + right + 1;
            const std::size_t run_start = (k + n - left) % n;
            const double before = v[(run_start + n - 1) % n];
            const double after = v[(k + right + 1) % n];
            const bool is_max = before < v[k] && after < v[k];
            const bool is_center = (run_start + (len - 1) / 2) % n == k;
            if (is_max && is_center && 10.0 * std::log10(v[k] / peak) >= -delta_th_db)
                out.push_back(k);
        }
        return out;
    }

    inline std::size_t find_angle(const std::vector<double> &grid_angles, double a)
    {
        for (std::size_t k = 0; k < grid_angles.size(); ++k)
            if (grid_angles[k] == a)
                return k;
        return grid_angles.size();
    }

    inline xband::BandChannel random_channel(std::mt19937_64 &rng, int n_rays, double freq_ghz = 28.0,
                                             double dyn_range_db = 40.0)
    {
        std::uniform_real_distribution<double> angle(0.0, 360.0), pdb(-dyn_range_db, 0.0), delay(0.0, 200e-9);
        std::vector<xband::Ray> rays;
        for (int i = 0; i < n_rays; ++i)
            rays.emplace_back(std::pow(10.0, pdb(rng) / 10.0), delay(rng), angle(rng));
        return xband::BandChannel(freq_ghz, std::move(rays), "rnd");
    }

    inline double rel_err(double a, double b)
    {
        const double scale = std::max(std::abs(a), std::abs(b));
        return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
    }
}

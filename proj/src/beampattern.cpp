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

#include "xband/beampattern.hpp"
#include "xband/channel.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace xband
{
    namespace
    {
        constexpr double deg2rad = std::numbers::pi / 180.0;

        std::string fmt_num(double x)
        {
            std::ostringstream os;
            os.precision(12);
            os << x;
            return os.str();
        }
    }

    Beampattern Beampattern::gpp3(double hpbw_deg, double a_max_db)
    {
        if (!(hpbw_deg > 0.0 && hpbw_deg <= 180.0))
            throw std::invalid_argument("3GPP pattern HPBW must be in (0, 180] degrees.");
        if (!(a_max_db > 0.0) || !std::isfinite(a_max_db))
            throw std::invalid_argument("3GPP pattern A_max must be positive.");

        Beampattern p;
        p.kind_ = Kind::gpp3;
        p.hpbw_deg_ = hpbw_deg;
        p.a_max_db_ = a_max_db;
        return p;
    }

    Beampattern Beampattern::ula(int n_elements, double spacing_wavelengths, double backplane_floor_db)
    {
        if (n_elements < 2)
            throw std::invalid_argument("ULA needs at least 2 elements.");
        if (!(spacing_wavelengths > 0.0) || !std::isfinite(spacing_wavelengths))
            throw std::invalid_argument("ULA element spacing must be positive.");
        if (!(backplane_floor_db < 0.0) || !std::isfinite(backplane_floor_db))
            throw std::invalid_argument("ULA backplane floor must be a negative dB value.");

        Beampattern p;
        p.kind_ = Kind::ula;
        p.n_elements_ = n_elements;
        p.spacing_ = spacing_wavelengths;
        p.floor_db_ = backplane_floor_db;
        return p;
    }

    Beampattern Beampattern::tabulated(std::vector<PatternSample> samples)
    {
        if (samples.size() < 2)
            throw std::invalid_argument("Tabulated pattern needs at least 2 samples.");
        for (auto &s : samples)
        {
            if (!std::isfinite(s.offset_deg) || !std::isfinite(s.gain_db))
                throw std::invalid_argument("Tabulated pattern contains non-finite values.");
            s.offset_deg = wrap_offset_deg(s.offset_deg);
        }
        std::sort(samples.begin(), samples.end(),
                  [](const PatternSample &a, const PatternSample &b)
                  { return a.offset_deg < b.offset_deg; });

        // -180 and 180 both wrap to 180; keep one of them if they agree
        std::vector<PatternSample> unique;
        for (const auto &s : samples)
        {
            if (!unique.empty() && unique.back().offset_deg == s.offset_deg)
            {
                if (unique.back().gain_db != s.gain_db)
                    throw std::invalid_argument("Tabulated pattern has conflicting samples at offset " +
                                                fmt_num(s.offset_deg) + ".");
                continue;
            }
            unique.push_back(s);
        }
        if (unique.size() < 2)
            throw std::invalid_argument("Tabulated pattern needs at least 2 distinct offsets.");

        Beampattern p;
        p.kind_ = Kind::tabulated;
        p.samples_ = std::move(unique);

        const double ref = p.tabulated_db(0.0);
        for (auto &s : p.samples_)
        {
            s.gain_db -= ref;
            if (s.gain_db > 1e-9)
                throw std::invalid_argument("Tabulated pattern must peak at offset 0 (sample at " +
                                            fmt_num(s.offset_deg) + " deg exceeds it).");
            s.gain_db = std::min(s.gain_db, 0.0);
        }
        return p;
    }

    double Beampattern::ula_front_db(double offset_deg) const
    {
        const double psi = 2.0 * std::numbers::pi * spacing_ * std::sin(offset_deg * deg2rad);
        std::complex<double> af = 0.0;
        for (int n = 0; n < n_elements_; ++n)
            af += std::polar(1.0, psi * n);
        const double n2 = double(n_elements_) * double(n_elements_);
        const double g = std::norm(af) / n2;
        return std::clamp(10.0 * std::log10(std::max(g, 1e-300)), ula_null_floor_db, 0.0);
    }

    double Beampattern::tabulated_db(double offset_deg) const
    {
        const auto &s = samples_;
        auto hi = std::lower_bound(s.begin(), s.end(), offset_deg,
                                   [](const PatternSample &a, double x)
                                   { return a.offset_deg < x; });

        if (hi != s.end() && hi->offset_deg == offset_deg)
            return hi->gain_db;

        PatternSample left, right;
        if (hi == s.begin() || hi == s.end())
        {
            // Gap across +-180 deg
            left = s.back();
            right = s.front();
            right.offset_deg += 360.0;
            if (offset_deg < left.offset_deg)
                offset_deg += 360.0;
        }
        else
        {
            left = *(hi - 1);
            right = *hi;
        }
        const double t = (offset_deg - left.offset_deg) / (right.offset_deg - left.offset_deg);
        return left.gain_db + t * (right.gain_db - left.gain_db);
    }

    double Beampattern::gain_db(double offset_deg) const
    {
        const double x = wrap_offset_deg(offset_deg);
        switch (kind_)
        {
        case Kind::gpp3:
        {
            const double r = x / hpbw_deg_;
            return -std::min(12.0 * r * r, a_max_db_);
        }
        case Kind::ula:
            return std::abs(x) > 90.0 ? floor_db_ : ula_front_db(x);
        case Kind::tabulated:
            return tabulated_db(x);
        }
        return 0.0;
    }

    double Beampattern::gain(double offset_deg) const
    {
        return db_to_linear(gain_db(offset_deg));
    }

    double Beampattern::peak_to_min_db() const
    {
        switch (kind_)
        {
        case Kind::gpp3:
            return a_max_db_;
        case Kind::ula:
            return -std::min(floor_db_, ula_null_floor_db);
        case Kind::tabulated:
        {
            double lowest = 0.0;
            for (const auto &s : samples_)
                lowest = std::min(lowest, s.gain_db);
            return -lowest;
        }
        }
        return 0.0;
    }

    std::string Beampattern::describe() const
    {
        switch (kind_)
        {
        case Kind::gpp3:
            return "gpp3:hpbw=" + fmt_num(hpbw_deg_) + ",amax=" + fmt_num(a_max_db_);
        case Kind::ula:
            return "ula:n=" + std::to_string(n_elements_) + ",spacing=" + fmt_num(spacing_) +
                   ",floor=" + fmt_num(floor_db_);
        case Kind::tabulated:
            return "tabulated:" + std::to_string(samples_.size()) + "-samples";
        }
        return {};
    }

    Beampattern synth_3gpp(double hpbw_deg, double a_max_db)
    {
        return Beampattern::gpp3(hpbw_deg, a_max_db);
    }

    Beampattern synth_ula(int n_elements, double spacing_wavelengths, double backplane_floor_db)
    {
        return Beampattern::ula(n_elements, spacing_wavelengths, backplane_floor_db);
    }

    double gain_at(const Beampattern &pattern, double offset_deg)
    {
        return pattern.gain(offset_deg);
    }

    double hpbw(const Beampattern &pattern)
    {
        constexpr double scan_step = 0.01;
        constexpr double tol = 1e-7;

        auto crossing = [&](double sign)
        {
            double inside = 0.0;
            for (int k = 1; k * scan_step <= 180.0; ++k)
            {
                const double outside = k * scan_step;
                if (pattern.gain_db(sign * outside) < -3.0)
                {
                    double lo = inside, hi = outside;
                    while (hi - lo > tol)
                    {
                        const double mid = 0.5 * (lo + hi);
                        if (pattern.gain_db(sign * mid) < -3.0)
                            hi = mid;
                        else
                            lo = mid;
                    }
                    return 0.5 * (lo + hi);
                }
                inside = outside;
            }
            throw std::domain_error("Pattern has no -3 dB crossing: " + pattern.describe());
        };

        return crossing(1.0) + crossing(-1.0);
    }

    std::vector<PatternSample> tabulate(const Beampattern &pattern, double step_deg)
    {
        const double count = 360.0 / step_deg;
        const long n = std::lround(count);
        if (!(step_deg > 0.0) || n < 2 || std::abs(count - double(n)) > 1e-9)
            throw std::invalid_argument("Tabulation step must divide 360 degrees.");

        std::vector<PatternSample> out;
        out.reserve(std::size_t(n) + 1);
        for (long k = 0; k <= n; ++k)
        {
            const double offset = k == n ? 180.0 : double(k) * step_deg - 180.0;
            out.push_back({offset, pattern.gain_db(offset)});
        }
        return out;
    }
}

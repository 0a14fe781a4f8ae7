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

#include "xband/channel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace xband
{
    double db_to_linear(double db)
    {
        return std::pow(10.0, db / 10.0);
    }

    double linear_to_db(double linear)
    {
        return 10.0 * std::log10(linear);
    }

    double normalize_angle_deg(double deg)
    {
        double a = std::fmod(deg, 360.0);
        if (a < 0.0)
            a += 360.0;
        // fmod of a tiny negative value can round up to exactly 360
        if (a >= 360.0)
            a = 0.0;
        return a;
    }

    double wrap_offset_deg(double deg)
    {
        double a = normalize_angle_deg(deg);
        return a > 180.0 ? a - 360.0 : a;
    }

    Ray::Ray(double power, double delay_s, double aoa_deg, std::optional<double> aod_deg)
    {
        if (!std::isfinite(power) || power <= 0.0)
            throw std::invalid_argument("Ray power must be finite and positive.");
        if (!std::isfinite(delay_s) || delay_s < 0.0)
            throw std::invalid_argument("Ray delay must be finite and non-negative.");
        if (!std::isfinite(aoa_deg))
            throw std::invalid_argument("Ray AoA must be finite.");
        if (aod_deg && !std::isfinite(*aod_deg))
            throw std::invalid_argument("Ray AoD must be finite.");

        power_ = power;
        delay_ = delay_s;
        aoa_ = normalize_angle_deg(aoa_deg);
        if (aod_deg)
            aod_ = normalize_angle_deg(*aod_deg);
    }

    BandChannel::BandChannel(double frequency_ghz, std::vector<Ray> rays, std::string link_id)
        : frequency_ghz_(frequency_ghz), rays_(std::move(rays)), link_id_(std::move(link_id))
    {
        if (!std::isfinite(frequency_ghz_) || frequency_ghz_ <= 0.0)
            throw std::invalid_argument("Channel frequency must be positive.");
        if (rays_.empty())
            throw std::invalid_argument("Channel must contain at least one ray.");
    }

    LinkPair::LinkPair(BandChannel low, BandChannel high)
        : low_(std::move(low)), high_(std::move(high))
    {
        if (low_.frequency_ghz() > high_.frequency_ghz())
            throw std::invalid_argument("Low-band frequency exceeds high-band frequency.");
        if (low_.link_id() != high_.link_id())
            throw std::invalid_argument("Link pair members carry different link ids ('" + low_.link_id() +
                                        "' vs '" + high_.link_id() + "').");
    }

    double total_gain(const BandChannel &channel)
    {
        double sum = 0.0;
        for (const auto &r : channel.rays())
            sum += r.power();
        return sum;
    }

    BandChannel cull_dynamic_range(const BandChannel &channel, double range_db)
    {
        if (!(range_db > 0.0))
            throw std::invalid_argument("Dynamic range must be positive.");

        const auto &rays = channel.rays();
        auto strongest = std::max_element(rays.begin(), rays.end(),
                                          [](const Ray &a, const Ray &b)
                                          { return a.power() < b.power(); });
        const double p_max = strongest->power();

        std::vector<Ray> kept;
        kept.reserve(rays.size());
        for (const auto &r : rays)
            if (linear_to_db(r.power() / p_max) >= -range_db)
                kept.push_back(r);

        return BandChannel(channel.frequency_ghz(), std::move(kept), channel.link_id());
    }

    BandChannel merge(const BandChannel &a, const BandChannel &b)
    {
        if (a.frequency_ghz() != b.frequency_ghz())
            throw std::invalid_argument("Cannot merge channels at different frequencies.");
        std::vector<Ray> rays = a.rays();
        rays.insert(rays.end(), b.rays().begin(), b.rays().end());
        return BandChannel(a.frequency_ghz(), std::move(rays), a.link_id());
    }
}

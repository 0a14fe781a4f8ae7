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

#include <optional>
#include <string>
#include <vector>

namespace xband
{
    // dB <-> linear power helpers (10 lg)
    double db_to_linear(double db);
    double linear_to_db(double linear);

    // Maps any angle into [0, 360)
    double normalize_angle_deg(double deg);

    // Maps any angular offset into (-180, 180]
    double wrap_offset_deg(double deg);

    // One multipath component. Power is a linear channel gain, delay in seconds, angles in degrees.
    class Ray
    {
    public:
        Ray(double power, double delay_s, double aoa_deg, std::optional<double> aod_deg = std::nullopt);

        double power() const { return power_; }
        double delay() const { return delay_; }
        double aoa_deg() const { return aoa_; }
        const std::optional<double> &aod_deg() const { return aod_; }

        bool operator==(const Ray &) const = default;

    private:
        double power_;
        double delay_;
        double aoa_;
        std::optional<double> aod_; // carried through, not used by any metric
    };

    // Discrete power-angle-delay profile of one link at one carrier frequency
    class BandChannel
    {
    public:
        BandChannel(double frequency_ghz, std::vector<Ray> rays, std::string link_id = "");

        double frequency_ghz() const { return frequency_ghz_; }
        const std::vector<Ray> &rays() const { return rays_; }
        const std::string &link_id() const { return link_id_; }
        std::size_t size() const { return rays_.size(); }

        bool operator==(const BandChannel &) const = default;

    private:
        double frequency_ghz_;
        std::vector<Ray> rays_;
        std::string link_id_;
    };

    // Co-located low-band and high-band channels of the same T-R link.
    // Equal frequencies are allowed (self-comparison).
    class LinkPair
    {
    public:
        LinkPair(BandChannel low, BandChannel high);

        const BandChannel &low() const { return low_; }
        const BandChannel &high() const { return high_; }
        const std::string &link_id() const { return low_.link_id(); }

        bool operator==(const LinkPair &) const = default;

    private:
        BandChannel low_;
        BandChannel high_;
    };

    // Sum of all ray powers (linear)
    double total_gain(const BandChannel &channel);

    // Keeps the rays within range_db of the strongest ray, preserving order
    BandChannel cull_dynamic_range(const BandChannel &channel, double range_db);

    // Concatenates the ray lists of two channels at the same frequency
    BandChannel merge(const BandChannel &a, const BandChannel &b);
}

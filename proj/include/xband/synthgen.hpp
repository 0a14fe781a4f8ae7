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

#include "xband/channel.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace xband
{
    // Identifier written into dataset metadata; bump when the draw sequence changes
    inline constexpr const char *synthgen_rng_id = "mt19937_64/splitmix64-seed/v1";

    struct GenConfig
    {
        int n_shared_paths = 3;
        int n_low_only_paths = 8;
        int n_high_only_paths = 2;
        double shared_power_decay_db = 3.0; // per shared-path index
        double angle_jitter_deg = 15.0;     // std-dev of the per-band AoA perturbation
        double power_jitter_db = 5.0;       // std-dev of the per-band power perturbation
        double delay_spread_ns = 20.0;      // mean of the exponential delay draws
        double exclusive_deficit_min_db = 10.0;
        double exclusive_deficit_max_db = 30.0;
        double low_freq_ghz = 4.0;
        double high_freq_ghz = 86.0;
        std::uint64_t seed = 1;

        void validate() const;
    };

    std::string link_id_for(int link_index);

    LinkPair generate_link(const GenConfig &config, int link_index);

    std::vector<LinkPair> generate_dataset(const GenConfig &config, int n_links);

    // Portable random source: std::mt19937_64 (bit-exact by the standard) seeded with
    // splitmix64(seed, link_index); variates are derived by hand instead of <random> distributions.
    class PortableRng
    {
    public:
        PortableRng(std::uint64_t seed, std::uint64_t stream);

        // Uniform in [0, 1) with 53 random bits
        double uniform();
        double uniform(double lo, double hi);
        // Box-Muller, one output per call
        double normal(double mean, double stddev);
        double exponential(double mean);

    private:
        std::mt19937_64 engine_;
    };
}

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

#include "xband/synthgen.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace xband
{
    namespace
    {
        std::uint64_t splitmix64(std::uint64_t &x)
        {
            std::uint64_t z = (x += 0x9E3779B97F4A7C15ull);
            z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
            z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
            return z ^ (z >> 31);
        }

        std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream)
        {
            std::uint64_t s = seed;
            std::uint64_t a = splitmix64(s);
            s = a ^ stream;
            return splitmix64(s);
        }
    }

    PortableRng::PortableRng(std::uint64_t seed, std::uint64_t stream)
        : engine_(mix_seed(seed, stream))
    {
    }

    double PortableRng::uniform()
    {
        return double(engine_() >> 11) * 0x1.0p-53;
    }

    double PortableRng::uniform(double lo, double hi)
    {
        return lo + (hi - lo) * uniform();
    }

    double PortableRng::normal(double mean, double stddev)
    {
        const double u1 = 1.0 - uniform(); // (0, 1]
        const double u2 = uniform();
        const double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
        return mean + stddev * z;
    }

    double PortableRng::exponential(double mean)
    {
        return -mean * std::log(1.0 - uniform());
    }

    void GenConfig::validate() const
    {
        if (n_shared_paths < 0 || n_low_only_paths < 0 || n_high_only_paths < 0)
            throw std::invalid_argument("Path counts must be non-negative.");
        if (n_shared_paths + n_low_only_paths < 1 || n_shared_paths + n_high_only_paths < 1)
            throw std::invalid_argument("Each band needs at least one path.");
        if (!(angle_jitter_deg >= 0.0) || !(power_jitter_db >= 0.0))
            throw std::invalid_argument("Jitters must be non-negative.");
        if (!(delay_spread_ns >= 0.0))
            throw std::invalid_argument("Delay spread must be non-negative.");
        if (!(shared_power_decay_db >= 0.0))
            throw std::invalid_argument("Shared power decay must be non-negative.");
        if (!(exclusive_deficit_min_db >= 0.0 && exclusive_deficit_max_db >= exclusive_deficit_min_db))
            throw std::invalid_argument("Exclusive-path deficit range is invalid.");
        if (!(low_freq_ghz > 0.0) || !(high_freq_ghz >= low_freq_ghz))
            throw std::invalid_argument("Frequencies must satisfy 0 < low <= high.");
    }

    std::string link_id_for(int link_index)
    {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "link_%06d", link_index);
        return buf;
    }

    LinkPair generate_link(const GenConfig &config, int link_index)
    {
        config.validate();
        if (link_index < 0)
            throw std::invalid_argument("Link index must be non-negative.");

        PortableRng rng(config.seed, std::uint64_t(link_index));
        const std::string id = link_id_for(link_index);

        struct SharedPath
        {
            double aoa_deg, delay_ns, power_db;
        };
        std::vector<SharedPath> shared;
        for (int i = 0; i < config.n_shared_paths; ++i)
        {
            const double aoa = rng.uniform(0.0, 360.0);
            const double delay = rng.exponential(config.delay_spread_ns);
            shared.push_back({aoa, delay, -config.shared_power_decay_db * i});
        }

        // Jitter variates are always drawn so that the draw sequence does not depend on the jitter values
        auto make_band = [&](double freq_ghz, int n_exclusive, double offset_db)
        {
            std::vector<Ray> rays;
            for (const auto &p : shared)
            {
                const double aoa = p.aoa_deg + rng.normal(0.0, config.angle_jitter_deg);
                const double power_db = p.power_db + rng.normal(0.0, config.power_jitter_db) + offset_db;
                rays.emplace_back(db_to_linear(power_db), p.delay_ns * 1e-9, aoa);
            }
            for (int i = 0; i < n_exclusive; ++i)
            {
                const double aoa = rng.uniform(0.0, 360.0);
                const double delay = rng.exponential(config.delay_spread_ns);
                const double deficit = rng.uniform(config.exclusive_deficit_min_db, config.exclusive_deficit_max_db);
                rays.emplace_back(db_to_linear(offset_db - deficit), delay * 1e-9, aoa);
            }
            return BandChannel(freq_ghz, std::move(rays), id);
        };

        // Free-space style offset so that the high band is weaker, as in measured data
        const double high_offset_db = -20.0 * std::log10(config.high_freq_ghz / config.low_freq_ghz);
        BandChannel low = make_band(config.low_freq_ghz, config.n_low_only_paths, 0.0);
        BandChannel high = make_band(config.high_freq_ghz, config.n_high_only_paths, high_offset_db);
        return LinkPair(std::move(low), std::move(high));
    }

    std::vector<LinkPair> generate_dataset(const GenConfig &config, int n_links)
    {
        if (n_links < 1)
            throw std::invalid_argument("n_links must be at least 1.");
        std::vector<LinkPair> out;
        out.reserve(std::size_t(n_links));
        for (int i = 0; i < n_links; ++i)
            out.push_back(generate_link(config, i));
        return out;
    }
}

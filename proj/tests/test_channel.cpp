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

#include <catch2/catch_amalgamated.hpp>

#include "oracle.hpp"
#include "xband/channel.hpp"

#include <algorithm>
#include <random>

using namespace xband;
using Catch::Approx;

static BandChannel channel_of(const std::vector<double> &powers, double freq = 28.0)
{
    std::vector<Ray> rays;
    for (std::size_t i = 0; i < powers.size(); ++i)
        rays.emplace_back(powers[i], 1e-9 * double(i), 10.0 * double(i));
    return BandChannel(freq, rays, "L0");
}

TEST_CASE("Ray - invariants")
{
    CHECK_THROWS_AS(Ray(0.0, 0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(Ray(-1.0, 0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(Ray(1.0, -1e-9, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(Ray(std::nan(""), 0.0, 0.0), std::invalid_argument);

    CHECK(Ray(1.0, 0.0, 360.0).aoa_deg() == 0.0);
    CHECK(Ray(1.0, 0.0, -90.0).aoa_deg() == 270.0);
    CHECK(Ray(1.0, 0.0, 725.0).aoa_deg() == Approx(5.0));
    CHECK(Ray(1.0, 0.0, -1e-18).aoa_deg() < 360.0);

    Ray with_aod(1.0, 0.0, 10.0, -10.0);
    REQUIRE(with_aod.aod_deg());
    CHECK(*with_aod.aod_deg() == 350.0);
}

TEST_CASE("BandChannel and LinkPair - invariants")
{
    CHECK_THROWS_AS(BandChannel(28.0, {}, "x"), std::invalid_argument);
    CHECK_THROWS_AS(BandChannel(0.0, {Ray(1.0, 0.0, 0.0)}, "x"), std::invalid_argument);

    BandChannel low(4.0, {Ray(1.0, 0.0, 0.0)}, "a");
    BandChannel high(86.0, {Ray(1.0, 0.0, 0.0)}, "a");
    CHECK_NOTHROW(LinkPair(low, high));
    CHECK_NOTHROW(LinkPair(low, low)); // equal-band calibration pair
    CHECK_THROWS_AS(LinkPair(high, low), std::invalid_argument);
    CHECK_THROWS_AS(LinkPair(low, BandChannel(86.0, {Ray(1.0, 0.0, 0.0)}, "b")), std::invalid_argument);
}

TEST_CASE("wrap_offset_deg maps into (-180, 180]")
{
    CHECK(wrap_offset_deg(180.0) == 180.0);
    CHECK(wrap_offset_deg(-180.0) == 180.0);
    CHECK(wrap_offset_deg(190.0) == Approx(-170.0));
    CHECK(wrap_offset_deg(-190.0) == Approx(170.0));
    CHECK(wrap_offset_deg(0.0) == 0.0);

    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-2000.0, 2000.0);
    for (int i = 0; i < 1000; ++i)
    {
        const double x = u(rng);
        const double w = wrap_offset_deg(x);
        CHECK(w > -180.0);
        CHECK(w <= 180.0);
        CHECK(std::abs(w - oracle::wrap(x)) < 1e-9);
    }
}

TEST_CASE("total_gain")
{
    CHECK(total_gain(channel_of({1.0})) == 1.0);
    CHECK(total_gain(channel_of({0.5, 0.25, 0.25})) == 1.0);

    // 100 rays of 1e-13: reference by long double summation
    std::vector<double> tiny(100, 1e-13);
    long double ref = 0.0L;
    for (double p : tiny)
        ref += p;
    const double g = total_gain(channel_of(tiny));
    CHECK(oracle::rel_err(g, double(ref)) < 1e-12);
    CHECK(oracle::rel_err(g, 1e-11) < 1e-12);
    CHECK(linear_to_db(g) == Approx(-110.0).margin(1e-9));
}

TEST_CASE("total_gain - invariant under ray reordering")
{
    std::mt19937_64 rng(11);
    for (int t = 0; t < 50; ++t)
    {
        auto ch = oracle::random_channel(rng, 30);
        auto rays = ch.rays();
        std::shuffle(rays.begin(), rays.end(), rng);
        BandChannel shuffled(ch.frequency_ghz(), rays, ch.link_id());
        CHECK(oracle::rel_err(total_gain(ch), total_gain(shuffled)) < 1e-14);
    }
}

TEST_CASE("cull_dynamic_range")
{
    auto powers = [](const BandChannel &c)
    {
        std::vector<double> p;
        for (const auto &r : c.rays())
            p.push_back(r.power());
        return p;
    };

    CHECK(powers(cull_dynamic_range(channel_of({1.0, 0.1, 1e-4}), 45.0)) == std::vector<double>{1.0, 0.1, 1e-4});
    CHECK(powers(cull_dynamic_range(channel_of({1.0, 1e-4}), 30.0)) == std::vector<double>{1.0});
    CHECK_THROWS_AS(cull_dynamic_range(channel_of({1.0}), 0.0), std::invalid_argument);

    // Random 50-ray channels against an independent threshold scan
    std::mt19937_64 rng(3);
    for (int t = 0; t < 100; ++t)
    {
        auto ch = oracle::random_channel(rng, 50, 28.0, 60.0);
        double pmax = 0.0;
        for (const auto &r : ch.rays())
            pmax = std::max(pmax, r.power());
        std::vector<Ray> expected;
        for (const auto &r : ch.rays())
            if (r.power() >= pmax * std::pow(10.0, -2.0))
                expected.push_back(r);

        auto culled = cull_dynamic_range(ch, 20.0);
        CHECK(culled.rays() == expected);
        CHECK(culled == cull_dynamic_range(culled, 20.0)); // idempotent
        CHECK(total_gain(culled) <= total_gain(ch));
        CHECK(culled.size() >= 1);
    }
}

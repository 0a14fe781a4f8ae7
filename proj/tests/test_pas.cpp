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
#include "xband/pas.hpp"

#include <algorithm>
#include <random>

using namespace xband;
using Catch::Approx;

TEST_CASE("AngularGrid - construction")
{
    CHECK(AngularGrid().size() == 360);
    CHECK(AngularGrid(0.25).size() == 1440);
    CHECK(AngularGrid(10.0).size() == 36);
    CHECK_THROWS_AS(AngularGrid(0.7), std::invalid_argument);
    CHECK_THROWS_AS(AngularGrid(12.0), std::invalid_argument);
    CHECK_THROWS_AS(AngularGrid(0.0), std::invalid_argument);

    AngularGrid g(0.5);
    CHECK(g.index_of(10.5) == std::optional<std::size_t>(21));
    CHECK(g.index_of(360.0) == std::optional<std::size_t>(0));
    CHECK_FALSE(g.index_of(10.25).has_value());
}

TEST_CASE("filter_pas - single and two-ray examples")
{
    auto p = synth_3gpp(10.0, 30.0);
    AngularGrid grid(1.0);

    BandChannel one(28.0, {Ray(1.0, 0.0, 0.0)}, "a");
    auto b = filter_pas(one, p, grid);
    REQUIRE(b.values.size() == 360);
    CHECK(b.values[0] == 1.0);
    CHECK(b.values[5] == Approx(0.5012).margin(1e-4));
    CHECK(b.values[355] == Approx(b.values[5]).epsilon(1e-12));
    CHECK(b.source_frequency_ghz == 28.0);

    BandChannel two(28.0, {Ray(1.0, 0.0, 0.0), Ray(1.0, 0.0, 180.0)}, "a");
    auto b2 = filter_pas(two, p, grid);
    CHECK(b2.values[0] == Approx(1.001).epsilon(1e-14));
    CHECK(b2.values[180] == Approx(1.001).epsilon(1e-14));
}

TEST_CASE("filter_pas - rays are not binned to the grid")
{
    auto p = synth_3gpp(10.0, 30.0);
    BandChannel off_grid(28.0, {Ray(1.0, 0.0, 0.5)}, "a");
    auto b = filter_pas(off_grid, p, AngularGrid(1.0));
    CHECK(b.values[0] == Approx(b.values[1]).epsilon(1e-14));
    CHECK(b.values[0] < 1.0);
}

TEST_CASE("filter_pas - equals the double-loop oracle on random channels")
{
    std::mt19937_64 rng(42);
    const std::vector<Beampattern> patterns = {synth_3gpp(10.0, 30.0), synth_3gpp(40.0, 30.0), synth_ula(4),
                                               synth_ula(8)};
    for (int t = 0; t < 40; ++t)
    {
        auto ch = oracle::random_channel(rng, 30);
        const auto &p = patterns[std::size_t(t) % patterns.size()];
        auto b = filter_pas(ch, p, AngularGrid(1.0));
        auto ref = oracle::filter(ch, p, 1.0);
        for (std::size_t k = 0; k < ref.size(); ++k)
            CHECK(oracle::rel_err(b.values[k], ref[k]) < 1e-12);
    }
}

TEST_CASE("filter_pas - independent of ray order, strictly positive")
{
    std::mt19937_64 rng(8);
    for (int t = 0; t < 20; ++t)
    {
        auto ch = oracle::random_channel(rng, 25);
        auto rays = ch.rays();
        std::shuffle(rays.begin(), rays.end(), rng);
        BandChannel shuffled(ch.frequency_ghz(), rays, ch.link_id());
        auto a = filter_pas(ch, synth_ula(8), AngularGrid(1.0));
        auto b = filter_pas(shuffled, synth_ula(8), AngularGrid(1.0));
        for (std::size_t k = 0; k < a.values.size(); ++k)
        {
            CHECK(oracle::rel_err(a.values[k], b.values[k]) < 1e-13);
            CHECK(a.values[k] > 0.0);
        }
    }
}

TEST_CASE("filter_pas - linearity over merged channels")
{
    std::mt19937_64 rng(9);
    auto p = synth_ula(4);
    for (int t = 0; t < 20; ++t)
    {
        auto c1 = oracle::random_channel(rng, 10);
        auto c2 = oracle::random_channel(rng, 15);
        auto m = filter_pas(merge(c1, c2), p, AngularGrid(1.0));
        auto a = filter_pas(c1, p, AngularGrid(1.0));
        auto b = filter_pas(c2, p, AngularGrid(1.0));
        for (std::size_t k = 0; k < m.values.size(); ++k)
            CHECK(oracle::rel_err(m.values[k], a.values[k] + b.values[k]) < 1e-12);
    }
}

TEST_CASE("filter_pas - rotational covariance")
{
    std::mt19937_64 rng(10);
    auto p = synth_3gpp(10.0, 30.0);
    AngularGrid grid(1.0);

    SECTION("integer angles rotate exactly")
    {
        std::uniform_int_distribution<int> deg(0, 359);
        std::vector<Ray> rays, rotated;
        for (int i = 0; i < 12; ++i)
        {
            const double a = deg(rng);
            rays.emplace_back(0.1 + 0.05 * i, 0.0, a);
            rotated.emplace_back(0.1 + 0.05 * i, 0.0, a + 37.0);
        }
        auto b = filter_pas(BandChannel(28.0, rays, "a"), p, grid);
        auto r = filter_pas(BandChannel(28.0, rotated, "a"), p, grid);
        for (std::size_t k = 0; k < 360; ++k)
            CHECK(r.values[(k + 37) % 360] == b.values[k]);
    }

    SECTION("arbitrary angles rotate to rounding accuracy")
    {
        for (int t = 0; t < 20; ++t)
        {
            auto ch = oracle::random_channel(rng, 20);
            const int shift = int(rng() % 360);
            std::vector<Ray> rotated;
            for (const auto &r : ch.rays())
                rotated.emplace_back(r.power(), r.delay(), r.aoa_deg() + shift);
            auto b = filter_pas(ch, p, grid);
            auto r = filter_pas(BandChannel(28.0, rotated, "a"), p, grid);
            for (std::size_t k = 0; k < 360; ++k)
                CHECK(oracle::rel_err(r.values[(k + std::size_t(shift)) % 360], b.values[k]) < 1e-9);
        }
    }
}

TEST_CASE("filter_pas - grid refinement leaves shared angles bit-identical")
{
    std::mt19937_64 rng(12);
    for (int t = 0; t < 20; ++t)
    {
        auto ch = oracle::random_channel(rng, 20);
        auto coarse = filter_pas(ch, synth_ula(8), AngularGrid(1.0));
        auto fine = filter_pas(ch, synth_ula(8), AngularGrid(0.5));
        auto finer = filter_pas(ch, synth_ula(8), AngularGrid(0.25));
        for (std::size_t k = 0; k < 360; ++k)
        {
            CHECK(fine.values[2 * k] == coarse.values[k]);
            CHECK(finer.values[4 * k] == coarse.values[k]);
        }
    }
}

TEST_CASE("normalize_pas")
{
    AngularGrid grid(1.0);
    FilteredPas uniform{grid, std::vector<double>(360, 3.5), 28.0};
    auto n = normalize_pas(uniform);
    for (double d : n.density)
        CHECK(d == Approx(1.0 / 360.0).epsilon(1e-14));

    std::mt19937_64 rng(13);
    for (double step : {0.25, 1.0, 2.0, 5.0})
        for (int t = 0; t < 10; ++t)
        {
            auto b = filter_pas(oracle::random_channel(rng, 20), synth_3gpp(10.0, 30.0), AngularGrid(step));
            auto nb = normalize_pas(b);
            CHECK(std::abs(nb.total_mass() - 1.0) < 1e-9);
            for (double d : nb.density)
                CHECK(d >= 0.0);

            // scale invariance
            FilteredPas scaled = b;
            for (double &v : scaled.values)
                v *= 7.0;
            auto ns = normalize_pas(scaled);
            for (std::size_t k = 0; k < nb.density.size(); ++k)
                CHECK(oracle::rel_err(ns.density[k], nb.density[k]) < 1e-14);
        }
}

TEST_CASE("filter_pas - scale equivariance")
{
    std::mt19937_64 rng(14);
    auto ch = oracle::random_channel(rng, 20);
    std::vector<Ray> scaled;
    for (const auto &r : ch.rays())
        scaled.emplace_back(r.power() * 1e-7, r.delay(), r.aoa_deg());
    auto a = filter_pas(ch, synth_ula(4), AngularGrid(1.0));
    auto b = filter_pas(BandChannel(28.0, scaled, "a"), synth_ula(4), AngularGrid(1.0));
    for (std::size_t k = 0; k < 360; ++k)
        CHECK(oracle::rel_err(b.values[k], a.values[k] * 1e-7) < 1e-12);
}

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
#include "xband/psp.hpp"

#include <random>

using namespace xband;
using Catch::Approx;

static NormalizedPas random_npas(std::mt19937_64 &rng, const AngularGrid &grid)
{
    std::uniform_real_distribution<double> u(0.0, 1.0);
    FilteredPas f{grid, std::vector<double>(grid.size()), 1.0};
    for (double &v : f.values)
        v = std::pow(u(rng), 4.0) + 1e-9;
    return normalize_pas(f);
}

TEST_CASE("total_variation - identity and disjoint supports")
{
    AngularGrid grid(1.0);
    std::mt19937_64 rng(1);
    auto a = random_npas(rng, grid);
    CHECK(total_variation(a, a) == 0.0);
    CHECK(psp(a, a).psp_percent == 100.0);

    NormalizedPas left{grid, std::vector<double>(360, 0.0)}, right{grid, std::vector<double>(360, 0.0)};
    for (std::size_t k = 0; k < 180; ++k)
        left.density[k] = 1.0 / 180.0;
    for (std::size_t k = 180; k < 360; ++k)
        right.density[k] = 1.0 / 180.0;
    CHECK(total_variation(left, right) == Approx(1.0).epsilon(1e-14));
    CHECK(psp(left, right).psp_percent == Approx(0.0).margin(1e-12));
}

TEST_CASE("total_variation - mismatched grids are rejected")
{
    std::mt19937_64 rng(2);
    auto a = random_npas(rng, AngularGrid(1.0));
    auto b = random_npas(rng, AngularGrid(2.0));
    CHECK_THROWS_AS(total_variation(a, b), std::invalid_argument);
}

TEST_CASE("total_variation - equals direct summation")
{
    std::mt19937_64 rng(3);
    for (double step : {0.5, 1.0, 3.0})
    {
        AngularGrid grid(step);
        for (int t = 0; t < 50; ++t)
        {
            auto a = random_npas(rng, grid);
            auto b = random_npas(rng, grid);
            const double ref = oracle::total_variation(a.density, b.density, step);
            CHECK(oracle::rel_err(total_variation(a, b), ref) < 1e-12);
        }
    }
}

TEST_CASE("PSP - partially overlapping synthetic PAS")
{
    // Two bands sharing one dominant path; the low band has an extra path at 300 deg
    auto p = synth_3gpp(10.0, 30.0);
    AngularGrid grid(1.0);
    BandChannel low(4.0, {Ray(1.0, 0.0, 40.0), Ray(0.5, 0.0, 150.0), Ray(0.4, 0.0, 300.0)}, "l15");
    BandChannel high(86.0, {Ray(0.01, 0.0, 42.0), Ray(0.004, 0.0, 150.0)}, "l15");

    const auto res = psp(low, high, p, p, grid);
    const double ref = oracle::total_variation(normalize_pas(filter_pas(low, p, grid)).density,
                                               normalize_pas(filter_pas(high, p, grid)).density, 1.0);
    CHECK(oracle::rel_err(res.d_tv, ref) < 1e-12);
    CHECK(res.psp_percent == (1.0 - res.d_tv) * 100.0);
    CHECK(res.psp_percent > 0.0);
    CHECK(res.psp_percent < 100.0);
}

TEST_CASE("PSP - equal-band calibration is 100%")
{
    std::mt19937_64 rng(4);
    for (int t = 0; t < 50; ++t)
    {
        auto ch = oracle::random_channel(rng, 20);
        const auto r = psp(ch, ch, synth_3gpp(10.0, 30.0), synth_3gpp(10.0, 30.0), AngularGrid(1.0));
        CHECK(r.psp_percent == 100.0);
        CHECK(r.d_tv == 0.0);
    }
}

TEST_CASE("total_variation - metric axioms on random triples")
{
    std::mt19937_64 rng(5);
    AngularGrid grid(1.0);
    for (int t = 0; t < 300; ++t)
    {
        auto a = random_npas(rng, grid);
        auto b = random_npas(rng, grid);
        auto c = random_npas(rng, grid);
        const double ab = total_variation(a, b), ba = total_variation(b, a);
        const double bc = total_variation(b, c), ac = total_variation(a, c);
        CHECK(ab == ba);
        CHECK(ac <= ab + bc + 1e-12);
        CHECK(ab >= 0.0);
        CHECK(ab <= 1.0);
    }
}

TEST_CASE("PSP - invariant to per-band power scaling")
{
    std::mt19937_64 rng(6);
    auto p = synth_ula(8);
    AngularGrid grid(1.0);
    for (int t = 0; t < 30; ++t)
    {
        auto low = oracle::random_channel(rng, 15, 4.0);
        auto high = oracle::random_channel(rng, 15, 86.0);
        std::vector<Ray> scaled;
        for (const auto &r : high.rays())
            scaled.emplace_back(r.power() * 3.7e-5, r.delay(), r.aoa_deg());
        const auto a = psp(low, high, p, p, grid);
        const auto b = psp(low, BandChannel(86.0, scaled, "rnd"), p, p, grid);
        CHECK(std::abs(a.d_tv - b.d_tv) < 1e-12);
    }
}

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

#include "xband/beam_similarity.hpp"

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace xband
{
    struct CdfPoint
    {
        double value;
        double probability;
    };

    // Step CDF: the i-th sorted sample (1-based) has probability i/n, duplicates keep the highest
    std::vector<CdfPoint> empirical_cdf(std::vector<double> samples);

    // Lower empirical quantile: smallest sample whose cumulative probability >= level/100
    double percentile(const std::vector<CdfPoint> &cdf, double level_percent);
    std::map<int, double> percentiles(const std::vector<CdfPoint> &cdf, const std::vector<int> &levels = {10, 50, 90});

    // Relative frequency of each integer value
    std::map<int, double> empirical_pdf(const std::vector<int> &samples);

    struct LinkFailure
    {
        std::string link_id;
        std::string message;
    };

    struct BatchReport
    {
        std::vector<SimilarityReport> per_link; // sorted by link_id
        std::vector<LinkFailure> failures;
        std::vector<CdfPoint> r_cdf;
        std::map<int, double> nf_pdf;
        std::map<int, double> card_low_pdf;
        std::map<int, double> card_high_pdf;
        std::map<int, double> neg_r_percentiles; // level -> -R [dB] at that CDF level of R
        double nf_zero_fraction = 0.0;
        double nf_at_most_one_fraction = 0.0;

        double median_neg_r() const { return neg_r_percentiles.at(50); }
        double nf_above_one_fraction() const { return 1.0 - nf_at_most_one_fraction; }
    };

    struct BatchOptions
    {
        unsigned threads = 0; // 0: hardware concurrency
    };

    BatchReport analyze_dataset(const std::vector<LinkPair> &dataset, const Beampattern &pattern_low,
                                const Beampattern &pattern_high, const AngularGrid &grid,
                                const SimilarityConfig &config, const BatchOptions &options = {});

    // Assembles the aggregate statistics from already computed per-link reports
    BatchReport aggregate(std::vector<SimilarityReport> reports, std::vector<LinkFailure> failures = {});

    struct PspBatch
    {
        std::vector<std::pair<std::string, PspResult>> per_link; // sorted by link_id
        std::vector<LinkFailure> failures;
        std::vector<CdfPoint> psp_cdf;
    };

    PspBatch psp_dataset(const std::vector<LinkPair> &dataset, const Beampattern &pattern_low,
                         const Beampattern &pattern_high, const AngularGrid &grid,
                         const BatchOptions &options = {});

    // Runs fn(i) for i in [0, n) on a pool of worker threads
    void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)> &fn);
}

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

#include "xband/stats.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <thread>

namespace xband
{
    std::vector<CdfPoint> empirical_cdf(std::vector<double> samples)
    {
        if (samples.empty())
            throw std::invalid_argument("Empirical CDF needs at least one sample.");
        for (double s : samples)
            if (std::isnan(s))
                throw std::invalid_argument("Empirical CDF samples must not be NaN.");

        std::sort(samples.begin(), samples.end());
        const double n = double(samples.size());
        std::vector<CdfPoint> cdf;
        for (std::size_t i = 0; i < samples.size(); ++i)
        {
            const double p = double(i + 1) / n;
            if (!cdf.empty() && cdf.back().value == samples[i])
                cdf.back().probability = p;
            else
                cdf.push_back({samples[i], p});
        }
        cdf.back().probability = 1.0;
        return cdf;
    }

    double percentile(const std::vector<CdfPoint> &cdf, double level_percent)
    {
        if (cdf.empty())
            throw std::invalid_argument("Percentile of an empty CDF.");
        const double level = level_percent / 100.0;
        for (const auto &pt : cdf)
            if (pt.probability >= level)
                return pt.value;
        return cdf.back().value;
    }

    std::map<int, double> percentiles(const std::vector<CdfPoint> &cdf, const std::vector<int> &levels)
    {
        std::map<int, double> out;
        for (int level : levels)
            out[level] = percentile(cdf, double(level));
        return out;
    }

    std::map<int, double> empirical_pdf(const std::vector<int> &samples)
    {
        std::map<int, std::size_t> counts;
        for (int s : samples)
            ++counts[s];
        std::map<int, double> pdf;
        for (const auto &[value, count] : counts)
            pdf[value] = double(count) / double(samples.size());
        return pdf;
    }

    void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)> &fn)
    {
        if (threads == 0)
            threads = std::max(1u, std::thread::hardware_concurrency());
        threads = unsigned(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));

        std::atomic<std::size_t> next{0};
        auto worker = [&]
        {
            for (std::size_t i = next++; i < n; i = next++)
                fn(i);
        };

        if (threads <= 1)
        {
            worker();
            return;
        }
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(worker);
    }

    namespace
    {
        // Result slots indexed by input position, then ordered by link_id for aggregation
        std::vector<std::size_t> order_by_link_id(const std::vector<LinkPair> &dataset)
        {
            std::vector<std::size_t> order(dataset.size());
            std::iota(order.begin(), order.end(), std::size_t{0});
            std::stable_sort(order.begin(), order.end(),
                             [&](std::size_t a, std::size_t b)
                             { return dataset[a].link_id() < dataset[b].link_id(); });
            return order;
        }
    }

    BatchReport aggregate(std::vector<SimilarityReport> reports, std::vector<LinkFailure> failures)
    {
        std::stable_sort(reports.begin(), reports.end(),
                         [](const SimilarityReport &a, const SimilarityReport &b)
                         { return a.link_id < b.link_id; });

        BatchReport out;
        out.failures = std::move(failures);
        out.per_link = std::move(reports);
        if (out.per_link.empty())
            return out;

        std::vector<double> r;
        std::vector<int> nf, card_low, card_high;
        for (const auto &rep : out.per_link)
        {
            r.push_back(rep.power_ratio_db);
            nf.push_back(rep.n_false);
            card_low.push_back(rep.card_low);
            card_high.push_back(rep.card_high);
        }

        out.r_cdf = empirical_cdf(r);
        out.nf_pdf = empirical_pdf(nf);
        out.card_low_pdf = empirical_pdf(card_low);
        out.card_high_pdf = empirical_pdf(card_high);
        for (const auto &[level, value] : percentiles(out.r_cdf))
            out.neg_r_percentiles[level] = value == 0.0 ? 0.0 : -value;

        const double n = double(nf.size());
        out.nf_zero_fraction = double(std::count(nf.begin(), nf.end(), 0)) / n;
        out.nf_at_most_one_fraction =
            double(std::count_if(nf.begin(), nf.end(), [](int x)
                                 { return x <= 1; })) /
            n;
        return out;
    }

    BatchReport analyze_dataset(const std::vector<LinkPair> &dataset, const Beampattern &pattern_low,
                                const Beampattern &pattern_high, const AngularGrid &grid,
                                const SimilarityConfig &config, const BatchOptions &options)
    {
        if (dataset.empty())
            throw std::invalid_argument("Dataset is empty.");
        config.validate();

        std::vector<std::optional<SimilarityReport>> slots(dataset.size());
        std::vector<std::string> errors(dataset.size());
        parallel_for(dataset.size(), options.threads, [&](std::size_t i)
                     {
                         try
                         {
                             slots[i] = analyze_pair(dataset[i], pattern_low, pattern_high, grid, config);
                         }
                         catch (const std::exception &e)
                         {
                             errors[i] = e.what();
                         } });

        std::vector<SimilarityReport> reports;
        std::vector<LinkFailure> failures;
        for (auto i : order_by_link_id(dataset))
        {
            if (slots[i])
                reports.push_back(std::move(*slots[i]));
            else
                failures.push_back({dataset[i].link_id(), errors[i]});
        }
        return aggregate(std::move(reports), std::move(failures));
    }

    PspBatch psp_dataset(const std::vector<LinkPair> &dataset, const Beampattern &pattern_low,
                         const Beampattern &pattern_high, const AngularGrid &grid, const BatchOptions &options)
    {
        if (dataset.empty())
            throw std::invalid_argument("Dataset is empty.");

        std::vector<std::optional<PspResult>> slots(dataset.size());
        std::vector<std::string> errors(dataset.size());
        parallel_for(dataset.size(), options.threads, [&](std::size_t i)
                     {
                         try
                         {
                             slots[i] = psp(dataset[i].low(), dataset[i].high(), pattern_low, pattern_high, grid);
                         }
                         catch (const std::exception &e)
                         {
                             errors[i] = e.what();
                         } });

        PspBatch out;
        std::vector<double> values;
        for (auto i : order_by_link_id(dataset))
        {
            if (slots[i])
            {
                out.per_link.emplace_back(dataset[i].link_id(), *slots[i]);
                values.push_back(slots[i]->psp_percent);
            }
            else
                out.failures.push_back({dataset[i].link_id(), errors[i]});
        }
        if (!values.empty())
            out.psp_cdf = empirical_cdf(values);
        return out;
    }
}

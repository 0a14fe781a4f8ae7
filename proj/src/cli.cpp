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

#include "xband/cli.hpp"
#include "xband/io.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <optional>

namespace xband::cli
{
    namespace
    {
        struct UsageError : std::runtime_error
        {
            using std::runtime_error::runtime_error;
        };

        struct AnalysisError : std::runtime_error
        {
            using std::runtime_error::runtime_error;
        };

        struct PairOptions
        {
            std::string data;
            double low_ghz = 0.0;
            double high_ghz = 0.0;
            double grid_step_deg = 1.0;
            std::optional<double> cull_db;
            unsigned threads = 0;
        };

        struct AnalysisOptions
        {
            std::string pattern_low = "gpp3:hpbw=10,amax=30";
            std::string pattern_high;
            std::string method = "m1";
            SimilarityConfig config;
        };

        void add_pair_flags(CLI::App *cmd, PairOptions &o)
        {
            cmd->add_option("--data", o.data, "Dataset file (.json or .csv)")->required();
            cmd->add_option("--low-ghz", o.low_ghz, "Low-band carrier frequency [GHz]")->required();
            cmd->add_option("--high-ghz", o.high_ghz, "High-band carrier frequency [GHz]")->required();
            cmd->add_option("--grid-step-deg", o.grid_step_deg, "Steering grid step [deg]")->capture_default_str();
            cmd->add_option("--cull-db", o.cull_db, "Drop rays more than this many dB below the strongest ray");
            cmd->add_option("--threads", o.threads, "Worker threads (0: all cores)")->capture_default_str();
        }

        void add_analysis_flags(CLI::App *cmd, AnalysisOptions &o)
        {
            cmd->add_option("--pattern-low", o.pattern_low, "Low-band beampattern spec")->capture_default_str();
            cmd->add_option("--pattern-high", o.pattern_high, "High-band beampattern spec (default: same as low)");
            cmd->add_option("--method", o.method, "Direction selection method")
                ->check(CLI::IsMember({"m1", "m2"}))
                ->capture_default_str();
            cmd->add_option("--delta-th-db", o.config.delta_th_db, "Selection threshold below the peak [dB]")
                ->capture_default_str();
            cmd->add_option("--delta-p-db", o.config.delta_p_db, "False-direction threshold [dB]")
                ->capture_default_str();
            cmd->add_option("--m2-corr", o.config.m2_correlation_threshold, "M2 CFR correlation gate")
                ->capture_default_str();
            cmd->add_option("--m2-points", o.config.m2_frequency_points, "M2 CFR frequency points")
                ->capture_default_str();
            cmd->add_option("--m2-bandwidth-ghz", o.config.m2_bandwidth_ghz, "M2 CFR bandwidth [GHz]")
                ->capture_default_str();
            cmd->add_flag("--psp", o.config.include_psp, "Also compute the PAS similarity percentage");
        }

        Beampattern pattern_or_usage(const std::string &spec)
        {
            try
            {
                return parse_pattern_spec(spec);
            }
            catch (const std::invalid_argument &e)
            {
                throw UsageError(e.what());
            }
        }

        AngularGrid grid_or_usage(double step)
        {
            try
            {
                return AngularGrid(step);
            }
            catch (const std::invalid_argument &e)
            {
                throw UsageError(std::string("--grid-step-deg: ") + e.what());
            }
        }

        std::vector<LinkPair> load_pairs(const PairOptions &o, std::ostream &err)
        {
            if (!(o.low_ghz <= o.high_ghz))
                throw UsageError("--low-ghz must not exceed --high-ghz.");
            LoadResult loaded = load_dataset(o.data, o.low_ghz, o.high_ghz);
            for (const auto &s : loaded.skipped)
                err << "warning: link " << s.link_id << " skipped: " << s.message << "\n";
            if (!loaded.skipped.empty())
                err << "warning: " << loaded.skipped.size() << " link(s) skipped\n";

            if (o.cull_db)
            {
                if (!(*o.cull_db > 0.0))
                    throw UsageError("--cull-db must be positive.");
                for (auto &p : loaded.pairs)
                    p = LinkPair(cull_dynamic_range(p.low(), *o.cull_db), cull_dynamic_range(p.high(), *o.cull_db));
            }
            if (loaded.pairs.empty())
                throw ValidationError("No link in '" + o.data + "' carries both requested bands.");
            return std::move(loaded.pairs);
        }

        SimilarityConfig resolve_config(AnalysisOptions &o)
        {
            o.config.method = parse_method(o.method);
            try
            {
                o.config.validate();
            }
            catch (const std::invalid_argument &e)
            {
                throw UsageError(e.what());
            }
            if (o.pattern_high.empty())
                o.pattern_high = o.pattern_low;
            return o.config;
        }

        ordered_json run_info(const PairOptions &p, const AnalysisOptions *a, const Beampattern &low,
                              const Beampattern &high)
        {
            ordered_json j;
            j["data"] = p.data;
            j["low_ghz"] = round_sig12(p.low_ghz);
            j["high_ghz"] = round_sig12(p.high_ghz);
            j["grid_step_deg"] = round_sig12(p.grid_step_deg);
            if (p.cull_db)
                j["cull_db"] = round_sig12(*p.cull_db);
            j["pattern_low"] = low.describe();
            j["pattern_high"] = high.describe();
            if (a)
                j["config"] = config_to_json(a->config);
            return j;
        }

        int cmd_analyze(const PairOptions &p, AnalysisOptions &a, const std::optional<std::string> &link,
                        std::ostream &out, std::ostream &err)
        {
            const SimilarityConfig config = resolve_config(a);
            const Beampattern low = pattern_or_usage(a.pattern_low);
            const Beampattern high = pattern_or_usage(a.pattern_high);
            const AngularGrid grid = grid_or_usage(p.grid_step_deg);
            const auto pairs = load_pairs(p, err);

            const LinkPair *chosen = nullptr;
            if (link)
            {
                for (const auto &pair : pairs)
                    if (pair.link_id() == *link)
                        chosen = &pair;
                if (!chosen)
                    throw ValidationError("Link '" + *link + "' not found (or lacks a requested band).");
            }
            else if (pairs.size() == 1)
                chosen = &pairs.front();
            else
                throw UsageError("--link is required when the dataset holds more than one link.");

            SimilarityReport report;
            try
            {
                report = analyze_pair(*chosen, low, high, grid, config);
            }
            catch (const std::exception &e)
            {
                throw AnalysisError("link " + chosen->link_id() + ": " + e.what());
            }
            out << report_to_json(report).dump(2) << "\n";
            return ok;
        }

        int cmd_batch(const PairOptions &p, AnalysisOptions &a, const std::string &out_dir, std::ostream &out,
                      std::ostream &err)
        {
            const SimilarityConfig config = resolve_config(a);
            const Beampattern low = pattern_or_usage(a.pattern_low);
            const Beampattern high = pattern_or_usage(a.pattern_high);
            const AngularGrid grid = grid_or_usage(p.grid_step_deg);
            const auto pairs = load_pairs(p, err);

            const BatchReport batch = analyze_dataset(pairs, low, high, grid, config, {p.threads});
            for (const auto &f : batch.failures)
                err << "warning: link " << f.link_id << " failed: " << f.message << "\n";
            if (batch.per_link.empty())
                throw AnalysisError("All links failed.");

            const std::filesystem::path dir(out_dir);
            std::error_code ec;
            std::filesystem::create_directories(dir, ec);
            if (ec)
                throw IoError("Cannot create output directory '" + out_dir + "': " + ec.message());

            write_text_file(dir / "batch_report.json", batch_to_json(batch, run_info(p, &a, low, high)).dump(2) + "\n");
            write_text_file(dir / "r_cdf.csv", cdf_to_csv(batch.r_cdf, "power_ratio_db"));
            write_text_file(dir / "nf_pdf.csv", pdf_to_csv(batch.nf_pdf, "n_false"));
            write_text_file(dir / "card_low_pdf.csv", pdf_to_csv(batch.card_low_pdf, "card_low"));
            write_text_file(dir / "card_high_pdf.csv", pdf_to_csv(batch.card_high_pdf, "card_high"));

            std::string pct = "level_percent,neg_r_db\n";
            for (const auto &[level, v] : batch.neg_r_percentiles)
                pct += std::to_string(level) + "," + format_sig12(v) + "\n";
            write_text_file(dir / "percentiles.csv", pct);

            out << "links analyzed: " << batch.per_link.size() << ", failed: " << batch.failures.size() << "\n";
            out << "-R percentiles [dB]: 10%=" << format_sig12(batch.neg_r_percentiles.at(10))
                << " 50%=" << format_sig12(batch.neg_r_percentiles.at(50))
                << " 90%=" << format_sig12(batch.neg_r_percentiles.at(90)) << "\n";
            out << "N_f: P(=0)=" << format_sig12(batch.nf_zero_fraction)
                << " P(<=1)=" << format_sig12(batch.nf_at_most_one_fraction) << "\n";
            return ok;
        }

        int cmd_psp(const PairOptions &p, double hpbw_deg, double amax_db, const std::string &out_dir,
                    std::ostream &out, std::ostream &err)
        {
            Beampattern pattern = Beampattern::gpp3(10.0, 30.0);
            try
            {
                pattern = Beampattern::gpp3(hpbw_deg, amax_db);
            }
            catch (const std::invalid_argument &e)
            {
                throw UsageError(e.what());
            }
            const AngularGrid grid = grid_or_usage(p.grid_step_deg);
            const auto pairs = load_pairs(p, err);

            const PspBatch batch = psp_dataset(pairs, pattern, pattern, grid, {p.threads});
            for (const auto &f : batch.failures)
                err << "warning: link " << f.link_id << " failed: " << f.message << "\n";
            if (batch.per_link.empty())
                throw AnalysisError("All links failed.");

            const std::string json = psp_batch_to_json(batch, run_info(p, nullptr, pattern, pattern)).dump(2) + "\n";
            if (out_dir.empty())
            {
                out << json;
                return ok;
            }
            const std::filesystem::path dir(out_dir);
            std::error_code ec;
            std::filesystem::create_directories(dir, ec);
            if (ec)
                throw IoError("Cannot create output directory '" + out_dir + "': " + ec.message());
            write_text_file(dir / "psp_report.json", json);
            write_text_file(dir / "psp_cdf.csv", cdf_to_csv(batch.psp_cdf, "psp_percent"));
            out << "links analyzed: " << batch.per_link.size() << ", failed: " << batch.failures.size() << "\n";
            return ok;
        }

        int cmd_generate(const std::string &config_path, int n_links, std::optional<std::uint64_t> seed,
                         const std::string &out_path, std::ostream &out)
        {
            GenConfig config;
            if (!config_path.empty())
            {
                const std::string text = read_text_file(config_path);
                ordered_json j;
                try
                {
                    j = ordered_json::parse(text);
                }
                catch (const nlohmann::json::parse_error &e)
                {
                    throw ValidationError(config_path + ": " + e.what());
                }
                config = gen_config_from_json(j);
            }
            if (seed)
                config.seed = *seed;
            if (n_links < 1)
                throw UsageError("--n-links must be at least 1.");

            ordered_json meta;
            meta["generator"] = "xband-synthgen";
            meta["rng"] = synthgen_rng_id;
            meta["n_links"] = n_links;
            meta["gen_config"] = gen_config_to_json(config);
            write_dataset(out_path, dataset_from_pairs(generate_dataset(config, n_links), meta));
            out << "wrote " << n_links << " links to " << out_path << "\n";
            return ok;
        }

        int cmd_pattern(const std::string &spec, double step, const std::string &out_path, std::ostream &out)
        {
            const Beampattern pattern = pattern_or_usage(spec);
            std::vector<PatternSample> samples;
            try
            {
                samples = tabulate(pattern, step);
            }
            catch (const std::invalid_argument &e)
            {
                throw UsageError(std::string("--step-deg: ") + e.what());
            }
            const std::string csv = pattern_to_csv(samples);
            if (out_path.empty())
                out << csv;
            else
                write_text_file(out_path, csv);
            return ok;
        }
    }

    int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
    {
        CLI::App app{"Cross-band spatial channel similarity: PAS similarity, beam-direction power ratio and "
                     "false directions",
                     "xband"};
        app.require_subcommand(1);

        PairOptions pair_opts;
        AnalysisOptions analysis_opts;

        auto *analyze = app.add_subcommand("analyze", "Analyze one link and print its report as JSON");
        add_pair_flags(analyze, pair_opts);
        add_analysis_flags(analyze, analysis_opts);
        std::optional<std::string> link;
        analyze->add_option("--link", link, "Link id to analyze");

        auto *batch = app.add_subcommand("batch", "Analyze all links and write aggregate statistics");
        add_pair_flags(batch, pair_opts);
        add_analysis_flags(batch, analysis_opts);
        std::string out_dir;
        batch->add_option("--out", out_dir, "Output directory")->required();

        auto *psp_cmd = app.add_subcommand("psp", "PAS similarity percentage per link with a 3GPP beam");
        add_pair_flags(psp_cmd, pair_opts);
        double hpbw_deg = 10.0, amax_db = 30.0;
        psp_cmd->add_option("--hpbw-deg", hpbw_deg, "HPBW of the filtering beam [deg]")->capture_default_str();
        psp_cmd->add_option("--amax-db", amax_db, "Peak-to-minimum gain ratio [dB]")->capture_default_str();
        std::string psp_out;
        psp_cmd->add_option("--out", psp_out, "Output directory (default: JSON to stdout)");

        auto *generate = app.add_subcommand("generate", "Write a synthetic multi-band dataset");
        std::string config_path, gen_out;
        int n_links = 0;
        std::optional<std::uint64_t> seed;
        generate->add_option("--config", config_path, "Generator config JSON (defaults if omitted)");
        generate->add_option("--n-links", n_links, "Number of links")->required();
        generate->add_option("--seed", seed, "Override the config seed");
        generate->add_option("--out", gen_out, "Output dataset path (.json or .csv)")->required();

        auto *pattern = app.add_subcommand("pattern", "Tabulate a beampattern as CSV");
        std::string spec, pattern_out;
        double step = 0.1;
        pattern->add_option("--spec", spec, "gpp3:hpbw=..,amax=.. | ula:n=..,spacing=..,floor=.. | file:<path>")
            ->required();
        pattern->add_option("--step-deg", step, "Offset step [deg]")->capture_default_str();
        pattern->add_option("--out", pattern_out, "Output CSV (default: stdout)");

        std::vector<std::string> storage{"xband"};
        storage.insert(storage.end(), args.begin(), args.end());
        std::vector<char *> argv;
        for (auto &s : storage)
            argv.push_back(s.data());

        try
        {
            app.parse(int(argv.size()), argv.data());
        }
        catch (const CLI::ParseError &e)
        {
            const int code = app.exit(e, out, err);
            return code == 0 ? ok : usage_error;
        }

        try
        {
            if (*analyze)
                return cmd_analyze(pair_opts, analysis_opts, link, out, err);
            if (*batch)
                return cmd_batch(pair_opts, analysis_opts, out_dir, out, err);
            if (*psp_cmd)
                return cmd_psp(pair_opts, hpbw_deg, amax_db, psp_out, out, err);
            if (*generate)
                return cmd_generate(config_path, n_links, seed, gen_out, out);
            if (*pattern)
                return cmd_pattern(spec, step, pattern_out, out);
        }
        catch (const UsageError &e)
        {
            err << "usage error: " << e.what() << "\n";
            return usage_error;
        }
        catch (const IoError &e)
        {
            err << "I/O error: " << e.what() << "\n";
            return io_error;
        }
        catch (const ValidationError &e)
        {
            err << "validation error: " << e.what() << "\n";
            return validation_error;
        }
        catch (const std::exception &e)
        {
            err << "analysis failed: " << e.what() << "\n";
            return analysis_failure;
        }
        return usage_error;
    }
}

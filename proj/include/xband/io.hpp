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

#include "xband/beampattern.hpp"
#include "xband/stats.hpp"
#include "xband/synthgen.hpp"

#include <json.hpp>

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace xband
{
    using ordered_json = nlohmann::ordered_json;

    inline constexpr const char *dataset_schema_version = "1.0";

    // File could not be opened, read or written
    struct IoError : std::runtime_error
    {
        using std::runtime_error::runtime_error;
    };

    // File parsed but its content violates the schema (message carries line/field diagnostics)
    struct ValidationError : std::runtime_error
    {
        using std::runtime_error::runtime_error;
    };

    struct LinkRecord
    {
        std::string link_id;
        std::vector<BandChannel> bands;
    };

    // In-memory form of the dataset file: dB / ns / degrees on disk, linear / s / degrees here
    struct DatasetFile
    {
        std::string schema_version = dataset_schema_version;
        ordered_json metadata = ordered_json::object();
        std::vector<LinkRecord> links;
    };

    struct LoadResult
    {
        std::vector<LinkPair> pairs;
        std::vector<LinkFailure> skipped; // links lacking one of the requested bands
    };

    DatasetFile dataset_from_pairs(const std::vector<LinkPair> &pairs, ordered_json metadata = ordered_json::object());

    DatasetFile parse_dataset_json(const std::string &text);
    DatasetFile parse_dataset_csv(const std::string &text);
    // Dispatches on extension: ".csv" reads the one-path-per-row form, anything else JSON
    DatasetFile read_dataset(const std::filesystem::path &path);

    std::string dataset_to_json(const DatasetFile &dataset);
    std::string dataset_to_csv(const DatasetFile &dataset);
    void write_dataset(const std::filesystem::path &path, const DatasetFile &dataset);

    // Picks the two requested bands of every link (frequency match within 1e-6 GHz)
    LoadResult select_pairs(const DatasetFile &dataset, double low_freq_ghz, double high_freq_ghz);
    LoadResult load_dataset(const std::filesystem::path &path, double low_freq_ghz, double high_freq_ghz);

    // "gpp3:hpbw=10,amax=30", "ula:n=8,spacing=0.5,floor=-60" or "file:<csv path>"
    Beampattern parse_pattern_spec(const std::string &spec);

    Beampattern read_pattern_csv(const std::filesystem::path &path);
    std::vector<PatternSample> parse_pattern_csv(const std::string &text);
    std::string pattern_to_csv(const std::vector<PatternSample> &samples);

    GenConfig gen_config_from_json(const ordered_json &j);
    ordered_json gen_config_to_json(const GenConfig &config);

    ordered_json config_to_json(const SimilarityConfig &config);

    // Reports use fixed key order and numbers rounded to 12 significant digits
    double round_sig12(double x);
    std::string format_sig12(double x);

    ordered_json report_to_json(const SimilarityReport &report);
    ordered_json batch_to_json(const BatchReport &batch, const ordered_json &run_info);
    ordered_json psp_batch_to_json(const PspBatch &batch, const ordered_json &run_info);

    std::string cdf_to_csv(const std::vector<CdfPoint> &cdf, const std::string &value_column);
    std::string pdf_to_csv(const std::map<int, double> &pdf, const std::string &value_column);

    std::string read_text_file(const std::filesystem::path &path);
    void write_text_file(const std::filesystem::path &path, const std::string &content);
}

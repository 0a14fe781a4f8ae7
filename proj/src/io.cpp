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

#include "xband/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace xband
{
    namespace
    {
        std::string trim(const std::string &s)
        {
            std::size_t a = 0, b = s.size();
            while (a < b && std::isspace(static_cast<unsigned char>(s[a])))
                ++a;
            while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1])))
                --b;
            return s.substr(a, b - a);
        }

        std::vector<std::string> split(const std::string &s, char sep)
        {
            std::vector<std::string> out;
            std::string cur;
            std::istringstream is(s);
            while (std::getline(is, cur, sep))
                out.push_back(trim(cur));
            if (!s.empty() && s.back() == sep)
                out.emplace_back();
            return out;
        }

        bool parse_double(const std::string &s, double &out)
        {
            if (s.empty())
                return false;
            char *end = nullptr;
            out = std::strtod(s.c_str(), &end);
            return end == s.c_str() + s.size();
        }

        std::string full_precision(double x)
        {
            char buf[40];
            std::snprintf(buf, sizeof(buf), "%.17g", x);
            return buf;
        }

        std::pair<std::size_t, std::size_t> line_col(const std::string &text, std::size_t byte)
        {
            std::size_t line = 1, col = 1;
            for (std::size_t i = 0; i < std::min(byte, text.size()); ++i)
            {
                if (text[i] == '\n')
                {
                    ++line;
                    col = 1;
                }
                else
                    ++col;
            }
            return {line, col};
        }

        [[noreturn]] void field_error(const std::string &where, const std::string &what)
        {
            throw ValidationError(where + ": " + what);
        }

        const ordered_json &require(const ordered_json &obj, const char *key, const std::string &where)
        {
            if (!obj.is_object())
                field_error(where, "expected an object");
            auto it = obj.find(key);
            if (it == obj.end())
                field_error(where + "." + key, "missing field");
            return *it;
        }

        double require_number(const ordered_json &obj, const char *key, const std::string &where)
        {
            const auto &v = require(obj, key, where);
            if (!v.is_number())
                field_error(where + "." + key, "expected a number");
            const double x = v.get<double>();
            if (!std::isfinite(x))
                field_error(where + "." + key, "value must be finite");
            return x;
        }

        // Checks the on-disk ranges and converts one path to a Ray
        Ray make_ray(double power_db, double delay_ns, double aoa_deg, std::optional<double> aod_deg,
                     const std::string &where)
        {
            if (!std::isfinite(power_db))
                field_error(where + ".power_db", "value must be finite");
            if (!std::isfinite(delay_ns) || delay_ns < 0.0)
                field_error(where + ".delay_ns", "delay must be >= 0");
            if (!(aoa_deg >= 0.0 && aoa_deg < 360.0))
                field_error(where + ".aoa_deg", "angle must be in [0, 360)");
            if (aod_deg && !(*aod_deg >= 0.0 && *aod_deg < 360.0))
                field_error(where + ".aod_deg", "angle must be in [0, 360)");
            const double power = db_to_linear(power_db);
            if (!(power > 0.0) || !std::isfinite(power))
                field_error(where + ".power_db", "power out of representable range");
            return Ray(power, delay_ns * 1e-9, aoa_deg, aod_deg);
        }

        void check_links(const DatasetFile &ds)
        {
            std::set<std::string> ids;
            for (std::size_t i = 0; i < ds.links.size(); ++i)
            {
                const auto &link = ds.links[i];
                const std::string where = "links[" + std::to_string(i) + "]";
                if (link.link_id.empty())
                    field_error(where + ".link_id", "link id must not be empty");
                if (!ids.insert(link.link_id).second)
                    field_error(where + ".link_id", "duplicate link id '" + link.link_id + "'");
                if (link.bands.empty())
                    field_error(where + ".bands", "link has no bands");
                for (std::size_t a = 0; a < link.bands.size(); ++a)
                    for (std::size_t b = a + 1; b < link.bands.size(); ++b)
                        if (std::abs(link.bands[a].frequency_ghz() - link.bands[b].frequency_ghz()) <= 1e-6)
                            field_error(where + ".bands[" + std::to_string(b) + "].freq_ghz",
                                        "duplicate band frequency");
            }
        }

        ordered_json directions_json(const std::vector<double> &angles)
        {
            ordered_json arr = ordered_json::array();
            for (double a : angles)
                arr.push_back(round_sig12(a));
            return arr;
        }

        ordered_json pdf_json(const std::map<int, double> &pdf)
        {
            ordered_json obj = ordered_json::object();
            for (const auto &[k, p] : pdf)
                obj[std::to_string(k)] = round_sig12(p);
            return obj;
        }

        ordered_json failures_json(const std::vector<LinkFailure> &failures)
        {
            ordered_json arr = ordered_json::array();
            for (const auto &f : failures)
                arr.push_back(ordered_json{{"link_id", f.link_id}, {"message", f.message}});
            return arr;
        }
    }

    std::string read_text_file(const std::filesystem::path &path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw IoError("Cannot open '" + path.string() + "' for reading.");
        std::ostringstream ss;
        ss << in.rdbuf();
        if (in.bad())
            throw IoError("Failed reading '" + path.string() + "'.");
        return ss.str();
    }

    void write_text_file(const std::filesystem::path &path, const std::string &content)
    {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out)
            throw IoError("Cannot open '" + path.string() + "' for writing.");
        out << content;
        out.flush();
        if (!out)
            throw IoError("Failed writing '" + path.string() + "'.");
    }

    DatasetFile dataset_from_pairs(const std::vector<LinkPair> &pairs, ordered_json metadata)
    {
        DatasetFile ds;
        ds.metadata = std::move(metadata);
        for (const auto &pair : pairs)
        {
            LinkRecord rec{pair.link_id(), {pair.low()}};
            if (pair.high().frequency_ghz() != pair.low().frequency_ghz())
                rec.bands.push_back(pair.high());
            ds.links.push_back(std::move(rec));
        }
        return ds;
    }

    DatasetFile parse_dataset_json(const std::string &text)
    {
        ordered_json root;
        try
        {
            root = ordered_json::parse(text);
        }
        catch (const nlohmann::json::parse_error &e)
        {
            auto [line, col] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
            throw ValidationError("JSON syntax error at line " + std::to_string(line) + ", column " +
                                  std::to_string(col) + ": " + e.what());
        }

        DatasetFile ds;
        const auto &version = require(root, "schema_version", "$");
        if (!version.is_string())
            field_error("$.schema_version", "expected a string");
        ds.schema_version = version.get<std::string>();
        if (ds.schema_version.empty() || ds.schema_version.front() != '1')
            field_error("$.schema_version", "unsupported schema version '" + ds.schema_version + "'");

        if (auto it = root.find("metadata"); it != root.end())
        {
            if (!it->is_object())
                field_error("$.metadata", "expected an object");
            ds.metadata = *it;
        }

        const auto &links = require(root, "links", "$");
        if (!links.is_array())
            field_error("$.links", "expected an array");

        for (std::size_t i = 0; i < links.size(); ++i)
        {
            const std::string lw = "links[" + std::to_string(i) + "]";
            const auto &link = links[i];
            const auto &id = require(link, "link_id", lw);
            if (!id.is_string() && !id.is_number_integer())
                field_error(lw + ".link_id", "expected a string");
            LinkRecord rec;
            rec.link_id = id.is_string() ? id.get<std::string>() : id.dump();

            const auto &bands = require(link, "bands", lw);
            if (!bands.is_array())
                field_error(lw + ".bands", "expected an array");
            for (std::size_t b = 0; b < bands.size(); ++b)
            {
                const std::string bw = lw + ".bands[" + std::to_string(b) + "]";
                const double freq = require_number(bands[b], "freq_ghz", bw);
                if (!(freq > 0.0))
                    field_error(bw + ".freq_ghz", "frequency must be positive");
                const auto &paths = require(bands[b], "paths", bw);
                if (!paths.is_array() || paths.empty())
                    field_error(bw + ".paths", "expected a non-empty array");

                std::vector<Ray> rays;
                for (std::size_t p = 0; p < paths.size(); ++p)
                {
                    const std::string pw = bw + ".paths[" + std::to_string(p) + "]";
                    const double power_db = require_number(paths[p], "power_db", pw);
                    const double delay_ns = require_number(paths[p], "delay_ns", pw);
                    const double aoa = require_number(paths[p], "aoa_deg", pw);
                    std::optional<double> aod;
                    if (auto it = paths[p].find("aod_deg"); it != paths[p].end() && !it->is_null())
                        aod = require_number(paths[p], "aod_deg", pw);
                    rays.push_back(make_ray(power_db, delay_ns, aoa, aod, pw));
                }
                rec.bands.emplace_back(freq, std::move(rays), rec.link_id);
            }
            ds.links.push_back(std::move(rec));
        }
        check_links(ds);
        return ds;
    }

    DatasetFile parse_dataset_csv(const std::string &text)
    {
        std::istringstream in(text);
        std::string line;
        std::size_t line_no = 0;
        std::map<std::string, std::size_t> col;
        bool have_header = false;

        // link order and band order follow first appearance
        std::vector<std::string> link_order;
        std::map<std::string, std::vector<std::pair<double, std::vector<Ray>>>> grouped;

        while (std::getline(in, line))
        {
            ++line_no;
            if (!line.empty() && line.back() == '\r')
                line.pop_back();
            const std::string t = trim(line);
            if (t.empty() || t.front() == '#')
                continue;
            const auto cells = split(t, ',');
            const std::string where = "line " + std::to_string(line_no);

            if (!have_header)
            {
                for (std::size_t c = 0; c < cells.size(); ++c)
                    col[cells[c]] = c;
                for (const char *name : {"link_id", "freq_ghz", "power_db", "delay_ns", "aoa_deg"})
                    if (!col.count(name))
                        field_error(where, std::string("header lacks column '") + name + "'");
                have_header = true;
                continue;
            }
            if (cells.size() != col.size())
                field_error(where, "expected " + std::to_string(col.size()) + " columns, found " +
                                       std::to_string(cells.size()));

            auto number = [&](const char *name)
            {
                double x;
                if (!parse_double(cells[col.at(name)], x))
                    field_error(where + ", column " + name, "not a number: '" + cells[col.at(name)] + "'");
                return x;
            };

            const std::string id = cells[col.at("link_id")];
            if (id.empty())
                field_error(where + ", column link_id", "empty link id");
            const double freq = number("freq_ghz");
            if (!(freq > 0.0) || !std::isfinite(freq))
                field_error(where + ", column freq_ghz", "frequency must be positive");
            std::optional<double> aod;
            if (col.count("aod_deg") && !cells[col.at("aod_deg")].empty())
                aod = number("aod_deg");
            Ray ray = make_ray(number("power_db"), number("delay_ns"), number("aoa_deg"), aod, where);

            auto [it, inserted] = grouped.try_emplace(id);
            if (inserted)
                link_order.push_back(id);
            auto &bands = it->second;
            auto band = std::find_if(bands.begin(), bands.end(), [&](const auto &b)
                                     { return b.first == freq; });
            if (band == bands.end())
                bands.push_back({freq, {ray}});
            else
                band->second.push_back(ray);
        }
        if (!have_header)
            throw ValidationError("line 1: missing CSV header");

        DatasetFile ds;
        for (const auto &id : link_order)
        {
            LinkRecord rec{id, {}};
            for (auto &[freq, rays] : grouped[id])
                rec.bands.emplace_back(freq, std::move(rays), id);
            ds.links.push_back(std::move(rec));
        }
        check_links(ds);
        return ds;
    }

    DatasetFile read_dataset(const std::filesystem::path &path)
    {
        const std::string text = read_text_file(path);
        try
        {
            if (path.extension() == ".csv")
                return parse_dataset_csv(text);
            return parse_dataset_json(text);
        }
        catch (const ValidationError &e)
        {
            throw ValidationError(path.string() + ": " + e.what());
        }
    }

    std::string dataset_to_json(const DatasetFile &dataset)
    {
        ordered_json root;
        root["schema_version"] = dataset.schema_version;
        root["metadata"] = dataset.metadata;
        ordered_json links = ordered_json::array();
        for (const auto &rec : dataset.links)
        {
            ordered_json bands = ordered_json::array();
            for (const auto &band : rec.bands)
            {
                ordered_json paths = ordered_json::array();
                for (const auto &ray : band.rays())
                {
                    ordered_json p;
                    p["power_db"] = linear_to_db(ray.power());
                    p["delay_ns"] = ray.delay() * 1e9;
                    p["aoa_deg"] = ray.aoa_deg();
                    if (ray.aod_deg())
                        p["aod_deg"] = *ray.aod_deg();
                    paths.push_back(std::move(p));
                }
                bands.push_back(ordered_json{{"freq_ghz", band.frequency_ghz()}, {"paths", std::move(paths)}});
            }
            links.push_back(ordered_json{{"link_id", rec.link_id}, {"bands", std::move(bands)}});
        }
        root["links"] = std::move(links);
        return root.dump(1) + "\n";
    }

    std::string dataset_to_csv(const DatasetFile &dataset)
    {
        std::string out = "link_id,freq_ghz,power_db,delay_ns,aoa_deg,aod_deg\n";
        for (const auto &rec : dataset.links)
            for (const auto &band : rec.bands)
                for (const auto &ray : band.rays())
                {
                    out += rec.link_id + "," + full_precision(band.frequency_ghz()) + "," +
                           full_precision(linear_to_db(ray.power())) + "," + full_precision(ray.delay() * 1e9) + "," +
                           full_precision(ray.aoa_deg()) + ",";
                    if (ray.aod_deg())
                        out += full_precision(*ray.aod_deg());
                    out += "\n";
                }
        return out;
    }

    void write_dataset(const std::filesystem::path &path, const DatasetFile &dataset)
    {
        write_text_file(path, path.extension() == ".csv" ? dataset_to_csv(dataset) : dataset_to_json(dataset));
    }

    LoadResult select_pairs(const DatasetFile &dataset, double low_freq_ghz, double high_freq_ghz)
    {
        if (!(low_freq_ghz <= high_freq_ghz))
            throw std::invalid_argument("Low frequency must not exceed high frequency.");

        auto find_band = [](const LinkRecord &rec, double f) -> const BandChannel *
        {
            for (const auto &b : rec.bands)
                if (std::abs(b.frequency_ghz() - f) <= 1e-6)
                    return &b;
            return nullptr;
        };

        LoadResult out;
        for (const auto &rec : dataset.links)
        {
            const BandChannel *low = find_band(rec, low_freq_ghz);
            const BandChannel *high = find_band(rec, high_freq_ghz);
            if (!low || !high)
            {
                std::string missing = !low ? "low band " + format_sig12(low_freq_ghz) : "";
                if (!high)
                    missing += std::string(missing.empty() ? "" : " and ") + "high band " + format_sig12(high_freq_ghz);
                out.skipped.push_back({rec.link_id, "missing " + missing + " GHz"});
                continue;
            }
            out.pairs.emplace_back(*low, *high);
        }
        return out;
    }

    LoadResult load_dataset(const std::filesystem::path &path, double low_freq_ghz, double high_freq_ghz)
    {
        return select_pairs(read_dataset(path), low_freq_ghz, high_freq_ghz);
    }

    Beampattern parse_pattern_spec(const std::string &spec)
    {
        const auto colon = spec.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("Pattern spec '" + spec + "' lacks a 'kind:' prefix.");
        const std::string kind = spec.substr(0, colon);
        const std::string rest = spec.substr(colon + 1);

        if (kind == "file")
        {
            if (rest.empty())
                throw std::invalid_argument("Pattern spec 'file:' needs a path.");
            return read_pattern_csv(rest);
        }

        std::map<std::string, double> kv;
        if (!rest.empty())
            for (const auto &item : split(rest, ','))
            {
                const auto eq = item.find('=');
                double x;
                if (eq == std::string::npos || !parse_double(trim(item.substr(eq + 1)), x))
                    throw std::invalid_argument("Malformed pattern parameter '" + item + "' in '" + spec + "'.");
                kv[trim(item.substr(0, eq))] = x;
            }

        auto take = [&](const std::string &key, std::optional<double> fallback)
        {
            auto it = kv.find(key);
            if (it == kv.end())
            {
                if (!fallback)
                    throw std::invalid_argument("Pattern spec '" + spec + "' needs '" + key + "='.");
                return *fallback;
            }
            const double v = it->second;
            kv.erase(it);
            return v;
        };

        Beampattern out = Beampattern::gpp3(10.0, 30.0);
        if (kind == "gpp3")
        {
            const double h = take("hpbw", std::nullopt);
            const double a = take("amax", 30.0);
            out = Beampattern::gpp3(h, a);
        }
        else if (kind == "ula")
        {
            const double n = take("n", std::nullopt);
            if (n != std::floor(n) || n < 2 || n > 1e6)
                throw std::invalid_argument("ULA element count must be an integer >= 2.");
            const double spacing = take("spacing", 0.5);
            const double floor_db = take("floor", -60.0);
            out = Beampattern::ula(int(n), spacing, floor_db);
        }
        else
            throw std::invalid_argument("Unknown pattern kind '" + kind + "' (expected gpp3, ula or file).");

        if (!kv.empty())
            throw std::invalid_argument("Unknown parameter '" + kv.begin()->first + "' in pattern spec '" + spec + "'.");
        return out;
    }

    std::vector<PatternSample> parse_pattern_csv(const std::string &text)
    {
        std::istringstream in(text);
        std::string line;
        std::size_t line_no = 0;
        std::vector<PatternSample> samples;
        while (std::getline(in, line))
        {
            ++line_no;
            const std::string t = trim(line);
            if (t.empty() || t.front() == '#')
                continue;
            const auto cells = split(t, ',');
            double off, gain;
            const bool ok = cells.size() == 2 && parse_double(cells[0], off) && parse_double(cells[1], gain);
            if (!ok)
            {
                if (samples.empty() && line_no == 1)
                    continue; // header
                throw ValidationError("line " + std::to_string(line_no) + ": expected 'offset_deg,gain_db'");
            }
            samples.push_back({off, gain});
        }
        return samples;
    }

    Beampattern read_pattern_csv(const std::filesystem::path &path)
    {
        try
        {
            return Beampattern::tabulated(parse_pattern_csv(read_text_file(path)));
        }
        catch (const std::invalid_argument &e)
        {
            throw ValidationError(path.string() + ": " + e.what());
        }
        catch (const ValidationError &e)
        {
            throw ValidationError(path.string() + ": " + e.what());
        }
    }

    std::string pattern_to_csv(const std::vector<PatternSample> &samples)
    {
        std::string out = "offset_deg,gain_db\n";
        for (const auto &s : samples)
            out += format_sig12(s.offset_deg) + "," + format_sig12(s.gain_db) + "\n";
        return out;
    }

    GenConfig gen_config_from_json(const ordered_json &j)
    {
        if (!j.is_object())
            throw ValidationError("generator config: expected a JSON object");
        GenConfig c;
        static const std::set<std::string> known = {
            "n_shared_paths", "n_low_only_paths", "n_high_only_paths", "shared_power_decay_db",
            "angle_jitter_deg", "power_jitter_db", "delay_spread_ns", "exclusive_deficit_min_db",
            "exclusive_deficit_max_db", "low_freq_ghz", "high_freq_ghz", "seed"};
        for (const auto &[key, value] : j.items())
            if (!known.count(key))
                field_error("generator config." + key, "unknown field");

        auto integer = [&](const char *key, int &dst)
        {
            if (auto it = j.find(key); it != j.end())
            {
                if (!it->is_number_integer())
                    field_error(std::string("generator config.") + key, "expected an integer");
                dst = it->get<int>();
            }
        };
        auto real = [&](const char *key, double &dst)
        {
            if (j.contains(key))
                dst = require_number(j, key, "generator config");
        };
        integer("n_shared_paths", c.n_shared_paths);
        integer("n_low_only_paths", c.n_low_only_paths);
        integer("n_high_only_paths", c.n_high_only_paths);
        real("shared_power_decay_db", c.shared_power_decay_db);
        real("angle_jitter_deg", c.angle_jitter_deg);
        real("power_jitter_db", c.power_jitter_db);
        real("delay_spread_ns", c.delay_spread_ns);
        real("exclusive_deficit_min_db", c.exclusive_deficit_min_db);
        real("exclusive_deficit_max_db", c.exclusive_deficit_max_db);
        real("low_freq_ghz", c.low_freq_ghz);
        real("high_freq_ghz", c.high_freq_ghz);
        if (auto it = j.find("seed"); it != j.end())
        {
            if (!it->is_number_unsigned() && !(it->is_number_integer() && it->get<long long>() >= 0))
                field_error("generator config.seed", "expected a non-negative integer");
            c.seed = it->get<std::uint64_t>();
        }
        try
        {
            c.validate();
        }
        catch (const std::invalid_argument &e)
        {
            throw ValidationError(std::string("generator config: ") + e.what());
        }
        return c;
    }

    ordered_json gen_config_to_json(const GenConfig &c)
    {
        return ordered_json{
            {"n_shared_paths", c.n_shared_paths},
            {"n_low_only_paths", c.n_low_only_paths},
            {"n_high_only_paths", c.n_high_only_paths},
            {"shared_power_decay_db", c.shared_power_decay_db},
            {"angle_jitter_deg", c.angle_jitter_deg},
            {"power_jitter_db", c.power_jitter_db},
            {"delay_spread_ns", c.delay_spread_ns},
            {"exclusive_deficit_min_db", c.exclusive_deficit_min_db},
            {"exclusive_deficit_max_db", c.exclusive_deficit_max_db},
            {"low_freq_ghz", c.low_freq_ghz},
            {"high_freq_ghz", c.high_freq_ghz},
            {"seed", c.seed}};
    }

    ordered_json config_to_json(const SimilarityConfig &c)
    {
        return ordered_json{
            {"method", to_string(c.method)},
            {"delta_th_db", round_sig12(c.delta_th_db)},
            {"delta_p_db", round_sig12(c.delta_p_db)},
            {"m2_correlation_threshold", round_sig12(c.m2_correlation_threshold)},
            {"m2_frequency_points", c.m2_frequency_points},
            {"m2_bandwidth_ghz", round_sig12(c.m2_bandwidth_ghz)},
            {"include_psp", c.include_psp}};
    }

    double round_sig12(double x)
    {
        if (!std::isfinite(x))
            return x;
        const double r = std::strtod(format_sig12(x).c_str(), nullptr);
        return r == 0.0 ? 0.0 : r;
    }

    std::string format_sig12(double x)
    {
        if (x == 0.0)
            return "0";
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.12g", x);
        return buf;
    }

    ordered_json report_to_json(const SimilarityReport &r)
    {
        ordered_json j;
        j["link_id"] = r.link_id;
        j["power_ratio_db"] = round_sig12(r.power_ratio_db);
        j["n_false"] = r.n_false;
        j["card_low"] = r.card_low;
        j["card_high"] = r.card_high;
        j["low_directions_deg"] = directions_json(r.low_directions);
        j["high_directions_deg"] = directions_json(r.high_directions);
        if (r.psp)
            j["psp"] = ordered_json{{"d_tv", round_sig12(r.psp->d_tv)},
                                    {"psp_percent", round_sig12(r.psp->psp_percent)}};
        return j;
    }

    ordered_json batch_to_json(const BatchReport &b, const ordered_json &run_info)
    {
        ordered_json j;
        j["schema_version"] = "xband-batch/1";
        j["run"] = run_info;
        j["n_links"] = b.per_link.size();
        j["n_failed"] = b.failures.size();

        ordered_json pct = ordered_json::object();
        for (const auto &[level, v] : b.neg_r_percentiles)
            pct[std::to_string(level)] = round_sig12(v);
        j["neg_r_percentiles_db"] = std::move(pct);
        j["nf_fractions"] = ordered_json{{"eq0", round_sig12(b.nf_zero_fraction)},
                                         {"le1", round_sig12(b.nf_at_most_one_fraction)}};
        j["nf_pdf"] = pdf_json(b.nf_pdf);
        j["card_low_pdf"] = pdf_json(b.card_low_pdf);
        j["card_high_pdf"] = pdf_json(b.card_high_pdf);

        ordered_json cdf = ordered_json::array();
        for (const auto &pt : b.r_cdf)
            cdf.push_back(ordered_json::array({round_sig12(pt.value), round_sig12(pt.probability)}));
        j["r_cdf"] = std::move(cdf);
        j["failures"] = failures_json(b.failures);

        ordered_json links = ordered_json::array();
        for (const auto &r : b.per_link)
            links.push_back(report_to_json(r));
        j["per_link"] = std::move(links);
        return j;
    }

    ordered_json psp_batch_to_json(const PspBatch &b, const ordered_json &run_info)
    {
        ordered_json j;
        j["schema_version"] = "xband-psp/1";
        j["run"] = run_info;
        j["n_links"] = b.per_link.size();
        j["n_failed"] = b.failures.size();
        ordered_json cdf = ordered_json::array();
        for (const auto &pt : b.psp_cdf)
            cdf.push_back(ordered_json::array({round_sig12(pt.value), round_sig12(pt.probability)}));
        j["psp_cdf"] = std::move(cdf);
        j["failures"] = failures_json(b.failures);
        ordered_json links = ordered_json::array();
        for (const auto &[id, r] : b.per_link)
            links.push_back(ordered_json{{"link_id", id},
                                         {"d_tv", round_sig12(r.d_tv)},
                                         {"psp_percent", round_sig12(r.psp_percent)}});
        j["per_link"] = std::move(links);
        return j;
    }

    std::string cdf_to_csv(const std::vector<CdfPoint> &cdf, const std::string &value_column)
    {
        std::string out = value_column + ",cumulative_probability\n";
        for (const auto &pt : cdf)
            out += format_sig12(pt.value) + "," + format_sig12(pt.probability) + "\n";
        return out;
    }

    std::string pdf_to_csv(const std::map<int, double> &pdf, const std::string &value_column)
    {
        std::string out = value_column + ",probability\n";
        for (const auto &[k, p] : pdf)
            out += std::to_string(k) + "," + format_sig12(p) + "\n";
        return out;
    }
}

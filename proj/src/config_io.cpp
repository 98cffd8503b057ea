// SPDX-License-Identifier: Apache-2.0

#include "bdma/config_io.hpp"
#include "bdma/error.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>

namespace bdma
{
    namespace
    {
        std::string_view trim(std::string_view s)
        {
            const auto first = s.find_first_not_of(" \t\r");
            if (first == std::string_view::npos)
                return {};
            const auto last = s.find_last_not_of(" \t\r");
            return s.substr(first, last - first + 1);
        }

        std::string fmt_double(double v)
        {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.17g", v);
            return buf;
        }

        class Reader
        {
        public:
            explicit Reader(const Settings &s) : s_(s) {}

            const std::string &text(const std::string &key) const
            {
                const auto it = s_.find(key);
                if (it == s_.end())
                    throw ConfigError("missing setting '" + key + "'");
                return it->second;
            }

            double real(const std::string &key) const
            {
                const auto &t = text(key);
                double v = 0.0;
                const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
                if (ec != std::errc() || ptr != t.data() + t.size() || !std::isfinite(v))
                    throw ConfigError(key + " = '" + t + "': expected a finite number");
                return v;
            }

            double positive(const std::string &key, std::string_view unit) const
            {
                const double v = real(key);
                if (!(v > 0.0))
                    throw ConfigError(key + " = " + text(key) + ": must be > 0 " + std::string(unit));
                return v;
            }

            double non_negative(const std::string &key, std::string_view unit) const
            {
                const double v = real(key);
                if (!(v >= 0.0))
                    throw ConfigError(key + " = " + text(key) + ": must be >= 0 " + std::string(unit));
                return v;
            }

            std::uint64_t count(const std::string &key, std::uint64_t min_value = 0) const
            {
                const auto &t = text(key);
                std::uint64_t v = 0;
                const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
                if (ec != std::errc() || ptr != t.data() + t.size())
                    throw ConfigError(key + " = '" + t + "': expected a non-negative integer");
                if (v < min_value)
                    throw ConfigError(key + " = " + t + ": must be >= " + std::to_string(min_value));
                return v;
            }

        private:
            const Settings &s_;
        };

        std::vector<Scheme> parse_scheme_list(const std::string &text)
        {
            std::vector<Scheme> out;
            std::string_view rest = text;
            while (!rest.empty())
            {
                const auto comma = rest.find(',');
                const auto token = trim(rest.substr(0, comma));
                if (token.empty())
                    throw ConfigError("schemes = '" + text + "': empty scheme token");
                const auto s = parse_scheme(token);
                if (std::find(out.begin(), out.end(), s) != out.end())
                    throw ConfigError("schemes = '" + text + "': scheme '" + std::string(token) + "' listed twice");
                out.push_back(s);
                rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
            }
            if (out.empty())
                throw ConfigError("schemes: at least one scheme is required (valid: bdma, tdma, fdma, noma)");
            return out;
        }

        std::string join_schemes(const std::vector<Scheme> &schemes)
        {
            std::string s;
            for (std::size_t i = 0; i < schemes.size(); ++i)
                s += (i ? "," : "") + std::string(to_string(schemes[i]));
            return s;
        }
    }

    Settings default_settings()
    {
        return to_settings(ScenarioConfig{});
    }

    Settings parse_settings(std::string_view text, std::string_view source)
    {
        const auto known = default_settings();
        Settings out;
        std::size_t line_no = 0;
        while (!text.empty())
        {
            ++line_no;
            const auto eol = text.find('\n');
            std::string_view line = text.substr(0, eol);
            text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

            if (const auto hash = line.find('#'); hash != std::string_view::npos)
                line = line.substr(0, hash);
            line = trim(line);
            if (line.empty())
                continue;

            const std::string where = std::string(source) + ":" + std::to_string(line_no);
            const auto eq = line.find('=');
            if (eq == std::string_view::npos)
                throw ConfigError(where + ": expected 'key = value'");
            const std::string key(trim(line.substr(0, eq)));
            const std::string value(trim(line.substr(eq + 1)));
            if (key.empty() || value.empty())
                throw ConfigError(where + ": expected 'key = value'");
            if (!known.contains(key))
                throw ConfigError(where + ": unknown key '" + key + "'");
            if (!out.emplace(key, value).second)
                throw ConfigError(where + ": duplicate key '" + key + "'");
        }
        return out;
    }

    Settings merge_settings(Settings base, const Settings &overrides)
    {
        const auto known = default_settings();
        for (const auto &[k, v] : overrides)
        {
            if (!known.contains(k))
                throw ConfigError("unknown key '" + k + "'");
            base[k] = v;
        }
        return base;
    }

    ScenarioConfig build_scenario(const Settings &settings)
    {
        const Reader r(settings);
        ScenarioConfig c;

        const auto n_antennas = r.count("n_antennas", 1);
        const auto n_chains = r.count("n_chains", 1);
        const double spacing = r.positive("element_spacing", "wavelengths");
        if (n_antennas % n_chains != 0)
            throw ConfigError("n_antennas = " + std::to_string(n_antennas) + ", n_chains = " + std::to_string(n_chains) +
                              ": n_antennas must be a multiple of n_chains (elements per sub-array must be an integer)");
        c.array = ArrayLayout(n_antennas, n_chains, spacing);

        c.n_users = r.count("n_users", 1);
        c.n_far_users = r.count("n_far_users");
        c.n_irs_elements = r.count("n_irs_elements");
        c.total_power_w = r.positive("total_power_w", "W");
        c.sidelobes = parse_sidelobe_model(r.text("sidelobe_model"));
        c.n_drops = r.count("n_drops", 1);
        c.seed = r.count("seed");
        c.schemes = parse_scheme_list(r.text("schemes"));
        c.threads = r.count("threads");

        c.bs_position = {r.real("geometry.bs_x"), r.real("geometry.bs_y")};
        c.irs_position = {r.real("geometry.irs_x"), r.real("geometry.irs_y")};
        c.center_side_m = r.positive("geometry.center_side_m", "m");
        c.edge_square = {{r.real("geometry.edge_min_x"), r.real("geometry.edge_min_y")},
                         {r.real("geometry.edge_max_x"), r.real("geometry.edge_max_y")}};
        c.min_distance_m = r.non_negative("geometry.min_distance_m", "m");

        auto &ls = c.large_scale;
        ls.nlos_intercept_db = r.real("channel.nlos_intercept_db");
        ls.nlos_slope = r.real("channel.nlos_slope_db");
        ls.shadowing_std_db = r.non_negative("channel.shadowing_std_db", "dB");
        ls.los_ref_loss_db = r.real("channel.los_ref_loss_db");
        ls.los_exponent = r.positive("channel.los_exponent", "");
        ls.rician_factor = r.non_negative("channel.rician_factor", "(linear)");
        const auto &unit = r.text("channel.nlos_distance_unit");
        if (unit == "km")
            ls.nlos_distance_unit = DistanceUnit::kilometers;
        else if (unit == "m")
            ls.nlos_distance_unit = DistanceUnit::meters;
        else
            throw ConfigError("channel.nlos_distance_unit = '" + unit + "': expected 'm' or 'km'");

        c.noise.bandwidth_hz = r.positive("noise.bandwidth_hz", "Hz");
        c.noise.temperature_k = r.positive("noise.temperature_k", "K");
        c.noise.noise_figure_db = r.real("noise.noise_figure_db");

        c.validate();
        return c;
    }

    Settings to_settings(const ScenarioConfig &c)
    {
        Settings s;
        s["n_antennas"] = std::to_string(c.array.n_total());
        s["n_chains"] = std::to_string(c.array.n_chains());
        s["element_spacing"] = fmt_double(c.array.spacing());
        s["n_users"] = std::to_string(c.n_users);
        s["n_far_users"] = std::to_string(c.n_far_users);
        s["n_irs_elements"] = std::to_string(c.n_irs_elements);
        s["total_power_w"] = fmt_double(c.total_power_w);
        s["sidelobe_model"] = std::string(to_string(c.sidelobes));
        s["n_drops"] = std::to_string(c.n_drops);
        s["seed"] = std::to_string(c.seed);
        s["schemes"] = join_schemes(c.schemes);
        s["threads"] = std::to_string(c.threads);

        s["geometry.bs_x"] = fmt_double(c.bs_position.x);
        s["geometry.bs_y"] = fmt_double(c.bs_position.y);
        s["geometry.irs_x"] = fmt_double(c.irs_position.x);
        s["geometry.irs_y"] = fmt_double(c.irs_position.y);
        s["geometry.center_side_m"] = fmt_double(c.center_side_m);
        s["geometry.edge_min_x"] = fmt_double(c.edge_square.lo.x);
        s["geometry.edge_min_y"] = fmt_double(c.edge_square.lo.y);
        s["geometry.edge_max_x"] = fmt_double(c.edge_square.hi.x);
        s["geometry.edge_max_y"] = fmt_double(c.edge_square.hi.y);
        s["geometry.min_distance_m"] = fmt_double(c.min_distance_m);

        const auto &ls = c.large_scale;
        s["channel.nlos_intercept_db"] = fmt_double(ls.nlos_intercept_db);
        s["channel.nlos_slope_db"] = fmt_double(ls.nlos_slope);
        s["channel.shadowing_std_db"] = fmt_double(ls.shadowing_std_db);
        s["channel.los_ref_loss_db"] = fmt_double(ls.los_ref_loss_db);
        s["channel.los_exponent"] = fmt_double(ls.los_exponent);
        s["channel.rician_factor"] = fmt_double(ls.rician_factor);
        s["channel.nlos_distance_unit"] = ls.nlos_distance_unit == DistanceUnit::kilometers ? "km" : "m";

        s["noise.bandwidth_hz"] = fmt_double(c.noise.bandwidth_hz);
        s["noise.temperature_k"] = fmt_double(c.noise.temperature_k);
        s["noise.noise_figure_db"] = fmt_double(c.noise.noise_figure_db);
        return s;
    }

    std::string format_settings(const Settings &settings)
    {
        std::string out;
        for (const auto &[k, v] : settings)
            out += k + " = " + v + "\n";
        return out;
    }

    ScenarioConfig parse_config(const std::filesystem::path &path)
    {
        std::ifstream in(path);
        if (!in)
            throw ConfigError("cannot read config file '" + path.string() + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        return build_scenario(merge_settings(default_settings(), parse_settings(ss.str(), path.string())));
    }

    RunManifest make_manifest(const ScenarioConfig &scenario)
    {
        RunManifest m;
        m.resolved = to_settings(scenario);
        m.seed = scenario.seed;
        const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
        std::tm utc{};
        gmtime_r(&now, &utc);
        char buf[32];
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
        m.timestamp = buf;
        return m;
    }

    std::string format_number(double v)
    {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.9g", v);
        return buf;
    }

    std::vector<std::filesystem::path> emit_cdf(const CampaignResult &result, RunManifest manifest,
                                                const std::filesystem::path &out_dir)
    {
        if (result.summaries.empty())
            throw DomainError("emit_cdf: no summaries");

        std::error_code ec;
        std::filesystem::create_directories(out_dir, ec);
        if (ec)
            throw IoError("cannot create output directory '" + out_dir.string() + "': " + ec.message());

        std::vector<std::filesystem::path> written;
        const auto write = [&](const std::string &name, const std::string &body) {
            const auto path = out_dir / name;
            std::ofstream out(path, std::ios::binary | std::ios::trunc);
            out << body;
            out.close();
            if (!out)
                throw IoError("cannot write '" + path.string() + "'");
            written.push_back(path);
        };

        std::string summary = "scheme,p05,p50,p95,mean\n";
        for (const auto &c : result.summaries)
        {
            const std::string name = "cdf_" + std::string(to_string(c.scheme)) + ".csv";
            std::string body = "cdf_level,sum_se_bps_per_hz\n";
            const auto n = c.sorted_sums.size();
            for (std::size_t i = 1; i <= n; ++i)
                body += format_number(static_cast<double>(i) / static_cast<double>(n)) + "," +
                        format_number(c.sorted_sums[i - 1]) + "\n";
            write(name, body);
            manifest.outputs.push_back(name);

            summary += std::string(to_string(c.scheme)) + "," + format_number(percentile(c, 0.05)) + "," +
                       format_number(percentile(c, 0.50)) + "," + format_number(percentile(c, 0.95)) + "," +
                       format_number(c.mean()) + "\n";
        }
        write("summary.csv", summary);
        manifest.outputs.push_back("summary.csv");

        std::string outputs;
        for (const auto &o : manifest.outputs)
            outputs += (outputs.empty() ? "" : ", ") + o;
        std::string header = "# bdma-sim run manifest; re-run with --config on this file\n";
        header += "# tool_version = " + manifest.tool_version + "\n";
        header += "# seed = " + std::to_string(manifest.seed) + "\n";
        header += "# timestamp = " + manifest.timestamp + "\n";
        header += "# output_dir = " + out_dir.string() + "\n";
        header += "# outputs = " + outputs + ", manifest.cfg\n";
        write("manifest.cfg", header + format_settings(manifest.resolved));
        return written;
    }
}

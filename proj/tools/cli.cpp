// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include "bdma/config_io.hpp"
#include "bdma/error.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

namespace bdma::cli
{
    namespace
    {
        Settings read_file_settings(const std::string &path)
        {
            std::ifstream in(path);
            if (!in)
                throw ConfigError("cannot read config file '" + path + "'");
            std::ostringstream ss;
            ss << in.rdbuf();
            return parse_settings(ss.str(), path);
        }

        void print_summary(const CampaignResult &result, std::ostream &out)
        {
            char line[160];
            std::snprintf(line, sizeof line, "%-6s %12s %12s %12s %12s\n", "scheme", "p05", "p50", "p95", "mean");
            out << line;
            for (const auto &c : result.summaries)
            {
                std::snprintf(line, sizeof line, "%-6s %12.4f %12.4f %12.4f %12.4f\n",
                              std::string(to_string(c.scheme)).c_str(), percentile(c, 0.05), percentile(c, 0.5),
                              percentile(c, 0.95), c.mean());
                out << line;
            }
        }
    }

    int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
    {
        CLI::App app{"Monte-Carlo sum spectral efficiency of IRS-aided multiple access (BDMA, TDMA, FDMA, NOMA)",
                     "bdma-sim"};
        std::string config_path;
        std::string out_dir = "results";
        std::optional<std::uint64_t> drops;
        std::optional<std::uint64_t> seed;
        std::optional<std::uint64_t> threads;
        std::optional<std::string> schemes;
        std::optional<std::string> unit;
        std::optional<std::string> sidelobes;

        app.add_option("--config", config_path, "key = value scenario file")->check(CLI::ExistingFile);
        app.add_option("--drops", drops, "number of Monte-Carlo drops");
        app.add_option("--seed", seed, "master random seed");
        app.add_option("--schemes", schemes, "comma-separated list of bdma, tdma, fdma, noma");
        app.add_option("--out", out_dir, "output directory")->capture_default_str();
        app.add_option("--unit-override", unit, "distance unit of the NLOS path-loss law")
            ->check(CLI::IsMember({"m", "km"}));
        app.add_option("--sidelobe-model", sidelobes, "beam-pattern evaluation")->check(CLI::IsMember({"ideal", "exact"}));
        app.add_option("--threads", threads, "worker threads (0 = all cores); results do not depend on it");
        app.set_version_flag("--version", std::string(tool_version));

        std::vector<const char *> argv{"bdma-sim"};
        for (const auto &a : args)
            argv.push_back(a.c_str());
        try
        {
            app.parse(static_cast<int>(argv.size()), argv.data());
        }
        catch (const CLI::CallForHelp &e)
        {
            out << app.help();
            return 0;
        }
        catch (const CLI::CallForVersion &e)
        {
            out << tool_version << "\n";
            return 0;
        }
        catch (const CLI::ParseError &e)
        {
            err << "error: " << e.what() << "\n" << app.help();
            return 2;
        }

        try
        {
            Settings settings = default_settings();
            if (!config_path.empty())
                settings = merge_settings(std::move(settings), read_file_settings(config_path));

            Settings flags;
            if (drops)
                flags["n_drops"] = std::to_string(*drops);
            if (seed)
                flags["seed"] = std::to_string(*seed);
            if (schemes)
                flags["schemes"] = *schemes;
            if (unit)
                flags["channel.nlos_distance_unit"] = *unit;
            if (sidelobes)
                flags["sidelobe_model"] = *sidelobes;
            if (threads)
                flags["threads"] = std::to_string(*threads);
            settings = merge_settings(std::move(settings), flags);

            const ScenarioConfig scenario = build_scenario(settings);
            const auto result = run_campaign(scenario);
            emit_cdf(result, make_manifest(scenario), out_dir);
            print_summary(result, out);
            out << "wrote " << out_dir << "\n";
            return 0;
        }
        catch (const ConfigError &e)
        {
            err << "configuration error: " << e.what() << "\n";
            return 2;
        }
        catch (const std::exception &e)
        {
            err << "error: " << e.what() << "\n";
            return 1;
        }
    }
}

// SPDX-License-Identifier: Apache-2.0
//
// Scenario configuration files and result emission.
//
// Config files are flat `key = value` lines; keys may carry a dotted section prefix
// (`channel.rician_factor = 5`). `#` starts a comment. Unknown keys are rejected and
// missing keys take the defaults of default_settings().

#ifndef BDMA_CONFIG_IO_HPP
#define BDMA_CONFIG_IO_HPP

#include "bdma/sim_engine.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace bdma
{
    inline constexpr std::string_view tool_version = "1.0.0";

    // Resolved key -> value text, ordered by key.
    using Settings = std::map<std::string, std::string>;

    Settings default_settings();

    // Parses config text; `source` names the origin in error messages. Throws ConfigError on
    // malformed lines, duplicate keys, or unknown keys.
    Settings parse_settings(std::string_view text, std::string_view source = "<config>");

    // Layers `overrides` on top of `base`; keys of `overrides` must be known.
    Settings merge_settings(Settings base, const Settings &overrides);

    // Throws ConfigError naming the offending key and constraint.
    ScenarioConfig build_scenario(const Settings &settings);

    Settings to_settings(const ScenarioConfig &scenario);

    std::string format_settings(const Settings &settings);

    // Defaults overlaid with the file at `path`.
    ScenarioConfig parse_config(const std::filesystem::path &path);

    struct RunManifest
    {
        Settings resolved;
        std::string tool_version{bdma::tool_version};
        std::uint64_t seed = 0;
        std::string timestamp;
        std::vector<std::string> outputs;
    };

    RunManifest make_manifest(const ScenarioConfig &scenario);

    // Numbers with 9 significant digits.
    std::string format_number(double v);

    // Writes cdf_<scheme>.csv per scheme, summary.csv and manifest.cfg into out_dir.
    // Returns the written paths. Throws IoError if a file cannot be written.
    std::vector<std::filesystem::path> emit_cdf(const CampaignResult &result, RunManifest manifest,
                                                const std::filesystem::path &out_dir);
}

#endif

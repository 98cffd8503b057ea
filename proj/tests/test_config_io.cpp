// SPDX-License-Identifier: Apache-2.0

#include "bdma/config_io.hpp"
#include "bdma/error.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace bdma;
namespace fs = std::filesystem;

namespace
{
    fs::path scratch_dir(const std::string &name)
    {
        const auto dir = fs::temp_directory_path() / ("bdma_config_io_" + name);
        fs::remove_all(dir);
        fs::create_directories(dir);
        return dir;
    }

    std::string slurp(const fs::path &p)
    {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    void spit(const fs::path &p, const std::string &text)
    {
        std::ofstream(p, std::ios::binary) << text;
    }

    CampaignResult fake_result()
    {
        CampaignResult r;
        CdfSummary c;
        c.scheme = Scheme::bdma;
        c.sorted_sums = {1.0, 2.0, 3.0, 4.0};
        r.summaries.push_back(c);
        return r;
    }
}

TEST_CASE("empty config yields the defaults")
{
    const auto dir = scratch_dir("empty");
    spit(dir / "empty.cfg", "# nothing here\n\n");
    const auto c = parse_config(dir / "empty.cfg");
    const ScenarioConfig d;
    CHECK(c.array.n_total() == 64);
    CHECK(c.array.n_chains() == 8);
    CHECK(c.n_users == 8);
    CHECK(c.n_irs_elements == 200);
    CHECK(c.total_power_w == 20.0);
    CHECK(c.n_drops == 2000);
    CHECK(to_settings(c) == to_settings(d));
}

TEST_CASE("overrides with sections and comments")
{
    const auto s = parse_settings("n_antennas = 128\nn_chains=16   # sixteen chains\n  n_users = 16\n"
                                  "channel.rician_factor = 10\nnoise.noise_figure_db = 7\n");
    const auto c = build_scenario(merge_settings(default_settings(), s));
    CHECK(c.array.n_total() == 128);
    CHECK(c.array.n_chains() == 16);
    CHECK(c.array.n_per_sub() == 8);
    CHECK(c.n_users == 16);
    CHECK(c.large_scale.rician_factor == 10.0);
    CHECK(c.noise.noise_figure_db == 7.0);
}

TEST_CASE("configuration errors name the problem")
{
    const auto build = [](const std::string &text) {
        return build_scenario(merge_settings(default_settings(), parse_settings(text, "t.cfg")));
    };
    CHECK_THROWS_WITH_AS(build("n_antennas = 60\n"), doctest::Contains("multiple of n_chains"), ConfigError);
    CHECK_THROWS_WITH_AS(build("n_antenas = 64\n"), doctest::Contains("t.cfg:1: unknown key 'n_antenas'"), ConfigError);
    CHECK_THROWS_WITH_AS(build("\nn_users 8\n"), doctest::Contains("t.cfg:2"), ConfigError);
    CHECK_THROWS_WITH_AS(build("seed = 1\nseed = 2\n"), doctest::Contains("duplicate key 'seed'"), ConfigError);
    CHECK_THROWS_WITH_AS(build("total_power_w = -3\n"), doctest::Contains("total_power_w"), ConfigError);
    CHECK_THROWS_WITH_AS(build("n_drops = ten\n"), doctest::Contains("n_drops"), ConfigError);
    CHECK_THROWS_WITH_AS(build("schemes = bdma,xdma\n"), doctest::Contains("valid: bdma, tdma, fdma, noma"),
                         ConfigError);
    CHECK_THROWS_AS(build("channel.nlos_distance_unit = mi\n"), ConfigError);
    CHECK_THROWS_AS(build("n_far_users = 9\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("/nonexistent/path.cfg"), ConfigError);
}

TEST_CASE("settings round-trip")
{
    ScenarioConfig c;
    c.total_power_w = 0.1;
    c.large_scale.nlos_distance_unit = DistanceUnit::meters;
    c.schemes = {Scheme::noma, Scheme::tdma};
    const auto text = format_settings(to_settings(c));
    const auto back = build_scenario(merge_settings(default_settings(), parse_settings(text)));
    CHECK(to_settings(back) == to_settings(c));
    CHECK(back.total_power_w == 0.1);
}

TEST_CASE("format_number")
{
    CHECK(format_number(0.25) == "0.25");
    CHECK(format_number(1.0 / 3.0) == "0.333333333");
    CHECK(format_number(42.0) == "42");
}

TEST_CASE("emit_cdf")
{
    const auto dir = scratch_dir("emit");
    ScenarioConfig scenario;
    auto manifest = make_manifest(scenario);
    const auto paths = emit_cdf(fake_result(), manifest, dir / "a");
    CHECK(paths.size() == 3);
    CHECK(slurp(dir / "a" / "cdf_bdma.csv") ==
          "cdf_level,sum_se_bps_per_hz\n0.25,1\n0.5,2\n0.75,3\n1,4\n");
    CHECK(slurp(dir / "a" / "summary.csv") == "scheme,p05,p50,p95,mean\nbdma,1,2,4,2.5\n");

    SUBCASE("repeatable output")
    {
        emit_cdf(fake_result(), manifest, dir / "b");
        CHECK(slurp(dir / "a" / "cdf_bdma.csv") == slurp(dir / "b" / "cdf_bdma.csv"));
        CHECK(slurp(dir / "a" / "summary.csv") == slurp(dir / "b" / "summary.csv"));
    }
    SUBCASE("manifest reproduces the scenario")
    {
        const auto text = slurp(dir / "a" / "manifest.cfg");
        CHECK(text.find("# tool_version = 1.0.0") != std::string::npos);
        CHECK(text.find("# seed = 1") != std::string::npos);
        CHECK(to_settings(parse_config(dir / "a" / "manifest.cfg")) == to_settings(scenario));
    }
    SUBCASE("unwritable destination")
    {
        spit(dir / "blocker", "x");
        CHECK_THROWS_AS(emit_cdf(fake_result(), manifest, dir / "blocker" / "sub"), IoError);
    }
}

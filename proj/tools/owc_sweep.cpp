// SPDX-License-Identifier: Apache-2.0
//
// owc-laser: indoor laser-based optical wireless network simulator
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

// owc_sweep: beam-waist sweep front end.
//
// Exit codes: 0 ok, 1 usage, 2 config parse, 3 validation, 4 domain,
// 5 infeasible (U > A), 6 singular channel, 7 I/O, 10 other.

#include "owc/error.hpp"
#include "owc/scene.hpp"
#include "owc/sweep.hpp"

#include <CLI11.hpp>
#include <fmt/core.h>

#include <cstdio>
#include <optional>

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitOther = 10;

std::vector<owc::LensMode> parse_lens(const std::string& text)
{
    if (text == "on")
        return {owc::LensMode::on};
    if (text == "off")
        return {owc::LensMode::off};
    return {owc::LensMode::off, owc::LensMode::on};
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Beam-waist sweep for indoor laser optical wireless networks"};

    std::optional<std::string> config_path;
    owc::SweepSpec sweep;
    std::string lens = "both";
    std::string placement = "on-axis";
    std::string rate_model = "shannon";
    std::string out_dir = "sweep_out";
    std::size_t users = 0;
    bool dump_channel = false;
    bool dump_precoder = false;

    app.add_option("--config", config_path, "Scene config (INI); defaults used when omitted");
    app.add_option("--waist-start", sweep.waist_start, "First beam waist [m]")->capture_default_str();
    app.add_option("--waist-end", sweep.waist_end, "Last beam waist [m]")->capture_default_str();
    app.add_option("--steps", sweep.steps, "Number of waist values (>= 2)")->capture_default_str();
    app.add_option("--lens", lens, "Lens modes to run")
        ->check(CLI::IsMember({"on", "off", "both"}))
        ->capture_default_str();
    app.add_option("--seeds", sweep.seeds, "Comma-separated user-placement seeds")
        ->delimiter(',')
        ->capture_default_str();
    app.add_option("--users", users, "User count (default: one per AP)");
    app.add_option("--placement", placement, "User placement")
        ->check(CLI::IsMember({"on-axis", "random"}))
        ->capture_default_str();
    app.add_option("--rate-model", rate_model, "Per-user rate model")
        ->check(CLI::IsMember({"shannon", "ook"}))
        ->capture_default_str();
    app.add_option("--out", out_dir, "Output directory")->capture_default_str();
    app.add_flag("--dump-channel", dump_channel, "Write the channel matrix of every sweep point");
    app.add_flag("--dump-precoder", dump_precoder, "Write the precoder of every sweep point");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        const owc::Scene scene = config_path ? owc::load_scene_file(*config_path) : owc::default_scene();
        for (const auto& w : scene.warnings)
            fmt::print(stderr, "warning: {}\n", w);

        sweep.lens_modes = parse_lens(lens);
        sweep.placement = owc::parse_placement(placement);
        sweep.rate_model = owc::parse_rate_model(rate_model);
        sweep.users = users;
        sweep.keep_details = dump_channel || dump_precoder;

        const auto result = owc::run_sweep(scene, sweep);
        const auto written = owc::emit_outputs(result, out_dir, dump_channel, dump_precoder);

        fmt::print("{:>12} {:>4} {:>16} {:>16} {:>10}\n", "waist_m", "lens", "sum_rate_bps", "ee_bpj", "p_max_w");
        for (const auto& r : result.rows)
            fmt::print("{:>12.4g} {:>4} {:>16.6g} {:>16.6g} {:>10.4g}\n", r.waist, owc::to_string(r.lens),
                       r.sum_rate, r.energy_efficiency, r.p_max);
        fmt::print("wrote {} files to {}\n", written.size(), out_dir);
        return 0;
    } catch (const owc::Error& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return e.exit_code();
    } catch (const std::exception& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return kExitOther;
    }
}

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

#include "owc/sweep.hpp"

#include "owc/channel.hpp"
#include "owc/error.hpp"
#include "owc/eye_safety.hpp"
#include "owc/zf_precoding.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/core.h>
#include <fstream>
#include <limits>

namespace owc {

namespace {

constexpr std::string_view kSchemaLine = "# owc-sweep results v1";

[[noreturn]] void rethrow_with_context(const std::string& ctx)
{
    try {
        throw;
    } catch (const SingularChannelError& e) {
        throw SingularChannelError(ctx + e.what(), e.user_a(), e.user_b());
    } catch (const InfeasibleError& e) {
        throw InfeasibleError(ctx + e.what());
    } catch (const DomainError& e) {
        throw DomainError(ctx + e.what());
    } catch (const ValidationError& e) {
        throw ValidationError(ctx + e.what());
    } catch (const ParseError& e) {
        throw ParseError(ctx + e.what());
    } catch (const IoError& e) {
        throw IoError(ctx + e.what());
    }
}

struct Stats {
    double mean = 0.0;
    double stddev = 0.0;
};

Stats stats(const std::vector<double>& xs)
{
    Stats s;
    for (const double x : xs)
        s.mean += x;
    s.mean /= static_cast<double>(xs.size());
    if (xs.size() > 1) {
        double ss = 0.0;
        for (const double x : xs)
            ss += (x - s.mean) * (x - s.mean);
        s.stddev = std::sqrt(ss / static_cast<double>(xs.size() - 1));
    }
    return s;
}

std::string num(double v)
{
    return fmt::format("{}", v);
}

void write_file(const std::filesystem::path& path, const std::string& contents)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError(fmt::format("cannot open '{}' for writing", path.string()));
    out << contents;
    out.close();
    if (!out)
        throw IoError(fmt::format("failed writing '{}'", path.string()));
}

} // namespace

std::string_view to_string(LensMode mode)
{
    return mode == LensMode::on ? "on" : "off";
}

void SweepSpec::validate() const
{
    if (!(waist_start > 0.0))
        throw ValidationError(fmt::format("sweep.waist_start must be positive, got {}", waist_start));
    if (!(waist_start < waist_end))
        throw ValidationError(
            fmt::format("sweep.waist_start ({}) must be below sweep.waist_end ({})", waist_start, waist_end));
    if (steps < 2)
        throw ValidationError(fmt::format("sweep.steps must be at least 2, got {}", steps));
    if (lens_modes.empty())
        throw ValidationError("sweep.lens_modes must contain at least one mode");
    if (seeds.empty())
        throw ValidationError("sweep.seeds must contain at least one seed");
}

std::vector<double> SweepSpec::waists() const
{
    std::vector<double> out;
    const double step = (waist_end - waist_start) / static_cast<double>(steps - 1);
    for (int i = 0; i < steps; ++i)
        out.push_back(i == steps - 1 ? waist_end : waist_start + step * i);
    return out;
}

Scene sweep_scene(const Scene& base, const SweepSpec& sweep, double waist, LensMode lens, std::uint64_t seed)
{
    Scene scene = base;
    scene.warnings.clear();
    for (auto& ap : scene.aps) {
        ap.beam.w0 = waist;
        if (lens == LensMode::on) {
            if (!ap.lens)
                ap.lens = LensSpec{};
        } else {
            ap.lens.reset();
        }
        ap.per_vcsel_power.reset();
    }
    const std::size_t users = sweep.users == 0 ? scene.aps.size() : sweep.users;
    switch (sweep.placement) {
    case Placement::on_axis:
        scene = place_users_on_axis(scene, users);
        break;
    case Placement::random:
        scene = place_users(scene, users, seed);
        break;
    case Placement::explicit_positions:
        if (users != scene.users.size())
            throw ValidationError(fmt::format("sweep.users = {} disagrees with {} explicit user positions", users,
                                              scene.users.size()));
        break;
    }
    scene.validate();
    return scene;
}

SweepResult run_sweep(const Scene& scene, const SweepSpec& sweep)
{
    sweep.validate();
    scene.safety.required_mpe();

    SweepResult result;
    result.spec = sweep;
    const auto waists = sweep.waists();
    for (std::size_t wi = 0; wi < waists.size(); ++wi) {
        for (const LensMode lens : sweep.lens_modes) {
            std::vector<double> sum_rates;
            std::vector<double> efficiencies;
            double min_snr = std::numeric_limits<double>::infinity();
            double p_max = 0.0;
            for (const auto seed : sweep.seeds) {
                const std::string ctx
                    = fmt::format("sweep point (waist={} m, lens={}, seed={}): ", num(waists[wi]), to_string(lens), seed);
                try {
                    const Scene point = sweep_scene(scene, sweep, waists[wi], lens, seed);
                    p_max = max_safe_power(point.aps.front().beam, point.safety, point.aps.front().lens).p_max;
                    std::vector<double> caps;
                    for (const auto& ap : point.aps)
                        caps.push_back(ap_power_cap(ap, point.safety));
                    auto h = build_channel_matrix(point);
                    auto precoder = zf_precoder(h, caps);
                    auto report = evaluate_link(point, h, precoder, sweep.rate_model);
                    sum_rates.push_back(report.sum_rate);
                    efficiencies.push_back(report.energy_efficiency);
                    for (const auto& u : report.per_user)
                        min_snr = std::min(min_snr, 10.0 * std::log10(u.sinr));
                    if (sweep.keep_details)
                        result.points.push_back(
                            SweepPoint{wi, lens, seed, std::move(h), std::move(precoder), std::move(report)});
                } catch (const Error&) {
                    rethrow_with_context(ctx);
                }
            }
            SweepRow row;
            row.waist = waists[wi];
            row.lens = lens;
            row.seed_count = sweep.seeds.size();
            const auto sr = stats(sum_rates);
            const auto ee = stats(efficiencies);
            row.sum_rate = sr.mean;
            row.sum_rate_std = sr.stddev;
            row.energy_efficiency = ee.mean;
            row.energy_efficiency_std = ee.stddev;
            row.min_user_snr_db = min_snr;
            row.p_max = p_max;
            result.rows.push_back(row);
        }
    }
    return result;
}

std::string results_csv(const SweepResult& result)
{
    std::string out;
    out += fmt::format("{} placement={} rate_model={}\n", kSchemaLine, to_string(result.spec.placement),
                       to_string(result.spec.rate_model));
    out += "waist_m,lens,seed_count,sum_rate_bps,sum_rate_std,ee_bpj,ee_std,min_user_snr_db,p_max_w\n";
    for (const auto& r : result.rows) {
        out += fmt::format("{},{},{},{},{},{},{},{},{}\n", num(r.waist), to_string(r.lens), r.seed_count,
                           num(r.sum_rate), num(r.sum_rate_std), num(r.energy_efficiency),
                           num(r.energy_efficiency_std), num(r.min_user_snr_db), num(r.p_max));
    }
    return out;
}

std::string series_csv(const SweepResult& result, LensMode lens, bool energy_efficiency)
{
    std::string out = energy_efficiency ? "waist_m,ee_bpj\n" : "waist_m,sum_rate_bps\n";
    for (const auto& r : result.rows) {
        if (r.lens != lens)
            continue;
        out += fmt::format("{},{}\n", num(r.waist), num(energy_efficiency ? r.energy_efficiency : r.sum_rate));
    }
    return out;
}

std::vector<std::filesystem::path> emit_outputs(const SweepResult& result, const std::filesystem::path& dir,
                                                bool dump_channel, bool dump_precoder)
{
    if (result.rows.empty())
        throw ValidationError("no sweep results to write");

    std::vector<std::pair<std::filesystem::path, std::string>> files;
    files.emplace_back(dir / "results.csv", results_csv(result));
    for (const LensMode lens : result.spec.lens_modes) {
        const auto suffix = fmt::format("lens_{}.csv", to_string(lens));
        files.emplace_back(dir / ("sum_rate_vs_waist_" + suffix), series_csv(result, lens, false));
        files.emplace_back(dir / ("energy_efficiency_vs_waist_" + suffix), series_csv(result, lens, true));
    }
    if (dump_channel || dump_precoder) {
        if (result.points.empty())
            throw ValidationError("channel/precoder dumps need a sweep run with keep_details");
        for (const auto& p : result.points) {
            const auto stem = fmt::format("w{:02d}_lens_{}_seed{}.csv", p.waist_index, to_string(p.lens), p.seed);
            if (dump_channel)
                files.emplace_back(dir / ("channel_" + stem), channel_csv(p.channel));
            if (dump_precoder)
                files.emplace_back(dir / ("precoder_" + stem), matrix_csv(p.precoder.g));
        }
    }

    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec)
        throw IoError(fmt::format("cannot create output directory '{}': {}", dir.string(), ec.message()));

    std::vector<std::filesystem::path> written;
    for (const auto& [path, contents] : files) {
        write_file(path, contents);
        written.push_back(path);
    }
    return written;
}

} // namespace owc

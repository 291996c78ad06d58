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

#pragma once

// Beam-waist sweeps with the lens on and off. Each point rebuilds the beams,
// sets every VCSEL to its eye-safe maximum, rebuilds the channel, precodes
// and evaluates the link budget; replicate seeds are averaged.

#include "owc/link_budget.hpp"
#include "owc/scene.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace owc {

enum class LensMode { off, on };

std::string_view to_string(LensMode mode);

struct SweepSpec {
    double waist_start = 1e-6; // [m]
    double waist_end = 8e-6;   // [m]
    int steps = 8;
    std::vector<LensMode> lens_modes{LensMode::off, LensMode::on};
    std::vector<std::uint64_t> seeds{1};
    Placement placement = Placement::on_axis;
    std::size_t users = 0; // 0: one per AP
    RateModel rate_model = RateModel::shannon;
    bool keep_details = false; // retain channel and precoder for dumps

    void validate() const;
    // Evenly spaced, endpoints included.
    std::vector<double> waists() const;
};

struct SweepRow {
    double waist = 0.0;
    LensMode lens = LensMode::off;
    std::size_t seed_count = 0;
    double sum_rate = 0.0;     // mean over seeds [bit/s]
    double sum_rate_std = 0.0; // sample standard deviation
    double energy_efficiency = 0.0;
    double energy_efficiency_std = 0.0;
    double min_user_snr_db = 0.0; // over all users and seeds
    double p_max = 0.0;           // eye-safe power per VCSEL [W]
};

struct SweepPoint {
    std::size_t waist_index = 0;
    LensMode lens = LensMode::off;
    std::uint64_t seed = 0;
    ChannelMatrix channel;
    Precoder precoder;
    LinkReport report;
};

struct SweepResult {
    SweepSpec spec;
    std::vector<SweepRow> rows; // ordered by (waist, lens, seed)
    std::vector<SweepPoint> points; // filled when spec.keep_details
};

// Scene configured for one sweep point: waist, lens on/off, power at the
// eye-safe cap, users placed per the sweep's placement rule.
Scene sweep_scene(const Scene& base, const SweepSpec& sweep, double waist, LensMode lens, std::uint64_t seed);

// Module errors are rethrown with the same category and the sweep
// coordinates prepended.
SweepResult run_sweep(const Scene& scene, const SweepSpec& sweep);

std::string results_csv(const SweepResult& result);

// Two-column (waist_m, value) series for one metric and lens mode.
std::string series_csv(const SweepResult& result, LensMode lens, bool energy_efficiency);

// Writes results.csv, one series file per metric and lens mode, and the
// optional channel/precoder dumps. Returns the paths written.
// ValidationError on empty results (nothing written), IoError when the
// directory or a file cannot be written.
std::vector<std::filesystem::path> emit_outputs(const SweepResult& result, const std::filesystem::path& dir,
                                                bool dump_channel = false, bool dump_precoder = false);

} // namespace owc

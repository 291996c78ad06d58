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

// Simulation world: room, ceiling access points (each an N x N VCSEL array),
// users on the receive plane, detector and electrical parameters. Defaults
// mirror the reference system parameters (5 x 5 x 3 m room, four APs, 25
// VCSELs each, 5 um waist at 850 nm).
//
// Config files are INI documents; see configs/default.ini for every key.

#include "owc/beam_optics.hpp"
#include "owc/eye_safety.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace owc {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    bool operator==(const Vec3&) const = default;
};

struct Room {
    double width = 5.0;
    double length = 5.0;
    double height = 3.0;
    double rx_plane_height = 1.0;

    void validate() const;
    bool operator==(const Room&) const = default;
};

struct AccessPoint {
    Vec3 position;
    int array_n = 5;         // the array is array_n x array_n VCSELs
    double pitch = 10e-6;    // [m]
    BeamSpec beam = BeamSpec::multimode(5e-6, 850e-9);
    std::optional<LensSpec> lens;
    // Optical power per VCSEL [W]. Unset means "operate at the eye-safe maximum".
    std::optional<double> per_vcsel_power;

    int vcsel_count() const { return array_n * array_n; }
    bool operator==(const AccessPoint&) const = default;
};

struct DetectorSpec {
    double area = 2e-4;             // [m^2]
    double responsivity = 0.4;      // [A/W]
    double fov_half_angle = kPi / 2; // [rad]

    double aperture_radius() const;
    void validate() const;
    bool operator==(const DetectorSpec&) const = default;
};

struct UserTerminal {
    double x = 0.0; // on the receive plane [m]
    double y = 0.0;
    DetectorSpec detector;

    bool operator==(const UserTerminal&) const = default;
};

struct ElectricalSpec {
    double rx_bandwidth = 1.75e9;                       // B_e [Hz]
    double optical_bandwidth = 5e9;                     // B_o [Hz], reported only
    double load_resistance = 50.0;                      // [ohm]
    double noise_figure_db = 5.0;                       // TIA noise figure [dB]
    double rin_db_per_hz = -155.0;                      // [dB/Hz]
    double preamp_noise_density = 4.47e-12 * 4.47e-12;  // [A^2/Hz]
    double temperature = 300.0;                         // [K]
    double bias_current = 9e-3;                         // [A]
    double drive_voltage = 0.9;                         // [V]
    double fec_limit = 1e-3;
    // Consumed electrical power per VCSEL [W]; overrides bias x voltage.
    std::optional<double> vcsel_power_consumption;

    double vcsel_consumed_power() const;
    void validate() const;
    bool operator==(const ElectricalSpec&) const = default;
};

enum class Placement { on_axis, random, explicit_positions };

struct Scene {
    Room room;
    std::vector<AccessPoint> aps;
    std::vector<UserTerminal> users;
    DetectorSpec detector; // template for generated users
    ElectricalSpec electrical;
    SafetySpec safety;
    Placement placement = Placement::on_axis;
    std::uint64_t seed = 1;
    bool incidence_cosine = false;
    // Non-fatal notes produced while loading (e.g. power clamped to the
    // eye-safety cap). Not part of the scene's identity.
    std::vector<std::string> warnings;

    void validate() const;
    bool operator==(const Scene& other) const;
};

Scene default_scene();

// Parses an INI document. Unspecified keys take the defaults above.
// Throws ParseError (malformed text, unknown key, bad number) or
// ValidationError (invariant violated, message names the field).
Scene load_scene(std::string_view config_text);
Scene load_scene_file(const std::filesystem::path& path);

// Writes a document that load_scene() reads back to an identical Scene.
// All APs must share beam, lens, array and power settings.
std::string serialize_scene(const Scene& scene);

// Uniform i.i.d. users over the room footprint, deterministic in seed.
// InfeasibleError if count exceeds the AP count.
Scene place_users(const Scene& scene, std::size_t count, std::uint64_t seed);

// User i directly below AP i.
Scene place_users_on_axis(const Scene& scene, std::size_t count);

// Per-VCSEL power actually emitted by an AP: the configured value or, if
// unset, the eye-safe maximum.
double vcsel_power(const AccessPoint& ap, const SafetySpec& safety);

// Total emitted optical power budget of one AP [W].
double ap_power_cap(const AccessPoint& ap, const SafetySpec& safety);

std::string_view to_string(Placement placement);
Placement parse_placement(std::string_view text);

} // namespace owc

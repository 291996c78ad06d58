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

// Gaussian and Laguerre-Gaussian beam mathematics for multimode VCSEL
// emission: mode intensities, free-space propagation and the thin-lens
// (ABCD) waist transform. All functions are pure.

#include <vector>

namespace owc {

inline constexpr double kPi = 3.14159265358979323846;

// Highest radial index accepted by laguerre(). Keeps (p+l)! exact in double.
inline constexpr int kMaxRadialIndex = 12;
// Largest n for which n! is tabulated.
inline constexpr int kMaxFactorial = 20;

// One Laguerre-Gaussian transverse mode and its share of the emitted power.
struct LgMode {
    int p = 0;             // radial index
    int l = 0;             // azimuthal index
    double fraction = 1.0; // share of total power

    bool operator==(const LgMode&) const = default;
};

// Complete description of a VCSEL emission at its waist plane (z = 0).
struct BeamSpec {
    double w0 = 5e-6;          // beam waist radius [m]
    double wavelength = 850e-9; // [m]
    std::vector<LgMode> modes{LgMode{}};

    // Single TEM00 mode.
    static BeamSpec fundamental(double w0, double wavelength);
    // Equal power over p in {0,1}, l in {0,1,2,3}.
    static BeamSpec multimode(double w0, double wavelength);

    // Same mode content, different waist.
    BeamSpec with_waist(double new_w0) const;

    // Throws ValidationError naming the violated field.
    void validate() const;

    bool operator==(const BeamSpec&) const = default;
};

// Thin lens placed d1 in front of the emitter.
struct LensSpec {
    double focal_length = 0.127e-3;    // f [m]
    double vcsel_to_lens = 0.133e-3;   // d1 [m]
    double refractive_index = 1.5;     // carried for reporting, unused by the thin-lens model

    void validate() const;

    bool operator==(const LensSpec&) const = default;
};

// Beam parameters after the lens.
struct TransformedBeam {
    double waist_distance = 0.0; // d2: new waist position past the lens [m]
    double waist = 0.0;          // w_l [m]
    double divergence = 0.0;     // theta2: far-field half angle after the lens [rad]
    double magnification = 0.0;  // k = w_l / w0
};

double factorial(int n);

// Generalized Laguerre polynomial L_p^l(x) by its explicit finite sum.
// Throws DomainError for p > kMaxRadialIndex, p + l > kMaxFactorial or
// negative indices.
double laguerre(int p, int l, double x);

// A_p^l, chosen so that every mode carries unit power [1/m].
double mode_norm_const(int p, int l, double w0);

double rayleigh_range(const BeamSpec& beam);

// w(z) = w0 sqrt(1 + (z/z_r)^2)
double beam_radius(double z, const BeamSpec& beam);

// atan(w(z)/z). DomainError for z <= 0.
double divergence_half_angle(double z, const BeamSpec& beam);

// Asymptotic half angle atan(lambda / (pi w0)).
double far_field_divergence(const BeamSpec& beam);

// R(z) = z (1 + (z_r/z)^2). DomainError for z <= 0 (planar front at the waist).
double phase_front_radius(double z, const BeamSpec& beam);

// |U_pl(r, z)|^2 for one watt of power in mode (p, l) [W/m^2 per W].
double mode_intensity(int p, int l, double r, double z, const BeamSpec& beam);

// Power-weighted sum of mode_intensity over the beam's modes.
double beam_intensity(double r, double z, const BeamSpec& beam);

TransformedBeam lens_transform(const BeamSpec& beam, const LensSpec& lens);

// The beam seen downstream of the lens: waist w_l at the new waist plane,
// same wavelength and mode content.
BeamSpec lensed_beam(const BeamSpec& beam, const LensSpec& lens);

} // namespace owc

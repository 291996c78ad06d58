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

// Per-emitter eye-safety power limit from the maximum permissible exposure,
// the pupil aperture and the most hazardous viewing position.

#include "owc/beam_optics.hpp"

#include <optional>

namespace owc {

struct SafetySpec {
    // Maximum permissible exposure [W/m^2]. No default: it depends on the
    // exposure-duration class and must be supplied by the user.
    std::optional<double> mpe;
    double pupil_radius = 3.5e-3; // r_p [m]
    double mhp_floor = 0.1;       // closest considered viewing distance [m]

    double required_mpe() const;
    // Checks the geometric fields; MPE is checked only when present.
    void validate() const;

    bool operator==(const SafetySpec&) const = default;
};

struct SafetyResult {
    double d86 = 0.0;   // distance at which 86% of the power enters the pupil [m]
    double mhp = 0.0;   // most hazardous position [m]
    double alpha = 0.0; // subtense angle [rad], reported only
    double eta = 0.0;   // fraction of beam power entering the pupil at the MHP
    double p_max = 0.0; // largest safe emitted power [W]
};

double d86_distance(const BeamSpec& beam, const SafetySpec& safety);

// max(d86, floor)
double most_hazardous_position(const BeamSpec& beam, const SafetySpec& safety);

double subtense_angle(const BeamSpec& beam, double mhp);

// Encircled power of a Gaussian of radius w(mhp) inside the pupil.
double pupil_fraction(const BeamSpec& beam, double mhp, const SafetySpec& safety);

// With a lens, the post-lens beam (waist w_l, distances from its waist) is
// assessed instead of the bare emitter.
SafetyResult max_safe_power(const BeamSpec& beam, const SafetySpec& safety,
                            const std::optional<LensSpec>& lens = std::nullopt);

} // namespace owc

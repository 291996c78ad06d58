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

#include "owc/eye_safety.hpp"

#include "owc/error.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/core.h>

namespace owc {

namespace {
constexpr double kEncircledFraction = 0.86;
}

double SafetySpec::required_mpe() const
{
    if (!mpe)
        throw ValidationError("safety.mpe is required (maximum permissible exposure, W/m^2)");
    return *mpe;
}

void SafetySpec::validate() const
{
    if (mpe && !(*mpe > 0.0))
        throw ValidationError(fmt::format("safety.mpe must be positive, got {}", *mpe));
    if (!(pupil_radius > 0.0))
        throw ValidationError(fmt::format("safety.pupil_radius must be positive, got {}", pupil_radius));
    if (!(mhp_floor > 0.0))
        throw ValidationError(fmt::format("safety.mhp_floor must be positive, got {}", mhp_floor));
}

double d86_distance(const BeamSpec& beam, const SafetySpec& safety)
{
    const double rp = safety.pupil_radius;
    return kPi * beam.w0 / beam.wavelength
        * std::sqrt(-2.0 * rp * rp / std::log(1.0 - kEncircledFraction));
}

double most_hazardous_position(const BeamSpec& beam, const SafetySpec& safety)
{
    return std::max(d86_distance(beam, safety), safety.mhp_floor);
}

double subtense_angle(const BeamSpec& beam, double mhp)
{
    return 2.0 * std::atan(beam.w0 / mhp);
}

double pupil_fraction(const BeamSpec& beam, double mhp, const SafetySpec& safety)
{
    const double w = beam_radius(mhp, beam);
    const double rp = safety.pupil_radius;
    return -std::expm1(-2.0 * rp * rp / (w * w));
}

SafetyResult max_safe_power(const BeamSpec& beam, const SafetySpec& safety,
                            const std::optional<LensSpec>& lens)
{
    const BeamSpec assessed = lens ? lensed_beam(beam, *lens) : beam;
    const double mpe = safety.required_mpe();
    const double rp = safety.pupil_radius;

    SafetyResult out;
    out.d86 = d86_distance(assessed, safety);
    out.mhp = std::max(out.d86, safety.mhp_floor);
    out.alpha = subtense_angle(assessed, out.mhp);
    out.eta = pupil_fraction(assessed, out.mhp, safety);
    out.p_max = mpe * kPi * rp * rp / out.eta;
    return out;
}

} // namespace owc

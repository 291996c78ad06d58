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

#include "owc/beam_optics.hpp"

#include "owc/error.hpp"

#include <array>
#include <cmath>
#include <fmt/core.h>
#include <set>
#include <utility>

namespace owc {

namespace {

constexpr std::array<double, kMaxFactorial + 1> make_factorials()
{
    std::array<double, kMaxFactorial + 1> table{};
    table[0] = 1.0;
    for (int n = 1; n <= kMaxFactorial; ++n)
        table[n] = table[n - 1] * static_cast<double>(n);
    return table;
}

constexpr auto kFactorials = make_factorials();

void check_mode_indices(int p, int l)
{
    if (p < 0 || l < 0)
        throw DomainError(fmt::format("mode indices must be non-negative (p={}, l={})", p, l));
    if (p > kMaxRadialIndex)
        throw DomainError(fmt::format("radial index p={} exceeds limit {}", p, kMaxRadialIndex));
    if (p + l > kMaxFactorial)
        throw DomainError(fmt::format("p+l={} exceeds factorial table limit {}", p + l, kMaxFactorial));
}

} // namespace

BeamSpec BeamSpec::fundamental(double w0, double wavelength)
{
    return BeamSpec{w0, wavelength, {LgMode{0, 0, 1.0}}};
}

BeamSpec BeamSpec::multimode(double w0, double wavelength)
{
    BeamSpec beam{w0, wavelength, {}};
    for (int p = 0; p <= 1; ++p)
        for (int l = 0; l <= 3; ++l)
            beam.modes.push_back(LgMode{p, l, 0.125});
    return beam;
}

BeamSpec BeamSpec::with_waist(double new_w0) const
{
    BeamSpec out = *this;
    out.w0 = new_w0;
    return out;
}

void BeamSpec::validate() const
{
    if (!(w0 > 0.0) || !std::isfinite(w0))
        throw ValidationError(fmt::format("beam.w0 must be positive, got {}", w0));
    if (!(wavelength > 0.0) || !std::isfinite(wavelength))
        throw ValidationError(fmt::format("beam.wavelength must be positive, got {}", wavelength));
    if (modes.empty())
        throw ValidationError("beam.modes must not be empty");

    std::set<std::pair<int, int>> seen;
    double total = 0.0;
    for (const auto& m : modes) {
        if (m.p < 0 || m.l < 0 || m.p > kMaxRadialIndex || m.p + m.l > kMaxFactorial)
            throw ValidationError(fmt::format("beam.modes: unsupported mode (p={}, l={})", m.p, m.l));
        if (!(m.fraction >= 0.0))
            throw ValidationError(fmt::format("beam.modes: negative fraction for mode (p={}, l={})", m.p, m.l));
        if (!seen.emplace(m.p, m.l).second)
            throw ValidationError(fmt::format("beam.modes: duplicate mode (p={}, l={})", m.p, m.l));
        total += m.fraction;
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw ValidationError(fmt::format("beam.modes: fractions sum to {:.17g}, expected 1", total));
}

void LensSpec::validate() const
{
    if (!(focal_length > 0.0))
        throw ValidationError(fmt::format("lens.focal_length must be positive, got {}", focal_length));
    if (!(vcsel_to_lens >= 0.0))
        throw ValidationError(fmt::format("lens.vcsel_to_lens must be non-negative, got {}", vcsel_to_lens));
    if (!(refractive_index > 1.0))
        throw ValidationError(fmt::format("lens.refractive_index must exceed 1, got {}", refractive_index));
}

double factorial(int n)
{
    if (n < 0 || n > kMaxFactorial)
        throw DomainError(fmt::format("factorial({}) outside table", n));
    return kFactorials[static_cast<std::size_t>(n)];
}

double laguerre(int p, int l, double x)
{
    check_mode_indices(p, l);
    // Alternating sum; long double accumulation limits cancellation loss for large x.
    const long double numer = kFactorials[static_cast<std::size_t>(p + l)];
    long double sum = 0.0L;
    long double x_pow = 1.0L;
    for (int m = 0; m <= p; ++m) {
        const long double denom = static_cast<long double>(kFactorials[static_cast<std::size_t>(p - m)])
            * kFactorials[static_cast<std::size_t>(l + m)] * kFactorials[static_cast<std::size_t>(m)];
        const long double term = numer / denom * x_pow;
        sum += (m % 2 == 0) ? term : -term;
        x_pow *= x;
    }
    return static_cast<double>(sum);
}

double mode_norm_const(int p, int l, double w0)
{
    check_mode_indices(p, l);
    return (1.0 / w0) * std::sqrt(2.0 * factorial(p) / (kPi * factorial(p + l)));
}

double rayleigh_range(const BeamSpec& beam)
{
    return kPi * beam.w0 * beam.w0 / beam.wavelength;
}

double beam_radius(double z, const BeamSpec& beam)
{
    const double ratio = z / rayleigh_range(beam);
    return beam.w0 * std::sqrt(1.0 + ratio * ratio);
}

double divergence_half_angle(double z, const BeamSpec& beam)
{
    if (!(z > 0.0))
        throw DomainError(fmt::format("divergence_half_angle needs z > 0, got {}", z));
    return std::atan(beam_radius(z, beam) / z);
}

double far_field_divergence(const BeamSpec& beam)
{
    return std::atan(beam.wavelength / (kPi * beam.w0));
}

double phase_front_radius(double z, const BeamSpec& beam)
{
    if (!(z > 0.0))
        throw DomainError(fmt::format("phase front is planar at z = {}", z));
    const double ratio = rayleigh_range(beam) / z;
    return z * (1.0 + ratio * ratio);
}

double mode_intensity(int p, int l, double r, double z, const BeamSpec& beam)
{
    const double a = mode_norm_const(p, l, beam.w0);
    const double wz = beam_radius(z, beam);
    const double x = 2.0 * r * r / (wz * wz);
    const double lag = laguerre(p, l, x);
    return a * a * (beam.w0 * beam.w0) / (wz * wz) * std::pow(x, l) * lag * lag * std::exp(-x);
}

double beam_intensity(double r, double z, const BeamSpec& beam)
{
    double total = 0.0;
    for (const auto& m : beam.modes) {
        if (m.fraction > 0.0)
            total += m.fraction * mode_intensity(m.p, m.l, r, z, beam);
    }
    return total;
}

TransformedBeam lens_transform(const BeamSpec& beam, const LensSpec& lens)
{
    const double f = lens.focal_length;
    const double d1 = lens.vcsel_to_lens;
    const double lambda = beam.wavelength;
    const double w0 = beam.w0;

    const double s = 1.0 - d1 / f;
    // f / z_r = lambda f / (pi w0^2)
    const double f_over_zr = lambda * f / (kPi * w0 * w0);

    TransformedBeam out;
    // Waist location, multiplied through by f^2 so that s = 0 returns f exactly.
    out.waist_distance = f * (1.0 - s * (d1 / f) * f_over_zr * f_over_zr)
        / (1.0 + s * s * f_over_zr * f_over_zr);
    out.waist = lambda * f / (kPi * w0 * std::sqrt(1.0 + s * s * f_over_zr * f_over_zr));
    out.magnification = out.waist / w0;
    out.divergence = far_field_divergence(beam) / out.magnification;
    return out;
}

BeamSpec lensed_beam(const BeamSpec& beam, const LensSpec& lens)
{
    return beam.with_waist(lens_transform(beam, lens).waist);
}

} // namespace owc

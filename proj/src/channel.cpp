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

#include "owc/channel.hpp"

#include "owc/error.hpp"

#include <array>
#include <deque>
#include <cmath>
#include <fmt/core.h>

namespace owc {

namespace {

constexpr int kMinOrder = 16;
constexpr int kMaxOrder = 1024;
constexpr double kRelTol = 1e-8;
constexpr double kAbsTol = 1e-30;

struct GaussRule {
    std::vector<double> nodes;   // on [-1, 1]
    std::vector<double> weights;
};

// Newton iteration on P_n from the Chebyshev initial guess.
GaussRule make_gauss_legendre(int n)
{
    GaussRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16)
                break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[static_cast<std::size_t>(i)] = -x;
        rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
        rule.weights[static_cast<std::size_t>(i)] = w;
        rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
    }
    return rule;
}

const GaussRule& gauss_rule(int order)
{
    static const auto rules = [] {
        std::array<GaussRule, 7> all;
        int n = kMinOrder;
        for (auto& r : all) {
            r = make_gauss_legendre(n);
            n *= 2;
        }
        return all;
    }();
    int idx = 0;
    for (int n = kMinOrder; n < order && idx < 6; n *= 2)
        ++idx;
    if ((kMinOrder << idx) == order)
        return rules[static_cast<std::size_t>(idx)];

    // Orders off the cached ladder are built on demand (tests only).
    thread_local std::deque<std::pair<int, GaussRule>> extra;
    for (const auto& [n, r] : extra)
        if (n == order)
            return r;
    extra.emplace_back(order, make_gauss_legendre(order));
    return extra.back().second;
}

// Mode-summed intensity at fixed z with the z-dependent factors hoisted.
class IntensityProfile {
public:
    IntensityProfile(const BeamSpec& beam, double z)
    {
        const double wz = beam_radius(z, beam);
        inv_wz2_ = 1.0 / (wz * wz);
        for (const auto& m : beam.modes) {
            if (m.fraction <= 0.0)
                continue;
            const double a = mode_norm_const(m.p, m.l, beam.w0);
            terms_.push_back(Term{m.p, m.l, m.fraction * a * a * beam.w0 * beam.w0 * inv_wz2_});
        }
    }

    double operator()(double r2) const
    {
        const double x = 2.0 * r2 * inv_wz2_;
        const double gauss = std::exp(-x);
        double total = 0.0;
        for (const auto& t : terms_) {
            const double lag = laguerre(t.p, t.l, x);
            total += t.scale * std::pow(x, t.l) * lag * lag;
        }
        return total * gauss;
    }

private:
    struct Term {
        int p;
        int l;
        double scale;
    };
    double inv_wz2_ = 0.0;
    std::vector<Term> terms_;
};

// Polar coordinates about the disc centre; the integrand is even in phi,
// so phi runs over [0, pi] and the result is doubled.
double integrate_disc(const IntensityProfile& profile, double offset, double radius, int order)
{
    const auto& rule = gauss_rule(order);
    const double half_r = 0.5 * radius;
    const double half_phi = 0.5 * kPi;
    double total = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double r = half_r * (rule.nodes[i] + 1.0);
        double ring = 0.0;
        for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
            const double phi = half_phi * (rule.nodes[j] + 1.0);
            const double d2 = r * r + offset * offset + 2.0 * r * offset * std::cos(phi);
            ring += rule.weights[j] * profile(d2);
        }
        total += rule.weights[i] * r * ring;
    }
    return 2.0 * total * half_r * half_phi;
}

struct PropagatedBeam {
    BeamSpec beam;
    double z;
};

PropagatedBeam propagate(const BeamSpec& beam, const std::optional<LensSpec>& lens, double distance,
                         double offset, double aperture_radius)
{
    if (!(distance > 0.0))
        throw DomainError(fmt::format("captured_fraction needs distance > 0, got {}", distance));
    if (!(offset >= 0.0))
        throw DomainError(fmt::format("captured_fraction needs offset >= 0, got {}", offset));
    if (!(aperture_radius > 0.0))
        throw DomainError(fmt::format("captured_fraction needs aperture_radius > 0, got {}", aperture_radius));
    if (!lens)
        return {beam, distance};
    const auto t = lens_transform(beam, *lens);
    if (!(distance > t.waist_distance))
        throw DomainError(fmt::format("receiver at {} m lies inside the lens focus region (d2 = {} m)", distance,
                                      t.waist_distance));
    return {beam.with_waist(t.waist), distance - t.waist_distance};
}

double clamp_unit(double v)
{
    return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
}

} // namespace

ChannelMatrix::ChannelMatrix(std::size_t users, std::size_t aps)
    : users_(users), aps_(aps), gains_(users * aps, 0.0), geometry_(users * aps)
{
}

double captured_fraction_at_order(const BeamSpec& beam, const std::optional<LensSpec>& lens, double distance,
                                  double offset, double aperture_radius, int order)
{
    const auto prop = propagate(beam, lens, distance, offset, aperture_radius);
    const IntensityProfile profile(prop.beam, prop.z);
    return integrate_disc(profile, offset, aperture_radius, order);
}

double captured_fraction(const BeamSpec& beam, const std::optional<LensSpec>& lens, double distance,
                         double offset, double aperture_radius)
{
    const auto prop = propagate(beam, lens, distance, offset, aperture_radius);
    const IntensityProfile profile(prop.beam, prop.z);
    double previous = integrate_disc(profile, offset, aperture_radius, kMinOrder);
    for (int order = 2 * kMinOrder; order <= kMaxOrder; order *= 2) {
        const double current = integrate_disc(profile, offset, aperture_radius, order);
        if (std::abs(current - previous) <= kRelTol * std::abs(current) + kAbsTol)
            return clamp_unit(current);
        previous = current;
    }
    return clamp_unit(previous);
}

double reflection_gain(const Scene&, std::size_t, std::size_t, int)
{
    return 0.0;
}

ChannelMatrix build_channel_matrix(const Scene& scene)
{
    ChannelMatrix h(scene.users.size(), scene.aps.size());
    for (std::size_t u = 0; u < scene.users.size(); ++u) {
        const auto& user = scene.users[u];
        for (std::size_t a = 0; a < scene.aps.size(); ++a) {
            const auto& ap = scene.aps[a];
            auto& geo = h.geometry(u, a);
            geo.distance = ap.position.z - scene.room.rx_plane_height;
            geo.offset = std::hypot(user.x - ap.position.x, user.y - ap.position.y);
            geo.incidence_angle = std::atan2(geo.offset, geo.distance);
            if (geo.incidence_angle > user.detector.fov_half_angle) {
                h.gain(u, a) = 0.0;
                continue;
            }
            double gain = captured_fraction(ap.beam, ap.lens, geo.distance, geo.offset,
                                            user.detector.aperture_radius());
            if (scene.incidence_cosine)
                gain *= std::cos(geo.incidence_angle);
            h.gain(u, a) = gain;
        }
    }
    return h;
}

std::string channel_csv(const ChannelMatrix& h)
{
    std::string out;
    for (std::size_t u = 0; u < h.users(); ++u) {
        for (std::size_t a = 0; a < h.aps(); ++a) {
            if (a > 0)
                out += ',';
            out += fmt::format("{}", h.gain(u, a));
        }
        out += '\n';
    }
    return out;
}

} // namespace owc

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

// Line-of-sight optical channel gains from ceiling access points to user
// detectors. Each gain is the fraction of an AP's emitted optical power
// captured by a user's detector disc.

#include "owc/beam_optics.hpp"
#include "owc/scene.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace owc {

struct LinkGeometry {
    double distance = 0.0;        // vertical AP-to-receive-plane distance [m]
    double offset = 0.0;          // horizontal AP-to-user distance [m]
    double incidence_angle = 0.0; // [rad]
};

// U x A gains, row = user, column = AP.
class ChannelMatrix {
public:
    ChannelMatrix() = default;
    ChannelMatrix(std::size_t users, std::size_t aps);

    std::size_t users() const noexcept { return users_; }
    std::size_t aps() const noexcept { return aps_; }

    double& gain(std::size_t u, std::size_t a) { return gains_[u * aps_ + a]; }
    double gain(std::size_t u, std::size_t a) const { return gains_[u * aps_ + a]; }
    LinkGeometry& geometry(std::size_t u, std::size_t a) { return geometry_[u * aps_ + a]; }
    const LinkGeometry& geometry(std::size_t u, std::size_t a) const { return geometry_[u * aps_ + a]; }

    // Row-major copy of the gains.
    const std::vector<double>& gains() const noexcept { return gains_; }

private:
    std::size_t users_ = 0;
    std::size_t aps_ = 0;
    std::vector<double> gains_;
    std::vector<LinkGeometry> geometry_;
};

// Fraction of the beam power falling on a disc of the given radius whose
// centre is `offset` away from the beam axis, `distance` downstream of the
// emitter. With a lens, the post-lens beam is propagated from its waist
// plane (distance - d2); DomainError if the detector sits at or before it.
// Adaptive: Gauss-Legendre order doubles until the relative change is
// below 1e-8.
double captured_fraction(const BeamSpec& beam, const std::optional<LensSpec>& lens, double distance,
                         double offset, double aperture_radius);

// Same integral at a fixed quadrature order (per dimension).
double captured_fraction_at_order(const BeamSpec& beam, const std::optional<LensSpec>& lens, double distance,
                                  double offset, double aperture_radius, int order);

// Reflected-path contribution of the given order. Only line-of-sight
// links are modelled, so this is always zero.
double reflection_gain(const Scene& scene, std::size_t user, std::size_t ap, int order);

ChannelMatrix build_channel_matrix(const Scene& scene);

// One row per user, one column per AP, no header.
std::string channel_csv(const ChannelMatrix& h);

} // namespace owc

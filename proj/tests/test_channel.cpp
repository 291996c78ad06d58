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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "owc/channel.hpp"
#include "owc/error.hpp"

#include <cmath>

using namespace owc;
using doctest::Approx;

namespace {

const BeamSpec kFundamental = BeamSpec::fundamental(5e-6, 850e-9);
const BeamSpec kMultimode = BeamSpec::multimode(5e-6, 850e-9);
const double kAperture = std::sqrt(2e-4 / kPi);

BeamSpec random_mix(oracle::Uniform& rnd)
{
    BeamSpec beam = kMultimode;
    double total = 0.0;
    for (auto& m : beam.modes) {
        m.fraction = rnd(0.0, 1.0);
        total += m.fraction;
    }
    for (auto& m : beam.modes)
        m.fraction /= total;
    return beam;
}

Scene single_link_scene(const BeamSpec& beam)
{
    Scene s = load_scene("[lens]\nenabled = false\n[access_points]\npositions = 2.5 2.5 3\n[users]\ncount = 1\n");
    s.aps[0].beam = beam;
    return s;
}

} // namespace

TEST_CASE("centred fundamental mode matches the closed form")
{
    const double wz = beam_radius(2.0, kFundamental);
    const double exact = oracle::gaussian_encircled(kAperture, wz);
    const double h = captured_fraction(kFundamental, std::nullopt, 2.0, 0.0, kAperture);
    CHECK(std::abs(exact - 0.01086) <= 1e-4);
    CHECK(std::abs(h - 0.01086) <= 1e-4);
    CHECK(h == Approx(exact).epsilon(1e-9));

    // also away from the small-aperture regime
    for (double ratio : {0.3, 1.0, 2.0, 4.0}) {
        const double a = ratio * wz;
        CHECK(captured_fraction(kFundamental, std::nullopt, 2.0, 0.0, a)
              == Approx(oracle::gaussian_encircled(a, wz)).epsilon(1e-9));
    }
}

TEST_CASE("an aperture of 8 w(z) captures everything")
{
    oracle::Uniform rnd(3);
    for (int i = 0; i < 10; ++i) {
        const auto beam = i == 0 ? kMultimode : random_mix(rnd);
        for (double z : {0.5, 2.0}) {
            const double wz = beam_radius(z, beam);
            CHECK(std::abs(captured_fraction(beam, std::nullopt, z, 0.0, 8.0 * wz) - 1.0) <= 1e-6);
        }
    }
}

TEST_CASE("far off axis the capture vanishes")
{
    const double wz = beam_radius(2.0, kMultimode);
    CHECK(captured_fraction(kMultimode, std::nullopt, 2.0, 10.0 * wz, kAperture) < 1e-10);
    CHECK(captured_fraction(kFundamental, std::nullopt, 2.0, 10.0 * wz, kAperture) < 1e-10);
}

TEST_CASE("disjoint apertures never collect more than the beam")
{
    for (const auto& beam : {kFundamental, kMultimode}) {
        const double wz = beam_radius(2.0, beam);
        const double a = 1.2 * wz;
        const double centre = captured_fraction(beam, std::nullopt, 2.0, 0.0, a);
        const double side = captured_fraction(beam, std::nullopt, 2.0, 2.5 * wz, a);
        CHECK(centre + side <= 1.0 + 1e-9);
        CHECK(side > 0.0);
    }
}

TEST_CASE("capture is non-increasing in offset")
{
    for (const auto& beam : {kFundamental, kMultimode}) {
        const double wz = beam_radius(2.0, beam);
        double prev = 1.0;
        for (double rho = 0.0; rho <= 4.0 * wz; rho += 0.05 * wz) {
            const double h = captured_fraction(beam, std::nullopt, 2.0, rho, kAperture);
            CHECK(h <= prev * (1.0 + 1e-9));
            prev = h;
        }
    }
}

TEST_CASE("capture depends on the offset magnitude only")
{
    Scene s = load_scene("[lens]\nenabled = false\n[access_points]\npositions = 2.5 2.5 3; 1 1 3; 4 4 3; 1 4 3\n");
    const double d = 0.05;
    s.users = {UserTerminal{2.5 + d, 2.5, s.detector}, UserTerminal{2.5 - d, 2.5, s.detector},
               UserTerminal{2.5, 2.5 + d, s.detector}, UserTerminal{2.5 + d * std::sqrt(0.5), 2.5 - d * std::sqrt(0.5), s.detector}};
    const auto h = build_channel_matrix(s);
    for (std::size_t u = 1; u < 4; ++u)
        CHECK(h.gain(u, 0) == Approx(h.gain(0, 0)).epsilon(1e-12));
}

TEST_CASE("the reference lens raises on-axis capture at 2 m")
{
    const double bare = captured_fraction(kMultimode, std::nullopt, 2.0, 0.0, kAperture);
    const double lensed = captured_fraction(kMultimode, LensSpec{}, 2.0, 0.0, kAperture);
    CHECK(lensed > bare);
    CHECK(captured_fraction(kFundamental, LensSpec{}, 2.0, 0.0, kAperture)
          > captured_fraction(kFundamental, std::nullopt, 2.0, 0.0, kAperture));
}

TEST_CASE("lens: detector inside the focus region")
{
    const auto t = lens_transform(kMultimode, LensSpec{});
    CHECK_THROWS_AS(captured_fraction(kMultimode, LensSpec{}, t.waist_distance, 0.0, kAperture), DomainError);
    CHECK_THROWS_AS(captured_fraction(kMultimode, LensSpec{}, 0.5 * t.waist_distance, 0.0, kAperture), DomainError);
    CHECK_THROWS_AS(captured_fraction(kMultimode, std::nullopt, 0.0, 0.0, kAperture), DomainError);
    CHECK_THROWS_AS(captured_fraction(kMultimode, std::nullopt, 1.0, -1.0, kAperture), DomainError);
    CHECK_THROWS_AS(captured_fraction(kMultimode, std::nullopt, 1.0, 0.0, 0.0), DomainError);
}

TEST_CASE("doubling the quadrature order changes nothing")
{
    oracle::Uniform rnd(21);
    for (int i = 0; i < 12; ++i) {
        const auto beam = random_mix(rnd).with_waist(rnd(1e-6, 8e-6));
        const std::optional<LensSpec> lens = (i % 2 == 0) ? std::optional<LensSpec>(LensSpec{}) : std::nullopt;
        const double z = rnd(1.0, 2.5);
        const double wz = beam_radius(z, lens ? lensed_beam(beam, *lens) : beam);
        const double rho = rnd(0.0, 2.0) * wz;
        const double adaptive = captured_fraction(beam, lens, z, rho, kAperture);
        const double fine = captured_fraction_at_order(beam, lens, z, rho, kAperture, 512);
        CHECK(std::abs(adaptive - fine) <= 1e-6 * fine);
    }
}

TEST_CASE("channel matrix: user below its AP")
{
    const auto s = single_link_scene(kFundamental);
    const auto h = build_channel_matrix(s);
    REQUIRE(h.users() == 1);
    REQUIRE(h.aps() == 1);
    CHECK(std::abs(h.gain(0, 0) - 0.01086) <= 1e-4);
    CHECK(h.geometry(0, 0).distance == 2.0);
    CHECK(h.geometry(0, 0).offset == 0.0);

    // the default eight-mode beam puts half its power in hollow modes
    const auto multi = build_channel_matrix(single_link_scene(kMultimode));
    CHECK(multi.gain(0, 0) > 0.0);
    CHECK(multi.gain(0, 0) < h.gain(0, 0));
}

TEST_CASE("channel matrix: neighbouring AP 2 m away")
{
    Scene s = load_scene("[lens]\nenabled = false\n[access_points]\npositions = 1.5 2.5 3; 3.5 2.5 3\n");
    const auto h = build_channel_matrix(s);
    REQUIRE(h.users() == 2);
    CHECK(h.gain(0, 1) < 1e-10);
    CHECK(h.gain(1, 0) < 1e-10);
    CHECK(h.gain(0, 0) > 1e-3);
}

TEST_CASE("channel matrix: FOV and incidence cosine")
{
    Scene s = single_link_scene(kFundamental);
    s.users[0].x = 3.0;
    s.users[0].detector.fov_half_angle = 0.1; // offset 0.5 m at 2 m is ~0.245 rad
    CHECK(build_channel_matrix(s).gain(0, 0) == 0.0);

    Scene wide = load_scene("[lens]\nenabled = false\n[access_points]\npositions = 2.5 2.5 3\n"
                            "[users]\npositions = 2.55 2.5\n");
    wide.aps[0].beam = kFundamental;
    const double plain = build_channel_matrix(wide).gain(0, 0);
    wide.incidence_cosine = true;
    const auto h = build_channel_matrix(wide);
    CHECK(h.gain(0, 0) == Approx(plain * std::cos(h.geometry(0, 0).incidence_angle)).epsilon(1e-15));
    CHECK(h.gain(0, 0) >= 0.998 * plain);
}

TEST_CASE("reflections contribute nothing")
{
    const auto s = default_scene();
    for (int order = 1; order <= 2; ++order)
        CHECK(reflection_gain(s, 0, 0, order) == 0.0);
}

TEST_CASE("channel CSV layout")
{
    ChannelMatrix h(2, 3);
    h.gain(0, 0) = 0.5;
    h.gain(1, 2) = 0.25;
    CHECK(channel_csv(h) == "0.5,0,0\n0,0,0.25\n");
}

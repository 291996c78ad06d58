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

#include "owc/error.hpp"
#include "owc/zf_precoding.hpp"
#include "zf_draws.hpp"

#include <algorithm>
#include <cmath>

using namespace owc;
using doctest::Approx;

namespace {

ChannelMatrix make(std::size_t users, std::size_t aps, std::initializer_list<double> values)
{
    ChannelMatrix h(users, aps);
    auto it = values.begin();
    for (std::size_t u = 0; u < users; ++u)
        for (std::size_t a = 0; a < aps; ++a)
            h.gain(u, a) = *it++;
    return h;
}

double max_abs_offdiag(const Matrix& m)
{
    double out = 0.0;
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            if (i != j)
                out = std::max(out, std::abs(m(i, j)));
    return out;
}

double max_abs_diag(const Matrix& m)
{
    double out = 0.0;
    for (std::size_t i = 0; i < std::min(m.rows, m.cols); ++i)
        out = std::max(out, std::abs(m(i, i)));
    return out;
}

double identity_error(const Matrix& m)
{
    double out = 0.0;
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            out = std::max(out, std::abs(m(i, j) - (i == j ? 1.0 : 0.0)));
    return out;
}

} // namespace

TEST_CASE("identity channel")
{
    const auto h = make(3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1});
    const auto p = zf_precoder(h, 2.5);
    CHECK(p.beta == 2.5);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(p.g(i, j) == (i == j ? 2.5 : 0.0));
    CHECK(max_abs_offdiag(residual_interference(h, p)) == 0.0);
    for (double s : p.sqrt_q)
        CHECK(s == 2.5);
}

TEST_CASE("2x2 hand inversion")
{
    const auto h = make(2, 2, {1, 0.1, 0.1, 1});
    const auto p = zf_precoder(h, 1.0);
    const double k = 1.0 / 0.99;
    CHECK(p.g0(0, 0) == Approx(k).epsilon(1e-14));
    CHECK(p.g0(0, 1) == Approx(-0.1 * k).epsilon(1e-14));
    CHECK(p.g0(1, 0) == Approx(-0.1 * k).epsilon(1e-14));
    CHECK(p.g0(1, 1) == Approx(k).epsilon(1e-14));
    CHECK(identity_error(effective_channel(h, p.g0)) <= 1e-12);
    CHECK(max_abs_offdiag(residual_interference(h, p)) <= 1e-12);
    // each AP row has L1 norm 1.1/0.99
    CHECK(p.beta == Approx(0.99 / 1.1).epsilon(1e-14));
}

TEST_CASE("rank-deficient channels name the colliding users")
{
    const auto dup = make(3, 3, {1, 0.2, 0.1, 0.3, 0.5, 0.2, 1, 0.2, 0.1});
    try {
        (void)zf_precoder(dup, 1.0);
        FAIL("expected SingularChannelError");
    } catch (const SingularChannelError& e) {
        CHECK(e.user_a() == 0);
        CHECK(e.user_b() == 2);
        CHECK(e.exit_code() == 6);
    }
    CHECK_THROWS_AS(zf_precoder(make(2, 3, {0, 0, 0, 0, 0, 0}), 1.0), SingularChannelError);
    CHECK_THROWS_AS(zf_precoder(make(2, 2, {1, 2, 2, 4}), 1.0), SingularChannelError);
}

TEST_CASE("more users than access points is infeasible")
{
    CHECK_THROWS_AS(zf_precoder(make(3, 2, {1, 0, 0, 1, 1, 1}), 1.0), InfeasibleError);
}

TEST_CASE("bad power caps")
{
    const auto h = make(2, 2, {1, 0.1, 0.1, 1});
    CHECK_THROWS_AS(zf_precoder(h, 0.0), ValidationError);
    const std::vector<double> caps{1.0};
    CHECK_THROWS_AS(zf_precoder(h, caps), ValidationError);
}

TEST_CASE("residual interference without precoding equals the cross gains")
{
    const auto h = make(2, 2, {1, 0.3, 0.2, 1});
    Precoder plain;
    plain.g = Matrix::identity(2);
    const auto r = residual_interference(h, plain);
    CHECK(r(0, 0) == 0.0);
    CHECK(r(1, 1) == 0.0);
    CHECK(r(0, 1) == 0.3);
    CHECK(r(1, 0) == 0.2);
}

TEST_CASE("non-uniform caps are respected per AP")
{
    const auto h = make(2, 3, {1, 0.2, 0.4, 0.1, 1, 0.3});
    const std::vector<double> caps{1.0, 0.1, 5.0};
    const auto p = zf_precoder(h, caps);
    const auto used = ap_emitted_power(p);
    bool tight = false;
    for (std::size_t a = 0; a < 3; ++a) {
        CHECK(used[a] <= caps[a] + 1e-12);
        tight = tight || std::abs(used[a] - caps[a]) <= 1e-12;
    }
    CHECK(tight);
}

TEST_CASE("zero-forcing properties over 1000 random channels")
{
    oracle::Uniform rnd(2024);
    int failures = 0;
    for (int draw = 0; draw < 1000; ++draw) {
        const auto d = oracle::random_channel(rnd, draw);
        const double cap = rnd(1e-4, 1.0);
        const auto p = zf_precoder(d.h, cap);
        const auto hg = effective_channel(d.h, p.g);
        const bool orthogonal = max_abs_offdiag(hg) <= 1e-9 * max_abs_diag(hg);
        const bool inverse = identity_error(effective_channel(d.h, p.g0)) <= 1e-10;
        const auto used = ap_emitted_power(p);
        const bool feasible = std::all_of(used.begin(), used.end(), [cap](double w) { return w <= cap + 1e-12; });
        if (!(orthogonal && inverse && feasible && p.beta > 0.0)) {
            ++failures;
            MESSAGE("draw ", draw, " cond ", d.condition, " failed");
        }
    }
    CHECK(failures == 0);
}

TEST_CASE("scaling the channel scales the inverse")
{
    oracle::Uniform rnd(77);
    for (int draw = 0; draw < 50; ++draw) {
        const auto d = oracle::random_channel(rnd, draw, 1e4);
        const double c = std::pow(10.0, rnd(-3.0, 3.0));
        ChannelMatrix scaled = d.h;
        for (std::size_t u = 0; u < scaled.users(); ++u)
            for (std::size_t a = 0; a < scaled.aps(); ++a)
                scaled.gain(u, a) *= c;
        const auto p = zf_precoder(d.h, 1.0);
        const auto q = zf_precoder(scaled, 1.0);
        double scale = 0.0;
        for (double v : p.g0.values)
            scale = std::max(scale, std::abs(v));
        for (std::size_t i = 0; i < p.g0.values.size(); ++i)
            CHECK(std::abs(q.g0.values[i] * c - p.g0.values[i]) <= 1e-8 * scale);
        CHECK(identity_error(effective_channel(scaled, q.g0)) <= 1e-10);
        CHECK(q.beta == Approx(p.beta * c).epsilon(1e-8));
    }
}

TEST_CASE("matrix CSV")
{
    Matrix m(2, 2);
    m(0, 0) = 1.0;
    m(0, 1) = -0.5;
    m(1, 1) = 1e-20;
    CHECK(matrix_csv(m) == "1,-0.5\n0,1e-20\n");
}

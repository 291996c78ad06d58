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

// Seeded random full-rank channel matrices for the zero-forcing checks.

#include "oracles.hpp"
#include "owc/channel.hpp"

#include <Eigen/Dense>
#include <Eigen/QR>
#include <Eigen/SVD>

#include <cmath>

namespace oracle {

struct ChannelDraw {
    owc::ChannelMatrix h;
    double condition = 0.0;
};

inline double condition_number(const Eigen::MatrixXd& m)
{
    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const auto& s = svd.singularValues();
    return s(0) / s(s.size() - 1);
}

inline Eigen::MatrixXd random_orthogonal(Uniform& rnd, Eigen::Index n)
{
    Eigen::MatrixXd m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            m(i, j) = rnd(-1.0, 1.0);
    return Eigen::HouseholderQR<Eigen::MatrixXd>(m).householderQ();
}

// Even draws: entries uniform on [0, 1], rejected above the condition limit.
// Odd draws: prescribed singular values spread log-uniformly up to a random
// condition number in [1, max_condition].
inline ChannelDraw random_channel(Uniform& rnd, int draw, double max_condition = 1e6, std::size_t max_aps = 8)
{
    const std::size_t aps = rnd.index(1, max_aps);
    const std::size_t users = rnd.index(1, aps);
    const auto u = static_cast<Eigen::Index>(users);
    const auto a = static_cast<Eigen::Index>(aps);
    Eigen::MatrixXd m(u, a);
    for (;;) {
        if (draw % 2 == 0) {
            for (Eigen::Index i = 0; i < u; ++i)
                for (Eigen::Index j = 0; j < a; ++j)
                    m(i, j) = rnd(0.0, 1.0);
        } else {
            const double target = std::pow(max_condition, rnd(0.0, 1.0));
            Eigen::MatrixXd s = Eigen::MatrixXd::Zero(u, a);
            for (Eigen::Index i = 0; i < u; ++i)
                s(i, i) = u == 1 ? 1.0 : std::pow(target, -static_cast<double>(i) / static_cast<double>(u - 1));
            m = random_orthogonal(rnd, u) * s * random_orthogonal(rnd, a).transpose();
            m *= std::pow(10.0, rnd(-4.0, 0.0));
        }
        const double cond = condition_number(m);
        if (cond <= max_condition * (1.0 - 1e-9)) {
            ChannelDraw out{owc::ChannelMatrix(users, aps), cond};
            for (std::size_t i = 0; i < users; ++i)
                for (std::size_t j = 0; j < aps; ++j)
                    out.h.gain(i, j) = m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
            return out;
        }
    }
}

} // namespace oracle

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

#include "owc/zf_precoding.hpp"

#include "owc/error.hpp"

#include <Eigen/Dense>
#include <Eigen/QR>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <fmt/core.h>
#include <limits>
#include <numeric>

namespace owc {

namespace {

Eigen::MatrixXd to_eigen(const ChannelMatrix& h)
{
    Eigen::MatrixXd m(h.users(), h.aps());
    for (std::size_t u = 0; u < h.users(); ++u)
        for (std::size_t a = 0; a < h.aps(); ++a)
            m(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(a)) = h.gain(u, a);
    return m;
}

Matrix from_eigen(const Eigen::MatrixXd& m)
{
    Matrix out(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            out(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = m(i, j);
    return out;
}

// The left null vector of H weights the users involved in the dependency;
// its two largest components name the pair.
[[noreturn]] void throw_singular(const Eigen::MatrixXd& h)
{
    if (h.rows() == 1)
        throw SingularChannelError("channel matrix is rank deficient: user 0 receives no signal", 0, 0);
    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(h, Eigen::ComputeFullU);
    const Eigen::VectorXd v = svd.matrixU().col(h.rows() - 1).cwiseAbs();
    std::vector<std::size_t> order(static_cast<std::size_t>(v.size()));
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&v](std::size_t x, std::size_t y) {
        return v(static_cast<Eigen::Index>(x)) > v(static_cast<Eigen::Index>(y));
    });
    std::size_t first = order[0];
    std::size_t second = order.size() > 1 ? order[1] : order[0];
    if (first > second)
        std::swap(first, second);
    throw SingularChannelError(
        fmt::format("channel matrix is rank deficient: users {} and {} are not separable by zero forcing", first,
                    second),
        first, second);
}

} // namespace

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1.0;
    return m;
}

Precoder zf_precoder(const ChannelMatrix& h, std::span<const double> per_ap_power_cap)
{
    const std::size_t users = h.users();
    const std::size_t aps = h.aps();
    if (users == 0 || aps == 0)
        throw ValidationError("zf_precoder: empty channel matrix");
    if (users > aps)
        throw InfeasibleError(fmt::format("zero forcing needs U <= A, got U = {}, A = {}", users, aps));
    if (per_ap_power_cap.size() != aps)
        throw ValidationError(
            fmt::format("zf_precoder: {} power caps given for {} access points", per_ap_power_cap.size(), aps));
    for (const double cap : per_ap_power_cap)
        if (!(cap > 0.0))
            throw ValidationError(fmt::format("zf_precoder: power cap must be positive, got {}", cap));

    const Eigen::MatrixXd hm = to_eigen(h);
    if (!hm.allFinite())
        throw ValidationError("zf_precoder: channel matrix has non-finite entries");

    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod;
    cod.setThreshold(kRankTolerance);
    cod.compute(hm);
    if (hm.isZero(0.0) || cod.rank() < static_cast<Eigen::Index>(users))
        throw_singular(hm);

    Eigen::MatrixXd g0 = cod.pseudoInverse();
    // One refinement step: H g0' = I - R^2 with R = I - H g0.
    const Eigen::MatrixXd residual
        = Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(users), static_cast<Eigen::Index>(users)) - hm * g0;
    g0 += g0 * residual;

    double beta = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < aps; ++a) {
        const double l1 = g0.row(static_cast<Eigen::Index>(a)).cwiseAbs().sum();
        if (l1 > 0.0)
            beta = std::min(beta, per_ap_power_cap[a] / l1);
    }

    Precoder out;
    out.g0 = from_eigen(g0);
    out.beta = beta;
    out.g = from_eigen(beta * g0);
    out.sqrt_q.assign(users, beta);
    return out;
}

Precoder zf_precoder(const ChannelMatrix& h, double per_ap_power_cap)
{
    const std::vector<double> caps(h.aps(), per_ap_power_cap);
    return zf_precoder(h, caps);
}

Matrix effective_channel(const ChannelMatrix& h, const Matrix& g)
{
    if (g.rows != h.aps())
        throw ValidationError(fmt::format("precoder has {} rows, channel has {} APs", g.rows, h.aps()));
    Matrix out(h.users(), g.cols);
    for (std::size_t u = 0; u < h.users(); ++u)
        for (std::size_t n = 0; n < g.cols; ++n) {
            double sum = 0.0;
            for (std::size_t a = 0; a < h.aps(); ++a)
                sum += h.gain(u, a) * g(a, n);
            out(u, n) = sum;
        }
    return out;
}

Matrix residual_interference(const ChannelMatrix& h, const Precoder& precoder)
{
    Matrix out = effective_channel(h, precoder.g);
    for (std::size_t i = 0; i < std::min(out.rows, out.cols); ++i)
        out(i, i) = 0.0;
    return out;
}

std::vector<double> ap_emitted_power(const Precoder& precoder)
{
    std::vector<double> out(precoder.g.rows, 0.0);
    for (std::size_t a = 0; a < precoder.g.rows; ++a)
        for (std::size_t u = 0; u < precoder.g.cols; ++u)
            out[a] += std::abs(precoder.g(a, u));
    return out;
}

std::string matrix_csv(const Matrix& m)
{
    std::string out;
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t j = 0; j < m.cols; ++j) {
            if (j > 0)
                out += ',';
            out += fmt::format("{}", m(i, j));
        }
        out += '\n';
    }
    return out;
}

} // namespace owc

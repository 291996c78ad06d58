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

// Zero-forcing multi-user precoding. The precoder is the Moore-Penrose
// right inverse of the channel, scaled by one global factor so that no
// access point exceeds its optical power budget.

#include "owc/channel.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace owc {

// Dense row-major matrix.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> values;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), values(r * c, 0.0) {}

    static Matrix identity(std::size_t n);

    double& operator()(std::size_t i, std::size_t j) { return values[i * cols + j]; }
    double operator()(std::size_t i, std::size_t j) const { return values[i * cols + j]; }
};

struct Precoder {
    Matrix g0;                // A x U right inverse, H g0 = I
    Matrix g;                 // A x U, beta * g0 [W per unit symbol]
    std::vector<double> sqrt_q; // per-user effective gain, diag(H g)
    double beta = 0.0;
};

inline constexpr double kRankTolerance = 1e-10;

// Stream symbols have unit peak amplitude, so AP a emits sum_u |g[a,u]| watts
// on top of its bias. beta = min_a cap_a / sum_u |g0[a,u]|.
//
// InfeasibleError when U > A; SingularChannelError (naming two users) when
// H is rank deficient at relative tolerance kRankTolerance.
Precoder zf_precoder(const ChannelMatrix& h, std::span<const double> per_ap_power_cap);
Precoder zf_precoder(const ChannelMatrix& h, double per_ap_power_cap);

// H g, U x U.
Matrix effective_channel(const ChannelMatrix& h, const Matrix& g);

// H g with the diagonal zeroed.
Matrix residual_interference(const ChannelMatrix& h, const Precoder& precoder);

// Emitted modulation power of each AP, sum_u |g[a,u]|.
std::vector<double> ap_emitted_power(const Precoder& precoder);

std::string matrix_csv(const Matrix& m);

} // namespace owc

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

// Receiver noise, per-user SINR, rates, network sum rate and energy
// efficiency (delivered bits per joule of consumed electrical energy).

#include "owc/channel.hpp"
#include "owc/scene.hpp"
#include "owc/zf_precoding.hpp"

#include <span>
#include <string_view>
#include <vector>

namespace owc {

inline constexpr double kElectronCharge = 1.602176634e-19; // [C]
inline constexpr double kBoltzmann = 1.380649e-23;         // [J/K]

// Current noise variances [A^2].
struct NoiseBreakdown {
    double shot = 0.0;
    double thermal = 0.0;
    double rin = 0.0;
    double preamp = 0.0;
    double total = 0.0;
};

enum class RateModel {
    shannon, // B_e log2(1 + SINR)
    ook,     // B_e when the OOK bit error rate Q(sqrt(SINR)) meets the FEC limit, else 0
};

struct UserLink {
    double photocurrent = 0.0;     // signal current [A]
    double interference = 0.0;     // residual multi-user interference power [A^2]
    NoiseBreakdown noise;
    double sinr = 0.0;             // I^2 / (noise + interference)
    double amplitude_ratio = 0.0;  // I / sqrt(noise), diagnostic
    double rate = 0.0;             // [bit/s]
};

struct LinkReport {
    std::vector<UserLink> per_user;
    double sum_rate = 0.0;          // [bit/s]
    double consumed_power = 0.0;    // [W]
    double energy_efficiency = 0.0; // [bit/J]
};

// shot = 2 e B_e I, thermal = 4 k T F B_e / R_l, rin = 10^(RIN/10) B_e I^2,
// preamp = N_pr B_e.
NoiseBreakdown noise_variance(double photocurrent, const ElectricalSpec& elec);

// Evaluates one user against an arbitrary precoder (g in watts per unit
// symbol). A non-positive diagonal gain yields zero.
UserLink user_link(std::size_t user, const Scene& scene, const ChannelMatrix& h, const Precoder& precoder);
double user_sinr(std::size_t user, const Scene& scene, const ChannelMatrix& h, const Precoder& precoder);

// Standard normal upper tail.
double q_function(double x);

double user_rate(double sinr, const ElectricalSpec& elec, RateModel model = RateModel::shannon);

// Sum over APs of array size times per-VCSEL consumption.
double consumed_power(const Scene& scene);

// DomainError if the consumed power is not positive.
double energy_efficiency(std::span<const double> user_rates, const Scene& scene);

LinkReport evaluate_link(const Scene& scene, const ChannelMatrix& h, const Precoder& precoder,
                         RateModel model = RateModel::shannon);

std::string_view to_string(RateModel model);
RateModel parse_rate_model(std::string_view text);

} // namespace owc

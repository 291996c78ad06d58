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

#include "owc/link_budget.hpp"

#include "owc/error.hpp"

#include <cmath>
#include <fmt/core.h>
#include <numeric>

namespace owc {

NoiseBreakdown noise_variance(double photocurrent, const ElectricalSpec& elec)
{
    const double be = elec.rx_bandwidth;
    const double noise_figure = std::pow(10.0, elec.noise_figure_db / 10.0);
    const double rin = std::pow(10.0, elec.rin_db_per_hz / 10.0);

    NoiseBreakdown n;
    n.shot = 2.0 * kElectronCharge * be * photocurrent;
    n.thermal = 4.0 * kBoltzmann * elec.temperature * noise_figure * be / elec.load_resistance;
    n.rin = rin * be * photocurrent * photocurrent;
    n.preamp = elec.preamp_noise_density * be;
    n.total = n.shot + n.thermal + n.rin + n.preamp;
    return n;
}

UserLink user_link(std::size_t user, const Scene& scene, const ChannelMatrix& h, const Precoder& precoder)
{
    if (user >= h.users() || user >= scene.users.size())
        throw ValidationError(fmt::format("user index {} out of range", user));
    const Matrix hg = effective_channel(h, precoder.g);
    const double responsivity = scene.users[user].detector.responsivity;

    UserLink link;
    const double diag = hg(user, user);
    link.photocurrent = diag > 0.0 ? responsivity * diag : 0.0;
    for (std::size_t n = 0; n < hg.cols; ++n) {
        if (n == user)
            continue;
        const double leak = responsivity * hg(user, n);
        link.interference += leak * leak;
    }
    link.noise = noise_variance(link.photocurrent, scene.electrical);
    const double denom = link.noise.total + link.interference;
    link.sinr = link.photocurrent * link.photocurrent / denom;
    link.amplitude_ratio = link.photocurrent / std::sqrt(link.noise.total);
    return link;
}

double user_sinr(std::size_t user, const Scene& scene, const ChannelMatrix& h, const Precoder& precoder)
{
    return user_link(user, scene, h, precoder).sinr;
}

double q_function(double x)
{
    return 0.5 * std::erfc(x / std::sqrt(2.0));
}

double user_rate(double sinr, const ElectricalSpec& elec, RateModel model)
{
    if (!(sinr >= 0.0))
        throw DomainError(fmt::format("user_rate needs sinr >= 0, got {}", sinr));
    switch (model) {
    case RateModel::shannon:
        return elec.rx_bandwidth * std::log2(1.0 + sinr);
    case RateModel::ook:
        return q_function(std::sqrt(sinr)) <= elec.fec_limit ? elec.rx_bandwidth : 0.0;
    }
    return 0.0;
}

double consumed_power(const Scene& scene)
{
    double total = 0.0;
    for (const auto& ap : scene.aps)
        total += static_cast<double>(ap.vcsel_count()) * scene.electrical.vcsel_consumed_power();
    return total;
}

double energy_efficiency(std::span<const double> user_rates, const Scene& scene)
{
    const double power = consumed_power(scene);
    if (!(power > 0.0))
        throw DomainError(fmt::format("energy efficiency needs positive consumed power, got {}", power));
    return std::accumulate(user_rates.begin(), user_rates.end(), 0.0) / power;
}

LinkReport evaluate_link(const Scene& scene, const ChannelMatrix& h, const Precoder& precoder, RateModel model)
{
    LinkReport report;
    std::vector<double> rates;
    for (std::size_t u = 0; u < h.users(); ++u) {
        auto link = user_link(u, scene, h, precoder);
        link.rate = user_rate(link.sinr, scene.electrical, model);
        rates.push_back(link.rate);
        report.per_user.push_back(link);
    }
    report.sum_rate = std::accumulate(rates.begin(), rates.end(), 0.0);
    report.consumed_power = consumed_power(scene);
    report.energy_efficiency = energy_efficiency(rates, scene);
    return report;
}

std::string_view to_string(RateModel model)
{
    return model == RateModel::ook ? "ook" : "shannon";
}

RateModel parse_rate_model(std::string_view text)
{
    if (text == "shannon")
        return RateModel::shannon;
    if (text == "ook")
        return RateModel::ook;
    throw ParseError(fmt::format("rate model must be shannon or ook, got '{}'", text));
}

} // namespace owc

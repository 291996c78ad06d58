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

#include "owc/scene.hpp"

#include "owc/error.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <charconv>
#include <cmath>
#include <fmt/core.h>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace owc {

namespace {

namespace pt = boost::property_tree;

constexpr double kPositionTolerance = 1e-9;

const std::map<std::string, std::set<std::string>>& known_keys()
{
    static const std::map<std::string, std::set<std::string>> keys{
        {"room", {"width", "length", "height", "rx_plane_height"}},
        {"vcsel",
         {"beam_waist", "wavelength", "modes", "array_n", "pitch", "per_vcsel_power", "optical_bandwidth",
          "rin", "bias_current", "drive_voltage", "consumed_power"}},
        {"lens", {"enabled", "focal_length", "vcsel_to_lens", "refractive_index"}},
        {"access_points", {"positions"}},
        {"receiver",
         {"responsivity", "detector_area", "fov_half_angle", "noise_current_density", "preamp_noise_density",
          "bandwidth", "load_resistance", "noise_figure_db", "temperature", "fec_limit", "incidence_cosine"}},
        {"users", {"count", "placement", "seed", "positions"}},
        {"safety", {"mpe", "pupil_radius", "mhp_floor"}},
    };
    return keys;
}

std::string trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(std::string_view s, char sep)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        auto piece = trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (!piece.empty())
            out.push_back(std::move(piece));
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    return out;
}

std::vector<std::string> split_ws(std::string_view s)
{
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    std::string tok;
    while (in >> tok)
        out.push_back(tok);
    return out;
}

double to_double(const std::string& field, std::string_view text)
{
    const auto t = trim(text);
    double value = 0.0;
    const auto* begin = t.data();
    const auto* end = t.data() + t.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (t.empty() || ec != std::errc{} || ptr != end || !std::isfinite(value))
        throw ParseError(fmt::format("{}: expected a number, got '{}'", field, t));
    return value;
}

long long to_integer(const std::string& field, std::string_view text)
{
    const auto t = trim(text);
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size())
        throw ParseError(fmt::format("{}: expected an integer, got '{}'", field, t));
    return value;
}

bool to_bool(const std::string& field, std::string_view text)
{
    const auto t = trim(text);
    if (t == "true" || t == "yes" || t == "on" || t == "1")
        return true;
    if (t == "false" || t == "no" || t == "off" || t == "0")
        return false;
    throw ParseError(fmt::format("{}: expected true or false, got '{}'", field, t));
}

// Read-only view over the parsed document.
class ConfigReader {
public:
    explicit ConfigReader(const pt::ptree& root) : root_(root) {}

    std::optional<std::string> raw(const std::string& section, const std::string& key) const
    {
        const auto sec = root_.get_child_optional(pt::ptree::path_type(section, '\0'));
        if (!sec)
            return std::nullopt;
        const auto val = sec->get_optional<std::string>(pt::ptree::path_type(key, '\0'));
        if (!val)
            return std::nullopt;
        return *val;
    }

    double number(const std::string& section, const std::string& key, double fallback) const
    {
        const auto v = raw(section, key);
        return v ? to_double(section + "." + key, *v) : fallback;
    }

    std::optional<double> optional_number(const std::string& section, const std::string& key) const
    {
        const auto v = raw(section, key);
        if (!v)
            return std::nullopt;
        return to_double(section + "." + key, *v);
    }

    long long integer(const std::string& section, const std::string& key, long long fallback) const
    {
        const auto v = raw(section, key);
        return v ? to_integer(section + "." + key, *v) : fallback;
    }

    bool flag(const std::string& section, const std::string& key, bool fallback) const
    {
        const auto v = raw(section, key);
        return v ? to_bool(section + "." + key, *v) : fallback;
    }

private:
    const pt::ptree& root_;
};

void check_known_keys(const pt::ptree& root)
{
    const auto& keys = known_keys();
    for (const auto& [section, node] : root) {
        if (node.empty() && !node.data().empty())
            throw ParseError(fmt::format("key '{}' appears outside any section", section));
        const auto it = keys.find(section);
        if (it == keys.end())
            throw ParseError(fmt::format("unknown section [{}]", section));
        for (const auto& [key, value] : node) {
            if (!it->second.contains(key))
                throw ParseError(fmt::format("unknown key '{}' in section [{}]", key, section));
        }
    }
}

std::vector<LgMode> parse_modes(const std::string& text)
{
    std::vector<LgMode> modes;
    for (const auto& item : split(text, ',')) {
        const auto parts = split(item, ':');
        if (parts.size() != 3)
            throw ParseError(fmt::format("vcsel.modes: expected p:l:fraction, got '{}'", item));
        LgMode m;
        m.p = static_cast<int>(to_integer("vcsel.modes", parts[0]));
        m.l = static_cast<int>(to_integer("vcsel.modes", parts[1]));
        m.fraction = to_double("vcsel.modes", parts[2]);
        modes.push_back(m);
    }
    return modes;
}

// "x y z; x y z" (or "x y" pairs when allow_2d is set).
std::vector<std::vector<double>> parse_points(const std::string& field, const std::string& text, bool allow_2d)
{
    std::vector<std::vector<double>> points;
    for (const auto& item : split(text, ';')) {
        const auto parts = split_ws(item);
        if (parts.size() != 3 && !(allow_2d && parts.size() == 2))
            throw ParseError(fmt::format("{}: malformed point '{}'", field, item));
        std::vector<double> p;
        for (const auto& c : parts)
            p.push_back(to_double(field, c));
        points.push_back(std::move(p));
    }
    return points;
}

std::string fmt_double(double v)
{
    return fmt::format("{}", v);
}

// Uniform on the open interval (0, 1).
double open_unit(std::mt19937_64& rng)
{
    return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

void enforce_eye_safety(Scene& scene)
{
    if (!scene.safety.mpe)
        return;
    for (std::size_t i = 0; i < scene.aps.size(); ++i) {
        auto& ap = scene.aps[i];
        if (!ap.per_vcsel_power)
            continue;
        const double cap = max_safe_power(ap.beam, scene.safety, ap.lens).p_max;
        if (*ap.per_vcsel_power > cap) {
            scene.warnings.push_back(fmt::format(
                "aps[{}].per_vcsel_power {} W exceeds eye-safe maximum {} W; clamped", i, *ap.per_vcsel_power,
                cap));
            ap.per_vcsel_power = cap;
        }
    }
}

bool inside_footprint(const Room& room, double x, double y)
{
    return x >= 0.0 && x <= room.width && y >= 0.0 && y <= room.length;
}

} // namespace

void Room::validate() const
{
    if (!(width > 0.0))
        throw ValidationError(fmt::format("room.width must be positive, got {}", width));
    if (!(length > 0.0))
        throw ValidationError(fmt::format("room.length must be positive, got {}", length));
    if (!(height > 0.0))
        throw ValidationError(fmt::format("room.height must be positive, got {}", height));
    if (!(rx_plane_height > 0.0) || !(rx_plane_height < height))
        throw ValidationError(
            fmt::format("room.rx_plane_height must lie in (0, height), got {}", rx_plane_height));
}

double DetectorSpec::aperture_radius() const
{
    return std::sqrt(area / kPi);
}

void DetectorSpec::validate() const
{
    if (!(area > 0.0))
        throw ValidationError(fmt::format("receiver.detector_area must be positive, got {}", area));
    if (!(responsivity > 0.0) || responsivity > 1.2)
        throw ValidationError(fmt::format("receiver.responsivity must lie in (0, 1.2], got {}", responsivity));
    if (!(fov_half_angle > 0.0) || fov_half_angle > kPi / 2)
        throw ValidationError(
            fmt::format("receiver.fov_half_angle must lie in (0, pi/2], got {}", fov_half_angle));
}

double ElectricalSpec::vcsel_consumed_power() const
{
    return vcsel_power_consumption ? *vcsel_power_consumption : bias_current * drive_voltage;
}

void ElectricalSpec::validate() const
{
    const auto positive = [](double v, const char* field) {
        if (!(v > 0.0))
            throw ValidationError(fmt::format("{} must be positive, got {}", field, v));
    };
    positive(rx_bandwidth, "receiver.bandwidth");
    positive(optical_bandwidth, "vcsel.optical_bandwidth");
    positive(load_resistance, "receiver.load_resistance");
    positive(noise_figure_db, "receiver.noise_figure_db");
    positive(preamp_noise_density, "receiver.preamp_noise_density");
    positive(temperature, "receiver.temperature");
    positive(bias_current, "vcsel.bias_current");
    positive(drive_voltage, "vcsel.drive_voltage");
    if (!(rin_db_per_hz < 0.0))
        throw ValidationError(fmt::format("vcsel.rin must be negative (dB/Hz), got {}", rin_db_per_hz));
    if (!(fec_limit > 0.0 && fec_limit < 0.5))
        throw ValidationError(fmt::format("receiver.fec_limit must lie in (0, 0.5), got {}", fec_limit));
    if (vcsel_power_consumption)
        positive(*vcsel_power_consumption, "vcsel.consumed_power");
}

void Scene::validate() const
{
    room.validate();
    if (aps.empty())
        throw ValidationError("access_points.positions: at least one access point is required");
    for (std::size_t i = 0; i < aps.size(); ++i) {
        const auto& ap = aps[i];
        if (!inside_footprint(room, ap.position.x, ap.position.y))
            throw ValidationError(fmt::format("aps[{}].position ({}, {}) lies outside the {} x {} m room", i,
                                              ap.position.x, ap.position.y, room.width, room.length));
        if (std::abs(ap.position.z - room.height) > kPositionTolerance)
            throw ValidationError(fmt::format("aps[{}].position.z = {} must equal the ceiling height {}", i,
                                              ap.position.z, room.height));
        if (ap.array_n < 1)
            throw ValidationError(fmt::format("aps[{}].array_n must be at least 1, got {}", i, ap.array_n));
        if (!(ap.pitch > 0.0))
            throw ValidationError(fmt::format("aps[{}].pitch must be positive, got {}", i, ap.pitch));
        ap.beam.validate();
        if (ap.lens)
            ap.lens->validate();
        if (ap.per_vcsel_power && !(*ap.per_vcsel_power > 0.0))
            throw ValidationError(
                fmt::format("aps[{}].per_vcsel_power must be positive, got {}", i, *ap.per_vcsel_power));
    }
    if (users.empty())
        throw ValidationError("users: at least one user is required");
    if (users.size() > aps.size())
        throw InfeasibleError(fmt::format("users: {} users exceed {} access points; zero forcing needs U <= A",
                                          users.size(), aps.size()));
    for (std::size_t i = 0; i < users.size(); ++i) {
        if (!inside_footprint(room, users[i].x, users[i].y))
            throw ValidationError(fmt::format("users[{}].position ({}, {}) lies outside the room footprint", i,
                                              users[i].x, users[i].y));
        users[i].detector.validate();
    }
    detector.validate();
    electrical.validate();
    safety.validate();
    if (safety.mpe) {
        for (std::size_t i = 0; i < aps.size(); ++i) {
            const auto& ap = aps[i];
            if (ap.per_vcsel_power && *ap.per_vcsel_power > max_safe_power(ap.beam, safety, ap.lens).p_max)
                throw ValidationError(fmt::format("aps[{}].per_vcsel_power exceeds the eye-safe maximum", i));
        }
    }
}

bool Scene::operator==(const Scene& other) const
{
    return room == other.room && aps == other.aps && users == other.users && detector == other.detector
        && electrical == other.electrical && safety == other.safety && placement == other.placement
        && seed == other.seed && incidence_cosine == other.incidence_cosine;
}

std::string_view to_string(Placement placement)
{
    switch (placement) {
    case Placement::on_axis:
        return "on-axis";
    case Placement::random:
        return "random";
    case Placement::explicit_positions:
        return "explicit";
    }
    return "on-axis";
}

Placement parse_placement(std::string_view text)
{
    if (text == "on-axis")
        return Placement::on_axis;
    if (text == "random")
        return Placement::random;
    if (text == "explicit")
        return Placement::explicit_positions;
    throw ParseError(fmt::format("users.placement: expected on-axis, random or explicit, got '{}'", text));
}

Scene default_scene()
{
    return load_scene("");
}

Scene load_scene(std::string_view config_text)
{
    pt::ptree root;
    {
        std::istringstream in{std::string(config_text)};
        try {
            pt::read_ini(in, root);
        } catch (const pt::ini_parser_error& e) {
            throw ParseError(fmt::format("config line {}: {}", e.line(), e.message()));
        }
    }
    check_known_keys(root);
    const ConfigReader cfg(root);

    Scene scene;
    scene.room.width = cfg.number("room", "width", 5.0);
    scene.room.length = cfg.number("room", "length", 5.0);
    scene.room.height = cfg.number("room", "height", 3.0);
    scene.room.rx_plane_height = cfg.number("room", "rx_plane_height", 1.0);

    AccessPoint proto;
    proto.beam.w0 = cfg.number("vcsel", "beam_waist", 5e-6);
    proto.beam.wavelength = cfg.number("vcsel", "wavelength", 850e-9);
    if (const auto modes = cfg.raw("vcsel", "modes"))
        proto.beam.modes = parse_modes(*modes);
    const auto array_n = cfg.integer("vcsel", "array_n", 5);
    if (array_n < 1 || array_n > 1000)
        throw ValidationError(fmt::format("vcsel.array_n must lie in [1, 1000], got {}", array_n));
    proto.array_n = static_cast<int>(array_n);
    proto.pitch = cfg.number("vcsel", "pitch", 10e-6);
    proto.per_vcsel_power = cfg.optional_number("vcsel", "per_vcsel_power");
    if (cfg.flag("lens", "enabled", true)) {
        LensSpec lens;
        lens.focal_length = cfg.number("lens", "focal_length", lens.focal_length);
        lens.vcsel_to_lens = cfg.number("lens", "vcsel_to_lens", lens.vcsel_to_lens);
        lens.refractive_index = cfg.number("lens", "refractive_index", lens.refractive_index);
        proto.lens = lens;
    }

    auto& el = scene.electrical;
    el.optical_bandwidth = cfg.number("vcsel", "optical_bandwidth", el.optical_bandwidth);
    el.rin_db_per_hz = cfg.number("vcsel", "rin", el.rin_db_per_hz);
    el.bias_current = cfg.number("vcsel", "bias_current", el.bias_current);
    el.drive_voltage = cfg.number("vcsel", "drive_voltage", el.drive_voltage);
    el.vcsel_power_consumption = cfg.optional_number("vcsel", "consumed_power");
    el.rx_bandwidth = cfg.number("receiver", "bandwidth", el.rx_bandwidth);
    el.load_resistance = cfg.number("receiver", "load_resistance", el.load_resistance);
    el.noise_figure_db = cfg.number("receiver", "noise_figure_db", el.noise_figure_db);
    el.temperature = cfg.number("receiver", "temperature", el.temperature);
    el.fec_limit = cfg.number("receiver", "fec_limit", el.fec_limit);
    const auto density = cfg.optional_number("receiver", "noise_current_density");
    const auto density_sq = cfg.optional_number("receiver", "preamp_noise_density");
    if (density && density_sq)
        throw ParseError("receiver: give either noise_current_density or preamp_noise_density, not both");
    if (density)
        el.preamp_noise_density = *density * *density;
    if (density_sq)
        el.preamp_noise_density = *density_sq;

    scene.detector.responsivity = cfg.number("receiver", "responsivity", scene.detector.responsivity);
    scene.detector.area = cfg.number("receiver", "detector_area", scene.detector.area);
    scene.detector.fov_half_angle = cfg.number("receiver", "fov_half_angle", scene.detector.fov_half_angle);
    scene.incidence_cosine = cfg.flag("receiver", "incidence_cosine", false);

    scene.safety.mpe = cfg.optional_number("safety", "mpe");
    scene.safety.pupil_radius = cfg.number("safety", "pupil_radius", scene.safety.pupil_radius);
    scene.safety.mhp_floor = cfg.number("safety", "mhp_floor", scene.safety.mhp_floor);

    std::vector<Vec3> ap_positions{{3, 3, 3}, {1, 3, 3}, {3, 1, 3}, {1, 1, 3}};
    if (const auto text = cfg.raw("access_points", "positions")) {
        ap_positions.clear();
        for (const auto& p : parse_points("access_points.positions", *text, false))
            ap_positions.push_back(Vec3{p[0], p[1], p[2]});
    }
    for (const auto& pos : ap_positions) {
        AccessPoint ap = proto;
        ap.position = pos;
        scene.aps.push_back(ap);
    }

    // Validate the AP side before placing users against it.
    scene.room.validate();
    scene.seed = static_cast<std::uint64_t>(cfg.integer("users", "seed", 1));
    scene.placement = parse_placement(trim(cfg.raw("users", "placement").value_or("on-axis")));
    const auto count_raw = cfg.integer("users", "count", static_cast<long long>(scene.aps.size()));
    if (count_raw < 1)
        throw ValidationError(fmt::format("users.count must be positive, got {}", count_raw));
    const auto count = static_cast<std::size_t>(count_raw);

    if (const auto text = cfg.raw("users", "positions")) {
        const auto points = parse_points("users.positions", *text, true);
        if (cfg.raw("users", "count") && points.size() != count)
            throw ValidationError(
                fmt::format("users.count = {} disagrees with {} listed positions", count, points.size()));
        for (std::size_t i = 0; i < points.size(); ++i) {
            const auto& p = points[i];
            if (p.size() == 3 && std::abs(p[2] - scene.room.rx_plane_height) > kPositionTolerance)
                throw ValidationError(fmt::format("users.positions[{}].z = {} is off the receive plane ({} m)", i,
                                                  p[2], scene.room.rx_plane_height));
            scene.users.push_back(UserTerminal{p[0], p[1], scene.detector});
        }
        if (!cfg.raw("users", "placement"))
            scene.placement = Placement::explicit_positions;
    } else {
        switch (scene.placement) {
        case Placement::on_axis:
            scene = place_users_on_axis(scene, count);
            break;
        case Placement::random:
            scene = place_users(scene, count, scene.seed);
            break;
        case Placement::explicit_positions:
            throw ValidationError("users.positions is required when users.placement = explicit");
        }
    }

    enforce_eye_safety(scene);
    scene.validate();
    return scene;
}

Scene load_scene_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError(fmt::format("cannot open config file '{}'", path.string()));
    std::ostringstream text;
    text << in.rdbuf();
    return load_scene(text.str());
}

std::string serialize_scene(const Scene& scene)
{
    if (scene.aps.empty())
        throw ValidationError("cannot serialize a scene without access points");
    const auto& ap0 = scene.aps.front();
    for (std::size_t i = 1; i < scene.aps.size(); ++i) {
        const auto& ap = scene.aps[i];
        if (ap.array_n != ap0.array_n || ap.pitch != ap0.pitch || !(ap.beam == ap0.beam) || ap.lens != ap0.lens
            || ap.per_vcsel_power != ap0.per_vcsel_power)
            throw ValidationError(fmt::format("aps[{}] differs from aps[0]; only uniform arrays serialize", i));
    }
    for (std::size_t i = 0; i < scene.users.size(); ++i) {
        if (!(scene.users[i].detector == scene.detector))
            throw ValidationError(fmt::format("users[{}].detector differs from the scene detector", i));
    }

    std::string out;
    const auto line = [&out](std::string_view key, const std::string& value) {
        out += fmt::format("{} = {}\n", key, value);
    };

    out += "[room]\n";
    line("width", fmt_double(scene.room.width));
    line("length", fmt_double(scene.room.length));
    line("height", fmt_double(scene.room.height));
    line("rx_plane_height", fmt_double(scene.room.rx_plane_height));

    const auto& el = scene.electrical;
    out += "\n[vcsel]\n";
    line("beam_waist", fmt_double(ap0.beam.w0));
    line("wavelength", fmt_double(ap0.beam.wavelength));
    std::string modes;
    for (const auto& m : ap0.beam.modes) {
        if (!modes.empty())
            modes += ", ";
        modes += fmt::format("{}:{}:{}", m.p, m.l, fmt_double(m.fraction));
    }
    line("modes", modes);
    line("array_n", fmt::format("{}", ap0.array_n));
    line("pitch", fmt_double(ap0.pitch));
    if (ap0.per_vcsel_power)
        line("per_vcsel_power", fmt_double(*ap0.per_vcsel_power));
    line("optical_bandwidth", fmt_double(el.optical_bandwidth));
    line("rin", fmt_double(el.rin_db_per_hz));
    line("bias_current", fmt_double(el.bias_current));
    line("drive_voltage", fmt_double(el.drive_voltage));
    if (el.vcsel_power_consumption)
        line("consumed_power", fmt_double(*el.vcsel_power_consumption));

    out += "\n[lens]\n";
    line("enabled", ap0.lens ? "true" : "false");
    if (ap0.lens) {
        line("focal_length", fmt_double(ap0.lens->focal_length));
        line("vcsel_to_lens", fmt_double(ap0.lens->vcsel_to_lens));
        line("refractive_index", fmt_double(ap0.lens->refractive_index));
    }

    out += "\n[access_points]\n";
    std::string aps;
    for (const auto& ap : scene.aps) {
        if (!aps.empty())
            aps += "; ";
        aps += fmt::format("{} {} {}", fmt_double(ap.position.x), fmt_double(ap.position.y),
                           fmt_double(ap.position.z));
    }
    line("positions", aps);

    out += "\n[receiver]\n";
    line("responsivity", fmt_double(scene.detector.responsivity));
    line("detector_area", fmt_double(scene.detector.area));
    line("fov_half_angle", fmt_double(scene.detector.fov_half_angle));
    line("preamp_noise_density", fmt_double(el.preamp_noise_density));
    line("bandwidth", fmt_double(el.rx_bandwidth));
    line("load_resistance", fmt_double(el.load_resistance));
    line("noise_figure_db", fmt_double(el.noise_figure_db));
    line("temperature", fmt_double(el.temperature));
    line("fec_limit", fmt_double(el.fec_limit));
    line("incidence_cosine", scene.incidence_cosine ? "true" : "false");

    out += "\n[users]\n";
    line("placement", std::string(to_string(scene.placement)));
    line("seed", fmt::format("{}", scene.seed));
    std::string users;
    for (const auto& u : scene.users) {
        if (!users.empty())
            users += "; ";
        users += fmt::format("{} {}", fmt_double(u.x), fmt_double(u.y));
    }
    line("positions", users);

    out += "\n[safety]\n";
    if (scene.safety.mpe)
        line("mpe", fmt_double(*scene.safety.mpe));
    line("pupil_radius", fmt_double(scene.safety.pupil_radius));
    line("mhp_floor", fmt_double(scene.safety.mhp_floor));
    return out;
}

Scene place_users(const Scene& scene, std::size_t count, std::uint64_t seed)
{
    if (count == 0)
        throw ValidationError("users.count must be positive");
    if (count > scene.aps.size())
        throw InfeasibleError(fmt::format("cannot place {} users with {} access points; zero forcing needs U <= A",
                                          count, scene.aps.size()));
    Scene out = scene;
    out.users.clear();
    out.placement = Placement::random;
    out.seed = seed;
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < count; ++i) {
        const double x = open_unit(rng) * scene.room.width;
        const double y = open_unit(rng) * scene.room.length;
        out.users.push_back(UserTerminal{x, y, scene.detector});
    }
    return out;
}

Scene place_users_on_axis(const Scene& scene, std::size_t count)
{
    if (count == 0)
        throw ValidationError("users.count must be positive");
    if (count > scene.aps.size())
        throw InfeasibleError(fmt::format("cannot place {} users with {} access points; zero forcing needs U <= A",
                                          count, scene.aps.size()));
    Scene out = scene;
    out.users.clear();
    out.placement = Placement::on_axis;
    for (std::size_t i = 0; i < count; ++i)
        out.users.push_back(UserTerminal{scene.aps[i].position.x, scene.aps[i].position.y, scene.detector});
    return out;
}

double vcsel_power(const AccessPoint& ap, const SafetySpec& safety)
{
    if (ap.per_vcsel_power)
        return *ap.per_vcsel_power;
    return max_safe_power(ap.beam, safety, ap.lens).p_max;
}

double ap_power_cap(const AccessPoint& ap, const SafetySpec& safety)
{
    return static_cast<double>(ap.vcsel_count()) * vcsel_power(ap, safety);
}

} // namespace owc

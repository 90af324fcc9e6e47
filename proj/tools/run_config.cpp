// SPDX-License-Identifier: Apache-2.0
//
// rispl: pathloss modelling for RIS-assisted terahertz links
// Copyright (C) 2026 The rispl authors
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

#include "run_config.hpp"

#include "rispl/constants.hpp"
#include "rispl/errors.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace rispl::cli
{
    namespace
    {
        struct KeySpec
        {
            const char *key;
            const char *default_value; // nullptr: no default
        };

        // Order defines the layout of --dump-config
        const std::vector<KeySpec> &schema()
        {
            static const std::vector<KeySpec> keys = {
                {"geometry.M", nullptr},
                {"geometry.N", nullptr},
                {"geometry.dx_m", nullptr},
                {"geometry.dy_m", nullptr},
                {"link.d1_m", nullptr},
                {"link.d2_m", nullptr},
                {"link.theta_i_deg", nullptr},
                {"link.phi_i_deg", nullptr},
                {"link.theta_r_deg", nullptr},
                {"link.phi_r_deg", nullptr},
                {"steering.theta_o_deg", nullptr},
                {"steering.phi_o_deg", nullptr},
                {"radio.f_hz", nullptr},
                {"radio.f_ghz", nullptr},
                {"radio.ga_dbi", "50"},
                {"radio.gu_dbi", "20"},
                {"radio.r_mag", "0.9"},
                {"radio.pattern_q", "1"},
                {"radio.p_ap_w", "1"},
                {"environment.t_k", "296"},
                {"environment.p_pa", "101325"},
                {"environment.rh_pct", "50"},
                {"model.absorption", "true"},
                {"validate.tolerance_db", "0.1"},
                {"sweep.axis1", nullptr},
                {"sweep.axis2", nullptr},
                {"sweep.threads", "1"},
                {"sweep.oracle", "false"},
            };
            return keys;
        }

        const KeySpec *find_key(const std::string &key)
        {
            for (const auto &spec : schema())
                if (key == spec.key)
                    return &spec;
            return nullptr;
        }

        std::string trim(const std::string &s)
        {
            const auto first = s.find_first_not_of(" \t\r\n");
            if (first == std::string::npos)
                return {};
            const auto last = s.find_last_not_of(" \t\r\n");
            return s.substr(first, last - first + 1);
        }

        std::string lower(std::string s)
        {
            std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
            return s;
        }

        double parse_double(const std::string &text, const std::string &what)
        {
            const std::string t = trim(text);
            double v = 0.0;
            const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
            if (t.empty() || ec != std::errc() || ptr != t.data() + t.size() || !std::isfinite(v))
                throw ConfigError(what + ": '" + text + "' is not a finite number");
            return v;
        }

        long long parse_integer(const std::string &text, const std::string &what)
        {
            const std::string t = trim(text);
            long long v = 0;
            const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
            if (t.empty() || ec != std::errc() || ptr != t.data() + t.size())
                throw ConfigError(what + ": '" + text + "' is not an integer");
            return v;
        }

        bool parse_bool(const std::string &text, const std::string &what)
        {
            const std::string t = lower(trim(text));
            if (t == "true" || t == "1" || t == "yes" || t == "on")
                return true;
            if (t == "false" || t == "0" || t == "no" || t == "off")
                return false;
            throw ConfigError(what + ": '" + text + "' is not a boolean");
        }

        double dbi_to_linear(double dbi) { return std::pow(10.0, dbi / 10.0); }

        struct AxisAlias
        {
            const char *alias;
            const char *parameter;
        };

        const std::vector<AxisAlias> &axis_aliases()
        {
            static const std::vector<AxisAlias> aliases = {
                {"f", "f_hz"}, {"T", "T_k"}, {"P", "P_pa"}, {"RH", "RH_pct"}, {"d1", "d1_m"}, {"d2", "d2_m"},
                {"dx", "dx_m"}, {"dy", "dy_m"}, {"theta_i", "theta_i_rad"}, {"phi_i", "phi_i_rad"},
                {"theta_r", "theta_r_rad"}, {"phi_r", "phi_r_rad"}, {"theta_o", "theta_o_rad"},
                {"phi_o", "phi_o_rad"}, {"ga", "ga_lin"}, {"gu", "gu_lin"}, {"R", "r_mag"}, {"q", "pattern_q"},
                {"p_ap", "p_ap_w"},
            };
            return aliases;
        }

        bool is_angle(const std::string &parameter)
        {
            return parameter.size() > 4 && parameter.compare(parameter.size() - 4, 4, "_rad") == 0;
        }
    }

    const std::vector<std::string> &known_keys()
    {
        static const std::vector<std::string> keys = []
        {
            std::vector<std::string> k;
            for (const auto &spec : schema())
                k.emplace_back(spec.key);
            return k;
        }();
        return keys;
    }

    void KeyValues::load_stream(std::istream &in, const std::string &origin)
    {
        boost::property_tree::ptree tree;
        try
        {
            boost::property_tree::ini_parser::read_ini(in, tree);
        }
        catch (const boost::property_tree::ini_parser_error &e)
        {
            throw ConfigError(origin + ": " + e.message() + " (line " + std::to_string(e.line()) + ")");
        }
        for (const auto &[section, body] : tree)
        {
            if (body.empty())
                throw ConfigError(origin + ": key '" + section + "' must be inside a [section]");
            for (const auto &[key, value] : body)
                set(section + "." + key, value.data());
        }
    }

    void KeyValues::load_file(const std::string &path)
    {
        std::ifstream in(path);
        if (!in)
            throw ConfigError("cannot open config file '" + path + "'");
        load_stream(in, path);
    }

    void KeyValues::set(const std::string &key, const std::string &value)
    {
        if (find_key(key) == nullptr)
            throw ConfigError("unknown configuration key '" + key + "'");
        values_[key] = trim(value);
    }

    void KeyValues::set_assignment(const std::string &assignment)
    {
        const auto eq = assignment.find('=');
        if (eq == std::string::npos)
            throw ConfigError("--set expects section.key=value, got '" + assignment + "'");
        set(trim(assignment.substr(0, eq)), assignment.substr(eq + 1));
    }

    std::optional<std::string> KeyValues::get(const std::string &key) const
    {
        const auto it = values_.find(key);
        if (it == values_.end())
            return std::nullopt;
        return it->second;
    }

    RunConfig build_run_config(const KeyValues &kv, Requirement requirement, const std::set<std::string> &covered)
    {
        auto text = [&](const std::string &key) -> std::optional<std::string>
        {
            if (auto v = kv.get(key))
                return v;
            if (const KeySpec *spec = find_key(key); spec && spec->default_value)
                return std::string(spec->default_value);
            return std::nullopt;
        };
        auto required = [&](const std::string &key)
        {
            if (!kv.has(key) && !covered.count(key))
                throw ConfigError("missing required configuration key '" + key + "'");
        };
        auto number = [&](const std::string &key, double fallback)
        {
            const auto v = text(key);
            return v ? parse_double(*v, key) : fallback;
        };

        const bool need_scenario = requirement != Requirement::environment_only;
        if (need_scenario)
        {
            for (const char *key : {"geometry.M", "geometry.N", "geometry.dx_m", "geometry.dy_m", "link.d1_m",
                                    "link.d2_m", "link.theta_i_deg", "link.phi_i_deg", "link.theta_r_deg",
                                    "link.phi_r_deg"})
                required(key);
            if (!kv.has("radio.f_hz") && !kv.has("radio.f_ghz") && !covered.count("radio.f_hz"))
                throw ConfigError("missing required configuration key 'radio.f_hz'");
        }
        if (requirement == Requirement::steered_scenario)
        {
            required("steering.theta_o_deg");
            required("steering.phi_o_deg");
        }
        if (kv.has("radio.f_hz") && kv.has("radio.f_ghz"))
            throw ConfigError("give either radio.f_hz or radio.f_ghz, not both");

        RunConfig cfg;
        Scenario &s = cfg.scenario;

        auto count = [&](const std::string &key, int fallback)
        {
            const auto v = text(key);
            return v ? static_cast<int>(parse_integer(*v, key)) : fallback;
        };
        s.geometry.rows_m = count("geometry.M", 2);
        s.geometry.cols_n = count("geometry.N", 2);
        s.geometry.pitch_x_m = number("geometry.dx_m", 1e-3);
        s.geometry.pitch_y_m = number("geometry.dy_m", 1e-3);

        s.link.ap_distance_m = number("link.d1_m", 1.0);
        s.link.ue_distance_m = number("link.d2_m", 1.0);
        s.link.ap_elevation_rad = deg_to_rad(number("link.theta_i_deg", 0.0));
        s.link.ap_azimuth_rad = deg_to_rad(number("link.phi_i_deg", 0.0));
        s.link.ue_elevation_rad = deg_to_rad(number("link.theta_r_deg", 0.0));
        s.link.ue_azimuth_rad = deg_to_rad(number("link.phi_r_deg", 0.0));

        const bool theta_o = kv.has("steering.theta_o_deg") || covered.count("steering.theta_o_deg");
        const bool phi_o = kv.has("steering.phi_o_deg") || covered.count("steering.phi_o_deg");
        cfg.has_steering = theta_o && phi_o;
        s.target.elevation_rad = kv.has("steering.theta_o_deg")
                                     ? deg_to_rad(number("steering.theta_o_deg", 0.0))
                                     : s.link.ue_elevation_rad;
        s.target.azimuth_rad = kv.has("steering.phi_o_deg") ? deg_to_rad(number("steering.phi_o_deg", 0.0))
                                                            : s.link.ue_azimuth_rad;

        if (kv.has("radio.f_ghz"))
            s.radio.frequency_hz = 1e9 * number("radio.f_ghz", 0.0);
        else
            s.radio.frequency_hz = number("radio.f_hz", 300e9);
        s.radio.ap_gain = dbi_to_linear(number("radio.ga_dbi", 50.0));
        s.radio.ue_gain = dbi_to_linear(number("radio.gu_dbi", 20.0));
        s.radio.reflection_magnitude = number("radio.r_mag", 0.9);
        s.radio.ru_pattern.exponent = number("radio.pattern_q", 1.0);
        s.radio.tx_power_w = number("radio.p_ap_w", 1.0);

        s.environment.temperature_k = number("environment.t_k", 296.0);
        s.environment.pressure_pa = number("environment.p_pa", 101325.0);
        s.environment.relative_humidity_pct = number("environment.rh_pct", 50.0);

        s.absorption = parse_bool(*text("model.absorption"), "model.absorption") ? Absorption::included
                                                                                  : Absorption::excluded;
        cfg.tolerance_db = number("validate.tolerance_db", 0.1);
        if (!(cfg.tolerance_db > 0.0))
            throw ConfigError("validate.tolerance_db must be positive");

        for (const char *key : {"sweep.axis1", "sweep.axis2"})
            if (auto v = kv.get(key))
                cfg.axes.push_back(*v);
        const long long threads = parse_integer(*text("sweep.threads"), "sweep.threads");
        if (threads < 0)
            throw ConfigError("sweep.threads must be >= 0");
        cfg.threads = static_cast<unsigned>(threads);
        cfg.oracle = parse_bool(*text("sweep.oracle"), "sweep.oracle");

        if (need_scenario)
        {
            try
            {
                validate(s.geometry);
                validate(s.link);
                validate(s.radio);
            }
            catch (const DomainError &e)
            {
                throw ConfigError(e.what());
            }
        }
        return cfg;
    }

    std::string dump_config(const KeyValues &kv)
    {
        std::ostringstream out;
        std::string section;
        for (const auto &spec : schema())
        {
            const std::string key = spec.key;
            std::optional<std::string> value = kv.get(key);
            if (!value && spec.default_value)
                value = spec.default_value;
            if (!value)
                continue;
            const auto dot = key.find('.');
            const std::string sec = key.substr(0, dot);
            if (sec != section)
            {
                if (!section.empty())
                    out << '\n';
                out << '[' << sec << "]\n";
                section = sec;
            }
            out << key.substr(dot + 1) << " = " << *value << '\n';
        }
        return out.str();
    }

    SweepAxis parse_axis(const std::string &text)
    {
        std::vector<std::string> parts;
        std::stringstream ss(text);
        std::string part;
        while (std::getline(ss, part, ':'))
            parts.push_back(trim(part));
        if (parts.size() != 4 && parts.size() != 5)
            throw ConfigError("axis '" + text + "' must look like name:start:stop:count[unit][:log]");

        SweepAxis axis;
        axis.parameter = parts[0];
        for (const auto &a : axis_aliases())
            if (axis.parameter == a.alias)
                axis.parameter = a.parameter;
        if (!is_sweep_parameter(axis.parameter))
            throw ConfigError("unknown sweep parameter '" + parts[0] + "'");

        axis.start = parse_double(parts[1], "axis start");
        axis.stop = parse_double(parts[2], "axis stop");

        const std::string &count_unit = parts[3];
        std::size_t digits = 0;
        while (digits < count_unit.size() && std::isdigit(static_cast<unsigned char>(count_unit[digits])))
            ++digits;
        if (digits == 0)
            throw ConfigError("axis '" + text + "' has no point count");
        axis.count = static_cast<int>(parse_integer(count_unit.substr(0, digits), "axis count"));
        if (axis.count < 1)
            throw ConfigError("axis '" + text + "' needs at least one point");
        const std::string unit = lower(count_unit.substr(digits));

        bool log_scale = false;
        if (parts.size() == 5)
        {
            const std::string scale = lower(parts[4]);
            if (scale == "log")
                log_scale = true;
            else if (scale != "lin")
                throw ConfigError("axis scale must be 'lin' or 'log', got '" + parts[4] + "'");
        }
        axis.scale = log_scale ? AxisScale::log : AxisScale::linear;

        if (unit.empty() || unit == "rad" || unit == "hz")
        {
            if (unit == "rad" && !is_angle(axis.parameter))
                throw ConfigError("unit 'rad' only applies to angular axes");
            if (unit == "hz" && axis.parameter != "f_hz")
                throw ConfigError("unit 'hz' only applies to the frequency axis");
        }
        else if (unit == "deg")
        {
            if (!is_angle(axis.parameter))
                throw ConfigError("unit 'deg' only applies to angular axes");
            axis.start = deg_to_rad(axis.start);
            axis.stop = deg_to_rad(axis.stop);
        }
        else if (unit == "ghz")
        {
            if (axis.parameter != "f_hz")
                throw ConfigError("unit 'ghz' only applies to the frequency axis");
            axis.start *= 1e9;
            axis.stop *= 1e9;
        }
        else if (unit == "dbi")
        {
            if (axis.parameter != "ga_lin" && axis.parameter != "gu_lin")
                throw ConfigError("unit 'dbi' only applies to gain axes");
            if (log_scale)
                throw ConfigError("a dBi axis is already logarithmic; drop ':log'");
            // Uniform steps in dBi are uniform logarithmic steps in linear gain
            axis.start = dbi_to_linear(axis.start);
            axis.stop = dbi_to_linear(axis.stop);
            axis.scale = AxisScale::log;
        }
        else
            throw ConfigError("unknown axis unit '" + unit + "'");
        return axis;
    }

    std::set<std::string> keys_covered_by(const std::string &p)
    {
        static const std::map<std::string, std::set<std::string>> table = {
            {"f_hz", {"radio.f_hz", "radio.f_ghz"}},
            {"d1_m", {"link.d1_m"}},
            {"d2_m", {"link.d2_m"}},
            {"theta_i_rad", {"link.theta_i_deg"}},
            {"phi_i_rad", {"link.phi_i_deg"}},
            {"theta_r_rad", {"link.theta_r_deg"}},
            {"phi_r_rad", {"link.phi_r_deg"}},
            {"theta_o_rad", {"steering.theta_o_deg"}},
            {"phi_o_rad", {"steering.phi_o_deg"}},
            {"T_k", {"environment.t_k"}},
            {"P_pa", {"environment.p_pa"}},
            {"RH_pct", {"environment.rh_pct"}},
            {"M", {"geometry.M"}},
            {"N", {"geometry.N"}},
            {"MN", {"geometry.M", "geometry.N"}},
            {"dx_m", {"geometry.dx_m"}},
            {"dy_m", {"geometry.dy_m"}},
            {"ga_lin", {"radio.ga_dbi"}},
            {"gu_lin", {"radio.gu_dbi"}},
            {"r_mag", {"radio.r_mag"}},
            {"pattern_q", {"radio.pattern_q"}},
            {"p_ap_w", {"radio.p_ap_w"}},
        };
        const auto it = table.find(p);
        return it == table.end() ? std::set<std::string>{} : it->second;
    }

    void write_phases_csv(std::ostream &out, const PhaseProfile &phases)
    {
        out << "# phase_rad in [0, 2pi); row i -> m = i + 1 - M/2, column j -> n = j + 1 - N/2; M="
            << phases.rows() << " N=" << phases.cols() << '\n';
        for (int r = 0; r < phases.rows(); ++r)
        {
            for (int c = 0; c < phases.cols(); ++c)
            {
                if (c)
                    out << ',';
                out << format_number(phases.at_row_col(r, c));
            }
            out << '\n';
        }
    }

    PhaseProfile read_phases_csv(std::istream &in)
    {
        std::vector<double> values;
        int rows = 0;
        int cols = -1;
        std::string line;
        while (std::getline(in, line))
        {
            const std::string t = trim(line);
            if (t.empty() || t.front() == '#')
                continue;
            std::stringstream ls(t);
            std::string cell;
            int width = 0;
            while (std::getline(ls, cell, ','))
            {
                values.push_back(parse_double(cell, "phase entry"));
                ++width;
            }
            if (cols < 0)
                cols = width;
            else if (width != cols)
                throw ShapeError("phase matrix row " + std::to_string(rows + 1) + " has " + std::to_string(width) +
                                 " entries, expected " + std::to_string(cols));
            ++rows;
        }
        if (rows == 0 || cols <= 0)
            throw ShapeError("phase matrix is empty");
        return {rows, cols, std::move(values)};
    }

    PhaseProfile read_phases_file(const std::string &path)
    {
        std::ifstream in(path);
        if (!in)
            throw ConfigError("cannot open phases file '" + path + "'");
        return read_phases_csv(in);
    }
}

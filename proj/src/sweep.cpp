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

#include "rispl/sweep.hpp"

#include "rispl/constants.hpp"
#include "rispl/errors.hpp"
#include "rispl/kernels.hpp"
#include "rispl/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

namespace rispl
{
    namespace
    {
        using Setter = std::function<void(Scenario &, double)>;

        int as_element_count(const std::string &name, double value)
        {
            const double r = std::nearbyint(value);
            if (std::abs(r - value) > 1e-9 || r < 2 || static_cast<long long>(r) % 2 != 0)
                throw SpecError("parameter " + name + " must take even integer values >= 2");
            return static_cast<int>(r);
        }

        const std::map<std::string, Setter> &setters()
        {
            static const std::map<std::string, Setter> table = {
                {"f_hz", [](Scenario &s, double v) { s.radio.frequency_hz = v; }},
                {"d1_m", [](Scenario &s, double v) { s.link.ap_distance_m = v; }},
                {"d2_m", [](Scenario &s, double v) { s.link.ue_distance_m = v; }},
                {"theta_i_rad", [](Scenario &s, double v) { s.link.ap_elevation_rad = v; }},
                {"phi_i_rad", [](Scenario &s, double v) { s.link.ap_azimuth_rad = v; }},
                {"theta_r_rad", [](Scenario &s, double v) { s.link.ue_elevation_rad = v; }},
                {"phi_r_rad", [](Scenario &s, double v) { s.link.ue_azimuth_rad = v; }},
                {"theta_o_rad", [](Scenario &s, double v) { s.target.elevation_rad = v; }},
                {"phi_o_rad", [](Scenario &s, double v) { s.target.azimuth_rad = v; }},
                {"T_k", [](Scenario &s, double v) { s.environment.temperature_k = v; }},
                {"P_pa", [](Scenario &s, double v) { s.environment.pressure_pa = v; }},
                {"RH_pct", [](Scenario &s, double v) { s.environment.relative_humidity_pct = v; }},
                {"M", [](Scenario &s, double v) { s.geometry.rows_m = as_element_count("M", v); }},
                {"N", [](Scenario &s, double v) { s.geometry.cols_n = as_element_count("N", v); }},
                {"MN", [](Scenario &s, double v) { s.geometry.rows_m = s.geometry.cols_n = as_element_count("MN", v); }},
                {"dx_m", [](Scenario &s, double v) { s.geometry.pitch_x_m = v; }},
                {"dy_m", [](Scenario &s, double v) { s.geometry.pitch_y_m = v; }},
                {"ga_lin", [](Scenario &s, double v) { s.radio.ap_gain = v; }},
                {"gu_lin", [](Scenario &s, double v) { s.radio.ue_gain = v; }},
                {"r_mag", [](Scenario &s, double v) { s.radio.reflection_magnitude = v; }},
                {"pattern_q", [](Scenario &s, double v) { s.radio.ru_pattern.exponent = v; }},
                {"p_ap_w", [](Scenario &s, double v) { s.radio.tx_power_w = v; }},
            };
            return table;
        }

        std::uint64_t fnv1a(const std::string &text)
        {
            std::uint64_t h = 1469598103934665603ULL;
            for (unsigned char c : text)
            {
                h ^= c;
                h *= 1099511628211ULL;
            }
            return h;
        }

        void check_spec(const SweepSpec &spec)
        {
            if (spec.axes.empty())
                throw SpecError("a sweep needs at least one axis");
            if (spec.axes.size() > 2)
                throw SpecError("a sweep has at most two axes");
            for (const auto &axis : spec.axes)
            {
                if (!is_sweep_parameter(axis.parameter))
                    throw SpecError("unknown sweep parameter '" + axis.parameter + "'");
                if (axis.count < 1)
                    throw SpecError("axis " + axis.parameter + " needs a positive point count");
                if (!std::isfinite(axis.start) || !std::isfinite(axis.stop))
                    throw SpecError("axis " + axis.parameter + " has non-finite bounds");
                if (axis.scale == AxisScale::log && (axis.start <= 0.0 || axis.stop <= 0.0))
                    throw SpecError("log axis " + axis.parameter + " needs positive bounds");
            }
            if (spec.axes.size() == 2 && spec.axes[0].parameter == spec.axes[1].parameter)
                throw SpecError("the two sweep axes must differ");
        }

        std::vector<std::string> table_columns(const SweepSpec &spec)
        {
            std::vector<std::string> columns;
            for (const auto &axis : spec.axes)
                columns.push_back(axis.parameter);
            for (const char *c : {col_pathloss, col_spreading, col_absorption, col_misalignment, col_kappa,
                                  col_mixing_ratio, col_received_power, col_singular})
                columns.emplace_back(c);
            if (spec.oracle_columns)
            {
                columns.emplace_back(col_oracle_taylor);
                columns.emplace_back(col_oracle_exact);
            }
            return columns;
        }

        void evaluate_cell(const SweepSpec &spec, const std::vector<double> &axis_values, double *out)
        {
            Scenario s = spec.base;
            for (std::size_t a = 0; a < axis_values.size(); ++a)
                apply_parameter(s, spec.axes[a].parameter, axis_values[a]);

            std::size_t c = 0;
            for (double v : axis_values)
                out[c++] = v;

            const double mu = mixing_ratio(s.environment);
            const double kappa = absorption_coefficient(s.radio.frequency_hz, mu);
            const auto steering = steering_coefficients(s.link, s.target);
            const auto result = pathloss(s.geometry, s.link, s.radio, s.environment, steering, s.absorption);
            constexpr double inf = std::numeric_limits<double>::infinity();
            if (const auto *b = std::get_if<PathlossBreakdown>(&result))
            {
                out[c++] = b->total_db;
                out[c++] = b->spreading_db;
                out[c++] = b->absorption_db;
                out[c++] = b->misalignment_db;
                out[c++] = kappa;
                out[c++] = mu;
                out[c++] = received_power(s.radio.tx_power_w, *b);
                out[c++] = 0.0;
            }
            else
            {
                out[c++] = inf;
                out[c++] = inf;
                out[c++] = inf;
                out[c++] = inf;
                out[c++] = kappa;
                out[c++] = mu;
                out[c++] = 0.0;
                out[c++] = 1.0;
            }
            if (spec.oracle_columns)
            {
                const auto phases = optimal_phase_profile(s.geometry, s.link, s.target, s.radio.wavelength_m());
                out[c++] = total_field(s.geometry, s.link, s.radio, s.environment, phases, DistanceMode::taylor,
                                       s.absorption)
                               .pathloss_db;
                out[c++] = total_field(s.geometry, s.link, s.radio, s.environment, phases, DistanceMode::exact,
                                       s.absorption)
                               .pathloss_db;
            }
        }
    }

    std::vector<double> SweepAxis::values() const
    {
        std::vector<double> out(static_cast<std::size_t>(std::max(count, 0)));
        if (count == 1)
        {
            out[0] = start;
            return out;
        }
        for (int i = 0; i < count; ++i)
        {
            const double t = static_cast<double>(i) / static_cast<double>(count - 1);
            if (scale == AxisScale::log)
                out[static_cast<std::size_t>(i)] = start * std::pow(stop / start, t);
            else
                out[static_cast<std::size_t>(i)] = start + (stop - start) * t;
        }
        out.back() = stop;
        return out;
    }

    const std::vector<std::string> &sweep_parameters()
    {
        static const std::vector<std::string> names = []
        {
            std::vector<std::string> n;
            for (const auto &[name, setter] : setters())
                n.push_back(name);
            return n;
        }();
        return names;
    }

    bool is_sweep_parameter(const std::string &name)
    {
        return setters().count(name) != 0;
    }

    void apply_parameter(Scenario &scenario, const std::string &name, double value)
    {
        const auto it = setters().find(name);
        if (it == setters().end())
            throw SpecError("unknown sweep parameter '" + name + "'");
        it->second(scenario, value);
    }

    SweepTable::SweepTable(std::vector<std::string> columns, std::size_t axis_count)
        : columns_(std::move(columns)), axis_count_(axis_count)
    {
        if (axis_count_ > columns_.size())
            throw SpecError("sweep table has more axes than columns");
    }

    std::size_t SweepTable::column_index(const std::string &name) const
    {
        const auto it = std::find(columns_.begin(), columns_.end(), name);
        if (it == columns_.end())
            throw SpecError("no column named '" + name + "'");
        return static_cast<std::size_t>(it - columns_.begin());
    }

    bool SweepTable::has_column(const std::string &name) const
    {
        return std::find(columns_.begin(), columns_.end(), name) != columns_.end();
    }

    std::vector<double> SweepTable::column(const std::string &name) const
    {
        const std::size_t c = column_index(name);
        std::vector<double> out(row_count());
        for (std::size_t r = 0; r < out.size(); ++r)
            out[r] = value(r, c);
        return out;
    }

    void SweepTable::append_row(const std::vector<double> &row)
    {
        if (row.size() != columns_.size())
            throw ShapeError("row width does not match the table header");
        data_.insert(data_.end(), row.begin(), row.end());
    }

    bool SweepTable::row_singular(std::size_t row) const
    {
        return has_column(col_singular) && value(row, column_index(col_singular)) != 0.0;
    }

    std::string spec_hash(const SweepSpec &spec)
    {
        std::ostringstream canon;
        canon.precision(17);
        canon << model_version << '|';
        for (const auto &a : spec.axes)
            canon << a.parameter << ':' << a.start << ':' << a.stop << ':' << a.count << ':'
                  << (a.scale == AxisScale::log ? "log" : "lin") << '|';
        const Scenario &s = spec.base;
        canon << s.geometry.rows_m << ',' << s.geometry.cols_n << ',' << s.geometry.pitch_x_m << ','
              << s.geometry.pitch_y_m << '|' << s.link.ap_distance_m << ',' << s.link.ue_distance_m << ','
              << s.link.ap_elevation_rad << ',' << s.link.ap_azimuth_rad << ',' << s.link.ue_elevation_rad << ','
              << s.link.ue_azimuth_rad << '|' << s.radio.frequency_hz << ',' << s.radio.ap_gain << ','
              << s.radio.ue_gain << ',' << s.radio.reflection_magnitude << ',' << s.radio.ru_pattern.exponent << ','
              << s.radio.tx_power_w << '|' << s.environment.temperature_k << ',' << s.environment.pressure_pa << ','
              << s.environment.relative_humidity_pct << '|' << s.target.elevation_rad << ','
              << s.target.azimuth_rad << '|' << (s.absorption == Absorption::included ? 1 : 0) << '|'
              << (spec.oracle_columns ? 1 : 0);
        char hex[17];
        std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(fnv1a(canon.str())));
        return hex;
    }

    SweepTable run_sweep(const SweepSpec &spec)
    {
        check_spec(spec);
        const auto columns = table_columns(spec);
        const std::size_t width = columns.size();

        std::vector<std::vector<double>> axis_values;
        for (const auto &axis : spec.axes)
            axis_values.push_back(axis.values());
        const std::size_t outer = axis_values[0].size();
        const std::size_t inner = axis_values.size() == 2 ? axis_values[1].size() : 1;
        const std::size_t rows = outer * inner;

        // Validate parameter values (e.g. odd M) before spawning workers
        for (std::size_t a = 0; a < spec.axes.size(); ++a)
            for (double v : axis_values[a])
            {
                Scenario probe = spec.base;
                apply_parameter(probe, spec.axes[a].parameter, v);
            }

        SweepTable table(columns, spec.axes.size());
        table.data().assign(rows * width, 0.0);
        table.provenance = {model_version, spec_hash(spec), kernels::isa_name(kernels::active_isa())};

        auto run_rows = [&](std::size_t begin, std::size_t end)
        {
            std::vector<double> cell_axes(spec.axes.size());
            for (std::size_t r = begin; r < end; ++r)
            {
                cell_axes[0] = axis_values[0][r / inner];
                if (spec.axes.size() == 2)
                    cell_axes[1] = axis_values[1][r % inner];
                evaluate_cell(spec, cell_axes, table.data().data() + r * width);
            }
        };

        unsigned threads = spec.threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : spec.threads;
        threads = static_cast<unsigned>(std::min<std::size_t>(threads, rows));
        if (threads <= 1)
        {
            run_rows(0, rows);
            return table;
        }

        std::vector<std::thread> workers;
        std::vector<std::exception_ptr> errors(threads);
        const std::size_t chunk = (rows + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t)
        {
            const std::size_t begin = t * chunk;
            const std::size_t end = std::min(rows, begin + chunk);
            workers.emplace_back([&, t, begin, end]
                                 {
                                     try
                                     {
                                         run_rows(begin, end);
                                     }
                                     catch (...)
                                     {
                                         errors[t] = std::current_exception();
                                     } });
        }
        for (auto &w : workers)
            w.join();
        for (const auto &e : errors)
            if (e)
                std::rethrow_exception(e);
        return table;
    }

    Extremum find_axis_extremum(const SweepTable &table, const std::string &column, ExtremumMode mode)
    {
        const std::size_t c = table.column_index(column);
        bool found = false;
        Extremum best;
        for (std::size_t r = 0; r < table.row_count(); ++r)
        {
            const double v = table.value(r, c);
            if (table.row_singular(r) || !std::isfinite(v))
                continue;
            const bool better = !found || (mode == ExtremumMode::min ? v < best.value : v > best.value);
            if (better)
            {
                found = true;
                best.value = v;
                best.row = r;
            }
        }
        if (!found)
            throw NoExtremumError("column '" + column + "' has no finite, non-singular cell");
        for (std::size_t a = 0; a < table.axis_count(); ++a)
            best.axis_values.push_back(table.value(best.row, a));
        return best;
    }

    HalfPowerWidth half_power_width(const SweepTable &table, const std::string &column)
    {
        if (table.axis_count() != 1)
            throw SpecError("half-power width needs a one-dimensional sweep");
        const auto min = find_axis_extremum(table, column, ExtremumMode::min);
        const std::size_t c = table.column_index(column);
        const std::size_t rows = table.row_count();
        const double level = min.value + 3.0;

        auto axis = [&](std::size_t r) { return table.value(r, 0); };
        auto val = [&](std::size_t r)
        {
            const double v = table.value(r, c);
            return table.row_singular(r) ? std::numeric_limits<double>::infinity() : v;
        };
        // Crossing of the 3 dB level between an inside row and an outside row
        auto crossing = [&](std::size_t inside, std::size_t outside)
        {
            const double vi = val(inside), vo = val(outside);
            if (!std::isfinite(vo))
                return axis(outside);
            const double t = (level - vi) / (vo - vi);
            return axis(inside) + t * (axis(outside) - axis(inside));
        };

        HalfPowerWidth out;
        std::size_t lo = min.row;
        while (lo > 0 && val(lo - 1) <= level)
            --lo;
        if (lo == 0)
        {
            out.lower = axis(0);
            out.partial = true;
        }
        else
            out.lower = crossing(lo, lo - 1);

        std::size_t hi = min.row;
        while (hi + 1 < rows && val(hi + 1) <= level)
            ++hi;
        if (hi + 1 == rows)
        {
            out.upper = axis(rows - 1);
            out.partial = true;
        }
        else
            out.upper = crossing(hi, hi + 1);

        out.width = std::abs(out.upper - out.lower);
        return out;
    }

    std::string format_number(double value)
    {
        if (std::isnan(value))
            return "nan";
        if (std::isinf(value))
            return value > 0 ? "inf" : "-inf";
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.9g", value);
        return buf;
    }

    namespace
    {
        std::string csv_field(const std::string &s)
        {
            if (s.find_first_of(",\"\r\n") == std::string::npos)
                return s;
            std::string quoted = "\"";
            for (char ch : s)
            {
                if (ch == '"')
                    quoted += '"';
                quoted += ch;
            }
            return quoted + '"';
        }
    }

    std::string to_csv(const SweepTable &table)
    {
        std::string out;
        const auto &cols = table.columns();
        for (std::size_t c = 0; c < cols.size(); ++c)
        {
            if (c)
                out += ',';
            out += csv_field(cols[c]);
        }
        out += '\n';
        for (std::size_t r = 0; r < table.row_count(); ++r)
        {
            for (std::size_t c = 0; c < cols.size(); ++c)
            {
                if (c)
                    out += ',';
                out += csv_field(format_number(table.value(r, c)));
            }
            out += '\n';
        }
        return out;
    }
}

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

#ifndef RISPL_SWEEP_HPP
#define RISPL_SWEEP_HPP

// Grid evaluation of the closed form (and optionally the field-sum oracles) over
// one or two parameter axes. Rows are ordered outer-axis-major; cells may be
// evaluated concurrently but the assembled table does not depend on the thread count.

#include "rispl/absorption.hpp"
#include "rispl/beam.hpp"
#include "rispl/geometry.hpp"
#include "rispl/linkbudget.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace rispl
{
    struct Scenario
    {
        RisGeometry geometry{};
        LinkGeometry link{};
        RadioConfig radio{};
        Environment environment{};
        SteeringTarget target{};
        Absorption absorption = Absorption::included;
    };

    enum class AxisScale
    {
        linear,
        log
    };

    struct SweepAxis
    {
        std::string parameter; // one of sweep_parameters()
        double start = 0.0;
        double stop = 0.0;
        int count = 1;
        AxisScale scale = AxisScale::linear;

        std::vector<double> values() const;
    };

    struct SweepSpec
    {
        std::vector<SweepAxis> axes;
        Scenario base;
        bool oracle_columns = false;
        unsigned threads = 1; // 0: hardware concurrency
    };

    // Whitelisted parameter names; each is also the column name (SI units / radians)
    const std::vector<std::string> &sweep_parameters();
    bool is_sweep_parameter(const std::string &name);

    // Set one whitelisted parameter on a scenario. Throws SpecError for unknown names
    // and for non-integer / odd element counts.
    void apply_parameter(Scenario &scenario, const std::string &name, double value);

    struct Provenance
    {
        std::string model_version;
        std::string config_hash; // 16 hex digits, FNV-1a over the canonical spec
        std::string kernel_isa;
    };

    class SweepTable
    {
    public:
        SweepTable() = default;
        SweepTable(std::vector<std::string> columns, std::size_t axis_count);

        const std::vector<std::string> &columns() const { return columns_; }
        std::size_t axis_count() const { return axis_count_; }
        std::size_t row_count() const { return columns_.empty() ? 0 : data_.size() / columns_.size(); }
        std::size_t column_index(const std::string &name) const; // SpecError if absent
        bool has_column(const std::string &name) const;

        double value(std::size_t row, std::size_t column) const { return data_[row * columns_.size() + column]; }
        std::vector<double> column(const std::string &name) const;
        void append_row(const std::vector<double> &row);
        bool row_singular(std::size_t row) const;

        Provenance provenance;

        std::vector<double> &data() { return data_; }
        const std::vector<double> &data() const { return data_; }

    private:
        std::vector<std::string> columns_;
        std::size_t axis_count_ = 0;
        std::vector<double> data_;
    };

    // Output columns after the axis columns
    inline constexpr const char *col_pathloss = "pathloss_db";
    inline constexpr const char *col_spreading = "spreading_db";
    inline constexpr const char *col_absorption = "absorption_db";
    inline constexpr const char *col_misalignment = "misalignment_db";
    inline constexpr const char *col_kappa = "kappa_per_m";
    inline constexpr const char *col_mixing_ratio = "mixing_ratio";
    inline constexpr const char *col_received_power = "received_power_w";
    inline constexpr const char *col_singular = "singular";
    inline constexpr const char *col_oracle_taylor = "oracle_taylor_db";
    inline constexpr const char *col_oracle_exact = "oracle_exact_db";

    std::string spec_hash(const SweepSpec &spec);

    SweepTable run_sweep(const SweepSpec &spec);

    enum class ExtremumMode
    {
        min,
        max
    };

    struct Extremum
    {
        std::vector<double> axis_values;
        double value = 0.0;
        std::size_t row = 0;
    };

    // Grid extremum over non-singular finite cells; ties go to the lowest row
    Extremum find_axis_extremum(const SweepTable &table, const std::string &column, ExtremumMode mode);

    struct HalfPowerWidth
    {
        double width = 0.0;  // axis units (radians for angular axes)
        double lower = 0.0;  // interpolated crossing below the minimum
        double upper = 0.0;  // interpolated crossing above the minimum
        bool partial = false; // the 3 dB region reached a grid edge
    };

    // Contiguous width around the global minimum of a 1-D table where column <= min + 3 dB
    HalfPowerWidth half_power_width(const SweepTable &table, const std::string &column);

    // RFC 4180, LF line endings, 9 significant digits
    std::string to_csv(const SweepTable &table);
    std::string format_number(double value);
}

#endif

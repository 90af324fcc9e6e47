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

#include <catch2/catch_amalgamated.hpp>

#include "rispl/constants.hpp"
#include "rispl/errors.hpp"
#include "rispl/kernels.hpp"
#include "rispl/sweep.hpp"

#include "scenarios.hpp"

#include <algorithm>
#include <cmath>

using namespace rispl;
using namespace rispl::test;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace
{
    SweepSpec one_axis(const Scenario &base, SweepAxis axis, unsigned threads = 1)
    {
        SweepSpec spec;
        spec.base = base;
        spec.axes = {std::move(axis)};
        spec.threads = threads;
        return spec;
    }

    // Frequencies (GHz) of strict local maxima of a column on a frequency sweep
    std::vector<double> local_maxima_ghz(const SweepTable &t, const std::string &column)
    {
        const auto f = t.column("f_hz");
        const auto v = t.column(column);
        std::vector<double> out;
        for (std::size_t i = 1; i + 1 < v.size(); ++i)
            if (v[i] > v[i - 1] && v[i] > v[i + 1])
                out.push_back(f[i] / 1e9);
        return out;
    }

    bool any_within(const std::vector<double> &xs, double lo, double hi)
    {
        return std::any_of(xs.begin(), xs.end(), [&](double x) { return x >= lo && x <= hi; });
    }
}

// ================================================================================================
// Axes and spec validation
// ================================================================================================

TEST_CASE("Sweep - axis values")
{
    const auto lin = SweepAxis{"f_hz", 100e9, 500e9, 5, AxisScale::linear}.values();
    REQUIRE(lin.size() == 5);
    CHECK(lin.front() == 100e9);
    CHECK(lin[2] == 300e9);
    CHECK(lin.back() == 500e9);

    const auto log = SweepAxis{"ga_lin", 10.0, 1000.0, 3, AxisScale::log}.values();
    CHECK_THAT(log[1], WithinRel(100.0, 1e-14));
    CHECK(log.back() == 1000.0);

    CHECK(SweepAxis{"T_k", 290.0, 300.0, 1}.values() == std::vector<double>{290.0});
}

TEST_CASE("Sweep - parameter whitelist")
{
    CHECK(is_sweep_parameter("phi_r_rad"));
    CHECK(is_sweep_parameter("MN"));
    CHECK_FALSE(is_sweep_parameter("phi_r"));
    CHECK(sweep_parameters().size() == 22);

    Scenario s = symmetric_link_scenario();
    apply_parameter(s, "MN", 40.0);
    CHECK(s.geometry.rows_m == 40);
    CHECK(s.geometry.cols_n == 40);
    apply_parameter(s, "ga_lin", 2e4);
    CHECK(s.radio.ap_gain == 2e4);
    CHECK_THROWS_AS(apply_parameter(s, "M", 7.0), SpecError);
    CHECK_THROWS_AS(apply_parameter(s, "N", 2.5), SpecError);
    CHECK_THROWS_AS(apply_parameter(s, "bogus", 1.0), SpecError);
}

TEST_CASE("Sweep - invalid specs")
{
    const Scenario base = symmetric_link_scenario();
    SweepSpec spec;
    spec.base = base;
    CHECK_THROWS_AS(run_sweep(spec), SpecError);

    CHECK_THROWS_AS(run_sweep(one_axis(base, {"nope", 0, 1, 3})), SpecError);
    CHECK_THROWS_AS(run_sweep(one_axis(base, {"f_hz", 1e11, 2e11, 0})), SpecError);
    CHECK_THROWS_AS(run_sweep(one_axis(base, {"f_hz", 0.0, 2e11, 3, AxisScale::log})), SpecError);
    CHECK_THROWS_AS(run_sweep(one_axis(base, {"M", 2, 5, 4})), SpecError);

    spec.axes = {{"f_hz", 1e11, 2e11, 2}, {"T_k", 280, 300, 2}, {"RH_pct", 0, 100, 2}};
    CHECK_THROWS_AS(run_sweep(spec), SpecError);
    spec.axes = {{"f_hz", 1e11, 2e11, 2}, {"f_hz", 1e11, 2e11, 2}};
    CHECK_THROWS_AS(run_sweep(spec), SpecError);
}

// ================================================================================================
// Table layout
// ================================================================================================

TEST_CASE("Sweep - two-axis table is outer-axis major")
{
    SweepSpec spec;
    spec.base = short_hop_scenario();
    spec.axes = {{"T_k", 270.0, 320.0, 6}, {"f_hz", 100e9, 500e9, 9}};
    const SweepTable t = run_sweep(spec);
    REQUIRE(t.row_count() == 54);
    CHECK(t.axis_count() == 2);
    CHECK(t.columns()[0] == "T_k");
    CHECK(t.columns()[1] == "f_hz");
    for (std::size_t r = 0; r < t.row_count(); ++r)
    {
        CHECK(t.value(r, 0) == 270.0 + 10.0 * double(r / 9));
        CHECK_THAT(t.value(r, 1), WithinRel(100e9 + 50e9 * double(r % 9), 1e-15));
    }
    CHECK_FALSE(t.has_column(col_oracle_exact));
    CHECK(t.provenance.model_version == model_version);
    CHECK(t.provenance.config_hash.size() == 16);
}

TEST_CASE("Sweep - degenerate single-point sweep equals a direct evaluation")
{
    const Scenario base = symmetric_link_scenario(300e9);
    SweepSpec spec;
    spec.base = base;
    spec.axes = {{"f_hz", 300e9, 300e9, 1}, {"d1_m", 10.0, 10.0, 1}};
    const SweepTable t = run_sweep(spec);
    REQUIRE(t.row_count() == 1);
    const auto b = evaluate_or_throw(base);
    CHECK(t.value(0, t.column_index(col_pathloss)) == b.total_db);
    CHECK(t.value(0, t.column_index(col_spreading)) == b.spreading_db);
    CHECK(t.value(0, t.column_index(col_singular)) == 0.0);
    CHECK_THAT(t.value(0, t.column_index(col_received_power)), WithinRel(received_power(1.0, b), 1e-15));
}

TEST_CASE("Sweep - oracle columns")
{
    SweepSpec spec = one_axis(symmetric_link_scenario(), {"f_hz", 150e9, 450e9, 4});
    spec.oracle_columns = true;
    const SweepTable t = run_sweep(spec);
    for (std::size_t r = 0; r < t.row_count(); ++r)
    {
        const double closed = t.value(r, t.column_index(col_pathloss));
        CHECK_THAT(t.value(r, t.column_index(col_oracle_taylor)), WithinAbs(closed, 1e-6));
        CHECK_THAT(t.value(r, t.column_index(col_oracle_exact)), WithinAbs(closed, 0.1));
    }
}

TEST_CASE("Sweep - grazing cells are flagged, not dropped")
{
    const SweepTable t = run_sweep(one_axis(symmetric_link_scenario(), {"theta_r_rad", 0.0, pi / 2, 5}));
    REQUIRE(t.row_count() == 5);
    CHECK(t.row_singular(4));
    CHECK(std::isinf(t.value(4, t.column_index(col_pathloss))));
    for (std::size_t r = 0; r < 4; ++r)
        CHECK_FALSE(t.row_singular(r));
}

TEST_CASE("Sweep - an ignored parameter gives a constant column")
{
    const SweepTable t = run_sweep(one_axis(symmetric_link_scenario(), {"p_ap_w", 0.1, 10.0, 7, AxisScale::log}));
    const auto pl = t.column(col_pathloss);
    CHECK(std::all_of(pl.begin(), pl.end(), [&](double v) { return v == pl.front(); }));
}

// ================================================================================================
// Extrema and beam widths
// ================================================================================================

TEST_CASE("Sweep - extremum search")
{
    SweepTable t({"x", "y", "z"}, 1);
    t.append_row({0.0, 1.0, 5.0});
    t.append_row({1.0, 2.0, 5.0});
    t.append_row({2.0, 3.0, 5.0});
    CHECK(find_axis_extremum(t, "y", ExtremumMode::max).axis_values == std::vector<double>{2.0});
    CHECK(find_axis_extremum(t, "y", ExtremumMode::min).row == 0);
    CHECK(find_axis_extremum(t, "z", ExtremumMode::max).row == 0);
    CHECK(find_axis_extremum(t, "z", ExtremumMode::min).row == 0);
    CHECK_THROWS_AS(find_axis_extremum(t, "w", ExtremumMode::min), SpecError);

    SweepTable empty({"x", "y"}, 1);
    empty.append_row({0.0, INFINITY});
    empty.append_row({1.0, NAN});
    CHECK_THROWS_AS(find_axis_extremum(empty, "y", ExtremumMode::min), NoExtremumError);
    CHECK_THROWS_AS(t.append_row({1.0}), ShapeError);
}

TEST_CASE("Sweep - azimuth scan minimum and beam width")
{
    const double step = two_pi / 720.0;
    double previous_width = INFINITY;
    for (double f : {100e9, 200e9, 300e9})
    {
        const SweepTable t = run_sweep(one_axis(azimuth_scan_scenario(f), azimuth_scan_axis(), 2));
        REQUIRE(t.row_count() == 721);
        const auto min = find_axis_extremum(t, col_pathloss, ExtremumMode::min);
        CHECK(std::abs(min.axis_values[0] - pi / 3) <= step);
        const auto w = half_power_width(t, col_pathloss);
        INFO("f = " << f / 1e9 << " GHz, width " << w.width);
        CHECK_FALSE(w.partial);
        CHECK(w.lower < pi / 3);
        CHECK(w.upper > pi / 3);
        CHECK(w.width < previous_width);
        previous_width = w.width;
    }
}

TEST_CASE("Sweep - beam width of a half-wavelength line array")
{
    // 20 columns at lambda/2, AP on axis, beam steered to 0.3 rad in the x-z plane
    Scenario s;
    s.radio.frequency_hz = 300e9;
    const double lambda = s.radio.wavelength_m();
    s.geometry = {2, 20, lambda / 2, lambda / 2};
    s.link = {10.0, 10.0, 0.0, 0.0, 0.3, 0.0};
    s.target = {0.3, 0.0};
    s.absorption = Absorption::excluded;
    const SweepTable t = run_sweep(one_axis(s, {"theta_r_rad", 0.1, 0.5, 4001}));

    const auto w = half_power_width(t, col_pathloss);
    const double expected = 0.886 * lambda / (20 * lambda / 2 * std::cos(0.3));
    CHECK_FALSE(w.partial);
    CHECK_THAT(w.width, WithinRel(expected, 0.15));
}

TEST_CASE("Sweep - flat column spans the whole axis")
{
    const SweepTable t = run_sweep(one_axis(symmetric_link_scenario(), {"p_ap_w", 1.0, 3.0, 5}));
    const auto w = half_power_width(t, col_pathloss);
    CHECK(w.partial);
    CHECK(w.lower == 1.0);
    CHECK(w.upper == 3.0);
    CHECK(w.width == 2.0);
}

TEST_CASE("Sweep - frequency sweeps peak inside the two absorption bands")
{
    for (int side : {10, 20, 50, 100})
    {
        const SweepTable t = run_sweep(one_axis(symmetric_link_scenario(300e9, side), {"f_hz", 100e9, 500e9, 801}, 0));
        const auto peaks = local_maxima_ghz(t, col_pathloss);
        INFO("M = N = " << side);
        CHECK(any_within(peaks, 370.0, 390.0));
        CHECK(any_within(peaks, 430.0, 455.0));
    }
}

// ================================================================================================
// Output and determinism
// ================================================================================================

TEST_CASE("Sweep - CSV formatting")
{
    SweepTable t({"f_hz", "odd,name", "say \"hi\""}, 1);
    t.append_row({1e11, 1.0 / 3.0, INFINITY});
    CHECK(to_csv(t) == "f_hz,\"odd,name\",\"say \"\"hi\"\"\"\n1e+11,0.333333333,inf\n");
    CHECK(format_number(123456789012.0) == "1.23456789e+11");
    CHECK(format_number(NAN) == "nan");
    CHECK(format_number(-INFINITY) == "-inf");
}

TEST_CASE("Sweep - serial and parallel runs are byte-identical")
{
    SweepSpec spec;
    spec.base = short_hop_scenario();
    spec.axes = {{"T_k", 270.0, 320.0, 11}, {"f_hz", 100e9, 500e9, 41}};
    spec.oracle_columns = false;
    spec.threads = 1;
    const std::string serial = to_csv(run_sweep(spec));
    CHECK(to_csv(run_sweep(spec)) == serial);
    for (unsigned threads : {0u, 2u, 3u, 7u})
    {
        spec.threads = threads;
        const SweepTable t = run_sweep(spec);
        CHECK(to_csv(t) == serial);
    }
}

TEST_CASE("Sweep - provenance hash")
{
    SweepSpec a = one_axis(symmetric_link_scenario(), {"f_hz", 1e11, 5e11, 5});
    SweepSpec b = a;
    CHECK(spec_hash(a) == spec_hash(b));
    b.threads = 4; // execution detail, not part of the result
    CHECK(spec_hash(a) == spec_hash(b));
    b.axes[0].count = 6;
    CHECK(spec_hash(a) != spec_hash(b));
    b = a;
    b.base.radio.ap_gain *= 2.0;
    CHECK(spec_hash(a) != spec_hash(b));
    CHECK(run_sweep(a).provenance.config_hash == spec_hash(a));
    CHECK(run_sweep(a).provenance.kernel_isa == kernels::isa_name(kernels::active_isa()));
}

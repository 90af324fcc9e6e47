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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits non-zero if any fails.

#include "rispl/absorption.hpp"
#include "rispl/beam.hpp"
#include "rispl/constants.hpp"
#include "rispl/linkbudget.hpp"
#include "rispl/oracle.hpp"
#include "rispl/sweep.hpp"

#include "scenarios.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace rispl;
using namespace rispl::test;

namespace
{
    // Pinned tolerances and budgets
    constexpr double spreading_target_db = 34.4;
    constexpr double spreading_tolerance_db = 1.5;
    constexpr double size_step_db = -40.0;
    constexpr double size_step_tolerance_db = 1e-9;
    constexpr double frequency_step_db = 10.0;
    constexpr double frequency_step_tolerance_db = 1.5;
    constexpr double absorption_grid_ghz = 0.5;
    constexpr double window_fraction_of_peak = 0.5;
    constexpr double taylor_tolerance_db = 1e-6;
    constexpr double exact_tolerance_db = 0.1;
    constexpr double sensitivity_ratio_min = 5.0;
    constexpr double dirichlet_tolerance = 1e-12;
    constexpr double array_gain_rel_tolerance = 1e-9;

    struct Outcome
    {
        bool pass = false;
        std::string detail;
    };

    using Clock = std::chrono::steady_clock;

    int failures = 0;

    void run(int id, const char *name, double budget_s, const std::function<Outcome()> &body)
    {
        const auto t0 = Clock::now();
        Outcome o;
        try
        {
            o = body();
        }
        catch (const std::exception &e)
        {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double elapsed = std::chrono::duration<double>(Clock::now() - t0).count();
        if (elapsed > budget_s)
        {
            o.pass = false;
            o.detail += " (over the " + std::to_string(budget_s) + " s budget)";
        }
        if (!o.pass)
            ++failures;
        std::printf("%s %2d %-34s %8.3f s  %s\n", o.pass ? "PASS" : "FAIL", id, name, elapsed, o.detail.c_str());
        std::fflush(stdout);
    }

    std::string fmt(const char *format, double a, double b = 0.0, double c = 0.0)
    {
        char buf[256];
        std::snprintf(buf, sizeof buf, format, a, b, c);
        return buf;
    }

    double total_db(const Scenario &s) { return evaluate_or_throw(s).total_db; }

    std::vector<double> kappa_grid(double f0_ghz, double f1_ghz, std::vector<double> &freqs)
    {
        const int n = static_cast<int>(std::lround((f1_ghz - f0_ghz) / absorption_grid_ghz)) + 1;
        freqs.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            freqs[static_cast<std::size_t>(i)] = (f0_ghz + i * absorption_grid_ghz) * 1e9;
        std::vector<double> kappa(freqs.size());
        absorption_spectrum(freqs, mixing_ratio(standard_environment()), kappa);
        return kappa;
    }

    // ============================================================================================

    Outcome spreading_only()
    {
        Scenario s = short_hop_scenario();
        s.absorption = Absorption::excluded;
        const double v = total_db(s);
        return {std::abs(v - spreading_target_db) <= spreading_tolerance_db,
                fmt("%.4f dB, expected %.1f +- %.1f", v, spreading_target_db, spreading_tolerance_db)};
    }

    Outcome size_scaling()
    {
        Scenario s = symmetric_link_scenario(300e9, 10);
        const double small = total_db(s);
        s.geometry.rows_m = s.geometry.cols_n = 100;
        const double large = total_db(s);
        const double step = large - small;
        return {std::abs(step - size_step_db) <= size_step_tolerance_db, fmt("difference %.12f dB", step)};
    }

    Outcome frequency_slope()
    {
        const double lo = total_db(symmetric_link_scenario(100e9));
        const double hi = total_db(symmetric_link_scenario(300e9));
        const double step = hi - lo;
        return {std::abs(step - frequency_step_db) <= frequency_step_tolerance_db,
                fmt("100 GHz %.3f dB, 300 GHz %.3f dB, increase %.3f dB", lo, hi, step)};
    }

    Outcome absorption_peaks()
    {
        std::vector<double> f;
        const std::vector<double> k = kappa_grid(100.0, 500.0, f);
        auto peak_in = [&](double a, double b, double &best)
        {
            best = -1.0;
            bool found = false;
            for (std::size_t i = 1; i + 1 < k.size(); ++i)
                if (f[i] >= a * 1e9 && f[i] <= b * 1e9 && k[i] > k[i - 1] && k[i] > k[i + 1])
                {
                    found = true;
                    best = std::max(best, k[i]);
                }
            return found;
        };
        auto window_max = [&](double a, double b)
        {
            double m = 0.0;
            for (std::size_t i = 0; i < k.size(); ++i)
                if (f[i] >= a * 1e9 && f[i] <= b * 1e9)
                    m = std::max(m, k[i]);
            return m;
        };
        double p1 = 0.0, p2 = 0.0;
        const bool peaks = peak_in(370.0, 390.0, p1) && peak_in(430.0, 455.0, p2);
        const double limit = window_fraction_of_peak * std::min(p1, p2);
        const double w = std::max({window_max(100.0, 365.0), window_max(395.0, 430.0), window_max(460.0, 500.0)});
        return {peaks && w < limit,
                fmt("peaks %.4g and %.4g /m, highest window value %.4g /m", p1, p2, w)};
    }

    Outcome steering_argmin()
    {
        const SweepAxis axis = azimuth_scan_axis();
        const double step = (axis.stop - axis.start) / (axis.count - 1);
        double previous_width = std::numeric_limits<double>::infinity();
        bool ok = true;
        std::ostringstream detail;
        for (double f : {100e9, 200e9, 300e9})
        {
            SweepSpec spec;
            spec.axes = {axis};
            spec.base = azimuth_scan_scenario(f);
            const SweepTable t = run_sweep(spec);
            const Extremum e = find_axis_extremum(t, col_pathloss, ExtremumMode::min);
            const HalfPowerWidth w = half_power_width(t, col_pathloss);
            const double offset = std::abs(e.axis_values[0] - pi / 3.0);
            ok = ok && offset <= step + 1e-12 && w.width < previous_width && !w.partial;
            previous_width = w.width;
            detail << f / 1e9 << " GHz: argmin " << rad_to_deg(e.axis_values[0]) << " deg, width "
                   << rad_to_deg(w.width) << " deg; ";
        }
        return {ok, detail.str()};
    }

    Outcome taylor_equivalence()
    {
        std::mt19937_64 rng(20261016);
        std::uniform_real_distribution<double> elev(0.0, 1.3), azim(0.0, two_pi), freq(100e9, 500e9),
            dist(5.0, 50.0);
        std::uniform_int_distribution<int> half(1, 32);
        double worst = 0.0;
        for (int k = 0; k < 50; ++k)
        {
            Scenario s;
            s.geometry = {2 * half(rng), 2 * half(rng), 0.3e-3, 0.3e-3};
            s.link = {dist(rng), dist(rng), elev(rng), azim(rng), elev(rng), azim(rng)};
            s.radio.frequency_hz = freq(rng);
            s.target = {s.link.ue_elevation_rad, s.link.ue_azimuth_rad};
            const PhaseProfile p = optimal_phase_profile(s.geometry, s.link, s.target, s.radio.wavelength_m());
            const double oracle =
                total_field(s.geometry, s.link, s.radio, s.environment, p, DistanceMode::taylor).pathloss_db;
            worst = std::max(worst, std::abs(oracle - total_db(s)));
        }
        return {worst < taylor_tolerance_db, fmt("max disagreement %.3g dB over 50 draws", worst)};
    }

    Outcome exact_equivalence()
    {
        const Scenario s = symmetric_link_scenario();
        const PhaseProfile p = optimal_phase_profile(s.geometry, s.link, s.target, s.radio.wavelength_m());
        const double oracle = total_field(s.geometry, s.link, s.radio, s.environment, p, DistanceMode::exact).pathloss_db;
        const double closed = total_db(s);
        const double rf = fraunhofer_distance(s.geometry, s.radio.wavelength_m());
        return {std::abs(oracle - closed) <= exact_tolerance_db,
                fmt("closed form %.6f dB, exact sum %.6f dB, Fraunhofer %.3f m", closed, oracle, rf)};
    }

    Outcome environmental_sensitivity()
    {
        Scenario s = short_hop_scenario();
        s.radio.frequency_hz = 383e9;
        bool rh_increasing = true;
        double prev = -std::numeric_limits<double>::infinity();
        for (int rh = 0; rh <= 100; rh += 5)
        {
            s.environment.relative_humidity_pct = rh;
            const double v = total_db(s);
            rh_increasing = rh_increasing && v > prev;
            prev = v;
        }

        s.environment.relative_humidity_pct = 50.0;
        bool t_increasing = true;
        prev = -std::numeric_limits<double>::infinity();
        for (double t = 270.0; t <= 320.0 + 1e-9; t += 2.5)
        {
            s.environment.temperature_k = t;
            const double v = total_db(s);
            t_increasing = t_increasing && v > prev;
            prev = v;
        }

        auto swing = [&](double f)
        {
            Scenario c = short_hop_scenario();
            c.radio.frequency_hz = f;
            c.environment.temperature_k = 290.0;
            const double cold = total_db(c);
            c.environment.temperature_k = 300.0;
            return total_db(c) - cold;
        };
        const double s383 = swing(383e9), s280 = swing(280e9);
        const double ratio = s383 / s280;
        return {rh_increasing && t_increasing && ratio >= sensitivity_ratio_min,
                fmt("290->300 K: %.4f dB at 383 GHz, %.4f dB at 280 GHz, ratio %.1f", s383, s280, ratio) +
                    (rh_increasing ? "" : "; RH not monotone") + (t_increasing ? "" : "; T not monotone")};
    }

    Outcome dirichlet_and_phase()
    {
        bool limits = true;
        for (int n : {1, 2, 3, 4, 7, 20, 100})
            for (int k = -3; k <= 3; ++k)
            {
                const double v = dirichlet_ratio(n, k * pi);
                limits = limits && std::abs(std::abs(v) - n) <= dirichlet_tolerance * n;
            }

        const Scenario big = symmetric_link_scenario(300e9, 20);
        const double lambda = big.radio.wavelength_m();
        const PhaseProfile opt = optimal_phase_profile(big.geometry, big.link, big.target, lambda);
        const double gain = std::abs(array_factor_raw(big.geometry, big.link, opt, lambda));
        const double mn = big.geometry.element_count();
        const bool full_gain = std::abs(gain - mn) <= array_gain_rel_tolerance * mn;

        // Scan each element of a 4x4 surface over a 0.5 degree phase grid with the others held at the
        // optimal profile; every element must peak at its own optimal phase.
        Scenario small = symmetric_link_scenario(300e9, 4);
        small.link.ue_elevation_rad = 0.4;
        small.link.ue_azimuth_rad = 2.0;
        small.target = {0.4, 2.0};
        const double ls = small.radio.wavelength_m();
        const PhaseProfile base = optimal_phase_profile(small.geometry, small.link, small.target, ls);
        const int grid = 720;
        const double grid_step = two_pi / grid;
        bool argmax = true;
        const std::span<const double> v = base.values();
        for (std::size_t e = 0; e < v.size(); ++e)
        {
            std::vector<double> trial(v.begin(), v.end());
            double best = -1.0, best_phase = 0.0;
            for (int g = 0; g < grid; ++g)
            {
                trial[e] = g * grid_step;
                const double a = std::abs(array_factor_raw(small.geometry, small.link, PhaseProfile(4, 4, trial), ls));
                if (a > best)
                {
                    best = a;
                    best_phase = trial[e];
                }
            }
            double gap = std::abs(best_phase - v[e]);
            gap = std::min(gap, two_pi - gap);
            argmax = argmax && gap <= grid_step / 2 + 1e-12;
        }

        // Random profiles never beat the optimum
        std::mt19937_64 rng(7);
        std::uniform_real_distribution<double> phase(0.0, two_pi);
        const double optimum = std::abs(array_factor_raw(small.geometry, small.link, base, ls));
        bool bounded = true;
        for (int k = 0; k < 20000; ++k)
        {
            std::vector<double> r(16);
            for (double &x : r)
                x = phase(rng);
            bounded = bounded && std::abs(array_factor_raw(small.geometry, small.link, PhaseProfile(4, 4, r), ls)) <=
                                     optimum * (1 + 1e-12);
        }

        std::string detail = fmt("|AF| = %.12g of %.0f", gain, mn);
        if (!limits)
            detail += "; Dirichlet limit off";
        if (!argmax)
            detail += "; per-element scan disagrees with the optimal phase";
        if (!bounded)
            detail += "; random profile beat the optimum";
        return {limits && full_gain && argmax && bounded, detail};
    }

    Outcome determinism()
    {
        SweepSpec spec;
        spec.base = short_hop_scenario();
        spec.axes = {{"f_hz", 100e9, 500e9, 201, AxisScale::linear}, {"T_k", 270.0, 320.0, 11, AxisScale::linear}};
        spec.oracle_columns = false;
        spec.threads = 1;
        const std::string a = to_csv(run_sweep(spec));
        const std::string b = to_csv(run_sweep(spec));
        spec.threads = 4;
        const std::string c = to_csv(run_sweep(spec));
        const SweepTable t = run_sweep(spec);
        const bool same_hash = t.provenance.config_hash == run_sweep(spec).provenance.config_hash;
        return {a == b && a == c && same_hash,
                fmt("%.0f bytes, %.0f rows", static_cast<double>(a.size()), static_cast<double>(t.row_count()))};
    }
}

int main()
{
    run(1, "spreading-only pathloss", 1.0, spreading_only);
    run(2, "size scaling", 1.0, size_scaling);
    run(3, "frequency slope", 1.0, frequency_slope);
    run(4, "absorption peaks and windows", 5.0, absorption_peaks);
    run(5, "steering argmin and beamwidth", 10.0, steering_argmin);
    run(6, "Taylor field sum equivalence", 30.0, taylor_equivalence);
    run(7, "exact field sum equivalence", 30.0, exact_equivalence);
    run(8, "environmental sensitivity", 30.0, environmental_sensitivity);
    run(9, "Dirichlet and phase optimality", 10.0, dirichlet_and_phase);
    run(10, "sweep determinism", 10.0, determinism);
    std::printf("%d of 10 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}

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

#ifndef RISPL_ABSORPTION_HPP
#define RISPL_ABSORPTION_HPP

// Molecular absorption of the 100-500 GHz band: six water-vapour/oxygen lines with
// pressure-broadened Lorentzian shapes plus a continuum, driven by the water-vapour
// volume mixing ratio.

#include <array>
#include <span>

namespace rispl
{
    struct Environment
    {
        double temperature_k = 296.0;
        double pressure_pa = 101325.0;
        double relative_humidity_pct = 50.0;
    };

    // 296 K, 101325 Pa, 50 % relative humidity
    inline Environment standard_environment() { return {}; }

    // The single authoritative coefficient table.
    //   A_1(mu) = a1 (1-mu) (a2 (1-mu) + a3),   B_1(mu) = (b1 (1-mu) + b2)^2
    //   A_i(mu) = s1 mu (s2 mu + s3),            B_i(mu) = (w1 mu + w2)^2,   i = 2..6
    //   C(mu,f) = mu / r1 (r2 + r3 f^r4)         (f in Hz)
    //   p_sat   = p1 (p2 + p3 P) exp(p4 (T - p6) / (T + p5 - p6))   [hPa, P in Pa, T in K]
    struct AbsorptionCoefficients
    {
        std::array<double, 3> oxygen_strength;                   // a1, a2, a3
        std::array<double, 2> oxygen_width;                      // b1, b2
        std::array<std::array<double, 3>, 5> water_strength;     // (c), (f), (i), (k), (m) triples
        std::array<std::array<double, 2>, 5> water_width;        // (e), (g), (j), (l), (n) pairs
        std::array<double, 6> line_centers;                      // q1..q6, units of f / (100 c)
        std::array<double, 4> continuum;                         // r1..r4
        std::array<double, 6> buck;                              // p1..p6
    };

    const AbsorptionCoefficients &absorption_coefficients();

    // Per-term decomposition of kappa, used by tests and reports
    struct AbsorptionTerms
    {
        std::array<double, 6> lines{}; // A_i / (B_i + (f/(100c) - q_i)^2)
        double continuum = 0.0;
        double total() const;
    };

    // Saturated water-vapour partial pressure [hPa]. Accepts P = 0 (drops the enhancement term).
    double saturated_vapor_pressure(const Environment &env);

    // Volume mixing ratio mu = (RH/100) * p_sat[Pa] / P
    double mixing_ratio(const Environment &env);

    // kappa(f) [1/m]; f in Hz. Out-of-band frequencies are evaluated, see frequency_in_model_band().
    double absorption_coefficient(double frequency_hz, double mixing_ratio);
    double absorption_coefficient(double frequency_hz, const Environment &env);
    AbsorptionTerms absorption_terms(double frequency_hz, double mixing_ratio);

    // Batch evaluation over a frequency grid (vectorised line sum)
    void absorption_spectrum(std::span<const double> frequency_hz, double mixing_ratio, std::span<double> kappa_out);

    // 10 log10(e) * kappa * path_length
    double absorption_loss_db(double frequency_hz, const Environment &env, double path_length_m);

    bool frequency_in_model_band(double frequency_hz);   // [100, 500] GHz
    bool temperature_in_buck_range(double temperature_k); // [260, 340] K
}

#endif

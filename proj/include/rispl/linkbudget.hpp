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

#ifndef RISPL_LINKBUDGET_HPP
#define RISPL_LINKBUDGET_HPP

// Closed-form end-to-end pathloss of the AP -> RIS -> UE link:
//
//   L = (MN)^-2 64 pi^3 d1^2 d2^2 / (d_x d_y lambda^2 |R|^2 U(th_i,ph_i) U(th_r,ph_r) G_a G G_u)
//       * (MN / (gamma_1 gamma_2))^2 * exp(kappa(f) (d1 + d2))
//
// split into a spreading term, an absorption term and an array-misalignment term.
// All gains are linear; dB/dBi only appear in the breakdown and at the CLI.

#include "rispl/absorption.hpp"
#include "rispl/beam.hpp"
#include "rispl/geometry.hpp"

#include <cmath>
#include <string>
#include <variant>

namespace rispl
{
    // U(theta) = cos^q(theta) on the upper hemisphere, 0 below
    struct RadiationPattern
    {
        double exponent = 1.0;
    };

    struct RadioConfig
    {
        double frequency_hz = 300e9;
        double ap_gain = 1e5;               // G_a, linear (50 dBi)
        double ue_gain = 100.0;             // G_u, linear (20 dBi)
        double reflection_magnitude = 0.9;  // |R|
        RadiationPattern ru_pattern{};
        double tx_power_w = 1.0;            // P_AP

        double wavelength_m() const;
    };

    void validate(const RadioConfig &radio);

    enum class Absorption
    {
        included,
        excluded
    };

    struct PathlossBreakdown
    {
        double spreading_db = 0.0;
        double absorption_db = 0.0;
        double misalignment_db = 0.0; // 20 log10(MN / |gamma_1 gamma_2|)
        double total_db = 0.0;        // sum of the three terms
    };

    // Grazing geometry (U = 0 at incidence or departure) or an exact array-factor null
    struct SingularConfiguration
    {
        std::string reason;
    };

    using PathlossResult = std::variant<PathlossBreakdown, SingularConfiguration>;

    double pattern_value(const RadiationPattern &pattern, double theta_rad, double phi_rad);

    // 4 pi / integral of U over the sphere, by nested adaptive Gauss-Kronrod quadrature.
    // Throws NumericError if the quadrature does not converge or disagrees with 2 (q + 1).
    double ru_directivity(const RadiationPattern &pattern);

    PathlossResult pathloss(const RisGeometry &geom, const LinkGeometry &link, const RadioConfig &radio,
                            const Environment &env, const SteeringCoefficients &steering,
                            Absorption absorption = Absorption::included);

    // Same as pathloss() but throws SingularGeometryError on singular configurations
    PathlossBreakdown pathloss_or_throw(const RisGeometry &geom, const LinkGeometry &link, const RadioConfig &radio,
                                        const Environment &env, const SteeringCoefficients &steering,
                                        Absorption absorption = Absorption::included);

    // Minimum pathloss: UE placed on the steering target and the RIS steered to it.
    // Uses d2 of link for the RIS-UE distance.
    PathlossResult pathloss_boresight(const RisGeometry &geom, const LinkGeometry &link, const RadioConfig &radio,
                                      const Environment &env, const SteeringTarget &target,
                                      Absorption absorption = Absorption::included);

    // P_AP / 10^(total_db / 10)
    double received_power(double tx_power_w, const PathlossBreakdown &loss);

    inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
    inline double linear_to_db(double linear) { return 10.0 * std::log10(linear); }
}

#endif

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

#ifndef RISPL_ORACLE_HPP
#define RISPL_ORACLE_HPP

// Brute-force reference for the closed form: every RIS element is treated as an
// aperture that captures the AP wave and re-radiates it to the UE; the complex
// contributions are summed at the UE.
//
// Fields are carried normalised by sqrt(2 Z0), so |E|^2 times the UE aperture
// G_u lambda^2 / (4 pi) is directly the received power in watts.
//
//   DistanceMode::exact  per-element Euclidean distances, per-element pattern
//                        angles, per-element absorption path
//   DistanceMode::taylor first-order distances in the phase only; amplitude and
//                        absorption taken at the RIS centre (d1, d2, th_i, th_r)

#include "rispl/absorption.hpp"
#include "rispl/beam.hpp"
#include "rispl/geometry.hpp"
#include "rispl/linkbudget.hpp"

#include <complex>
#include <optional>

namespace rispl
{
    enum class DistanceMode
    {
        exact,
        taylor
    };

    const char *distance_mode_name(DistanceMode mode);

    struct FieldResult
    {
        std::complex<double> total_field{};
        double received_power_w = 0.0;
        double pathloss_db = 0.0; // 10 log10(P_AP / received_power); +inf when nothing arrives
        DistanceMode mode = DistanceMode::exact;
    };

    // Power captured by element (m, n): G_a U(th^t) d_x d_y P_AP / (4 pi l_t^2) exp(-kappa l_t)
    double incident_power(int m, int n, const RisGeometry &geom, const LinkGeometry &link, const RadioConfig &radio,
                          const Environment &env, DistanceMode mode = DistanceMode::exact,
                          Absorption absorption = Absorption::included);

    // |R|^2 P_incident
    double reflected_power(double incident_power_w, double reflection_magnitude);

    std::complex<double> element_field_at_ue(int m, int n, const RisGeometry &geom, const LinkGeometry &link,
                                             const RadioConfig &radio, const Environment &env, double phase_rad,
                                             DistanceMode mode, Absorption absorption = Absorption::included);

    FieldResult total_field(const RisGeometry &geom, const LinkGeometry &link, const RadioConfig &radio,
                            const Environment &env, const PhaseProfile &phases, DistanceMode mode,
                            Absorption absorption = Absorption::included);

    // Received power if every element contribution arrived in phase (triangle-inequality bound)
    double aligned_power_bound(const RisGeometry &geom, const LinkGeometry &link, const RadioConfig &radio,
                               const Environment &env, DistanceMode mode, Absorption absorption = Absorption::included);

    // Closed form against both field sums for one configuration
    struct ValidationReport
    {
        double closed_form_db = 0.0;
        double taylor_oracle_db = 0.0;
        double exact_oracle_db = 0.0;
        double taylor_delta_db = 0.0; // |closed - taylor|
        double exact_delta_db = 0.0;  // |closed - exact|
        double max_taylor_distance_error_m = 0.0;
        double fraunhofer_distance_m = 0.0;
        double tolerance_db = 0.1;
        bool nearfield = false;
        bool singular = false;
        bool taylor_pass = false;
        bool exact_pass = false;
        bool pass = false;
    };

    inline constexpr double taylor_consistency_tolerance_db = 1e-6;

    // phases defaults to the optimal profile for target
    ValidationReport validate_closed_form(const RisGeometry &geom, const LinkGeometry &link, const RadioConfig &radio,
                                          const Environment &env, const SteeringTarget &target,
                                          const std::optional<PhaseProfile> &phases, double exact_tolerance_db,
                                          Absorption absorption = Absorption::included);
}

#endif

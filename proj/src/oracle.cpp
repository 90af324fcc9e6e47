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

#include "rispl/oracle.hpp"

#include "rispl/constants.hpp"
#include "rispl/errors.hpp"
#include "rispl/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace rispl
{
    namespace
    {
        struct Context
        {
            double lambda;
            double wavenumber;
            double half_kappa;
            double ru_gain;
            Point3 ap;
            Point3 ue;
            double u_in_centre;
            double u_out_centre;
        };

        Context make_context(const RisGeometry &geom, const LinkGeometry &link, const RadioConfig &radio,
                             const Environment &env, Absorption absorption)
        {
            validate(geom);
            validate(link);
            validate(radio);
            Context ctx{};
            ctx.lambda = radio.wavelength_m();
            ctx.wavenumber = two_pi / ctx.lambda;
            ctx.half_kappa = absorption == Absorption::included
                                 ? 0.5 * absorption_coefficient(radio.frequency_hz, env)
                                 : 0.0;
            ctx.ru_gain = ru_directivity(radio.ru_pattern);
            ctx.ap = ap_position(link);
            ctx.ue = ue_position(link);
            ctx.u_in_centre = pattern_value(radio.ru_pattern, link.ap_elevation_rad, link.ap_azimuth_rad);
            ctx.u_out_centre = pattern_value(radio.ru_pattern, link.ue_elevation_rad, link.ue_azimuth_rad);
            return ctx;
        }

        // Pattern value seen from an element at (x, y, 0) towards point p at range r
        double pattern_towards(const RadiationPattern &pattern, const Point3 &p, double x, double y, double r)
        {
            const double elevation = std::acos(std::clamp(p.z / r, -1.0, 1.0));
            const double azimuth = std::atan2(p.y - y, p.x - x);
            return pattern_value(pattern, elevation, azimuth);
        }

        // sqrt(d_x d_y G G_a P_AP) |R| / (4 pi)
        double field_scale(const RisGeometry &geom, const RadioConfig &radio, double ru_gain)
        {
            return radio.reflection_magnitude *
                   std::sqrt(geom.pitch_x_m * geom.pitch_y_m * ru_gain * radio.ap_gain * radio.tx_power_w) /
                   (4.0 * pi);
        }

        double ue_aperture(const RadioConfig &radio, double lambda)
        {
            return radio.ue_gain * lambda * lambda / (4.0 * pi);
        }

        // Amplitude and phase of every element contribution, row-major
        void element_terms(const RisGeometry &geom, const LinkGeometry &link, const RadioConfig &radio,
                           const Context &ctx, std::span<const double> phases, DistanceMode mode,
                           std::vector<double> &amplitude, std::vector<double> &phase)
        {
            const auto lattice = lattice_coordinates(geom);
            const std::size_t count = lattice.xs.size();
            amplitude.assign(count, 0.0);
            phase.assign(count, 0.0);
            const double scale = field_scale(geom, radio, ctx.ru_gain);

            if (mode == DistanceMode::exact)
            {
                std::vector<double> to_ap(count), to_ue(count);
                kernels::ranges_from_point(lattice.xs, lattice.ys, {ctx.ap.x, ctx.ap.y, ctx.ap.z}, to_ap);
                kernels::ranges_from_point(lattice.xs, lattice.ys, {ctx.ue.x, ctx.ue.y, ctx.ue.z}, to_ue);
                for (std::size_t k = 0; k < count; ++k)
                {
                    const double x = lattice.xs[k], y = lattice.ys[k];
                    const double u_in = pattern_towards(radio.ru_pattern, ctx.ap, x, y, to_ap[k]);
                    const double u_out = pattern_towards(radio.ru_pattern, ctx.ue, x, y, to_ue[k]);
                    const double path = to_ap[k] + to_ue[k];
                    amplitude[k] = scale * std::sqrt(u_in * u_out) / (to_ap[k] * to_ue[k]) *
                                   std::exp(-ctx.half_kappa * path);
                    phase[k] = -ctx.wavenumber * path + phases[k];
                }
                return;
            }

            const double d1 = link.ap_distance_m, d2 = link.ue_distance_m;
            const double common = scale * std::sqrt(ctx.u_in_centre * ctx.u_out_centre) / (d1 * d2) *
                                  std::exp(-ctx.half_kappa * (d1 + d2));
            const double si = std::sin(link.ap_elevation_rad), sr = std::sin(link.ue_elevation_rad);
            const double ax = si * std::cos(link.ap_azimuth_rad), ay = si * std::sin(link.ap_azimuth_rad);
            const double rx = sr * std::cos(link.ue_azimuth_rad), ry = sr * std::sin(link.ue_azimuth_rad);
            for (std::size_t k = 0; k < count; ++k)
            {
                const double x = lattice.xs[k], y = lattice.ys[k];
                const double l_t = d1 - ax * x - ay * y;
                const double l_r = d2 - rx * x - ry * y;
                amplitude[k] = common;
                phase[k] = -ctx.wavenumber * (l_t + l_r) + phases[k];
            }
        }
    }

    const char *distance_mode_name(DistanceMode mode)
    {
        return mode == DistanceMode::exact ? "exact" : "taylor";
    }

    double incident_power(int m, int n, const RisGeometry &geom, const LinkGeometry &link, const RadioConfig &radio,
                          const Environment &env, DistanceMode mode, Absorption absorption)
    {
        const Context ctx = make_context(geom, link, radio, env, absorption);
        const Point3 element = element_position(m, n, geom);
        double l_t = 0.0;
        double u_in = 0.0;
        if (mode == DistanceMode::exact)
        {
            l_t = (ctx.ap - element).norm();
            u_in = pattern_towards(radio.ru_pattern, ctx.ap, element.x, element.y, l_t);
        }
        else
        {
            l_t = element_distances_taylor(m, n, geom, link).to_ap_m;
            u_in = ctx.u_in_centre;
        }
        return radio.ap_gain * u_in * geom.pitch_x_m * geom.pitch_y_m * radio.tx_power_w / (4.0 * pi * l_t * l_t) *
               std::exp(-2.0 * ctx.half_kappa * l_t);
    }

    double reflected_power(double incident_power_w, double reflection_magnitude)
    {
        if (!(incident_power_w >= 0.0))
            throw DomainError("incident power must be non-negative");
        if (!(reflection_magnitude >= 0.0 && reflection_magnitude <= 1.0))
            throw DomainError("reflection magnitude must lie in [0, 1]");
        return reflection_magnitude * reflection_magnitude * incident_power_w;
    }

    std::complex<double> element_field_at_ue(int m, int n, const RisGeometry &geom, const LinkGeometry &link,
                                             const RadioConfig &radio, const Environment &env, double phase_rad,
                                             DistanceMode mode, Absorption absorption)
    {
        const Context ctx = make_context(geom, link, radio, env, absorption);
        const Point3 element = element_position(m, n, geom);
        const double scale = field_scale(geom, radio, ctx.ru_gain);
        double amplitude = 0.0;
        double path = 0.0;
        if (mode == DistanceMode::exact)
        {
            const double l_t = (ctx.ap - element).norm();
            const double l_r = (ctx.ue - element).norm();
            const double u_in = pattern_towards(radio.ru_pattern, ctx.ap, element.x, element.y, l_t);
            const double u_out = pattern_towards(radio.ru_pattern, ctx.ue, element.x, element.y, l_r);
            path = l_t + l_r;
            amplitude = scale * std::sqrt(u_in * u_out) / (l_t * l_r) * std::exp(-ctx.half_kappa * path);
        }
        else
        {
            const auto d = element_distances_taylor(m, n, geom, link);
            const double d1 = link.ap_distance_m, d2 = link.ue_distance_m;
            path = d.to_ap_m + d.to_ue_m;
            amplitude = scale * std::sqrt(ctx.u_in_centre * ctx.u_out_centre) / (d1 * d2) *
                        std::exp(-ctx.half_kappa * (d1 + d2));
        }
        return std::polar(amplitude, -ctx.wavenumber * path + phase_rad);
    }

    FieldResult total_field(const RisGeometry &geom, const LinkGeometry &link, const RadioConfig &radio,
                            const Environment &env, const PhaseProfile &phases, DistanceMode mode,
                            Absorption absorption)
    {
        phases.check_matches(geom);
        const Context ctx = make_context(geom, link, radio, env, absorption);
        std::vector<double> amplitude, phase;
        element_terms(geom, link, radio, ctx, phases.values(), mode, amplitude, phase);

        FieldResult result;
        result.mode = mode;
        result.total_field = kernels::phasor_sum(amplitude, phase);
        result.received_power_w = std::norm(result.total_field) * ue_aperture(radio, ctx.lambda);
        result.pathloss_db = result.received_power_w > 0.0
                                 ? 10.0 * std::log10(radio.tx_power_w / result.received_power_w)
                                 : std::numeric_limits<double>::infinity();
        return result;
    }

    double aligned_power_bound(const RisGeometry &geom, const LinkGeometry &link, const RadioConfig &radio,
                               const Environment &env, DistanceMode mode, Absorption absorption)
    {
        const Context ctx = make_context(geom, link, radio, env, absorption);
        std::vector<double> amplitude, phase;
        const std::vector<double> zeros(static_cast<std::size_t>(geom.element_count()), 0.0);
        element_terms(geom, link, radio, ctx, zeros, mode, amplitude, phase);
        double sum = 0.0;
        for (double a : amplitude)
            sum += a;
        return sum * sum * ue_aperture(radio, ctx.lambda);
    }

    ValidationReport validate_closed_form(const RisGeometry &geom, const LinkGeometry &link, const RadioConfig &radio,
                                          const Environment &env, const SteeringTarget &target,
                                          const std::optional<PhaseProfile> &phases, double exact_tolerance_db,
                                          Absorption absorption)
    {
        if (!(exact_tolerance_db > 0.0))
            throw DomainError("validation tolerance must be positive");
        const double lambda = radio.wavelength_m();
        const PhaseProfile profile = phases ? *phases : optimal_phase_profile(geom, link, target, lambda);
        profile.check_matches(geom);

        ValidationReport report;
        report.tolerance_db = exact_tolerance_db;
        report.fraunhofer_distance_m = fraunhofer_distance(geom, lambda);
        report.nearfield = !is_far_field(geom, link, lambda);
        report.max_taylor_distance_error_m = max_taylor_distance_error(geom, link);

        const auto closed = pathloss(geom, link, radio, env, steering_coefficients(link, target), absorption);
        report.taylor_oracle_db = total_field(geom, link, radio, env, profile, DistanceMode::taylor, absorption).pathloss_db;
        report.exact_oracle_db = total_field(geom, link, radio, env, profile, DistanceMode::exact, absorption).pathloss_db;
        if (const auto *b = std::get_if<PathlossBreakdown>(&closed))
        {
            report.closed_form_db = b->total_db;
            report.taylor_delta_db = std::abs(report.closed_form_db - report.taylor_oracle_db);
            report.exact_delta_db = std::abs(report.closed_form_db - report.exact_oracle_db);
        }
        else
        {
            report.singular = true;
            report.closed_form_db = std::numeric_limits<double>::infinity();
            report.taylor_delta_db = std::numeric_limits<double>::infinity();
            report.exact_delta_db = std::numeric_limits<double>::infinity();
        }
        report.taylor_pass = report.taylor_delta_db < taylor_consistency_tolerance_db;
        report.exact_pass = report.exact_delta_db < exact_tolerance_db;
        report.pass = report.taylor_pass && report.exact_pass;
        return report;
    }
}

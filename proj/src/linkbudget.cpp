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

#include "rispl/linkbudget.hpp"

#include "rispl/constants.hpp"
#include "rispl/errors.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace rispl
{
    namespace
    {
        constexpr double quadrature_tolerance = 1e-12;

        void check_positive(double v, const char *what)
        {
            if (!std::isfinite(v) || v <= 0.0)
                throw DomainError(std::string(what) + " must be positive and finite");
        }

        double integrate_pattern(const RadiationPattern &pattern)
        {
            using boost::math::quadrature::gauss_kronrod;
            // Elevation by tanh-sinh: non-integer exponents leave a root-type edge at the horizon
            boost::math::quadrature::tanh_sinh<double> elevation;
            double inner_error_max = 0.0;
            auto over_theta = [&](double phi)
            {
                auto integrand = [&](double theta) { return pattern_value(pattern, theta, phi) * std::sin(theta); };
                double err_upper = 0.0, err_lower = 0.0;
                const double upper = elevation.integrate(integrand, 0.0, pi / 2, quadrature_tolerance, &err_upper);
                const double lower = elevation.integrate(integrand, pi / 2, pi, quadrature_tolerance, &err_lower);
                inner_error_max = std::max(inner_error_max, err_upper + err_lower);
                return upper + lower;
            };
            double outer_error = 0.0;
            const double total = gauss_kronrod<double, 15>::integrate(over_theta, 0.0, two_pi, 20,
                                                                      quadrature_tolerance, &outer_error);
            const double err = outer_error + two_pi * inner_error_max;
            if (!std::isfinite(total) || total <= 0.0 || err > 1e-9 * total)
                throw NumericError("RU directivity quadrature did not converge");
            return total;
        }
    }

    double RadioConfig::wavelength_m() const
    {
        return rispl::wavelength(frequency_hz);
    }

    void validate(const RadioConfig &radio)
    {
        check_positive(radio.frequency_hz, "frequency");
        check_positive(radio.ap_gain, "AP gain");
        check_positive(radio.ue_gain, "UE gain");
        check_positive(radio.tx_power_w, "transmit power");
        if (!std::isfinite(radio.reflection_magnitude) || radio.reflection_magnitude <= 0.0 ||
            radio.reflection_magnitude > 1.0)
            throw DomainError("reflection magnitude |R| must lie in (0, 1]");
        if (!std::isfinite(radio.ru_pattern.exponent) || radio.ru_pattern.exponent < 0.0)
            throw DomainError("RU pattern exponent must be >= 0");
    }

    double pattern_value(const RadiationPattern &pattern, double theta_rad, double /*phi_rad*/)
    {
        // cos(pi/2) rounds to 6e-17 in double; the horizon itself is a null
        if (theta_rad < 0.0 || theta_rad >= pi / 2 - 1e-12)
            return 0.0;
        const double c = std::cos(theta_rad);
        if (pattern.exponent == 0.0)
            return 1.0;
        return std::clamp(std::pow(std::max(c, 0.0), pattern.exponent), 0.0, 1.0);
    }

    double ru_directivity(const RadiationPattern &pattern)
    {
        if (!std::isfinite(pattern.exponent) || pattern.exponent < 0.0)
            throw DomainError("RU pattern exponent must be >= 0");

        // Memo of the last evaluation per thread; sweeps hit the same exponent repeatedly
        thread_local std::pair<double, double> last{std::numeric_limits<double>::quiet_NaN(), 0.0};
        if (last.first == pattern.exponent)
            return last.second;

        const double gain = 4.0 * pi / integrate_pattern(pattern);
        const double closed_form = 2.0 * (pattern.exponent + 1.0);
        if (std::abs(gain - closed_form) > 1e-9 * closed_form)
            throw NumericError("RU directivity quadrature disagrees with the closed form 2(q+1)");
        last = {pattern.exponent, gain};
        return gain;
    }

    PathlossResult pathloss(const RisGeometry &geom, const LinkGeometry &link, const RadioConfig &radio,
                            const Environment &env, const SteeringCoefficients &steering, Absorption absorption)
    {
        validate(geom);
        validate(link);
        validate(radio);

        const double u_in = pattern_value(radio.ru_pattern, link.ap_elevation_rad, link.ap_azimuth_rad);
        const double u_out = pattern_value(radio.ru_pattern, link.ue_elevation_rad, link.ue_azimuth_rad);
        if (u_in <= 0.0)
            return SingularConfiguration{"RU pattern vanishes at the incidence direction (grazing AP)"};
        if (u_out <= 0.0)
            return SingularConfiguration{"RU pattern vanishes at the departure direction (grazing UE)"};

        const double lambda = radio.wavelength_m();
        const ArrayFactor af = array_factor(geom, link, steering, lambda);
        const double gamma = std::abs(af.product());
        if (gamma == 0.0)
            return SingularConfiguration{"array factor null at the UE direction"};

        const double d1 = link.ap_distance_m;
        const double d2 = link.ue_distance_m;
        const double total_gain = radio.ap_gain * ru_directivity(radio.ru_pattern) * radio.ue_gain;
        const double r2 = radio.reflection_magnitude * radio.reflection_magnitude;
        const double per_element = 64.0 * pi * pi * pi * d1 * d1 * d2 * d2 /
                                   (geom.pitch_x_m * geom.pitch_y_m * lambda * lambda * r2 * u_in * u_out * total_gain);
        const double mn = static_cast<double>(geom.rows_m) * static_cast<double>(geom.cols_n);

        PathlossBreakdown out;
        out.spreading_db = 10.0 * std::log10(per_element) - 20.0 * std::log10(mn);
        out.absorption_db = absorption == Absorption::included
                                ? db_per_neper_power * absorption_coefficient(radio.frequency_hz, env) * (d1 + d2)
                                : 0.0;
        out.misalignment_db = std::max(0.0, 20.0 * std::log10(mn / gamma));
        out.total_db = out.spreading_db + out.absorption_db + out.misalignment_db;
        return out;
    }

    PathlossBreakdown pathloss_or_throw(const RisGeometry &geom, const LinkGeometry &link, const RadioConfig &radio,
                                        const Environment &env, const SteeringCoefficients &steering,
                                        Absorption absorption)
    {
        auto result = pathloss(geom, link, radio, env, steering, absorption);
        if (const auto *singular = std::get_if<SingularConfiguration>(&result))
            throw SingularGeometryError(singular->reason);
        return std::get<PathlossBreakdown>(result);
    }

    PathlossResult pathloss_boresight(const RisGeometry &geom, const LinkGeometry &link, const RadioConfig &radio,
                                      const Environment &env, const SteeringTarget &target, Absorption absorption)
    {
        LinkGeometry steered = link;
        steered.ue_elevation_rad = target.elevation_rad;
        steered.ue_azimuth_rad = target.azimuth_rad;
        return pathloss(geom, steered, radio, env, steering_coefficients(steered, target), absorption);
    }

    double received_power(double tx_power_w, const PathlossBreakdown &loss)
    {
        check_positive(tx_power_w, "transmit power");
        return tx_power_w / std::pow(10.0, loss.total_db / 10.0);
    }
}

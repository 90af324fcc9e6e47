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

#include "rispl/beam.hpp"

#include "rispl/constants.hpp"
#include "rispl/errors.hpp"
#include "rispl/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace rispl
{
    namespace
    {
        void check_wavelength(double wavelength_m)
        {
            if (!std::isfinite(wavelength_m) || wavelength_m <= 0.0)
                throw DomainError("wavelength must be positive and finite");
        }

        // Below this |sin(e)| the ratio switches to its second-order expansion about e = 0
        constexpr double dirichlet_switch = 1e-9;
    }

    PhaseProfile::PhaseProfile(int rows_m, int cols_n, std::vector<double> values)
        : rows_(rows_m), cols_(cols_n), values_(std::move(values))
    {
        if (rows_m <= 0 || cols_n <= 0)
            throw ShapeError("phase profile dimensions must be positive");
        if (values_.size() != static_cast<std::size_t>(rows_m) * static_cast<std::size_t>(cols_n))
            throw ShapeError("phase profile holds " + std::to_string(values_.size()) + " values, expected " +
                             std::to_string(rows_m) + "x" + std::to_string(cols_n));
        for (double v : values_)
            if (!std::isfinite(v))
                throw ShapeError("phase profile contains a non-finite entry");
    }

    PhaseProfile::PhaseProfile(int rows_m, int cols_n, double fill)
        : PhaseProfile(rows_m, cols_n,
                       std::vector<double>(static_cast<std::size_t>(std::max(rows_m, 0)) *
                                               static_cast<std::size_t>(std::max(cols_n, 0)),
                                           fill))
    {
    }

    double PhaseProfile::at(int m, int n) const
    {
        const RisGeometry shape{rows_, cols_, 1.0, 1.0};
        return values_[flat_index(m, n, shape)];
    }

    void PhaseProfile::check_matches(const RisGeometry &geom) const
    {
        if (rows_ != geom.rows_m || cols_ != geom.cols_n)
            throw ShapeError("phase profile is " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                             " but the RIS is " + std::to_string(geom.rows_m) + "x" + std::to_string(geom.cols_n));
    }

    SteeringCoefficients steering_coefficients(const LinkGeometry &link, const SteeringTarget &target)
    {
        const double si = std::sin(link.ap_elevation_rad);
        const double so = std::sin(target.elevation_rad);
        return {
            -(si * std::cos(link.ap_azimuth_rad) + so * std::cos(target.azimuth_rad)),
            -(si * std::sin(link.ap_azimuth_rad) + so * std::sin(target.azimuth_rad)),
        };
    }

    SteeringTarget specular_target(const LinkGeometry &link)
    {
        return {link.ap_elevation_rad, wrap_phase(link.ap_azimuth_rad + pi)};
    }

    double wrap_phase(double phase_rad)
    {
        if (!std::isfinite(phase_rad))
            throw DomainError("phase must be finite");
        double r = std::fmod(phase_rad, two_pi);
        if (r < 0.0)
            r += two_pi;
        if (r >= two_pi)
            r = 0.0;
        return r;
    }

    double linear_phase(int m, int n, const RisGeometry &geom, const SteeringCoefficients &steering, double wavelength_m)
    {
        check_wavelength(wavelength_m);
        const Point3 p = element_position(m, n, geom);
        return two_pi / wavelength_m * (steering.zeta_x * p.x + steering.zeta_y * p.y);
    }

    double optimal_phase(int m, int n, const RisGeometry &geom, const LinkGeometry &link,
                         const SteeringTarget &target, double wavelength_m)
    {
        return wrap_phase(linear_phase(m, n, geom, steering_coefficients(link, target), wavelength_m));
    }

    PhaseProfile linear_phase_profile(const RisGeometry &geom, const SteeringCoefficients &steering, double wavelength_m)
    {
        validate(geom);
        check_wavelength(wavelength_m);
        std::vector<double> values;
        values.reserve(static_cast<std::size_t>(geom.element_count()));
        for (int m = first_index(geom.rows_m); m <= last_index(geom.rows_m); ++m)
            for (int n = first_index(geom.cols_n); n <= last_index(geom.cols_n); ++n)
                values.push_back(wrap_phase(linear_phase(m, n, geom, steering, wavelength_m)));
        return {geom.rows_m, geom.cols_n, std::move(values)};
    }

    PhaseProfile optimal_phase_profile(const RisGeometry &geom, const LinkGeometry &link,
                                       const SteeringTarget &target, double wavelength_m)
    {
        return linear_phase_profile(geom, steering_coefficients(link, target), wavelength_m);
    }

    double dirichlet_ratio(int count, double x)
    {
        if (count < 1)
            throw DomainError("dirichlet_ratio: count must be >= 1");
        if (count == 1)
            return 1.0;
        if (!std::isfinite(x))
            throw DomainError("dirichlet_ratio: argument must be finite");

        // x = k pi + e, |e| <= pi/2; sin(Nx)/sin(x) = (-1)^{k(N-1)} sin(N e)/sin(e)
        const double k = std::nearbyint(x / pi);
        const double e = x - k * pi;
        const bool k_odd = std::fmod(std::abs(k), 2.0) == 1.0;
        const double sign = (k_odd && (count - 1) % 2 != 0) ? -1.0 : 1.0;
        const double n = static_cast<double>(count);

        const double s = std::sin(e);
        if (std::abs(s) < dirichlet_switch)
            return sign * n * (1.0 - (n * n - 1.0) * e * e / 6.0);
        return sign * std::sin(n * e) / s;
    }

    ArrayFactorArguments array_factor_arguments(const RisGeometry &geom, const LinkGeometry &link,
                                                const SteeringCoefficients &steering, double wavelength_m)
    {
        check_wavelength(wavelength_m);
        const double si = std::sin(link.ap_elevation_rad);
        const double sr = std::sin(link.ue_elevation_rad);
        const double ux = si * std::cos(link.ap_azimuth_rad) + sr * std::cos(link.ue_azimuth_rad) + steering.zeta_x;
        const double uy = si * std::sin(link.ap_azimuth_rad) + sr * std::sin(link.ue_azimuth_rad) + steering.zeta_y;
        return {pi / wavelength_m * ux * geom.pitch_x_m, pi / wavelength_m * uy * geom.pitch_y_m};
    }

    ArrayFactor array_factor(const RisGeometry &geom, const LinkGeometry &link,
                             const SteeringCoefficients &steering, double wavelength_m)
    {
        validate(geom);
        const auto args = array_factor_arguments(geom, link, steering, wavelength_m);
        return {dirichlet_ratio(geom.cols_n, args.x), dirichlet_ratio(geom.rows_m, args.y)};
    }

    std::complex<double> array_factor_raw(const RisGeometry &geom, const LinkGeometry &link,
                                          const PhaseProfile &phases, double wavelength_m)
    {
        validate(geom);
        validate(link);
        check_wavelength(wavelength_m);
        phases.check_matches(geom);

        const double k = two_pi / wavelength_m;
        const double si = std::sin(link.ap_elevation_rad);
        const double sr = std::sin(link.ue_elevation_rad);
        const double gx = si * std::cos(link.ap_azimuth_rad) + sr * std::cos(link.ue_azimuth_rad);
        const double gy = si * std::sin(link.ap_azimuth_rad) + sr * std::sin(link.ue_azimuth_rad);

        // d1 + d2 - beta_{m,n} = gx (n - 1/2) d_x + gy (m - 1/2) d_y
        const auto lattice = lattice_coordinates(geom);
        const auto values = phases.values();
        std::vector<double> phase(values.size());
        for (std::size_t i = 0; i < phase.size(); ++i)
            phase[i] = k * (gx * lattice.xs[i] + gy * lattice.ys[i]) + values[i];
        const std::vector<double> unit(phase.size(), 1.0);
        return kernels::phasor_sum(unit, phase);
    }
}

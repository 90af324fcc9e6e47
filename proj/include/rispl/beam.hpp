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

#ifndef RISPL_BEAM_HPP
#define RISPL_BEAM_HPP

#include "rispl/geometry.hpp"

#include <complex>
#include <span>
#include <vector>

namespace rispl
{
    // Linear phase gradient: zeta_x (n - 1/2) d_x + zeta_y (m - 1/2) d_y = lambda phi_{m,n} / (2 pi)
    struct SteeringCoefficients
    {
        double zeta_x = 0.0; // zeta_1
        double zeta_y = 0.0; // zeta_2
    };

    struct SteeringTarget
    {
        double elevation_rad = 0.0; // theta_o
        double azimuth_rad = 0.0;   // phi_o
    };

    // M x N matrix of phases in radians, row-major with row = m - (1 - M/2), column = n - (1 - N/2)
    class PhaseProfile
    {
    public:
        PhaseProfile() = default;
        PhaseProfile(int rows_m, int cols_n, std::vector<double> values);
        PhaseProfile(int rows_m, int cols_n, double fill);

        int rows() const { return rows_; }
        int cols() const { return cols_; }
        std::span<const double> values() const { return values_; }

        double at(int m, int n) const;
        double at_row_col(int row, int col) const { return values_[static_cast<std::size_t>(row * cols_ + col)]; }

        // ShapeError unless rows/cols equal M/N
        void check_matches(const RisGeometry &geom) const;

    private:
        int rows_ = 0;
        int cols_ = 0;
        std::vector<double> values_;
    };

    SteeringCoefficients steering_coefficients(const LinkGeometry &link, const SteeringTarget &target);

    // Target that points the beam back along the specular reflection of the AP direction
    SteeringTarget specular_target(const LinkGeometry &link);

    // Reduce into [0, 2 pi)
    double wrap_phase(double phase_rad);

    // 2 pi / lambda (zeta_x (n - 1/2) d_x + zeta_y (m - 1/2) d_y), not reduced
    double linear_phase(int m, int n, const RisGeometry &geom, const SteeringCoefficients &steering, double wavelength_m);

    // Phase of element (m, n) that steers the reflected beam to target, reduced into [0, 2 pi)
    double optimal_phase(int m, int n, const RisGeometry &geom, const LinkGeometry &link,
                         const SteeringTarget &target, double wavelength_m);

    PhaseProfile linear_phase_profile(const RisGeometry &geom, const SteeringCoefficients &steering, double wavelength_m);
    PhaseProfile optimal_phase_profile(const RisGeometry &geom, const LinkGeometry &link,
                                       const SteeringTarget &target, double wavelength_m);

    // sin(count x) / sin(x), the magnitude-with-sign of a count-element uniform phasor sum
    // with phase step 2x. At x = k pi the analytic limit count (-1)^{k (count - 1)} is used.
    double dirichlet_ratio(int count, double x);

    struct ArrayFactor
    {
        double gamma_x = 0.0; // gamma_1, along the N columns
        double gamma_y = 0.0; // gamma_2, along the M rows
        double product() const { return gamma_x * gamma_y; }
    };

    // Arguments of the two Dirichlet ratios: (pi / lambda)(sin th_i cos ph_i + sin th_r cos ph_r + zeta_x) d_x, ...
    struct ArrayFactorArguments
    {
        double x = 0.0;
        double y = 0.0;
    };
    ArrayFactorArguments array_factor_arguments(const RisGeometry &geom, const LinkGeometry &link,
                                                const SteeringCoefficients &steering, double wavelength_m);

    ArrayFactor array_factor(const RisGeometry &geom, const LinkGeometry &link,
                             const SteeringCoefficients &steering, double wavelength_m);

    // Direct sum over elements of exp(j (2 pi / lambda)(d1 + d2 - beta_{m,n}) + j phi_{m,n}),
    // beta the first-order AP->element->UE path length.
    std::complex<double> array_factor_raw(const RisGeometry &geom, const LinkGeometry &link,
                                          const PhaseProfile &phases, double wavelength_m);
}

#endif

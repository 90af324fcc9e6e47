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

#include "rispl/geometry.hpp"

#include "rispl/constants.hpp"
#include "rispl/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace rispl
{
    namespace
    {
        void check_count(int count, const char *name)
        {
            if (count < 2 || count % 2 != 0)
                throw DomainError(std::string(name) + " must be an even integer >= 2 (got " + std::to_string(count) + ")");
        }

        void check_positive(double v, const char *name)
        {
            if (!std::isfinite(v) || v <= 0.0)
                throw DomainError(std::string(name) + " must be positive and finite");
        }

        void check_elevation(double v, const char *name)
        {
            if (!std::isfinite(v) || v < 0.0 || v > pi)
                throw DomainError(std::string(name) + " must lie in [0, pi]");
        }

        void check_finite(double v, const char *name)
        {
            if (!std::isfinite(v))
                throw DomainError(std::string(name) + " must be finite");
        }

        double offset(int index) { return static_cast<double>(index) - 0.5; }
    }

    double Point3::norm() const
    {
        return std::sqrt(x * x + y * y + z * z);
    }

    void validate(const RisGeometry &geom)
    {
        check_count(geom.rows_m, "RIS row count M");
        check_count(geom.cols_n, "RIS column count N");
        check_positive(geom.pitch_x_m, "pitch d_x");
        check_positive(geom.pitch_y_m, "pitch d_y");
    }

    void validate(const LinkGeometry &link)
    {
        check_positive(link.ap_distance_m, "AP distance d1");
        check_positive(link.ue_distance_m, "UE distance d2");
        check_elevation(link.ap_elevation_rad, "AP elevation theta_i");
        check_elevation(link.ue_elevation_rad, "UE elevation theta_r");
        check_finite(link.ap_azimuth_rad, "AP azimuth phi_i");
        check_finite(link.ue_azimuth_rad, "UE azimuth phi_r");
    }

    std::size_t flat_index(int m, int n, const RisGeometry &geom)
    {
        if (m < first_index(geom.rows_m) || m > last_index(geom.rows_m) ||
            n < first_index(geom.cols_n) || n > last_index(geom.cols_n))
            throw IndexError("element index (m=" + std::to_string(m) + ", n=" + std::to_string(n) +
                             ") outside the " + std::to_string(geom.rows_m) + "x" + std::to_string(geom.cols_n) +
                             " lattice");
        const auto row = static_cast<std::size_t>(m - first_index(geom.rows_m));
        const auto col = static_cast<std::size_t>(n - first_index(geom.cols_n));
        return row * static_cast<std::size_t>(geom.cols_n) + col;
    }

    Point3 element_position(int m, int n, const RisGeometry &geom)
    {
        flat_index(m, n, geom);
        return {offset(n) * geom.pitch_x_m, offset(m) * geom.pitch_y_m, 0.0};
    }

    Point3 spherical_to_cartesian(double radius, double elevation, double azimuth)
    {
        const double s = std::sin(elevation);
        return {radius * s * std::cos(azimuth), radius * s * std::sin(azimuth), radius * std::cos(elevation)};
    }

    Point3 ap_position(const LinkGeometry &link)
    {
        validate(link);
        return spherical_to_cartesian(link.ap_distance_m, link.ap_elevation_rad, link.ap_azimuth_rad);
    }

    Point3 ue_position(const LinkGeometry &link)
    {
        validate(link);
        return spherical_to_cartesian(link.ue_distance_m, link.ue_elevation_rad, link.ue_azimuth_rad);
    }

    ElementDistances element_distances_exact(int m, int n, const RisGeometry &geom, const LinkGeometry &link)
    {
        const Point3 element = element_position(m, n, geom);
        return {(ap_position(link) - element).norm(), (ue_position(link) - element).norm()};
    }

    ElementDistances element_distances_taylor(int m, int n, const RisGeometry &geom, const LinkGeometry &link)
    {
        flat_index(m, n, geom);
        validate(link);
        const double ox = offset(n) * geom.pitch_x_m;
        const double oy = offset(m) * geom.pitch_y_m;
        const double si = std::sin(link.ap_elevation_rad);
        const double sr = std::sin(link.ue_elevation_rad);
        return {
            link.ap_distance_m - si * std::cos(link.ap_azimuth_rad) * ox - si * std::sin(link.ap_azimuth_rad) * oy,
            link.ue_distance_m - sr * std::cos(link.ue_azimuth_rad) * ox - sr * std::sin(link.ue_azimuth_rad) * oy,
        };
    }

    double fraunhofer_distance(const RisGeometry &geom, double wavelength_m)
    {
        check_positive(wavelength_m, "wavelength");
        const double ax = geom.aperture_x_m();
        const double ay = geom.aperture_y_m();
        return 2.0 * (ax * ax + ay * ay) / wavelength_m;
    }

    bool is_far_field(const RisGeometry &geom, const LinkGeometry &link, double wavelength_m)
    {
        return std::min(link.ap_distance_m, link.ue_distance_m) >= fraunhofer_distance(geom, wavelength_m);
    }

    bool taylor_regime_holds(const RisGeometry &geom, const LinkGeometry &link)
    {
        const double aperture = std::max(geom.aperture_x_m(), geom.aperture_y_m());
        return std::min(link.ap_distance_m, link.ue_distance_m) >= 10.0 * aperture;
    }

    double max_taylor_distance_error(const RisGeometry &geom, const LinkGeometry &link)
    {
        validate(geom);
        double worst = 0.0;
        for (int m = first_index(geom.rows_m); m <= last_index(geom.rows_m); ++m)
            for (int n = first_index(geom.cols_n); n <= last_index(geom.cols_n); ++n)
            {
                const auto exact = element_distances_exact(m, n, geom, link);
                const auto approx = element_distances_taylor(m, n, geom, link);
                worst = std::max({worst, std::abs(exact.to_ap_m - approx.to_ap_m),
                                  std::abs(exact.to_ue_m - approx.to_ue_m)});
            }
        return worst;
    }

    LatticeCoordinates lattice_coordinates(const RisGeometry &geom)
    {
        validate(geom);
        LatticeCoordinates lattice;
        const auto count = static_cast<std::size_t>(geom.element_count());
        lattice.xs.reserve(count);
        lattice.ys.reserve(count);
        for (int m = first_index(geom.rows_m); m <= last_index(geom.rows_m); ++m)
            for (int n = first_index(geom.cols_n); n <= last_index(geom.cols_n); ++n)
            {
                lattice.xs.push_back(offset(n) * geom.pitch_x_m);
                lattice.ys.push_back(offset(m) * geom.pitch_y_m);
            }
        return lattice;
    }
}

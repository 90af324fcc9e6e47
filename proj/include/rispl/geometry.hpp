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

#ifndef RISPL_GEOMETRY_HPP
#define RISPL_GEOMETRY_HPP

// RIS lattice in the z = 0 plane, centred at the origin. Element (m, n) sits at
// ((n - 1/2) d_x, (m - 1/2) d_y, 0) with n in [1 - N/2, N/2], m in [1 - M/2, M/2].
// Elevations are measured from the surface normal (+z), azimuths from +x.

#include <cstddef>
#include <vector>

namespace rispl
{
    struct Point3
    {
        double x = 0.0;
        double y = 0.0;
        double z = 0.0;

        double norm() const;
        friend Point3 operator+(const Point3 &a, const Point3 &b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
        friend Point3 operator-(const Point3 &a, const Point3 &b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
        friend bool operator==(const Point3 &, const Point3 &) = default;
    };

    struct RisGeometry
    {
        int rows_m = 2;         // M, along y
        int cols_n = 2;         // N, along x
        double pitch_x_m = 0.0; // d_x
        double pitch_y_m = 0.0; // d_y

        int element_count() const { return rows_m * cols_n; }
        double aperture_x_m() const { return cols_n * pitch_x_m; }
        double aperture_y_m() const { return rows_m * pitch_y_m; }
    };

    struct LinkGeometry
    {
        double ap_distance_m = 1.0;      // d1
        double ue_distance_m = 1.0;      // d2
        double ap_elevation_rad = 0.0;   // theta_i
        double ap_azimuth_rad = 0.0;     // phi_i
        double ue_elevation_rad = 0.0;   // theta_r
        double ue_azimuth_rad = 0.0;     // phi_r
    };

    struct ElementDistances
    {
        double to_ap_m = 0.0; // l^t_{m,n}
        double to_ue_m = 0.0; // l_{m,n}
    };

    // Throw DomainError on odd/non-positive counts, non-positive pitch, bad distances or angles.
    // Elevations are accepted on [0, pi]; values >= pi/2 are legal here and surface later as
    // singular (zero RU pattern) configurations.
    void validate(const RisGeometry &geom);
    void validate(const LinkGeometry &link);

    inline int first_index(int count) { return 1 - count / 2; }
    inline int last_index(int count) { return count / 2; }

    // Row-major position of (m, n): row = m - (1 - M/2), column = n - (1 - N/2).
    // Throws IndexError for out-of-range indices.
    std::size_t flat_index(int m, int n, const RisGeometry &geom);

    Point3 element_position(int m, int n, const RisGeometry &geom);

    // Spherical (r, elevation from +z, azimuth from +x) to Cartesian
    Point3 spherical_to_cartesian(double radius, double elevation, double azimuth);

    Point3 ap_position(const LinkGeometry &link);
    Point3 ue_position(const LinkGeometry &link);

    ElementDistances element_distances_exact(int m, int n, const RisGeometry &geom, const LinkGeometry &link);

    // First-order expansion: l^t ~ d1 - sin(th_i)cos(ph_i)(n-1/2)d_x - sin(th_i)sin(ph_i)(m-1/2)d_y,
    // and the same for the UE leg with (d2, th_r, ph_r).
    ElementDistances element_distances_taylor(int m, int n, const RisGeometry &geom, const LinkGeometry &link);

    // 2 D^2 / lambda with D the RIS diagonal
    double fraunhofer_distance(const RisGeometry &geom, double wavelength_m);

    bool is_far_field(const RisGeometry &geom, const LinkGeometry &link, double wavelength_m);

    // d1 and d2 both exceed ten RIS apertures (regime of the first-order distance expansion)
    bool taylor_regime_holds(const RisGeometry &geom, const LinkGeometry &link);

    // Largest |exact - taylor| over all elements and both legs
    double max_taylor_distance_error(const RisGeometry &geom, const LinkGeometry &link);

    // Element centre coordinates in row-major order (M rows of N)
    struct LatticeCoordinates
    {
        std::vector<double> xs;
        std::vector<double> ys;
    };
    LatticeCoordinates lattice_coordinates(const RisGeometry &geom);
}

#endif

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

#ifndef RISPL_CONSTANTS_HPP
#define RISPL_CONSTANTS_HPP

#include <numbers>

namespace rispl
{
    inline constexpr double speed_of_light = 299792458.0; // m/s
    inline constexpr double pi = std::numbers::pi;
    inline constexpr double two_pi = 2.0 * std::numbers::pi;

    // 10*log10(e), converts a natural-log attenuation exponent to dB
    inline constexpr double db_per_neper_power = 4.342944819032518;

    inline constexpr const char *model_version = "rispl-1.0.0";

    inline double wavelength(double frequency_hz) { return speed_of_light / frequency_hz; }
    inline double deg_to_rad(double deg) { return deg * (pi / 180.0); }
    inline double rad_to_deg(double rad) { return rad * (180.0 / pi); }
}

#endif

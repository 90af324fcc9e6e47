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

#include <catch2/catch_amalgamated.hpp>

#include "rispl/constants.hpp"
#include "rispl/errors.hpp"
#include "rispl/oracle.hpp"

#include "scenarios.hpp"

#include <cmath>
#include <cstring>
#include <random>

using namespace rispl;
using namespace rispl::test;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace
{
    FieldResult field(const Scenario &s, DistanceMode mode)
    {
        const PhaseProfile p = optimal_phase_profile(s.geometry, s.link, s.target, s.radio.wavelength_m());
        return total_field(s.geometry, s.link, s.radio, s.environment, p, mode, s.absorption);
    }

    double closed_form_db(const Scenario &s) { return evaluate_or_throw(s).total_db; }

    Scenario random_far_field(std::mt19937_64 &rng)
    {
        std::uniform_real_distribution<double> elev(0.0, 1.3), azim(0.0, two_pi), freq(100e9, 500e9), dist(5.0, 50.0);
        std::uniform_int_distribution<int> half(1, 32);
        Scenario s;
        s.geometry = {2 * half(rng), 2 * half(rng), 0.3e-3, 0.3e-3};
        s.link = {dist(rng), dist(rng), elev(rng), azim(rng), elev(rng), azim(rng)};
        s.radio.frequency_hz = freq(rng);
        s.target = {s.link.ue_elevation_rad, s.link.ue_azimuth_rad};
        return s;
    }
}

// ================================================================================================
// Per-element powers and fields
// ================================================================================================

TEST_CASE("Oracle - incident power on axis without absorption")
{
    Scenario s = symmetric_link_scenario();
    s.link.ap_elevation_rad = 0.0;
    const double expected = s.radio.tx_power_w * s.radio.ap_gain * 0.3e-3 * 0.3e-3 / (4.0 * pi * 100.0);
    for (int m : {0, 1, 5})
        CHECK_THAT(incident_power(m, 1, s.geometry, s.link, s.radio, s.environment, DistanceMode::taylor,
                                  Absorption::excluded),
                   WithinRel(expected, 1e-14));
}

TEST_CASE("Oracle - incident power follows the inverse square law")
{
    Scenario s = symmetric_link_scenario();
    s.link.ap_elevation_rad = 0.0;
    auto power = [&](double d1)
    {
        s.link.ap_distance_m = d1;
        return incident_power(1, 1, s.geometry, s.link, s.radio, s.environment, DistanceMode::taylor,
                              Absorption::excluded);
    };
    const double a = power(10.0);
    CHECK(a > 0.0);
    CHECK_THAT(power(20.0), WithinRel(a / 4.0, 1e-14));
}

TEST_CASE("Oracle - incident power of a 100x100 element")
{
    // Exact distance, element-local pattern angle; tests/oracle/reference_values.py
    const Scenario s = short_hop_scenario();
    CHECK_THAT(incident_power(1, 1, s.geometry, s.link, s.radio, s.environment),
               WithinRel(0.000463493008876084, 1e-10));
}

TEST_CASE("Oracle - reflected power")
{
    CHECK(reflected_power(2.0, 1.0) == 2.0);
    CHECK_THAT(reflected_power(2.0, 0.9), WithinRel(1.62, 1e-15));
    CHECK(reflected_power(2.0, 0.0) == 0.0);
    CHECK_THROWS_AS(reflected_power(-1.0, 0.5), DomainError);
    CHECK_THROWS_AS(reflected_power(1.0, 1.5), DomainError);
}

TEST_CASE("Oracle - element field phase")
{
    // Propagation phases reach 1e4 rad, so agreement is limited to ~1e-11 relative
    // On-axis hops of whole wavelengths: the propagation phase is a multiple of 2 pi
    Scenario s = symmetric_link_scenario();
    s.radio.frequency_hz = speed_of_light / 1e-3; // lambda = 1 mm
    s.link = {1.0, 2.0, 0.0, 0.0, 0.0, 0.0};
    const auto e = element_field_at_ue(1, 1, s.geometry, s.link, s.radio, s.environment, 0.0, DistanceMode::taylor,
                                       Absorption::excluded);
    CHECK(std::abs(std::arg(e)) < 1e-9);

    const Scenario f = short_hop_scenario();
    for (DistanceMode mode : {DistanceMode::exact, DistanceMode::taylor})
    {
        const auto a = element_field_at_ue(3, -2, f.geometry, f.link, f.radio, f.environment, 0.4, mode);
        const auto b = element_field_at_ue(3, -2, f.geometry, f.link, f.radio, f.environment, 0.4 + pi, mode);
        CHECK_THAT(b.real(), WithinAbs(-a.real(), 1e-10 * std::abs(a)));
        CHECK_THAT(b.imag(), WithinAbs(-a.imag(), 1e-10 * std::abs(a)));
    }
}

TEST_CASE("Oracle - 2x2 field sum against a hand evaluation")
{
    Scenario s = symmetric_link_scenario(300e9, 2);
    s.link = {0.8, 1.3, 0.5, 2.0, 0.9, 4.0};
    const double lambda = s.radio.wavelength_m();
    const double kappa = absorption_coefficient(s.radio.frequency_hz, s.environment);
    const PhaseProfile phases(2, 2, std::vector<double>{0.1, 2.2, 3.3, 5.5});

    const double ax = 0.8 * std::sin(0.5) * std::cos(2.0), ay = 0.8 * std::sin(0.5) * std::sin(2.0);
    const double az = 0.8 * std::cos(0.5);
    const double ux = 1.3 * std::sin(0.9) * std::cos(4.0), uy = 1.3 * std::sin(0.9) * std::sin(4.0);
    const double uz = 1.3 * std::cos(0.9);
    const double scale = 0.9 * std::sqrt(0.3e-3 * 0.3e-3 * 4.0 * 1e5 * 1.0) / (4.0 * pi);
    std::complex<double> hand = 0.0;
    const double pos[2] = {-0.15e-3, 0.15e-3};
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
        {
            const double x = pos[c], y = pos[r];
            const double lt = std::hypot(ax - x, ay - y, az);
            const double lr = std::hypot(ux - x, uy - y, uz);
            const double amp = scale * std::sqrt((az / lt) * (uz / lr)) / (lt * lr) * std::exp(-0.5 * kappa * (lt + lr));
            hand += std::polar(amp, -two_pi / lambda * (lt + lr) + phases.at_row_col(r, c));
        }
    const auto result = total_field(s.geometry, s.link, s.radio, s.environment, phases, DistanceMode::exact);
    CHECK_THAT(result.total_field.real(), WithinAbs(hand.real(), 1e-10 * std::abs(hand)));
    CHECK_THAT(result.total_field.imag(), WithinAbs(hand.imag(), 1e-10 * std::abs(hand)));
    CHECK_THAT(result.received_power_w, WithinRel(std::norm(hand) * 100.0 * lambda * lambda / (4.0 * pi), 1e-10));
}

// ================================================================================================
// Field sum against the closed form
// ================================================================================================

TEST_CASE("Oracle - Taylor-mode sum reproduces the closed form")
{
    const Scenario s = symmetric_link_scenario(300e9);
    const FieldResult r = field(s, DistanceMode::taylor);
    CHECK(r.mode == DistanceMode::taylor);
    CHECK_THAT(r.pathloss_db, WithinAbs(closed_form_db(s), 1e-6));
}

TEST_CASE("Oracle - exact-mode sum in the far field")
{
    const Scenario s = symmetric_link_scenario(300e9);
    const FieldResult r = field(s, DistanceMode::exact);
    // tests/oracle/reference_values.py (numpy element sum)
    CHECK_THAT(r.pathloss_db, WithinRel(79.35513018141377, 1e-10));
    CHECK_THAT(r.pathloss_db, WithinRel(closed_form_db(s), 0.01));
    CHECK_THAT(r.pathloss_db, WithinAbs(closed_form_db(s), 0.1));
}

TEST_CASE("Oracle - smallest lattice in the far field")
{
    Scenario s = symmetric_link_scenario(300e9, 2);
    CHECK_THAT(field(s, DistanceMode::exact).pathloss_db, WithinAbs(closed_form_db(s), 0.1));
}

TEST_CASE("Oracle - 100x100 link agrees with the closed form in power")
{
    const Scenario s = short_hop_scenario();
    const double closed_w = received_power(s.radio.tx_power_w, evaluate_or_throw(s));
    CHECK_THAT(field(s, DistanceMode::taylor).received_power_w, WithinRel(closed_w, 0.01));
    // The 1 m hop is inside the 4.56 m Fraunhofer distance; the exact sum sits 0.46 dB lower
    CHECK_THAT(field(s, DistanceMode::exact).pathloss_db, WithinRel(38.07839076537442, 1e-10));
}

TEST_CASE("Oracle - Taylor-mode sum equals the closed form over random far-field links")
{
    std::mt19937_64 rng(41);
    for (int k = 0; k < 50; ++k)
    {
        const Scenario s = random_far_field(rng);
        const double closed_w = received_power(s.radio.tx_power_w, evaluate_or_throw(s));
        INFO("draw " << k);
        CHECK_THAT(field(s, DistanceMode::taylor).received_power_w, WithinRel(closed_w, 1e-9));
    }
}

TEST_CASE("Oracle - exact and Taylor sums drift apart inside the Fraunhofer distance")
{
    Scenario s = short_hop_scenario();
    double previous = -1.0;
    for (double d1 : {4.0, 2.0, 1.0, 0.5, 0.25})
    {
        s.link.ap_distance_m = d1;
        const double gap = std::abs(field(s, DistanceMode::exact).pathloss_db - field(s, DistanceMode::taylor).pathloss_db);
        INFO("d1 = " << d1 << " gap = " << gap);
        CHECK(gap > previous);
        previous = gap;
    }
}

TEST_CASE("Oracle - received power never exceeds the aligned bound")
{
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> phase(0.0, two_pi);
    const Scenario s = symmetric_link_scenario(250e9, 8);
    for (DistanceMode mode : {DistanceMode::exact, DistanceMode::taylor})
    {
        const double bound = aligned_power_bound(s.geometry, s.link, s.radio, s.environment, mode);
        for (int k = 0; k < 20; ++k)
        {
            std::vector<double> v(64);
            for (double &x : v)
                x = phase(rng);
            const auto r = total_field(s.geometry, s.link, s.radio, s.environment, PhaseProfile(8, 8, v), mode);
            CHECK(r.received_power_w >= 0.0);
            CHECK(r.received_power_w <= bound * (1.0 + 1e-12));
        }
        CHECK_THAT(field(s, mode).received_power_w, WithinRel(bound, mode == DistanceMode::taylor ? 1e-12 : 1e-3));
    }
}

TEST_CASE("Oracle - without absorption the environment drops out")
{
    Scenario s = symmetric_link_scenario(380e9);
    s.absorption = Absorption::excluded;
    const double reference = field(s, DistanceMode::exact).pathloss_db;
    for (const Environment env : {Environment{270.0, 90000.0, 10.0}, Environment{320.0, 105000.0, 95.0}})
    {
        s.environment = env;
        CHECK(field(s, DistanceMode::exact).pathloss_db == reference);
    }
}

TEST_CASE("Oracle - field sums are bit-reproducible")
{
    const Scenario s = short_hop_scenario();
    const auto a = field(s, DistanceMode::exact).total_field;
    const auto b = field(s, DistanceMode::exact).total_field;
    CHECK(std::memcmp(&a, &b, sizeof a) == 0);
}

TEST_CASE("Oracle - shape mismatch")
{
    const Scenario s = symmetric_link_scenario();
    CHECK_THROWS_AS(total_field(s.geometry, s.link, s.radio, s.environment, PhaseProfile(4, 4, 0.0),
                                DistanceMode::exact),
                    ShapeError);
}

// ================================================================================================
// Validation report
// ================================================================================================

TEST_CASE("Oracle - validation passes for the 20x20 far-field link")
{
    const Scenario s = symmetric_link_scenario(300e9);
    const auto r = validate_closed_form(s.geometry, s.link, s.radio, s.environment, s.target, std::nullopt, 0.1);
    CHECK(r.pass);
    CHECK(r.taylor_pass);
    CHECK(r.exact_pass);
    CHECK_FALSE(r.nearfield);
    CHECK_FALSE(r.singular);
    CHECK(r.taylor_delta_db < taylor_consistency_tolerance_db);
    CHECK(r.fraunhofer_distance_m < 10.0);
    CHECK(r.max_taylor_distance_error_m > 0.0);
}

TEST_CASE("Oracle - validation flags a deep near-field link")
{
    Scenario s = short_hop_scenario();
    s.link.ap_distance_m = 0.05;
    const auto r = validate_closed_form(s.geometry, s.link, s.radio, s.environment, s.target, std::nullopt, 0.1);
    CHECK(r.nearfield);
    CHECK(r.taylor_pass);
}

TEST_CASE("Oracle - validation of a singular link and bad inputs")
{
    Scenario s = symmetric_link_scenario();
    s.link.ue_elevation_rad = pi / 2;
    s.target.elevation_rad = pi / 2;
    const auto r = validate_closed_form(s.geometry, s.link, s.radio, s.environment, s.target, std::nullopt, 0.1);
    CHECK(r.singular);
    CHECK_FALSE(r.pass);

    const Scenario t = symmetric_link_scenario();
    CHECK_THROWS_AS(validate_closed_form(t.geometry, t.link, t.radio, t.environment, t.target, PhaseProfile(2, 2, 0.0), 0.1),
                    ShapeError);
    CHECK_THROWS_AS(validate_closed_form(t.geometry, t.link, t.radio, t.environment, t.target, std::nullopt, 0.0),
                    DomainError);
}

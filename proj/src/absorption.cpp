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

#include "rispl/absorption.hpp"

#include "rispl/constants.hpp"
#include "rispl/errors.hpp"
#include "rispl/kernels.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace rispl
{
    namespace
    {
        constexpr AbsorptionCoefficients table{
            {5.159e-5, -6.65e-5, 0.0159},
            {-2.09e-4, 0.05},
            {{{0.1925, 0.135, 0.0318},
              {0.2251, 0.1314, 0.0297},
              {2.053, 0.1717, 0.0306},
              {0.177, 0.0832, 0.0213},
              {2.146, 0.1206, 0.0277}}},
            {{{0.4241, 0.0998},
              {0.4127, 0.0932},
              {0.5394, 0.0961},
              {0.2615, 0.0668},
              {0.3789, 0.0871}}},
            {3.96, 6.11, 10.84, 12.68, 14.65, 14.94},
            {0.0157, 2e-4, 0.915e-112, 9.42},
            {6.1121, 1.0007, 3.46e-8, 17.502, 240.97, 273.15},
        };

        void require_finite(double v, const char *what)
        {
            if (!std::isfinite(v))
                throw DomainError(std::string(what) + " must be finite");
        }

        kernels::LineTable line_table(double mu)
        {
            const auto &c = table;
            kernels::LineTable lines;
            const double dry = 1.0 - mu;
            lines.strength[0] = c.oxygen_strength[0] * dry * (c.oxygen_strength[1] * dry + c.oxygen_strength[2]);
            const double w0 = c.oxygen_width[0] * dry + c.oxygen_width[1];
            lines.width[0] = w0 * w0;
            lines.center[0] = c.line_centers[0];
            for (std::size_t i = 0; i < 5; ++i)
            {
                const auto &s = c.water_strength[i];
                const auto &w = c.water_width[i];
                lines.strength[i + 1] = s[0] * mu * (s[1] * mu + s[2]);
                const double wi = w[0] * mu + w[1];
                lines.width[i + 1] = wi * wi;
                lines.center[i + 1] = c.line_centers[i + 1];
            }
            return lines;
        }

        double continuum_term(double frequency_hz, double mu)
        {
            const auto &r = table.continuum;
            return mu / r[0] * (r[1] + r[2] * std::pow(frequency_hz, r[3]));
        }

        void check_mixing_ratio(double mu)
        {
            require_finite(mu, "mixing ratio");
            if (mu < 0.0)
                throw DomainError("mixing ratio must be non-negative");
        }

        void check_frequency(double frequency_hz)
        {
            require_finite(frequency_hz, "frequency");
            if (frequency_hz <= 0.0)
                throw DomainError("frequency must be positive");
        }
    }

    const AbsorptionCoefficients &absorption_coefficients()
    {
        return table;
    }

    double AbsorptionTerms::total() const
    {
        double sum = 0.0;
        for (double v : lines)
            sum += v;
        return sum + continuum;
    }

    double saturated_vapor_pressure(const Environment &env)
    {
        require_finite(env.temperature_k, "temperature");
        require_finite(env.pressure_pa, "pressure");
        if (env.temperature_k <= 0.0)
            throw DomainError("temperature must be positive (kelvin)");
        if (env.pressure_pa < 0.0)
            throw DomainError("pressure must be non-negative");
        const auto &p = table.buck;
        const double t = env.temperature_k;
        return p[0] * (p[1] + p[2] * env.pressure_pa) * std::exp(p[3] * (t - p[5]) / (t + p[4] - p[5]));
    }

    double mixing_ratio(const Environment &env)
    {
        require_finite(env.relative_humidity_pct, "relative humidity");
        if (env.relative_humidity_pct < 0.0 || env.relative_humidity_pct > 100.0)
            throw DomainError("relative humidity must lie in [0, 100] %");
        if (!(env.pressure_pa > 0.0))
            throw DomainError("pressure must be positive");
        const double p_sat_pa = 100.0 * saturated_vapor_pressure(env);
        return (env.relative_humidity_pct / 100.0) * p_sat_pa / env.pressure_pa;
    }

    AbsorptionTerms absorption_terms(double frequency_hz, double mu)
    {
        check_frequency(frequency_hz);
        check_mixing_ratio(mu);
        const auto lines = line_table(mu);
        const double x = frequency_hz / (100.0 * speed_of_light);
        AbsorptionTerms terms;
        for (std::size_t i = 0; i < 6; ++i)
        {
            const double detune = x - lines.center[i];
            terms.lines[i] = lines.strength[i] / (lines.width[i] + detune * detune);
        }
        terms.continuum = continuum_term(frequency_hz, mu);
        return terms;
    }

    double absorption_coefficient(double frequency_hz, double mu)
    {
        return absorption_terms(frequency_hz, mu).total();
    }

    double absorption_coefficient(double frequency_hz, const Environment &env)
    {
        return absorption_coefficient(frequency_hz, mixing_ratio(env));
    }

    void absorption_spectrum(std::span<const double> frequency_hz, double mu, std::span<double> kappa_out)
    {
        check_mixing_ratio(mu);
        if (frequency_hz.size() != kappa_out.size())
            throw ShapeError("absorption_spectrum: output size does not match the frequency grid");
        std::vector<double> x(frequency_hz.size());
        for (std::size_t k = 0; k < x.size(); ++k)
        {
            check_frequency(frequency_hz[k]);
            x[k] = frequency_hz[k] / (100.0 * speed_of_light);
        }
        kernels::lorentz_line_sum(x, line_table(mu), kappa_out);
        for (std::size_t k = 0; k < x.size(); ++k)
            kappa_out[k] += continuum_term(frequency_hz[k], mu);
    }

    double absorption_loss_db(double frequency_hz, const Environment &env, double path_length_m)
    {
        require_finite(path_length_m, "path length");
        if (path_length_m < 0.0)
            throw DomainError("path length must be non-negative");
        if (path_length_m == 0.0)
            return 0.0;
        return db_per_neper_power * absorption_coefficient(frequency_hz, env) * path_length_m;
    }

    bool frequency_in_model_band(double frequency_hz)
    {
        return frequency_hz >= 100e9 && frequency_hz <= 500e9;
    }

    bool temperature_in_buck_range(double temperature_k)
    {
        return temperature_k >= 260.0 && temperature_k <= 340.0;
    }
}

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

#include "kernels_impl.hpp"

#include <cmath>

namespace rispl::kernels::detail::scalar
{
    void phasor_sum(const double *amp, const double *phase, std::size_t n, double *re, double *im)
    {
        double acc_re[4] = {0.0, 0.0, 0.0, 0.0};
        double acc_im[4] = {0.0, 0.0, 0.0, 0.0};
        for (std::size_t k = 0; k < n; ++k)
        {
            const std::size_t lane = k & 3U;
            acc_re[lane] += amp[k] * std::cos(phase[k]);
            acc_im[lane] += amp[k] * std::sin(phase[k]);
        }
        *re = (acc_re[0] + acc_re[1]) + (acc_re[2] + acc_re[3]);
        *im = (acc_im[0] + acc_im[1]) + (acc_im[2] + acc_im[3]);
    }

    void ranges_from_point(const double *xs, const double *ys, std::size_t n, const double *point, double *out)
    {
        const double pz2 = point[2] * point[2];
        for (std::size_t k = 0; k < n; ++k)
        {
            const double dx = xs[k] - point[0];
            const double dy = ys[k] - point[1];
            out[k] = std::sqrt(dx * dx + dy * dy + pz2);
        }
    }

    void lorentz_line_sum(const double *x, std::size_t n, LineArrays lines, double *out)
    {
        for (std::size_t k = 0; k < n; ++k)
        {
            double sum = 0.0;
            for (int i = 0; i < 6; ++i)
            {
                const double detune = x[k] - lines.center[i];
                sum += lines.strength[i] / (lines.width[i] + detune * detune);
            }
            out[k] = sum;
        }
    }
}

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

#ifndef RISPL_KERNELS_IMPL_HPP
#define RISPL_KERNELS_IMPL_HPP

// Raw-pointer kernel entry points. Kept free of templates and standard-library
// inline code so the AVX2 translation unit never emits a weak symbol that a
// non-AVX caller could end up linking against.

#include <cstddef>

namespace rispl::kernels::detail
{
    struct LineArrays
    {
        const double *strength;
        const double *width;
        const double *center;
    };

    namespace scalar
    {
        void phasor_sum(const double *amp, const double *phase, std::size_t n, double *re, double *im);
        void ranges_from_point(const double *xs, const double *ys, std::size_t n, const double *point, double *out);
        void lorentz_line_sum(const double *x, std::size_t n, LineArrays lines, double *out);
    }

    namespace avx2
    {
        void phasor_sum(const double *amp, const double *phase, std::size_t n, double *re, double *im);
        void ranges_from_point(const double *xs, const double *ys, std::size_t n, const double *point, double *out);
        void lorentz_line_sum(const double *x, std::size_t n, LineArrays lines, double *out);
    }
}

#endif

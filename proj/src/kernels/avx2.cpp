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

#include <immintrin.h>

namespace rispl::kernels::detail::avx2
{
    namespace
    {
        // Cody-Waite split of pi/4 and the minimax polynomials on [-pi/4, pi/4] from Cephes.
        // Accurate to ~1 ulp for |x| < 1e9, far beyond the phases met here (< 1e7 rad).
        constexpr double four_over_pi = 1.27323954473516268615;
        constexpr double dp1 = 7.85398125648498535156e-1;
        constexpr double dp2 = 3.77489470793079817668e-8;
        constexpr double dp3 = 2.69515142907905952645e-15;

        constexpr double sin_c[6] = {1.58962301576546568060e-10, -2.50507477628578072866e-8,
                                     2.75573136213857245213e-6, -1.98412698295895385996e-4,
                                     8.33333333332211858878e-3, -1.66666666666666307295e-1};
        constexpr double cos_c[6] = {-1.13585365213876817300e-11, 2.08757008419747316778e-9,
                                     -2.75573141792967388112e-7, 2.48015872888517045348e-5,
                                     -1.38888888888730564116e-3, 4.16666666666665929218e-2};

        inline __m256d poly5(__m256d z, const double *c)
        {
            __m256d p = _mm256_set1_pd(c[0]);
            for (int i = 1; i < 6; ++i)
                p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(c[i]));
            return p;
        }

        inline void sincos(__m256d x, __m256d &s, __m256d &c)
        {
            const __m256d sign_bit = _mm256_set1_pd(-0.0);
            const __m256d ax = _mm256_andnot_pd(sign_bit, x);
            const __m256d x_neg = _mm256_and_pd(x, sign_bit);

            // Octant index rounded up to even, kept in floating point (AVX2 has no 64-bit cvt)
            __m256d y = _mm256_floor_pd(_mm256_mul_pd(ax, _mm256_set1_pd(four_over_pi)));
            const __m256d half_y = _mm256_floor_pd(_mm256_mul_pd(y, _mm256_set1_pd(0.5)));
            const __m256d odd = _mm256_sub_pd(y, _mm256_add_pd(half_y, half_y));
            y = _mm256_add_pd(y, odd);

            // quadrant = (y / 2) mod 4
            const __m256d q2 = _mm256_mul_pd(y, _mm256_set1_pd(0.5));
            const __m256d quadrant =
                _mm256_sub_pd(q2, _mm256_mul_pd(_mm256_set1_pd(4.0), _mm256_floor_pd(_mm256_mul_pd(q2, _mm256_set1_pd(0.25)))));

            __m256d z = _mm256_fnmadd_pd(y, _mm256_set1_pd(dp1), ax);
            z = _mm256_fnmadd_pd(y, _mm256_set1_pd(dp2), z);
            z = _mm256_fnmadd_pd(y, _mm256_set1_pd(dp3), z);
            const __m256d zz = _mm256_mul_pd(z, z);

            const __m256d sin_z = _mm256_fmadd_pd(_mm256_mul_pd(z, zz), poly5(zz, sin_c), z);
            __m256d cos_z = _mm256_fmadd_pd(_mm256_mul_pd(zz, zz), poly5(zz, cos_c), _mm256_set1_pd(1.0));
            cos_z = _mm256_fnmadd_pd(_mm256_set1_pd(0.5), zz, cos_z);

            const __m256d q_is1 = _mm256_cmp_pd(quadrant, _mm256_set1_pd(1.0), _CMP_EQ_OQ);
            const __m256d q_is2 = _mm256_cmp_pd(quadrant, _mm256_set1_pd(2.0), _CMP_EQ_OQ);
            const __m256d q_is3 = _mm256_cmp_pd(quadrant, _mm256_set1_pd(3.0), _CMP_EQ_OQ);
            const __m256d swap = _mm256_or_pd(q_is1, q_is3);

            // sin: q0 +sin z, q1 +cos z, q2 -sin z, q3 -cos z ; then odd symmetry in x
            // cos: q0 +cos z, q1 -sin z, q2 -cos z, q3 +sin z
            __m256d s_val = _mm256_blendv_pd(sin_z, cos_z, swap);
            __m256d c_val = _mm256_blendv_pd(cos_z, sin_z, swap);
            const __m256d s_flip = _mm256_and_pd(_mm256_or_pd(q_is2, q_is3), sign_bit);
            const __m256d c_flip = _mm256_and_pd(_mm256_or_pd(q_is1, q_is2), sign_bit);
            s = _mm256_xor_pd(_mm256_xor_pd(s_val, s_flip), x_neg);
            c = _mm256_xor_pd(c_val, c_flip);
        }

        inline __m256i tail_mask(std::size_t remaining)
        {
            const __m256i lanes = _mm256_setr_epi64x(0, 1, 2, 3);
            return _mm256_cmpgt_epi64(_mm256_set1_epi64x(static_cast<long long>(remaining)), lanes);
        }

        inline double lane_reduce(__m256d v)
        {
            alignas(32) double l[4];
            _mm256_store_pd(l, v);
            return (l[0] + l[1]) + (l[2] + l[3]);
        }
    }

    void phasor_sum(const double *amp, const double *phase, std::size_t n, double *re, double *im)
    {
        __m256d acc_re = _mm256_setzero_pd();
        __m256d acc_im = _mm256_setzero_pd();
        std::size_t k = 0;
        for (; k + 4 <= n; k += 4)
        {
            __m256d s, c;
            sincos(_mm256_loadu_pd(phase + k), s, c);
            const __m256d a = _mm256_loadu_pd(amp + k);
            acc_re = _mm256_fmadd_pd(a, c, acc_re);
            acc_im = _mm256_fmadd_pd(a, s, acc_im);
        }
        if (k < n)
        {
            const __m256i mask = tail_mask(n - k);
            __m256d s, c;
            sincos(_mm256_maskload_pd(phase + k, mask), s, c);
            const __m256d a = _mm256_maskload_pd(amp + k, mask); // zero amplitude in unused lanes
            acc_re = _mm256_fmadd_pd(a, c, acc_re);
            acc_im = _mm256_fmadd_pd(a, s, acc_im);
        }
        *re = lane_reduce(acc_re);
        *im = lane_reduce(acc_im);
    }

    void ranges_from_point(const double *xs, const double *ys, std::size_t n, const double *point, double *out)
    {
        const __m256d px = _mm256_set1_pd(point[0]);
        const __m256d py = _mm256_set1_pd(point[1]);
        const __m256d pz2 = _mm256_set1_pd(point[2] * point[2]);
        std::size_t k = 0;
        for (; k + 4 <= n; k += 4)
        {
            const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(xs + k), px);
            const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(ys + k), py);
            const __m256d r2 = _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy)), pz2);
            _mm256_storeu_pd(out + k, _mm256_sqrt_pd(r2));
        }
        if (k < n)
        {
            const __m256i mask = tail_mask(n - k);
            const __m256d dx = _mm256_sub_pd(_mm256_maskload_pd(xs + k, mask), px);
            const __m256d dy = _mm256_sub_pd(_mm256_maskload_pd(ys + k, mask), py);
            const __m256d r2 = _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy)), pz2);
            _mm256_maskstore_pd(out + k, mask, _mm256_sqrt_pd(r2));
        }
    }

    void lorentz_line_sum(const double *x, std::size_t n, LineArrays lines, double *out)
    {
        __m256d strength[6], width[6], center[6];
        for (int i = 0; i < 6; ++i)
        {
            strength[i] = _mm256_set1_pd(lines.strength[i]);
            width[i] = _mm256_set1_pd(lines.width[i]);
            center[i] = _mm256_set1_pd(lines.center[i]);
        }
        auto eval = [&](__m256d xv)
        {
            __m256d sum = _mm256_setzero_pd();
            for (int i = 0; i < 6; ++i)
            {
                const __m256d d = _mm256_sub_pd(xv, center[i]);
                const __m256d den = _mm256_add_pd(width[i], _mm256_mul_pd(d, d));
                sum = _mm256_add_pd(sum, _mm256_div_pd(strength[i], den));
            }
            return sum;
        };
        std::size_t k = 0;
        for (; k + 4 <= n; k += 4)
            _mm256_storeu_pd(out + k, eval(_mm256_loadu_pd(x + k)));
        if (k < n)
        {
            const __m256i mask = tail_mask(n - k);
            _mm256_maskstore_pd(out + k, mask, eval(_mm256_maskload_pd(x + k, mask)));
        }
    }
}

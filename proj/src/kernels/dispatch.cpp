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

#include "rispl/kernels.hpp"

#include "kernels_impl.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rispl::kernels
{
    namespace
    {
        // -1: automatic, otherwise static_cast<int>(Isa)
        std::atomic<int> isa_override{-1};

        bool cpu_has_avx2()
        {
#if defined(RISPL_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
            static const bool has = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
            return has;
#else
            return false;
#endif
        }

        Isa isa_from_environment(Isa fallback)
        {
            const char *env = std::getenv("RISPL_ISA");
            if (env == nullptr)
                return fallback;
            const std::string_view v(env);
            if (v == "scalar")
                return Isa::scalar;
            if (v == "avx2" && cpu_has_avx2())
                return Isa::avx2;
            return fallback;
        }

        void check_sizes(std::size_t a, std::size_t b, const char *what)
        {
            if (a != b)
                throw std::invalid_argument(std::string("kernels: size mismatch in ") + what);
        }
    }

    const char *isa_name(Isa isa)
    {
        switch (isa)
        {
        case Isa::scalar:
            return "scalar";
        case Isa::avx2:
            return "avx2";
        }
        return "unknown";
    }

    bool isa_available(Isa isa)
    {
        return isa == Isa::scalar || (isa == Isa::avx2 && cpu_has_avx2());
    }

    Isa detected_isa()
    {
        return cpu_has_avx2() ? Isa::avx2 : Isa::scalar;
    }

    Isa active_isa()
    {
        const int forced = isa_override.load(std::memory_order_relaxed);
        if (forced >= 0)
            return static_cast<Isa>(forced);
        static const Isa from_env = isa_from_environment(detected_isa());
        return from_env;
    }

    void set_isa_override(std::optional<Isa> isa)
    {
        if (!isa)
        {
            isa_override.store(-1);
            return;
        }
        if (!isa_available(*isa))
            throw std::invalid_argument(std::string("kernel variant not available: ") + isa_name(*isa));
        isa_override.store(static_cast<int>(*isa));
    }

    std::complex<double> phasor_sum(Isa isa, std::span<const double> amplitude, std::span<const double> phase)
    {
        check_sizes(amplitude.size(), phase.size(), "phasor_sum");
        double re = 0.0, im = 0.0;
#if defined(RISPL_HAVE_AVX2)
        if (isa == Isa::avx2 && cpu_has_avx2())
        {
            detail::avx2::phasor_sum(amplitude.data(), phase.data(), amplitude.size(), &re, &im);
            return {re, im};
        }
#endif
        if (isa == Isa::avx2 && !cpu_has_avx2())
            throw std::invalid_argument("kernel variant not available: avx2");
        detail::scalar::phasor_sum(amplitude.data(), phase.data(), amplitude.size(), &re, &im);
        return {re, im};
    }

    std::complex<double> phasor_sum(std::span<const double> amplitude, std::span<const double> phase)
    {
        return phasor_sum(active_isa(), amplitude, phase);
    }

    void ranges_from_point(Isa isa, std::span<const double> xs, std::span<const double> ys,
                           const std::array<double, 3> &point, std::span<double> out)
    {
        check_sizes(xs.size(), ys.size(), "ranges_from_point");
        check_sizes(xs.size(), out.size(), "ranges_from_point");
#if defined(RISPL_HAVE_AVX2)
        if (isa == Isa::avx2 && cpu_has_avx2())
        {
            detail::avx2::ranges_from_point(xs.data(), ys.data(), xs.size(), point.data(), out.data());
            return;
        }
#endif
        if (isa == Isa::avx2 && !cpu_has_avx2())
            throw std::invalid_argument("kernel variant not available: avx2");
        detail::scalar::ranges_from_point(xs.data(), ys.data(), xs.size(), point.data(), out.data());
    }

    void ranges_from_point(std::span<const double> xs, std::span<const double> ys,
                           const std::array<double, 3> &point, std::span<double> out)
    {
        ranges_from_point(active_isa(), xs, ys, point, out);
    }

    void lorentz_line_sum(Isa isa, std::span<const double> x, const LineTable &lines, std::span<double> out)
    {
        check_sizes(x.size(), out.size(), "lorentz_line_sum");
        const detail::LineArrays arrays{lines.strength.data(), lines.width.data(), lines.center.data()};
#if defined(RISPL_HAVE_AVX2)
        if (isa == Isa::avx2 && cpu_has_avx2())
        {
            detail::avx2::lorentz_line_sum(x.data(), x.size(), arrays, out.data());
            return;
        }
#endif
        if (isa == Isa::avx2 && !cpu_has_avx2())
            throw std::invalid_argument("kernel variant not available: avx2");
        detail::scalar::lorentz_line_sum(x.data(), x.size(), arrays, out.data());
    }

    void lorentz_line_sum(std::span<const double> x, const LineTable &lines, std::span<double> out)
    {
        lorentz_line_sum(active_isa(), x, lines, out);
    }
}

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

#ifndef RISPL_KERNELS_HPP
#define RISPL_KERNELS_HPP

// Data-parallel inner loops of the model. Every kernel has a scalar reference
// implementation and, on x86-64, an AVX2/FMA variant selected at runtime.
// The two variants agree to a few ulps per element (tests/test_kernels.cpp);
// within one variant, results are bit-reproducible because the reduction
// order is fixed (4 lane-striped partial sums, combined as (l0+l1)+(l2+l3)).

#include <array>
#include <complex>
#include <optional>
#include <span>

namespace rispl::kernels
{
    enum class Isa
    {
        scalar,
        avx2
    };

    const char *isa_name(Isa isa);

    // Best variant supported by both the build and the running CPU
    Isa detected_isa();

    // Variant used by the dispatched entry points. Honours set_isa_override(),
    // then the RISPL_ISA environment variable ("scalar" or "avx2"), then detection.
    Isa active_isa();

    // Force a variant (std::nullopt restores automatic selection).
    // Throws std::invalid_argument if the variant is unavailable on this machine.
    void set_isa_override(std::optional<Isa> isa);

    bool isa_available(Isa isa);

    // Six Lorentzian lines: out[k] = sum_i strength[i] / (width[i] + (x[k] - center[i])^2)
    struct LineTable
    {
        std::array<double, 6> strength{};
        std::array<double, 6> width{};
        std::array<double, 6> center{};
    };

    // sum_k amplitude[k] * exp(j * phase[k])
    std::complex<double> phasor_sum(std::span<const double> amplitude, std::span<const double> phase);
    std::complex<double> phasor_sum(Isa isa, std::span<const double> amplitude, std::span<const double> phase);

    // out[k] = |(xs[k], ys[k], 0) - point|
    void ranges_from_point(std::span<const double> xs, std::span<const double> ys,
                           const std::array<double, 3> &point, std::span<double> out);
    void ranges_from_point(Isa isa, std::span<const double> xs, std::span<const double> ys,
                           const std::array<double, 3> &point, std::span<double> out);

    void lorentz_line_sum(std::span<const double> x, const LineTable &lines, std::span<double> out);
    void lorentz_line_sum(Isa isa, std::span<const double> x, const LineTable &lines, std::span<double> out);
}

#endif

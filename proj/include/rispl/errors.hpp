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

#ifndef RISPL_ERRORS_HPP
#define RISPL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rispl
{
    // Input outside the mathematical domain of a model expression
    class DomainError : public std::domain_error
    {
    public:
        using std::domain_error::domain_error;
    };

    // RIS element index outside [1-N/2, N/2] x [1-M/2, M/2]
    class IndexError : public std::out_of_range
    {
    public:
        using std::out_of_range::out_of_range;
    };

    // Phase matrix (or other 2-D input) does not match the RIS lattice
    class ShapeError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    // Malformed sweep specification or unknown parameter name
    class SpecError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    // Quadrature or other numerical procedure failed to converge
    class NumericError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // Requested extremum over a column whose every cell is a singular sentinel
    class NoExtremumError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // Grazing incidence/departure: the RU pattern vanishes and the loss is unbounded
    class SingularGeometryError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };
}

#endif

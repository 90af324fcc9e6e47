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

#ifndef RISPL_TOOLS_COMMANDS_HPP
#define RISPL_TOOLS_COMMANDS_HPP

#include <ostream>
#include <string>
#include <vector>

namespace rispl::cli
{
    enum ExitCode : int
    {
        exit_ok = 0,
        exit_config = 2,
        exit_singular = 3,
        exit_validation = 4
    };

    // Runs one command; `args` excludes the program name
    int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);
}

#endif

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

#ifndef RISPL_TOOLS_RUN_CONFIG_HPP
#define RISPL_TOOLS_RUN_CONFIG_HPP

// Scenario configuration for the command-line tool.
//
// The file is a flat INI document; each key lives in one section:
//
//   [geometry]     M, N, dx_m, dy_m
//   [link]         d1_m, d2_m, theta_i_deg, phi_i_deg, theta_r_deg, phi_r_deg
//   [steering]     theta_o_deg, phi_o_deg           (default: the UE direction)
//   [radio]        f_hz | f_ghz, ga_dbi, gu_dbi, r_mag, pattern_q, p_ap_w
//   [environment]  t_k, p_pa, rh_pct
//   [model]        absorption
//   [validate]     tolerance_db
//   [sweep]        axis1, axis2, threads, oracle
//
// Precedence: built-in defaults < --config file < --set key=value < dedicated flags.
// Degrees, GHz and dBi are converted to radians, Hz and linear gains here and nowhere else.

#include "rispl/beam.hpp"
#include "rispl/sweep.hpp"

#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace rispl::cli
{
    class ConfigError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // Raw textual key/value pairs, keyed "section.key"
    class KeyValues
    {
    public:
        void load_file(const std::string &path);
        void load_stream(std::istream &in, const std::string &origin);
        void set(const std::string &key, const std::string &value); // rejects unknown keys
        void set_assignment(const std::string &assignment);         // "section.key=value"

        bool has(const std::string &key) const { return values_.count(key) != 0; }
        std::optional<std::string> get(const std::string &key) const;
        const std::map<std::string, std::string> &entries() const { return values_; }

    private:
        std::map<std::string, std::string> values_;
    };

    const std::vector<std::string> &known_keys();

    struct RunConfig
    {
        Scenario scenario;
        bool has_steering = false;
        double tolerance_db = 0.1;
        std::vector<std::string> axes;
        unsigned threads = 1;
        bool oracle = false;
    };

    enum class Requirement
    {
        environment_only, // absorption curves
        scenario,         // pathloss, validate, sweep
        steered_scenario  // phases
    };

    // Typed, unit-converted configuration. Keys listed in `covered` (swept parameters)
    // are not required. Missing required keys raise ConfigError naming the key.
    RunConfig build_run_config(const KeyValues &kv, Requirement requirement,
                               const std::set<std::string> &covered = {});

    // Effective configuration (defaults filled in) as an INI document that
    // reproduces the same run when fed back through --config
    std::string dump_config(const KeyValues &kv);

    // "name:start:stop:count[unit][:log]"; unit in {deg, rad, ghz, hz, dbi}
    SweepAxis parse_axis(const std::string &text);

    // Config keys made optional by sweeping the given parameter
    std::set<std::string> keys_covered_by(const std::string &sweep_parameter);

    // Phase matrix CSV: one '#' header line documenting the index mapping, then M rows of N radians
    void write_phases_csv(std::ostream &out, const PhaseProfile &phases);
    PhaseProfile read_phases_csv(std::istream &in);
    PhaseProfile read_phases_file(const std::string &path);
}

#endif

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

#include "commands.hpp"

#include "run_config.hpp"

#include "rispl/absorption.hpp"
#include "rispl/constants.hpp"
#include "rispl/errors.hpp"
#include "rispl/kernels.hpp"
#include "rispl/linkbudget.hpp"
#include "rispl/oracle.hpp"
#include "rispl/sweep.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace rispl::cli
{
    namespace
    {
        using nlohmann::json;

        struct Options
        {
            std::string config_file;
            std::vector<std::string> assignments;
            bool json_output = false;
            std::string output_file;
            long long seed = 0;
            bool no_absorption = false;
            bool oracle = false;
            std::string phases_file;
            bool dump = false;

            std::vector<std::string> axes;
            int threads = -1;
            double tolerance_db = 0.0;
            std::string range = "100e9:500e9:401";
        };

        // Thrown for a singular closed-form evaluation
        struct SingularExit
        {
            std::string reason;
        };

        // inf/nan become null in JSON
        json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

        void emit(const Options &opt, std::ostream &out, const std::string &text)
        {
            if (opt.output_file.empty())
            {
                out << text;
                return;
            }
            std::ofstream file(opt.output_file, std::ios::binary);
            if (!file)
                throw ConfigError("cannot write output file '" + opt.output_file + "'");
            file << text;
        }

        void warn_scenario(const Scenario &s, std::ostream &err)
        {
            if (!frequency_in_model_band(s.radio.frequency_hz))
                err << "warning: frequency " << format_number(s.radio.frequency_hz)
                    << " Hz lies outside the 100-500 GHz absorption model band\n";
            if (!temperature_in_buck_range(s.environment.temperature_k))
                err << "warning: temperature " << format_number(s.environment.temperature_k)
                    << " K lies outside the 260-340 K vapour pressure fit\n";
        }

        void warn_near_field(const Scenario &s, std::ostream &err)
        {
            if (!is_far_field(s.geometry, s.link, s.radio.wavelength_m()))
                err << "warning: link distances are below the Fraunhofer distance "
                    << format_number(fraunhofer_distance(s.geometry, s.radio.wavelength_m()))
                    << " m; the closed form is advisory here\n";
        }

        PhaseProfile phases_for(const Options &opt, const Scenario &s)
        {
            if (!opt.phases_file.empty())
            {
                PhaseProfile p = read_phases_file(opt.phases_file);
                p.check_matches(s.geometry);
                return p;
            }
            return optimal_phase_profile(s.geometry, s.link, s.target, s.radio.wavelength_m());
        }

        int cmd_pathloss(const Options &opt, const RunConfig &cfg, std::ostream &out, std::ostream &err)
        {
            const Scenario &s = cfg.scenario;
            warn_scenario(s, err);
            warn_near_field(s, err);

            const PathlossResult result =
                pathloss(s.geometry, s.link, s.radio, s.environment, steering_coefficients(s.link, s.target),
                         s.absorption);
            if (const auto *singular = std::get_if<SingularConfiguration>(&result))
                throw SingularExit{singular->reason};
            const auto &b = std::get<PathlossBreakdown>(result);

            const double lambda = s.radio.wavelength_m();
            const double kappa = s.absorption == Absorption::included
                                     ? absorption_coefficient(s.radio.frequency_hz, s.environment)
                                     : 0.0;
            const double mu = mixing_ratio(s.environment);
            const double fraunhofer = fraunhofer_distance(s.geometry, lambda);
            const bool far = is_far_field(s.geometry, s.link, lambda);

            json j = {
                {"spreading_db", b.spreading_db},
                {"absorption_db", b.absorption_db},
                {"misalignment_db", b.misalignment_db},
                {"total_db", b.total_db},
                {"received_power_w", received_power(s.radio.tx_power_w, b)},
                {"kappa_per_m", kappa},
                {"mixing_ratio", mu},
                {"fraunhofer_distance_m", fraunhofer},
                {"far_field", far},
            };
            if (cfg.oracle)
            {
                const PhaseProfile phases = phases_for(opt, s);
                for (DistanceMode mode : {DistanceMode::taylor, DistanceMode::exact})
                {
                    const FieldResult f =
                        total_field(s.geometry, s.link, s.radio, s.environment, phases, mode, s.absorption);
                    j[std::string("oracle_") + distance_mode_name(mode) + "_db"] = number(f.pathloss_db);
                }
            }

            if (opt.json_output)
            {
                emit(opt, out, j.dump(2) + "\n");
                return exit_ok;
            }

            std::ostringstream text;
            auto line = [&](const char *label, const std::string &value, const char *unit)
            {
                text << label << ": " << value;
                if (*unit)
                    text << ' ' << unit;
                text << '\n';
            };
            line("spreading_db", format_number(b.spreading_db), "dB");
            line("absorption_db", format_number(b.absorption_db), "dB");
            line("misalignment_db", format_number(b.misalignment_db), "dB");
            line("total_db", format_number(b.total_db), "dB");
            line("received_power_w", format_number(j["received_power_w"].get<double>()), "W");
            line("kappa_per_m", format_number(kappa), "1/m");
            line("mixing_ratio", format_number(mu), "");
            line("fraunhofer_distance_m", format_number(fraunhofer), "m");
            line("far_field", far ? "true" : "false", "");
            if (cfg.oracle)
                for (const char *key : {"oracle_taylor_db", "oracle_exact_db"})
                    line(key, j[key].is_null() ? "inf" : format_number(j[key].get<double>()), "dB");
            emit(opt, out, text.str());
            return exit_ok;
        }

        int cmd_sweep(const Options &opt, const KeyValues &kv, std::ostream &out, std::ostream &err)
        {
            std::vector<SweepAxis> axes;
            std::set<std::string> covered;
            for (const char *key : {"sweep.axis1", "sweep.axis2"})
                if (auto text = kv.get(key))
                {
                    axes.push_back(parse_axis(*text));
                    for (const auto &k : keys_covered_by(axes.back().parameter))
                        covered.insert(k);
                }
            if (axes.empty())
                throw ConfigError("sweep needs at least one --axis");

            const RunConfig cfg = build_run_config(kv, Requirement::scenario, covered);
            warn_scenario(cfg.scenario, err);

            SweepSpec spec;
            spec.axes = axes;
            spec.base = cfg.scenario;
            spec.oracle_columns = cfg.oracle;
            spec.threads = cfg.threads;
            const SweepTable table = run_sweep(spec);

            if (opt.json_output)
            {
                json records = json::array();
                for (std::size_t r = 0; r < table.row_count(); ++r)
                {
                    json rec = json::object();
                    for (std::size_t c = 0; c < table.columns().size(); ++c)
                        rec[table.columns()[c]] = number(table.value(r, c));
                    records.push_back(std::move(rec));
                }
                json j = {
                    {"provenance",
                     {{"model_version", table.provenance.model_version},
                      {"config_hash", table.provenance.config_hash},
                      {"kernel_isa", table.provenance.kernel_isa}}},
                    {"columns", table.columns()},
                    {"records", records},
                };
                emit(opt, out, j.dump(2) + "\n");
                return exit_ok;
            }

            err << "provenance: model_version=" << table.provenance.model_version
                << " config_hash=" << table.provenance.config_hash
                << " kernel_isa=" << table.provenance.kernel_isa << '\n';
            const std::string text = to_csv(table);
            emit(opt, out, text);
            return exit_ok;
        }

        int cmd_phases(const Options &opt, const RunConfig &cfg, std::ostream &out)
        {
            const Scenario &s = cfg.scenario;
            const PhaseProfile p = optimal_phase_profile(s.geometry, s.link, s.target, s.radio.wavelength_m());
            std::ostringstream text;
            write_phases_csv(text, p);
            emit(opt, out, text.str());
            return exit_ok;
        }

        int cmd_validate(const Options &opt, const RunConfig &cfg, std::ostream &out, std::ostream &err)
        {
            const Scenario &s = cfg.scenario;
            warn_scenario(s, err);
            std::optional<PhaseProfile> phases;
            if (!opt.phases_file.empty())
                phases = read_phases_file(opt.phases_file);

            const ValidationReport r = validate_closed_form(s.geometry, s.link, s.radio, s.environment, s.target,
                                                            phases, cfg.tolerance_db, s.absorption);
            const json j = {
                {"closed_form_db", number(r.closed_form_db)},
                {"taylor_oracle_db", number(r.taylor_oracle_db)},
                {"exact_oracle_db", number(r.exact_oracle_db)},
                {"taylor_delta_db", number(r.taylor_delta_db)},
                {"exact_delta_db", number(r.exact_delta_db)},
                {"taylor_tolerance_db", taylor_consistency_tolerance_db},
                {"exact_tolerance_db", r.tolerance_db},
                {"max_taylor_distance_error_m", r.max_taylor_distance_error_m},
                {"fraunhofer_distance_m", r.fraunhofer_distance_m},
                {"nearfield", r.nearfield},
                {"advisory", r.nearfield},
                {"singular", r.singular},
                {"taylor_pass", r.taylor_pass},
                {"exact_pass", r.exact_pass},
                {"pass", r.pass},
            };
            emit(opt, out, j.dump(2) + "\n");
            if (r.singular)
                return exit_singular;
            if (r.nearfield)
            {
                err << "warning: near-field configuration; validation is advisory\n";
                return exit_ok;
            }
            return r.pass ? exit_ok : exit_validation;
        }

        int cmd_absorption(const Options &opt, const RunConfig &cfg, std::ostream &out, std::ostream &err)
        {
            const SweepAxis axis = parse_axis("f_hz:" + opt.range);
            const std::vector<double> freqs = axis.values();
            const Environment &env = cfg.scenario.environment;
            if (!temperature_in_buck_range(env.temperature_k))
                err << "warning: temperature " << format_number(env.temperature_k)
                    << " K lies outside the 260-340 K vapour pressure fit\n";
            if (std::any_of(freqs.begin(), freqs.end(), [](double f) { return !frequency_in_model_band(f); }))
                err << "warning: part of the range lies outside the 100-500 GHz absorption model band\n";

            std::vector<double> kappa(freqs.size());
            absorption_spectrum(freqs, mixing_ratio(env), kappa);

            // 10 log10(e^{kappa d}) over one kilometre
            auto per_km = [](double k) { return db_per_neper_power * k * 1000.0; };

            if (opt.json_output)
            {
                json records = json::array();
                for (std::size_t i = 0; i < freqs.size(); ++i)
                    records.push_back(
                        {{"f_hz", freqs[i]}, {"kappa_per_m", kappa[i]}, {"loss_db_per_km", per_km(kappa[i])}});
                emit(opt, out, json{{"mixing_ratio", mixing_ratio(env)}, {"records", records}}.dump(2) + "\n");
                return exit_ok;
            }
            std::string text = "f_hz,kappa_per_m,loss_db_per_km\n";
            for (std::size_t i = 0; i < freqs.size(); ++i)
                text += format_number(freqs[i]) + "," + format_number(kappa[i]) + "," +
                        format_number(per_km(kappa[i])) + "\n";
            emit(opt, out, text);
            return exit_ok;
        }

        void add_globals(CLI::App &app, Options &opt)
        {
            app.add_option("--config", opt.config_file, "INI configuration file");
            app.add_option("--set", opt.assignments, "Override one key, section.key=value (repeatable)")
                ->allow_extra_args(false);
            app.add_flag("--json", opt.json_output, "Machine-readable output");
            app.add_option("--output", opt.output_file, "Write output to a file instead of stdout");
            app.add_option("--seed", opt.seed, "Reserved; the model is deterministic");
            app.add_flag("--no-absorption", opt.no_absorption, "Drop molecular absorption");
            app.add_flag("--oracle", opt.oracle, "Also evaluate the element-wise field sum");
            app.add_option("--phases-file", opt.phases_file, "Phase matrix CSV for the oracle");
            app.add_flag("--dump-config", opt.dump, "Print the effective configuration and exit");
        }
    }

    int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
    {
        CLI::App app{"Pathloss of RIS-assisted terahertz links", "rispl"};
        Options opt;
        add_globals(app, opt);
        app.require_subcommand(1);

        auto *pathloss = app.add_subcommand("pathloss", "Closed-form pathloss breakdown")->fallthrough();
        auto *sweep = app.add_subcommand("sweep", "Evaluate over one or two parameter axes")->fallthrough();
        sweep->add_option("--axis", opt.axes, "name:start:stop:count[unit][:log] (repeatable)")
            ->allow_extra_args(false);
        sweep->add_option("--threads", opt.threads, "Worker threads, 0 for all cores");
        auto *phases = app.add_subcommand("phases", "Export the optimal phase matrix")->fallthrough();
        auto *validate_cmd =
            app.add_subcommand("validate", "Compare the closed form with the field-sum oracles")->fallthrough();
        validate_cmd->add_option("--tolerance-db", opt.tolerance_db, "Closed-vs-exact tolerance in dB");
        auto *absorption = app.add_subcommand("absorption", "Absorption coefficient over frequency")->fallthrough();
        absorption->add_option("--range", opt.range, "start:stop:count[ghz]");

        try
        {
            std::vector<std::string> reversed(args.rbegin(), args.rend());
            app.parse(reversed);
        }
        catch (const CLI::ParseError &e)
        {
            const int code = app.exit(e, out, err);
            return code == 0 ? exit_ok : exit_config;
        }

        try
        {
            KeyValues kv;
            if (!opt.config_file.empty())
                kv.load_file(opt.config_file);
            for (const auto &a : opt.assignments)
                kv.set_assignment(a);
            if (opt.no_absorption)
                kv.set("model.absorption", "false");
            if (opt.oracle)
                kv.set("sweep.oracle", "true");
            if (!opt.axes.empty())
            {
                if (opt.axes.size() > 2)
                    throw ConfigError("at most two --axis options are supported");
                kv.set("sweep.axis1", opt.axes[0]);
                if (opt.axes.size() == 2)
                    kv.set("sweep.axis2", opt.axes[1]);
                else if (kv.has("sweep.axis2"))
                    throw ConfigError("--axis replaces the configured axes; give both on the command line");
            }
            if (opt.threads >= 0)
                kv.set("sweep.threads", std::to_string(opt.threads));
            if (validate_cmd->count("--tolerance-db"))
                kv.set("validate.tolerance_db", format_number(opt.tolerance_db));

            if (opt.dump)
            {
                emit(opt, out, dump_config(kv));
                return exit_ok;
            }

            if (sweep->parsed())
                return cmd_sweep(opt, kv, out, err);
            if (absorption->parsed())
                return cmd_absorption(opt, build_run_config(kv, Requirement::environment_only), out, err);
            if (phases->parsed())
                return cmd_phases(opt, build_run_config(kv, Requirement::steered_scenario), out);
            if (validate_cmd->parsed())
                return cmd_validate(opt, build_run_config(kv, Requirement::scenario), out, err);
            if (pathloss->parsed())
                return cmd_pathloss(opt, build_run_config(kv, Requirement::scenario), out, err);
            return exit_config;
        }
        catch (const SingularExit &e)
        {
            err << "error: singular geometry: " << e.reason << '\n';
            return exit_singular;
        }
        catch (const SingularGeometryError &e)
        {
            err << "error: singular geometry: " << e.what() << '\n';
            return exit_singular;
        }
        catch (const NumericError &e)
        {
            err << "error: " << e.what() << '\n';
            return exit_config;
        }
        catch (const std::logic_error &e)
        {
            // DomainError, ShapeError, SpecError, IndexError
            err << "error: " << e.what() << '\n';
            return exit_config;
        }
        catch (const std::runtime_error &e)
        {
            err << "error: " << e.what() << '\n';
            return exit_config;
        }
    }
}

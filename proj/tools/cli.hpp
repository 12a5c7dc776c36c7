// wtpc command-line front end
// Subcommands: generate, sweep, defaults, cp-table, validate.
// Exit codes: 0 success, 2 invalid input, 3 numeric failure.
#pragma once

#include <wtpc/wtpc.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace wtpc::cli {

using nlohmann::json;
namespace fs = std::filesystem;

inline constexpr const char *VERSION = "wtpc 1.0.0";

inline constexpr int EXIT_OK = 0;
inline constexpr int EXIT_INPUT = 2;
inline constexpr int EXIT_NUMERIC = 3;

// ============================================================================
// Run configuration
// ============================================================================

struct RunConfig {
    PartialTurbineSpec turbine;
    EnvironmentConditions environment;
    WindGrid grid;
    std::size_t n_bands = DEFAULT_BAND_COUNT;
    CorrectionOrder order = CorrectionOrder::ShearThenTurbulence;
    std::string cp_model = std::string(DEFAULT_CP_MODEL);
    std::string output = "-";
};

/// Reference configuration used as the sweep baseline.
inline RunConfig reference_config() {
    RunConfig c;
    c.turbine.name = "reference";
    c.turbine.rotor_diameter = 80.0;
    c.turbine.rated_power = 2000.0;
    c.turbine.cut_in = 3.5;
    c.turbine.cut_out = 25.0;
    c.turbine.omega_min = 10.0;
    c.turbine.omega_max = 30.0;
    c.turbine.cp_max = 0.4615;
    c.cp_model = "Dai2016";
    return c;
}

inline constexpr double REFERENCE_HUB_HEIGHT = 60.0;

inline void overlay(PartialTurbineSpec &dst, const PartialTurbineSpec &src) {
    if (!src.name.empty()) dst.name = src.name;
    for (const char *f : io::detail::SPEC_FIELDS) {
        const auto m = io::detail::spec_member(f);
        if (src.*m) dst.*m = src.*m;
    }
}

inline PartialTurbineSpec load_spec_file(const std::string &path) {
    const auto text = io::read_file(path);
    if (fs::path(path).extension() == ".csv") {
        std::istringstream is(text);
        const auto specs = io::read_spec_csv(is);
        require(specs.size() == 1, ErrorCode::ParseError,
                "turbine CSV '" + path + "' must hold exactly one row here");
        return specs.front();
    }
    return io::spec_from_json(io::parse_json(text, path));
}

/// Keys written to the metadata sidecar that carry no configuration.
inline bool is_informational_key(const std::string &key) {
    return key == "version" || key == "defaults_report" || key == "lambda_opt" ||
           key == "raw_cp_at_opt" || key == "warnings";
}

/// Applies a JSON config (or a metadata sidecar) on top of cfg.
inline void apply_config_json(RunConfig &cfg, const json &j, const fs::path &base_dir) {
    require(j.is_object(), ErrorCode::ParseError, "config must be a JSON object");
    auto number = [](const json &v, const std::string &key) {
        require(v.is_number(), ErrorCode::ParseError, "config field '" + key + "' must be a number");
        return v.get<double>();
    };
    auto string = [](const json &v, const std::string &key) {
        require(v.is_string(), ErrorCode::ParseError, "config field '" + key + "' must be a string");
        return v.get<std::string>();
    };
    if (j.contains("spec_file")) {
        fs::path p = string(j["spec_file"], "spec_file");
        overlay(cfg.turbine, load_spec_file((p.is_absolute() ? p : base_dir / p).string()));
    }
    for (const auto &[key, value] : j.items()) {
        if (key == "spec_file" || is_informational_key(key)) {
            continue;
        } else if (key == "turbine") {
            overlay(cfg.turbine, io::spec_from_json(value));
        } else if (key == "environment") {
            require(value.is_object(), ErrorCode::ParseError, "environment must be an object");
            for (const auto &[k, v] : value.items()) {
                if (k == "ti") cfg.environment.ti = number(v, k);
                else if (k == "rho") cfg.environment.rho = number(v, k);
                else if (k == "shear_alpha") cfg.environment.shear_alpha = number(v, k);
                else if (k == "veer_rate") cfg.environment.veer_rate = number(v, k);
                else throw Error(ErrorCode::ParseError, "unknown environment field '" + k + "'");
            }
        } else if (key == "grid") {
            require(value.is_object(), ErrorCode::ParseError, "grid must be an object");
            for (const auto &[k, v] : value.items()) {
                if (k == "dv") cfg.grid.dv = number(v, k);
                else if (k == "v_max") cfg.grid.v_max = number(v, k);
                else throw Error(ErrorCode::ParseError, "unknown grid field '" + k + "'");
            }
        } else if (key == "n_bands") {
            const double n = number(value, key);
            require(n >= 1.0 && n == std::floor(n), ErrorCode::ParseError, "n_bands must be a positive integer");
            cfg.n_bands = static_cast<std::size_t>(n);
        } else if (key == "order") {
            cfg.order = parse_correction_order(string(value, key));
        } else if (key == "cp_model") {
            cfg.cp_model = string(value, key);
        } else if (key == "output") {
            cfg.output = string(value, key);
        } else {
            throw Error(ErrorCode::ParseError, "unknown config field '" + key + "'");
        }
    }
}

// ============================================================================
// Shared flags
// ============================================================================

/// Flags common to generate and sweep; only flags actually given override.
struct RunFlags {
    std::string config;
    std::string spec_file;
    std::string name;
    double diameter = 0, rated_power = 0, cut_in = 0, cut_out = 0;
    double omega_min = 0, omega_max = 0, cp_max = 0, hub_height = 0;
    double ti = 0, rho = 0, shear = 0, veer = 0, dv = 0, v_max = 0;
    std::size_t bands = 0;
    std::string order, cp_model, output, meta;
    std::map<std::string, CLI::Option *> opts;

    void attach(CLI::App &app) {
        opts["config"] = app.add_option("--config", config, "JSON run configuration");
        opts["spec"] = app.add_option("--spec", spec_file, "turbine spec file (.json or one-row .csv)");
        opts["name"] = app.add_option("--name", name, "turbine name");
        opts["diameter"] = app.add_option("--diameter", diameter, "rotor diameter [m]");
        opts["rated-power"] = app.add_option("--rated-power", rated_power, "rated power [kW]");
        opts["cut-in"] = app.add_option("--cut-in", cut_in, "cut-in wind speed [m/s]");
        opts["cut-out"] = app.add_option("--cut-out", cut_out, "cut-out wind speed [m/s]");
        opts["omega-min"] = app.add_option("--omega-min", omega_min, "minimum rotor speed [rpm]");
        opts["omega-max"] = app.add_option("--omega-max", omega_max, "maximum rotor speed [rpm]");
        opts["cp-max"] = app.add_option("--cp-max", cp_max, "peak power coefficient");
        opts["hub-height"] = app.add_option("--hub-height", hub_height, "hub height [m]");
        opts["ti"] = app.add_option("--ti", ti, "turbulence intensity as a fraction");
        opts["rho"] = app.add_option("--rho", rho, "air density [kg/m^3]");
        opts["shear"] = app.add_option("--shear", shear, "power-law shear exponent");
        opts["veer"] = app.add_option("--veer", veer, "wind veer [deg/m]");
        opts["dv"] = app.add_option("--dv", dv, "wind grid step [m/s]");
        opts["v-max"] = app.add_option("--v-max", v_max, "wind grid upper bound [m/s]");
        opts["bands"] = app.add_option("--bands", bands, "rotor bands for the equivalent wind speed");
        opts["order"] = app.add_option("--order", order, "shear_then_ti or ti_then_shear");
        opts["cp-model"] = app.add_option("--cp-model", cp_model, "Cp parameterisation name");
        opts["output"] = app.add_option("-o,--output", output, "output CSV path, '-' for stdout");
        opts["meta"] = app.add_option("--meta", meta, "metadata sidecar path");
    }

    bool given(const std::string &key) const { return opts.at(key)->count() > 0; }

    void apply(RunConfig &cfg) const {
        if (given("config")) {
            const fs::path p = config;
            apply_config_json(cfg, io::parse_json(io::read_file(config), config), p.parent_path());
        }
        if (given("spec")) overlay(cfg.turbine, load_spec_file(spec_file));
        auto &t = cfg.turbine;
        if (given("name")) t.name = name;
        if (given("diameter")) t.rotor_diameter = diameter;
        if (given("rated-power")) t.rated_power = rated_power;
        if (given("cut-in")) t.cut_in = cut_in;
        if (given("cut-out")) t.cut_out = cut_out;
        if (given("omega-min")) t.omega_min = omega_min;
        if (given("omega-max")) t.omega_max = omega_max;
        if (given("cp-max")) t.cp_max = cp_max;
        if (given("hub-height")) t.hub_height = hub_height;
        if (given("ti")) cfg.environment.ti = ti;
        if (given("rho")) cfg.environment.rho = rho;
        if (given("shear")) cfg.environment.shear_alpha = shear;
        if (given("veer")) cfg.environment.veer_rate = veer;
        if (given("dv")) cfg.grid.dv = dv;
        if (given("v-max")) cfg.grid.v_max = v_max;
        if (given("bands")) cfg.n_bands = bands;
        if (given("order")) cfg.order = parse_correction_order(order);
        if (given("cp-model")) cfg.cp_model = cp_model;
        if (given("output")) cfg.output = output;
    }
};

// ============================================================================
// Generation
// ============================================================================

struct Generated {
    PowerCurve curve;
    CompletedSpec completed;
    ScaledCpModel model;
    std::vector<std::string> warnings;
};

inline Generated generate_curve(const RunConfig &cfg) {
    auto completed = complete_spec(cfg.turbine);
    require(cfg.n_bands >= 1, ErrorCode::InvalidArgument, "band count must be >= 1");
    cfg.environment.validate();
    auto model = scale_cp(get_cp_model(cfg.cp_model), completed.spec.cp_max);
    SynthesisOptions opts{cfg.grid, cfg.n_bands, cfg.order};
    auto curve = synthesize(completed.spec, model, cfg.environment, opts);
    std::vector<std::string> warnings = completed.report.warnings;
    if (cfg.environment.rho_out_of_band()) {
        warnings.push_back("air density " + io::format_g6(cfg.environment.rho) +
                           " kg/m^3 outside the [0.9, 1.5] sanity band");
    }
    return {std::move(curve), std::move(completed), std::move(model), std::move(warnings)};
}

/// Sidecar: every resolved parameter, loadable again with --config.
inline json metadata_json(const RunConfig &cfg, const Generated &g) {
    return {{"version", VERSION},
            {"turbine", io::to_json(g.completed.spec)},
            {"environment", io::to_json(cfg.environment)},
            {"grid", {{"dv", cfg.grid.dv}, {"v_max", cfg.grid.v_max}}},
            {"n_bands", cfg.n_bands},
            {"order", std::string(to_string(cfg.order))},
            {"cp_model", cfg.cp_model},
            {"lambda_opt", g.model.lambda_opt()},
            {"raw_cp_at_opt", g.model.raw_cp_at_opt()},
            {"defaults_report", io::to_json(g.completed.report)},
            {"warnings", g.warnings}};
}

inline void write_text(const std::string &path, const std::string &text, std::ostream &out) {
    if (path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    require(static_cast<bool>(f), ErrorCode::InvalidArgument, "cannot write '" + path + "'");
    f << text;
}

// ============================================================================
// Sweeps
// ============================================================================

struct SweepRange {
    double lo;
    double hi;
};

inline const std::map<std::string, SweepRange> &reference_intervals() {
    static const std::map<std::string, SweepRange> m = {
        {"rotor_diameter", {40, 120}}, {"rated_power", {1500, 2500}}, {"cut_in", {0, 5}},
        {"cut_out", {20, 30}},         {"omega_min", {0, 15}},         {"omega_max", {15, 40}},
        {"cp_max", {0.3, 0.59}},       {"ti", {0, 0.15}},              {"rho", {1.15, 1.3}},
        {"shear_alpha", {0, 0.4}},     {"veer_rate", {0, 0.75}},
    };
    return m;
}

inline bool is_sweep_parameter(const std::string &p) {
    return p == "cp_parameterisation" || reference_intervals().count(p) > 0;
}

/// Sets one swept parameter; value is a number or a Cp model name.
inline void set_parameter(RunConfig &cfg, const std::string &param, const std::string &value) {
    if (param == "cp_parameterisation") {
        get_cp_model(value);
        cfg.cp_model = value;
        return;
    }
    const double v = io::parse_double(value, param);
    auto &t = cfg.turbine;
    if (param == "rotor_diameter") t.rotor_diameter = v;
    else if (param == "rated_power") t.rated_power = v;
    else if (param == "cut_in") t.cut_in = v;
    else if (param == "cut_out") t.cut_out = v;
    else if (param == "omega_min") t.omega_min = v;
    else if (param == "omega_max") t.omega_max = v;
    else if (param == "cp_max") t.cp_max = v;
    else if (param == "ti") cfg.environment.ti = v;
    else if (param == "rho") cfg.environment.rho = v;
    else if (param == "shear_alpha") cfg.environment.shear_alpha = v;
    else if (param == "veer_rate") cfg.environment.veer_rate = v;
    else throw Error(ErrorCode::UnknownParameter, "cannot sweep '" + param + "'");
}

// ============================================================================
// Entry point
// ============================================================================

inline int fail(std::ostream &err, const std::string &code, const std::string &message, int status) {
    err << json{{"error", code}, {"message", message}}.dump() << '\n';
    return status;
}

inline std::vector<std::string> split_list(const std::string &s) {
    std::vector<std::string> out;
    for (auto &cell : io::split_csv_line(s)) {
        if (!cell.empty()) out.push_back(cell);
    }
    return out;
}

inline int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Wind turbine power curve synthesis"};
    app.set_version_flag("--version", VERSION);
    app.require_subcommand(1);

    // generate
    RunFlags gen_flags;
    auto *gen = app.add_subcommand("generate", "synthesize a power curve");
    gen_flags.attach(*gen);

    // sweep
    RunFlags sweep_flags;
    std::string sweep_param, sweep_values, sweep_range;
    auto *sweep = app.add_subcommand("sweep", "vary one parameter around the reference turbine");
    sweep_flags.attach(*sweep);
    sweep->add_option("--param", sweep_param, "parameter to vary")->required();
    auto *values_opt = sweep->add_option("--values", sweep_values, "comma-separated values");
    auto *range_opt = sweep->add_option("--range", sweep_range, "min,max,count");
    values_opt->excludes(range_opt);

    // defaults
    RunFlags def_flags;
    auto *defaults = app.add_subcommand("defaults", "fill missing turbine characteristics");
    def_flags.attach(*defaults);

    // cp-table
    std::string table_model = "all", table_betas = "0,1,3,5";
    double lambda_min = 0.5, lambda_max = 15.0, lambda_step = 0.1, table_cp_max = 0.0;
    bool registry_only = false;
    std::string table_output = "-";
    auto *cp_table = app.add_subcommand("cp-table", "tabulate Cp against tip-speed ratio");
    cp_table->add_option("--model", table_model, "parameterisation name or 'all'");
    cp_table->add_option("--betas", table_betas, "pitch angles [deg]");
    cp_table->add_option("--lambda-min", lambda_min);
    cp_table->add_option("--lambda-max", lambda_max);
    cp_table->add_option("--step", lambda_step);
    auto *scaled_opt = cp_table->add_option("--cp-max", table_cp_max, "rescale each model to this peak");
    cp_table->add_flag("--registry-json", registry_only, "print the coefficient registry as JSON");
    cp_table->add_option("-o,--output", table_output);

    // validate
    std::string input_dir, report_path, summary_path, ti_grid_str;
    double val_rho = 1.225;
    std::string val_cp_model = std::string(DEFAULT_CP_MODEL);
    auto *validate = app.add_subcommand("validate", "score manufacturer curves against the model");
    validate->add_option("--input", input_dir, "directory of <name>.csv + <name>.json pairs")->required();
    validate->add_option("--report", report_path, "JSON report path, '-' for stdout");
    validate->add_option("--summary", summary_path, "summary CSV path, '-' for stdout");
    validate->add_option("--ti-grid", ti_grid_str, "comma-separated turbulence intensities");
    validate->add_option("--rho", val_rho);
    validate->add_option("--cp-model", val_cp_model);

    std::vector<std::string> argv_store;
    argv_store.reserve(args.size() + 1);
    argv_store.emplace_back("wtpc");
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char *> argv;
    for (const auto &a : argv_store) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return EXIT_OK;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help();
        return EXIT_OK;
    } catch (const CLI::CallForVersion &) {
        out << VERSION << '\n';
        return EXIT_OK;
    } catch (const CLI::ParseError &e) {
        return fail(err, "UsageError", e.what(), EXIT_INPUT);
    }

    try {
        if (gen->parsed()) {
            RunConfig cfg;
            gen_flags.apply(cfg);
            const auto g = generate_curve(cfg);
            for (const auto &w : g.warnings) err << "warning: " << w << '\n';
            std::ostringstream csv;
            io::write_curve_csv(csv, g.curve);
            write_text(cfg.output, csv.str(), out);
            std::string meta_path = gen_flags.given("meta") ? gen_flags.meta
                                    : cfg.output == "-"     ? std::string()
                                                            : cfg.output + ".meta.json";
            if (!meta_path.empty()) {
                write_text(meta_path, metadata_json(cfg, g).dump(2) + "\n", out);
            }
            return EXIT_OK;
        }

        if (sweep->parsed()) {
            require(is_sweep_parameter(sweep_param), ErrorCode::UnknownParameter,
                    "cannot sweep '" + sweep_param + "'");
            RunConfig base = reference_config();
            sweep_flags.apply(base);
            if ((sweep_param == "shear_alpha" || sweep_param == "veer_rate") && !base.turbine.hub_height) {
                base.turbine.hub_height = REFERENCE_HUB_HEIGHT;
            }

            std::vector<std::string> values;
            if (values_opt->count()) {
                values = split_list(sweep_values);
            } else if (range_opt->count()) {
                require(sweep_param != "cp_parameterisation", ErrorCode::InvalidArgument,
                        "cp_parameterisation takes --values");
                const auto parts = split_list(sweep_range);
                require(parts.size() == 3, ErrorCode::InvalidArgument, "--range expects min,max,count");
                const double lo = io::parse_double(parts[0], "range min");
                const double hi = io::parse_double(parts[1], "range max");
                const double count = io::parse_double(parts[2], "range count");
                require(count >= 1 && count == std::floor(count), ErrorCode::InvalidArgument,
                        "range count must be a positive integer");
                const auto n = static_cast<std::size_t>(count);
                for (std::size_t i = 0; i < n; ++i) {
                    const double v = n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
                    values.push_back(io::format_g6(v));
                }
            } else if (sweep_param == "cp_parameterisation") {
                for (const auto &p : cp_registry()) values.push_back(p.name);
            } else {
                throw Error(ErrorCode::InvalidArgument, "sweep needs --values or --range");
            }
            require(!values.empty(), ErrorCode::InvalidArgument, "sweep has no values");

            std::ostringstream csv;
            csv << "param_value,wind_speed_ms,power_kw\n";
            for (const auto &value : values) {
                RunConfig cfg = base;
                set_parameter(cfg, sweep_param, value);
                if (auto it = reference_intervals().find(sweep_param); it != reference_intervals().end()) {
                    const double v = io::parse_double(value, sweep_param);
                    if (v < it->second.lo || v > it->second.hi) {
                        err << "warning: " << sweep_param << "=" << value
                            << " outside the reference interval [" << io::format_g6(it->second.lo) << ", "
                            << io::format_g6(it->second.hi) << "]\n";
                    }
                }
                const auto g = generate_curve(cfg);
                const std::string label = sweep_param == "cp_parameterisation"
                                              ? value
                                              : io::format_g6(io::parse_double(value, sweep_param));
                for (std::size_t i = 0; i < g.curve.power.size(); ++i) {
                    csv << label << ',' << io::format_g6(g.curve.grid.at(i)) << ','
                        << io::format_g6(g.curve.power[i]) << '\n';
                }
            }
            write_text(base.output, csv.str(), out);
            return EXIT_OK;
        }

        if (defaults->parsed()) {
            RunConfig cfg;
            def_flags.apply(cfg);
            const auto completed = complete_spec(cfg.turbine);
            const json j = {{"spec", io::to_json(completed.spec)},
                            {"defaults_report", io::to_json(completed.report)}};
            write_text(cfg.output, j.dump(2) + "\n", out);
            return EXIT_OK;
        }

        if (cp_table->parsed()) {
            if (registry_only) {
                write_text(table_output, io::registry_json().dump(2) + "\n", out);
                return EXIT_OK;
            }
            require(lambda_step > 0 && lambda_min > 0 && lambda_max >= lambda_min, ErrorCode::InvalidArgument,
                    "need 0 < lambda-min <= lambda-max and step > 0");
            std::vector<CpParameterisation> models;
            if (table_model == "all") {
                models = cp_registry();
            } else {
                models.push_back(get_cp_model(table_model));
            }
            std::vector<double> betas;
            for (const auto &b : split_list(table_betas)) betas.push_back(io::parse_double(b, "beta"));

            std::ostringstream csv;
            csv << "model,beta_deg,lambda,cp\n";
            const auto steps = static_cast<std::size_t>(std::floor((lambda_max - lambda_min) / lambda_step + 1e-9));
            for (const auto &p : models) {
                const double factor = scaled_opt->count() ? scale_cp(p, table_cp_max).scale_factor() : 1.0;
                for (double beta : betas) {
                    require(beta >= 0.0, ErrorCode::InvalidArgument, "pitch angles must be >= 0");
                    for (std::size_t i = 0; i <= steps; ++i) {
                        const double lambda = lambda_min + static_cast<double>(i) * lambda_step;
                        csv << p.name << ',' << io::format_g6(beta) << ',' << io::format_g6(lambda) << ','
                            << io::format_g6(cp_or_zero(lambda, beta, p) * factor) << '\n';
                    }
                }
            }
            write_text(table_output, csv.str(), out);
            return EXIT_OK;
        }

        if (validate->parsed()) {
            std::vector<double> ti_grid = default_ti_grid();
            if (!ti_grid_str.empty()) {
                ti_grid.clear();
                for (const auto &t : split_list(ti_grid_str)) ti_grid.push_back(io::parse_double(t, "ti"));
            }
            require(fs::is_directory(input_dir), ErrorCode::InvalidArgument,
                    "'" + input_dir + "' is not a directory");
            std::vector<fs::path> curves;
            for (const auto &e : fs::directory_iterator(input_dir)) {
                if (e.is_regular_file() && e.path().extension() == ".csv") curves.push_back(e.path());
            }
            MatchOptions opts;
            opts.rho = val_rho;
            opts.cp_model = val_cp_model;
            std::vector<ValidationEntry> entries;
            for (const auto &csv_path : curves) {
                auto spec_path = csv_path;
                spec_path.replace_extension(".json");
                if (!fs::exists(spec_path)) {
                    err << "warning: skipping " << csv_path.filename().string() << " (no spec JSON)\n";
                    continue;
                }
                MeasuredCurve m;
                m.turbine = io::spec_from_json(io::parse_json(io::read_file(spec_path.string()), spec_path.string()));
                if (m.turbine.name.empty()) m.turbine.name = csv_path.stem().string();
                std::ifstream in(csv_path);
                m.samples = io::read_curve_csv(in);
                try {
                    entries.push_back(match_over_ti(m, ti_grid, opts));
                } catch (const Error &e) {
                    throw Error(e.code(), m.turbine.name + ": " + e.what());
                }
            }
            std::sort(entries.begin(), entries.end(),
                      [](const auto &a, const auto &b) { return a.name < b.name; });

            if (report_path.empty() && summary_path.empty()) summary_path = "-";
            if (!report_path.empty()) {
                json arr = json::array();
                for (const auto &e : entries) arr.push_back(io::to_json(e));
                write_text(report_path, json{{"version", VERSION}, {"entries", arr}}.dump(2) + "\n", out);
            }
            if (!summary_path.empty()) {
                std::ostringstream csv;
                io::write_summary_csv(csv, entries);
                write_text(summary_path, csv.str(), out);
            }
            return EXIT_OK;
        }
    } catch (const Error &e) {
        return fail(err, std::string(to_string(e.code())), e.what(),
                    is_numeric_failure(e.code()) ? EXIT_NUMERIC : EXIT_INPUT);
    } catch (const std::exception &e) {
        return fail(err, "InternalError", e.what(), EXIT_NUMERIC);
    }
    return EXIT_INPUT;
}

} // namespace wtpc::cli

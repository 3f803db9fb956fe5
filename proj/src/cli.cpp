#include "polarix/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "polarix/control.hpp"
#include "polarix/io.hpp"
#include "polarix/parse.hpp"
#include "polarix/presets.hpp"

namespace polarix::cli {

namespace {

// Display only: values within rounding noise of zero print as 0.
std::string short_number(double v) {
    if (std::abs(v) < 1e-12) v = 0.0;
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
    return std::string(buf, ec == std::errc{} ? ptr : buf);
}

std::string complex_text(Complex z) {
    const double im = z.imag() == 0.0 ? 0.0 : z.imag();
    return short_number(z.real()) + (std::signbit(im) ? "-" : "+") + short_number(std::abs(im)) + "i";
}

std::string jones_text(const JonesState& s) {
    return "[" + complex_text(s.a) + ", " + complex_text(s.b) + "]";
}

std::string angle_text(double rad) {
    return short_number(rad) + " rad (" + short_number(rad * 180.0 / kPi) + " deg)";
}

std::string alpha_text(Alpha a) { return a.is_resonant() ? "resonant" : short_number(a.value()); }

std::vector<double> parse_list(std::string_view text, std::string_view what) {
    std::vector<double> out;
    for (auto item : split(text, ',')) out.push_back(parse_double(item, what));
    return out;
}

/// Options shared by every subcommand.
struct Common {
    std::string config_file;
    std::string out_dir = ".";
    std::string format = "both";
    std::optional<unsigned> threads;
    std::optional<int> points;
    bool stamp = false;
};

struct Invocation {
    Common common;
    std::map<std::string, std::string> flags;
};

void add_common(CLI::App* sub, Common& c, bool writes_files) {
    sub->add_option("--config", c.config_file, "key = value configuration file");
    sub->add_option("--threads", c.threads, "worker cap (falls back to POLARIX_THREADS)");
    if (writes_files) {
        sub->add_option("--out", c.out_dir, "output directory")->capture_default_str();
        sub->add_option("--format", c.format, "csv | json | both")->capture_default_str();
        sub->add_option("--points", c.points, "points per continuous axis (presets)");
        sub->add_flag("--stamp", c.stamp, "record a timestamp in the JSON metadata");
    }
}

void add_key(CLI::App* sub, Invocation& inv, const std::string& flag, const std::string& key,
             const std::string& help) {
    sub->add_option_function<std::string>(
        flag, [&inv, key](const std::string& v) { inv.flags[key] = v; }, help);
}

void add_geometry_keys(CLI::App* sub, Invocation& inv) {
    add_key(sub, inv, "--a", "a", "waveguide width (length unit)");
    add_key(sub, inv, "--b", "b", "waveguide height in units of a");
    add_key(sub, inv, "--x", "x", "emitter x position (default a/2)");
    add_key(sub, inv, "--y", "y", "emitter y position (default b/2)");
    add_key(sub, inv, "--d", "d", "emitter-mirror separation in units of a");
    add_key(sub, inv, "--d-lambda", "d_lambda", "emitter-mirror separation in units of lambda_Bz");
    add_key(sub, inv, "--r-m", "r_m", "reflection coefficient of both mirrors (re or re,im)");
    add_key(sub, inv, "--r-am", "r_am", "mode-A mirror reflection (re or re,im)");
    add_key(sub, inv, "--r-bm", "r_bm", "mode-B mirror reflection (re or re,im)");
    add_key(sub, inv, "--k", "k", "free wavenumber in units of pi/a");
    sub->add_flag_function(
        "--gv-correction", [&inv](std::int64_t) { inv.flags["gv_correction"] = "true"; },
        "scale Gamma_A by the group-velocity ratio when a != b");
}

unsigned thread_count(const Common& c) {
    if (c.threads) return *c.threads;
    if (const char* env = std::getenv("POLARIX_THREADS")) {
        const double v = parse_double(env, "POLARIX_THREADS");
        if (v < 0 || v != std::floor(v)) throw InvalidArgument("POLARIX_THREADS must be a non-negative integer");
        return static_cast<unsigned>(v);
    }
    return 0;
}

RunConfig resolve(const Invocation& inv, const std::map<std::string, std::string>& layer = {}) {
    RunConfig cfg;
    if (!inv.common.config_file.empty()) cfg.overlay_file(inv.common.config_file);
    for (const auto& [k, v] : layer) cfg.set(k, v);
    for (const auto& [k, v] : inv.flags) cfg.set(k, v);
    return cfg;
}

nlohmann::json run_metadata(const std::string& command, const RunConfig& cfg, const Common& c) {
    nlohmann::json j{{"command", command}, {"settings", cfg.to_json()}};
    if (c.points) j["points"] = *c.points;
    if (c.stamp) {
        const auto now = std::chrono::system_clock::now();
        j["stamp"] = std::chrono::duration_cast<std::chrono::seconds>(now.time_since_epoch()).count();
    }
    return j;
}

void report_written(std::ostream& out, const std::vector<std::filesystem::path>& paths) {
    for (const auto& p : paths) out << "wrote " << p.string() << '\n';
}

int cmd_scatter(const Invocation& inv, bool json, std::ostream& out) {
    const RunConfig cfg = resolve(inv);
    const Model model = cfg.model(Model::Full);
    const EmitterConfig em = cfg.emitter();
    const DriveConfig drive = cfg.drive();
    const JonesState input = parse_state(cfg.has("input") ? cfg.get("input") : "H");

    ScatteringMatrix s;
    if (model == Model::Ideal) {
        s = ideal_scattering_matrix(em, drive.alpha);
    } else {
        s = full_scattering(cfg.geometry(), em, drive).matrix;
    }
    const JonesState output = scatter(s, input);
    const auto stokes = stokes_from_jones(output);
    const auto angles = ellipse_angles(stokes);
    std::optional<double> fid;
    if (cfg.has("target")) fid = fidelity(output, parse_state(cfg.get("target")));

    if (json) {
        nlohmann::json doc{{"settings", cfg.to_json()},
                           {"model", to_string(model)},
                           {"alpha", to_json(drive.alpha)},
                           {"output", to_json(output)},
                           {"stokes", {stokes.s1, stokes.s2, stokes.s3}},
                           {"eta", angles.eta},
                           {"chi", angles.chi},
                           {"dissipation", dissipation_probability(output)}};
        if (fid) doc["fidelity"] = *fid;
        out << doc.dump(2) << '\n';
        return kOk;
    }
    for (const auto& [k, v] : cfg.values) out << "# " << k << " = " << v << '\n';
    out << "model: " << to_string(model) << '\n';
    out << "alpha: " << alpha_text(drive.alpha) << '\n';
    out << "input: " << jones_text(input) << '\n';
    out << "output: " << jones_text(output) << '\n';
    out << "stokes: " << short_number(stokes.s1) << ' ' << short_number(stokes.s2) << ' '
        << short_number(stokes.s3) << '\n';
    out << "eta: " << angle_text(angles.eta) << '\n';
    out << "chi: " << angle_text(angles.chi) << '\n';
    out << "dissipation: " << short_number(dissipation_probability(output)) << '\n';
    if (fid) out << "fidelity: " << short_number(*fid) << '\n';
    return kOk;
}

int cmd_solve(const Invocation& inv, std::ostream& out) {
    const RunConfig cfg = resolve(inv);
    if (!cfg.has("target")) throw InvalidArgument("solve needs --output (target state)");
    const JonesState input = parse_state(cfg.has("input") ? cfg.get("input") : "H");
    const JonesState target = parse_state(cfg.get("target"));
    const auto branches = solve_controls(input, target);
    const bool detuned = cfg.has("delta_ge") || cfg.has("delta_es");
    if (detuned && !(cfg.has("delta_ge") && cfg.has("delta_es"))) {
        throw InvalidArgument("give both --delta-ge and --delta-es");
    }
    for (const auto& [k, v] : cfg.values) out << "# " << k << " = " << v << '\n';
    int feasible = 0;
    std::string last_error;
    for (const auto* sol : {&branches.first, &branches.second}) {
        out << "branch" << sol->branch << ": alpha=" << alpha_text(sol->alpha)
            << " theta=" << short_number(sol->theta * 180.0 / kPi) << "deg"
            << " (" << short_number(sol->theta) << " rad)"
            << " xi_co=" << short_number(sol->xi_co) << " rad\n";
        if (detuned) {
            const double ge = parse_double(cfg.get("delta_ge"), "delta_ge");
            const double es = parse_double(cfg.get("delta_es"), "delta_es");
            try {
                const auto drive = realize_drive(*sol, ge, es);
                if (drive.omega_rabi) {
                    out << "  omega=" << short_number(*drive.omega_rabi)
                        << " alpha_check=" << alpha_text(drive.alpha_check) << '\n';
                } else {
                    out << "  omega=any>0 delta_es=" << short_number(drive.delta_es)
                        << " (two-photon resonance)\n";
                }
                ++feasible;
            } catch (const InfeasibleDrive& e) {
                out << "  omega=infeasible (" << e.what() << ")\n";
                last_error = e.what();
            }
        }
    }
    if (detuned && feasible == 0) throw InfeasibleDrive(last_error);
    return kOk;
}

int write_result(const std::string& command, const std::string& name,
                 const std::vector<SweepResult>& parts, const RunConfig& cfg, const Common& c,
                 std::ostream& out, bool preset_column = true) {
    const auto paths = write_outputs(c.out_dir, parts, name, parse_format(c.format),
                                     run_metadata(command, cfg, c), preset_column);
    report_written(out, paths);
    return kOk;
}

PresetOptions preset_options(const Common& c) { return {thread_count(c), c.points}; }

struct DriveArgs {
    std::vector<std::string> conditions;
    std::string delta_ge_list;
    double es_min = -10.0;
    double es_max = 10.0;
    std::optional<int> es_count;
};

int cmd_drive(const Invocation& inv, const DriveArgs& args, std::ostream& out) {
    const RunConfig cfg = resolve(inv);
    if (args.conditions.empty() && args.delta_ge_list.empty()) {
        const auto preset = drive_preset(preset_options(inv.common));
        return write_result("drive", preset.name, preset.parts, cfg, inv.common, out);
    }
    if (args.conditions.empty() || args.delta_ge_list.empty()) {
        throw InvalidArgument("custom drive curves need both --alpha-condition and --delta-ge");
    }
    const int count = args.es_count.value_or(inv.common.points.value_or(201));
    const auto es = SweepAxis::linspace("delta_es", args.es_min, args.es_max, count).values;
    const auto ge = parse_list(args.delta_ge_list, "delta_ge");
    std::vector<SweepResult> parts;
    for (const auto& c : args.conditions) parts.push_back(drive_curves(parse_double(c, "alpha condition"), ge, es));
    return write_result("drive", "drive", parts, cfg, inv.common, out);
}

struct PoincareArgs {
    std::string preset;
    std::string theta;
    double alpha_min = -10.0;
    double alpha_max = 10.0;
    std::optional<int> count;
};

int cmd_poincare(const Invocation& inv, const PoincareArgs& args, std::ostream& out) {
    const RunConfig cfg = resolve(inv);
    if (args.theta.empty()) {
        const auto preset = poincare_preset(args.preset.empty() ? "fig2d" : args.preset,
                                            preset_options(inv.common));
        return write_result("poincare", preset.name, preset.parts, cfg, inv.common, out);
    }
    if (!args.preset.empty()) throw InvalidArgument("give either --preset or --theta, not both");
    const int count = args.count.value_or(inv.common.points.value_or(201));
    const auto alphas = SweepAxis::linspace("alpha", args.alpha_min, args.alpha_max, count).values;
    const auto result = poincare_trajectory(parse_angle(args.theta, "theta"), alphas);
    return write_result("poincare", "poincare", {result}, cfg, inv.common, out);
}

struct ModesArgs {
    std::string phase_diff = "90deg";
    std::optional<int> nx;
    std::optional<int> ny;
};

int cmd_modes(const Invocation& inv, const ModesArgs& args, std::ostream& out) {
    const RunConfig cfg = resolve(inv);
    const GeometryConfig geom = cfg.geometry();
    const int fallback = inv.common.points.value_or(101);
    const auto result = mode_map(geom, parse_angle(args.phase_diff, "phase difference"),
                                 args.nx.value_or(fallback), args.ny.value_or(fallback));
    return write_result("modes", "figS1", {result}, cfg, inv.common, out, false);
}

Alpha alpha_from_json(const nlohmann::json& j) {
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "resonant") return Alpha::resonant();
        return Alpha::finite(parse_double(s, "alpha"));
    }
    return Alpha::finite(j.get<double>());
}

double angle_from_json(const nlohmann::json& j) {
    return j.is_string() ? parse_angle(j.get<std::string>(), "theta") : j.get<double>();
}

std::string text_value(const nlohmann::json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_boolean()) return j.get<bool>() ? "true" : "false";
    if (j.is_number()) return format_double(j.get<double>());
    throw InvalidArgument("config values must be strings, numbers or booleans");
}

int cmd_custom_sweep(const Invocation& inv, const std::string& path, std::ostream& out) {
    std::ifstream is(path);
    if (!is) throw InvalidArgument("cannot open sweep spec '" + path + "'");
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(is);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument("sweep spec '" + path + "' is not valid JSON: " + e.what());
    }
    try {
        std::map<std::string, std::string> fixed;
        const auto fixed_json = doc.value("fixed", nlohmann::json::object());
        for (const auto& [k, v] : fixed_json.items()) fixed[k] = text_value(v);
        const RunConfig cfg = resolve(inv, fixed);

        SweepSpec spec;
        spec.name = doc.value("name", std::string("custom"));
        spec.base.geom = cfg.geometry();
        spec.base.gamma_e = cfg.emitter().gamma_e;
        spec.base.model = cfg.model(parse_model(doc.value("model", std::string("full"))));
        if (cfg.has("delta_ge")) spec.base.delta_ge = parse_double(cfg.get("delta_ge"), "delta_ge");
        if (cfg.has("delta_es")) spec.base.delta_es = parse_double(cfg.get("delta_es"), "delta_es");
        for (const auto& a : doc.at("axes")) {
            const auto param = a.at("param").get<std::string>();
            if (a.contains("values")) {
                spec.axes.push_back(SweepAxis::list(param, a.at("values").get<std::vector<double>>()));
            } else {
                spec.axes.push_back(SweepAxis::linspace(param, a.at("min").get<double>(), a.at("max").get<double>(),
                                                        a.at("count").get<int>()));
            }
        }
        for (const auto& c : doc.at("conversions")) {
            const JonesState input = parse_state(c.at("input").get<std::string>());
            const bool has_target = c.contains("target") && !c.at("target").is_null();
            const std::string label = c.value("label", std::string("c") + std::to_string(spec.conversions.size()));
            if (has_target && !c.contains("theta") && !c.contains("alpha")) {
                spec.conversions.push_back(
                    Conversion::designed(label, input, parse_state(c.at("target").get<std::string>())));
                continue;
            }
            Conversion conv{label, input, std::nullopt, kPi / 4.0, Alpha::finite(0.0)};
            if (has_target) conv.target = parse_state(c.at("target").get<std::string>());
            if (c.contains("theta")) conv.theta = angle_from_json(c.at("theta"));
            if (c.contains("alpha")) conv.alpha = alpha_from_json(c.at("alpha"));
            spec.conversions.push_back(conv);
        }
        spec.metrics = doc.value("metrics", std::vector<std::string>{"fidelity"});
        const auto result = run_sweep(spec, thread_count(inv.common));
        return write_result("sweep", spec.name, {result}, cfg, inv.common, out);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument("malformed sweep spec '" + path + "': " + e.what());
    }
}

int cmd_sweep(const Invocation& inv, const std::string& preset, const std::string& spec_file,
              std::ostream& out) {
    if (preset == "custom") {
        if (spec_file.empty()) throw InvalidArgument("sweep custom needs a spec file");
        return cmd_custom_sweep(inv, spec_file, out);
    }
    const auto& names = sweep_preset_names();
    if (std::find(names.begin(), names.end(), preset) == names.end()) {
        std::string list;
        for (const auto& n : names) list += " " + n;
        throw InvalidArgument("unknown preset '" + preset + "' (available:" + list + ", custom)");
    }
    const RunConfig cfg = resolve(inv);
    int status = kOk;
    for (const auto& output : run_sweep_preset(preset, preset_options(inv.common))) {
        status = write_result("sweep", output.name, output.parts, cfg, inv.common, out);
    }
    return status;
}

}  // namespace

const std::vector<std::string>& config_keys() {
    static const std::vector<std::string> keys{
        "a",     "b",       "x",     "y",        "d",        "d_lambda", "r_am",  "r_bm",  "r_m",
        "k",     "theta",   "gamma_e", "alpha",  "omega",    "delta_ge", "delta_es", "input", "target",
        "model", "gv_correction"};
    return keys;
}

const std::string& RunConfig::get(const std::string& key) const {
    const auto it = values.find(key);
    if (it == values.end()) throw InvalidArgument("missing setting '" + key + "'");
    return it->second;
}

void RunConfig::set(const std::string& key, const std::string& value) {
    const auto& keys = config_keys();
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
        throw InvalidArgument("unknown configuration key '" + key + "'");
    }
    values[key] = std::string(trim(value));
}

void RunConfig::overlay_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw InvalidArgument("cannot open config file '" + path + "'");
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::string_view view = line;
        if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
        view = trim(view);
        if (view.empty()) continue;
        const auto eq = view.find('=');
        if (eq == std::string_view::npos) {
            throw InvalidArgument(path + ":" + std::to_string(lineno) + ": expected key = value");
        }
        set(std::string(trim(view.substr(0, eq))), std::string(trim(view.substr(eq + 1))));
    }
}

Complex parse_complex(std::string_view text, std::string_view what) {
    const auto parts = split(text, ',');
    if (parts.size() == 1) return {parse_double(parts[0], what), 0.0};
    if (parts.size() == 2) return {parse_double(parts[0], what), parse_double(parts[1], what)};
    throw InvalidArgument("expected re or re,im for " + std::string(what));
}

GeometryConfig RunConfig::geometry() const {
    GeometryConfig g;
    auto number = [&](const char* key, double& target) {
        if (has(key)) target = parse_double(get(key), key);
    };
    number("a", g.a);
    number("b", g.b);
    number("k", g.k_over_pi);
    g.x = g.a / 2.0;
    g.y = g.b / 2.0;
    number("x", g.x);
    number("y", g.y);
    if (has("d") && has("d_lambda")) throw InvalidArgument("give either d or d_lambda, not both");
    if (has("d")) {
        g.d = parse_double(get("d"), "d");
    } else {
        g.d = (has("d_lambda") ? parse_double(get("d_lambda"), "d_lambda") : 0.75) * lambda_bz(g);
    }
    if (has("r_m")) g.r_am = g.r_bm = parse_complex(get("r_m"), "r_m");
    if (has("r_am")) g.r_am = parse_complex(get("r_am"), "r_am");
    if (has("r_bm")) g.r_bm = parse_complex(get("r_bm"), "r_bm");
    if (has("gv_correction")) {
        const auto& v = get("gv_correction");
        if (v != "true" && v != "false") throw InvalidArgument("gv_correction must be true or false");
        g.group_velocity_correction = v == "true";
    }
    g.validate();
    return g;
}

EmitterConfig RunConfig::emitter() const {
    EmitterConfig em;
    if (has("theta")) em.theta = parse_angle(get("theta"), "theta");
    if (has("gamma_e")) em.gamma_e = parse_double(get("gamma_e"), "gamma_e");
    em.validate();
    return em;
}

DriveConfig RunConfig::drive() const {
    const bool fields = has("omega");
    if (fields && has("alpha")) throw InvalidArgument("give either alpha or omega/delta_ge/delta_es, not both");
    if (fields) {
        if (!has("delta_ge") || !has("delta_es")) throw InvalidArgument("omega needs delta_ge and delta_es");
        return DriveConfig::from_fields({parse_double(get("omega"), "omega"), parse_double(get("delta_ge"), "delta_ge"),
                                         parse_double(get("delta_es"), "delta_es")});
    }
    if (!has("alpha")) return DriveConfig::from_alpha(Alpha::finite(0.0));
    const auto& text = get("alpha");
    if (text == "resonant" || text == "inf") return DriveConfig::from_alpha(Alpha::resonant());
    return DriveConfig::from_alpha(Alpha::finite(parse_double(text, "alpha")));
}

Model RunConfig::model(Model fallback) const { return has("model") ? parse_model(get("model")) : fallback; }

nlohmann::json RunConfig::to_json() const {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [k, v] : values) j[k] = v;
    return j;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Single-photon polarization converter: scattering, inverse design and figure sweeps",
                 "polarix"};
    app.require_subcommand(1);

    Invocation inv;

    auto* scatter_cmd = app.add_subcommand("scatter", "scatter one input state and report the output");
    add_common(scatter_cmd, inv.common, false);
    add_geometry_keys(scatter_cmd, inv);
    add_key(scatter_cmd, inv, "--input", "input", "input state (H V L R D linear:<deg> jones:..)");
    add_key(scatter_cmd, inv, "--target", "target", "target state for the fidelity");
    add_key(scatter_cmd, inv, "--theta", "theta", "dipole angle (deg/rad suffix)");
    add_key(scatter_cmd, inv, "--alpha", "alpha", "drive parameter in Gamma0, or 'resonant'");
    add_key(scatter_cmd, inv, "--omega", "omega", "Rabi frequency (with --delta-ge/--delta-es)");
    add_key(scatter_cmd, inv, "--delta-ge", "delta_ge", "photon detuning Delta_ge");
    add_key(scatter_cmd, inv, "--delta-es", "delta_es", "control detuning Delta_es");
    add_key(scatter_cmd, inv, "--gamma-e", "gamma_e", "external dissipation rate");
    add_key(scatter_cmd, inv, "--model", "model", "ideal | full (default full)");
    bool scatter_json = false;
    scatter_cmd->add_flag("--json", scatter_json, "print a JSON document");

    auto* solve_cmd = app.add_subcommand("solve", "control parameters converting --input into --output");
    add_common(solve_cmd, inv.common, false);
    add_key(solve_cmd, inv, "--input", "input", "input state");
    add_key(solve_cmd, inv, "--output", "target", "target state");
    add_key(solve_cmd, inv, "--delta-ge", "delta_ge", "photon detuning for the Omega realization");
    add_key(solve_cmd, inv, "--delta-es", "delta_es", "control detuning for the Omega realization");

    DriveArgs drive_args;
    auto* drive_cmd = app.add_subcommand("drive", "Omega(Delta_es) curves (figS3 by default)");
    add_common(drive_cmd, inv.common, true);
    drive_cmd->add_option("--alpha-condition", drive_args.conditions, "alpha to hold fixed (repeatable)");
    drive_cmd->add_option("--delta-ge", drive_args.delta_ge_list, "comma-separated Delta_ge values");
    drive_cmd->add_option("--delta-es-min", drive_args.es_min)->capture_default_str();
    drive_cmd->add_option("--delta-es-max", drive_args.es_max)->capture_default_str();
    drive_cmd->add_option("--delta-es-count", drive_args.es_count);

    PoincareArgs poincare_args;
    auto* poincare_cmd = app.add_subcommand("poincare", "Poincare-sphere trajectories (fig2c, fig2d)");
    add_common(poincare_cmd, inv.common, true);
    poincare_cmd->add_option("--preset", poincare_args.preset, "fig2c | fig2d");
    poincare_cmd->add_option("--theta", poincare_args.theta, "custom trajectory: dipole angle");
    poincare_cmd->add_option("--alpha-min", poincare_args.alpha_min)->capture_default_str();
    poincare_cmd->add_option("--alpha-max", poincare_args.alpha_max)->capture_default_str();
    poincare_cmd->add_option("--count", poincare_args.count);

    std::string sweep_preset;
    std::string sweep_spec_file;
    auto* sweep_cmd = app.add_subcommand("sweep", "figure sweeps: fig3a fig3b fig3c figS2 figS4-figS8, or custom <spec.json>");
    add_common(sweep_cmd, inv.common, true);
    sweep_cmd->add_option("preset", sweep_preset, "preset name or 'custom'")->required();
    sweep_cmd->add_option("spec", sweep_spec_file, "JSON sweep spec (custom only)");

    ModesArgs modes_args;
    auto* modes_cmd = app.add_subcommand("modes", "cross-section polarization map (figS1)");
    add_common(modes_cmd, inv.common, true);
    add_geometry_keys(modes_cmd, inv);
    modes_cmd->add_option("--phase-diff", modes_args.phase_diff, "phase of TE10 relative to TE01")->capture_default_str();
    modes_cmd->add_option("--nx", modes_args.nx);
    modes_cmd->add_option("--ny", modes_args.ny);

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (scatter_cmd->parsed()) return cmd_scatter(inv, scatter_json, out);
        if (solve_cmd->parsed()) return cmd_solve(inv, out);
        if (drive_cmd->parsed()) return cmd_drive(inv, drive_args, out);
        if (poincare_cmd->parsed()) return cmd_poincare(inv, poincare_args, out);
        if (sweep_cmd->parsed()) return cmd_sweep(inv, sweep_preset, sweep_spec_file, out);
        if (modes_cmd->parsed()) return cmd_modes(inv, modes_args, out);
    } catch (const PhysicsError& e) {
        err << "error: " << e.what() << '\n';
        return kPhysics;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace polarix::cli

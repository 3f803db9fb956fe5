#include "polarix/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <set>
#include <sstream>
#include <thread>

#include "polarix/parse.hpp"

namespace polarix {

namespace {

constexpr double kMissing = std::numeric_limits<double>::quiet_NaN();

bool contains(const std::vector<std::string>& names, std::string_view name) {
    return std::find(names.begin(), names.end(), name) != names.end();
}

struct PointState {
    Scenario scenario;
    std::vector<Conversion> conversions;
};

void apply_param(const std::string& param, double value, PointState& pt) {
    auto& g = pt.scenario.geom;
    if (param == "x") {
        g.x = value;
    } else if (param == "y") {
        g.y = value;
    } else if (param == "d") {
        g.d = value;
    } else if (param == "d_lambda") {
        g.d = value * lambda_bz(g);
    } else if (param == "delta_ba") {
        const double b = g.a + value;
        g.y *= b / g.b;
        g.b = b;
    } else if (param == "r_m") {
        g.r_am = g.r_bm = value;
    } else if (param == "r_am") {
        g.r_am = value;
    } else if (param == "r_bm") {
        g.r_bm = value;
    } else if (param == "k") {
        g.k_over_pi = value;
    } else if (param == "gamma_e") {
        pt.scenario.gamma_e = value;
    } else if (param == "theta") {
        for (auto& c : pt.conversions) c.theta = value;
    } else if (param == "alpha") {
        for (auto& c : pt.conversions) c.alpha = Alpha::finite(value);
    } else {
        throw InvalidArgument("unknown sweep parameter '" + param + "'");
    }
}

ScatteringMatrix matrix_for(const Scenario& sc, const Conversion& conv) {
    const EmitterConfig em{conv.theta, sc.gamma_e};
    if (sc.model == Model::Ideal) return ideal_scattering_matrix(em, conv.alpha);
    return full_scattering(sc.geom, em, DriveConfig::from_alpha(conv.alpha)).matrix;
}

double metric_value(const std::string& metric, const Scenario& sc, const Conversion& conv,
                    const JonesState& output) {
    if (metric == "fidelity") {
        const JonesState target = conv.target ? *conv.target
                                              : scatter(ideal_scattering_matrix({conv.theta, 0.0}, conv.alpha),
                                                        conv.input);
        return fidelity(output, target);
    }
    if (metric == "dissipation") return dissipation_probability(output);
    if (metric == "re_a") return output.a.real();
    if (metric == "im_a") return output.a.imag();
    if (metric == "re_b") return output.b.real();
    if (metric == "im_b") return output.b.imag();
    if (metric == "omega") {
        if (conv.alpha.is_resonant()) return kMissing;
        try {
            return drive_for_alpha(conv.alpha.value(), *sc.delta_ge, *sc.delta_es);
        } catch (const InfeasibleDrive&) {
            return kMissing;
        }
    }
    const auto stokes = stokes_from_jones(output);
    if (metric == "s1") return stokes.s1;
    if (metric == "s2") return stokes.s2;
    if (metric == "s3") return stokes.s3;
    const auto angles = ellipse_angles(stokes);
    if (metric == "eta") return angles.eta;
    if (metric == "chi") return angles.chi;
    throw InvalidArgument("unknown metric '" + metric + "'");
}

std::string describe_point(const SweepSpec& spec, const std::vector<double>& coords) {
    std::ostringstream os;
    os << "grid point (";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) os << ", ";
        os << spec.axes[i].param << "=" << format_double(coords[i]);
    }
    os << ")";
    return os.str();
}

unsigned resolve_threads(unsigned threads, std::size_t work) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    return static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(work, 1)));
}

}  // namespace

std::string to_string(Model model) { return model == Model::Ideal ? "ideal" : "full"; }

Model parse_model(std::string_view text) {
    if (text == "ideal") return Model::Ideal;
    if (text == "full") return Model::Full;
    throw InvalidArgument("model must be 'ideal' or 'full', got '" + std::string(text) + "'");
}

Conversion Conversion::designed(std::string label, const JonesState& input, const JonesState& target) {
    const auto branches = solve_controls(input, target);
    const auto distance = [](const ControlSolution& s) { return std::abs(s.theta - kPi / 4.0); };
    const auto& pick = distance(branches.second) < distance(branches.first) ? branches.second
                                                                             : branches.first;
    return {std::move(label), input, target, pick.theta, pick.alpha};
}

SweepAxis SweepAxis::linspace(std::string param, double min, double max, int count) {
    if (count < 2) throw InvalidArgument("axis '" + param + "' needs at least 2 points");
    SweepAxis axis{std::move(param), {}};
    axis.values.reserve(count);
    for (int i = 0; i < count; ++i) {
        axis.values.push_back(i == count - 1 ? max : min + (max - min) * i / (count - 1));
    }
    return axis;
}

SweepAxis SweepAxis::list(std::string param, std::vector<double> values) {
    return {std::move(param), std::move(values)};
}

const std::vector<std::string>& sweep_parameters() {
    static const std::vector<std::string> names{"x",   "y",    "d",   "d_lambda", "delta_ba", "r_m",
                                                "r_am", "r_bm", "k",  "gamma_e",  "theta",    "alpha"};
    return names;
}

const std::vector<std::string>& sweep_metrics() {
    static const std::vector<std::string> names{"fidelity", "dissipation", "s1",   "s2",
                                                "s3",       "eta",         "chi",  "re_a",
                                                "im_a",     "re_b",        "im_b", "omega"};
    return names;
}

void SweepSpec::validate() const {
    std::set<std::string> seen;
    for (const auto& axis : axes) {
        if (!contains(sweep_parameters(), axis.param)) {
            throw InvalidArgument("unknown sweep parameter '" + axis.param + "'");
        }
        if (!seen.insert(axis.param).second) {
            throw InvalidArgument("parameter '" + axis.param + "' is swept twice");
        }
        if (axis.values.size() < 2) {
            throw InvalidArgument("axis '" + axis.param + "' needs at least 2 points");
        }
        for (double v : axis.values) {
            if (!std::isfinite(v)) throw InvalidArgument("axis '" + axis.param + "' has a non-finite value");
        }
    }
    if (conversions.empty()) throw InvalidArgument("sweep '" + name + "' has no conversions");
    if (metrics.empty()) throw InvalidArgument("sweep '" + name + "' requests no metrics");
    std::set<std::string> labels;
    for (const auto& c : conversions) {
        if (conversions.size() > 1 && !labels.insert(c.label).second) {
            throw InvalidArgument("duplicate conversion label '" + c.label + "'");
        }
        require_normalized(c.input, "conversion input");
        if (c.target) require_normalized(*c.target, "conversion target");
    }
    for (const auto& m : metrics) {
        if (!contains(sweep_metrics(), m)) throw InvalidArgument("unknown metric '" + m + "'");
        if (m == "omega" && (!base.delta_ge || !base.delta_es)) {
            throw InvalidArgument("metric 'omega' needs delta_ge and delta_es");
        }
    }
}

std::size_t SweepResult::size() const {
    std::size_t n = 1;
    for (const auto& axis : axes) n *= axis.values.size();
    return n;
}

std::vector<std::size_t> SweepResult::shape() const {
    std::vector<std::size_t> s;
    for (const auto& axis : axes) s.push_back(axis.values.size());
    return s;
}

std::vector<double> SweepResult::coordinates(std::size_t flat) const {
    std::vector<double> coords(axes.size());
    for (std::size_t i = axes.size(); i-- > 0;) {
        const auto n = axes[i].values.size();
        coords[i] = axes[i].values[flat % n];
        flat /= n;
    }
    return coords;
}

const std::vector<double>& SweepResult::metric(std::string_view name) const {
    for (std::size_t i = 0; i < metric_names.size(); ++i) {
        if (metric_names[i] == name) return values[i];
    }
    throw InvalidArgument("result '" + this->name + "' has no metric '" + std::string(name) + "'");
}

SweepResult run_sweep(const SweepSpec& spec, unsigned threads) {
    spec.validate();

    SweepResult result;
    result.name = spec.name;
    result.axes = spec.axes;
    const bool single = spec.conversions.size() == 1;
    for (const auto& conv : spec.conversions) {
        for (const auto& m : spec.metrics) {
            result.metric_names.push_back(single ? m : m + "_" + conv.label);
        }
    }
    const std::size_t points = result.size();
    result.values.assign(result.metric_names.size(), std::vector<double>(points, kMissing));

    nlohmann::json axes_json = nlohmann::json::array();
    for (const auto& axis : spec.axes) axes_json.push_back({{"param", axis.param}, {"values", axis.values}});
    nlohmann::json conv_json = nlohmann::json::array();
    for (const auto& c : spec.conversions) conv_json.push_back(to_json(c));
    result.config = {{"name", spec.name},
                     {"scenario", to_json(spec.base)},
                     {"axes", axes_json},
                     {"conversions", conv_json},
                     {"metrics", spec.metrics}};

    auto evaluate = [&](std::size_t flat) {
        const auto coords = result.coordinates(flat);
        PointState pt{spec.base, spec.conversions};
        try {
            for (std::size_t i = 0; i < coords.size(); ++i) apply_param(spec.axes[i].param, coords[i], pt);
            std::size_t column = 0;
            for (const auto& conv : pt.conversions) {
                const auto output = scatter(matrix_for(pt.scenario, conv), conv.input);
                for (const auto& m : spec.metrics) {
                    result.values[column++][flat] = metric_value(m, pt.scenario, conv, output);
                }
            }
        } catch (const PhysicsError& e) {
            throw PhysicsError(describe_point(spec, coords) + ": " + e.what());
        } catch (const InvalidArgument& e) {
            throw InvalidArgument(describe_point(spec, coords) + ": " + e.what());
        }
    };

    const unsigned workers = resolve_threads(threads, points);
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::size_t> error_at(workers, points);
    auto work = [&](unsigned w) {
        const std::size_t begin = points * w / workers;
        const std::size_t end = points * (w + 1) / workers;
        for (std::size_t flat = begin; flat < end; ++flat) {
            try {
                evaluate(flat);
            } catch (...) {
                errors[w] = std::current_exception();
                error_at[w] = flat;
                return;
            }
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    }
    // Report the lowest failing index so the message does not depend on scheduling.
    const auto first = std::min_element(error_at.begin(), error_at.end()) - error_at.begin();
    if (errors[first]) std::rethrow_exception(errors[first]);
    return result;
}

SweepResult fidelity_map(SweepSpec spec, unsigned threads) {
    if (!contains(spec.metrics, "fidelity")) spec.metrics.insert(spec.metrics.begin(), "fidelity");
    return run_sweep(spec, threads);
}

SweepResult dissipation_sweep(SweepSpec spec, unsigned threads) {
    if (!contains(spec.metrics, "dissipation")) spec.metrics.insert(spec.metrics.begin(), "dissipation");
    return run_sweep(spec, threads);
}

SweepResult poincare_trajectory(double theta, const std::vector<double>& alphas) {
    SweepSpec spec;
    spec.name = "poincare";
    spec.axes = {SweepAxis::list("alpha", alphas)};
    spec.base.model = Model::Ideal;
    spec.conversions = {{"H", states::horizontal(), std::nullopt, theta, Alpha::finite(0.0)}};
    spec.metrics = {"s1", "s2", "s3"};
    auto result = run_sweep(spec);
    result.constants = {{"theta", theta}};
    return result;
}

SweepResult stokes_vs_theta(Alpha alpha, const std::vector<double>& thetas) {
    SweepSpec spec;
    spec.name = "stokes_vs_theta";
    spec.axes = {SweepAxis::list("theta", thetas)};
    spec.base.model = Model::Ideal;
    spec.conversions = {{"H", states::horizontal(), std::nullopt, 0.0, alpha}};
    spec.metrics = {"s1", "s2", "s3"};
    auto result = run_sweep(spec);
    if (!alpha.is_resonant()) result.constants = {{"alpha", alpha.value()}};
    return result;
}

SweepResult drive_curves(double alpha_condition, const std::vector<double>& delta_ge_list,
                         const std::vector<double>& delta_es_grid) {
    SweepResult result;
    result.name = "drive";
    result.constants = {{"alpha_condition", alpha_condition}};
    result.axes = {SweepAxis::list("delta_ge", delta_ge_list), SweepAxis::list("delta_es", delta_es_grid)};
    result.metric_names = {"omega"};
    result.values.assign(1, std::vector<double>(result.size(), kMissing));
    for (std::size_t flat = 0; flat < result.size(); ++flat) {
        const auto c = result.coordinates(flat);
        try {
            result.values[0][flat] = drive_for_alpha(alpha_condition, c[0], c[1]);
        } catch (const InfeasibleDrive&) {
            // stays missing
        }
    }
    result.config = {{"alpha_condition", alpha_condition},
                     {"delta_ge", delta_ge_list},
                     {"delta_es", delta_es_grid}};
    return result;
}

SweepResult mode_map(const GeometryConfig& geom, double phase_diff, int nx, int ny) {
    const auto points = cross_section_map(geom, phase_diff, nx, ny);
    SweepResult result;
    result.name = "modes";
    result.axes = {SweepAxis::linspace("x", 0.0, geom.a, nx), SweepAxis::linspace("y", 0.0, geom.b, ny)};
    result.metric_names = {"eta", "chi", "amplitude"};
    result.values.assign(3, std::vector<double>(result.size()));
    // cross_section_map is x-fastest; the result grid is y-fastest.
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            const auto& p = points[static_cast<std::size_t>(j) * nx + i];
            const std::size_t flat = static_cast<std::size_t>(i) * ny + j;
            result.values[0][flat] = p.angles.eta;
            result.values[1][flat] = p.angles.chi;
            result.values[2][flat] = p.amplitude;
        }
    }
    result.config = {{"geometry", to_json(geom)}, {"phase_diff", phase_diff}, {"nx", nx}, {"ny", ny}};
    return result;
}

nlohmann::json to_json(const JonesState& s) {
    return nlohmann::json::array({s.a.real(), s.a.imag(), s.b.real(), s.b.imag()});
}

nlohmann::json to_json(Alpha alpha) {
    if (alpha.is_resonant()) return "resonant";
    return alpha.value();
}

nlohmann::json to_json(const GeometryConfig& g) {
    return {{"a", g.a},
            {"b", g.b},
            {"x", g.x},
            {"y", g.y},
            {"d", g.d},
            {"r_am", {g.r_am.real(), g.r_am.imag()}},
            {"r_bm", {g.r_bm.real(), g.r_bm.imag()}},
            {"k_over_pi", g.k_over_pi},
            {"group_velocity_correction", g.group_velocity_correction}};
}

nlohmann::json to_json(const Scenario& sc) {
    nlohmann::json j{{"geometry", to_json(sc.geom)}, {"gamma_e", sc.gamma_e}, {"model", to_string(sc.model)}};
    if (sc.delta_ge) j["delta_ge"] = *sc.delta_ge;
    if (sc.delta_es) j["delta_es"] = *sc.delta_es;
    return j;
}

nlohmann::json to_json(const Conversion& c) {
    nlohmann::json j{{"label", c.label}, {"input", to_json(c.input)}, {"theta", c.theta}, {"alpha", to_json(c.alpha)}};
    j["target"] = c.target ? to_json(*c.target) : nlohmann::json("ideal_lossless_output");
    return j;
}

}  // namespace polarix

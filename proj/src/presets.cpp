#include "polarix/presets.hpp"

#include <algorithm>

namespace polarix {

namespace {

constexpr int kDefault1d = 201;
constexpr int kDefault2d = 101;

int count_1d(const PresetOptions& o) { return o.points.value_or(kDefault1d); }
int count_2d(const PresetOptions& o) { return o.points.value_or(kDefault2d); }

const std::vector<double> kGammaLevels{0.0, 0.05, 0.1};

Conversion v_to_l() { return Conversion::designed("VL", states::vertical(), states::left_circular()); }

SweepSpec fig3a(const PresetOptions& o) {
    SweepSpec s;
    s.name = "fig3a";
    s.base.gamma_e = 0.05;
    s.axes = {SweepAxis::linspace("delta_ba", -0.05, 0.05, count_2d(o)),
              SweepAxis::linspace("x", 0.3, 0.7, count_2d(o))};
    s.conversions = {v_to_l()};
    s.metrics = {"fidelity", "dissipation"};
    return s;
}

SweepSpec fig3b(const PresetOptions& o) {
    SweepSpec s;
    s.name = "fig3b";
    s.base.gamma_e = 0.05;
    s.axes = {SweepAxis::linspace("d_lambda", 0.70, 0.80, count_2d(o)),
              SweepAxis::linspace("r_m", -1.0, -0.95, count_2d(o))};
    s.conversions = {v_to_l()};
    s.metrics = {"fidelity", "dissipation"};
    return s;
}

SweepSpec fig3c(const PresetOptions& o) {
    SweepSpec s;
    s.name = "fig3c";
    s.base.gamma_e = 0.05;
    s.axes = {SweepAxis::linspace("alpha", -20.0, 20.0, count_2d(o)),
              SweepAxis::linspace("theta", 0.0, kPi / 2.0, count_2d(o))};
    s.conversions = {{"H", states::horizontal(), std::nullopt, kPi / 4.0, Alpha::finite(0.0)}};
    s.metrics = {"fidelity", "dissipation"};
    return s;
}

SweepSpec figS2(const PresetOptions& o) {
    SweepSpec s;
    s.name = "figS2";
    s.base.model = Model::Ideal;
    const int n = o.points.value_or(181);
    s.axes = {SweepAxis::linspace("theta", 0.0, kPi, n)};
    s.conversions = {{"H", states::horizontal(), std::nullopt, 0.0, Alpha::finite(0.0)}};
    s.metrics = {"re_a", "re_b", "eta", "chi"};
    return s;
}

SweepSpec robustness(std::string name, SweepAxis axis, std::optional<SweepAxis> second,
                     double gamma_e) {
    SweepSpec s;
    s.name = std::move(name);
    s.base.gamma_e = gamma_e;
    s.axes = {std::move(axis)};
    if (second) s.axes.push_back(std::move(*second));
    s.conversions = robustness_conversions();
    s.metrics = {"fidelity"};
    return s;
}

SweepSpec figS8a(const PresetOptions& o) {
    SweepSpec s;
    s.name = "figS8a";
    s.axes = {SweepAxis::linspace("gamma_e", 0.0, 0.1, count_1d(o))};
    s.conversions = {Conversion::designed("HR", states::horizontal(), states::right_circular()),
                     Conversion::designed("RH", states::right_circular(), states::horizontal()),
                     Conversion::designed("HV", states::horizontal(), states::vertical())};
    s.metrics = {"dissipation", "fidelity"};
    return s;
}

SweepSpec figS8b(const PresetOptions& o) {
    SweepSpec s;
    s.name = "figS8b";
    s.base.gamma_e = 0.1;
    s.axes = {SweepAxis::linspace("alpha", -20.0, 20.0, count_2d(o)),
              SweepAxis::linspace("theta", 0.0, kPi / 2.0, count_2d(o))};
    s.conversions = {{"H", states::horizontal(), std::nullopt, kPi / 4.0, Alpha::finite(0.0)}};
    s.metrics = {"dissipation", "fidelity"};
    return s;
}

std::vector<double> grid(double min, double max, int count) {
    return SweepAxis::linspace("", min, max, count).values;
}

}  // namespace

std::vector<Conversion> robustness_conversions() {
    return {Conversion::designed("HV", states::horizontal(), states::vertical()), v_to_l(),
            Conversion::designed("RV", states::right_circular(), states::vertical())};
}

const std::vector<std::string>& sweep_preset_names() {
    static const std::vector<std::string> names{"fig3a", "fig3b", "fig3c", "figS2", "figS4",
                                                "figS5", "figS6", "figS7", "figS8"};
    return names;
}

std::vector<SweepSpec> preset_specs(std::string_view name, const PresetOptions& o) {
    if (name == "fig3a") return {fig3a(o)};
    if (name == "fig3b") return {fig3b(o)};
    if (name == "fig3c") return {fig3c(o)};
    if (name == "figS2") return {figS2(o)};
    if (name == "figS4") {
        return {robustness("figS4", SweepAxis::linspace("delta_ba", -0.05, 0.05, count_1d(o)),
                           SweepAxis::list("gamma_e", kGammaLevels), 0.0)};
    }
    if (name == "figS5") {
        return {robustness("figS5", SweepAxis::linspace("x", 0.4, 0.6, count_2d(o)),
                           SweepAxis::linspace("y", 0.4, 0.6, count_2d(o)), 0.05)};
    }
    if (name == "figS6") {
        return {robustness("figS6", SweepAxis::linspace("d_lambda", 0.70, 0.80, count_1d(o)),
                           SweepAxis::list("gamma_e", kGammaLevels), 0.0)};
    }
    if (name == "figS7") {
        return {robustness("figS7", SweepAxis::linspace("r_m", -1.0, -0.95, count_1d(o)),
                           SweepAxis::list("gamma_e", kGammaLevels), 0.0)};
    }
    if (name == "figS8") return {figS8a(o), figS8b(o)};
    throw InvalidArgument("unknown sweep preset '" + std::string(name) + "'");
}

std::vector<PresetOutput> run_sweep_preset(std::string_view name, const PresetOptions& o) {
    std::vector<PresetOutput> out;
    for (const auto& spec : preset_specs(name, o)) {
        out.push_back({spec.name, {run_sweep(spec, o.threads)}});
    }
    return out;
}

PresetOutput poincare_preset(std::string_view name, const PresetOptions& o) {
    if (name == "fig2c") {
        return {"fig2c", {stokes_vs_theta(Alpha::finite(0.0), grid(0.0, kPi / 2.0, count_1d(o)))}};
    }
    if (name == "fig2d") {
        return {"fig2d", {poincare_trajectory(kPi / 4.0, grid(-10.0, 10.0, count_1d(o)))}};
    }
    throw InvalidArgument("unknown poincare preset '" + std::string(name) + "' (fig2c or fig2d)");
}

PresetOutput drive_preset(const PresetOptions& o) {
    const auto es = grid(-10.0, 10.0, count_1d(o));
    PresetOutput out{"figS3", {}};
    out.parts.push_back(drive_curves(2.0, {-1.7, -1.0, 0.0, 1.0, -2.3, -3.0, -4.0, -5.0}, es));
    out.parts.push_back(drive_curves(-2.0, {2.3, 3.0, 4.0, 5.0, 1.7, 1.0, 0.0, -1.0}, es));
    out.parts.push_back(drive_curves(0.0, {0.3, 1.0, 2.0, 3.0, -0.3, -1.0, -2.0, -3.0}, es));
    return out;
}

PresetOutput modes_preset(const PresetOptions& o) {
    GeometryConfig geom = ideal_geometry();
    return {"figS1", {mode_map(geom, kPi / 2.0, count_2d(o), count_2d(o))}};
}

}  // namespace polarix

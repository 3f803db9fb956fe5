#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "polarix/control.hpp"
#include "polarix/polarization.hpp"
#include "polarix/scattering.hpp"
#include "polarix/waveguide.hpp"

namespace polarix {

/// Which kernel evaluates the scattering matrix at each grid point.
enum class Model {
    Ideal,  ///< closed-form center/antinode matrix; ignores geometry
    Full,   ///< emitter + mirror solution for the configured geometry
};

std::string to_string(Model model);
Model parse_model(std::string_view text);

/// One polarization conversion evaluated at every grid point. The controls (theta, alpha) are
/// held at their design values unless an axis sweeps them.
struct Conversion {
    std::string label;
    JonesState input;
    /// Empty: the target is the lossless ideal output for the current (theta, alpha).
    std::optional<JonesState> target;
    double theta = kPi / 4.0;
    Alpha alpha = Alpha::finite(0.0);

    /// Controls from solve_controls, picking the branch whose theta is closest to pi/4
    /// (balanced coupling at the guide center).
    static Conversion designed(std::string label, const JonesState& input, const JonesState& target);
};

struct Scenario {
    GeometryConfig geom = ideal_geometry();
    double gamma_e = 0.0;
    Model model = Model::Full;
    /// Detunings used by the `omega` metric.
    std::optional<double> delta_ge;
    std::optional<double> delta_es;
};

struct SweepAxis {
    std::string param;
    std::vector<double> values;

    static SweepAxis linspace(std::string param, double min, double max, int count);
    static SweepAxis list(std::string param, std::vector<double> values);
};

/**
 * Sweepable parameters (all in a / Gamma0 units, angles in radians):
 *   x, y, d, d_lambda (d in units of lambda_Bz), delta_ba (b - a; y keeps its relative
 *   position), r_m (both mirrors, real), r_am, r_bm, k (units of pi/a), gamma_e, theta, alpha.
 * Metrics: fidelity, dissipation, s1, s2, s3, eta, chi, re_a, im_a, re_b, im_b, omega.
 */
struct SweepSpec {
    std::string name;
    std::vector<SweepAxis> axes;
    Scenario base;
    std::vector<Conversion> conversions;
    std::vector<std::string> metrics;

    /// Throws InvalidArgument on unknown names, duplicate axes, axes with < 2 points or no
    /// conversions.
    void validate() const;
};

const std::vector<std::string>& sweep_parameters();
const std::vector<std::string>& sweep_metrics();

/// Values on the Cartesian product of the axes, flattened row-major (first axis slowest).
/// Missing values (infeasible drive) are NaN.
struct SweepResult {
    std::string name;
    /// Label columns that are constant over this block (e.g. the alpha condition of a drive
    /// curve family).
    std::vector<std::pair<std::string, double>> constants;
    std::vector<SweepAxis> axes;
    std::vector<std::string> metric_names;
    std::vector<std::vector<double>> values;  ///< one flattened grid per metric
    nlohmann::json config;                    ///< fully resolved inputs

    std::size_t size() const;
    std::vector<std::size_t> shape() const;
    /// Axis coordinates of a flat index.
    std::vector<double> coordinates(std::size_t flat) const;
    const std::vector<double>& metric(std::string_view name) const;
};

/// Grid evaluation split across `threads` workers (0 = hardware concurrency). Each point is
/// written by index, so the result does not depend on the worker count. A failing point
/// aborts the sweep with an error naming its coordinates.
SweepResult run_sweep(const SweepSpec& spec, unsigned threads = 1);

/// run_sweep with the fidelity metric forced on.
SweepResult fidelity_map(SweepSpec spec, unsigned threads = 1);

/// run_sweep with the dissipation metric forced on.
SweepResult dissipation_sweep(SweepSpec spec, unsigned threads = 1);

/// Lossless output Stokes triple of a horizontal input along an alpha grid at fixed theta.
SweepResult poincare_trajectory(double theta, const std::vector<double>& alphas);

/// Same, along a theta grid at fixed alpha.
SweepResult stokes_vs_theta(Alpha alpha, const std::vector<double>& thetas);

/// Omega(Delta_es) for each Delta_ge realizing alpha_condition; infeasible points are NaN.
SweepResult drive_curves(double alpha_condition, const std::vector<double>& delta_ge_list,
                         const std::vector<double>& delta_es_grid);

/// Cross-section polarization map (axes x, y; metrics eta, chi, amplitude).
SweepResult mode_map(const GeometryConfig& geom, double phase_diff, int nx, int ny);

nlohmann::json to_json(const GeometryConfig& geom);
nlohmann::json to_json(const Scenario& scenario);
nlohmann::json to_json(const Conversion& conversion);
nlohmann::json to_json(const JonesState& state);
nlohmann::json to_json(Alpha alpha);

}  // namespace polarix

#pragma once

#include <optional>

#include "polarix/polarization.hpp"
#include "polarix/scattering.hpp"

namespace polarix {

/// Control setting that converts one polarization into another with the ideal lossless
/// matrix. theta lies in [0, pi); xi_co in [-pi, pi) is the common output phase relative to
/// the target, with input and target both written with a real, non-negative B component.
struct ControlSolution {
    Alpha alpha = Alpha::resonant();
    double theta = 0.0;
    double xi_co = 0.0;
    int branch = 1;
};

struct ControlBranches {
    ControlSolution first;
    ControlSolution second;
};

/// A normalized state written as [amp_a e^{i xi}, amp_b] after removing a global phase.
struct PhaseForm {
    double amp_a = 1.0;
    double amp_b = 0.0;
    double xi = 0.0;  ///< in [-pi, pi); 0 when amp_b = 0

    JonesState state() const;
};

PhaseForm phase_form(const JonesState& state);

/**
 * Both control branches mapping `input` to `target` up to a global phase.
 *
 * Uses the closed-form branch formulas when their common denominator is above 1e-9.
 * Below it the two states share s1 and s2: if they are equal up to phase the EIT identity
 * (alpha resonant, theta = 0) is returned; otherwise (an s3 flip such as R -> L) the
 * retarder axis is fixed at theta = 0 / pi/2 and alpha follows from the required
 * retardance. Throws InvalidArgument for unnormalized states.
 */
ControlBranches solve_controls(const JonesState& input, const JonesState& target);

/// Result of turning a ControlSolution into a control field.
struct DriveRealization {
    /// Rabi frequency; empty for the EIT identity, where any Omega > 0 works.
    std::optional<double> omega_rabi;
    /// alpha recomputed from (omega, Delta_ge, Delta_es).
    Alpha alpha_check = Alpha::resonant();
    /// Delta_es that must be used (equals the caller's value unless the EIT identity
    /// requires Delta_es = Delta_ge).
    double delta_es = 0.0;
};

/// Throws InfeasibleDrive when no real Omega exists at the given detunings.
DriveRealization realize_drive(const ControlSolution& sol, double delta_ge, double delta_es);

/// Output polarization angle for a linear input at zeta under the alpha = 0 matrix:
/// 2 theta - zeta folded into [0, pi).
double rotation_angle(double theta, double zeta);

}  // namespace polarix

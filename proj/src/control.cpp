#include "polarix/control.hpp"

#include <cmath>

namespace polarix {

namespace {

constexpr double kDegenerateDenominator = 1e-9;

ControlSolution with_phase(Alpha alpha, double theta, int branch, const PhaseForm& in,
                           const PhaseForm& out) {
    ControlSolution sol{alpha, wrap_angle(theta, 0.0, kPi), 0.0, branch};
    const auto result = scatter(ideal_scattering_matrix({sol.theta, 0.0}, alpha), in.state());
    // Compare against the target in phase form, [amp_a e^{i xi}, amp_b] e^{i xi_co}.
    const Complex ref = out.amp_b >= out.amp_a ? result.b : result.a * std::polar(1.0, -out.xi);
    sol.xi_co = wrap_angle(std::arg(ref), -kPi, 2.0 * kPi);
    return sol;
}

// Retarder picture of the lossless matrix: eigen-polarization n = (cos t, sin t) keeps its
// amplitude, n_perp picks up no phase, and n picks up e^{i delta} = -(1 + i u)/(1 - i u)
// with u = alpha / 2.
Alpha alpha_for_retardance(Complex e_delta) {
    const double half = 0.5 * std::arg(-e_delta);  // = atan(u), in (-pi/2, pi/2]
    if (std::abs(half - kPi / 2.0) < 1e-15) return Alpha::resonant();
    return Alpha::finite(2.0 * std::tan(half));
}

Alpha alpha_for_axis(double theta, const JonesState& in, const JonesState& target) {
    const JonesState n{std::cos(theta), std::sin(theta)};
    const JonesState n_perp{-std::sin(theta), std::cos(theta)};
    const Complex in_n = inner(n, in);
    const Complex in_p = inner(n_perp, in);
    const Complex out_n = inner(n, target);
    const Complex out_p = inner(n_perp, target);
    const Complex ratio = (out_n * in_p) / (out_p * in_n);
    return alpha_for_retardance(ratio / std::abs(ratio));
}

}  // namespace

JonesState PhaseForm::state() const { return {std::polar(amp_a, xi), amp_b}; }

PhaseForm phase_form(const JonesState& state) {
    PhaseForm f;
    f.amp_a = std::abs(state.a);
    f.amp_b = std::abs(state.b);
    f.xi = f.amp_b == 0.0 ? 0.0 : wrap_angle(std::arg(state.a) - std::arg(state.b), -kPi, 2.0 * kPi);
    return f;
}

ControlBranches solve_controls(const JonesState& input, const JonesState& target) {
    require_normalized(input, "input state");
    require_normalized(target, "target state");
    const PhaseForm in = phase_form(input);
    const PhaseForm out = phase_form(target);

    const double ia = in.amp_a, ib = in.amp_b, oa = out.amp_a, ob = out.amp_b;
    const double pop = ia * ia - oa * oa;
    const double cos_term = ia * ib * std::cos(in.xi) - oa * ob * std::cos(out.xi);
    const double sin_term = ia * ib * std::sin(in.xi) + oa * ob * std::sin(out.xi);
    const double denom = std::hypot(pop, cos_term);

    if (denom < kDegenerateDenominator) {
        if (std::abs(std::abs(inner(input, target)) - 1.0) <= 1e-9) {
            const ControlSolution eit{Alpha::resonant(), 0.0, 0.0, 1};
            return {eit, {Alpha::resonant(), 0.0, 0.0, 2}};
        }
        // Same s1, s2 but opposite s3: every equatorial axis works; pick theta = 0.
        const Alpha alpha = alpha_for_axis(0.0, in.state(), out.state());
        if (alpha.is_resonant()) {
            throw IllConditioned("states share s1 and s2 but no retardance maps one onto the other; "
                                 "perturb the target slightly");
        }
        const Alpha mirrored = Alpha::finite(-alpha.value());
        return {with_phase(alpha, 0.0, 1, in, out), with_phase(mirrored, kPi / 2.0, 2, in, out)};
    }

    const double alpha1 = 2.0 * sin_term / denom;
    const double theta1 = 0.5 * std::atan2(pop / denom, -cos_term / denom);

    ControlBranches result;
    for (int branch : {1, 2}) {
        const double sign = branch == 1 ? 1.0 : -1.0;
        ControlSolution sol;
        sol.branch = branch;
        sol.alpha = Alpha::finite(sign * alpha1);
        sol.theta = wrap_angle(branch == 1 ? theta1 : theta1 + kPi / 2.0, 0.0, kPi);
        const Complex num = sign * (-ia * ob * std::polar(1.0, in.xi) + ib * oa * std::polar(1.0, -out.xi));
        const Complex den{denom, -sign * sin_term};
        sol.xi_co = wrap_angle(std::arg(num / den), -kPi, 2.0 * kPi);
        (branch == 1 ? result.first : result.second) = sol;
    }
    return result;
}

DriveRealization realize_drive(const ControlSolution& sol, double delta_ge, double delta_es) {
    DriveRealization out;
    if (sol.alpha.is_resonant()) {
        out.delta_es = delta_ge;
        return out;
    }
    const double omega = drive_for_alpha(sol.alpha.value(), delta_ge, delta_es);
    out.omega_rabi = omega;
    out.alpha_check = alpha_of_drive(omega, delta_ge, delta_es);
    out.delta_es = delta_es;
    return out;
}

double rotation_angle(double theta, double zeta) {
    if (!(theta >= 0.0 && theta < kPi) || !(zeta >= 0.0 && zeta < kPi)) {
        throw InvalidArgument("rotation_angle expects theta and zeta in [0, pi)");
    }
    const double turn = 2.0 * theta - zeta;
    if (turn < 0.0) return turn + kPi;
    if (turn < kPi) return turn;
    return turn - kPi;
}

}  // namespace polarix

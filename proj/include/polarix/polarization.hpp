#pragma once

#include <string_view>

#include "polarix/core.hpp"

namespace polarix {

/**
 * Photon polarization on the TE01 (mode A, horizontal) / TE10 (mode B,
 * vertical) basis.
 *
 * Input states are normalized. Output states are left unnormalized so that
 * loss (emitter dissipation, imperfect mirror) shows up as a norm below one.
 */
struct JonesState {
    Complex a{1.0, 0.0};
    Complex b{0.0, 0.0};

    double norm_squared() const { return std::norm(a) + std::norm(b); }
    JonesState scaled(Complex factor) const { return {a * factor, b * factor}; }
    JonesState normalized() const;
};

/// Throws InvalidArgument unless |a|^2 + |b|^2 = 1 within 1e-12.
void require_normalized(const JonesState& state, std::string_view what);

/// Throws InvalidArgument if the norm exceeds 1 + 1e-9.
void require_physical_output(const JonesState& state, std::string_view what);

/// Unnormalized Stokes triple; the norm scales with the squared Jones norm.
struct StokesVector {
    double s1 = 0.0;
    double s2 = 0.0;
    double s3 = 0.0;

    double norm() const;
};

/// Orientation of the polarization ellipse's major axis (eta, in [0, pi)) and
/// its ellipticity angle (chi, in [-pi/4, pi/4]).
struct EllipseAngles {
    double eta = 0.0;
    double chi = 0.0;
};

namespace states {

JonesState horizontal();
JonesState vertical();
JonesState right_circular();
JonesState left_circular();
JonesState diagonal();
/// [cos zeta, sin zeta]; zeta must lie in [0, pi).
JonesState linear(double zeta);

}  // namespace states

/**
 * Parses the textual state syntax:
 *   H | V | L | R | D
 *   linear:<zeta_deg>
 *   jones:<reA>,<imA>,<reB>,<imB>   (normalized on parse; zero vector rejected)
 */
JonesState parse_state(std::string_view text);

/// Stokes parameters with phi = arg(a) - arg(b), so R maps to s3 = +1.
StokesVector stokes_from_jones(const JonesState& state);

/// eta = atan2(s2, s1)/2 in [0, pi); chi = atan2(s3, hypot(s1, s2))/2.
/// For circular states eta is reported as 0.
EllipseAngles ellipse_angles(const StokesVector& stokes);

/// <lhs|rhs>
Complex inner(const JonesState& lhs, const JonesState& rhs);

/// |<target|result>|^2. Loss-inclusive: an attenuated result lowers the value.
double fidelity(const JonesState& result, const JonesState& target);

/// 1 - |result|^2, clamped at zero against rounding.
double dissipation_probability(const JonesState& result);

}  // namespace polarix

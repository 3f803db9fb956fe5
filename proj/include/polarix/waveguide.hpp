#pragma once

#include <vector>

#include "polarix/core.hpp"
#include "polarix/polarization.hpp"

namespace polarix {

// Unit system: lengths in units of the waveguide width a (so a = 1 by default),
// wavenumbers in units of pi/a on input and radians per unit length internally,
// rates and detunings in units of the reference emission rate Gamma0 = 1.

/// Rectangular waveguide terminated by a mirror, with the emitter at (x, y) a distance d
/// from the mirror.
struct GeometryConfig {
    double a = 1.0;
    double b = 1.0;
    double x = 0.5;
    double y = 0.5;
    double d = 0.0;  ///< emitter-mirror separation; see antinode_separation()
    Complex r_am{-1.0, 0.0};
    Complex r_bm{-1.0, 0.0};
    double k_over_pi = 1.3;  ///< free wavenumber in units of pi/a
    /// Scale Gamma_A by v_gB/v_gA when a != b. Off by default.
    bool group_velocity_correction = false;

    double k() const { return k_over_pi * kPi / a; }
    /// Throws InvalidArgument (or EvanescentMode for k at/below cutoff) on violation.
    void validate() const;
};

/// Dipole orientation theta in [0, pi) measured from the x axis, and the external
/// (non-waveguide) dissipation rate gamma_e >= 0.
struct EmitterConfig {
    double theta = kPi / 4.0;
    double gamma_e = 0.0;

    void validate() const;
};

enum class Mode { A, B };

/// sqrt(k^2 - (pi/dim)^2). Mode A (TE01) uses dim = b, mode B (TE10) uses dim = a.
double kz(double k, double transverse_dim);

double kz(const GeometryConfig& geom, Mode mode);

/// Guided wavelength of mode B, 2 pi / k_Bz.
double lambda_bz(const GeometryConfig& geom);

/// d = 0.75 lambda_Bz, the antinode that puts phi_B = 3 pi.
double antinode_separation(const GeometryConfig& geom);

/// Square guide, centered emitter, perfect mirrors (r = -1) at the d = 0.75 lambda_Bz antinode.
GeometryConfig ideal_geometry(double k_over_pi = 1.3);

/// Transverse field factor: sin(pi y / b) for A, sin(pi x / a) for B.
double mode_profile(Mode mode, double x, double y, const GeometryConfig& geom);

struct EmissionRates {
    double gamma_a = 0.0;
    double gamma_b = 0.0;
};

/// Gamma_A = 2 sin^2(pi y/b) cos^2(theta), Gamma_B = 2 sin^2(pi x/a) sin^2(theta).
EmissionRates emission_rates(const GeometryConfig& geom, const EmitterConfig& em);

/// Signed emitter-mode couplings with v_g = 1, so Gamma_i = 2 V_i^2 (before any
/// group-velocity correction).
struct Couplings {
    double v_a = 0.0;
    double v_b = 0.0;
};

Couplings couplings(const GeometryConfig& geom, const EmitterConfig& em);

struct CrossSectionPoint {
    double x = 0.0;
    double y = 0.0;
    EllipseAngles angles;
    double amplitude = 0.0;
};

/// Local polarization of the superposition [E_x^(A), E_y^(B) e^{i phase_diff}] on an
/// nx-by-ny grid spanning the closed cross-section, row-major with x fastest.
std::vector<CrossSectionPoint> cross_section_map(const GeometryConfig& geom, double phase_diff,
                                                 int nx, int ny);

}  // namespace polarix

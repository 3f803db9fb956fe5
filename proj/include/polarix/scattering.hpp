#pragma once

#include <optional>

#include "polarix/core.hpp"
#include "polarix/polarization.hpp"
#include "polarix/waveguide.hpp"

namespace polarix {

/**
 * The drive parameter alpha = Omega^2 / [4 (Delta_ge - Delta_es)] - Delta_ge, in units of
 * Gamma0, extended with a sentinel for two-photon resonance (Delta_ge = Delta_es), where
 * the emitter is transparent and every kernel takes the alpha -> infinity limit.
 */
class Alpha {
public:
    static Alpha finite(double value);
    static Alpha resonant() { return Alpha{}; }

    bool is_resonant() const { return resonant_; }
    /// Throws std::logic_error on the resonance sentinel.
    double value() const;

    friend bool operator==(const Alpha&, const Alpha&) = default;

private:
    Alpha() = default;
    double value_ = 0.0;
    bool resonant_ = true;
};

/// The control field behind alpha: Rabi frequency and the two detunings, all in Gamma0.
struct DriveFields {
    double omega_rabi = 0.0;
    double delta_ge = 0.0;
    double delta_es = 0.0;
};

struct DriveConfig {
    Alpha alpha = Alpha::finite(0.0);
    std::optional<DriveFields> fields;

    static DriveConfig from_alpha(Alpha alpha) { return {alpha, std::nullopt}; }
    static DriveConfig from_fields(const DriveFields& fields);
};

/// Omega = 0 leaves level s decoupled, so alpha = -Delta_ge even at Delta_ge = Delta_es.
Alpha alpha_of_drive(double omega_rabi, double delta_ge, double delta_es);

/// Omega = 2 sqrt((Delta_ge - Delta_es)(Delta_ge + alpha)). Throws InfeasibleDrive when the
/// product is negative or when Delta_ge = Delta_es (only the EIT identity is reachable there).
double drive_for_alpha(double alpha, double delta_ge, double delta_es);

/// [[r_aa, r_ab], [r_ba, r_bb]] acting on column Jones vectors.
struct ScatteringMatrix {
    Complex r_aa{1.0, 0.0};
    Complex r_ab{0.0, 0.0};
    Complex r_ba{0.0, 0.0};
    Complex r_bb{1.0, 0.0};

    static ScatteringMatrix identity() { return {}; }
    Complex det() const { return r_aa * r_bb - r_ab * r_ba; }
    ScatteringMatrix scaled(Complex factor) const;
};

/// Closed-form matrix for an emitter at the cross-section center of a square guide with the
/// mirror at an antinode: Gamma_A = 2 cos^2 theta, Gamma_B = 2 sin^2 theta.
ScatteringMatrix ideal_scattering_matrix(const EmitterConfig& em, Alpha alpha);

/// Amplitudes produced by a single-mode input. t_* and r_* are the left- and right-moving
/// coefficients in the region between mirror and emitter; c_e/c_s are emitter amplitudes
/// relative to a unit-amplitude incident plane wave (the 1/sqrt(2 pi) factor is dropped).
struct ChannelAmplitudes {
    Complex t_a;
    Complex r_a;
    Complex t_b;
    Complex r_b;
    Complex c_e;
    /// Known only when the drive is given as fields rather than a bare alpha.
    std::optional<Complex> c_s;
};

struct FullScattering {
    ScatteringMatrix matrix;
    ChannelAmplitudes from_a;
    ChannelAmplitudes from_b;
    /// Derived quantities, kept for audits.
    double k_a = 0.0;
    double k_b = 0.0;
    double gamma_a = 0.0;
    double gamma_b = 0.0;
};

/**
 * Emitter + mirror scattering for an arbitrary geometry.
 *
 * Gauge: the mirror sits at z = 0 and the emitter at z = d, so the mirror-propagation
 * phases exp(-2 i k z_M) are 1. Against the ideal closed form this differs by a global
 * factor of -1 when r_am = r_bm = -1 and phi = 3 pi; fidelities are unaffected.
 *
 * Throws EvanescentMode, InvalidArgument (bad geometry) or DegenerateConfiguration when the
 * resonance denominator vanishes.
 */
FullScattering full_scattering(const GeometryConfig& geom, const EmitterConfig& em,
                               const DriveConfig& drive);

/// S |input>. The input must be normalized.
JonesState scatter(const ScatteringMatrix& s, const JonesState& input);

/// Lossless Stokes parameters of the output for a horizontal input.
StokesVector stokes_of_output(double theta, Alpha alpha);

}  // namespace polarix

#include "polarix/scattering.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace polarix {

namespace {
constexpr Complex kI{0.0, 1.0};
}

Alpha Alpha::finite(double value) {
    if (!std::isfinite(value)) throw InvalidArgument("alpha must be finite; use Alpha::resonant()");
    Alpha a;
    a.value_ = value;
    a.resonant_ = false;
    return a;
}

double Alpha::value() const {
    if (resonant_) throw std::logic_error("alpha is the two-photon-resonance sentinel");
    return value_;
}

Alpha alpha_of_drive(double omega_rabi, double delta_ge, double delta_es) {
    if (!(omega_rabi >= 0.0)) throw InvalidArgument("Rabi frequency must be non-negative");
    if (omega_rabi == 0.0) return Alpha::finite(-delta_ge);
    if (delta_ge == delta_es) return Alpha::resonant();
    return Alpha::finite(omega_rabi * omega_rabi / (4.0 * (delta_ge - delta_es)) - delta_ge);
}

DriveConfig DriveConfig::from_fields(const DriveFields& f) {
    return {alpha_of_drive(f.omega_rabi, f.delta_ge, f.delta_es), f};
}

double drive_for_alpha(double alpha, double delta_ge, double delta_es) {
    if (delta_ge == delta_es) {
        throw InfeasibleDrive("Delta_es = Delta_ge is the two-photon resonance; only the EIT "
                              "identity is reachable there");
    }
    const double product = (delta_ge - delta_es) * (delta_ge + alpha);
    if (product < 0.0) {
        throw InfeasibleDrive("no real Rabi frequency gives alpha = " + std::to_string(alpha) +
                              " at Delta_ge = " + std::to_string(delta_ge) + ", Delta_es = " +
                              std::to_string(delta_es) +
                              "; move Delta_es to the other side of Delta_ge");
    }
    return 2.0 * std::sqrt(product);
}

ScatteringMatrix ScatteringMatrix::scaled(Complex factor) const {
    return {r_aa * factor, r_ab * factor, r_ba * factor, r_bb * factor};
}

ScatteringMatrix ideal_scattering_matrix(const EmitterConfig& em, Alpha alpha) {
    em.validate();
    if (alpha.is_resonant()) return ScatteringMatrix::identity();
    const double c2 = std::cos(2.0 * em.theta);
    const double s2 = std::sin(2.0 * em.theta);
    const Complex numerator_common{em.gamma_e / 2.0, -alpha.value()};
    const Complex denom = 2.0 + numerator_common;
    const Complex off = -2.0 * s2 / denom;
    return {(-2.0 * c2 + numerator_common) / denom, off, off, (2.0 * c2 + numerator_common) / denom};
}

FullScattering full_scattering(const GeometryConfig& geom, const EmitterConfig& em,
                               const DriveConfig& drive) {
    geom.validate();
    em.validate();

    FullScattering out;
    out.k_a = kz(geom, Mode::A);
    out.k_b = kz(geom, Mode::B);
    const double d = geom.d;
    const double phi_a = 2.0 * out.k_a * d;
    const double phi_b = 2.0 * out.k_b * d;

    // Group velocities relative to mode B; both are 1 unless the correction is enabled.
    const double vg_a = geom.group_velocity_correction ? out.k_a / out.k_b : 1.0;
    const auto v = couplings(geom, em);
    out.gamma_a = 2.0 * v.v_a * v.v_a / vg_a;
    out.gamma_b = 2.0 * v.v_b * v.v_b;
    // (Gamma_B/2)(V_A/V_B) and (Gamma_A/2)(V_B/V_A) without dividing by a coupling.
    const double cross_from_a = v.v_a * v.v_b;
    const double cross_from_b = v.v_a * v.v_b / vg_a;

    const Complex r_am = geom.r_am;
    const Complex r_bm = geom.r_bm;
    const Complex ra_back = std::exp(kI * phi_a);
    const Complex rb_back = std::exp(kI * phi_b);
    const Complex m_a = 1.0 + r_am * ra_back;  // standing-wave factor at the emitter
    const Complex m_b = 1.0 + r_bm * rb_back;
    const Complex prop_ab = std::exp(kI * (out.k_b - out.k_a) * d);
    const Complex entry_a = std::exp(-kI * out.k_a * d);
    const Complex entry_b = std::exp(-kI * out.k_b * d);

    std::optional<double> omega;
    std::optional<double> two_photon;  // Delta_es - Delta_ge
    if (drive.fields) {
        omega = drive.fields->omega_rabi;
        two_photon = drive.fields->delta_es - drive.fields->delta_ge;
    }

    if (drive.alpha.is_resonant()) {
        out.matrix = {r_am, 0.0, 0.0, r_bm};
        out.from_a = {1.0, r_am, 0.0, 0.0, 0.0, std::nullopt};
        out.from_b = {0.0, 0.0, 1.0, r_bm, 0.0, std::nullopt};
        if (omega && *omega > 0.0) {
            // c_e -> 0 while Omega c_e / (2 (Delta_es - Delta_ge)) stays finite.
            out.from_a.c_s = -2.0 * entry_a * m_a * v.v_a / *omega;
            out.from_b.c_s = -2.0 * entry_b * m_b * v.v_b / *omega;
        }
        return out;
    }

    const Complex base{drive.alpha.value(), em.gamma_e / 2.0};
    const Complex dressed_a = kI * m_a * out.gamma_a / 2.0;
    const Complex dressed_b = kI * m_b * out.gamma_b / 2.0;
    const Complex denom = base + dressed_a + dressed_b;
    if (std::abs(denom) < 1e-14) {
        throw DegenerateConfiguration(
            "resonance denominator vanishes: the emitter is decoupled from both standing waves "
            "and neither driven nor dissipative (alpha = 0, gamma_e = 0)");
    }

    auto emitter_s = [&](Complex c_e) -> std::optional<Complex> {
        if (!omega) return std::nullopt;
        if (*omega == 0.0) return Complex{0.0, 0.0};
        return *omega * c_e / (2.0 * *two_photon);
    };

    // Mode-A input.
    {
        auto& ch = out.from_a;
        ch.t_a = (base + dressed_b) / denom;
        ch.r_a = ch.t_a * r_am;
        ch.t_b = -kI * m_a * cross_from_a / denom * prop_ab;
        ch.r_b = ch.t_b * r_bm;
        ch.c_e = entry_a * m_a * v.v_a / denom;
        ch.c_s = emitter_s(ch.c_e);
        out.matrix.r_aa = (r_am * (base + dressed_b) - kI * (r_am + 1.0 / ra_back) * out.gamma_a / 2.0) /
                          denom;
        out.matrix.r_ba = -kI * m_a * (r_bm + 1.0 / rb_back) * cross_from_a / denom * prop_ab;
    }
    // Mode-B input.
    {
        auto& ch = out.from_b;
        ch.t_b = (base + dressed_a) / denom;
        ch.r_b = ch.t_b * r_bm;
        ch.t_a = -kI * m_b * cross_from_b / denom / prop_ab;
        ch.r_a = ch.t_a * r_am;
        ch.c_e = entry_b * m_b * v.v_b / denom;
        ch.c_s = emitter_s(ch.c_e);
        out.matrix.r_bb = (r_bm * (base + dressed_a) - kI * (r_bm + 1.0 / rb_back) * out.gamma_b / 2.0) /
                          denom;
        out.matrix.r_ab = -kI * m_b * (r_am + 1.0 / ra_back) * cross_from_b / denom / prop_ab;
    }
    return out;
}

JonesState scatter(const ScatteringMatrix& s, const JonesState& input) {
    require_normalized(input, "scattering input");
    return {s.r_aa * input.a + s.r_ab * input.b, s.r_ba * input.a + s.r_bb * input.b};
}

StokesVector stokes_of_output(double theta, Alpha alpha) {
    if (alpha.is_resonant()) return {1.0, 0.0, 0.0};
    const double q = alpha.value() * alpha.value() / 4.0;
    const double denom = 1.0 + q;
    return {(std::cos(4.0 * theta) + q) / denom, std::sin(4.0 * theta) / denom,
            alpha.value() * std::sin(2.0 * theta) / denom};
}

}  // namespace polarix

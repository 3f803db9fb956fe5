#include "polarix/waveguide.hpp"

#include <cmath>
#include <string>

namespace polarix {

void GeometryConfig::validate() const {
    if (!(a > 0.0) || !(b > 0.0)) throw InvalidArgument("waveguide dimensions must be positive");
    if (x < 0.0 || x > a || y < 0.0 || y > b) {
        throw InvalidArgument("emitter position (" + std::to_string(x) + ", " + std::to_string(y) +
                              ") lies outside the cross-section");
    }
    if (!(d > 0.0)) throw InvalidArgument("emitter-mirror separation d must be positive");
    if (std::abs(r_am) > 1.0 + 1e-12 || std::abs(r_bm) > 1.0 + 1e-12) {
        throw InvalidArgument("mirror reflection coefficients must satisfy |r| <= 1");
    }
    kz(k(), b);
    kz(k(), a);
}

void EmitterConfig::validate() const {
    if (!(gamma_e >= 0.0)) throw InvalidArgument("gamma_e must be non-negative");
    if (!std::isfinite(theta)) throw InvalidArgument("theta must be finite");
}

double kz(double k, double transverse_dim) {
    const double cutoff = kPi / transverse_dim;
    if (!(k > cutoff)) {
        throw EvanescentMode("mode with transverse size " + std::to_string(transverse_dim) +
                             " is below cutoff at k = " + std::to_string(k / kPi) + " pi");
    }
    return std::sqrt(k * k - cutoff * cutoff);
}

double kz(const GeometryConfig& geom, Mode mode) {
    return kz(geom.k(), mode == Mode::A ? geom.b : geom.a);
}

double lambda_bz(const GeometryConfig& geom) { return 2.0 * kPi / kz(geom, Mode::B); }

double antinode_separation(const GeometryConfig& geom) { return 0.75 * lambda_bz(geom); }

GeometryConfig ideal_geometry(double k_over_pi) {
    GeometryConfig geom;
    geom.k_over_pi = k_over_pi;
    geom.d = antinode_separation(geom);
    return geom;
}

double mode_profile(Mode mode, double x, double y, const GeometryConfig& geom) {
    if (x < 0.0 || x > geom.a || y < 0.0 || y > geom.b) {
        throw InvalidArgument("position (" + std::to_string(x) + ", " + std::to_string(y) +
                              ") lies outside the cross-section");
    }
    return mode == Mode::A ? std::sin(kPi * y / geom.b) : std::sin(kPi * x / geom.a);
}

Couplings couplings(const GeometryConfig& geom, const EmitterConfig& em) {
    return {-mode_profile(Mode::A, geom.x, geom.y, geom) * std::cos(em.theta),
            -mode_profile(Mode::B, geom.x, geom.y, geom) * std::sin(em.theta)};
}

EmissionRates emission_rates(const GeometryConfig& geom, const EmitterConfig& em) {
    const auto v = couplings(geom, em);
    return {2.0 * v.v_a * v.v_a, 2.0 * v.v_b * v.v_b};
}

std::vector<CrossSectionPoint> cross_section_map(const GeometryConfig& geom, double phase_diff,
                                                 int nx, int ny) {
    if (nx < 2 || ny < 2) throw InvalidArgument("cross-section grid needs at least 2 points per axis");
    std::vector<CrossSectionPoint> out;
    out.reserve(static_cast<std::size_t>(nx) * ny);
    const Complex shift = std::polar(1.0, phase_diff);
    for (int j = 0; j < ny; ++j) {
        const double y = geom.b * j / (ny - 1);
        for (int i = 0; i < nx; ++i) {
            const double x = geom.a * i / (nx - 1);
            const JonesState field{mode_profile(Mode::A, x, y, geom),
                                   mode_profile(Mode::B, x, y, geom) * shift};
            out.push_back({x, y, ellipse_angles(stokes_from_jones(field)),
                           std::sqrt(field.norm_squared())});
        }
    }
    return out;
}

}  // namespace polarix

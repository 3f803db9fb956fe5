#pragma once

#include <cmath>
#include <complex>
#include <random>

#include <Eigen/Dense>

#include "polarix/polarization.hpp"
#include "polarix/scattering.hpp"
#include "polarix/waveguide.hpp"

namespace testing {

using polarix::Complex;
using polarix::kPi;

inline double max_entry_error(const polarix::ScatteringMatrix& lhs, const polarix::ScatteringMatrix& rhs) {
    return std::max({std::abs(lhs.r_aa - rhs.r_aa), std::abs(lhs.r_ab - rhs.r_ab),
                     std::abs(lhs.r_ba - rhs.r_ba), std::abs(lhs.r_bb - rhs.r_bb)});
}

inline polarix::JonesState random_state(std::mt19937_64& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    return polarix::JonesState{{n(rng), n(rng)}, {n(rng), n(rng)}}.normalized();
}

/// Emitter + mirror problem written as a dense 7x7 linear system in the unknowns
/// (t_a, r_a, out_a, t_b, r_b, out_b, c_e) and solved with Eigen. Mirror at z = 0, emitter
/// at z = d, unit group velocities, Gamma0 = 1.
struct LinearSolveOracle {
    polarix::ScatteringMatrix matrix;
    Eigen::Matrix<Complex, 7, 1> from_a;
    Eigen::Matrix<Complex, 7, 1> from_b;
};

inline LinearSolveOracle linear_solve_oracle(const polarix::GeometryConfig& g, double theta, double alpha,
                                             double gamma_e) {
    const Complex i{0.0, 1.0};
    const double k = g.k_over_pi * kPi / g.a;
    const double ka = std::sqrt(k * k - std::pow(kPi / g.b, 2));
    const double kb = std::sqrt(k * k - std::pow(kPi / g.a, 2));
    const double va = -std::sin(kPi * g.y / g.b) * std::cos(theta);
    const double vb = -std::sin(kPi * g.x / g.a) * std::sin(theta);
    const Complex ea = std::exp(i * ka * g.d);
    const Complex eb = std::exp(i * kb * g.d);

    Eigen::Matrix<Complex, 7, 7> m = Eigen::Matrix<Complex, 7, 7>::Zero();
    m(0, 0) = -i / ea;
    m(0, 6) = va;
    m(1, 2) = -i * ea;
    m(1, 1) = i * ea;
    m(1, 6) = va;
    m(2, 3) = -i / eb;
    m(2, 6) = vb;
    m(3, 5) = -i * eb;
    m(3, 4) = i * eb;
    m(3, 6) = vb;
    m(4, 0) = va / (2.0 * ea);
    m(4, 1) = va * ea / 2.0;
    m(4, 2) = va * ea / 2.0;
    m(4, 3) = vb / (2.0 * eb);
    m(4, 4) = vb * eb / 2.0;
    m(4, 5) = vb * eb / 2.0;
    m(4, 6) = -Complex{alpha, gamma_e / 2.0};
    m(5, 1) = 1.0;
    m(5, 0) = -g.r_am;
    m(6, 4) = 1.0;
    m(6, 3) = -g.r_bm;

    LinearSolveOracle out;
    const auto lu = m.fullPivLu();
    for (int col = 0; col < 2; ++col) {
        Eigen::Matrix<Complex, 7, 1> rhs = Eigen::Matrix<Complex, 7, 1>::Zero();
        const double in_a = col == 0 ? 1.0 : 0.0;
        const double in_b = 1.0 - in_a;
        rhs(0) = -i * in_a / ea;
        rhs(2) = -i * in_b / eb;
        rhs(4) = -(va * in_a / (2.0 * ea) + vb * in_b / (2.0 * eb));
        const Eigen::Matrix<Complex, 7, 1> x = lu.solve(rhs);
        (col == 0 ? out.from_a : out.from_b) = x;
        if (col == 0) {
            out.matrix.r_aa = x(2);
            out.matrix.r_ba = x(5);
        } else {
            out.matrix.r_ab = x(2);
            out.matrix.r_bb = x(5);
        }
    }
    return out;
}

}  // namespace testing

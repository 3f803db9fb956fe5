#include "polarix/polarization.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "polarix/parse.hpp"

namespace polarix {

double wrap_angle(double angle, double lo, double period) {
    double shifted = std::fmod(angle - lo, period);
    if (shifted < 0.0) shifted += period;
    // fmod can return exactly `period` after the correction above for tiny negatives.
    if (shifted >= period) shifted -= period;
    return lo + shifted;
}

JonesState JonesState::normalized() const {
    const double n = std::sqrt(norm_squared());
    if (n == 0.0) throw InvalidArgument("cannot normalize the zero Jones vector");
    return {a / n, b / n};
}

void require_normalized(const JonesState& state, std::string_view what) {
    if (std::abs(state.norm_squared() - 1.0) > 1e-12) {
        throw InvalidArgument(std::string(what) + " must be normalized (|a|^2+|b|^2 = " +
                              std::to_string(state.norm_squared()) + ")");
    }
}

void require_physical_output(const JonesState& state, std::string_view what) {
    if (state.norm_squared() > 1.0 + 1e-9) {
        throw InvalidArgument(std::string(what) + " has norm above one");
    }
}

double StokesVector::norm() const { return std::sqrt(s1 * s1 + s2 * s2 + s3 * s3); }

namespace states {

namespace {
const Complex kPlus = std::polar(1.0 / std::sqrt(2.0), kPi / 4.0);
const Complex kMinus = std::polar(1.0 / std::sqrt(2.0), -kPi / 4.0);
}  // namespace

JonesState horizontal() { return {1.0, 0.0}; }
JonesState vertical() { return {0.0, 1.0}; }
JonesState right_circular() { return {kPlus, kMinus}; }
JonesState left_circular() { return {kMinus, kPlus}; }
JonesState diagonal() { return linear(kPi / 4.0); }

JonesState linear(double zeta) {
    if (!(zeta >= 0.0 && zeta < kPi)) {
        throw InvalidArgument("linear polarization angle must lie in [0, pi), got " +
                              std::to_string(zeta));
    }
    return {std::cos(zeta), std::sin(zeta)};
}

}  // namespace states

JonesState parse_state(std::string_view text) {
    if (text == "H") return states::horizontal();
    if (text == "V") return states::vertical();
    if (text == "R") return states::right_circular();
    if (text == "L") return states::left_circular();
    if (text == "D") return states::diagonal();

    constexpr std::string_view kLinear = "linear:";
    constexpr std::string_view kJones = "jones:";
    if (text.starts_with(kLinear)) {
        const double deg = parse_double(text.substr(kLinear.size()), "linear angle");
        return states::linear(deg * kPi / 180.0);
    }
    if (text.starts_with(kJones)) {
        const auto parts = split(text.substr(kJones.size()), ',');
        if (parts.size() != 4) {
            throw InvalidArgument("jones state needs four components reA,imA,reB,imB: '" +
                                  std::string(text) + "'");
        }
        std::vector<double> v;
        for (auto p : parts) v.push_back(parse_double(p, "jones component"));
        JonesState raw{{v[0], v[1]}, {v[2], v[3]}};
        if (raw.norm_squared() == 0.0) throw InvalidArgument("jones state is the zero vector");
        return raw.normalized();
    }
    throw InvalidArgument("unknown polarization state '" + std::string(text) +
                          "' (expected H, V, L, R, D, linear:<deg> or jones:<reA>,<imA>,<reB>,<imB>)");
}

StokesVector stokes_from_jones(const JonesState& state) {
    // 2 a conj(b) = 2|a||b| e^{i(arg a - arg b)}
    const Complex cross = 2.0 * state.a * std::conj(state.b);
    return {std::norm(state.a) - std::norm(state.b), cross.real(), cross.imag()};
}

EllipseAngles ellipse_angles(const StokesVector& s) {
    const double in_plane = std::hypot(s.s1, s.s2);
    // Major axis undefined for (numerically) circular light.
    const bool circular = in_plane <= 1e-12 * s.norm();
    EllipseAngles out;
    out.eta = circular ? 0.0 : wrap_angle(0.5 * std::atan2(s.s2, s.s1), 0.0, kPi);
    out.chi = 0.5 * std::atan2(s.s3, in_plane);
    return out;
}

Complex inner(const JonesState& lhs, const JonesState& rhs) {
    return std::conj(lhs.a) * rhs.a + std::conj(lhs.b) * rhs.b;
}

double fidelity(const JonesState& result, const JonesState& target) {
    return std::norm(inner(target, result));
}

double dissipation_probability(const JonesState& result) {
    return std::max(0.0, 1.0 - result.norm_squared());
}

}  // namespace polarix

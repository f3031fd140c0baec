#pragma once

#include <cmath>
#include <complex>
#include <numbers>

#include "spikedft/errors.hpp"

namespace spikedft {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Equality tolerance for single arithmetic steps.
inline constexpr double kArithmeticTol = 1e-12;
/// Equality tolerance for chained computations (transform + inverse, etc.).
inline constexpr double kChainedTol = 1e-9;
/// Magnitudes below this are treated as zero; their phase is 0 canonically.
inline constexpr double kZeroMagnitude = 1e-12;

/// Half-open interval a wrapped angle lands in.
enum class PhaseConvention {
    HalfOpenPi,  ///< (-pi, pi] — spectrum plots and internal storage
    HalfOpenTwoPi,  ///< [0, 2pi) — polar plots
};

/// A complex value in polar form: magnitude >= 0, phase in radians.
struct Phasor {
    double magnitude = 0.0;
    double phase = 0.0;
};

/// Components of a gradient expressed in the polar frame.
struct PolarGradient {
    double radial_component = 0.0;
    double angular_component = 0.0;
};

/// Reduce an angle modulo 2*pi into the convention's half-open interval.
///
/// Exact on already-wrapped inputs (idempotent), and the open endpoint maps
/// to the closed one: wrap(-pi) = +pi under (-pi, pi], wrap(-pi) = +pi under
/// [0, 2pi) as well.
inline double wrap_phase(double theta, PhaseConvention convention = PhaseConvention::HalfOpenPi) {
    if (!std::isfinite(theta)) {
        throw InvalidPhase("wrap_phase: non-finite angle");
    }
    if (convention == PhaseConvention::HalfOpenPi) {
        double r = std::remainder(theta, kTwoPi);  // exact, lands in [-pi, pi]
        if (r <= -kPi) {
            r += kTwoPi;
        }
        return r;
    }
    double r = std::fmod(theta, kTwoPi);
    if (r < 0.0) {
        r += kTwoPi;
    }
    if (r >= kTwoPi) {
        r = 0.0;  // fold the rounding case x = -eps back to the closed end
    }
    return r;
}

/// Distance between two angles on the circle, in [0, pi].
inline double phase_distance(double a, double b) {
    return std::abs(std::remainder(a - b, kTwoPi));
}

inline std::complex<double> to_complex(const Phasor& p) {
    return {p.magnitude * std::cos(p.phase), p.magnitude * std::sin(p.phase)};
}

/// Canonical polar form of a complex value: magnitude >= 0, phase wrapped to
/// (-pi, pi], and phase 0 when the magnitude is below kZeroMagnitude.
inline Phasor phasor_from_complex(const std::complex<double>& z) {
    const double magnitude = std::hypot(z.real(), z.imag());
    if (magnitude < kZeroMagnitude) {
        return {magnitude, 0.0};
    }
    return {magnitude, wrap_phase(std::atan2(z.imag(), z.real()))};
}

/// Sum of two phasors, computed in polar form:
///
///   r_s     = sqrt(r1^2 + r2^2 + 2 r1 r2 cos(theta1 - theta2))
///   theta_s = atan2(r1 sin(theta1) + r2 sin(theta2),
///                   r1 cos(theta1) + r2 cos(theta2))
///
/// The two-argument arctangent keeps the quadrant right where a plain
/// tangent ratio would not. When r_s < kZeroMagnitude the phase is 0.
inline Phasor phasor_sum(const Phasor& a, const Phasor& b) {
    const double magnitude_sq = a.magnitude * a.magnitude + b.magnitude * b.magnitude +
                                2.0 * a.magnitude * b.magnitude * std::cos(a.phase - b.phase);
    const double magnitude = std::sqrt(std::max(magnitude_sq, 0.0));
    if (magnitude < kZeroMagnitude) {
        return {magnitude, 0.0};
    }
    const double re = a.magnitude * std::cos(a.phase) + b.magnitude * std::cos(b.phase);
    const double im = a.magnitude * std::sin(a.phase) + b.magnitude * std::sin(b.phase);
    return {magnitude, wrap_phase(std::atan2(im, re))};
}

/// Gradient components in the polar frame: the angular part carries the
/// compensating 1/r factor, so it is undefined at the origin.
inline PolarGradient polar_gradient(double dY_dr, double dY_dtheta, double r) {
    if (!(r > 0.0)) {
        throw SingularOrigin("polar_gradient: r must be positive");
    }
    return {dY_dr, dY_dtheta / r};
}

} // namespace spikedft

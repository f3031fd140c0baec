#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "spikedft/dft.hpp"
#include "spikedft/errors.hpp"
#include "spikedft/phasor.hpp"

namespace spikedft {

/// Binary impulse positions inside one period of length N. The empty set is
/// the all-zero pattern.
struct ImpulsePattern {
    std::size_t length = 0;
    std::vector<std::size_t> delays;  // sorted, distinct, each < length
};

/// The common phase difference between adjacent coefficients of a delayed
/// unit impulse, as a real angle wrapped to (-pi, pi].
struct PhaseIncrement {
    double delta_phi = 0.0;
};

/// Magnitudes must sit within this of their mean to count as uniform.
inline constexpr double kMagnitudeUniformityTol = 1e-9;
/// Adjacent phase differences must agree circularly within this.
inline constexpr double kPhaseAgreementTol = 1e-9;
/// A decoded delay may sit at most this far from an integer, in samples.
inline constexpr double kDelayResidualTol = 1e-6;

inline ImpulsePattern make_impulse_pattern(std::size_t length, std::vector<std::size_t> delays) {
    if (length == 0) {
        throw ValidationError("impulse pattern needs length >= 1");
    }
    std::sort(delays.begin(), delays.end());
    for (std::size_t i = 0; i < delays.size(); ++i) {
        if (delays[i] >= length) {
            throw InvalidDelay("impulse delay " + std::to_string(delays[i]) +
                               " outside [0, " + std::to_string(length) + ")");
        }
        if (i > 0 && delays[i] == delays[i - 1]) {
            throw InvalidDelay("duplicate impulse delay " + std::to_string(delays[i]));
        }
    }
    return {length, std::move(delays)};
}

/// Parse a bit string like "0110" into a pattern.
inline ImpulsePattern pattern_from_bits(std::string_view bits) {
    if (bits.empty()) {
        throw ParseError("empty bit pattern");
    }
    std::vector<std::size_t> delays;
    for (std::size_t n = 0; n < bits.size(); ++n) {
        if (bits[n] == '1') {
            delays.push_back(n);
        } else if (bits[n] != '0') {
            throw ParseError("bit pattern may contain only '0' and '1'");
        }
    }
    return {bits.size(), std::move(delays)};
}

inline std::string bits(const ImpulsePattern& pattern) {
    std::string out(pattern.length, '0');
    for (std::size_t d : pattern.delays) {
        out[d] = '1';
    }
    return out;
}

/// Materialize the pattern as a real signal: x[n] = 1 at impulse positions.
inline Signal impulse_signal(const ImpulsePattern& pattern) {
    if (pattern.length == 0) {
        throw ValidationError("impulse pattern needs length >= 1");
    }
    std::vector<double> samples(pattern.length, 0.0);
    for (std::size_t d : pattern.delays) {
        if (d >= pattern.length) {
            throw InvalidDelay("impulse delay outside the pattern");
        }
        samples[d] = 1.0;
    }
    return {std::move(samples)};
}

/// Spectrum of a unit impulse delayed by n0: coefficient k is
/// 1 at angle -2 pi k n0 / N, wrapped. Matches dft(impulse_signal(...)).
inline Spectrum encode_delay(std::size_t n_samples, std::size_t n0) {
    if (n_samples == 0) {
        throw ValidationError("encode_delay: length must be >= 1");
    }
    if (n0 >= n_samples) {
        throw InvalidDelay("encode_delay: delay " + std::to_string(n0) + " outside [0, " +
                           std::to_string(n_samples) + ")");
    }
    std::vector<Phasor> coefficients(n_samples);
    for (std::size_t k = 0; k < n_samples; ++k) {
        const double angle = -kTwoPi * static_cast<double>((k * n0) % n_samples) /
                             static_cast<double>(n_samples);
        coefficients[k] = {1.0, wrap_phase(angle)};
    }
    return {std::move(coefficients)};
}

/// Extract the phase difference between adjacent coefficients.
///
/// Preconditions mirror the encoding model: every magnitude close to one
/// common nonzero value, and all N-1 adjacent differences equal after
/// wrapping. Violations throw ZeroSpectrum, NonUniformMagnitude or
/// NonLinearPhase.
inline PhaseIncrement phase_increment(const Spectrum& y) {
    validate_spectrum(y);
    const std::size_t n_bins = y.coefficients.size();

    double mean_magnitude = 0.0;
    double max_magnitude = 0.0;
    for (const Phasor& c : y.coefficients) {
        mean_magnitude += c.magnitude;
        max_magnitude = std::max(max_magnitude, c.magnitude);
    }
    mean_magnitude /= static_cast<double>(n_bins);
    if (max_magnitude < kZeroMagnitude) {
        throw ZeroSpectrum("phase_increment: all coefficients are zero");
    }
    for (const Phasor& c : y.coefficients) {
        if (std::abs(c.magnitude - mean_magnitude) > kMagnitudeUniformityTol) {
            throw NonUniformMagnitude("phase_increment: magnitudes are not uniform");
        }
    }

    if (n_bins == 1) {
        return {0.0};  // a single bin carries no increment; zero delay
    }

    const double first = wrap_phase(y.coefficients[1].phase - y.coefficients[0].phase);
    for (std::size_t k = 1; k + 1 < n_bins; ++k) {
        const double diff = wrap_phase(y.coefficients[k + 1].phase - y.coefficients[k].phase);
        if (phase_distance(diff, first) > kPhaseAgreementTol) {
            throw NonLinearPhase("phase_increment: adjacent phase differences disagree");
        }
    }
    return {first};
}

/// Recover the impulse delay from the phase increment:
///
///   n0 = round(-delta_phi * N / (2 pi))  (mod N)
///
/// Phase is 2 pi periodic, so the result is the canonical representative in
/// [0, N). Propagates phase_increment errors; throws NonIntegerDelay when the
/// increment does not sit on an integer delay.
inline std::size_t decode_delay(const Spectrum& y) {
    const PhaseIncrement increment = phase_increment(y);
    const long length = static_cast<long>(y.coefficients.size());
    const double raw = -increment.delta_phi * static_cast<double>(length) / kTwoPi;
    const double rounded = std::round(raw);
    if (std::abs(raw - rounded) > kDelayResidualTol) {
        throw NonIntegerDelay("decode_delay: increment maps to non-integer delay " +
                              std::to_string(raw));
    }
    const long n0 = ((static_cast<long>(rounded) % length) + length) % length;
    return static_cast<std::size_t>(n0);
}

} // namespace spikedft

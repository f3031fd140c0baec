#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "spikedft/errors.hpp"
#include "spikedft/phasor.hpp"

namespace spikedft {

/// A length-N sequence of real samples x[0..N-1].
struct Signal {
    std::vector<double> samples;

    std::size_t size() const { return samples.size(); }
};

/// Ordered coefficients C_0..C_{N-1} in polar form. The fundamental angular
/// frequency is 2*pi/N radians per sample; bin k oscillates at k times it.
struct Spectrum {
    std::vector<Phasor> coefficients;

    std::size_t size() const { return coefficients.size(); }
    double omega0() const { return kTwoPi / static_cast<double>(coefficients.size()); }
};

/// Maximum tolerated imaginary residual when reconstructing a signal that is
/// claimed to be real.
inline constexpr double kImaginaryResidualLimit = 1e-6;

inline void validate_signal(const Signal& x) {
    if (x.samples.empty()) {
        throw ValidationError("signal must have at least one sample");
    }
    for (double v : x.samples) {
        if (!std::isfinite(v)) {
            throw ValidationError("signal samples must be finite");
        }
    }
}

inline void validate_spectrum(const Spectrum& y) {
    if (y.coefficients.empty()) {
        throw ValidationError("spectrum must have at least one coefficient");
    }
    for (const Phasor& c : y.coefficients) {
        if (!(c.magnitude >= 0.0) || !std::isfinite(c.magnitude) || !std::isfinite(c.phase)) {
            throw ValidationError("spectrum coefficients must be finite with magnitude >= 0");
        }
    }
}

/// Direct transform, evaluated as the plain O(N^2) sum
///
///   C_k = sum_n x[n] * e^{-i 2 pi k n / N}
///
/// The product k*n is reduced mod N before the angle is formed, which keeps
/// every evaluated angle inside one period.
inline Spectrum dft(const Signal& x) {
    validate_signal(x);
    const std::size_t n_samples = x.samples.size();
    const double length = static_cast<double>(n_samples);
    std::vector<Phasor> coefficients(n_samples);
    for (std::size_t k = 0; k < n_samples; ++k) {
        double re = 0.0;
        double im = 0.0;
        for (std::size_t n = 0; n < n_samples; ++n) {
            const double angle = -kTwoPi * static_cast<double>((k * n) % n_samples) / length;
            re += x.samples[n] * std::cos(angle);
            im += x.samples[n] * std::sin(angle);
        }
        coefficients[k] = phasor_from_complex({re, im});
    }
    return {std::move(coefficients)};
}

/// Inverse transform with 1/N normalization:
///
///   x[n] = (1/N) * sum_k C_k * e^{i 2 pi k n / N}
///
/// Returns the real parts. Throws ImaginaryResidual when any imaginary part
/// exceeds kImaginaryResidualLimit — the spectrum did not come from a real
/// signal.
inline Signal reconstruct(const Spectrum& y) {
    validate_spectrum(y);
    const std::size_t n_bins = y.coefficients.size();
    const double length = static_cast<double>(n_bins);
    std::vector<double> samples(n_bins);
    double worst_residual = 0.0;
    for (std::size_t n = 0; n < n_bins; ++n) {
        double re = 0.0;
        double im = 0.0;
        for (std::size_t k = 0; k < n_bins; ++k) {
            const Phasor& c = y.coefficients[k];
            const double angle =
                c.phase + kTwoPi * static_cast<double>((k * n) % n_bins) / length;
            re += c.magnitude * std::cos(angle);
            im += c.magnitude * std::sin(angle);
        }
        samples[n] = re / length;
        worst_residual = std::max(worst_residual, std::abs(im / length));
    }
    if (worst_residual > kImaginaryResidualLimit) {
        throw ImaginaryResidual("reconstruct: imaginary residual " +
                                std::to_string(worst_residual) +
                                " exceeds " + std::to_string(kImaginaryResidualLimit));
    }
    return {std::move(samples)};
}

/// The transform sum evaluated at a real-valued bin index. Agrees with dft()
/// at integer k and fills in the spectrum between bins.
inline Phasor fractional_dft(const Signal& x, double k) {
    validate_signal(x);
    if (!std::isfinite(k)) {
        throw ValidationError("fractional_dft: bin index must be finite");
    }
    const double length = static_cast<double>(x.samples.size());
    double re = 0.0;
    double im = 0.0;
    for (std::size_t n = 0; n < x.samples.size(); ++n) {
        const double angle = -kTwoPi * std::fmod(k * static_cast<double>(n), length) / length;
        re += x.samples[n] * std::cos(angle);
        im += x.samples[n] * std::sin(angle);
    }
    return phasor_from_complex({re, im});
}

/// Analytic derivative of fractional_dft with respect to the bin index:
///
///   dC/dk = sum_n x[n] * (-i 2 pi n / N) * e^{-i 2 pi k n / N}
///
/// For a delayed unit impulse this is (-i 2 pi n0 / N) times the coefficient,
/// i.e. proportional to the phase increment between adjacent bins.
inline Phasor spectrum_derivative(const Signal& x, double k) {
    validate_signal(x);
    if (!std::isfinite(k)) {
        throw ValidationError("spectrum_derivative: bin index must be finite");
    }
    const double length = static_cast<double>(x.samples.size());
    double re = 0.0;
    double im = 0.0;
    for (std::size_t n = 0; n < x.samples.size(); ++n) {
        const double weight = kTwoPi * static_cast<double>(n) / length;
        const double angle = -kTwoPi * std::fmod(k * static_cast<double>(n), length) / length;
        // -i * w * e^{i angle} = w*sin(angle) - i*w*cos(angle)
        re += x.samples[n] * weight * std::sin(angle);
        im -= x.samples[n] * weight * std::cos(angle);
    }
    return phasor_from_complex({re, im});
}

/// Delay the underlying signal by n0 samples (taken mod N): coefficient k is
/// rotated by e^{-i 2 pi k n0 / N}. Magnitudes are untouched.
inline Spectrum time_shift_spectrum(const Spectrum& y, long n0) {
    validate_spectrum(y);
    const std::size_t n_bins = y.coefficients.size();
    const long length = static_cast<long>(n_bins);
    const std::size_t shift = static_cast<std::size_t>(((n0 % length) + length) % length);
    std::vector<Phasor> coefficients(n_bins);
    for (std::size_t k = 0; k < n_bins; ++k) {
        const Phasor& c = y.coefficients[k];
        if (c.magnitude < kZeroMagnitude) {
            coefficients[k] = {c.magnitude, 0.0};
            continue;
        }
        const double rotation =
            -kTwoPi * static_cast<double>((k * shift) % n_bins) / static_cast<double>(n_bins);
        coefficients[k] = {c.magnitude, wrap_phase(c.phase + rotation)};
    }
    return {std::move(coefficients)};
}

/// Coefficient-wise phasor sum of same-length spectra (transform linearity).
inline Spectrum superpose(std::span<const Spectrum> spectra) {
    if (spectra.empty()) {
        throw ValidationError("superpose: need at least one spectrum");
    }
    const std::size_t n_bins = spectra.front().size();
    for (const Spectrum& y : spectra) {
        validate_spectrum(y);
        if (y.size() != n_bins) {
            throw LengthMismatch("superpose: spectra differ in length");
        }
    }
    Spectrum result = spectra.front();
    for (std::size_t i = 1; i < spectra.size(); ++i) {
        for (std::size_t k = 0; k < n_bins; ++k) {
            result.coefficients[k] = phasor_sum(result.coefficients[k], spectra[i].coefficients[k]);
        }
    }
    return result;
}

inline Spectrum superpose(std::initializer_list<Spectrum> spectra) {
    return superpose(std::span<const Spectrum>(spectra.begin(), spectra.size()));
}

} // namespace spikedft

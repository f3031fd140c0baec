#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "spikedft/dft.hpp"
#include "spikedft/errors.hpp"
#include "spikedft/phasor.hpp"

namespace spikedft {

/// One spiking neuron: a complex exponential
///
///   s(t) = A * e^{i (omega0 * k * t + phi)}
///
/// whose amplitude and initial phase come from spectrum coefficient k.
struct SpikingNeuron {
    std::size_t index = 0;      ///< frequency bin k
    double amplitude = 0.0;     ///< A >= 0
    double initial_phase = 0.0; ///< phi, radians
    double omega0 = 0.0;        ///< fundamental, radians per sample
};

/// Exactly N neurons, one per bin k = 0..N-1, sharing omega0 = 2 pi / N.
/// Neuron 0 is the constant (zero-frequency) component.
struct SpikingNetwork {
    std::vector<SpikingNeuron> neurons;

    std::size_t size() const { return neurons.size(); }
};

/// Complex samples of a neuron (or neuron sum) on a time grid refined by an
/// interpolation factor F: t_j = j / F for j = 0..N*F-1. Every F-th sample
/// lands on an original integer time.
struct NeuronTrace {
    std::vector<double> times;
    std::vector<std::complex<double>> values;
    std::size_t marker_stride = 1;
};

/// Default trace refinement between integer samples.
inline constexpr int kDefaultInterpolation = 10;

/// One neuron per coefficient: A = |C_k|, phi = angle(C_k). Zero-magnitude
/// coefficients yield a silent neuron with phase 0.
inline SpikingNetwork network_from_spectrum(const Spectrum& y) {
    validate_spectrum(y);
    const double omega0 = y.omega0();
    std::vector<SpikingNeuron> neurons;
    neurons.reserve(y.size());
    for (std::size_t k = 0; k < y.size(); ++k) {
        const Phasor& c = y.coefficients[k];
        if (c.magnitude < kZeroMagnitude) {
            neurons.push_back({k, c.magnitude, 0.0, omega0});
        } else {
            neurons.push_back({k, c.magnitude, wrap_phase(c.phase), omega0});
        }
    }
    return {std::move(neurons)};
}

/// Evaluate the neuron's continuous exponential over one period of length
/// n_samples, refined by factor interpolation. Evaluates at fractional t
/// directly rather than interpolating discrete samples, so magnitude stays
/// exactly A everywhere on the grid.
inline NeuronTrace neuron_trace(const SpikingNeuron& neuron, std::size_t n_samples,
                                int interpolation) {
    if (n_samples == 0) {
        throw ValidationError("neuron_trace: period length must be >= 1");
    }
    if (interpolation < 1) {
        throw ValidationError("neuron_trace: interpolation factor must be >= 1");
    }
    const std::size_t count = n_samples * static_cast<std::size_t>(interpolation);
    NeuronTrace trace;
    trace.times.resize(count);
    trace.values.resize(count);
    trace.marker_stride = static_cast<std::size_t>(interpolation);
    const double rate = neuron.omega0 * static_cast<double>(neuron.index);
    for (std::size_t j = 0; j < count; ++j) {
        const double t = static_cast<double>(j) / static_cast<double>(interpolation);
        const double angle = rate * t + neuron.initial_phase;
        trace.times[j] = t;
        trace.values[j] = {neuron.amplitude * std::cos(angle),
                           neuron.amplitude * std::sin(angle)};
    }
    return trace;
}

/// Pointwise sum of all neuron traces, scaled by 1/N. At integer times the
/// real parts reproduce the signal the spectrum was taken from.
inline NeuronTrace network_sum_trace(const SpikingNetwork& network, int interpolation) {
    if (network.neurons.empty()) {
        throw ValidationError("network_sum_trace: network is empty");
    }
    const std::size_t n_neurons = network.size();
    NeuronTrace sum = neuron_trace(network.neurons.front(), n_neurons, interpolation);
    for (std::size_t k = 1; k < n_neurons; ++k) {
        const NeuronTrace trace = neuron_trace(network.neurons[k], n_neurons, interpolation);
        for (std::size_t j = 0; j < sum.values.size(); ++j) {
            sum.values[j] += trace.values[j];
        }
    }
    const double scale = 1.0 / static_cast<double>(n_neurons);
    for (std::complex<double>& v : sum.values) {
        v *= scale;
    }
    return sum;
}

} // namespace spikedft

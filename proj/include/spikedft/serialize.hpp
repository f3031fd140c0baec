#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "spikedft/codec.hpp"
#include "spikedft/dft.hpp"
#include "spikedft/errors.hpp"
#include "spikedft/neuron.hpp"
#include "spikedft/table.hpp"

namespace spikedft {

/// Canonical number formatting for all emitted JSON/CSV: 12 significant
/// digits, negative zero folded to zero. Output is byte-deterministic for
/// identical inputs.
inline std::string format_number(double v) {
    if (v == 0.0) {
        v = 0.0;  // drop the sign of -0.0
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

namespace detail {

inline std::string join_numbers(const std::vector<double>& values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        out += format_number(values[i]);
    }
    out += "]";
    return out;
}

} // namespace detail

inline std::string signal_to_json(const Signal& x) {
    std::string out = "{\n";
    out += "  \"n\": " + std::to_string(x.size()) + ",\n";
    out += "  \"samples\": " + detail::join_numbers(x.samples) + "\n";
    out += "}\n";
    return out;
}

inline std::string spectrum_to_json(const Spectrum& y,
                                    PhaseConvention convention = PhaseConvention::HalfOpenPi) {
    validate_spectrum(y);
    std::string out = "{\n";
    out += "  \"n\": " + std::to_string(y.size()) + ",\n";
    out += "  \"omega0\": " + format_number(y.omega0()) + ",\n";
    out += "  \"coefficients\": [\n";
    for (std::size_t k = 0; k < y.size(); ++k) {
        const Phasor& c = y.coefficients[k];
        const double theta = c.magnitude < kZeroMagnitude ? 0.0 : wrap_phase(c.phase, convention);
        const std::complex<double> z = to_complex(c);
        out += "    {\"k\": " + std::to_string(k);
        out += ", \"r\": " + format_number(c.magnitude);
        out += ", \"theta\": " + format_number(theta);
        out += ", \"re\": " + format_number(z.real());
        out += ", \"im\": " + format_number(z.imag());
        out += k + 1 < y.size() ? "},\n" : "}\n";
    }
    out += "  ]\n}\n";
    return out;
}

inline std::string spectrum_to_csv(const Spectrum& y,
                                   PhaseConvention convention = PhaseConvention::HalfOpenPi) {
    validate_spectrum(y);
    std::string out = "k,r,theta,re,im\n";
    for (std::size_t k = 0; k < y.size(); ++k) {
        const Phasor& c = y.coefficients[k];
        const double theta = c.magnitude < kZeroMagnitude ? 0.0 : wrap_phase(c.phase, convention);
        const std::complex<double> z = to_complex(c);
        out += std::to_string(k) + "," + format_number(c.magnitude) + "," + format_number(theta) +
               "," + format_number(z.real()) + "," + format_number(z.imag()) + "\n";
    }
    return out;
}

inline std::string signal_to_csv(const Signal& x) {
    std::string out = "n,x\n";
    for (std::size_t n = 0; n < x.size(); ++n) {
        out += std::to_string(n) + "," + format_number(x.samples[n]) + "\n";
    }
    return out;
}

/// Per-neuron traces plus the 1/N-scaled sum, on the refined time grid.
inline std::string traces_to_json(const SpikingNetwork& network, int interpolation,
                                  PhaseConvention convention = PhaseConvention::HalfOpenPi) {
    const std::size_t n_neurons = network.size();
    const NeuronTrace sum = network_sum_trace(network, interpolation);
    std::string out = "{\n";
    out += "  \"n\": " + std::to_string(n_neurons) + ",\n";
    out += "  \"interp\": " + std::to_string(interpolation) + ",\n";
    out += "  \"marker_stride\": " + std::to_string(sum.marker_stride) + ",\n";
    out += "  \"times\": " + detail::join_numbers(sum.times) + ",\n";
    out += "  \"neurons\": [\n";
    for (std::size_t k = 0; k < n_neurons; ++k) {
        const SpikingNeuron& neuron = network.neurons[k];
        const NeuronTrace trace = neuron_trace(neuron, n_neurons, interpolation);
        std::vector<double> real(trace.values.size());
        std::vector<double> phase(trace.values.size());
        for (std::size_t j = 0; j < trace.values.size(); ++j) {
            real[j] = trace.values[j].real();
            phase[j] = neuron.amplitude < kZeroMagnitude
                           ? 0.0
                           : wrap_phase(std::arg(trace.values[j]), convention);
        }
        out += "    {\"k\": " + std::to_string(k);
        out += ", \"amplitude\": " + format_number(neuron.amplitude);
        out += ", \"initial_phase\": " + format_number(neuron.initial_phase);
        out += ",\n     \"real\": " + detail::join_numbers(real);
        out += ",\n     \"phase\": " + detail::join_numbers(phase);
        out += k + 1 < n_neurons ? "},\n" : "}\n";
    }
    out += "  ],\n";
    std::vector<double> sum_real(sum.values.size());
    std::vector<double> sum_imag(sum.values.size());
    for (std::size_t j = 0; j < sum.values.size(); ++j) {
        sum_real[j] = sum.values[j].real();
        sum_imag[j] = sum.values[j].imag();
    }
    out += "  \"sum\": {\"real\": " + detail::join_numbers(sum_real);
    out += ", \"imag\": " + detail::join_numbers(sum_imag) + "}\n";
    out += "}\n";
    return out;
}

inline std::string traces_to_csv(const SpikingNetwork& network, int interpolation,
                                 PhaseConvention convention = PhaseConvention::HalfOpenPi) {
    const std::size_t n_neurons = network.size();
    const NeuronTrace sum = network_sum_trace(network, interpolation);
    std::vector<NeuronTrace> traces;
    traces.reserve(n_neurons);
    for (const SpikingNeuron& neuron : network.neurons) {
        traces.push_back(neuron_trace(neuron, n_neurons, interpolation));
    }
    std::string out = "t";
    for (std::size_t k = 0; k < n_neurons; ++k) {
        out += ",s" + std::to_string(k) + "_real,s" + std::to_string(k) + "_phase";
    }
    out += ",sum_real,sum_imag\n";
    for (std::size_t j = 0; j < sum.times.size(); ++j) {
        out += format_number(sum.times[j]);
        for (std::size_t k = 0; k < n_neurons; ++k) {
            const double phase = network.neurons[k].amplitude < kZeroMagnitude
                                     ? 0.0
                                     : wrap_phase(std::arg(traces[k].values[j]), convention);
            out += "," + format_number(traces[k].values[j].real());
            out += "," + format_number(phase);
        }
        out += "," + format_number(sum.values[j].real());
        out += "," + format_number(sum.values[j].imag());
        out += "\n";
    }
    return out;
}

inline const char* table_family_name(TableFamily family) {
    switch (family) {
    case TableFamily::Single: return "single";
    case TableFamily::Double: return "double";
    case TableFamily::Triple: return "triple";
    case TableFamily::All: return "all";
    }
    return "unknown";
}

inline std::string table_to_json(const std::vector<TableRow>& rows, std::size_t n,
                                 TableFamily family,
                                 PhaseConvention convention = PhaseConvention::HalfOpenPi) {
    std::string out = "{\n";
    out += "  \"n\": " + std::to_string(n) + ",\n";
    out += "  \"family\": \"" + std::string(table_family_name(family)) + "\",\n";
    out += "  \"rows\": [\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const TableRow& row = rows[i];
        out += "    {\"pattern\": \"" + row.pattern + "\"";
        out += ", \"n0\": " + (row.n0 ? std::to_string(*row.n0) : std::string("null"));
        out += ", \"delta_phi\": " +
               (row.delta_phi ? format_number(wrap_phase(*row.delta_phi, convention))
                              : std::string("null"));
        out += ",\n     \"coefficients\": [";
        for (std::size_t k = 0; k < row.coefficients.size(); ++k) {
            const Phasor& c = row.coefficients[k];
            const double theta =
                c.magnitude < kZeroMagnitude ? 0.0 : wrap_phase(c.phase, convention);
            if (k > 0) {
                out += ", ";
            }
            out += "{\"k\": " + std::to_string(k) + ", \"r\": " + format_number(c.magnitude) +
                   ", \"theta\": " + format_number(theta) + "}";
        }
        out += "]";
        out += i + 1 < rows.size() ? "},\n" : "}\n";
    }
    out += "  ]\n}\n";
    return out;
}

inline std::string table_to_csv(const std::vector<TableRow>& rows,
                                PhaseConvention convention = PhaseConvention::HalfOpenPi) {
    std::string out = "pattern,n0,k,r,theta,re,im,delta_phi\n";
    for (const TableRow& row : rows) {
        for (std::size_t k = 0; k < row.coefficients.size(); ++k) {
            const Phasor& c = row.coefficients[k];
            const double theta =
                c.magnitude < kZeroMagnitude ? 0.0 : wrap_phase(c.phase, convention);
            const std::complex<double> z = to_complex(c);
            out += row.pattern + ",";
            out += row.n0 ? std::to_string(*row.n0) : std::string();
            out += "," + std::to_string(k) + "," + format_number(c.magnitude) + "," +
                   format_number(theta) + "," + format_number(z.real()) + "," +
                   format_number(z.imag()) + ",";
            out += row.delta_phi ? format_number(wrap_phase(*row.delta_phi, convention))
                                 : std::string();
            out += "\n";
        }
    }
    return out;
}

/// Fixed-width text rendering of a table, one row per pattern. Cells show
/// magnitude and angle; the increment column is "-" where none exists.
inline std::string table_to_text(const std::vector<TableRow>& rows,
                                 PhaseConvention convention = PhaseConvention::HalfOpenPi) {
    if (rows.empty()) {
        return "(empty table)\n";
    }
    const std::size_t n = rows.front().coefficients.size();
    auto cell = [&](const Phasor& c) {
        double theta = c.magnitude < kZeroMagnitude ? 0.0 : wrap_phase(c.phase, convention);
        if (theta == 0.0) {
            theta = 0.0;
        }
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.6f∠%.6f", c.magnitude, theta);
        return std::string(buf);
    };
    const std::size_t pattern_width = std::max<std::size_t>(7, rows.front().pattern.size());
    const std::size_t cell_width = 20;
    auto pad = [](std::string s, std::size_t width) {
        if (s.size() < width) {
            s.append(width - s.size(), ' ');
        }
        return s;
    };
    std::string out = pad("pattern", pattern_width + 2) + pad("n0", 4);
    for (std::size_t k = 0; k < n; ++k) {
        out += pad("Y" + std::to_string(k), cell_width);
    }
    out += "dphi\n";
    for (const TableRow& row : rows) {
        out += pad(row.pattern, pattern_width + 2);
        out += pad(row.n0 ? std::to_string(*row.n0) : "-", 4);
        for (const Phasor& c : row.coefficients) {
            // The angle sign occupies three bytes but one column.
            out += pad(cell(c), cell_width + 2);
        }
        if (row.delta_phi) {
            double delta = wrap_phase(*row.delta_phi, convention);
            if (delta == 0.0) {
                delta = 0.0;
            }
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.6f", delta);
            out += buf;
        } else {
            out += "-";
        }
        out += "\n";
    }
    return out;
}

// ---------------------------------------------------------------------------
// Parsing

inline nlohmann::json parse_json_text(const std::string& text) {
    nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
    if (doc.is_discarded()) {
        throw ParseError("malformed JSON input");
    }
    return doc;
}

inline Signal signal_from_json(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("samples") || !doc["samples"].is_array()) {
        throw ParseError("signal JSON needs a \"samples\" array");
    }
    Signal x;
    for (const auto& v : doc["samples"]) {
        if (!v.is_number()) {
            throw ParseError("signal samples must be numbers");
        }
        x.samples.push_back(v.get<double>());
    }
    if (doc.contains("n") &&
        (!doc["n"].is_number_unsigned() || doc["n"].get<std::size_t>() != x.samples.size())) {
        throw ParseError("signal JSON: \"n\" disagrees with the sample count");
    }
    validate_signal(x);
    return x;
}

inline Spectrum spectrum_from_json(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("coefficients") || !doc["coefficients"].is_array()) {
        throw ParseError("spectrum JSON needs a \"coefficients\" array");
    }
    Spectrum y;
    std::size_t expected_k = 0;
    for (const auto& entry : doc["coefficients"]) {
        if (!entry.is_object() || !entry.contains("r") || !entry.contains("theta")) {
            throw ParseError("spectrum coefficient needs \"r\" and \"theta\"");
        }
        if (entry.contains("k") &&
            (!entry["k"].is_number_unsigned() || entry["k"].get<std::size_t>() != expected_k)) {
            throw ParseError("spectrum coefficients must be ordered k = 0..N-1");
        }
        const double r = entry["r"].get<double>();
        const double theta = entry["theta"].get<double>();
        if (!std::isfinite(r) || r < 0.0 || !std::isfinite(theta)) {
            throw ParseError("spectrum coefficient out of range");
        }
        y.coefficients.push_back(
            {r, r < kZeroMagnitude ? 0.0 : wrap_phase(theta)});
        ++expected_k;
    }
    if (doc.contains("n") &&
        (!doc["n"].is_number_unsigned() || doc["n"].get<std::size_t>() != y.size())) {
        throw ParseError("spectrum JSON: \"n\" disagrees with the coefficient count");
    }
    validate_spectrum(y);
    return y;
}

inline Signal parse_signal_json(const std::string& text) {
    return signal_from_json(parse_json_text(text));
}

inline Spectrum parse_spectrum_json(const std::string& text) {
    return spectrum_from_json(parse_json_text(text));
}

// ---------------------------------------------------------------------------
// File helpers

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ValidationError("cannot read " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw UnwritablePath("cannot write " + path);
    }
    out << content;
    out.flush();
    if (!out) {
        throw UnwritablePath("failed while writing " + path);
    }
}

} // namespace spikedft

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spikedft/dft.hpp"
#include "spikedft/errors.hpp"
#include "spikedft/neuron.hpp"

namespace spikedft {

enum class PlotStyle { TimeStem, MagnitudeStem, PhaseStem, Polar, TraceGrid };

/// Rendering options shared by every plot style. Unset limits are derived
/// from the data; conventions select the phase axis and polar labelling.
struct PlotSpec {
    PlotStyle style = PlotStyle::TimeStem;
    PhaseConvention phase_convention = PhaseConvention::HalfOpenPi;
    int interpolation = kDefaultInterpolation;
    std::optional<double> r_max;
    std::optional<double> y_max;
    std::string title;
};

namespace svg {

inline constexpr double kPanelWidth = 640.0;
inline constexpr double kPanelHeight = 480.0;
inline constexpr double kMarginLeft = 60.0;
inline constexpr double kMarginRight = 20.0;
inline constexpr double kMarginTop = 40.0;
inline constexpr double kMarginBottom = 50.0;

/// Coordinates are emitted with four decimals; magnitudes below half of the
/// last digit are snapped to zero so "-0.0000" never appears.
inline std::string coord(double v) {
    if (std::abs(v) < 0.00005) {
        v = 0.0;
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

inline std::string escape_text(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        default: out += c; break;
        }
    }
    return out;
}

/// One 640x480 drawing area stacked at a vertical offset inside the canvas.
struct Panel {
    double offset_y = 0.0;

    double left() const { return kMarginLeft; }
    double right() const { return kPanelWidth - kMarginRight; }
    double top() const { return offset_y + kMarginTop; }
    double bottom() const { return offset_y + kPanelHeight - kMarginBottom; }
    double width() const { return right() - left(); }
    double height() const { return bottom() - top(); }
};

/// Linear map from a data interval onto panel pixels.
struct Scale {
    double lo = 0.0;
    double hi = 1.0;
    double pixel_lo = 0.0;
    double pixel_hi = 1.0;

    double operator()(double v) const {
        return pixel_lo + (v - lo) / (hi - lo) * (pixel_hi - pixel_lo);
    }
};

inline std::string line(double x1, double y1, double x2, double y2, const std::string& cls) {
    return "<line class=\"" + cls + "\" x1=\"" + coord(x1) + "\" y1=\"" + coord(y1) +
           "\" x2=\"" + coord(x2) + "\" y2=\"" + coord(y2) + "\"/>\n";
}

inline std::string circle(double cx, double cy, double r, const std::string& cls) {
    return "<circle class=\"" + cls + "\" cx=\"" + coord(cx) + "\" cy=\"" + coord(cy) +
           "\" r=\"" + coord(r) + "\"/>\n";
}

inline std::string text(double x, double y, const std::string& anchor, const std::string& cls,
                        const std::string& content) {
    return "<text class=\"" + cls + "\" x=\"" + coord(x) + "\" y=\"" + coord(y) +
           "\" text-anchor=\"" + anchor + "\">" + escape_text(content) + "</text>\n";
}

/// Six-armed asterisk marker, drawn as three crossing strokes.
inline std::string star_marker(double x, double y) {
    const double s = 4.5;
    const double dx = 0.8660254037844386 * s;
    const double dy = 0.5 * s;
    std::string d = "M" + coord(x) + " " + coord(y - s) + " L" + coord(x) + " " + coord(y + s);
    d += " M" + coord(x - dx) + " " + coord(y - dy) + " L" + coord(x + dx) + " " + coord(y + dy);
    d += " M" + coord(x - dx) + " " + coord(y + dy) + " L" + coord(x + dx) + " " + coord(y - dy);
    return "<path class=\"marker-star\" d=\"" + d + "\"/>\n";
}

inline std::string dot_marker(double x, double y) {
    return circle(x, y, 3.5, "marker-dot");
}

inline std::string polyline(const std::vector<double>& xs, const std::vector<double>& ys,
                            const std::string& cls) {
    std::string out = "<polyline class=\"" + cls + "\" points=\"";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i > 0) {
            out += " ";
        }
        out += coord(xs[i]) + "," + coord(ys[i]);
    }
    out += "\"/>\n";
    return out;
}

inline std::string axis_label(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.4g", v == 0.0 ? 0.0 : v);
    return buf;
}

inline std::string document_open(double height) {
    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"640\" "
                      "height=\"" +
                      coord(height) + "\" viewBox=\"0 0 640 " + coord(height) + "\">\n";
    out += "<style>\n"
           ".frame { fill: none; stroke: #444444; stroke-width: 1; }\n"
           ".axis { stroke: #444444; stroke-width: 1; }\n"
           ".grid { stroke: #cccccc; stroke-width: 0.5; fill: none; }\n"
           ".stem-line { stroke: #1f6fb2; stroke-width: 2; }\n"
           ".phasor-arrow { stroke: #1f6fb2; stroke-width: 1.5; }\n"
           ".trace-real { fill: none; stroke: #1f6fb2; stroke-width: 1.5; }\n"
           ".trace-phase { fill: none; stroke: #b2421f; stroke-width: 1.5; }\n"
           ".trace-imag { fill: none; stroke: #3a9b3a; stroke-width: 1.5; }\n"
           ".marker-star { stroke: #1f6fb2; stroke-width: 1.5; fill: none; }\n"
           ".marker-dot { stroke: #b2421f; stroke-width: 1.5; fill: none; }\n"
           ".polar-point { stroke: #1f6fb2; stroke-width: 1.5; fill: none; }\n"
           ".label { font-family: monospace; font-size: 12px; fill: #222222; }\n"
           ".title { font-family: monospace; font-size: 14px; fill: #000000; }\n"
           "</style>\n";
    out += "<rect x=\"0\" y=\"0\" width=\"640\" height=\"" + coord(height) +
           "\" fill=\"#ffffff\"/>\n";
    return out;
}

inline std::string document_close() { return "</svg>\n"; }

inline std::string panel_frame(const Panel& p, const std::string& title) {
    std::string out = "<rect class=\"frame\" x=\"" + coord(p.left()) + "\" y=\"" + coord(p.top()) +
                      "\" width=\"" + coord(p.width()) + "\" height=\"" + coord(p.height()) +
                      "\"/>\n";
    if (!title.empty()) {
        out += text(kPanelWidth / 2.0, p.top() - 14.0, "middle", "title", title);
    }
    return out;
}

/// Vertical axis with tick labels at the given data values.
inline std::string y_ticks(const Panel& p, const Scale& sy, const std::vector<double>& values,
                           const std::vector<std::string>& labels) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double y = sy(values[i]);
        out += line(p.left() - 4.0, y, p.left(), y, "axis");
        out += text(p.left() - 8.0, y + 4.0, "end", "label", labels[i]);
    }
    return out;
}

/// Stems rising from the given baseline value, with the requested marker at
/// each head. Heads land at slot centres: x = left + (n + 1/2) * width / N.
inline std::string stem_panel(const Panel& p, const std::vector<double>& values, double baseline,
                              double lo, double hi, const std::string& title,
                              const std::vector<double>& tick_values,
                              const std::vector<std::string>& tick_labels, bool star_heads) {
    const std::size_t n = values.size();
    const Scale sy{lo, hi, p.bottom(), p.top()};
    std::string out = panel_frame(p, title);
    out += y_ticks(p, sy, tick_values, tick_labels);
    const double y0 = sy(baseline);
    out += line(p.left(), y0, p.right(), y0, "axis");
    for (std::size_t i = 0; i < n; ++i) {
        const double x = p.left() + (static_cast<double>(i) + 0.5) * p.width() /
                                        static_cast<double>(n);
        const double y = sy(values[i]);
        out += line(x, y0, x, y, "stem-line");
        out += star_heads ? star_marker(x, y) : dot_marker(x, y);
        out += text(x, p.bottom() + 18.0, "middle", "label", std::to_string(i));
    }
    return out;
}

} // namespace svg

namespace detail {

inline void require_nonempty(std::size_t n, const char* what) {
    if (n == 0) {
        throw EmptyData(std::string(what) + ": nothing to plot");
    }
}

/// Data range for a stem panel: always includes the baseline, padded so heads
/// stay inside the frame.
inline std::pair<double, double> stem_range(const std::vector<double>& values, double floor_hi,
                                            const std::optional<double>& y_max) {
    double lo = 0.0;
    double hi = floor_hi;
    for (double v : values) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    if (y_max) {
        if (*y_max <= 0.0) {
            throw ValidationError("plot: vertical limit must be positive");
        }
        return {lo < 0.0 ? -*y_max : 0.0, *y_max};
    }
    const double pad = 0.08 * (hi - lo);
    return {lo == 0.0 ? 0.0 : lo - pad, hi + pad};
}

} // namespace detail

/// Impulse-style view of a discrete signal: one stem per sample.
inline std::string render_time_stem(const Signal& x, const PlotSpec& spec) {
    detail::require_nonempty(x.size(), "time plot");
    validate_signal(x);
    const auto [lo, hi] = detail::stem_range(x.samples, 1.0, spec.y_max);
    svg::Panel p;
    std::string out = svg::document_open(svg::kPanelHeight);
    double vmin = 0.0;
    double vmax = 1.0;
    for (double v : x.samples) {
        vmin = std::min(vmin, v);
        vmax = std::max(vmax, v);
    }
    std::vector<double> ticks{vmin, vmax};
    std::vector<std::string> labels{svg::axis_label(vmin), svg::axis_label(vmax)};
    if (vmin < 0.0) {
        ticks.insert(ticks.begin() + 1, 0.0);
        labels.insert(labels.begin() + 1, "0");
    }
    out += svg::stem_panel(p, x.samples, 0.0, lo, hi,
                           spec.title.empty() ? "x[n]" : spec.title, ticks, labels, true);
    out += svg::document_close();
    return out;
}

/// Stem view of coefficient magnitudes.
inline std::string render_magnitude_stem(const Spectrum& y, const PlotSpec& spec) {
    detail::require_nonempty(y.size(), "magnitude plot");
    validate_spectrum(y);
    std::vector<double> mags(y.size());
    for (std::size_t k = 0; k < y.size(); ++k) {
        mags[k] = y.coefficients[k].magnitude;
    }
    if (spec.r_max && *spec.r_max <= 0.0) {
        throw ValidationError("plot: radial limit must be positive");
    }
    const auto [lo, hi] = detail::stem_range(mags, 1.0, spec.r_max);
    double vmax = 1.0;
    for (double v : mags) {
        vmax = std::max(vmax, v);
    }
    svg::Panel p;
    std::string out = svg::document_open(svg::kPanelHeight);
    out += svg::stem_panel(p, mags, 0.0, lo, hi, spec.title.empty() ? "|Y[k]|" : spec.title,
                           {0.0, vmax}, {"0", svg::axis_label(vmax)}, true);
    out += svg::document_close();
    return out;
}

/// Stem view of coefficient phases. The vertical axis is the full wrap range
/// of the chosen convention, so plots of different spectra line up.
inline std::string render_phase_stem(const Spectrum& y, const PlotSpec& spec) {
    detail::require_nonempty(y.size(), "phase plot");
    validate_spectrum(y);
    const bool two_pi = spec.phase_convention == PhaseConvention::HalfOpenTwoPi;
    std::vector<double> phases(y.size());
    for (std::size_t k = 0; k < y.size(); ++k) {
        const Phasor& c = y.coefficients[k];
        phases[k] =
            c.magnitude < kZeroMagnitude ? 0.0 : wrap_phase(c.phase, spec.phase_convention);
    }
    const double lo = two_pi ? -0.3 : -kPi - 0.3;
    const double hi = two_pi ? kTwoPi + 0.3 : kPi + 0.3;
    std::vector<double> ticks;
    std::vector<std::string> labels;
    if (two_pi) {
        ticks = {0.0, kPi / 2.0, kPi, 3.0 * kPi / 2.0, kTwoPi};
        labels = {"0", "pi/2", "pi", "3pi/2", "2pi"};
    } else {
        ticks = {-kPi, -kPi / 2.0, 0.0, kPi / 2.0, kPi};
        labels = {"-pi", "-pi/2", "0", "pi/2", "pi"};
    }
    svg::Panel p;
    std::string out = svg::document_open(svg::kPanelHeight);
    out += svg::stem_panel(p, phases, 0.0, lo, hi,
                           spec.title.empty() ? "angle Y[k]" : spec.title, ticks, labels, false);
    out += svg::document_close();
    return out;
}

/// Phasor diagram: each coefficient drawn as an arrow from the origin with a
/// ring marker at its head, over a circular grid. Spoke labels follow the
/// chosen phase convention.
inline std::string render_polar(const Spectrum& y, const PlotSpec& spec) {
    detail::require_nonempty(y.size(), "polar plot");
    validate_spectrum(y);
    double data_max = 0.0;
    for (const Phasor& c : y.coefficients) {
        data_max = std::max(data_max, c.magnitude);
    }
    double r_limit = std::max(1.0, data_max);
    if (spec.r_max) {
        if (*spec.r_max <= 0.0) {
            throw ValidationError("plot: radial limit must be positive");
        }
        r_limit = *spec.r_max;
    }
    const double cx = 320.0;
    const double cy = 245.0;
    const double radius = 180.0;
    auto px = [&](double r, double theta) { return cx + radius * (r / r_limit) * std::cos(theta); };
    auto py = [&](double r, double theta) { return cy - radius * (r / r_limit) * std::sin(theta); };

    std::string out = svg::document_open(svg::kPanelHeight);
    if (!spec.title.empty()) {
        out += svg::text(cx, 22.0, "middle", "title", spec.title);
    }
    for (int ring = 1; ring <= 4; ++ring) {
        const double rr = radius * static_cast<double>(ring) / 4.0;
        out += svg::circle(cx, cy, rr, "grid");
        out += svg::text(cx + rr + 2.0, cy - 4.0, "start", "label",
                         svg::axis_label(r_limit * static_cast<double>(ring) / 4.0));
    }
    static const char* kLabelsTwoPi[8] = {"0",  "pi/4",  "pi/2",  "3pi/4",
                                          "pi", "5pi/4", "3pi/2", "7pi/4"};
    static const char* kLabelsPi[8] = {"0",   "pi/4",   "pi/2",  "3pi/4",
                                       "pi",  "-3pi/4", "-pi/2", "-pi/4"};
    const bool two_pi = spec.phase_convention == PhaseConvention::HalfOpenTwoPi;
    for (int s = 0; s < 8; ++s) {
        const double theta = kPi / 4.0 * static_cast<double>(s);
        out += svg::line(cx, cy, cx + radius * std::cos(theta), cy - radius * std::sin(theta),
                         "grid");
        const double lx = cx + (radius + 16.0) * std::cos(theta);
        const double ly = cy - (radius + 16.0) * std::sin(theta) + 4.0;
        out += svg::text(lx, ly, "middle", "label", two_pi ? kLabelsTwoPi[s] : kLabelsPi[s]);
    }
    for (std::size_t k = 0; k < y.size(); ++k) {
        const Phasor& c = y.coefficients[k];
        const double theta = c.magnitude < kZeroMagnitude ? 0.0 : c.phase;
        const double hx = px(c.magnitude, theta);
        const double hy = py(c.magnitude, theta);
        out += svg::line(cx, cy, hx, hy, "phasor-arrow");
        out += svg::circle(hx, hy, 4.0, "polar-point");
        out += svg::text(hx + 7.0, hy - 7.0, "start", "label", "k" + std::to_string(k));
    }
    out += svg::document_close();
    return out;
}

/// Stacked panels: one per neuron showing the real component (asterisk
/// markers at integer times) and the wrapped phase (ring markers), then a
/// final panel with the real and imaginary parts of the scaled network sum.
/// All panels share one vertical scale.
inline std::string render_trace_grid(const SpikingNetwork& network, const PlotSpec& spec) {
    detail::require_nonempty(network.size(), "trace plot");
    const std::size_t n_neurons = network.size();
    std::vector<NeuronTrace> traces;
    traces.reserve(n_neurons);
    for (const SpikingNeuron& neuron : network.neurons) {
        traces.push_back(neuron_trace(neuron, n_neurons, spec.interpolation));
    }
    const NeuronTrace sum = network_sum_trace(network, spec.interpolation);

    auto wrapped_phase = [&](const SpikingNeuron& neuron, const std::complex<double>& v) {
        return neuron.amplitude < kZeroMagnitude
                   ? 0.0
                   : wrap_phase(std::arg(v), spec.phase_convention);
    };

    double ylim = spec.phase_convention == PhaseConvention::HalfOpenTwoPi ? kTwoPi : kPi;
    for (const SpikingNeuron& neuron : network.neurons) {
        ylim = std::max(ylim, neuron.amplitude);
    }
    for (const std::complex<double>& v : sum.values) {
        ylim = std::max({ylim, std::abs(v.real()), std::abs(v.imag())});
    }
    if (spec.y_max) {
        if (*spec.y_max <= 0.0) {
            throw ValidationError("plot: vertical limit must be positive");
        }
        ylim = *spec.y_max;
    } else {
        ylim *= 1.05;
    }
    const double ylo = -ylim;
    const double yhi = ylim;

    const std::size_t n_panels = n_neurons + 1;
    std::string out = svg::document_open(svg::kPanelHeight * static_cast<double>(n_panels));
    const double t_end = sum.times.empty() ? 1.0 : sum.times.back();
    for (std::size_t panel_index = 0; panel_index < n_panels; ++panel_index) {
        svg::Panel p{svg::kPanelHeight * static_cast<double>(panel_index)};
        const svg::Scale sx{0.0, std::max(t_end, 1e-9), p.left(), p.right()};
        const svg::Scale sy{ylo, yhi, p.bottom(), p.top()};
        const bool is_sum = panel_index == n_neurons;
        std::string title;
        if (is_sum) {
            title = spec.title.empty() ? "network sum" : spec.title + " sum";
        } else {
            title = "s" + std::to_string(panel_index);
        }
        out += svg::panel_frame(p, title);
        out += svg::y_ticks(p, sy, {ylo, 0.0, yhi},
                            {svg::axis_label(ylo), "0", svg::axis_label(yhi)});
        out += svg::line(p.left(), sy(0.0), p.right(), sy(0.0), "axis");
        const std::vector<double>& times = is_sum ? sum.times : traces[panel_index].times;
        for (std::size_t j = 0; j < times.size(); j += sum.marker_stride) {
            out += svg::line(sx(times[j]), p.bottom(), sx(times[j]), p.bottom() + 4.0, "axis");
            out += svg::text(sx(times[j]), p.bottom() + 18.0, "middle", "label",
                             svg::axis_label(times[j]));
        }
        std::vector<double> xs(times.size());
        for (std::size_t j = 0; j < times.size(); ++j) {
            xs[j] = sx(times[j]);
        }
        if (is_sum) {
            std::vector<double> re(times.size());
            std::vector<double> im(times.size());
            for (std::size_t j = 0; j < times.size(); ++j) {
                re[j] = sy(sum.values[j].real());
                im[j] = sy(sum.values[j].imag());
            }
            out += svg::polyline(xs, re, "trace-real");
            out += svg::polyline(xs, im, "trace-imag");
            for (std::size_t j = 0; j < times.size(); j += sum.marker_stride) {
                out += svg::star_marker(xs[j], re[j]);
            }
            for (std::size_t j = 0; j < times.size(); j += sum.marker_stride) {
                out += svg::dot_marker(xs[j], im[j]);
            }
        } else {
            const SpikingNeuron& neuron = network.neurons[panel_index];
            const NeuronTrace& trace = traces[panel_index];
            std::vector<double> re(times.size());
            std::vector<double> ph(times.size());
            for (std::size_t j = 0; j < times.size(); ++j) {
                re[j] = sy(trace.values[j].real());
                ph[j] = sy(wrapped_phase(neuron, trace.values[j]));
            }
            out += svg::polyline(xs, re, "trace-real");
            out += svg::polyline(xs, ph, "trace-phase");
            for (std::size_t j = 0; j < times.size(); j += trace.marker_stride) {
                out += svg::star_marker(xs[j], re[j]);
            }
            for (std::size_t j = 0; j < times.size(); j += trace.marker_stride) {
                out += svg::dot_marker(xs[j], ph[j]);
            }
        }
    }
    out += svg::document_close();
    return out;
}

} // namespace spikedft

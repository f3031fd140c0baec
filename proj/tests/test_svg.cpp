#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "spikedft/codec.hpp"
#include "spikedft/dft.hpp"
#include "spikedft/neuron.hpp"
#include "spikedft/svg.hpp"

using namespace spikedft;

namespace {

Signal sig(const std::string& bits) { return impulse_signal(pattern_from_bits(bits)); }

std::size_t count_of(const std::string& hay, const std::string& needle) {
    std::size_t count = 0;
    for (std::size_t pos = hay.find(needle); pos != std::string::npos;
         pos = hay.find(needle, pos + needle.size())) {
        ++count;
    }
    return count;
}

} // namespace

TEST_CASE("time stems draw one stem and star per sample") {
    PlotSpec spec;
    spec.style = PlotStyle::TimeStem;
    const std::string svg = render_time_stem(sig("0100"), spec);
    CHECK(svg.rfind("<svg xmlns=\"http://www.w3.org/2000/svg\"", 0) == 0);
    CHECK(svg.find("viewBox=\"0 0 640 480.0000\"") != std::string::npos);
    CHECK(count_of(svg, "class=\"stem-line\"") == 4);
    CHECK(count_of(svg, "class=\"marker-star\"") == 4);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg.find("-0.0000") == std::string::npos);
}

TEST_CASE("zero signals draw zero-height stems") {
    PlotSpec spec;
    const std::string svg = render_time_stem(sig("0000"), spec);
    CHECK(count_of(svg, "class=\"stem-line\"") == 4);
    // All four stems collapse onto the baseline: x varies, y1 == y2.
    CHECK(count_of(svg, "class=\"marker-star\"") == 4);
}

TEST_CASE("magnitude stems cover every bin") {
    PlotSpec spec;
    spec.style = PlotStyle::MagnitudeStem;
    const std::string svg = render_magnitude_stem(dft(sig("1100")), spec);
    CHECK(count_of(svg, "class=\"stem-line\"") == 4);
    CHECK(count_of(svg, "class=\"marker-star\"") == 4);
}

TEST_CASE("phase stems label the convention's tick marks") {
    PlotSpec spec;
    spec.style = PlotStyle::PhaseStem;
    const std::string pi_svg = render_phase_stem(dft(sig("0100")), spec);
    CHECK(pi_svg.find(">-pi</text>") != std::string::npos);
    CHECK(pi_svg.find(">pi</text>") != std::string::npos);
    CHECK(count_of(pi_svg, "class=\"marker-dot\"") == 4);

    spec.phase_convention = PhaseConvention::HalfOpenTwoPi;
    const std::string two_pi_svg = render_phase_stem(dft(sig("0100")), spec);
    CHECK(two_pi_svg.find(">3pi/2</text>") != std::string::npos);
    CHECK(two_pi_svg.find(">2pi</text>") != std::string::npos);
}

TEST_CASE("polar markers land on the unit circle at the coefficient angles") {
    PlotSpec spec;
    spec.style = PlotStyle::Polar;
    spec.phase_convention = PhaseConvention::HalfOpenTwoPi;
    const std::string svg = render_polar(dft(sig("0100")), spec);
    CHECK(count_of(svg, "class=\"polar-point\"") == 4);
    CHECK(count_of(svg, "class=\"phasor-arrow\"") == 4);
    // Radius 180 around (320, 245); angles 0, -pi/2, pi, pi/2.
    CHECK(svg.find("class=\"polar-point\" cx=\"500.0000\" cy=\"245.0000\"") != std::string::npos);
    CHECK(svg.find("class=\"polar-point\" cx=\"320.0000\" cy=\"425.0000\"") != std::string::npos);
    CHECK(svg.find("class=\"polar-point\" cx=\"140.0000\" cy=\"245.0000\"") != std::string::npos);
    CHECK(svg.find("class=\"polar-point\" cx=\"320.0000\" cy=\"65.0000\"") != std::string::npos);
    CHECK(svg.find(">7pi/4</text>") != std::string::npos);

    spec.phase_convention = PhaseConvention::HalfOpenPi;
    const std::string pi_svg = render_polar(dft(sig("0100")), spec);
    CHECK(pi_svg.find(">-pi/4</text>") != std::string::npos);
}

TEST_CASE("the trace grid stacks one panel per neuron plus the sum") {
    PlotSpec spec;
    spec.style = PlotStyle::TraceGrid;
    spec.interpolation = 10;
    const SpikingNetwork net = network_from_spectrum(dft(sig("1100")));
    const std::string svg = render_trace_grid(net, spec);
    CHECK(svg.find("viewBox=\"0 0 640 2400.0000\"") != std::string::npos);
    CHECK(count_of(svg, "class=\"frame\"") == 5);
    CHECK(count_of(svg, "class=\"trace-real\"") == 5);
    CHECK(count_of(svg, "class=\"trace-phase\"") == 4);
    CHECK(count_of(svg, "class=\"trace-imag\"") == 1);
    CHECK(count_of(svg, "class=\"marker-star\"") == 20);
    CHECK(svg.find(">s0</text>") != std::string::npos);
    CHECK(svg.find(">network sum</text>") != std::string::npos);
}

TEST_CASE("rendering is deterministic within a process") {
    PlotSpec spec;
    spec.style = PlotStyle::Polar;
    const std::string a = render_polar(dft(sig("0110")), spec);
    const std::string b = render_polar(dft(sig("0110")), spec);
    CHECK(a == b);
}

TEST_CASE("empty and invalid plot inputs are rejected") {
    PlotSpec spec;
    CHECK_THROWS_AS(render_time_stem(Signal{}, spec), EmptyData);
    CHECK_THROWS_AS(render_polar(Spectrum{}, spec), EmptyData);
    CHECK_THROWS_AS(render_trace_grid(SpikingNetwork{}, spec), EmptyData);

    spec.y_max = -1.0;
    CHECK_THROWS_AS(render_time_stem(sig("01"), spec), ValidationError);
    spec.y_max.reset();
    spec.r_max = 0.0;
    CHECK_THROWS_AS(render_polar(dft(sig("01")), spec), ValidationError);
}

// Command-line surface over the spikedft library: pattern generation,
// spectra, delay decoding, tables, trace reconstruction, and SVG plots.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "spikedft/spikedft.hpp"

namespace {

using namespace spikedft;

/// Where a command reads its data from. At most one source is used, in the
/// order: explicit file, bit pattern, length plus delays.
struct SourceOpts {
    std::string in_path;
    std::string pattern;
    std::size_t n = 0;
    std::vector<std::size_t> delays;
    bool has_n = false;
};

void add_source_flags(CLI::App* cmd, SourceOpts& src, bool with_file) {
    if (with_file) {
        cmd->add_option("--in", src.in_path, "input JSON file (signal or spectrum)");
    }
    cmd->add_option("--pattern", src.pattern, "impulse pattern as a bit string, e.g. 0100");
    cmd->add_option("--n", src.n, "signal length")->check(CLI::Range(std::size_t{1}, std::size_t{64}));
    cmd->add_option("--delays", src.delays, "impulse positions, comma separated")
        ->delimiter(',');
}

Signal signal_from_source(const SourceOpts& src) {
    if (!src.in_path.empty()) {
        const nlohmann::json doc = parse_json_text(read_text_file(src.in_path));
        if (doc.is_object() && doc.contains("samples")) {
            return signal_from_json(doc);
        }
        throw ValidationError(src.in_path + ": expected signal JSON with \"samples\"");
    }
    if (!src.pattern.empty()) {
        return impulse_signal(pattern_from_bits(src.pattern));
    }
    if (src.n > 0) {
        return impulse_signal(make_impulse_pattern(src.n, src.delays));
    }
    throw ValidationError("no input: give --in, --pattern, or --n [--delays]");
}

/// Spectrum input accepts either form: spectrum JSON is used directly, a
/// signal (file, pattern, or length/delays) is transformed first.
Spectrum spectrum_from_source(const SourceOpts& src) {
    if (!src.in_path.empty()) {
        const nlohmann::json doc = parse_json_text(read_text_file(src.in_path));
        if (doc.is_object() && doc.contains("coefficients")) {
            return spectrum_from_json(doc);
        }
        if (doc.is_object() && doc.contains("samples")) {
            return dft(signal_from_json(doc));
        }
        throw ValidationError(src.in_path + ": expected spectrum or signal JSON");
    }
    return dft(signal_from_source(src));
}

void deliver(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::fputs(content.c_str(), stdout);
    } else {
        write_text_file(out_path, content);
    }
}

std::string pattern_bits_of(const Signal& x) {
    std::string bits;
    bits.reserve(x.size());
    for (double v : x.samples) {
        bits += v != 0.0 ? '1' : '0';
    }
    return bits;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"DFT-based spiking network toolkit: phase-coded delay "
                 "encoding, spectra, traces, and plots"};
    app.require_subcommand(1);

    const std::map<std::string, PhaseConvention> kConventions{
        {"pi", PhaseConvention::HalfOpenPi}, {"2pi", PhaseConvention::HalfOpenTwoPi}};

    // pattern
    auto* cmd_pattern = app.add_subcommand("pattern", "emit an impulse bit pattern");
    SourceOpts pattern_src;
    std::string pattern_format = "text";
    std::string pattern_out;
    cmd_pattern->add_option("--n", pattern_src.n, "signal length")
        ->required()
        ->check(CLI::Range(std::size_t{1}, std::size_t{64}));
    cmd_pattern->add_option("--delays", pattern_src.delays, "impulse positions, comma separated")
        ->delimiter(',');
    cmd_pattern->add_option("--format", pattern_format, "text, json, or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd_pattern->add_option("--out", pattern_out, "write output here instead of stdout");
    cmd_pattern->callback([&] {
        const Signal x = impulse_signal(make_impulse_pattern(pattern_src.n, pattern_src.delays));
        std::string out;
        if (pattern_format == "csv") {
            out = signal_to_csv(x);
        } else if (pattern_format == "json") {
            out = signal_to_json(x);
        } else {
            out = pattern_bits_of(x) + "\n" + signal_to_json(x);
        }
        deliver(out, pattern_out);
    });

    // spectrum
    auto* cmd_spectrum = app.add_subcommand("spectrum", "transform a signal to its coefficients");
    SourceOpts spectrum_src;
    PhaseConvention spectrum_conv = PhaseConvention::HalfOpenPi;
    std::string spectrum_format = "json";
    std::string spectrum_out;
    add_source_flags(cmd_spectrum, spectrum_src, true);
    cmd_spectrum
        ->add_option("--phase-range", spectrum_conv, "angle wrap range: pi for (-pi, pi], 2pi for [0, 2pi)")
        ->transform(CLI::CheckedTransformer(kConventions, CLI::ignore_case));
    cmd_spectrum->add_option("--format", spectrum_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd_spectrum->add_option("--out", spectrum_out, "write output here instead of stdout");
    cmd_spectrum->callback([&] {
        const Spectrum y = dft(signal_from_source(spectrum_src));
        const std::string out = spectrum_format == "csv" ? spectrum_to_csv(y, spectrum_conv)
                                                         : spectrum_to_json(y, spectrum_conv);
        deliver(out, spectrum_out);
    });

    // reconstruct
    auto* cmd_reconstruct =
        app.add_subcommand("reconstruct", "rebuild neuron traces and their sum from coefficients");
    SourceOpts reconstruct_src;
    PhaseConvention reconstruct_conv = PhaseConvention::HalfOpenPi;
    int reconstruct_interp = kDefaultInterpolation;
    std::string reconstruct_format = "json";
    std::string reconstruct_out;
    add_source_flags(cmd_reconstruct, reconstruct_src, true);
    cmd_reconstruct->add_option("--interp", reconstruct_interp, "time grid refinement factor")
        ->check(CLI::Range(1, 1000));
    cmd_reconstruct
        ->add_option("--phase-range", reconstruct_conv, "angle wrap range for reported phases")
        ->transform(CLI::CheckedTransformer(kConventions, CLI::ignore_case));
    cmd_reconstruct->add_option("--format", reconstruct_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd_reconstruct->add_option("--out", reconstruct_out, "write output here instead of stdout");
    cmd_reconstruct->callback([&] {
        const Spectrum y = spectrum_from_source(reconstruct_src);
        const SpikingNetwork net = network_from_spectrum(y);
        const std::string out = reconstruct_format == "csv"
                                    ? traces_to_csv(net, reconstruct_interp, reconstruct_conv)
                                    : traces_to_json(net, reconstruct_interp, reconstruct_conv);
        deliver(out, reconstruct_out);
    });

    // table
    auto* cmd_table = app.add_subcommand("table", "tabulate patterns, coefficients, and increments");
    std::size_t table_n = 0;
    std::string table_family = "all";
    PhaseConvention table_conv = PhaseConvention::HalfOpenPi;
    std::string table_format = "text";
    std::string table_out;
    cmd_table->add_option("--n", table_n, "signal length")
        ->required()
        ->check(CLI::Range(std::size_t{1}, std::size_t{64}));
    cmd_table->add_option("--family", table_family, "single, double, triple, or all")
        ->check(CLI::IsMember({"single", "double", "triple", "all"}));
    cmd_table->add_option("--phase-range", table_conv, "angle wrap range for reported phases")
        ->transform(CLI::CheckedTransformer(kConventions, CLI::ignore_case));
    cmd_table->add_option("--format", table_format, "text, json, or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd_table->add_option("--out", table_out, "write output here instead of stdout");
    cmd_table->callback([&] {
        TableFamily family = TableFamily::All;
        if (table_family == "single") {
            family = TableFamily::Single;
        } else if (table_family == "double") {
            family = TableFamily::Double;
        } else if (table_family == "triple") {
            family = TableFamily::Triple;
        }
        const std::vector<TableRow> rows = make_table(table_n, family);
        std::string out;
        if (table_format == "json") {
            out = table_to_json(rows, table_n, family, table_conv);
        } else if (table_format == "csv") {
            out = table_to_csv(rows, table_conv);
        } else {
            out = table_to_text(rows, table_conv);
        }
        deliver(out, table_out);
    });

    // plot
    auto* cmd_plot = app.add_subcommand("plot", "render a deterministic SVG view");
    SourceOpts plot_src;
    std::string plot_style = "time_stem";
    PhaseConvention plot_conv = PhaseConvention::HalfOpenPi;
    int plot_interp = kDefaultInterpolation;
    double plot_rmax = 0.0;
    double plot_ymax = 0.0;
    std::string plot_out;
    std::string plot_title;
    add_source_flags(cmd_plot, plot_src, true);
    cmd_plot
        ->add_option("--style", plot_style,
                     "time_stem, magnitude_stem, phase_stem, polar, or trace_grid")
        ->required()
        ->check(CLI::IsMember({"time_stem", "magnitude_stem", "phase_stem", "polar", "trace_grid"}));
    auto* plot_range_opt =
        cmd_plot->add_option("--phase-range", plot_conv, "angle wrap range (default: 2pi for polar, pi otherwise)")
            ->transform(CLI::CheckedTransformer(kConventions, CLI::ignore_case));
    cmd_plot->add_option("--interp", plot_interp, "trace grid refinement factor")
        ->check(CLI::Range(1, 1000));
    cmd_plot->add_option("--rmax", plot_rmax, "radial axis limit override")
        ->check(CLI::PositiveNumber);
    cmd_plot->add_option("--ymax", plot_ymax, "vertical axis limit override")
        ->check(CLI::PositiveNumber);
    cmd_plot->add_option("--title", plot_title, "panel heading");
    cmd_plot->add_option("--out", plot_out, "write the SVG here instead of stdout");
    cmd_plot->callback([&] {
        PlotSpec spec;
        spec.interpolation = plot_interp;
        spec.title = plot_title;
        if (plot_rmax > 0.0) {
            spec.r_max = plot_rmax;
        }
        if (plot_ymax > 0.0) {
            spec.y_max = plot_ymax;
        }
        if (plot_style == "time_stem") {
            spec.style = PlotStyle::TimeStem;
        } else if (plot_style == "magnitude_stem") {
            spec.style = PlotStyle::MagnitudeStem;
        } else if (plot_style == "phase_stem") {
            spec.style = PlotStyle::PhaseStem;
        } else if (plot_style == "polar") {
            spec.style = PlotStyle::Polar;
        } else {
            spec.style = PlotStyle::TraceGrid;
        }
        if (plot_range_opt->count() > 0) {
            spec.phase_convention = plot_conv;
        } else {
            spec.phase_convention = spec.style == PlotStyle::Polar
                                        ? PhaseConvention::HalfOpenTwoPi
                                        : PhaseConvention::HalfOpenPi;
        }
        std::string out;
        switch (spec.style) {
        case PlotStyle::TimeStem:
            out = render_time_stem(signal_from_source(plot_src), spec);
            break;
        case PlotStyle::MagnitudeStem:
            out = render_magnitude_stem(spectrum_from_source(plot_src), spec);
            break;
        case PlotStyle::PhaseStem:
            out = render_phase_stem(spectrum_from_source(plot_src), spec);
            break;
        case PlotStyle::Polar:
            out = render_polar(spectrum_from_source(plot_src), spec);
            break;
        case PlotStyle::TraceGrid:
            out = render_trace_grid(network_from_spectrum(spectrum_from_source(plot_src)), spec);
            break;
        }
        deliver(out, plot_out);
    });

    // decode
    auto* cmd_decode = app.add_subcommand("decode", "recover the impulse delay from coefficients");
    SourceOpts decode_src;
    std::string decode_out;
    add_source_flags(cmd_decode, decode_src, true);
    cmd_decode->add_option("--out", decode_out, "write output here instead of stdout");
    cmd_decode->callback([&] {
        const Spectrum y = spectrum_from_source(decode_src);
        deliver(std::to_string(decode_delay(y)) + "\n", decode_out);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const spikedft::CodecError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const spikedft::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

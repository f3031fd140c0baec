#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "spikedft/codec.hpp"
#include "spikedft/dft.hpp"
#include "spikedft/errors.hpp"

namespace spikedft {

/// Which impulse-count family of patterns a table enumerates.
enum class TableFamily {
    Single,  ///< exactly one impulse, ordered by delay
    Double,  ///< every two-impulse combination
    Triple,  ///< every three-impulse combination
    All,     ///< all 2^N patterns, ordered by impulse bitmask
};

/// One encoding-table row: pattern bits, the cyclic shift n0 (when the
/// pattern is a rotation of its canonical form), the coefficients, and the
/// phase increment where one exists.
struct TableRow {
    std::string pattern;
    std::optional<std::size_t> n0;
    std::vector<Phasor> coefficients;
    std::optional<double> delta_phi;
};

namespace detail {

/// Rotate a bit string right by s: the delayed-by-s version of the base.
inline std::string rotate_bits(const std::string& base, std::size_t s) {
    const std::size_t n = base.size();
    std::string out(n, '0');
    for (std::size_t i = 0; i < n; ++i) {
        out[(i + s) % n] = base[i];
    }
    return out;
}

/// Delay of a pattern relative to its canonical rotation (the
/// lexicographically largest one). "0110" is "1100" delayed by 1, so n0 = 1.
inline std::size_t cyclic_shift_from_canonical(const std::string& pattern) {
    std::string canonical = pattern;
    for (std::size_t s = 1; s < pattern.size(); ++s) {
        canonical = std::max(canonical, rotate_bits(pattern, s));
    }
    for (std::size_t s = 0; s < pattern.size(); ++s) {
        if (rotate_bits(canonical, s) == pattern) {
            return s;
        }
    }
    return 0;  // unreachable: s = 0 matches when pattern == canonical
}

inline TableRow make_row(const ImpulsePattern& pattern) {
    TableRow row;
    row.pattern = bits(pattern);
    row.n0 = cyclic_shift_from_canonical(row.pattern);
    // Single impulses take the closed-form encoding; everything else is
    // transformed directly.
    if (pattern.delays.size() == 1) {
        row.coefficients = encode_delay(pattern.length, pattern.delays.front()).coefficients;
    } else {
        row.coefficients = dft(impulse_signal(pattern)).coefficients;
    }
    try {
        row.delta_phi = phase_increment({row.coefficients}).delta_phi;
    } catch (const CodecError&) {
        row.delta_phi = std::nullopt;
    }
    return row;
}

/// Every sorted delay combination of the given size, lexicographic order.
template <typename Fn>
void for_each_combination(std::size_t n, std::size_t count, Fn&& fn) {
    std::vector<std::size_t> pick(count);
    for (std::size_t i = 0; i < count; ++i) {
        pick[i] = i;
    }
    while (true) {
        fn(pick);
        std::size_t i = count;
        while (i > 0) {
            --i;
            if (pick[i] + (count - i) < n) {
                ++pick[i];
                for (std::size_t j = i + 1; j < count; ++j) {
                    pick[j] = pick[j - 1] + 1;
                }
                break;
            }
            if (i == 0) {
                return;
            }
        }
    }
}

} // namespace detail

/// Maximum N for the exhaustive 2^N family.
inline constexpr std::size_t kMaxExhaustiveTableLength = 16;
/// Maximum N for the combination families.
inline constexpr std::size_t kMaxTableLength = 64;

/// Deterministic encoding table for length-N patterns of the given family.
inline std::vector<TableRow> make_table(std::size_t n, TableFamily family) {
    if (n == 0 || n > kMaxTableLength) {
        throw ValidationError("table length must be in [1, " +
                              std::to_string(kMaxTableLength) + "]");
    }
    std::vector<TableRow> rows;
    switch (family) {
    case TableFamily::Single:
        for (std::size_t n0 = 0; n0 < n; ++n0) {
            rows.push_back(detail::make_row(make_impulse_pattern(n, {n0})));
        }
        break;
    case TableFamily::Double:
        if (n < 2) {
            throw ValidationError("two-impulse table needs N >= 2");
        }
        detail::for_each_combination(n, 2, [&](const std::vector<std::size_t>& delays) {
            rows.push_back(detail::make_row(make_impulse_pattern(n, delays)));
        });
        break;
    case TableFamily::Triple:
        if (n < 3) {
            throw ValidationError("three-impulse table needs N >= 3");
        }
        detail::for_each_combination(n, 3, [&](const std::vector<std::size_t>& delays) {
            rows.push_back(detail::make_row(make_impulse_pattern(n, delays)));
        });
        break;
    case TableFamily::All:
        if (n > kMaxExhaustiveTableLength) {
            throw ValidationError("exhaustive table capped at N <= " +
                                  std::to_string(kMaxExhaustiveTableLength));
        }
        for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
            std::vector<std::size_t> delays;
            for (std::size_t bit = 0; bit < n; ++bit) {
                if (mask & (std::size_t{1} << bit)) {
                    delays.push_back(bit);
                }
            }
            rows.push_back(detail::make_row(make_impulse_pattern(n, std::move(delays))));
        }
        break;
    }
    return rows;
}

} // namespace spikedft

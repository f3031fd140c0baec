#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "spikedft/codec.hpp"
#include "spikedft/dft.hpp"
#include "spikedft/table.hpp"

#include "oracle.hpp"
#include "test_helpers.hpp"

using namespace spikedft;
using helpers::circ_dist;
using helpers::phasor_near;

namespace {

const TableRow& row_for(const std::vector<TableRow>& rows, const std::string& pattern) {
    const auto it = std::find_if(rows.begin(), rows.end(),
                                 [&](const TableRow& r) { return r.pattern == pattern; });
    REQUIRE(it != rows.end());
    return *it;
}

} // namespace

TEST_CASE("the exhaustive length-2 table lists all four patterns") {
    const std::vector<TableRow> rows = make_table(2, TableFamily::All);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].pattern == "00");
    CHECK(rows[1].pattern == "10");
    CHECK(rows[2].pattern == "01");
    CHECK(rows[3].pattern == "11");

    CHECK(rows[0].coefficients[0].magnitude == 0.0);
    CHECK(rows[0].coefficients[1].magnitude == 0.0);
    CHECK_FALSE(rows[0].delta_phi.has_value());

    CHECK(phasor_near(rows[1].coefficients[0], 1.0, 0.0, 1e-12));
    CHECK(phasor_near(rows[1].coefficients[1], 1.0, 0.0, 1e-12));
    REQUIRE(rows[1].delta_phi.has_value());
    CHECK(std::abs(*rows[1].delta_phi) < 1e-12);

    CHECK(phasor_near(rows[2].coefficients[0], 1.0, 0.0, 1e-12));
    CHECK(phasor_near(rows[2].coefficients[1], 1.0, -kPi, 1e-12));
    REQUIRE(rows[2].delta_phi.has_value());
    CHECK(circ_dist(*rows[2].delta_phi, -kPi) < 1e-12);
    REQUIRE(rows[2].n0.has_value());
    CHECK(*rows[2].n0 == 1);

    CHECK(phasor_near(rows[3].coefficients[0], 2.0, 0.0, 1e-12));
    CHECK(rows[3].coefficients[1].magnitude < 1e-12);
    CHECK_FALSE(rows[3].delta_phi.has_value());
}

TEST_CASE("the single-impulse table is ordered by delay and shares the encoder") {
    const std::vector<TableRow> rows = make_table(4, TableFamily::Single);
    REQUIRE(rows.size() == 4);
    const std::vector<std::string> expected{"1000", "0100", "0010", "0001"};
    const std::vector<double> increments{0.0, -kPi / 2.0, -kPi, -3.0 * kPi / 2.0};
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(rows[i].pattern == expected[i]);
        REQUIRE(rows[i].n0.has_value());
        CHECK(*rows[i].n0 == i);
        REQUIRE(rows[i].delta_phi.has_value());
        CHECK(circ_dist(*rows[i].delta_phi, increments[i]) < 1e-12);

        const Spectrum encoded = encode_delay(4, i);
        for (std::size_t k = 0; k < 4; ++k) {
            CHECK(rows[i].coefficients[k].magnitude == encoded.coefficients[k].magnitude);
            CHECK(rows[i].coefficients[k].phase == encoded.coefficients[k].phase);
        }
    }
}

TEST_CASE("the two-impulse table covers all pairs with cyclic shifts") {
    const std::vector<TableRow> rows = make_table(4, TableFamily::Double);
    REQUIRE(rows.size() == 6);
    const std::vector<std::string> expected{"1100", "1010", "1001", "0110", "0101", "0011"};
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CHECK(rows[i].pattern == expected[i]);
    }

    const double root2 = std::sqrt(2.0);
    const TableRow& r1100 = row_for(rows, "1100");
    CHECK(phasor_near(r1100.coefficients[0], 2.0, 0.0, 1e-9));
    CHECK(phasor_near(r1100.coefficients[1], root2, -kPi / 4.0, 1e-9));
    CHECK(r1100.coefficients[2].magnitude < 1e-9);
    CHECK(phasor_near(r1100.coefficients[3], root2, kPi / 4.0, 1e-9));
    REQUIRE(r1100.n0.has_value());
    CHECK(*r1100.n0 == 0);
    CHECK_FALSE(r1100.delta_phi.has_value());

    const TableRow& r1001 = row_for(rows, "1001");
    CHECK(phasor_near(r1001.coefficients[0], 2.0, 0.0, 1e-9));
    CHECK(phasor_near(r1001.coefficients[1], root2, kPi / 4.0, 1e-9));
    CHECK(r1001.coefficients[2].magnitude < 1e-9);
    CHECK(phasor_near(r1001.coefficients[3], root2, -kPi / 4.0, 1e-9));
    REQUIRE(r1001.n0.has_value());
    CHECK(*r1001.n0 == 3);

    REQUIRE(row_for(rows, "0110").n0.has_value());
    CHECK(*row_for(rows, "0110").n0 == 1);
    CHECK(*row_for(rows, "0011").n0 == 2);
    CHECK(*row_for(rows, "0101").n0 == 1);
    CHECK(*row_for(rows, "1010").n0 == 0);
}

TEST_CASE("every table row agrees with the transform oracle") {
    for (TableFamily family : {TableFamily::Double, TableFamily::Triple, TableFamily::All}) {
        for (const TableRow& row : make_table(4, family)) {
            const auto expected = oracle::dft(impulse_signal(pattern_from_bits(row.pattern)).samples);
            REQUIRE(row.coefficients.size() == expected.size());
            for (std::size_t k = 0; k < expected.size(); ++k) {
                CHECK(helpers::complex_near(to_complex(row.coefficients[k]), expected[k], 1e-9));
            }
        }
    }
}

TEST_CASE("the three-impulse table enumerates combinations lexicographically") {
    const std::vector<TableRow> rows = make_table(4, TableFamily::Triple);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].pattern == "1110");
    CHECK(rows[1].pattern == "1101");
    CHECK(rows[2].pattern == "1011");
    CHECK(rows[3].pattern == "0111");
}

TEST_CASE("table sizes follow the combinatorics") {
    CHECK(make_table(8, TableFamily::Single).size() == 8);
    CHECK(make_table(8, TableFamily::Double).size() == 28);
    CHECK(make_table(8, TableFamily::Triple).size() == 56);
    CHECK(make_table(4, TableFamily::All).size() == 16);
    CHECK(make_table(64, TableFamily::Single).size() == 64);
}

TEST_CASE("table length limits are enforced") {
    CHECK_THROWS_AS(make_table(17, TableFamily::All), ValidationError);
    CHECK_THROWS_AS(make_table(65, TableFamily::Single), ValidationError);
    CHECK_THROWS_AS(make_table(0, TableFamily::Single), ValidationError);
    CHECK_THROWS_AS(make_table(1, TableFamily::Double), ValidationError);
}

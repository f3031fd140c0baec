#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>

#include "spikedft/phasor.hpp"

#include "test_helpers.hpp"

using namespace spikedft;
using helpers::circ_dist;

TEST_CASE("wrap_phase maps into the half-open pi interval") {
    CHECK(wrap_phase(0.0) == 0.0);
    CHECK(wrap_phase(-kPi) == kPi);
    CHECK(wrap_phase(kPi) == kPi);
    CHECK(wrap_phase(3.0 * kPi) == Catch::Approx(kPi));
    CHECK(wrap_phase(-kPi / 2.0) == Catch::Approx(-kPi / 2.0));
    CHECK(wrap_phase(kTwoPi) == Catch::Approx(0.0).margin(1e-12));
}

TEST_CASE("wrap_phase maps into the half-open two-pi interval") {
    const auto conv = PhaseConvention::HalfOpenTwoPi;
    CHECK(wrap_phase(-kPi, conv) == Catch::Approx(kPi));
    CHECK(wrap_phase(-3.0 * kPi / 2.0, conv) == Catch::Approx(kPi / 2.0));
    CHECK(wrap_phase(0.0, conv) == 0.0);
    CHECK(wrap_phase(kTwoPi, conv) == 0.0);
    CHECK(wrap_phase(-kPi / 2.0, conv) == Catch::Approx(3.0 * kPi / 2.0));
}

TEST_CASE("wrap_phase is idempotent and 2-pi periodic") {
    std::mt19937 rng(11u);
    std::uniform_real_distribution<double> angle(-50.0, 50.0);
    for (int i = 0; i < 500; ++i) {
        const double theta = angle(rng);
        const double once = wrap_phase(theta);
        CHECK(wrap_phase(once) == once);
        CHECK(once > -kPi);
        CHECK(once <= kPi);
        const double two_pi_wrapped = wrap_phase(theta, PhaseConvention::HalfOpenTwoPi);
        CHECK(two_pi_wrapped >= 0.0);
        CHECK(two_pi_wrapped < kTwoPi);
        CHECK(circ_dist(once, theta) < 1e-12);
        CHECK(circ_dist(two_pi_wrapped, theta) < 1e-10);
    }
    std::uniform_int_distribution<int> turns(-1000, 1000);
    for (int i = 0; i < 200; ++i) {
        const double theta = angle(rng);
        const double shifted = theta + kTwoPi * static_cast<double>(turns(rng));
        CHECK(std::abs(wrap_phase(theta) - wrap_phase(shifted)) < 1e-10);
    }
}

TEST_CASE("wrap_phase rejects non-finite input") {
    CHECK_THROWS_AS(wrap_phase(std::numeric_limits<double>::infinity()), InvalidPhase);
    CHECK_THROWS_AS(wrap_phase(std::nan("")), InvalidPhase);
}

TEST_CASE("phasor round-trips through rectangular form") {
    std::mt19937 rng(12u);
    std::uniform_real_distribution<double> mag(1e-6, 100.0);
    std::uniform_real_distribution<double> angle(-20.0, 20.0);
    for (int i = 0; i < 300; ++i) {
        const Phasor p{mag(rng), wrap_phase(angle(rng))};
        const Phasor back = phasor_from_complex(to_complex(p));
        CHECK(std::abs(back.magnitude - p.magnitude) < 1e-12 * std::max(1.0, p.magnitude));
        CHECK(circ_dist(back.phase, p.phase) < 1e-12);
    }
}

TEST_CASE("phasor_sum reproduces the two-impulse coefficients") {
    const Phasor y1 = phasor_sum({1.0, 0.0}, {1.0, -kPi / 2.0});
    CHECK(helpers::phasor_near(y1, std::sqrt(2.0), -kPi / 4.0, 1e-12));
    const Phasor y3 = phasor_sum({1.0, 0.0}, {1.0, kPi / 2.0});
    CHECK(helpers::phasor_near(y3, std::sqrt(2.0), kPi / 4.0, 1e-12));
}

TEST_CASE("phasor_sum identity and cancellation") {
    const Phasor p{2.5, 0.7};
    const Phasor same = phasor_sum(p, {0.0, 123.0});
    CHECK(same.magnitude == Catch::Approx(2.5));
    CHECK(circ_dist(same.phase, 0.7) < 1e-12);
    const Phasor zero = phasor_sum({1.0, 0.0}, {1.0, kPi});
    CHECK(zero.magnitude < 1e-12);
    CHECK(zero.phase == 0.0);
}

TEST_CASE("phasor_sum agrees with rectangular addition") {
    std::mt19937 rng(13u);
    std::uniform_real_distribution<double> mag(0.0, 10.0);
    std::uniform_real_distribution<double> angle(-10.0, 10.0);
    for (int i = 0; i < 1000; ++i) {
        const Phasor a{mag(rng), angle(rng)};
        const Phasor b{mag(rng), angle(rng)};
        const Phasor s = phasor_sum(a, b);
        const std::complex<double> z = to_complex(a) + to_complex(b);
        CHECK(std::abs(s.magnitude - std::abs(z)) < 1e-12);
        if (std::abs(z) > 1e-9) {
            CHECK(circ_dist(s.phase, std::arg(z)) < 1e-12);
        }
    }
}

TEST_CASE("phasor_sum is commutative and nearly associative") {
    std::mt19937 rng(14u);
    std::uniform_real_distribution<double> mag(0.0, 1e3);
    std::uniform_real_distribution<double> angle(-10.0, 10.0);
    for (int i = 0; i < 300; ++i) {
        const Phasor a{mag(rng), angle(rng)};
        const Phasor b{mag(rng), angle(rng)};
        const Phasor c{mag(rng), angle(rng)};
        const Phasor ab = phasor_sum(a, b);
        const Phasor ba = phasor_sum(b, a);
        CHECK(ab.magnitude == ba.magnitude);
        CHECK(ab.phase == ba.phase);
        const Phasor left = phasor_sum(ab, c);
        const Phasor right = phasor_sum(a, phasor_sum(b, c));
        CHECK(std::abs(left.magnitude - right.magnitude) < 1e-10);
        if (left.magnitude > 1e-3) {
            CHECK(circ_dist(left.phase, right.phase) < 1e-8);
        }
    }
}

TEST_CASE("polar_gradient scales the angular component by 1/r") {
    const PolarGradient of_theta = polar_gradient(0.0, 1.0, 2.0);
    CHECK(of_theta.radial_component == 0.0);
    CHECK(of_theta.angular_component == 0.5);

    const double r = 2.0;
    const PolarGradient of_inverse_r = polar_gradient(-1.0 / (r * r), 0.0, r);
    CHECK(of_inverse_r.radial_component == -0.25);
    CHECK(of_inverse_r.angular_component == 0.0);

    const PolarGradient radial_only = polar_gradient(5.0, 0.0, 1.0);
    CHECK(radial_only.radial_component == 5.0);
    CHECK(radial_only.angular_component == 0.0);
}

TEST_CASE("polar_gradient rejects the origin") {
    CHECK_THROWS_AS(polar_gradient(1.0, 1.0, 0.0), SingularOrigin);
    CHECK_THROWS_AS(polar_gradient(1.0, 1.0, -2.0), SingularOrigin);
}

#include "subsim/grid/sequence.hpp"

#include <doctest.h>

#include <complex>
#include <random>

using namespace subsim::grid;
using C = std::complex<double>;
using V3 = Eigen::Vector3cd;

TEST_CASE("balanced set maps to pure positive sequence") {
    V3 abc;
    abc << std::polar(1.0, 0.0), std::polar(1.0, -2.0943951023931953),
        std::polar(1.0, 2.0943951023931953);
    V3 seq = phase_to_sequence<double>(abc);
    CHECK(std::abs(seq(0)) < 1e-12);
    CHECK(std::abs(seq(1) - C(1.0, 0.0)) < 1e-12);
    CHECK(std::abs(seq(2)) < 1e-12);
}

TEST_CASE("common-mode set maps to pure zero sequence") {
    V3 abc;
    abc << C(1, 0), C(1, 0), C(1, 0);
    V3 seq = phase_to_sequence<double>(abc);
    CHECK(std::abs(seq(0) - C(1.0, 0.0)) < 1e-12);
    CHECK(std::abs(seq(1)) < 1e-12);
    CHECK(std::abs(seq(2)) < 1e-12);
}

TEST_CASE("round trip identity over random phasor triples") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> mag(0.0, 2.0);
    std::uniform_real_distribution<double> ang(-M_PI, M_PI);
    for (int i = 0; i < 1000; ++i) {
        V3 abc;
        for (int p = 0; p < 3; ++p) abc(p) = std::polar(mag(rng), ang(rng));
        V3 back = sequence_to_phase<double>(phase_to_sequence<double>(abc));
        for (int p = 0; p < 3; ++p) CHECK(std::abs(back(p) - abc(p)) < 1e-12);
    }
}

TEST_CASE("sequence diagonal expands to a circulant phase block") {
    auto blk = sequence_diag_to_phase<double>(C(0, 1), C(0, 2), C(0, 3));
    // Circulant structure: constant diagonal, and each wrap diagonal equal.
    CHECK(std::abs(blk(0, 0) - blk(1, 1)) < 1e-12);
    CHECK(std::abs(blk(0, 0) - blk(2, 2)) < 1e-12);
    CHECK(std::abs(blk(0, 1) - blk(1, 2)) < 1e-12);
    CHECK(std::abs(blk(1, 0) - blk(2, 1)) < 1e-12);
    // Equal sequence values collapse to a scalar times identity.
    auto iso = sequence_diag_to_phase<double>(C(0, 2), C(0, 2), C(0, 2));
    CHECK(std::abs(iso(0, 1)) < 1e-12);
    CHECK(std::abs(iso(0, 0) - C(0, 2)) < 1e-12);
}

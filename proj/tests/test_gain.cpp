#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "alleemem/gain.hpp"

using namespace alleemem;

TEST_CASE("sigmoid values and symmetry") {
    const GainSpec g = GainSpec::sigmoid();
    REQUIRE(gain(g, 0.0) == 0.5);
    REQUIRE(gain(g, 2.0) == Catch::Approx(1.0 / (1.0 + std::exp(-2.0))).epsilon(1e-15));
    for (double z : {-3.7, -0.5, 0.1, 1.0, 8.0})
        REQUIRE(gain(g, -z) == Catch::Approx(1.0 - gain(g, z)).margin(1e-15));
}

TEST_CASE("sigmoid is overflow-safe at extreme arguments") {
    const GainSpec g = GainSpec::sigmoid();
    REQUIRE(gain(g, 700.0) == Catch::Approx(1.0));
    REQUIRE(gain(g, -700.0) >= 0.0);
    REQUIRE(gain(g, -700.0) < 1e-300);
    REQUIRE(std::isfinite(gain_derivative(g, 700.0)));
    REQUIRE(std::isfinite(gain_derivative(g, -700.0)));
}

TEST_CASE("sigmoid derivative matches finite differences") {
    const GainSpec g = GainSpec::sigmoid();
    const double h = 1e-6;
    for (double z : {-4.0, -1.3, 0.0, 0.7, 2.9, 6.0}) {
        const double fd = (gain(g, z + h) - gain(g, z - h)) / (2 * h);
        REQUIRE(gain_derivative(g, z) == Catch::Approx(fd).margin(1e-9));
    }
}

TEST_CASE("sigmoid derivative equals G(1-G)") {
    const GainSpec g = GainSpec::sigmoid();
    for (double z : {-2.0, 0.0, 0.4, 5.0}) {
        const double G = gain(g, z);
        REQUIRE(gain_derivative(g, z) == Catch::Approx(G * (1.0 - G)).epsilon(1e-14));
    }
}

TEST_CASE("soboleva with unit parameters is tanh") {
    const GainSpec g = GainSpec::soboleva(1, 1, 1, 1);
    for (double z : {-3.0, -0.2, 0.0, 0.5, 2.0})
        REQUIRE(gain(g, z) == Catch::Approx(std::tanh(z)).margin(1e-14));
}

TEST_CASE("soboleva derivative matches finite differences") {
    const GainSpec g = GainSpec::soboleva(0.7, 1.3, 1.1, 0.9);
    const double h = 1e-6;
    for (double z : {-2.0, -0.4, 0.0, 0.8, 3.0}) {
        const double fd = (gain(g, z + h) - gain(g, z - h)) / (2 * h);
        REQUIRE(gain_derivative(g, z) == Catch::Approx(fd).margin(1e-8));
    }
}

TEST_CASE("soboleva is overflow-safe") {
    const GainSpec g = GainSpec::soboleva(0.7, 1.3, 1.1, 0.9);
    for (double z : {700.0, -700.0}) {
        REQUIRE(std::isfinite(gain(g, z)));
        REQUIRE(std::isfinite(gain_derivative(g, z)));
    }
}

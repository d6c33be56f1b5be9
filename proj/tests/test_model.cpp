#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <stdexcept>

#include "alleemem/model.hpp"

using namespace alleemem;

namespace {
const GainSpec kSig = GainSpec::sigmoid();

ModelParams params(double A, double K, double u, double m, double tv = 1, double tw = 1) {
    ModelParams p;
    p.A = A;
    p.K = K;
    p.u = u;
    p.m = m;
    p.tau_v = tv;
    p.tau_w = tw;
    return p;
}
}  // namespace

TEST_CASE("rhs matches the closed-form expressions") {
    const ModelParams p = params(1.0, 2.0, 1.5, 0.5);
    const NeuronState s{0.3, 0.8};
    double dx = 0, dy = 0;
    rhs(p, kSig, s, dx, dy);
    const double G = gain(kSig, p.u * std::sqrt(s.y) + p.m * s.x);
    REQUIRE(dx == Catch::Approx(-s.x + G).epsilon(1e-14));
    const double expected_dy =
        s.x * (p.u * std::sqrt(s.y) - s.x * s.y / p.K) * (1.0 - p.A / s.y);
    REQUIRE(dy == Catch::Approx(expected_dy).epsilon(1e-14));
}

TEST_CASE("rhs rejects non-positive y") {
    const ModelParams p = params(1.0, 2.0, 1.5, 0.5);
    double dx = 0, dy = 0;
    REQUIRE_THROWS_AS(rhs(p, kSig, NeuronState{0.3, 0.0}, dx, dy), std::domain_error);
    REQUIRE_THROWS_AS(rhs(p, kSig, NeuronState{0.3, -1.0}, dx, dy), std::domain_error);
    REQUIRE_THROWS_AS(jacobian_at(p, kSig, NeuronState{0.3, 0.0}), std::domain_error);
}

TEST_CASE("A=0 removes the allee factor exactly") {
    const ModelParams p = params(0.0, 2.0, 1.5, 0.5);
    const NeuronState s{0.3, 0.8};
    double dx = 0, dy = 0;
    rhs(p, kSig, s, dx, dy);
    // the factor is exactly 1, so dy is exactly the oja-form drift
    REQUIRE(dy == s.x * (p.u * std::sqrt(s.y) - s.x * s.y / p.K));
}

TEST_CASE("unbounded K zeroes the competition term") {
    ModelParams p = params(0.4, ModelParams::unbounded(), 1.5, 0.5);
    REQUIRE(p.k_unbounded());
    const NeuronState s{0.3, 0.8};
    double dx = 0, dy = 0;
    rhs(p, kSig, s, dx, dy);
    const double expected_dy = s.x * (p.u * std::sqrt(s.y)) * (1.0 - p.A / s.y);
    REQUIRE(dy == Catch::Approx(expected_dy).epsilon(1e-14));
    REQUIRE(std::isfinite(dy));
    const Mat2 J = jacobian_at(p, kSig, s);
    for (double e : J) REQUIRE(std::isfinite(e));
}

TEST_CASE("jacobian matches central finite differences") {
    const double h = 1e-6;
    const ModelParams cases[] = {
        params(1.0, 2.0, 1.5, 0.5),  params(0.0, 2.0, 1.5, 0.5),
        params(1.7, 0.4, 2.5, 0.01), params(0.4, 0.7, 2.0, 2.0),
        params(1.0, 2.0, 5.0, 2.0),  params(0.4, ModelParams::unbounded(), 1.0, 0.5),
        params(2.0, 1.0, 0.5, 3.0, 2.0, 0.7),
    };
    for (const auto& p : cases) {
        for (const NeuronState s : {NeuronState{0.3, 0.8}, NeuronState{0.7, 2.1},
                                    NeuronState{0.05, 0.2}}) {
            const Mat2 J = jacobian_at(p, kSig, s);
            auto f = [&](double x, double y, bool first) {
                double dx = 0, dy = 0;
                rhs(p, kSig, NeuronState{x, y}, dx, dy);
                return first ? dx : dy;
            };
            const double ffx = (f(s.x + h, s.y, true) - f(s.x - h, s.y, true)) / (2 * h);
            const double ffy = (f(s.x, s.y + h, true) - f(s.x, s.y - h, true)) / (2 * h);
            const double ggx = (f(s.x + h, s.y, false) - f(s.x - h, s.y, false)) / (2 * h);
            const double ggy = (f(s.x, s.y + h, false) - f(s.x, s.y - h, false)) / (2 * h);
            REQUIRE(J[0] == Catch::Approx(ffx).margin(1e-6));
            REQUIRE(J[1] == Catch::Approx(ffy).margin(1e-6));
            REQUIRE(J[2] == Catch::Approx(ggx).margin(1e-6));
            REQUIRE(J[3] == Catch::Approx(ggy).margin(1e-6));
        }
    }
}

TEST_CASE("jacobian with the soboleva gain matches finite differences") {
    const GainSpec g = GainSpec::soboleva(0.8, 1.2, 1.0, 1.1);
    const ModelParams p = params(0.7, 1.5, 1.2, 0.9);
    const NeuronState s{0.4, 1.1};
    const double h = 1e-6;
    const Mat2 J = jacobian_at(p, g, s);
    auto fx = [&](double x, double y) {
        double dx = 0, dy = 0;
        rhs(p, g, NeuronState{x, y}, dx, dy);
        return dx;
    };
    REQUIRE(J[0] == Catch::Approx((fx(s.x + h, s.y) - fx(s.x - h, s.y)) / (2 * h))
                        .margin(1e-6));
    REQUIRE(J[1] == Catch::Approx((fx(s.x, s.y + h) - fx(s.x, s.y - h)) / (2 * h))
                        .margin(1e-6));
}

TEST_CASE("trace and determinant agree with the jacobian entries") {
    const ModelParams p = params(1.0, 2.0, 5.0, 2.0);
    const NeuronState s{0.11, 0.23};
    const Mat2 J = jacobian_at(p, kSig, s);
    REQUIRE(trace_at(p, kSig, s) == Catch::Approx(J[0] + J[3]).epsilon(1e-14));
    REQUIRE(det_at(p, kSig, s) ==
            Catch::Approx(J[0] * J[3] - J[1] * J[2]).epsilon(1e-14));
}

TEST_CASE("time constants scale the rows") {
    const NeuronState s{0.3, 0.8};
    const ModelParams p1 = params(1.0, 2.0, 1.5, 0.5, 1.0, 1.0);
    const ModelParams p2 = params(1.0, 2.0, 1.5, 0.5, 2.0, 4.0);
    double dx1 = 0, dy1 = 0, dx2 = 0, dy2 = 0;
    rhs(p1, kSig, s, dx1, dy1);
    rhs(p2, kSig, s, dx2, dy2);
    REQUIRE(dx2 == Catch::Approx(dx1 / 2.0).epsilon(1e-14));
    REQUIRE(dy2 == Catch::Approx(dy1 / 4.0).epsilon(1e-14));
}

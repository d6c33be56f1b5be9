#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <stdexcept>

#include "alleemem/fixed_points.hpp"
#include "alleemem/rng.hpp"

using namespace alleemem;

namespace {
const GainSpec kSig = GainSpec::sigmoid();

ModelParams params(double A, double K, double u, double m) {
    ModelParams p;
    p.A = A;
    p.K = K;
    p.u = u;
    p.m = m;
    return p;
}

const FixedPointReport* find_branch(const std::vector<FixedPointReport>& fps, Branch b) {
    for (const auto& r : fps)
        if (r.branch == b) return &r;
    return nullptr;
}
}  // namespace

TEST_CASE("eigenvalues of canonical 2x2 matrices") {
    std::complex<double> e1, e2;
    eigenvalues_2x2(Mat2{-2, 0, 0, -3}, e1, e2);
    REQUIRE(e1.real() == Catch::Approx(-3.0));
    REQUIRE(e2.real() == Catch::Approx(-2.0));
    REQUIRE(e1.imag() == 0.0);

    eigenvalues_2x2(Mat2{0, 1, -1, 0}, e1, e2);  // rotation: +-i
    REQUIRE(e1.real() == Catch::Approx(0.0).margin(1e-15));
    REQUIRE(std::abs(e1.imag()) == Catch::Approx(1.0));
    REQUIRE(e1.imag() == -e2.imag());

    eigenvalues_2x2(Mat2{-2, 1, -1, 0}, e1, e2);  // tr=-2, det=1: double root -1
    REQUIRE(e1.real() == Catch::Approx(-1.0));
    REQUIRE(e2.real() == Catch::Approx(-1.0));
}

TEST_CASE("stability classification") {
    REQUIRE(classify_stability(Mat2{-2, 0, 0, -3}) == Stability::StableNode);
    REQUIRE(classify_stability(Mat2{2, 0, 0, 3}) == Stability::UnstableNode);
    REQUIRE(classify_stability(Mat2{1, 0, 0, -1}) == Stability::Saddle);
    REQUIRE(classify_stability(Mat2{-1, 2, -2, -1}) == Stability::StableFocus);
    REQUIRE(classify_stability(Mat2{1, 2, -2, 1}) == Stability::UnstableFocus);
    REQUIRE(classify_stability(Mat2{0, 1, -1, 0}) == Stability::CenterCandidate);
    REQUIRE(classify_stability(Mat2{0, 0, 0, -1}) == Stability::Nonhyperbolic);
}

TEST_CASE("branch and stability names") {
    REQUIRE(std::string(to_string(Branch::Allee)) == "allee");
    REQUIRE(std::string(to_string(Branch::Interaction)) == "interaction");
    REQUIRE(std::string(to_string(Stability::StableNode)) == "stable_node");
    REQUIRE(std::string(to_string(Stability::Saddle)) == "saddle");
}

TEST_CASE("strong-allee regime: stable allee point, interaction saddle") {
    const auto fps = solve_fixed_points(params(1.7, 0.4, 2.5, 0.01), kSig);
    const auto* al = find_branch(fps, Branch::Allee);
    const auto* in = find_branch(fps, Branch::Interaction);
    REQUIRE(al != nullptr);
    REQUIRE(in != nullptr);
    REQUIRE(al->point.y == Catch::Approx(1.7));
    REQUIRE(al->point.x == Catch::Approx(0.96336).margin(1e-4));
    REQUIRE(al->eig1.real() < 0.0);
    REQUIRE(al->eig2.real() < 0.0);
    REQUIRE(in->stability == Stability::Saddle);
    // fixed-point residuals are tiny on both branches
    const double r_allee =
        al->point.x - gain(kSig, 2.5 * std::sqrt(1.7) + 0.01 * al->point.x);
    REQUIRE(std::abs(r_allee) < 1e-10);
    const double yi = in->point.y;
    REQUIRE(yi == Catch::Approx(std::pow(2.5 * 0.4 / in->point.x, 2)).epsilon(1e-9));
}

TEST_CASE("weak-allee regime: classifications swap") {
    const auto fps = solve_fixed_points(params(0.4, 0.7, 2.0, 2.0), kSig);
    const auto* al = find_branch(fps, Branch::Allee);
    const auto* in = find_branch(fps, Branch::Interaction);
    REQUIRE(al != nullptr);
    REQUIRE(in != nullptr);
    REQUIRE(al->stability == Stability::Saddle);
    REQUIRE(in->eig1.real() < 0.0);
    REQUIRE(in->eig2.real() < 0.0);
}

TEST_CASE("A=0 removes the allee branch") {
    const auto fps = solve_fixed_points(params(0.0, 0.7, 2.0, 2.0), kSig);
    REQUIRE(find_branch(fps, Branch::Allee) == nullptr);
    REQUIRE(find_branch(fps, Branch::Interaction) != nullptr);
    REQUIRE(fps.size() == 1);
}

TEST_CASE("u=0 removes the interaction branch") {
    const auto fps = solve_fixed_points(params(0.4, 2.0, 0.0, 0.0), kSig);
    REQUIRE(find_branch(fps, Branch::Interaction) == nullptr);
    const auto* al = find_branch(fps, Branch::Allee);
    REQUIRE(al != nullptr);
    REQUIRE(al->point.x == Catch::Approx(0.5).margin(1e-10));  // x = G(0)
    REQUIRE(al->point.y == 0.4);
}

TEST_CASE("unbounded K keeps the allee branch, drops interaction roots") {
    const auto fps = solve_fixed_points(params(0.4, ModelParams::unbounded(), 1.0, 0.5), kSig);
    REQUIRE(find_branch(fps, Branch::Allee) != nullptr);
    REQUIRE(find_branch(fps, Branch::Interaction) == nullptr);
}

TEST_CASE("theorem-1 predicate basics") {
    REQUIRE_THROWS_AS(theorem1_predicate(params(0.0, 0.7, 2.0, 2.0)), std::invalid_argument);

    const auto strong = theorem1_predicate(params(1.7, 0.4, 2.5, 0.01));
    REQUIRE(strong.stable_allee_point);
    REQUIRE(strong.case_label == "m_lt_4");
    REQUIRE(strong.tau_A == Catch::Approx(2.5 * 0.4 / std::sqrt(1.7)));

    const auto weak = theorem1_predicate(params(0.4, 0.7, 2.0, 2.0));
    REQUIRE_FALSE(weak.stable_allee_point);

    // unbounded K: tau_A = inf, so the threshold clause can never hold
    const auto unb = theorem1_predicate(params(1.0, ModelParams::unbounded(), 1.0, 0.5));
    REQUIRE(std::isinf(unb.tau_A));
    REQUIRE_FALSE(unb.stable_allee_point);

    REQUIRE(theorem1_predicate(params(1.0, 1.0, 1.0, 4.0)).case_label == "boundary");
    REQUIRE(theorem1_predicate(params(1.0, 1.0, 1.0, 5.0)).case_label == "m_gt_4");
}

TEST_CASE("theorem-1 predicate agrees with eigenvalues on random draws") {
    Rng rng(20240817);
    int checked = 0, mismatched = 0;
    for (int it = 0; it < 500; ++it) {
        const ModelParams p = params(rng.uniform(0.1, 4.6), rng.uniform(0.1, 4.6),
                                     rng.uniform(0.1, 4.6), rng.uniform(0.1, 4.6));
        const auto t1 = theorem1_predicate(p);
        const Mat2 J = jacobian_at(p, kSig, NeuronState{t1.x_A, p.A});
        std::complex<double> e1, e2;
        eigenvalues_2x2(J, e1, e2);
        if (std::min(std::abs(e1.real()), std::abs(e2.real())) <= 1e-6) continue;
        ++checked;
        const bool stable = e1.real() < 0.0 && e2.real() < 0.0;
        if (stable != t1.stable_allee_point) ++mismatched;
    }
    REQUIRE(checked > 400);
    REQUIRE(mismatched == 0);
}

TEST_CASE("reported eigenvalues match the reported jacobian") {
    const auto fps = solve_fixed_points(params(1.0, 2.0, 1.5, 0.5), kSig);
    REQUIRE_FALSE(fps.empty());
    for (const auto& r : fps) {
        std::complex<double> e1, e2;
        eigenvalues_2x2(r.jacobian, e1, e2);
        REQUIRE(e1.real() == r.eig1.real());
        REQUIRE(e2.imag() == r.eig2.imag());
        REQUIRE(classify_stability(r.jacobian) == r.stability);
    }
}

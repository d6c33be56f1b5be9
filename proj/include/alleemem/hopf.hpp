#pragma once

#include <optional>
#include <string>
#include <vector>

#include "alleemem/fixed_points.hpp"
#include "alleemem/model.hpp"

namespace alleemem {

// Closed-form Hopf verdict for one fixed-point branch.
//   lambda = 1 - A/y*,  beta = (uK)^2 / (2m),
//   p2 = beta/2 + sqrt(beta^2/4 + 2*beta/lambda)   (present only when the
//   discriminant is nonnegative).
// The quadratic whose positive root p2 is:  -lambda p^2 + beta lambda p + 2 beta.
struct HopfVerdict {
    Branch branch = Branch::Interaction;
    double x_star = 0.0, y_star = 0.0;
    double lambda = 0.0;
    double beta = 0.0;
    std::optional<double> p2;
    bool hopf = false;
    std::string case_label;  // "y*=A impossible", "y*<A window", "y*>A tail",
                             // "discriminant-negative"
};

// One verdict per located fixed point (allee branch always hopf=false; A=0
// forces hopf=false on every branch). Throws std::runtime_error when the
// interaction branch has no root at all.
std::vector<HopfVerdict> hopf_verdict(const ModelParams& p, const GainSpec& spec);

// p1/p2 roots of the verdict quadratic, for diagnostics and tests.
// Returns false when the discriminant is negative.
bool hopf_quadratic_roots(double lambda, double beta, double& p1, double& p2);

enum class CrossingStatus {
    Confirmed,   // pure-imaginary pair found at the bisected critical point
    Refuted,     // trace crossing exists but det < 0 there (real +- pair)
    NoCrossing,  // no trace sign change found in the searched range
};

struct CrossingPoint {
    double x = 0.0, y = 0.0;      // in-plane location (plane mode)
    double param = 0.0;           // critical parameter value (fixed-point mode)
    double tr = 0.0, det = 0.0;
    double re = 0.0, im = 0.0;    // eigenvalue at the point
};

struct CrossingCheck {
    CrossingStatus status = CrossingStatus::NoCrossing;
    std::vector<CrossingPoint> points;  // confirmed points (plane mode: every
                                        // bisected edge; fp mode: one)
    std::string diagnostic;             // human-readable note on refute/no-crossing
};

// Tier-2 check, plane mode: treat (x, y) as free coordinates, locate tr = 0
// crossings on cell edges of an (nx x ny) lattice where det > 0 on both
// sides, and bisect each to |tr| <= 1e-12. Eigenvalues there are +- i sqrt(det).
CrossingCheck hopf_crossing_check_plane(const ModelParams& p, const GainSpec& spec,
                                        double x_min, double x_max,
                                        double y_min, double y_max,
                                        int nx = 400, int ny = 400,
                                        int max_points = 64);

// Tier-2 check, fixed-point mode: track the interaction-branch fixed point
// while varying A and bisect tr(A) = 0. For the sigmoid gain the determinant
// at such a crossing is negative, so this mode reports Refuted with a
// diagnostic rather than confirming a Hopf (two-tier design: disagreement
// between the closed form and the eigenvalue check is surfaced, not hidden).
CrossingCheck hopf_crossing_check_fixed_point(const ModelParams& p, const GainSpec& spec,
                                              double A_lo, double A_hi);

}  // namespace alleemem

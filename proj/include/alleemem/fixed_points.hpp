#pragma once

#include <complex>
#include <string>
#include <vector>

#include "alleemem/model.hpp"

namespace alleemem {

enum class Branch { Allee, Interaction };

enum class Stability {
    StableNode,
    UnstableNode,
    Saddle,
    StableFocus,
    UnstableFocus,
    CenterCandidate,
    Nonhyperbolic,
};

const char* to_string(Branch b);
const char* to_string(Stability s);

struct FixedPointReport {
    NeuronState point;
    Branch branch = Branch::Allee;
    Mat2 jacobian = {0, 0, 0, 0};
    std::complex<double> eig1, eig2;
    Stability stability = Stability::Nonhyperbolic;
    bool collision = false;  // merged with a near-duplicate root (saddle-node candidate)
};

// Eigenvalues from trace/determinant of a 2x2 matrix.
void eigenvalues_2x2(const Mat2& J, std::complex<double>& e1, std::complex<double>& e2);

// Classification with hyperbolicity tolerance 1e-9 on the real parts.
Stability classify_stability(const Mat2& J);

// All fixed points on both branches:
//   allee branch:        x = G(u*sqrt(A) + m x), y = A        (only when A > 0)
//   interaction branch:  x = G(u^2 K / x + m x), y = (uK/x)^2
// Roots found by a 1000-subinterval sign scan + bisection to 1e-12.
// Duplicates closer than 1e-8 are merged and flagged as a collision.
std::vector<FixedPointReport> solve_fixed_points(const ModelParams& p, const GainSpec& spec);

struct Theorem1Result {
    bool stable_allee_point = false;
    std::string case_label;  // "m_lt_4", "boundary", "m_gt_4"
    double x_A = 0.0;        // allee-branch root used for the predicate
    double tau_A = 0.0;      // uK/sqrt(A)
};

// Closed-form stability predicate for the allee-branch point (sigmoid gain).
// Throws std::invalid_argument when A = 0 (the branch does not exist).
Theorem1Result theorem1_predicate(const ModelParams& p);

}  // namespace alleemem

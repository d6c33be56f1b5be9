#pragma once

#include <array>
#include <cmath>
#include <limits>

#include "alleemem/gain.hpp"

namespace alleemem {

// Parameters of the reduced two-variable model
//   dx/dt = (-x + G(u*sqrt(y) + m*x)) / tau_v
//   dy/dt = (1/tau_w) * x * (u*sqrt(y) - x*y/K) * (1 - A/y)
// K may be "unbounded" (Hebbian limit), which zeroes the x*y/K term exactly.
struct ModelParams {
    double A = 0.0;    // Allee threshold, >= 0
    double K = 1.0;    // growth regulator, > 0 or unbounded
    double u = 1.0;    // effective pre-synaptic input, >= 0
    double m = 0.0;    // recurrent post-synaptic weight
    double tau_v = 1.0;
    double tau_w = 1.0;

    bool k_unbounded() const { return std::isinf(K); }
    static double unbounded() { return std::numeric_limits<double>::infinity(); }
};

struct NeuronState {
    double x = 0.0;  // post-synaptic rate
    double y = 0.0;  // squared weight norm
};

using Mat2 = std::array<double, 4>;  // row-major {fx, fy, gx, gy}

// Right-hand side of the ODE. Throws std::domain_error if s.y <= 0.
void rhs(const ModelParams& p, const GainSpec& spec, const NeuronState& s,
         double& dx_dt, double& dy_dt);

// Analytic Jacobian at s (tau scaling applied consistently with rhs).
// Throws std::domain_error if s.y <= 0.
Mat2 jacobian_at(const ModelParams& p, const GainSpec& spec, const NeuronState& s);

double trace_at(const ModelParams& p, const GainSpec& spec, const NeuronState& s);
double det_at(const ModelParams& p, const GainSpec& spec, const NeuronState& s);

}  // namespace alleemem

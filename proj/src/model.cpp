#include "alleemem/model.hpp"

#include <cmath>
#include <stdexcept>

namespace alleemem {

void rhs(const ModelParams& p, const GainSpec& spec, const NeuronState& s,
         double& dx_dt, double& dy_dt) {
    if (!(s.y > 0.0)) throw std::domain_error("rhs: state y must be positive");
    const double sy = std::sqrt(s.y);
    const double vin = p.u * sy + p.m * s.x;
    dx_dt = (-s.x + gain(spec, vin)) / p.tau_v;
    // K unbounded zeroes the x*y/K term exactly (no 0*inf), A = 0 makes the
    // allee factor exactly 1 (no 0/0 for tiny y).
    const double interact = p.k_unbounded() ? p.u * sy : p.u * sy - s.x * s.y / p.K;
    const double allee_factor = (p.A == 0.0) ? 1.0 : 1.0 - p.A / s.y;
    dy_dt = s.x * interact * allee_factor / p.tau_w;
}

Mat2 jacobian_at(const ModelParams& p, const GainSpec& spec, const NeuronState& s) {
    if (!(s.y > 0.0)) throw std::domain_error("jacobian_at: state y must be positive");
    const double sy = std::sqrt(s.y);
    const double vin = p.u * sy + p.m * s.x;
    const double gp = gain_derivative(spec, vin);

    const double ffx = (-1.0 + p.m * gp) / p.tau_v;
    const double ffy = (p.u / (2.0 * sy)) * gp / p.tau_v;

    const double allee_factor = (p.A == 0.0) ? 1.0 : 1.0 - p.A / s.y;
    const double interact = p.k_unbounded() ? p.u * sy : p.u * sy - s.x * s.y / p.K;
    const double interact_x = p.k_unbounded() ? p.u * sy : p.u * sy - 2.0 * s.x * s.y / p.K;

    const double ggx = interact_x * allee_factor / p.tau_w;
    const double dyd = p.u / (2.0 * sy) - (p.k_unbounded() ? 0.0 : s.x / p.K);
    const double allee_dy = (p.A == 0.0) ? 0.0 : s.x * interact * (p.A / (s.y * s.y));
    const double ggy = (s.x * dyd * allee_factor + allee_dy) / p.tau_w;

    return Mat2{ffx, ffy, ggx, ggy};
}

double trace_at(const ModelParams& p, const GainSpec& spec, const NeuronState& s) {
    Mat2 J = jacobian_at(p, spec, s);
    return J[0] + J[3];
}

double det_at(const ModelParams& p, const GainSpec& spec, const NeuronState& s) {
    Mat2 J = jacobian_at(p, spec, s);
    return J[0] * J[3] - J[1] * J[2];
}

}  // namespace alleemem

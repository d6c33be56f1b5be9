#include "alleemem/integrate.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace alleemem {

Trajectory integrate(const ModelParams& p, const GainSpec& spec,
                     const NeuronState& s0, double t_end, double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("integrate: dt must be positive");
    if (!(t_end >= 0.0)) throw std::invalid_argument("integrate: t_end must be nonnegative");
    if (!(s0.y > 0.0)) throw std::invalid_argument("integrate: initial y must be positive");

    // RK4 stages can probe y below the floor near extinction (the field has a
    // 1/sqrt(y) singularity), so stage evaluations clamp y up to the floor.
    auto deriv = [&](double x, double y, double& dx, double& dy) {
        NeuronState s{x, y < kExtinctionFloor ? kExtinctionFloor : y};
        rhs(p, spec, s, dx, dy);
    };

    const long n_steps = static_cast<long>(std::ceil(t_end / dt - 1e-12));
    Trajectory out;
    out.times.reserve(n_steps + 1);
    out.states.reserve(n_steps + 1);
    out.times.push_back(0.0);
    out.states.push_back(s0);

    double x = s0.x, y = s0.y;
    bool extinct = false;
    for (long k = 0; k < n_steps; ++k) {
        double k1x, k1y, k2x, k2y, k3x, k3y, k4x, k4y;
        deriv(x, y, k1x, k1y);
        if (extinct) k1y = 0.0;
        deriv(x + 0.5 * dt * k1x, y + 0.5 * dt * k1y, k2x, k2y);
        if (extinct) k2y = 0.0;
        deriv(x + 0.5 * dt * k2x, y + 0.5 * dt * k2y, k3x, k3y);
        if (extinct) k3y = 0.0;
        deriv(x + dt * k3x, y + dt * k3y, k4x, k4y);
        if (extinct) k4y = 0.0;

        x += dt / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
        y += dt / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y);

        double t = (k + 1) * dt;
        if (!extinct && y <= kExtinctionFloor) {
            extinct = true;
            out.extinct_at = t;
        }
        if (extinct) y = kExtinctionFloor;

        if (!std::isfinite(x) || !std::isfinite(y))
            throw std::runtime_error("integrate: non-finite state at t = " + std::to_string(t));

        out.times.push_back(t);
        out.states.push_back(NeuronState{x, y});
    }
    return out;
}

}  // namespace alleemem

#pragma once

#include <optional>
#include <vector>

#include "alleemem/model.hpp"

namespace alleemem {

struct Trajectory {
    std::vector<double> times;
    std::vector<NeuronState> states;
    std::optional<double> extinct_at;  // first time y hit the extinction floor
};

inline constexpr double kExtinctionFloor = 1e-8;

// Classical fixed-step RK4. After each step y is clamped to the extinction
// floor; once the floor is hit, extinct_at is set and y is held there (the
// y-derivative is frozen at zero, x keeps evolving).
// Throws std::invalid_argument on bad dt/t_end/s0, std::runtime_error if the
// state turns non-finite.
Trajectory integrate(const ModelParams& p, const GainSpec& spec,
                     const NeuronState& s0, double t_end, double dt = 0.01);

}  // namespace alleemem

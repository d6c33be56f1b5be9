#pragma once

#include <string>
#include <vector>

#include "alleemem/fixed_points.hpp"
#include "alleemem/integrate.hpp"

namespace alleemem {

// clamp(1 - dist(state, target)/norm(target), 0, 1).
// Throws std::invalid_argument when target is the origin.
double overlap(const NeuronState& state, const NeuronState& target);

struct OverlapSeries {
    NeuronState initial;
    FixedPointReport target;
    std::vector<double> times;
    std::vector<double> overlap;  // in [0, 1]; reported as 0 from extinct_at on
    std::optional<double> extinct_at;
};

// Integrates each initial and scores overlap against the stable
// interaction-branch fixed point (or the stable allee point if it is the
// only stable one). From the extinction time onward the overlap is reported
// as 0: the stored pattern is unrecoverable. Throws std::runtime_error when
// no stable fixed point exists.
std::vector<OverlapSeries> overlap_experiment(const ModelParams& p, const GainSpec& spec,
                                              const std::vector<NeuronState>& initials,
                                              double t_end, double dt = 0.01);

struct SensitivityResult {
    std::string varied;             // one of A, K, m, u
    std::vector<double> values;     // n equidistant values in [lo, hi]
    ModelParams companions;         // the fixed companion parameters used
    std::vector<Trajectory> runs;   // one per value
};

// Fig.-6 protocol: vary one parameter over n equidistant values with the
// quoted companions (A-vary: m=1,u=0.5,K=1; K-vary: m=1,u=0.5,A=0.4;
// m-vary: u=0.5,A=0.4,K=1; u-vary: m=1,A=0.4,K=1), integrating from s0.
// Throws std::invalid_argument on an unknown parameter name.
SensitivityResult sensitivity_sweep(const GainSpec& spec, const std::string& vary,
                                    double lo, double hi, int n,
                                    const NeuronState& s0, double t_end,
                                    double dt = 0.01);

}  // namespace alleemem

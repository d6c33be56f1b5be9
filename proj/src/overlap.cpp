#include "alleemem/overlap.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "alleemem/parallel.hpp"

namespace alleemem {

double overlap(const NeuronState& state, const NeuronState& target) {
    const double norm = std::sqrt(target.x * target.x + target.y * target.y);
    if (norm == 0.0) throw std::invalid_argument("overlap: target must not be the origin");
    const double dx = state.x - target.x, dy = state.y - target.y;
    const double v = 1.0 - std::sqrt(dx * dx + dy * dy) / norm;
    return std::clamp(v, 0.0, 1.0);
}

namespace {

bool is_stable(Stability s) {
    return s == Stability::StableNode || s == Stability::StableFocus;
}

FixedPointReport pick_target(const std::vector<FixedPointReport>& fps) {
    for (const auto& r : fps)
        if (r.branch == Branch::Interaction && is_stable(r.stability)) return r;
    for (const auto& r : fps)
        if (r.branch == Branch::Allee && is_stable(r.stability)) return r;
    throw std::runtime_error("overlap_experiment: no stable fixed point to score against");
}

}  // namespace

std::vector<OverlapSeries> overlap_experiment(const ModelParams& p, const GainSpec& spec,
                                              const std::vector<NeuronState>& initials,
                                              double t_end, double dt) {
    const FixedPointReport target = pick_target(solve_fixed_points(p, spec));
    std::vector<OverlapSeries> out(initials.size());
    parallel_for(initials.size(), [&](size_t i) {
        Trajectory tr = integrate(p, spec, initials[i], t_end, dt);
        OverlapSeries s;
        s.initial = initials[i];
        s.target = target;
        s.times = tr.times;
        s.extinct_at = tr.extinct_at;
        s.overlap.resize(tr.states.size());
        for (size_t k = 0; k < tr.states.size(); ++k) {
            const bool dead = tr.extinct_at && tr.times[k] >= *tr.extinct_at;
            s.overlap[k] = dead ? 0.0 : overlap(tr.states[k], target.point);
        }
        out[i] = std::move(s);
    });
    return out;
}

SensitivityResult sensitivity_sweep(const GainSpec& spec, const std::string& vary,
                                    double lo, double hi, int n,
                                    const NeuronState& s0, double t_end, double dt) {
    if (n < 1) throw std::invalid_argument("sensitivity_sweep: n >= 1");
    ModelParams companions;  // tau_v = tau_w = 1
    if (vary == "A") {
        companions.m = 1.0; companions.u = 0.5; companions.K = 1.0;
    } else if (vary == "K") {
        companions.m = 1.0; companions.u = 0.5; companions.A = 0.4;
    } else if (vary == "m") {
        companions.u = 0.5; companions.A = 0.4; companions.K = 1.0;
    } else if (vary == "u") {
        companions.m = 1.0; companions.A = 0.4; companions.K = 1.0;
    } else {
        throw std::invalid_argument("sensitivity_sweep: vary must be one of A, K, m, u");
    }

    SensitivityResult res;
    res.varied = vary;
    res.companions = companions;
    res.values.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        res.values[static_cast<size_t>(i)] = n == 1 ? lo : lo + (hi - lo) * i / (n - 1);

    res.runs.resize(res.values.size());
    parallel_for(res.values.size(), [&](size_t i) {
        ModelParams p = companions;
        const double v = res.values[i];
        if (vary == "A") p.A = v;
        else if (vary == "K") p.K = v;
        else if (vary == "m") p.m = v;
        else p.u = v;
        res.runs[i] = integrate(p, spec, s0, t_end, dt);
    });
    return res;
}

}  // namespace alleemem

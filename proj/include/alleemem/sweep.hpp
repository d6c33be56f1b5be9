#pragma once

#include <string>
#include <vector>

#include "alleemem/fixed_points.hpp"

namespace alleemem {

enum class SweepEventKind { SaddleNode, Transcritical, Hopf };

const char* to_string(SweepEventKind k);

struct SweepEvent {
    std::string parameter;
    double value = 0.0;  // bisected to 1e-6 in the parameter
    SweepEventKind kind = SweepEventKind::SaddleNode;
    std::vector<FixedPointReport> before;  // fixed points just below the event
    std::vector<FixedPointReport> after;   // fixed points just above
};

// Sweeps one of {A, K, u, m} across sorted values, solving fixed points at
// each, and emits events:
//   saddle_node  — interaction-branch root count drops via collision, or the
//                  interaction point collides with the allee point (y* - A
//                  changes sign);
//   transcritical — the allee and interaction points swap stability classes;
//   hopf         — any hopf_verdict flips.
// Multiple kinds may fire at the same crossing; all are emitted.
std::vector<SweepEvent> parameter_sweep(const ModelParams& base, const GainSpec& spec,
                                        const std::string& vary,
                                        const std::vector<double>& values);

}  // namespace alleemem

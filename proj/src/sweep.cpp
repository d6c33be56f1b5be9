#include "alleemem/sweep.hpp"

#include <cmath>
#include <stdexcept>

#include "alleemem/hopf.hpp"

namespace alleemem {

const char* to_string(SweepEventKind k) {
    switch (k) {
        case SweepEventKind::SaddleNode: return "saddle_node";
        case SweepEventKind::Transcritical: return "transcritical";
        case SweepEventKind::Hopf: return "hopf";
    }
    return "?";
}

namespace {

ModelParams with_value(ModelParams base, const std::string& vary, double v) {
    if (vary == "A") base.A = v;
    else if (vary == "K") base.K = v;
    else if (vary == "u") base.u = v;
    else if (vary == "m") base.m = v;
    else throw std::invalid_argument("parameter_sweep: vary must be one of A, K, u, m");
    return base;
}

struct Snapshot {
    std::vector<FixedPointReport> fps;
    int n_inter = 0;
    int ygap_sign = -2;  // sign of (y* of interaction root nearest A) - A; -2 when absent
    int allee_cls = -1;  // first allee root's stability class; -1 when absent
    int inter_cls = -1;
    bool hopf = false;
};

Snapshot snapshot(const ModelParams& base, const GainSpec& spec,
                  const std::string& vary, double v) {
    const ModelParams p = with_value(base, vary, v);
    Snapshot s;
    s.fps = solve_fixed_points(p, spec);
    double best_gap = 0.0;
    for (const auto& r : s.fps) {
        if (r.branch == Branch::Interaction) {
            ++s.n_inter;
            if (s.inter_cls < 0) s.inter_cls = static_cast<int>(r.stability);
            const double gap = r.point.y - p.A;
            if (s.ygap_sign == -2 || std::abs(gap) < std::abs(best_gap)) {
                best_gap = gap;
                s.ygap_sign = gap > 0.0 ? 1 : (gap < 0.0 ? -1 : 0);
            }
        } else if (s.allee_cls < 0) {
            s.allee_cls = static_cast<int>(r.stability);
        }
    }
    try {
        for (const auto& hv : hopf_verdict(p, spec))
            if (hv.hopf) s.hopf = true;
    } catch (const std::runtime_error&) {
        s.hopf = false;  // no fixed points at this value
    }
    return s;
}

// Bisect the first value in (lo, hi) where `key` stops matching key(lo),
// then emit one event at the bracket midpoint.
template <typename KeyFn>
SweepEvent bisect_event(const ModelParams& base, const GainSpec& spec,
                        const std::string& vary, double lo, double hi,
                        SweepEventKind kind, const KeyFn& key) {
    auto key_lo = key(snapshot(base, spec, vary, lo));
    while (hi - lo > 1e-6) {
        const double mid = 0.5 * (lo + hi);
        if (key(snapshot(base, spec, vary, mid)) != key_lo)
            hi = mid;
        else
            lo = mid;
    }
    SweepEvent ev;
    ev.parameter = vary;
    ev.value = 0.5 * (lo + hi);
    ev.kind = kind;
    ev.before = snapshot(base, spec, vary, lo).fps;
    ev.after = snapshot(base, spec, vary, hi).fps;
    return ev;
}

}  // namespace

std::vector<SweepEvent> parameter_sweep(const ModelParams& base, const GainSpec& spec,
                                        const std::string& vary,
                                        const std::vector<double>& values) {
    std::vector<SweepEvent> events;
    if (values.size() < 2) return events;

    Snapshot prev = snapshot(base, spec, vary, values[0]);
    for (size_t i = 1; i < values.size(); ++i) {
        Snapshot cur = snapshot(base, spec, vary, values[i]);
        const double lo = values[i - 1], hi = values[i];
        std::vector<SweepEvent> local;

        if (cur.n_inter != prev.n_inter)
            local.push_back(bisect_event(base, spec, vary, lo, hi, SweepEventKind::SaddleNode,
                                         [](const Snapshot& s) { return s.n_inter; }));
        if (prev.ygap_sign != -2 && cur.ygap_sign != -2 && prev.ygap_sign * cur.ygap_sign < 0)
            local.push_back(bisect_event(base, spec, vary, lo, hi, SweepEventKind::SaddleNode,
                                         [](const Snapshot& s) { return s.ygap_sign; }));
        const bool classes_present = prev.allee_cls >= 0 && prev.inter_cls >= 0 &&
                                     cur.allee_cls >= 0 && cur.inter_cls >= 0;
        if (classes_present && prev.allee_cls != cur.allee_cls &&
            prev.allee_cls == cur.inter_cls && prev.inter_cls == cur.allee_cls)
            local.push_back(bisect_event(
                base, spec, vary, lo, hi, SweepEventKind::Transcritical,
                [](const Snapshot& s) { return std::pair(s.allee_cls, s.inter_cls); }));
        if (cur.hopf != prev.hopf)
            local.push_back(bisect_event(base, spec, vary, lo, hi, SweepEventKind::Hopf,
                                         [](const Snapshot& s) { return s.hopf; }));

        // Two indicators of the same kind can localize the same crossing
        // (e.g. a root-count change and a y*-A sign flip at one collision);
        // keep one event per (kind, location) cluster.
        for (auto& ev : local) {
            bool dup = false;
            for (const auto& kept : events)
                if (kept.kind == ev.kind && kept.parameter == ev.parameter &&
                    std::abs(kept.value - ev.value) <= 2e-6) {
                    dup = true;
                    break;
                }
            if (!dup) events.push_back(std::move(ev));
        }
        prev = std::move(cur);
    }
    return events;
}

}  // namespace alleemem

#include "alleemem/fixed_points.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

namespace alleemem {

const char* to_string(Branch b) {
    return b == Branch::Allee ? "allee" : "interaction";
}

const char* to_string(Stability s) {
    switch (s) {
        case Stability::StableNode: return "stable_node";
        case Stability::UnstableNode: return "unstable_node";
        case Stability::Saddle: return "saddle";
        case Stability::StableFocus: return "stable_focus";
        case Stability::UnstableFocus: return "unstable_focus";
        case Stability::CenterCandidate: return "center_candidate";
        case Stability::Nonhyperbolic: return "nonhyperbolic";
    }
    return "?";
}

void eigenvalues_2x2(const Mat2& J, std::complex<double>& e1, std::complex<double>& e2) {
    const double tr = J[0] + J[3];
    const double det = J[0] * J[3] - J[1] * J[2];
    const double disc = tr * tr - 4.0 * det;
    if (disc >= 0.0) {
        const double s = std::sqrt(disc);
        e1 = {(tr - s) / 2.0, 0.0};
        e2 = {(tr + s) / 2.0, 0.0};
    } else {
        const double w = std::sqrt(-disc) / 2.0;
        e1 = {tr / 2.0, -w};
        e2 = {tr / 2.0, w};
    }
}

Stability classify_stability(const Mat2& J) {
    constexpr double tol = 1e-9;
    std::complex<double> e1, e2;
    eigenvalues_2x2(J, e1, e2);
    const double r1 = e1.real(), r2 = e2.real();
    const bool complex_pair = e1.imag() != 0.0;
    if (complex_pair) {
        if (std::abs(r1) <= tol) return Stability::CenterCandidate;
        return r1 < 0.0 ? Stability::StableFocus : Stability::UnstableFocus;
    }
    if (r1 < -tol && r2 < -tol) return Stability::StableNode;
    if (r1 > tol && r2 > tol) return Stability::UnstableNode;
    if ((r1 < -tol && r2 > tol) || (r1 > tol && r2 < -tol)) return Stability::Saddle;
    return Stability::Nonhyperbolic;
}

// Sign-scan lo..hi in n subintervals, bisect each bracket to tol.
static std::vector<double> find_roots(const std::function<double(double)>& f,
                                      double lo, double hi, int n, double tol) {
    std::vector<double> roots;
    double prev_x = lo, prev_f = f(lo);
    for (int i = 1; i <= n; ++i) {
        double x = lo + (hi - lo) * i / n;
        double fx = f(x);
        if (prev_f == 0.0) {
            roots.push_back(prev_x);
        } else if (prev_f * fx < 0.0) {
            double a = prev_x, b = x, fa = prev_f;
            while (b - a > tol) {
                double c = 0.5 * (a + b);
                double fc = f(c);
                if (fc == 0.0) { a = b = c; break; }
                if (fa * fc < 0.0) b = c;
                else { a = c; fa = fc; }
            }
            roots.push_back(0.5 * (a + b));
        }
        prev_x = x;
        prev_f = fx;
    }
    if (prev_f == 0.0) roots.push_back(prev_x);
    return roots;
}

static FixedPointReport make_report(const ModelParams& p, const GainSpec& spec,
                                    double x, double y, Branch branch) {
    FixedPointReport r;
    r.point = NeuronState{x, y};
    r.branch = branch;
    r.jacobian = jacobian_at(p, spec, r.point);
    eigenvalues_2x2(r.jacobian, r.eig1, r.eig2);
    r.stability = classify_stability(r.jacobian);
    return r;
}

std::vector<FixedPointReport> solve_fixed_points(const ModelParams& p, const GainSpec& spec) {
    std::vector<FixedPointReport> out;
    if (p.A > 0.0) {
        const double sA = std::sqrt(p.A);
        auto h = [&](double x) { return x - gain(spec, p.u * sA + p.m * x); };
        for (double x : find_roots(h, 0.0, 1.0, 1000, 1e-12))
            if (x > 0.0 && x < 1.0) out.push_back(make_report(p, spec, x, p.A, Branch::Allee));
    }
    if (!p.k_unbounded()) {
        // x = G(u^2 K / x + m x); y* = (uK/x)^2 on the interaction isocline.
        auto h = [&](double x) { return x - gain(spec, p.u * p.u * p.K / x + p.m * x); };
        for (double x : find_roots(h, 1e-6, 1.0, 1000, 1e-12)) {
            if (x <= 0.0 || x >= 1.0) continue;
            double y = (p.u * p.K / x) * (p.u * p.K / x);
            if (!(y > 0.0)) continue;  // u = 0 collapses the isocline to y = 0
            out.push_back(make_report(p, spec, x, y, Branch::Interaction));
        }
    }
    // Merge near-duplicates (across branches too: a collision there is a
    // saddle-node candidate, e.g. the interaction point meeting y* = A).
    std::vector<FixedPointReport> merged;
    for (auto& r : out) {
        bool dup = false;
        for (auto& kept : merged) {
            double dx = kept.point.x - r.point.x, dy = kept.point.y - r.point.y;
            if (std::sqrt(dx * dx + dy * dy) < 1e-8) {
                kept.collision = true;
                dup = true;
                break;
            }
        }
        if (!dup) merged.push_back(r);
    }
    return merged;
}

Theorem1Result theorem1_predicate(const ModelParams& p) {
    if (p.A <= 0.0)
        throw std::invalid_argument("theorem1_predicate: requires A > 0 (allee branch)");
    const GainSpec spec = GainSpec::sigmoid();
    const double sA = std::sqrt(p.A);
    auto h = [&](double x) { return x - gain(spec, p.u * sA + p.m * x); };
    auto roots = find_roots(h, 0.0, 1.0, 1000, 1e-12);
    if (roots.empty())
        throw std::runtime_error("theorem1_predicate: no allee-branch root found");
    Theorem1Result res;
    res.x_A = roots.front();
    res.tau_A = p.k_unbounded() ? std::numeric_limits<double>::infinity()
                                : p.u * p.K / sA;
    const double xA = res.x_A;
    // At the fixed point x_A = G(v_A), so G'(v_A) = x_A (1 - x_A) for the
    // sigmoid; the slope condition m G'(v_A) < 1 is automatic when m < 4 and
    // carves the band ((1-s)/2, (1+s)/2), s = sqrt(1-4/m), out when m > 4.
    res.stable_allee_point = p.m * xA * (1.0 - xA) < 1.0 && xA > res.tau_A;
    res.case_label = p.m < 4.0 ? "m_lt_4" : (p.m == 4.0 ? "boundary" : "m_gt_4");
    return res;
}

}  // namespace alleemem

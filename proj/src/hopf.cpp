#include "alleemem/hopf.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace alleemem {

bool hopf_quadratic_roots(double lambda, double beta, double& p1, double& p2) {
    const double disc = beta * beta / 4.0 + 2.0 * beta / lambda;
    if (!std::isfinite(disc) || disc < 0.0) return false;
    const double s = std::sqrt(disc);
    p1 = beta / 2.0 - s;
    p2 = beta / 2.0 + s;
    return true;
}

std::vector<HopfVerdict> hopf_verdict(const ModelParams& p, const GainSpec& spec) {
    auto reports = solve_fixed_points(p, spec);
    if (reports.empty())
        throw std::runtime_error("hopf_verdict: no fixed points located");

    const double beta = p.k_unbounded() || p.m == 0.0
                            ? std::numeric_limits<double>::infinity()
                            : (p.u * p.K) * (p.u * p.K) / (2.0 * p.m);

    std::vector<HopfVerdict> out;
    out.reserve(reports.size());
    for (const auto& r : reports) {
        HopfVerdict v;
        v.branch = r.branch;
        v.x_star = r.point.x;
        v.y_star = r.point.y;
        v.beta = beta;
        v.hopf = false;

        if (r.branch == Branch::Allee || r.point.y == p.A) {
            // y* = A makes lambda vanish identically: no Hopf on this branch.
            v.lambda = 0.0;
            v.case_label = "y*=A impossible";
            out.push_back(v);
            continue;
        }

        v.lambda = 1.0 - p.A / r.point.y;  // A = 0 gives lambda = 1

        if (!std::isfinite(beta) || beta <= 0.0) {
            v.case_label = "discriminant-negative";
            out.push_back(v);
            continue;
        }
        double p1 = 0.0, p2 = 0.0;
        if (!hopf_quadratic_roots(v.lambda, beta, p1, p2)) {
            v.case_label = "discriminant-negative";
            out.push_back(v);
            continue;
        }
        v.p2 = p2;
        const double x_crit = std::sqrt(p2);
        if (p.A == 0.0) {
            // no allee effect, no cycle; y* > 0 = A so the tail label applies
            v.case_label = "y*>A tail";
            v.hopf = false;
        } else if (v.lambda < 0.0) {
            const double tau_A = p.u * p.K / std::sqrt(p.A);
            v.case_label = "y*<A window";
            v.hopf = tau_A < v.x_star && v.x_star < x_crit;
        } else {
            v.case_label = "y*>A tail";
            v.hopf = v.x_star > x_crit;
        }
        out.push_back(v);
    }
    return out;
}

namespace {

double sq(double v) { return v * v; }

// Bisect tr = 0 along the straight segment a -> b (tr has opposite signs at
// the endpoints) down to |tr| <= 1e-12 or a 1e-15-wide parameter bracket.
CrossingPoint bisect_edge(const ModelParams& p, const GainSpec& spec,
                          double ax, double ay, double bx, double by,
                          double tr_a) {
    double lo = 0.0, hi = 1.0, f_lo = tr_a;
    double t = 0.5;
    for (int it = 0; it < 200; ++it) {
        t = 0.5 * (lo + hi);
        NeuronState s{ax + (bx - ax) * t, ay + (by - ay) * t};
        const double f = trace_at(p, spec, s);
        if (std::abs(f) <= 1e-12) break;
        if ((f_lo < 0.0) != (f < 0.0)) {
            hi = t;
        } else {
            lo = t;
            f_lo = f;
        }
        if (hi - lo < 1e-15) break;
    }
    CrossingPoint cp;
    cp.x = ax + (bx - ax) * t;
    cp.y = ay + (by - ay) * t;
    NeuronState s{cp.x, cp.y};
    cp.tr = trace_at(p, spec, s);
    cp.det = det_at(p, spec, s);
    cp.re = cp.tr / 2.0;
    cp.im = cp.det > 0.0 ? std::sqrt(cp.det) : 0.0;
    return cp;
}

}  // namespace

CrossingCheck hopf_crossing_check_plane(const ModelParams& p, const GainSpec& spec,
                                        double x_min, double x_max,
                                        double y_min, double y_max,
                                        int nx, int ny, int max_points) {
    if (nx < 2 || ny < 2) throw std::invalid_argument("hopf_crossing_check_plane: nx, ny >= 2");
    if (!(y_min > 0.0)) throw std::invalid_argument("hopf_crossing_check_plane: y_min must be > 0");

    std::vector<double> tr(static_cast<size_t>(nx) * ny), det(static_cast<size_t>(nx) * ny);
    auto gx = [&](int i) { return x_min + (x_max - x_min) * i / (nx - 1); };
    auto gy = [&](int j) { return y_min + (y_max - y_min) * j / (ny - 1); };
    for (int i = 0; i < nx; ++i) {
        for (int j = 0; j < ny; ++j) {
            NeuronState s{gx(i), gy(j)};
            tr[static_cast<size_t>(i) * ny + j] = trace_at(p, spec, s);
            det[static_cast<size_t>(i) * ny + j] = det_at(p, spec, s);
        }
    }
    auto at = [&](const std::vector<double>& g, int i, int j) {
        return g[static_cast<size_t>(i) * ny + j];
    };

    CrossingCheck out;
    bool saw_unstable_crossing = false;  // trace flips but det <= 0 nearby
    for (int i = 0; i < nx && static_cast<int>(out.points.size()) < max_points; ++i) {
        for (int j = 0; j < ny && static_cast<int>(out.points.size()) < max_points; ++j) {
            const double t0 = at(tr, i, j), d0 = at(det, i, j);
            // horizontal edge (i,j)-(i+1,j), then vertical edge (i,j)-(i,j+1)
            for (int dir = 0; dir < 2; ++dir) {
                const int i2 = dir == 0 ? i + 1 : i;
                const int j2 = dir == 0 ? j : j + 1;
                if (i2 >= nx || j2 >= ny) continue;
                const double t1 = at(tr, i2, j2), d1 = at(det, i2, j2);
                if (!(t0 * t1 < 0.0)) continue;
                if (d0 > 0.0 && d1 > 0.0) {
                    out.points.push_back(
                        bisect_edge(p, spec, gx(i), gy(j), gx(i2), gy(j2), t0));
                    if (static_cast<int>(out.points.size()) >= max_points) break;
                } else {
                    saw_unstable_crossing = true;
                }
            }
        }
    }
    if (!out.points.empty()) {
        out.status = CrossingStatus::Confirmed;
    } else if (saw_unstable_crossing) {
        out.status = CrossingStatus::Refuted;
        out.diagnostic =
            "trace sign changes occur only where det <= 0: the eigenvalues there are a "
            "real +/- pair, not a complex-conjugate pair, so no Hopf crossing exists in "
            "the scanned window";
    } else {
        out.status = CrossingStatus::NoCrossing;
        std::ostringstream os;
        os << "no trace sign change with det > 0 found in [" << x_min << ", " << x_max
           << "] x [" << y_min << ", " << y_max << "] (" << nx << "x" << ny << " lattice)";
        out.diagnostic = os.str();
    }
    return out;
}

namespace {

// Trace at the first (smallest-x) interaction-branch fixed point for the
// given A, or NaN when that branch currently has no root.
double fp_trace(ModelParams p, const GainSpec& spec, double A,
                NeuronState* where = nullptr, double* det_out = nullptr) {
    p.A = A;
    auto reports = solve_fixed_points(p, spec);
    for (const auto& r : reports) {
        if (r.branch != Branch::Interaction) continue;
        if (where) *where = r.point;
        if (det_out) *det_out = r.jacobian[0] * r.jacobian[3] - r.jacobian[1] * r.jacobian[2];
        return r.jacobian[0] + r.jacobian[3];
    }
    return std::numeric_limits<double>::quiet_NaN();
}

}  // namespace

CrossingCheck hopf_crossing_check_fixed_point(const ModelParams& p, const GainSpec& spec,
                                              double A_lo, double A_hi) {
    if (!(A_hi > A_lo)) throw std::invalid_argument("hopf_crossing_check_fixed_point: A_hi > A_lo");
    constexpr int kSamples = 200;

    CrossingCheck out;
    double prev_A = A_lo;
    double prev_tr = fp_trace(p, spec, A_lo);
    for (int i = 1; i <= kSamples; ++i) {
        const double A = A_lo + (A_hi - A_lo) * i / kSamples;
        const double cur_tr = fp_trace(p, spec, A);
        const bool bracket = std::isfinite(prev_tr) && std::isfinite(cur_tr) &&
                             prev_tr * cur_tr < 0.0;
        if (bracket) {
            double lo = prev_A, hi = A, f_lo = prev_tr;
            double mid = 0.5 * (lo + hi);
            double f = fp_trace(p, spec, mid);
            for (int it = 0; it < 200; ++it) {
                if (!std::isfinite(f)) break;  // branch vanished inside the bracket
                if (std::abs(f) <= 1e-12 || hi - lo < 1e-15) break;
                if ((f_lo < 0.0) != (f < 0.0)) {
                    hi = mid;
                } else {
                    lo = mid;
                    f_lo = f;
                }
                mid = 0.5 * (lo + hi);
                f = fp_trace(p, spec, mid);
            }
            CrossingPoint cp;
            NeuronState s;
            double det = 0.0;
            cp.tr = fp_trace(p, spec, mid, &s, &det);
            cp.param = mid;
            cp.x = s.x;
            cp.y = s.y;
            cp.det = det;
            if (det > 0.0) {
                cp.re = cp.tr / 2.0;
                cp.im = std::sqrt(det);
                out.points.push_back(cp);
                out.status = CrossingStatus::Confirmed;
                return out;
            }
            cp.re = cp.tr / 2.0 + std::sqrt(sq(cp.tr) / 4.0 - det);
            cp.im = 0.0;
            out.points.push_back(cp);
            out.status = CrossingStatus::Refuted;
            std::ostringstream os;
            os << "tr = 0 at A = " << mid << " (x* = " << s.x << ", y* = " << s.y
               << ") but det = " << det
               << " < 0 there: the eigenvalues are a real +/- pair (saddle), so the "
                  "trace crossing is not a Hopf bifurcation";
            out.diagnostic = os.str();
            return out;
        }
        prev_A = A;
        prev_tr = cur_tr;
    }
    out.status = CrossingStatus::NoCrossing;
    std::ostringstream os;
    os << "trace at the tracked interaction fixed point does not change sign for A in ["
       << A_lo << ", " << A_hi << "]";
    out.diagnostic = os.str();
    return out;
}

}  // namespace alleemem

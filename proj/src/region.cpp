#include "alleemem/region.hpp"

#include <cmath>
#include <queue>
#include <stdexcept>

#include "alleemem/parallel.hpp"

namespace alleemem {

bool RegionScan::hopf_centroid(double& cx, double& cy) const {
    if (hopf_cells.empty()) return false;
    double sx = 0.0, sy = 0.0;
    for (const auto& [ix, iy] : hopf_cells) {
        sx += cell_x(ix);
        sy += cell_y(iy);
    }
    cx = sx / hopf_cells.size();
    cy = sy / hopf_cells.size();
    return true;
}

namespace {

std::int8_t sign_of(double v) {
    if (v > 0.0) return 1;
    if (v < 0.0) return -1;
    return 0;
}

}  // namespace

RegionScan scan_region(const ModelParams& p, const GainSpec& spec,
                       double x_min, double x_max, double y_min, double y_max,
                       int nx, int ny) {
    if (nx < 1 || ny < 1) throw std::invalid_argument("scan_region: nx, ny >= 1");
    if (!(y_min >= 0.0)) throw std::invalid_argument("scan_region: y_min must be >= 0");

    RegionScan r;
    r.x_min = x_min;
    r.x_max = x_max;
    r.y_min = y_min;
    r.y_max = y_max;
    r.nx = nx;
    r.ny = ny;

    const size_t n_cells = static_cast<size_t>(nx) * ny;
    std::vector<double> tr(n_cells), det(n_cells);
    parallel_for(static_cast<size_t>(nx), [&](size_t ix) {
        for (int iy = 0; iy < ny; ++iy) {
            NeuronState s{r.cell_x(static_cast<int>(ix)), r.cell_y(iy)};
            const size_t k = ix * ny + iy;
            tr[k] = trace_at(p, spec, s);
            det[k] = det_at(p, spec, s);
        }
    });

    r.det_sign.resize(n_cells);
    r.tr_sign.resize(n_cells);
    for (size_t k = 0; k < n_cells; ++k) {
        r.det_sign[k] = sign_of(det[k]);
        r.tr_sign[k] = sign_of(tr[k]);
    }

    auto idx = [&](int ix, int iy) { return static_cast<size_t>(ix) * ny + iy; };

    // Crossing edges: tr changes sign between two det > 0 cells.
    std::vector<char> band(n_cells, 0), comp_flag;
    std::vector<int> comp(n_cells, -1);
    int n_comp = 0;

    // Label det > 0 components (4-connectivity, BFS, row-major seed order).
    for (int ix = 0; ix < nx; ++ix) {
        for (int iy = 0; iy < ny; ++iy) {
            const size_t k0 = idx(ix, iy);
            if (r.det_sign[k0] <= 0 || comp[k0] >= 0) continue;
            const int label = n_comp++;
            std::queue<std::pair<int, int>> q;
            comp[k0] = label;
            q.push({ix, iy});
            while (!q.empty()) {
                auto [cx, cy] = q.front();
                q.pop();
                constexpr int dxs[4] = {1, -1, 0, 0};
                constexpr int dys[4] = {0, 0, 1, -1};
                for (int d = 0; d < 4; ++d) {
                    const int mx = cx + dxs[d], my = cy + dys[d];
                    if (mx < 0 || mx >= nx || my < 0 || my >= ny) continue;
                    const size_t km = idx(mx, my);
                    if (r.det_sign[km] <= 0 || comp[km] >= 0) continue;
                    comp[km] = label;
                    q.push({mx, my});
                }
            }
        }
    }
    comp_flag.assign(static_cast<size_t>(n_comp), 0);

    auto mark_band_edge = [&](int ax, int ay, int bx, int by) {
        const size_t ka = idx(ax, ay), kb = idx(bx, by);
        if (r.det_sign[ka] > 0 && r.det_sign[kb] > 0 && tr[ka] * tr[kb] < 0.0) {
            band[ka] = band[kb] = 1;
            comp_flag[static_cast<size_t>(comp[ka])] = 1;  // same component by construction
        }
    };
    for (int ix = 0; ix < nx; ++ix) {
        for (int iy = 0; iy < ny; ++iy) {
            if (ix + 1 < nx) mark_band_edge(ix, iy, ix + 1, iy);
            if (iy + 1 < ny) mark_band_edge(ix, iy, ix, iy + 1);
        }
    }

    // tb candidates: a tr sign change AND a det sign change among the cell's
    // 4-neighbor edges (sign changes taken on the raw values, no det gate).
    auto has_crossings = [&](int ix, int iy, bool& tr_x, bool& det_x) {
        const size_t k0 = idx(ix, iy);
        constexpr int dxs[4] = {1, -1, 0, 0};
        constexpr int dys[4] = {0, 0, 1, -1};
        tr_x = det_x = false;
        for (int d = 0; d < 4; ++d) {
            const int mx = ix + dxs[d], my = iy + dys[d];
            if (mx < 0 || mx >= nx || my < 0 || my >= ny) continue;
            const size_t km = idx(mx, my);
            if (tr[k0] * tr[km] < 0.0) tr_x = true;
            if (det[k0] * det[km] < 0.0) det_x = true;
        }
    };

    for (int ix = 0; ix < nx; ++ix) {
        for (int iy = 0; iy < ny; ++iy) {
            const size_t k = idx(ix, iy);
            if (band[k]) r.band_cells.emplace_back(ix, iy);
            if (comp[k] >= 0 && comp_flag[static_cast<size_t>(comp[k])] &&
                (r.tr_sign[k] >= 0 || band[k]))
                r.hopf_cells.emplace_back(ix, iy);
            bool tr_x = false, det_x = false;
            has_crossings(ix, iy, tr_x, det_x);
            if (tr_x && det_x) r.tb_cells.emplace_back(ix, iy);
        }
    }
    return r;
}

}  // namespace alleemem

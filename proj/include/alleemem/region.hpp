#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "alleemem/model.hpp"

namespace alleemem {

// Trace/determinant sign scan over an (x, y) lattice (cell-center sampling).
//
// band_cells: cells incident to a 4-neighbor edge where tr changes sign with
//             det > 0 on both sides (the literal tr = 0 crossing band).
// hopf_cells: the Hopf region proper — inside each det > 0 connected
//             component that contains a crossing edge, the cells with
//             tr >= 0 plus the crossing band itself.
// tb_cells:   Takens-Bogdanov candidates — cells whose 4-neighborhood has
//             both a tr sign change and a det sign change (candidate only;
//             nilpotence is not verified).
struct RegionScan {
    double x_min = 0, x_max = 0, y_min = 0, y_max = 0;
    int nx = 0, ny = 0;
    std::vector<std::int8_t> det_sign;  // nx*ny, row-major (ix*ny + iy), -1/0/+1
    std::vector<std::int8_t> tr_sign;
    std::vector<std::pair<int, int>> band_cells;
    std::vector<std::pair<int, int>> hopf_cells;
    std::vector<std::pair<int, int>> tb_cells;

    double cell_x(int ix) const { return x_min + (x_max - x_min) * (ix + 0.5) / nx; }
    double cell_y(int iy) const { return y_min + (y_max - y_min) * (iy + 0.5) / ny; }
    // Centroid of hopf_cells in (x, y); returns false when empty.
    bool hopf_centroid(double& cx, double& cy) const;
};

RegionScan scan_region(const ModelParams& p, const GainSpec& spec,
                       double x_min, double x_max, double y_min, double y_max,
                       int nx = 400, int ny = 400);

}  // namespace alleemem

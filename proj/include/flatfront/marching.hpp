// Marching squares over a rectangular node grid, in continuous index
// coordinates; non-finite node values mask out their cells.
#pragma once

#include <array>
#include <vector>

namespace flatfront {

struct GridField {
    int nx = 0;  // nodes per row
    int ny = 0;  // rows
    std::vector<double> values;  // row-major, values[j*nx + i]

    double at(int i, int j) const { return values[static_cast<std::size_t>(j) * nx + i]; }
};

using IndexPolyline = std::vector<std::array<double, 2>>;  // (i, j) coordinates

// Level-set polylines of the field at `level`, linear interpolation along
// cell edges, segments chained into polylines.
std::vector<IndexPolyline> marching_squares(const GridField& field, double level);

}  // namespace flatfront

#pragma once

#include <vector>

#include "hazardld/surface.hpp"

namespace hazardld {

struct contour_segment {
    double t0, y0, t1, y1;
};

/// Level set of the surface as straight segments, one cell at a time
/// (marching squares with linear edge interpolation, no smoothing).
/// Saddle cells are split by the cell-center average.
[[nodiscard]] std::vector<contour_segment> contour_segments(const rate_surface_grid& grid,
                                                            double level);

}  // namespace hazardld

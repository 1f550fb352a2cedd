#pragma once

#include <cstddef>
#include <vector>

#include "hazardld/distribution.hpp"

namespace hazardld {

/// Rate values over a (t, y) grid for a survival model: cell (i, j) holds
/// ch_rate(S(t_i), y_j), so the zero set of the surface is exactly the
/// cumulative hazard curve y = H(t). Row-major storage.
struct rate_surface_grid {
    std::vector<double> t_grid;
    std::vector<double> y_grid;
    std::vector<double> ch_curve;  // H(t_i)
    std::vector<double> values;    // values[i * y_grid.size() + j]

    [[nodiscard]] double at(std::size_t i, std::size_t j) const noexcept {
        return values[i * y_grid.size() + j];
    }
    [[nodiscard]] std::size_t rows() const noexcept { return t_grid.size(); }
    [[nodiscard]] std::size_t cols() const noexcept { return y_grid.size(); }
};

/// Evaluates the surface; rows are independent and run under OpenMP.
/// Rejects grid points where S(t) is 0 or 1 (the rate is degenerate there).
[[nodiscard]] rate_surface_grid make_rate_surface(const distribution& model,
                                                  std::vector<double> t_grid,
                                                  std::vector<double> y_grid);

/// Reference single-threaded evaluation; bit-identical to make_rate_surface.
[[nodiscard]] rate_surface_grid make_rate_surface_serial(const distribution& model,
                                                         std::vector<double> t_grid,
                                                         std::vector<double> y_grid);

}  // namespace hazardld

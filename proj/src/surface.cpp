#include "hazardld/surface.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include "hazardld/probability.hpp"
#include "hazardld/rate_functions.hpp"

namespace hazardld {

namespace {

void check_increasing(const std::vector<double>& grid, const char* name) {
    if (grid.empty())
        throw std::domain_error(std::string("rate_surface: ") + name + " grid must be nonempty");
    for (std::size_t i = 0; i + 1 < grid.size(); ++i)
        if (!(grid[i] < grid[i + 1]))
            throw std::domain_error(std::string("rate_surface: ") + name +
                                    " grid must be strictly increasing");
}

// Validates everything up front so the parallel loop below cannot throw.
struct surface_inputs {
    std::vector<double> tail_probs;
    std::vector<double> ch;
};

surface_inputs validate(const distribution& model, const std::vector<double>& t_grid,
                        const std::vector<double>& y_grid) {
    check_increasing(t_grid, "t");
    check_increasing(y_grid, "y");
    if (!(y_grid.front() >= 0.0))
        throw std::domain_error("rate_surface: y grid must be nonnegative");
    surface_inputs in;
    in.tail_probs.reserve(t_grid.size());
    in.ch.reserve(t_grid.size());
    for (double t : t_grid) {
        const double s = model.survival(t);
        if (!(s > 0.0 && s < 1.0))
            throw std::domain_error("rate_surface: survival must lie strictly inside (0,1) "
                                    "at every t grid point");
        in.tail_probs.push_back(s);
        in.ch.push_back(model.cumhaz(t));
    }
    return in;
}

}  // namespace

rate_surface_grid make_rate_surface(const distribution& model, std::vector<double> t_grid,
                                    std::vector<double> y_grid) {
    surface_inputs in = validate(model, t_grid, y_grid);
    rate_surface_grid g{std::move(t_grid), std::move(y_grid), std::move(in.ch), {}};
    const std::int64_t nt = static_cast<std::int64_t>(g.t_grid.size());
    const std::size_t ny = g.y_grid.size();
    g.values.resize(g.t_grid.size() * ny);
#pragma omp parallel for schedule(static) if (nt * static_cast<std::int64_t>(ny) >= 4096)
    for (std::int64_t i = 0; i < nt; ++i) {
        const probability p(in.tail_probs[static_cast<std::size_t>(i)]);
        double* row = g.values.data() + static_cast<std::size_t>(i) * ny;
        for (std::size_t j = 0; j < ny; ++j) row[j] = ch_rate(p, g.y_grid[j]);
    }
    return g;
}

rate_surface_grid make_rate_surface_serial(const distribution& model, std::vector<double> t_grid,
                                           std::vector<double> y_grid) {
    surface_inputs in = validate(model, t_grid, y_grid);
    rate_surface_grid g{std::move(t_grid), std::move(y_grid), std::move(in.ch), {}};
    const std::size_t nt = g.t_grid.size();
    const std::size_t ny = g.y_grid.size();
    g.values.resize(nt * ny);
    for (std::size_t i = 0; i < nt; ++i) {
        const probability p(in.tail_probs[i]);
        double* row = g.values.data() + i * ny;
        for (std::size_t j = 0; j < ny; ++j) row[j] = ch_rate(p, g.y_grid[j]);
    }
    return g;
}

}  // namespace hazardld

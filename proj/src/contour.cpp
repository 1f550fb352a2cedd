#include "hazardld/contour.hpp"

namespace hazardld {

namespace {
struct point {
    double t, y;
};
}  // namespace

std::vector<contour_segment> contour_segments(const rate_surface_grid& g, double level) {
    std::vector<contour_segment> out;
    const std::size_t nt = g.rows();
    const std::size_t ny = g.cols();
    if (nt < 2 || ny < 2) return out;
    auto lerp = [level](double pa, double pb, double va, double vb) {
        return pa + (level - va) / (vb - va) * (pb - pa);
    };
    for (std::size_t i = 0; i + 1 < nt; ++i) {
        const double t0 = g.t_grid[i];
        const double t1 = g.t_grid[i + 1];
        for (std::size_t j = 0; j + 1 < ny; ++j) {
            const double y0 = g.y_grid[j];
            const double y1 = g.y_grid[j + 1];
            const double v00 = g.at(i, j);
            const double v10 = g.at(i + 1, j);
            const double v11 = g.at(i + 1, j + 1);
            const double v01 = g.at(i, j + 1);
            const unsigned code = (v00 > level ? 1u : 0u) | (v10 > level ? 2u : 0u) |
                                  (v11 > level ? 4u : 0u) | (v01 > level ? 8u : 0u);
            if (code == 0u || code == 15u) continue;
            // Crossing points, evaluated only on edges the case table uses.
            auto bottom = [&] { return point{lerp(t0, t1, v00, v10), y0}; };
            auto top = [&] { return point{lerp(t0, t1, v01, v11), y1}; };
            auto left = [&] { return point{t0, lerp(y0, y1, v00, v01)}; };
            auto right = [&] { return point{t1, lerp(y0, y1, v10, v11)}; };
            auto emit = [&out](point a, point b) { out.push_back({a.t, a.y, b.t, b.y}); };
            switch (code) {
                case 1: emit(left(), bottom()); break;
                case 2: emit(bottom(), right()); break;
                case 3: emit(left(), right()); break;
                case 4: emit(right(), top()); break;
                case 6: emit(bottom(), top()); break;
                case 7: emit(left(), top()); break;
                case 8: emit(top(), left()); break;
                case 9: emit(bottom(), top()); break;
                case 11: emit(right(), top()); break;
                case 12: emit(left(), right()); break;
                case 13: emit(bottom(), right()); break;
                case 14: emit(left(), bottom()); break;
                case 5: {  // saddle: c0 and c2 above
                    if (0.25 * (v00 + v10 + v11 + v01) > level) {
                        emit(left(), top());
                        emit(bottom(), right());
                    } else {
                        emit(left(), bottom());
                        emit(right(), top());
                    }
                    break;
                }
                case 10: {  // saddle: c1 and c3 above
                    if (0.25 * (v00 + v10 + v11 + v01) > level) {
                        emit(left(), bottom());
                        emit(right(), top());
                    } else {
                        emit(left(), top());
                        emit(bottom(), right());
                    }
                    break;
                }
                default: break;
            }
        }
    }
    return out;
}

}  // namespace hazardld

#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "hazardld/contour.hpp"
#include "hazardld/probability.hpp"
#include "hazardld/rate_functions.hpp"
#include "hazardld/surface.hpp"

using namespace hazardld;

namespace {

std::vector<double> linspace_step(double lo, double step, int count) {
    std::vector<double> g;
    for (int i = 0; i < count; ++i) g.push_back(lo + step * i);
    return g;
}

}  // namespace

TEST_CASE("surface values agree with ch_rate and vanish on the hazard curve") {
    const auto model = distribution::exponential(0.5);
    const auto t_grid = linspace_step(0.5, 0.5, 16);   // 0.5 .. 8
    const auto y_grid = linspace_step(0.0, 0.25, 17);  // 0 .. 4
    const auto g = make_rate_surface(model, t_grid, y_grid);
    REQUIRE(g.rows() == 16);
    REQUIRE(g.cols() == 17);

    // t = 2 is row 3; y = 1, 2, 0 are columns 4, 8, 0
    CHECK(g.t_grid[3] == 2.0);
    CHECK(g.at(3, 4) <= 1e-15);
    CHECK(g.at(3, 8) == doctest::Approx(0.13553104507415220).epsilon(1e-14));
    CHECK(g.at(3, 0) == doctest::Approx(1.0).epsilon(1e-14));

    for (std::size_t i = 0; i < g.rows(); ++i) {
        CHECK(g.ch_curve[i] == 0.5 * g.t_grid[i]);
        for (std::size_t j = 0; j < g.cols(); ++j) {
            CHECK(g.at(i, j) >= 0.0);
            CHECK(g.at(i, j) ==
                  ch_rate(probability(model.survival(g.t_grid[i])), g.y_grid[j]));
        }
        // the zero contour is the cumulative hazard curve
        CHECK(ch_rate(probability(model.survival(g.t_grid[i])), g.ch_curve[i]) <= 1e-12);
    }
}

TEST_CASE("surfaces of different models align where survival matches") {
    // exponential rate 1/2 at t and weibull(2, 2) at sqrt(2 t) share S(t)
    const auto a = make_rate_surface(distribution::exponential(0.5), {0.5, 2.0},
                                     linspace_step(0.0, 0.125, 33));
    const auto b = make_rate_surface(distribution::weibull(2.0, 2.0), {1.0, 2.0},
                                     linspace_step(0.0, 0.125, 33));
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 33; ++j)
            CHECK(std::abs(a.at(i, j) - b.at(i, j)) <= 1e-12);
}

TEST_CASE("degenerate survival on the grid is rejected") {
    const auto d = distribution::empirical_step({1.0, 2.0});
    CHECK_NOTHROW(make_rate_surface(d, {1.5}, {0.0, 1.0}));
    CHECK_THROWS_AS(make_rate_surface(d, {0.5}, {0.0, 1.0}), std::domain_error);  // S = 1
    CHECK_THROWS_AS(make_rate_surface(d, {3.0}, {0.0, 1.0}), std::domain_error);  // S = 0
    CHECK_THROWS_AS(make_rate_surface(d, {}, {0.0, 1.0}), std::domain_error);
    CHECK_THROWS_AS(make_rate_surface(d, {1.5, 1.5}, {0.0, 1.0}), std::domain_error);
    CHECK_THROWS_AS(make_rate_surface(d, {1.5}, {1.0, 0.5}), std::domain_error);
    CHECK_THROWS_AS(make_rate_surface(d, {1.5}, {-1.0, 1.0}), std::domain_error);
}

TEST_CASE("parallel and serial surface evaluation agree bit for bit") {
    const auto model = distribution::weibull(1.5, 2.5);
    const auto t_grid = linspace_step(0.1, 0.1, 100);
    const auto y_grid = linspace_step(0.0, 0.1, 50);
    const auto a = make_rate_surface(model, t_grid, y_grid);
    const auto b = make_rate_surface_serial(model, t_grid, y_grid);
    CHECK(a.values == b.values);
    CHECK(a.ch_curve == b.ch_curve);
}

TEST_CASE("marching squares finds a straight crossing") {
    rate_surface_grid g;
    g.t_grid = {0.0, 1.0};
    g.y_grid = {0.0, 1.0};
    g.ch_curve = {0.0, 0.0};
    g.values = {0.0, 0.0, 1.0, 1.0};  // rises along t
    const auto segs = contour_segments(g, 0.5);
    REQUIRE(segs.size() == 1);
    CHECK(segs[0].t0 == doctest::Approx(0.5));
    CHECK(segs[0].t1 == doctest::Approx(0.5));
    CHECK(((segs[0].y0 == 0.0 && segs[0].y1 == 1.0) ||
           (segs[0].y0 == 1.0 && segs[0].y1 == 0.0)));
}

TEST_CASE("marching squares circles a bump") {
    rate_surface_grid g;
    const int n = 21;
    for (int i = 0; i < n; ++i) g.t_grid.push_back(i / 20.0);
    for (int j = 0; j < n; ++j) g.y_grid.push_back(j / 20.0);
    g.ch_curve.assign(n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double dt = g.t_grid[i] - 0.5;
            const double dy = g.y_grid[j] - 0.5;
            g.values.push_back(dt * dt + dy * dy);
        }
    const auto segs = contour_segments(g, 0.04);  // circle of radius 0.2
    CHECK(segs.size() >= 8);
    for (const auto& s : segs) {
        const double r0 = std::hypot(s.t0 - 0.5, s.y0 - 0.5);
        const double r1 = std::hypot(s.t1 - 0.5, s.y1 - 0.5);
        CHECK(r0 == doctest::Approx(0.2).epsilon(0.1));
        CHECK(r1 == doctest::Approx(0.2).epsilon(0.1));
    }
    CHECK(contour_segments(g, 10.0).empty());   // above the range
    CHECK(contour_segments(g, -1.0).empty());   // below the range
}

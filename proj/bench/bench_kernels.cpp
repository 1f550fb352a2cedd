// Times the OpenMP kernels against their serial references and verifies the
// outputs match bit for bit. Pass --quick for small sizes (used as a smoke
// test).

#include <chrono>
#include <cstdio>
#include <cstring>
#include <optional>
#include <string>
#include <vector>

#include "hazardld/distribution.hpp"
#include "hazardld/exact_law.hpp"
#include "hazardld/surface.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace hazardld;

namespace {

template <class F>
double time_seconds(F&& f) {
    const auto start = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void report(const char* name, double serial, double parallel, bool identical) {
    std::printf("%-28s serial %8.3f ms   parallel %8.3f ms   speedup %5.2fx   %s\n", name,
                serial * 1e3, parallel * 1e3, serial / parallel,
                identical ? "bit-identical" : "OUTPUTS DIFFER");
}

std::vector<double> linspace(double lo, double step, int count) {
    std::vector<double> g;
    g.reserve(count);
    for (int i = 0; i < count; ++i) g.push_back(lo + step * i);
    return g;
}

}  // namespace

int main(int argc, char** argv) {
    const bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
#ifdef _OPENMP
    std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
    std::printf("openmp: not enabled\n");
#endif

    {
        const std::int64_t n = quick ? 100000 : 1000000;
        const probability p(0.37);
        // warm the shared table so both timings measure only the atom fill
        [[maybe_unused]] const auto table =
            detail::log_factorial_table(static_cast<std::size_t>(n));
        std::optional<ch_law> a, b;
        const double ts = time_seconds([&] { a = make_ch_law_serial(n, p); });
        const double tp = time_seconds([&] { b = make_ch_law(n, p); });
        report("law atoms", ts, tp, a->values == b->values && a->log_probs == b->log_probs);
    }
    {
        const int nt = quick ? 60 : 600;
        const int ny = quick ? 60 : 600;
        const auto model = distribution::exponential(0.5);
        const auto t_grid = linspace(0.1, 8.0 / nt, nt);
        const auto y_grid = linspace(0.0, 5.0 / ny, ny);
        rate_surface_grid a, b;
        const double ts = time_seconds([&] { a = make_rate_surface_serial(model, t_grid, y_grid); });
        const double tp = time_seconds([&] { b = make_rate_surface(model, t_grid, y_grid); });
        report("rate surface", ts, tp, a.values == b.values);
    }
    {
        const std::int64_t trials = quick ? 4000 : 200000;
        const auto model = distribution::exponential(0.5);
        const auto event = deviation_event::at_least(1.5);
        double a = 0.0, b = 0.0;
        const double ts = time_seconds(
            [&] { a = monte_carlo_event_freq_serial(model, 2.0, 100, event, trials, 11); });
        const double tp = time_seconds(
            [&] { b = monte_carlo_event_freq(model, 2.0, 100, event, trials, 11); });
        report("monte carlo trials", ts, tp, a == b);
    }
    return 0;
}

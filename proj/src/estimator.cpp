#include "hazardld/estimator.hpp"

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include "hazardld/rng.hpp"

namespace hazardld {

threshold_summary summarize(const sample_batch& batch, double threshold) {
    if (!(threshold > 0.0))
        throw std::domain_error("summarize: threshold must be positive");
    if (batch.values.empty())
        throw std::domain_error("summarize: batch must be nonempty");
    std::int64_t successes = 0;
    for (double v : batch.values)
        if (v > threshold) ++successes;
    return {threshold, static_cast<std::int64_t>(batch.values.size()), successes};
}

sample_batch sample(const distribution& model, std::int64_t n, std::uint64_t seed) {
    if (n < 1)
        throw std::domain_error("sample: n must be at least 1");
    sample_batch batch;
    batch.seed = seed;
    batch.values.resize(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i)
        batch.values[static_cast<std::size_t>(i)] =
            model.quantile(rng::uniform01(seed, static_cast<std::uint64_t>(i)));
    return batch;
}

namespace {

std::string strip(std::string line) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n' || line.back() == ' ' ||
                             line.back() == '\t'))
        line.pop_back();
    std::size_t start = 0;
    while (start < line.size() && (line[start] == ' ' || line[start] == '\t')) ++start;
    return line.substr(start);
}

}  // namespace

sample_batch read_waiting_times(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error(path + ": cannot open file");
    std::string line;
    std::size_t line_no = 0;
    if (!std::getline(in, line))
        throw std::runtime_error(path + ":1: empty file, expected header \"waiting_time\"");
    ++line_no;
    if (strip(line) != "waiting_time")
        throw std::runtime_error(path + ":1: expected header \"waiting_time\"");
    sample_batch batch;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string cell = strip(line);
        if (cell.empty()) continue;
        errno = 0;
        char* end = nullptr;
        const double v = std::strtod(cell.c_str(), &end);
        if (end != cell.c_str() + cell.size() || errno == ERANGE)
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": not a decimal value: \"" + cell + "\"");
        if (!(v > 0.0) || std::isinf(v))
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": waiting time must be positive and finite");
        batch.values.push_back(v);
    }
    if (batch.values.empty())
        throw std::runtime_error(path + ": no data rows");
    return batch;
}

}  // namespace hazardld

#include "hazardld/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hazardld/extended_real.hpp"

namespace hazardld {

distribution::distribution(family_kind kind, double a, double b, std::vector<double> values)
    : kind_(kind), a_(a), b_(b), values_(std::move(values)) {}

distribution distribution::exponential(double rate) {
    if (!(rate > 0.0))
        throw std::domain_error("exponential: rate must be positive");
    return {family_kind::exponential, rate, 0.0, {}};
}

distribution distribution::weibull(double shape, double scale) {
    if (!(shape > 0.0) || !(scale > 0.0))
        throw std::domain_error("weibull: shape and scale must be positive");
    return {family_kind::weibull, shape, scale, {}};
}

distribution distribution::empirical_step(std::vector<double> values) {
    if (values.empty())
        throw std::domain_error("empirical_step: sample must be nonempty");
    for (double v : values)
        if (!(v > 0.0) || std::isinf(v))
            throw std::domain_error("empirical_step: sample values must be positive and finite");
    std::sort(values.begin(), values.end());
    return {family_kind::empirical_step, 0.0, 0.0, std::move(values)};
}

double distribution::cumhaz(double t) const {
    if (!(t >= 0.0))
        throw std::domain_error("cumhaz: t must be nonnegative");
    switch (kind_) {
        case family_kind::exponential:
            return a_ * t;
        case family_kind::weibull:
            return std::pow(t / b_, a_);
        case family_kind::empirical_step: {
            const auto greater =
                values_.end() - std::upper_bound(values_.begin(), values_.end(), t);
            const double h = -log_extended(static_cast<double>(greater) /
                                           static_cast<double>(values_.size()));
            return h == 0.0 ? 0.0 : h;  // normalize -0
        }
    }
    return 0.0;  // unreachable
}

double distribution::survival(double t) const {
    if (kind_ == family_kind::empirical_step) {
        if (!(t >= 0.0))
            throw std::domain_error("survival: t must be nonnegative");
        const auto greater = values_.end() - std::upper_bound(values_.begin(), values_.end(), t);
        return static_cast<double>(greater) / static_cast<double>(values_.size());
    }
    return std::exp(-cumhaz(t));
}

double distribution::cdf(double t) const {
    if (kind_ == family_kind::empirical_step) {
        if (!(t >= 0.0))
            throw std::domain_error("cdf: t must be nonnegative");
        const auto le = std::upper_bound(values_.begin(), values_.end(), t) - values_.begin();
        return static_cast<double>(le) / static_cast<double>(values_.size());
    }
    return -std::expm1(-cumhaz(t));
}

double distribution::quantile(double u) const {
    if (!(u > 0.0 && u < 1.0))
        throw std::domain_error("quantile: u must lie strictly inside (0,1)");
    switch (kind_) {
        case family_kind::exponential:
            return -std::log1p(-u) / a_;
        case family_kind::weibull:
            return b_ * std::pow(-std::log1p(-u), 1.0 / a_);
        case family_kind::empirical_step: {
            const auto n = static_cast<double>(values_.size());
            auto idx = static_cast<std::size_t>(std::ceil(u * n));
            if (idx < 1) idx = 1;
            if (idx > values_.size()) idx = values_.size();
            return values_[idx - 1];
        }
    }
    return 0.0;  // unreachable
}

std::string distribution::describe() const {
    switch (kind_) {
        case family_kind::exponential:
            return "exponential(rate=" + std::to_string(a_) + ")";
        case family_kind::weibull:
            return "weibull(shape=" + std::to_string(a_) + ", scale=" + std::to_string(b_) + ")";
        case family_kind::empirical_step:
            return "empirical_step(n=" + std::to_string(values_.size()) + ")";
    }
    return {};
}

}  // namespace hazardld

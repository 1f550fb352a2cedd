#pragma once

#include <stdexcept>

namespace hazardld {

// Tail probability strictly inside (0,1). The boundary cases p = 0 and p = 1
// are degenerate for every rate function here, so construction rejects them;
// operations taking a probability never re-validate.
class probability {
  public:
    explicit probability(double value) : value_(value) {
        if (!(value > 0.0 && value < 1.0))
            throw std::domain_error("probability must lie strictly inside (0,1)");
    }

    [[nodiscard]] double value() const noexcept { return value_; }

  private:
    double value_;
};

}  // namespace hazardld

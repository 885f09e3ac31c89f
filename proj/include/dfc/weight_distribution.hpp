#pragma once

#include <vector>

#include "dfc/bigint.hpp"
#include "dfc/errors.hpp"

namespace dfc {

// Exact weight distribution A_0..A_v of a q-ary [v, kappa] linear code.
struct WeightDistribution {
    int q = 2;
    int length = 0;  // v
    int dim = 0;     // kappa
    std::vector<Int> counts;  // size length + 1

    WeightDistribution() = default;
    WeightDistribution(int q, int length, int dim)
        : q(q), length(length), dim(dim), counts(static_cast<size_t>(length) + 1, 0) {}

    // A_0 = 1 and sum A_i = q^kappa; throws InconsistentInput otherwise.
    void validate() const;

    // smallest i > 0 with A_i != 0, or -1 when none (zero code)
    int min_nonzero_weight() const;
    std::vector<int> nonzero_weights() const;  // excludes weight 0

    bool operator==(const WeightDistribution&) const = default;
};

}  // namespace dfc

#pragma once

#include <vector>

#include "dfc/bigint.hpp"
#include "dfc/weight_distribution.hpp"

namespace dfc {

// Outcome of the sufficient-condition check.  holds == false means the
// theorem is silent for this (pair, t), never that no design exists.
struct AMReport {
    int q = 0;
    int v = 0;
    int t = 0;
    int d = 0;        // primal minimum distance
    int d_perp = 0;   // dual minimum distance
    int s = 0;        // nonzero dual weights in (0, v-t]
    int w = 0;        // nonbinary cutoff for the primal code (= v when q = 2)
    int w_perp = 0;   // same for the dual
    bool holds = false;  // s <= d - t
    std::vector<int> primal_design_weights;
    std::vector<int> dual_design_weights;
};

// Largest w <= v with w - floor((w+q-2)/(q-1)) < d; equals v when q = 2.
int nonbinary_cutoff(int v, int q, int d);

// Checks s <= d - t for the (primal, dual) pair and lists the weights
// whose supports are certified to hold t-designs.  The pair must be
// MacWilliams-consistent; that is validated up front.
AMReport am_check(const WeightDistribution& primal, const WeightDistribution& dual, int t);

struct DivisibilityResult {
    bool ok = true;
    int failing_i = -1;  // first i in [0, t] where the condition fails
};

// Necessary condition for a t-(v,k,lambda) design:
// C(k-i, t-i) divides lambda * C(v-i, t-i) for all 0 <= i <= t.
DivisibilityResult divisibility_check(int t, int v, int k, const Int& lambda);

}  // namespace dfc

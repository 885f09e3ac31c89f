#include "doctest.h"

#include "dfc/am.hpp"
#include "dfc/enumerate.hpp"
#include "dfc/linear_code.hpp"
#include "dfc/spectra.hpp"

using namespace dfc;

TEST_CASE("nonbinary_cutoff") {
    CHECK(nonbinary_cutoff(31, 2, 5) == 31);
    CHECK(nonbinary_cutoff(13, 3, 3) == 5);
    CHECK(nonbinary_cutoff(27, 3, 5) == 9);

    // oracle: direct scan restated
    for (int v : {13, 27}) {
        for (int d : {3, 5}) {
            int best = 0;
            for (int w = 1; w <= v; ++w)
                if (w - (w + 1) / 2 < d) best = w;
            CHECK(nonbinary_cutoff(v, 3, d) == best);
        }
    }
}

TEST_CASE("am_check on the RM(2,4) pair") {
    WeightDistribution primal = weight_distribution_bruteforce(reed_muller(2, 4));
    WeightDistribution dualwd = weight_distribution_bruteforce(reed_muller(1, 4));
    AMReport r = am_check(primal, dualwd, 3);
    CHECK(r.holds);
    CHECK(r.d == 4);
    CHECK(r.s == 1);  // only weight 8 lies in (0, 13]
    CHECK(r.s == r.d - r.t);
    // all even weights 4..12 with A_i != 0, plus 16
    CHECK(r.primal_design_weights == std::vector<int>{4, 6, 8, 10, 12, 16});
    CHECK(r.dual_design_weights == std::vector<int>{8, 16});
}

TEST_CASE("am_check on the Gold m=5 pair") {
    WeightDistribution primal = eval_closed_form({FormulaTag::GOLDLIKE_PRIMAL, 5});
    WeightDistribution dualwd = eval_closed_form({FormulaTag::TABLE1_DUAL, 5});

    AMReport r2 = am_check(primal, dualwd, 2);
    CHECK(r2.holds);
    CHECK(r2.d == 5);
    CHECK(r2.s == 3);
    CHECK(r2.dual_design_weights == std::vector<int>{12, 16, 20});

    AMReport r3 = am_check(primal, dualwd, 3);
    CHECK_FALSE(r3.holds);
    CHECK(r3.s == 3);
    CHECK(r3.primal_design_weights.empty());
    CHECK(r3.dual_design_weights.empty());

    CHECK_THROWS_AS(am_check(primal, dualwd, 5), StrengthTooLarge);

    WeightDistribution wrong = dualwd;
    wrong.counts[12] += 31;
    wrong.counts[16] -= 31;
    CHECK_THROWS_AS(am_check(primal, wrong, 2), InconsistentPair);
}

TEST_CASE("am_check nonbinary cutoffs on the ternary extended pair") {
    WeightDistribution primal = eval_closed_form({FormulaTag::TERNARY_EXTENDED, 3});
    WeightDistribution dualwd = eval_closed_form({FormulaTag::TABLE3_EXT_DUAL, 3});
    AMReport r = am_check(primal, dualwd, 2);
    CHECK(r.holds);
    CHECK(r.d == 5);
    CHECK(r.s == 3);  // weight 27 exceeds v - t = 25
    CHECK(r.w == 9);  // cutoff for d = 5 at q = 3
    // dual designs limited to min(v-t, w_perp)
    CHECK(r.w_perp == nonbinary_cutoff(27, 3, 15));
    for (int w : r.primal_design_weights) CHECK(w <= 9);
}

TEST_CASE("am_check recomputation across t") {
    // recompute s over the larger range for smaller t: s' >= s, and holds
    // must be re-derived from s', never shortcut through monotonicity
    WeightDistribution primal = eval_closed_form({FormulaTag::GOLDLIKE_EXTENDED, 5});
    WeightDistribution dualwd = macwilliams_transform(primal);
    int prev_s = -1;
    for (int t = 3; t >= 1; --t) {
        AMReport r = am_check(primal, dualwd, t);
        if (prev_s >= 0) CHECK(r.s >= prev_s);
        prev_s = r.s;
        CHECK(r.holds == (r.s <= r.d - t));
    }
}

TEST_CASE("divisibility_check") {
    CHECK(divisibility_check(2, 13, 4, 1).ok);   // S(2,4,13) admissible
    CHECK(divisibility_check(2, 15, 3, 1).ok);
    auto bad = divisibility_check(2, 8, 4, 1);
    CHECK_FALSE(bad.ok);
    CHECK(bad.failing_i == 0);  // C(4,2) = 6 does not divide C(8,2) = 28
    CHECK_THROWS_AS(divisibility_check(3, 4, 5, 1), DomainError);
}

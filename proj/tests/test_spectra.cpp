#include "doctest.h"

#include <random>

#include "dfc/enumerate.hpp"
#include "dfc/linear_code.hpp"
#include "dfc/spectra.hpp"

using namespace dfc;

TEST_CASE("macwilliams transform examples") {
    // RM(1,5) -> RM(3,5)
    WeightDistribution rm15(2, 32, 6);
    rm15.counts[0] = 1;
    rm15.counts[16] = 62;
    rm15.counts[32] = 1;
    WeightDistribution rm35 = macwilliams_transform(rm15);
    CHECK(rm35.dim == 26);
    CHECK(rm35 == eval_closed_form({FormulaTag::RM_DUAL, 5}));

    // zero code of length v -> full space
    WeightDistribution zero(3, 6, 0);
    zero.counts[0] = 1;
    WeightDistribution full = macwilliams_transform(zero);
    for (int k = 0; k <= 6; ++k)
        CHECK(full.counts[static_cast<size_t>(k)] ==
              binom(6, static_cast<uint64_t>(k)) * int_pow(2, static_cast<uint64_t>(k)));

    // [7,3] simplex -> [7,4] Hamming
    WeightDistribution simplex(2, 7, 3);
    simplex.counts[0] = 1;
    simplex.counts[4] = 7;
    WeightDistribution ham = macwilliams_transform(simplex);
    CHECK(ham.counts[3] == 7);
    CHECK(ham.counts[4] == 7);
    CHECK(ham.counts[7] == 1);
    CHECK(ham == weight_distribution_bruteforce(cyclic_code(2, 7, Poly(2, {1, 1, 0, 1}))));

    // inconsistent input rejected
    WeightDistribution bad(2, 7, 3);
    bad.counts[0] = 1;
    bad.counts[4] = 6;
    CHECK_THROWS_AS(macwilliams_transform(bad), InconsistentInput);
}

TEST_CASE("macwilliams involution and two-route agreement") {
    std::vector<WeightDistribution> corpus;
    corpus.push_back(weight_distribution_bruteforce(reed_muller(2, 4)));
    corpus.push_back(weight_distribution_bruteforce(hamming_like_code(3, 3)));
    corpus.push_back(eval_closed_form({FormulaTag::TABLE1_DUAL, 5}));
    corpus.push_back(eval_closed_form({FormulaTag::TABLE2_DUAL, 3}));
    corpus.push_back(eval_closed_form({FormulaTag::TABLE3_EXT_DUAL, 3}));
    corpus.push_back(eval_closed_form({FormulaTag::GOLDLIKE_PRIMAL, 5}));
    corpus.push_back(eval_closed_form({FormulaTag::TERNARY_EXTENDED, 3}));
    for (const auto& wd : corpus) {
        WeightDistribution t = macwilliams_transform(wd);
        CHECK(t == macwilliams_transform_naive(wd));
        CHECK(macwilliams_transform(t) == wd);
    }
}

TEST_CASE("closed forms: frozen values") {
    // RM_DUAL m=4: full nonzero profile
    WeightDistribution rm = eval_closed_form({FormulaTag::RM_DUAL, 4});
    CHECK(rm.counts[4] == 140);
    CHECK(rm.counts[6] == 448);
    CHECK(rm.counts[8] == 870);
    CHECK(rm.counts[10] == 448);
    CHECK(rm.counts[12] == 140);
    CHECK(rm.counts[16] == 1);
    CHECK(rm.counts[2] == 0);

    // GOLDLIKE_PRIMAL m=5
    WeightDistribution g = eval_closed_form({FormulaTag::GOLDLIKE_PRIMAL, 5});
    CHECK(g.counts[5] == 186);
    CHECK(g.counts[6] == 806);
    CHECK(g.counts[7] == 2635);
    CHECK(g.counts[8] == 7905);
    // the A_5 closed form (4*2^{3m-5} - 22*2^{2m-4} + 26*2^{m-3} - 2)/15
    for (int m : {5, 7, 9}) {
        WeightDistribution gm = eval_closed_form({FormulaTag::GOLDLIKE_PRIMAL, m});
        Int a5 = (4 * int_pow(2, 3 * static_cast<uint64_t>(m) - 5) - 22 * int_pow(2, 2 * static_cast<uint64_t>(m) - 4) +
                  26 * int_pow(2, static_cast<uint64_t>(m) - 3) - 2) /
                 15;
        CHECK(gm.counts[5] == a5);
        CHECK(gm.counts[1] == 0);
        CHECK(gm.counts[2] == 0);
        CHECK(gm.counts[3] == 0);
        CHECK(gm.counts[4] == 0);
    }

    // TABLE1_DUAL m=5
    WeightDistribution t1 = eval_closed_form({FormulaTag::TABLE1_DUAL, 5});
    CHECK(t1.counts[12] == 310);
    CHECK(t1.counts[16] == 527);
    CHECK(t1.counts[20] == 186);

    // HAMMING(3,3) and HAMMING(2,4)
    CHECK(eval_closed_form({FormulaTag::HAMMING, 3, 3}).counts[3] == 104);
    WeightDistribution h24 = eval_closed_form({FormulaTag::HAMMING, 4, 2});
    CHECK(h24.counts[3] == 35);
    CHECK(h24.counts[4] == 105);
    CHECK(h24.counts[5] == 168);
    CHECK(h24.counts[6] == 280);
    CHECK(h24.counts[7] == 435);

    // TERNARY_EXTENDED m=3
    WeightDistribution te = eval_closed_form({FormulaTag::TERNARY_EXTENDED, 3});
    CHECK(te.counts[5] == 1404);
    CHECK(te.counts[6] == 10062);
    CHECK(te.counts[7] == 48438);

    // PROJECTIVE_TERNARY_PRIMAL m=3 full profile
    WeightDistribution pr = eval_closed_form({FormulaTag::PROJECTIVE_TERNARY_PRIMAL, 3});
    CHECK(pr.counts[4] == 26);
    CHECK(pr.counts[6] == 156);
    CHECK(pr.counts[7] == 624);
    CHECK(pr.counts[9] == 494);
    CHECK(pr.counts[10] == 780);
    CHECK(pr.counts[12] == 78);
    CHECK(pr.counts[13] == 28);

    // GOLDLIKE_EXTENDED m=5
    WeightDistribution ge = eval_closed_form({FormulaTag::GOLDLIKE_EXTENDED, 5});
    CHECK(ge.counts[6] == 992);
    CHECK(ge.counts[8] == 10540);
    CHECK(ge.counts[10] == 60512);
}

TEST_CASE("closed forms: domain enforcement") {
    CHECK_THROWS_AS(eval_closed_form({FormulaTag::TABLE1_DUAL, 4}), OutOfDomain);   // even m
    CHECK_THROWS_AS(eval_closed_form({FormulaTag::TABLE1_DUAL, 3}), OutOfDomain);   // m < 5
    CHECK_THROWS_AS(eval_closed_form({FormulaTag::GOLDLIKE_PRIMAL, 6}), OutOfDomain);
    CHECK_THROWS_AS(eval_closed_form({FormulaTag::TERNARY_EXTENDED, 4}), OutOfDomain);
    CHECK_THROWS_AS(eval_closed_form({FormulaTag::TABLE_GG2_DUAL, 2}), OutOfDomain);
    CHECK_THROWS_AS(eval_closed_form({FormulaTag::RM_DUAL, 2}), OutOfDomain);
    CHECK_THROWS_AS(eval_closed_form({FormulaTag::HAMMING, 3, 6}), OutOfDomain);  // q = 6
}

TEST_CASE("closed forms equal brute force on constructible instances") {
    CHECK(eval_closed_form({FormulaTag::RM_DUAL, 3}) == weight_distribution_bruteforce(reed_muller(1, 3)));
    CHECK(eval_closed_form({FormulaTag::RM_DUAL, 4}) == weight_distribution_bruteforce(reed_muller(2, 4)));
    CHECK(eval_closed_form({FormulaTag::HAMMING, 3, 2}) == weight_distribution_bruteforce(hamming_like_code(2, 3)));
    CHECK(eval_closed_form({FormulaTag::HAMMING, 4, 2}) == weight_distribution_bruteforce(hamming_like_code(2, 4)));
    CHECK(eval_closed_form({FormulaTag::HAMMING, 3, 3}) == weight_distribution_bruteforce(hamming_like_code(3, 3)));
    // [31,26]: 2^26 codewords
    CHECK(eval_closed_form({FormulaTag::HAMMING, 5, 2}) ==
          weight_distribution_bruteforce(hamming_like_code(2, 5), EnumerationConfig(1ull << 26)));
}

TEST_CASE("table forms: q^kappa totals up to m = 25") {
    for (int m = 5; m <= 25; m += 2) {
        SparseSpectrum t1 = eval_table_form(FormulaTag::TABLE1_DUAL, m);
        CHECK(t1.total_with_zero() == int_pow(2, 2 * static_cast<uint64_t>(m)));
    }
    for (int m = 3; m <= 25; m += 2) {
        CHECK(eval_table_form(FormulaTag::TABLE2_DUAL, m).total_with_zero() ==
              int_pow(3, 2 * static_cast<uint64_t>(m)));
        CHECK(eval_table_form(FormulaTag::TABLE3_EXT_DUAL, m).total_with_zero() ==
              int_pow(3, 2 * static_cast<uint64_t>(m) + 1));
        CHECK(eval_table_form(FormulaTag::TABLE_GG2_DUAL, m).total_with_zero() ==
              int_pow(3, 2 * static_cast<uint64_t>(m)));
    }
}

TEST_CASE("convolution forms: q^kappa totals at larger m") {
    // eval_closed_form verifies the total internally; reaching here means it held
    for (int m : {7, 9}) {
        eval_closed_form({FormulaTag::GOLDLIKE_PRIMAL, m});
        eval_closed_form({FormulaTag::GOLDLIKE_EXTENDED, m});
    }
    eval_closed_form({FormulaTag::TERNARY_EXTENDED, 5});
    eval_closed_form({FormulaTag::PROJECTIVE_TERNARY_PRIMAL, 5});
    for (int m : {6, 8, 10}) eval_closed_form({FormulaTag::RM_DUAL, m});
    eval_closed_form({FormulaTag::HAMMING, 6, 2});
    eval_closed_form({FormulaTag::HAMMING, 5, 3});
    eval_closed_form({FormulaTag::HAMMING, 3, 5});
    eval_closed_form({FormulaTag::HAMMING, 2, 7});
}

TEST_CASE("weight_enumerator_string") {
    WeightDistribution zero(2, 5, 0);
    zero.counts[0] = 1;
    CHECK(weight_enumerator_string(zero) == "1");

    CHECK(weight_enumerator_string(eval_closed_form({FormulaTag::TABLE3_EXT_DUAL, 3})) ==
          "1 + 702z^15 + 780z^18 + 702z^21 + 2z^27");
}

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dfc/weight_distribution.hpp"

namespace dfc {

// Dual weight distribution via the MacWilliams identity,
//   A'(z) = q^-kappa (1+(q-1)z)^v A((1-z)/(1+(q-1)z)),
// computed by Krawtchouk coefficient accumulation:
//   A'_k = q^-kappa sum_i A_i K_k(i),
//   K_k(i) = sum_j (-1)^j (q-1)^{k-j} C(i,j) C(v-i,k-j).
// Every output count is verified integral and nonnegative.
WeightDistribution macwilliams_transform(const WeightDistribution& wd);

// Same identity by direct polynomial substitution: expand
// sum_i A_i (1-z)^i (1+(q-1)z)^{v-i} and divide by q^kappa.  Slower;
// kept as an independent second route for cross-checking the transform.
WeightDistribution macwilliams_transform_naive(const WeightDistribution& wd);

// Sparse "1 + 30z^8 + z^16" rendering, ascending exponents.
std::string weight_enumerator_string(const WeightDistribution& wd);

// ---------------------------------------------------------------------------
// catalog of closed-form weight distributions
// ---------------------------------------------------------------------------

enum class FormulaTag {
    RM_DUAL,                    // RM(m-2, m), binary, m >= 3
    HAMMING,                    // C_(q,m), length (q^m-1)/(q-1), m >= 2
    TABLE1_DUAL,                // binary two-zero dual, three weights, odd m >= 5
    GOLDLIKE_PRIMAL,            // [2^m-1, 2^m-1-2m, 5], odd m >= 5
    GOLDLIKE_EXTENDED,          // [2^m, 2^m-1-2m, 6], odd m >= 5
    TABLE2_DUAL,                // ternary planar dual, three weights, odd m >= 3
    TABLE3_EXT_DUAL,            // extended ternary planar dual, odd m >= 3
    TERNARY_EXTENDED,           // [3^m, 3^m-1-2m, 5], odd m >= 3
    TABLE_GG2_DUAL,             // ternary projective dual, odd m >= 3
    PROJECTIVE_TERNARY_PRIMAL,  // [(3^m-1)/2, (3^m-1)/2-2m, 4], odd m >= 3
};

struct SpectrumFormulaId {
    FormulaTag id;
    int m = 0;
    int q = 0;  // HAMMING only
};

// Exact big-integer evaluation as a dense distribution; every division
// asserts exact divisibility and the result must sum to q^kappa.  The
// convolution-style formulas are capped at lengths where O(v^2) exact
// arithmetic stays reasonable; beyond that OutOfDomain is thrown.
WeightDistribution eval_closed_form(const SpectrumFormulaId& f);

// The few-weight table spectra without materializing a dense vector, so
// the q^kappa consistency of the infinite families can be checked far
// beyond enumeration range (m up to 25 and more).  Entries are
// (weight, count) pairs excluding weight 0; kappa is the stated dual
// dimension.
struct SparseSpectrum {
    int q = 0;
    uint64_t length = 0;
    int dim = 0;
    std::vector<std::pair<uint64_t, Int>> entries;

    Int total_with_zero() const;
};

// Valid for TABLE1_DUAL, TABLE2_DUAL, TABLE3_EXT_DUAL, TABLE_GG2_DUAL.
SparseSpectrum eval_table_form(FormulaTag tag, int m);

std::string formula_tag_name(FormulaTag t);

}  // namespace dfc

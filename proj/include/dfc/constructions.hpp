#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dfc/enumerate.hpp"
#include "dfc/linear_code.hpp"

namespace dfc {

// Power-function exponent families over GF(2^m) (the APN list) and
// GF(3^m) (the planar list).
enum class ExponentFamily {
    GOLD,         // s = 2^h + 1, gcd(h, m) = 1
    KASAMI,       // s = 2^{2h} - 2^h + 1
    WELCH,        // s = 2^{(m-1)/2} + 3
    NIHO_1MOD4,   // s = 2^{(m-1)/2} + 2^{(m-1)/4} - 1, m = 1 mod 4
    NIHO_3MOD4,   // s = 2^{(m-1)/2} + 2^{(3m-1)/4} - 1, m = 3 mod 4
    PLANAR_3H1,   // s = 3^h + 1, h >= 0
    PLANAR_HALF,  // s = (3^h + 1)/2, gcd(m, h) = 1
    RAW,          // explicit exponent
};

struct ExponentSpec {
    ExponentFamily family = ExponentFamily::RAW;
    int m = 0;
    int h = 0;         // family parameter where applicable
    uint64_t raw = 0;  // RAW only
};

// The exponent value s, after validating the family constraints.
uint64_t exponent_value(const ExponentSpec& spec);

struct DifferentialProfile {
    uint64_t max_solutions = 0;  // max over a != 0, b of |{x : f(x+a)-f(x) = b}|
};

// Exhaustive differential count of f(x) = x^s on GF(p^m).
DifferentialProfile differential_profile(int p, int m, uint64_t s);

// f(x) = x^s on GF(2^m): differential max exactly 2
bool is_apn(uint64_t s, int m);
// f(x) = x^s on GF(3^m): differential max exactly 1
bool is_planar(uint64_t s, int m);

// Cyclic [2^m-1, 2^m-1-2m] code with generator M_1 M_s over GF(2).
// Rejected when s falls in the 2-cyclotomic coset of 1 (the generator
// would square a factor).
LinearCode binary_two_zero_code(int m, uint64_t s);

// Cyclic [3^m-1, 3^m-1-2m] code with generator M_{n-1} M_{n-s} over
// GF(3), n = 3^m-1.
LinearCode ternary_planar_code(int m, uint64_t s);

// Projective ternary cyclic codes of length v = (3^m-1)/2 on beta = alpha^2.
// BCH-style: g = (x^v - 1) / ((x-1) lcm(M_1 ... M_{delta-1})) with
// delta = 3^{m-1} - 1 - (3^{(m+1)/2} - 1)/2.
LinearCode projective_ternary_bch(int m);
// Two-zero: g = M_{n-1} M_{n-2} with the index convention n = v.
LinearCode projective_ternary_two_zero(int m);

// ---------------------------------------------------------------------------
// conjecture harness: treats the projective-code conjectures as
// experiments and reports evidence, never asserting expected outcomes
// ---------------------------------------------------------------------------

struct HarnessRow {
    std::string construction;  // "bch" or "two-zero"
    int conjecture = 0;        // 1 = all primal weights, 2 = weight-4 Steiner, 3 = dual weights
    int weight = 0;
    int t = 2;
    std::string status;        // "PASS", "FAIL", "SKIPPED", "TRIVIAL"
    std::optional<Int> lambda;
    uint64_t block_count = 0;
    std::string note;
};

struct HarnessReport {
    int m = 0;
    std::vector<std::string> notes;  // assumptions, e.g. the n = v index convention
    std::vector<HarnessRow> rows;
};

HarnessReport conjecture_harness(int m, const EnumerationConfig& cfg = {});

}  // namespace dfc

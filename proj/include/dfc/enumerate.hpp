#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dfc/linear_code.hpp"
#include "dfc/weight_distribution.hpp"

namespace dfc {

// DFC_BUDGET environment variable overrides the 2^26 default.
uint64_t default_enumeration_budget();

struct EnumerationConfig {
    uint64_t budget;
    int workers;  // 0 = one per hardware thread

    EnumerationConfig() : budget(default_enumeration_budget()), workers(0) {}
    EnumerationConfig(uint64_t b, int w = 0) : budget(b), workers(w) {}
};

// Exact weight distribution by enumerating all q^k codewords (Gray-order
// traversal, one row addition per codeword).  Throws BudgetExceeded when
// q^k exceeds the budget; enumerate the dual and MacWilliams-transform it
// instead.
WeightDistribution weight_distribution_bruteforce(const LinearCode& c, const EnumerationConfig& cfg = {});

// Smallest nonzero weight; nullopt for the zero code.
std::optional<int> minimum_distance(const LinearCode& c, const EnumerationConfig& cfg = {});

// All codewords of exact weight w, ordered lexicographically by
// information vector.
std::vector<std::vector<uint8_t>> codewords_of_weight(const LinearCode& c, int w, const EnumerationConfig& cfg = {});

// Distinct supports of the codewords of one weight.  For q = 2 the number
// of supports equals A_w; for q > 2 scalar multiples collapse, and
// codeword_count keeps the honest total so callers can notice when
// |supports| * (q-1) != A_w.
struct SupportSet {
    int weight = 0;
    uint64_t codeword_count = 0;
    std::vector<std::vector<int>> supports;
};

SupportSet supports_of_weight(const LinearCode& c, int w, const EnumerationConfig& cfg = {});

// One enumeration pass shared by several weights.
std::vector<SupportSet> supports_of_weights(const LinearCode& c, const std::vector<int>& weights,
                                            const EnumerationConfig& cfg = {});

}  // namespace dfc

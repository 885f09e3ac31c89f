#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dfc/bigint.hpp"
#include "dfc/errors.hpp"

namespace dfc {

using Block = std::vector<int>;  // sorted, distinct points in [0, v)

struct Design {
    int v = 0;
    int k = 0;
    int t = 0;
    Int lambda = 0;
    std::vector<Block> blocks;  // sorted lexicographically, duplicate-free
};

// Build after verification; enforces v > k > t >= 1 and the counting
// identity b C(k,t) = lambda C(v,t).
Design make_design(int v, int k, int t, const Int& lambda, std::vector<Block> blocks);

struct DesignWitness {
    Block low, high;          // two t-subsets with different coverage
    uint64_t count_low = 0;
    uint64_t count_high = 0;
};

struct VerifyResult {
    std::optional<Int> lambda;          // set iff the blocks form a t-design
    std::optional<DesignWitness> witness;  // set otherwise
};

// Exhaustive coverage count: one counter per t-subset (colex rank),
// incremented by every block's C(k,t) internal t-subsets.
VerifyResult verify_t_design(int v, const std::vector<Block>& blocks, int t);

// lambda = b C(k,t) / C(v,t); NonIntegralLambda when the division fails.
Int lambda_from_block_count(int v, int k, int t, const Int& b);

bool is_steiner(const Design& d);

struct DifferenceFamilyReport {
    int v = 0;
    int k = 0;
    uint64_t block_count = 0;
    std::vector<uint64_t> histogram;  // index 1..v-1: multiplicity of each difference
    std::optional<uint64_t> delta;    // set iff the histogram is constant
};

// Multiset of within-block differences x - y (x != y) in Z_v.
DifferenceFamilyReport difference_multiset(int v, const std::vector<Block>& blocks);

// delta = v lambda C(v-2, t-2) / C(k-2, t-2) for t >= 2.
Int design_family_delta(int t, int v, int k, const Int& lambda);

// plain-text block list: one block per line, space-separated points
std::string blocks_to_text(const std::vector<Block>& blocks);
std::vector<Block> blocks_from_text(const std::string& text);

}  // namespace dfc

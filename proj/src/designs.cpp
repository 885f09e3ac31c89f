#include "dfc/designs.hpp"

#include <algorithm>
#include <sstream>

namespace dfc {

namespace {

// binomial table up to C(n, t): small, t <= 4 in practice
uint64_t binom_u64(int n, int k) {
    if (k < 0 || k > n) return 0;
    uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<uint64_t>(n - k + i) / static_cast<uint64_t>(i);
    return r;
}

// colex rank of a sorted t-subset: sum C(x_i, i+1)
uint64_t colex_rank(const Block& s) {
    uint64_t r = 0;
    for (size_t i = 0; i < s.size(); ++i) r += binom_u64(s[i], static_cast<int>(i) + 1);
    return r;
}

Block colex_unrank(uint64_t rank, int t, int v) {
    Block s(static_cast<size_t>(t));
    int hi = v;
    for (int i = t; i >= 1; --i) {
        int x = hi - 1;
        while (x >= i - 1 && binom_u64(x, i) > rank) --x;
        s[static_cast<size_t>(i) - 1] = x;
        rank -= binom_u64(x, i);
        hi = x;
    }
    return s;
}

void check_block(const Block& b, int v, int k) {
    if (static_cast<int>(b.size()) != k) throw MixedBlockSizes("blocks of different sizes");
    for (size_t i = 0; i < b.size(); ++i) {
        if (b[i] < 0 || b[i] >= v) throw DomainError("block point out of range");
        if (i > 0 && b[i] <= b[i - 1]) throw DomainError("block not sorted / has repeats");
    }
}

// enumerate all t-subsets of a block, applying fn to each subset's rank
template <typename Fn>
void for_each_t_subset(const Block& b, int t, Fn&& fn) {
    const int k = static_cast<int>(b.size());
    std::vector<int> idx(static_cast<size_t>(t));
    for (int i = 0; i < t; ++i) idx[static_cast<size_t>(i)] = i;
    Block sub(static_cast<size_t>(t));
    while (true) {
        uint64_t r = 0;
        for (int i = 0; i < t; ++i) r += binom_u64(b[static_cast<size_t>(idx[static_cast<size_t>(i)])], i + 1);
        fn(r);
        int i = t - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == k - t + i) --i;
        if (i < 0) break;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < t; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j) - 1] + 1;
    }
}

}  // namespace

VerifyResult verify_t_design(int v, const std::vector<Block>& blocks, int t) {
    if (blocks.empty()) throw DomainError("no blocks");
    const int k = static_cast<int>(blocks[0].size());
    if (t < 1) throw DomainError("t must be >= 1");
    if (t >= k) throw StrengthNotBelowBlockSize("need t < block size");
    for (const Block& b : blocks) check_block(b, v, k);
    {
        std::vector<Block> sorted = blocks;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw DuplicateBlocks("repeated block (only simple designs are considered)");
    }

    const uint64_t nsubsets = binom_u64(v, t);
    std::vector<uint64_t> counter(nsubsets, 0);
    for (const Block& b : blocks)
        for_each_t_subset(b, t, [&](uint64_t r) { ++counter[r]; });

    uint64_t lo = counter[0], hi = counter[0];
    size_t lo_at = 0, hi_at = 0;
    for (size_t r = 1; r < counter.size(); ++r) {
        if (counter[r] < lo) {
            lo = counter[r];
            lo_at = r;
        }
        if (counter[r] > hi) {
            hi = counter[r];
            hi_at = r;
        }
    }
    VerifyResult res;
    if (lo == hi) {
        res.lambda = Int(static_cast<unsigned long>(lo));
        return res;
    }
    DesignWitness w;
    w.low = colex_unrank(static_cast<uint64_t>(lo_at), t, v);
    w.high = colex_unrank(static_cast<uint64_t>(hi_at), t, v);
    w.count_low = lo;
    w.count_high = hi;
    res.witness = w;
    return res;
}

Design make_design(int v, int k, int t, const Int& lambda, std::vector<Block> blocks) {
    if (!(v > k && k > t && t >= 1)) throw DomainError("need v > k > t >= 1");
    for (const Block& b : blocks) check_block(b, v, k);
    std::sort(blocks.begin(), blocks.end());
    if (std::adjacent_find(blocks.begin(), blocks.end()) != blocks.end())
        throw DuplicateBlocks("repeated block");
    Int lhs = Int(static_cast<unsigned long>(blocks.size())) *
              binom(static_cast<uint64_t>(k), static_cast<uint64_t>(t));
    Int rhs = lambda * binom(static_cast<uint64_t>(v), static_cast<uint64_t>(t));
    if (lhs != rhs) throw ConsistencyError("b C(k,t) != lambda C(v,t)");
    Design d;
    d.v = v;
    d.k = k;
    d.t = t;
    d.lambda = lambda;
    d.blocks = std::move(blocks);
    return d;
}

Int lambda_from_block_count(int v, int k, int t, const Int& b) {
    Int num = b * binom(static_cast<uint64_t>(k), static_cast<uint64_t>(t));
    Int den = binom(static_cast<uint64_t>(v), static_cast<uint64_t>(t));
    Int out;
    if (!divexact(out, num, den))
        throw NonIntegralLambda("b C(k,t) / C(v,t) is not an integer: the blocks cannot form a t-design");
    return out;
}

bool is_steiner(const Design& d) { return d.t >= 2 && d.lambda == 1; }

DifferenceFamilyReport difference_multiset(int v, const std::vector<Block>& blocks) {
    if (v < 2) throw DomainError("need v >= 2");
    DifferenceFamilyReport r;
    r.v = v;
    r.k = blocks.empty() ? 0 : static_cast<int>(blocks[0].size());
    r.block_count = blocks.size();
    r.histogram.assign(static_cast<size_t>(v), 0);  // index 0 unused
    for (const Block& b : blocks) {
        check_block(b, v, r.k);
        for (int x : b)
            for (int y : b) {
                if (x == y) continue;
                int d = x - y;
                if (d < 0) d += v;
                ++r.histogram[static_cast<size_t>(d)];
            }
    }
    bool constant = true;
    for (int d = 2; d < v; ++d)
        if (r.histogram[static_cast<size_t>(d)] != r.histogram[1]) constant = false;
    if (constant && v >= 2) r.delta = r.histogram[1];
    return r;
}

Int design_family_delta(int t, int v, int k, const Int& lambda) {
    if (t < 2) throw StrengthBelowTwo("difference-family delta needs t >= 2");
    Int num = Int(v) * lambda * binom(static_cast<uint64_t>(v - 2), static_cast<uint64_t>(t - 2));
    Int den = binom(static_cast<uint64_t>(k - 2), static_cast<uint64_t>(t - 2));
    Int out;
    if (!divexact(out, num, den)) throw NonIntegralDelta("delta formula is not integral");
    return out;
}

std::string blocks_to_text(const std::vector<Block>& blocks) {
    std::ostringstream os;
    for (const Block& b : blocks) {
        for (size_t i = 0; i < b.size(); ++i) {
            if (i) os << ' ';
            os << b[i];
        }
        os << '\n';
    }
    return os.str();
}

std::vector<Block> blocks_from_text(const std::string& text) {
    std::vector<Block> blocks;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        Block b;
        int x;
        while (ls >> x) b.push_back(x);
        if (!b.empty()) blocks.push_back(std::move(b));
    }
    return blocks;
}

}  // namespace dfc

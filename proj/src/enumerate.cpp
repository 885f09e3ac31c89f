#include "dfc/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <cstring>
#include <mutex>
#include <numeric>
#include <thread>

namespace dfc {

uint64_t default_enumeration_budget() {
    if (const char* env = std::getenv("DFC_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v >= 1024) return static_cast<uint64_t>(v);
    }
    return 1ull << 26;
}

namespace {

// q^k, or nullopt if it overflows 2^63
std::optional<uint64_t> pow_checked(int q, int k) {
    uint64_t r = 1;
    for (int i = 0; i < k; ++i) {
        if (r > (1ull << 62) / static_cast<uint64_t>(q)) return std::nullopt;
        r *= static_cast<uint64_t>(q);
    }
    return r;
}

// ---------------------------------------------------------------------------
// packed codeword representations
// ---------------------------------------------------------------------------

template <int W>
struct BinWord {
    uint64_t w[W];
    static constexpr int support_words = W;
    void add_in(const BinWord& r) {
        for (int i = 0; i < W; ++i) w[i] ^= r.w[i];
    }
    int weight() const {
        int s = 0;
        for (int i = 0; i < W; ++i) s += __builtin_popcountll(w[i]);
        return s;
    }
    void store_support(uint64_t* out) const {
        for (int i = 0; i < W; ++i) out[i] = w[i];
    }
    static BinWord zero(int length, int /*q*/) {
        (void)length;
        BinWord b;
        std::memset(b.w, 0, sizeof(b.w));
        return b;
    }
    static BinWord from_row(const std::vector<uint8_t>& row, int q) {
        BinWord b = zero(static_cast<int>(row.size()), q);
        for (size_t j = 0; j < row.size(); ++j)
            if (row[j]) b.w[j >> 6] |= 1ull << (j & 63);
        return b;
    }
    static BinWord negated(const BinWord& b) { return b; }
};

// Two bitplanes: digit x in {0,1,2} stored as (hi,lo), 1 = 01, 2 = 10.
// Carry-free addition mod 3:
//   s0 = (a0 & ~(b0|b1)) | (b0 & ~(a0|a1)) | (a1 & b1)
//   s1 = (a1 & ~(b0|b1)) | (b1 & ~(a0|a1)) | (a0 & b0)
// and the Hamming weight is popcount(lo | hi).
template <int W>
struct TernWord {
    uint64_t lo[W], hi[W];
    static constexpr int support_words = W;
    void add_in(const TernWord& r) {
        for (int i = 0; i < W; ++i) {
            const uint64_t a0 = lo[i], a1 = hi[i], b0 = r.lo[i], b1 = r.hi[i];
            const uint64_t na = ~(a0 | a1), nb = ~(b0 | b1);
            lo[i] = (a0 & nb) | (b0 & na) | (a1 & b1);
            hi[i] = (a1 & nb) | (b1 & na) | (a0 & b0);
        }
    }
    int weight() const {
        int s = 0;
        for (int i = 0; i < W; ++i) s += __builtin_popcountll(lo[i] | hi[i]);
        return s;
    }
    void store_support(uint64_t* out) const {
        for (int i = 0; i < W; ++i) out[i] = lo[i] | hi[i];
    }
    static TernWord zero(int /*length*/, int /*q*/) {
        TernWord t;
        std::memset(t.lo, 0, sizeof(t.lo));
        std::memset(t.hi, 0, sizeof(t.hi));
        return t;
    }
    static TernWord from_row(const std::vector<uint8_t>& row, int q) {
        TernWord t = zero(static_cast<int>(row.size()), q);
        for (size_t j = 0; j < row.size(); ++j) {
            if (row[j] == 1) t.lo[j >> 6] |= 1ull << (j & 63);
            if (row[j] == 2) t.hi[j >> 6] |= 1ull << (j & 63);
        }
        return t;
    }
    static TernWord negated(const TernWord& b) {
        TernWord t;
        for (int i = 0; i < W; ++i) {
            t.lo[i] = b.hi[i];  // -1 = 2, -2 = 1
            t.hi[i] = b.lo[i];
        }
        return t;
    }
};

// fallback for any prime q: one byte per coordinate
struct ByteWord {
    std::vector<uint8_t> v;
    int q = 2;
    static constexpr int support_words = 0;  // dynamic
    void add_in(const ByteWord& r) {
        for (size_t i = 0; i < v.size(); ++i) {
            int s = v[i] + r.v[i];
            v[i] = static_cast<uint8_t>(s >= q ? s - q : s);
        }
    }
    int weight() const {
        int s = 0;
        for (uint8_t x : v) s += (x != 0);
        return s;
    }
    void store_support(uint64_t* out) const {
        const size_t nw = (v.size() + 63) / 64;
        for (size_t i = 0; i < nw; ++i) out[i] = 0;
        for (size_t j = 0; j < v.size(); ++j)
            if (v[j]) out[j >> 6] |= 1ull << (j & 63);
    }
    static ByteWord zero(int length, int q) {
        ByteWord b;
        b.q = q;
        b.v.assign(static_cast<size_t>(length), 0);
        return b;
    }
    static ByteWord from_row(const std::vector<uint8_t>& row, int q) {
        ByteWord b;
        b.q = q;
        b.v = row;
        return b;
    }
    static ByteWord negated(const ByteWord& b) {
        ByteWord t;
        t.q = b.q;
        t.v.resize(b.v.size());
        for (size_t i = 0; i < b.v.size(); ++i) t.v[i] = static_cast<uint8_t>((b.q - b.v[i]) % b.q);
        return t;
    }
};

// ---------------------------------------------------------------------------
// chunked Gray-order traversal
// ---------------------------------------------------------------------------

// per wanted weight: either support masks (stride words each) or message keys
struct Bucket {
    int weight = 0;
    std::vector<uint64_t> words;  // flat, stride per item
    std::vector<uint64_t> keys;
};

struct EnumResult {
    std::vector<uint64_t> hist;
    std::vector<Bucket> buckets;
    int stride = 1;
};

// Loopless reflected mixed-radix Gray traversal: exactly one +/- digit
// step, hence one packed row addition, per codeword.  Visits q^n words
// including the start word.
template <typename Rep, typename Visit>
void traverse(const std::vector<Rep>& add_rows, const std::vector<Rep>& sub_rows,
              const std::vector<uint64_t>& places, int q, Rep word, uint64_t key, Visit&& visit) {
    const int n = static_cast<int>(add_rows.size());
    visit(word, key);
    if (n == 0) return;
    std::vector<int> a(static_cast<size_t>(n), 0), o(static_cast<size_t>(n), 1);
    std::vector<int> f(static_cast<size_t>(n) + 1);
    std::iota(f.begin(), f.end(), 0);
    while (true) {
        const int j = f[0];
        f[0] = 0;
        if (j == n) break;
        if (o[j] > 0) {
            word.add_in(add_rows[static_cast<size_t>(j)]);
            key += places[static_cast<size_t>(j)];
            if (++a[static_cast<size_t>(j)] == q - 1) {
                o[static_cast<size_t>(j)] = -1;
                f[static_cast<size_t>(j)] = f[static_cast<size_t>(j) + 1];
                f[static_cast<size_t>(j) + 1] = j + 1;
            }
        } else {
            word.add_in(sub_rows[static_cast<size_t>(j)]);
            key -= places[static_cast<size_t>(j)];
            if (--a[static_cast<size_t>(j)] == 0) {
                o[static_cast<size_t>(j)] = 1;
                f[static_cast<size_t>(j)] = f[static_cast<size_t>(j) + 1];
                f[static_cast<size_t>(j) + 1] = j + 1;
            }
        }
        visit(word, key);
    }
}

// binary: flip row ctz(i) of a Gray counter
template <typename Rep, typename Visit>
void traverse_binary(const std::vector<Rep>& rows, const std::vector<uint64_t>& places, Rep word,
                     uint64_t key, Visit&& visit) {
    const int n = static_cast<int>(rows.size());
    visit(word, key);
    if (n == 0) return;
    const uint64_t total = 1ull << n;
    for (uint64_t i = 1; i < total; ++i) {
        const int j = __builtin_ctzll(i);
        word.add_in(rows[static_cast<size_t>(j)]);
        key ^= places[static_cast<size_t>(j)];
        visit(word, key);
    }
}

template <typename Rep>
EnumResult run_enumeration(const LinearCode& c, const EnumerationConfig& cfg,
                           const std::vector<int>& wanted, bool with_keys) {
    const int k = c.dim;
    const int q = c.q;
    const int stride = (c.length + 63) / 64;

    std::vector<Rep> rows;
    rows.reserve(static_cast<size_t>(k));
    for (const auto& r : c.basis) rows.push_back(Rep::from_row(r, q));
    std::vector<Rep> nrows;
    nrows.reserve(static_cast<size_t>(k));
    for (const auto& r : rows) nrows.push_back(Rep::negated(r));

    // message digit i carries place value q^(k-1-i), so sorting keys sorts
    // information vectors lexicographically
    std::vector<uint64_t> places(static_cast<size_t>(std::max(k, 1)), 1);
    for (int i = k - 2; i >= 0; --i)
        places[static_cast<size_t>(i)] = places[static_cast<size_t>(i) + 1] * static_cast<uint64_t>(q);

    std::vector<uint8_t> want_lut(static_cast<size_t>(c.length) + 1, 0);
    for (size_t wi = 0; wi < wanted.size(); ++wi)
        want_lut[static_cast<size_t>(wanted[wi])] = static_cast<uint8_t>(wi + 1);
    const bool collecting = !wanted.empty();

    int workers = cfg.workers > 0 ? cfg.workers : static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;

    // prefix digits split the space into chunks; suffix rows are walked in
    // Gray order within each chunk
    int prefix = 0;
    uint64_t nchunks = 1;
    if (workers > 1 && k > 12) {
        while (prefix < k && nchunks < static_cast<uint64_t>(4 * workers) &&
               nchunks * static_cast<uint64_t>(q) <= 1024) {
            nchunks *= static_cast<uint64_t>(q);
            ++prefix;
        }
    }
    const int nsuffix = k - prefix;

    std::vector<EnumResult> partial(static_cast<size_t>(workers));
    std::atomic<uint64_t> next_chunk{0};

    auto body = [&](int tid) {
        EnumResult& out = partial[static_cast<size_t>(tid)];
        out.hist.assign(static_cast<size_t>(c.length) + 1, 0);
        out.buckets.resize(wanted.size());
        for (size_t wi = 0; wi < wanted.size(); ++wi) out.buckets[wi].weight = wanted[wi];
        uint64_t* hist = out.hist.data();

        auto visit = [&](const Rep& word, uint64_t key) {
            const int w = word.weight();
            ++hist[w];
            if (collecting) {
                const uint8_t slot = want_lut[static_cast<size_t>(w)];
                if (slot) {
                    Bucket& b = out.buckets[static_cast<size_t>(slot) - 1];
                    if (with_keys) {
                        b.keys.push_back(key);
                    } else {
                        const size_t at = b.words.size();
                        b.words.resize(at + static_cast<size_t>(stride));
                        word.store_support(b.words.data() + at);
                    }
                }
            }
        };

        const std::vector<Rep> srows(rows.begin(), rows.begin() + nsuffix);
        const std::vector<Rep> snrows(nrows.begin(), nrows.begin() + nsuffix);
        const std::vector<uint64_t> splaces(places.begin(), places.begin() + std::max(nsuffix, 0));

        for (uint64_t cid = next_chunk.fetch_add(1); cid < nchunks; cid = next_chunk.fetch_add(1)) {
            Rep word = Rep::zero(c.length, q);
            uint64_t key = 0;
            uint64_t t = cid;
            for (int i = 0; i < prefix; ++i) {
                const int digit = static_cast<int>(t % static_cast<uint64_t>(q));
                t /= static_cast<uint64_t>(q);
                const int row = nsuffix + i;
                for (int rep = 0; rep < digit; ++rep) word.add_in(rows[static_cast<size_t>(row)]);
                key += static_cast<uint64_t>(digit) * places[static_cast<size_t>(row)];
            }
            if (q == 2)
                traverse_binary(srows, splaces, word, key, visit);
            else
                traverse(srows, snrows, splaces, q, word, key, visit);
        }
    };

    if (workers == 1) {
        body(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(workers));
        for (int t = 0; t < workers; ++t) pool.emplace_back(body, t);
        for (auto& th : pool) th.join();
    }

    // deterministic merge: histograms add; bucket contents get sorted by
    // the callers, so concatenation order does not matter
    EnumResult merged;
    merged.stride = stride;
    merged.hist.assign(static_cast<size_t>(c.length) + 1, 0);
    merged.buckets.resize(wanted.size());
    for (size_t wi = 0; wi < wanted.size(); ++wi) merged.buckets[wi].weight = wanted[wi];
    for (auto& part : partial) {
        if (part.hist.empty()) continue;
        for (size_t i = 0; i < merged.hist.size(); ++i) merged.hist[i] += part.hist[i];
        for (size_t wi = 0; wi < wanted.size(); ++wi) {
            auto& dst = merged.buckets[wi];
            auto& src = part.buckets[wi];
            dst.words.insert(dst.words.end(), src.words.begin(), src.words.end());
            dst.keys.insert(dst.keys.end(), src.keys.begin(), src.keys.end());
            src.words.clear();
            src.words.shrink_to_fit();
            src.keys.clear();
        }
    }
    return merged;
}

EnumResult dispatch(const LinearCode& c, const EnumerationConfig& cfg, const std::vector<int>& wanted,
                    bool with_keys) {
    auto total = pow_checked(c.q, c.dim);
    if (!total || *total > cfg.budget)
        throw BudgetExceeded("q^k = " + std::to_string(c.q) + "^" + std::to_string(c.dim) +
                             " exceeds the enumeration budget of " + std::to_string(cfg.budget) +
                             "; enumerate the dual (dimension " + std::to_string(c.length - c.dim) +
                             ") and apply the MacWilliams transform instead");
    const int words = (c.length + 63) / 64;
    if (c.q == 2) {
        if (words <= 1) return run_enumeration<BinWord<1>>(c, cfg, wanted, with_keys);
        if (words <= 2) return run_enumeration<BinWord<2>>(c, cfg, wanted, with_keys);
        if (words <= 4) return run_enumeration<BinWord<4>>(c, cfg, wanted, with_keys);
        if (words <= 20) return run_enumeration<BinWord<20>>(c, cfg, wanted, with_keys);
    } else if (c.q == 3) {
        if (words <= 1) return run_enumeration<TernWord<1>>(c, cfg, wanted, with_keys);
        if (words <= 2) return run_enumeration<TernWord<2>>(c, cfg, wanted, with_keys);
        if (words <= 4) return run_enumeration<TernWord<4>>(c, cfg, wanted, with_keys);
        if (words <= 20) return run_enumeration<TernWord<20>>(c, cfg, wanted, with_keys);
    }
    if (c.length > 4096) throw UnsupportedSize("code length exceeds the enumeration envelope (4096)");
    return run_enumeration<ByteWord>(c, cfg, wanted, with_keys);
}

std::vector<int> words_to_support(const uint64_t* w, int length) {
    std::vector<int> s;
    for (int j = 0; j < length; ++j)
        if (w[j >> 6] & (1ull << (j & 63))) s.push_back(j);
    return s;
}

}  // namespace

WeightDistribution weight_distribution_bruteforce(const LinearCode& c, const EnumerationConfig& cfg) {
    EnumResult r = dispatch(c, cfg, {}, false);
    WeightDistribution wd(c.q, c.length, c.dim);
    for (int i = 0; i <= c.length; ++i)
        wd.counts[static_cast<size_t>(i)] = Int(static_cast<unsigned long>(r.hist[static_cast<size_t>(i)]));
    wd.validate();
    return wd;
}

std::optional<int> minimum_distance(const LinearCode& c, const EnumerationConfig& cfg) {
    EnumResult r = dispatch(c, cfg, {}, false);
    for (int i = 1; i <= c.length; ++i)
        if (r.hist[static_cast<size_t>(i)]) return i;
    return std::nullopt;
}

std::vector<std::vector<uint8_t>> codewords_of_weight(const LinearCode& c, int w, const EnumerationConfig& cfg) {
    if (w < 0 || w > c.length) throw DomainError("weight out of range");
    EnumResult r = dispatch(c, cfg, {w}, true);
    auto& keys = r.buckets[0].keys;
    std::sort(keys.begin(), keys.end());
    std::vector<std::vector<uint8_t>> out;
    out.reserve(keys.size());
    for (uint64_t key : keys) {
        std::vector<uint8_t> msg(static_cast<size_t>(c.dim));
        uint64_t t = key;
        for (int i = c.dim - 1; i >= 0; --i) {
            msg[static_cast<size_t>(i)] = static_cast<uint8_t>(t % static_cast<uint64_t>(c.q));
            t /= static_cast<uint64_t>(c.q);
        }
        out.push_back(encode(c, msg));
    }
    return out;
}

std::vector<SupportSet> supports_of_weights(const LinearCode& c, const std::vector<int>& weights,
                                            const EnumerationConfig& cfg) {
    for (int w : weights)
        if (w < 0 || w > c.length) throw DomainError("weight out of range");
    EnumResult r = dispatch(c, cfg, weights, false);
    const int stride = r.stride;
    std::vector<SupportSet> out(weights.size());
    for (size_t wi = 0; wi < weights.size(); ++wi) {
        Bucket& b = r.buckets[wi];
        SupportSet& s = out[wi];
        s.weight = weights[wi];
        s.codeword_count = r.hist[static_cast<size_t>(weights[wi])];
        const size_t n = b.words.size() / static_cast<size_t>(stride);
        if (stride == 1) {
            std::sort(b.words.begin(), b.words.end());
            b.words.erase(std::unique(b.words.begin(), b.words.end()), b.words.end());
            s.supports.reserve(b.words.size());
            for (uint64_t m : b.words) s.supports.push_back(words_to_support(&m, c.length));
        } else {
            std::vector<size_t> idx(n);
            std::iota(idx.begin(), idx.end(), 0);
            auto cmp = [&](size_t a, size_t bb) {
                return std::lexicographical_compare(
                    b.words.begin() + static_cast<long>(a * static_cast<size_t>(stride)),
                    b.words.begin() + static_cast<long>((a + 1) * static_cast<size_t>(stride)),
                    b.words.begin() + static_cast<long>(bb * static_cast<size_t>(stride)),
                    b.words.begin() + static_cast<long>((bb + 1) * static_cast<size_t>(stride)));
            };
            auto eq = [&](size_t a, size_t bb) {
                return std::equal(b.words.begin() + static_cast<long>(a * static_cast<size_t>(stride)),
                                  b.words.begin() + static_cast<long>((a + 1) * static_cast<size_t>(stride)),
                                  b.words.begin() + static_cast<long>(bb * static_cast<size_t>(stride)));
            };
            std::sort(idx.begin(), idx.end(), cmp);
            for (size_t i = 0; i < idx.size(); ++i) {
                if (i > 0 && eq(idx[i], idx[i - 1])) continue;
                s.supports.push_back(words_to_support(b.words.data() + idx[i] * static_cast<size_t>(stride), c.length));
            }
        }
    }
    return out;
}

SupportSet supports_of_weight(const LinearCode& c, int w, const EnumerationConfig& cfg) {
    return supports_of_weights(c, {w}, cfg)[0];
}

}  // namespace dfc

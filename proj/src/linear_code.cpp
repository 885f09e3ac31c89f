#include "dfc/linear_code.hpp"

#include <algorithm>
#include <numeric>

namespace dfc {

namespace {

int mod_inv(int a, int p) {
    int r = 1, b = a % p, e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

// In-place reduced row echelon form over GF(q); returns rank.
int rref(std::vector<std::vector<uint8_t>>& rows, int q, int length) {
    int rank = 0;
    for (int col = 0; col < length && rank < static_cast<int>(rows.size()); ++col) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (rows[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        int il = mod_inv(rows[rank][col], q);
        if (il != 1)
            for (auto& x : rows[rank]) x = static_cast<uint8_t>(x * il % q);
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            int f = rows[r][col];
            for (int j = 0; j < length; ++j)
                rows[r][j] = static_cast<uint8_t>(((rows[r][j] - f * rows[rank][j]) % q + q) % q);
        }
        ++rank;
    }
    rows.resize(static_cast<size_t>(rank));
    return rank;
}

void require_prime_q(int q) {
    if (!is_prime(static_cast<uint64_t>(q)))
        throw UnsupportedField("codes are supported over prime fields only, got q=" + std::to_string(q));
}

}  // namespace

void WeightDistribution::validate() const {
    if (static_cast<int>(counts.size()) != length + 1)
        throw InconsistentInput("weight distribution has wrong size");
    if (counts[0] != 1) throw InconsistentInput("A_0 must be 1");
    Int total = 0;
    for (const Int& c : counts) {
        if (c < 0) throw InconsistentInput("negative weight count");
        total += c;
    }
    if (total != int_pow(static_cast<uint64_t>(q), static_cast<uint64_t>(dim)))
        throw InconsistentInput("weight counts do not sum to q^kappa");
}

int WeightDistribution::min_nonzero_weight() const {
    for (int i = 1; i <= length; ++i)
        if (counts[i] != 0) return i;
    return -1;
}

std::vector<int> WeightDistribution::nonzero_weights() const {
    std::vector<int> w;
    for (int i = 1; i <= length; ++i)
        if (counts[i] != 0) w.push_back(i);
    return w;
}

LinearCode make_code(int q, int length, const std::vector<std::vector<uint8_t>>& rows) {
    require_prime_q(q);
    if (length <= 0) throw DomainError("code length must be positive");
    LinearCode c;
    c.q = q;
    c.length = length;
    c.basis = rows;
    for (auto& r : c.basis) {
        if (static_cast<int>(r.size()) != length) throw DomainError("generator row has wrong length");
        for (auto& x : r) x = static_cast<uint8_t>(x % q);
    }
    c.dim = rref(c.basis, q, length);
    return c;
}

LinearCode cyclic_code(int q, int v, const Poly& g) {
    require_prime_q(q);
    if (g.p != q) throw MixedBase("generator polynomial base differs from code field");
    if (v % q == 0) throw NonCoprimeLength("code length shares a factor with q");
    if (g.is_zero() || g.degree() > v) throw GeneratorDoesNotDivide("generator degree exceeds length");
    if (!poly_divrem(Poly::x_pow_minus_one(q, v), g).second.is_zero())
        throw GeneratorDoesNotDivide("generator does not divide x^v - 1");
    const Poly gm = poly_monic(g);
    const int k = v - gm.degree();
    std::vector<std::vector<uint8_t>> rows(static_cast<size_t>(k), std::vector<uint8_t>(static_cast<size_t>(v), 0));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j <= gm.degree(); ++j)
            rows[i][i + j] = static_cast<uint8_t>(gm.coeff(j));
    LinearCode c = make_code(q, v, rows);
    c.cyclic = CyclicMeta{gm, "coordinate i <-> coefficient of x^i"};
    return c;
}

LinearCode reed_muller(int r, int m) {
    if (m < 1 || r < 0 || r > m) throw BadOrder("need 0 <= r <= m, m >= 1");
    if (m > 20) throw UnsupportedSize("RM length exceeds 2^20");
    const int n = 1 << m;
    std::vector<std::vector<uint8_t>> rows;
    // monomials ordered by (degree, variable mask)
    for (int deg = 0; deg <= r; ++deg)
        for (int mask = 0; mask < n; ++mask) {
            if (__builtin_popcount(static_cast<unsigned>(mask)) != deg) continue;
            std::vector<uint8_t> row(static_cast<size_t>(n));
            for (int x = 0; x < n; ++x) row[x] = ((x & mask) == mask) ? 1 : 0;
            rows.push_back(std::move(row));
        }
    return make_code(2, n, rows);
}

LinearCode hamming_like_code(int q, int m) {
    require_prime_q(q);
    if (m < 2) throw DomainError("need m >= 2");
    const Field& f = Field::get(q, m);
    FieldElement beta(f, f.pow(f.alpha(), static_cast<uint64_t>(q - 1)));
    Poly g = minimal_polynomial(beta, static_cast<uint32_t>(q));
    const int v = static_cast<int>((f.order() - 1) / static_cast<uint32_t>(q - 1));
    return cyclic_code(q, v, g);
}

LinearCode dual(const LinearCode& c) {
    // pivots of the RREF basis
    std::vector<int> pivot_of_row(static_cast<size_t>(c.dim));
    std::vector<bool> is_pivot(static_cast<size_t>(c.length), false);
    for (int r = 0; r < c.dim; ++r) {
        int p = -1;
        for (int j = 0; j < c.length; ++j)
            if (c.basis[r][j] != 0) {
                p = j;
                break;
            }
        pivot_of_row[r] = p;
        is_pivot[p] = true;
    }
    std::vector<std::vector<uint8_t>> rows;
    rows.reserve(static_cast<size_t>(c.length - c.dim));
    for (int j = 0; j < c.length; ++j) {
        if (is_pivot[j]) continue;
        std::vector<uint8_t> h(static_cast<size_t>(c.length), 0);
        h[j] = 1;
        for (int r = 0; r < c.dim; ++r)
            h[pivot_of_row[r]] = static_cast<uint8_t>((c.q - c.basis[r][j]) % c.q);
        rows.push_back(std::move(h));
    }
    if (rows.empty()) rows.push_back(std::vector<uint8_t>(static_cast<size_t>(c.length), 0));
    return make_code(c.q, c.length, rows);
}

LinearCode extend(const LinearCode& c) {
    std::vector<std::vector<uint8_t>> rows;
    rows.reserve(static_cast<size_t>(c.dim));
    for (const auto& r : c.basis) {
        std::vector<uint8_t> e = r;
        int s = std::accumulate(r.begin(), r.end(), 0);
        e.push_back(static_cast<uint8_t>((c.q - s % c.q) % c.q));
        rows.push_back(std::move(e));
    }
    if (rows.empty()) rows.push_back(std::vector<uint8_t>(static_cast<size_t>(c.length) + 1, 0));
    return make_code(c.q, c.length + 1, rows);
}

bool same_row_space(const LinearCode& a, const LinearCode& b) {
    return a.q == b.q && a.length == b.length && a.dim == b.dim && a.basis == b.basis;
}

std::vector<uint8_t> encode(const LinearCode& c, const std::vector<uint8_t>& message) {
    if (static_cast<int>(message.size()) != c.dim) throw DomainError("message length != dim");
    std::vector<uint8_t> w(static_cast<size_t>(c.length), 0);
    for (int i = 0; i < c.dim; ++i) {
        if (message[i] == 0) continue;
        for (int j = 0; j < c.length; ++j)
            w[j] = static_cast<uint8_t>((w[j] + message[i] * c.basis[i][j]) % c.q);
    }
    return w;
}

PerfectCheck is_perfect(const LinearCode& c, int min_distance) {
    if (min_distance < 1 || min_distance % 2 == 0)
        throw EvenMinimumDistance("packing radius needs odd minimum distance, got " + std::to_string(min_distance));
    const int e = (min_distance - 1) / 2;
    Int sphere = 0;
    for (int i = 0; i <= e; ++i)
        sphere += binom(static_cast<uint64_t>(c.length), static_cast<uint64_t>(i)) *
                  int_pow(static_cast<uint64_t>(c.q - 1), static_cast<uint64_t>(i));
    Int lhs = int_pow(static_cast<uint64_t>(c.q), static_cast<uint64_t>(c.dim)) * sphere;
    Int rhs = int_pow(static_cast<uint64_t>(c.q), static_cast<uint64_t>(c.length));
    return PerfectCheck{lhs == rhs, e};
}

}  // namespace dfc

#include "dfc/galois.hpp"

#include <algorithm>
#include <numeric>
#include <map>
#include <mutex>

namespace dfc {

// ---------------------------------------------------------------------------
// polynomials
// ---------------------------------------------------------------------------

namespace {

void normalize(std::vector<int>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

int mod_inv(int a, int p) {  // p prime, a != 0 mod p
    int r = 1, b = a % p, e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

void require_same_base(const Poly& a, const Poly& b) {
    if (a.p != b.p) throw MixedBase("polynomials over different prime fields");
}

}  // namespace

Poly::Poly(int base, std::vector<int> coeffs) : p(base), c(std::move(coeffs)) {
    for (auto& x : c) x = ((x % p) + p) % p;
    normalize(c);
}

Poly Poly::x_pow_minus_one(int p, int n) {
    std::vector<int> c(n + 1, 0);
    c[0] = p - 1;
    c[n] = 1;
    return Poly(p, std::move(c));
}

Poly poly_add(const Poly& a, const Poly& b) {
    require_same_base(a, b);
    std::vector<int> c(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) c[i] = (a.coeff(i) + b.coeff(i)) % a.p;
    return Poly(a.p, std::move(c));
}

Poly poly_sub(const Poly& a, const Poly& b) {
    require_same_base(a, b);
    std::vector<int> c(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) c[i] = (a.coeff(i) - b.coeff(i) + a.p) % a.p;
    return Poly(a.p, std::move(c));
}

Poly poly_mul(const Poly& a, const Poly& b) {
    require_same_base(a, b);
    if (a.is_zero() || b.is_zero()) return Poly::zero(a.p);
    std::vector<int> c(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            c[i + j] = (c[i + j] + a.c[i] * b.c[j]) % a.p;
    }
    return Poly(a.p, std::move(c));
}

std::pair<Poly, Poly> poly_divrem(const Poly& a, const Poly& b) {
    require_same_base(a, b);
    if (b.is_zero()) throw DivisionByZeroPoly("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly::zero(a.p), a};
    const int p = a.p;
    std::vector<int> rem = a.c;
    std::vector<int> quo(a.degree() - b.degree() + 1, 0);
    const int ilead = mod_inv(b.lead(), p);
    for (int i = a.degree(); i >= b.degree(); --i) {
        int coef = rem[i] * ilead % p;
        if (coef == 0) continue;
        quo[i - b.degree()] = coef;
        for (int j = 0; j <= b.degree(); ++j) {
            int k = i - b.degree() + j;
            rem[k] = ((rem[k] - coef * b.c[j]) % p + p) % p;
        }
    }
    return {Poly(p, std::move(quo)), Poly(p, std::move(rem))};
}

Poly poly_monic(const Poly& a) {
    if (a.is_zero() || a.lead() == 1) return a;
    int il = mod_inv(a.lead(), a.p);
    std::vector<int> c = a.c;
    for (auto& x : c) x = x * il % a.p;
    return Poly(a.p, std::move(c));
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    require_same_base(a, b);
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = poly_divrem(x, y).second;
        x = y;
        y = r;
    }
    return poly_monic(x);
}

Poly poly_lcm(const Poly& a, const Poly& b) {
    require_same_base(a, b);
    if (a.is_zero() || b.is_zero()) return Poly::zero(a.p);
    Poly g = poly_gcd(a, b);
    return poly_monic(poly_divrem(poly_mul(a, b), g).first);
}

std::string poly_to_string(const Poly& a) {
    if (a.is_zero()) return "0";
    std::string s;
    for (int i = a.degree(); i >= 0; --i) {
        int v = a.coeff(i);
        if (v == 0) continue;
        if (!s.empty()) s += " + ";
        if (i == 0) {
            s += std::to_string(v);
        } else {
            if (v != 1) s += std::to_string(v);
            s += (i == 1) ? "x" : "x^" + std::to_string(i);
        }
    }
    return s;
}

// ---------------------------------------------------------------------------
// fields
// ---------------------------------------------------------------------------

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

constexpr uint32_t kMaxOrder = 1u << 20;

// Built-in primitive moduli over GF(2), GF(3), GF(5), GF(7): for each
// degree, the monic polynomial whose coefficient vector (c_0,...,c_{e-1})
// has the smallest value as a base-p integer among primitive ones.
// Regenerate with tools or verify at construction time; construction
// re-checks primitivity regardless.
const std::map<std::pair<int, int>, std::vector<int>> kModulusTable = {
    {{2, 1}, {1, 1}},
    {{2, 2}, {1, 1, 1}},
    {{2, 3}, {1, 1, 0, 1}},
    {{2, 4}, {1, 1, 0, 0, 1}},
    {{2, 5}, {1, 0, 1, 0, 0, 1}},
    {{2, 6}, {1, 1, 0, 0, 0, 0, 1}},
    {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
    {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
    {{2, 9}, {1, 0, 0, 0, 1, 0, 0, 0, 0, 1}},
    {{2, 10}, {1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1}},
    {{2, 11}, {1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
    {{2, 12}, {1, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 1}},
    {{2, 13}, {1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
    {{2, 14}, {1, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
    {{2, 15}, {1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
    {{2, 16}, {1, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
    {{2, 17}, {1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
    {{2, 18}, {1, 1, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
    {{2, 19}, {1, 1, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
    {{2, 20}, {1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
    {{3, 1}, {1, 1}},
    {{3, 2}, {2, 1, 1}},
    {{3, 3}, {1, 2, 0, 1}},
    {{3, 4}, {2, 1, 0, 0, 1}},
    {{3, 5}, {1, 2, 0, 0, 0, 1}},
    {{3, 6}, {2, 1, 0, 0, 0, 0, 1}},
    {{3, 7}, {1, 2, 1, 0, 0, 0, 0, 1}},
    {{3, 8}, {2, 0, 0, 1, 0, 0, 0, 0, 1}},
    {{3, 9}, {1, 0, 1, 2, 0, 0, 0, 0, 0, 1}},
    {{3, 10}, {2, 1, 0, 1, 0, 0, 0, 0, 0, 0, 1}},
    {{3, 11}, {1, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
    {{3, 12}, {2, 2, 2, 1, 2, 0, 0, 0, 0, 0, 0, 0, 1}},
    {{5, 1}, {2, 1}},
    {{5, 2}, {2, 1, 1}},
    {{5, 3}, {2, 3, 0, 1}},
    {{5, 4}, {2, 2, 1, 0, 1}},
    {{5, 5}, {2, 4, 0, 0, 0, 1}},
    {{5, 6}, {2, 1, 0, 0, 0, 0, 1}},
    {{5, 7}, {2, 3, 0, 0, 0, 0, 0, 1}},
    {{5, 8}, {3, 2, 1, 0, 0, 0, 0, 0, 1}},
    {{7, 1}, {2, 1}},
    {{7, 2}, {3, 1, 1}},
    {{7, 3}, {2, 3, 0, 1}},
    {{7, 4}, {5, 3, 1, 0, 1}},
    {{7, 5}, {4, 1, 0, 0, 0, 1}},
    {{7, 6}, {5, 1, 3, 0, 0, 0, 1}},
    {{7, 7}, {2, 6, 0, 0, 0, 0, 0, 1}},
};

uint64_t checked_pow(int p, int e) {
    uint64_t r = 1;
    for (int i = 0; i < e; ++i) r *= static_cast<uint64_t>(p);
    return r;
}

}  // namespace

Field::Field(int p, int e, Poly modulus) : p_(p), e_(e), modulus_(std::move(modulus)) {
    if (!is_prime(static_cast<uint64_t>(p))) throw NotPrime("characteristic must be prime: " + std::to_string(p));
    if (e < 1) throw UnsupportedSize("extension degree must be >= 1");
    uint64_t ord = checked_pow(p, e);
    if (ord > kMaxOrder) throw UnsupportedSize("field order exceeds 2^20: p=" + std::to_string(p) + " e=" + std::to_string(e));
    order_ = static_cast<uint32_t>(ord);
    if (modulus_.p != p || modulus_.degree() != e)
        throw NotPrimitivePolynomial("modulus must have degree e over GF(p)");
    modulus_ = poly_monic(modulus_);
    if (modulus_.coeff(0) == 0)
        throw NotPrimitivePolynomial("modulus has x as a factor");

    // Build the antilog table by repeated multiplication with x, reducing
    // by the monic modulus.  If x returns to 1 only after exactly
    // order-2 further steps, its order is p^e - 1, which certifies the
    // modulus is both irreducible and primitive.
    const uint32_t n = order_ - 1;
    exp_.assign(2 * n, 0);
    log_.assign(order_, 0);
    std::vector<int> digits(e, 0);
    digits[0] = 1;  // the element 1
    uint32_t rep = 1;
    for (uint32_t i = 0; i < n; ++i) {
        exp_[i] = rep;
        if (i > 0 && rep == 1)
            throw NotPrimitivePolynomial("modulus root has order " + std::to_string(i) + " < p^e - 1");
        if (log_[rep] == 0 && rep != 1) log_[rep] = i;
        // multiply by x
        int carry = digits[e - 1];
        for (int d = e - 1; d > 0; --d) digits[d] = digits[d - 1];
        digits[0] = 0;
        if (carry) {
            for (int d = 0; d < e; ++d)
                digits[d] = ((digits[d] - carry * modulus_.coeff(d)) % p + p) % p;
        }
        rep = 0;
        for (int d = e - 1; d >= 0; --d) rep = rep * p + static_cast<uint32_t>(digits[d]);
    }
    if (rep != 1) throw NotPrimitivePolynomial("modulus root does not have order p^e - 1");
    log_[1] = 0;
    // verify the table covered every nonzero element exactly once
    std::vector<bool> seen(order_, false);
    for (uint32_t i = 0; i < n; ++i) {
        if (exp_[i] == 0 || seen[exp_[i]])
            throw NotPrimitivePolynomial("modulus is not irreducible over GF(p)");
        seen[exp_[i]] = true;
        exp_[n + i] = exp_[i];
    }
}

uint32_t Field::add(uint32_t a, uint32_t b) const {
    if (p_ == 2) return a ^ b;
    uint32_t r = 0, place = 1;
    for (int d = 0; d < e_; ++d) {
        uint32_t da = a % p_, db = b % p_;
        a /= p_;
        b /= p_;
        r += ((da + db) % p_) * place;
        place *= p_;
    }
    return r;
}

uint32_t Field::neg(uint32_t a) const {
    if (p_ == 2) return a;
    uint32_t r = 0, place = 1;
    for (int d = 0; d < e_; ++d) {
        uint32_t da = a % p_;
        a /= p_;
        r += ((p_ - da) % p_) * place;
        place *= p_;
    }
    return r;
}

uint32_t Field::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t Field::trace(uint32_t x, uint32_t q) const {
    // q = p^f must be a proper subfield order with f | e
    uint32_t f = 0;
    uint64_t t = 1;
    while (t < q) {
        t *= p_;
        ++f;
    }
    if (t != q || f == 0 || e_ % f != 0)
        throw NotASubfield("GF(" + std::to_string(q) + ") is not a subfield of GF(" + std::to_string(order_) + ")");
    const int m = e_ / static_cast<int>(f);
    uint32_t acc = 0;
    uint64_t qe = 1;
    for (int i = 0; i < m; ++i) {
        acc = add(acc, pow(x, qe));
        qe *= q;
    }
    return acc;
}

uint32_t Field::element_order(uint32_t a) const {
    if (a == 0) throw DivisionByZero("order of zero element");
    uint32_t n = group_order();
    return n / std::gcd(n, log_[a]);  // gcd(n, 0) = n, so the order of 1 is 1
}

const Field& Field::get(int p, int e) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<Field>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, e);
    auto it = cache.find(key);
    if (it == cache.end()) {
        auto f = std::unique_ptr<Field>(new Field(p, e, default_modulus(p, e)));
        it = cache.emplace(key, std::move(f)).first;
    }
    return *it->second;
}

std::shared_ptr<const Field> Field::make(int p, int e, const Poly& modulus) {
    return std::shared_ptr<const Field>(new Field(p, e, modulus));
}

Poly Field::default_modulus(int p, int e) {
    auto it = kModulusTable.find({p, e});
    if (it != kModulusTable.end()) return Poly(p, it->second);
    if (!is_prime(static_cast<uint64_t>(p))) throw NotPrime("characteristic must be prime: " + std::to_string(p));
    uint64_t ord = checked_pow(p, e);
    if (e < 1 || ord > kMaxOrder) throw UnsupportedSize("field order exceeds 2^20");
    // Fall back to a search in the same canonical order the table was
    // generated with: coefficient vectors by increasing base-p value.
    for (uint64_t v = 0; v < ord; ++v) {
        std::vector<int> c(e + 1, 0);
        uint64_t t = v;
        for (int i = 0; i < e; ++i) {
            c[i] = static_cast<int>(t % p);
            t /= p;
        }
        c[e] = 1;
        try {
            Field probe(p, e, Poly(p, c));
            return probe.modulus();
        } catch (const NotPrimitivePolynomial&) {
        }
    }
    throw NotPrimitivePolynomial("no primitive polynomial found");  // unreachable for valid p, e
}

FieldElement::FieldElement(const Field& f, uint32_t rep) : f_(&f), rep_(rep) {
    if (rep_ >= f.order()) throw DomainError("element rep out of range");
}

namespace {
const Field& require_same_field(const FieldElement& a, const FieldElement& b) {
    if (!a.field().same_spec(b.field())) throw MixedFields("elements of different fields");
    return a.field();
}
}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    const Field& f = require_same_field(a, b);
    return FieldElement(f, f.add(a.rep(), b.rep()));
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    const Field& f = require_same_field(a, b);
    return FieldElement(f, f.sub(a.rep(), b.rep()));
}
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    const Field& f = require_same_field(a, b);
    return FieldElement(f, f.mul(a.rep(), b.rep()));
}
FieldElement FieldElement::operator-() const { return FieldElement(*f_, f_->neg(rep_)); }
FieldElement FieldElement::inverse() const { return FieldElement(*f_, f_->inv(rep_)); }
FieldElement FieldElement::pow(uint64_t s) const { return FieldElement(*f_, f_->pow(rep_, s)); }

FieldElement field_add(const FieldElement& a, const FieldElement& b) { return a + b; }
FieldElement field_mul(const FieldElement& a, const FieldElement& b) { return a * b; }
FieldElement field_neg(const FieldElement& a) { return -a; }
FieldElement field_inv(const FieldElement& a) { return a.inverse(); }
FieldElement field_pow(const FieldElement& a, uint64_t s) { return a.pow(s); }

FieldElement trace(const FieldElement& x, uint32_t q) {
    return FieldElement(x.field(), x.field().trace(x.rep(), q));
}

Poly minimal_polynomial(const FieldElement& x, uint32_t q) {
    const Field& f = x.field();
    if (q != static_cast<uint32_t>(f.p()))
        throw NotASubfield("minimal polynomials are supported over the prime subfield only");
    if (x.is_zero()) return Poly::x(f.p());

    // Frobenius orbit x, x^q, x^{q^2}, ...
    std::vector<uint32_t> orbit;
    uint32_t cur = x.rep();
    do {
        orbit.push_back(cur);
        cur = f.pow(cur, q);
    } while (cur != x.rep());

    // expand prod (z - r) with coefficients in the big field
    std::vector<uint32_t> poly{1};
    for (uint32_t r : orbit) {
        std::vector<uint32_t> next(poly.size() + 1, 0);
        uint32_t nr = f.neg(r);
        for (size_t j = 0; j < poly.size(); ++j) {
            next[j + 1] = f.add(next[j + 1], poly[j]);
            next[j] = f.add(next[j], f.mul(nr, poly[j]));
        }
        poly = std::move(next);
    }

    // coefficients must be prime-field constants (digit 0 only)
    std::vector<int> out(poly.size());
    for (size_t i = 0; i < poly.size(); ++i) {
        if (poly[i] % f.p() != poly[i])
            throw ConsistencyError("minimal polynomial coefficient escaped the prime field");
        out[i] = static_cast<int>(poly[i]);
    }
    return Poly(f.p(), std::move(out));
}

}  // namespace dfc

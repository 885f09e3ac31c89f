#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dfc/errors.hpp"

namespace dfc {

// ---------------------------------------------------------------------------
// Dense polynomial over a prime field GF(p).
//
// Coefficients are stored lowest degree first with no trailing zeros; the
// zero polynomial is the empty list.  This canonical form makes equality a
// plain vector compare.
// ---------------------------------------------------------------------------
struct Poly {
    int p = 2;
    std::vector<int> c;  // each in [0, p)

    Poly() = default;
    Poly(int base, std::vector<int> coeffs);

    int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c.empty(); }
    bool is_one() const { return c.size() == 1 && c[0] == 1; }
    int coeff(int i) const { return (i >= 0 && i < static_cast<int>(c.size())) ? c[i] : 0; }
    int lead() const { return c.empty() ? 0 : c.back(); }

    static Poly zero(int p) { return Poly(p, {}); }
    static Poly one(int p) { return Poly(p, {1}); }
    static Poly x(int p) { return Poly(p, {0, 1}); }
    // x^n - 1 over GF(p)
    static Poly x_pow_minus_one(int p, int n);

    bool operator==(const Poly&) const = default;
};

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
// (quotient, remainder), deg(remainder) < deg(divisor)
std::pair<Poly, Poly> poly_divrem(const Poly& a, const Poly& b);
Poly poly_gcd(const Poly& a, const Poly& b);  // monic
Poly poly_lcm(const Poly& a, const Poly& b);  // monic
Poly poly_monic(const Poly& a);
// human-readable "x^3 + x + 1"
std::string poly_to_string(const Poly& a);

// ---------------------------------------------------------------------------
// Finite field GF(p^e), p prime, p^e <= 2^20.
//
// Elements are integers in [0, p^e): the base-p digits of the integer are
// the coordinates in the polynomial basis 1, x, ..., x^{e-1} modulo the
// field's primitive modulus.  alpha (= the class of x, or the table
// generator for e = 1) is the distinguished primitive element; log/antilog
// tables make mul, inv and pow O(1).
//
// Construction verifies the modulus root really has multiplicative order
// p^e - 1, which certifies both irreducibility and primitivity.
// ---------------------------------------------------------------------------
class Field {
public:
    // Shared instance with the built-in modulus for (p, e).  The table of
    // moduli is fixed (see docs/README) so codes built on top of it are
    // reproducible bit for bit.
    static const Field& get(int p, int e);
    // Fresh field with an explicit modulus (degree e over GF(p)).
    static std::shared_ptr<const Field> make(int p, int e, const Poly& modulus);
    // The built-in modulus for (p, e): from the table where present,
    // otherwise the smallest primitive polynomial in the documented order.
    static Poly default_modulus(int p, int e);

    int p() const { return p_; }
    int e() const { return e_; }
    uint32_t order() const { return order_; }     // p^e
    uint32_t group_order() const { return order_ - 1; }
    const Poly& modulus() const { return modulus_; }
    uint32_t alpha() const { return exp_[1 % group_order()]; }

    // raw element ops (reps in [0, order))
    uint32_t add(uint32_t a, uint32_t b) const;
    uint32_t sub(uint32_t a, uint32_t b) const;
    uint32_t neg(uint32_t a) const;
    uint32_t mul(uint32_t a, uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    uint32_t inv(uint32_t a) const {
        if (a == 0) throw DivisionByZero("inverse of zero field element");
        return exp_[(group_order() - log_[a]) % group_order()];
    }
    // a^s; pow(0, 0) = 1 by convention
    uint32_t pow(uint32_t a, uint64_t s) const {
        if (a == 0) return s == 0 ? 1 : 0;
        return exp_[static_cast<uint32_t>((static_cast<uint64_t>(log_[a]) * (s % group_order())) % group_order())];
    }
    uint32_t exp(uint64_t k) const { return exp_[static_cast<uint32_t>(k % group_order())]; }
    uint32_t log(uint32_t a) const {
        if (a == 0) throw DivisionByZero("log of zero field element");
        return log_[a];
    }

    // Trace onto the subfield GF(q), q = p^f with f | e: sum of x^{q^i}.
    // The result is an element of this field lying in that subfield.
    uint32_t trace(uint32_t x, uint32_t q) const;
    // Multiplicative order of a nonzero element.
    uint32_t element_order(uint32_t a) const;

    bool same_spec(const Field& o) const {
        return p_ == o.p_ && e_ == o.e_ && modulus_ == o.modulus_;
    }

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

private:
    Field(int p, int e, Poly modulus);

    int p_, e_;
    uint32_t order_;
    Poly modulus_;
    std::vector<uint32_t> exp_;  // length 2*(order-1) so exp_[i+j] avoids a mod
    std::vector<uint32_t> log_;  // log_[0] unused
};

// Checked element wrapper; operations refuse to mix distinct field specs.
class FieldElement {
public:
    FieldElement(const Field& f, uint32_t rep);

    uint32_t rep() const { return rep_; }
    const Field& field() const { return *f_; }
    bool is_zero() const { return rep_ == 0; }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    FieldElement operator-() const;
    FieldElement inverse() const;
    FieldElement pow(uint64_t s) const;
    bool operator==(const FieldElement& o) const { return f_->same_spec(*o.f_) && rep_ == o.rep_; }

private:
    const Field* f_;
    uint32_t rep_;
};

FieldElement field_add(const FieldElement& a, const FieldElement& b);
FieldElement field_mul(const FieldElement& a, const FieldElement& b);
FieldElement field_neg(const FieldElement& a);
FieldElement field_inv(const FieldElement& a);
FieldElement field_pow(const FieldElement& a, uint64_t s);

FieldElement trace(const FieldElement& x, uint32_t q);

// Minimal polynomial over the prime subfield GF(q), q = field characteristic.
// Computed as the product of (z - x^{q^i}) over the Frobenius orbit of x;
// the coefficients are verified to land in GF(q).
Poly minimal_polynomial(const FieldElement& x, uint32_t q);

bool is_prime(uint64_t n);

}  // namespace dfc

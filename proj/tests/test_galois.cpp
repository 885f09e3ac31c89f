#include "doctest.h"

#include <map>
#include <random>
#include <set>

#include "dfc/galois.hpp"

using namespace dfc;

TEST_CASE("make_field basics") {
    const Field& f2 = Field::get(2, 1);
    CHECK(f2.order() == 2);

    // GF(8) with the standard modulus
    auto f8 = Field::make(2, 3, Poly(2, {1, 1, 0, 1}));
    CHECK(f8->order() == 8);
    CHECK(f8->alpha() == 2);  // the class of x

    // oracle: x^3+x^2+x+1 = (x+1)(x^2+1) over GF(2), so it must be rejected
    CHECK(poly_mul(Poly(2, {1, 1}), Poly(2, {1, 0, 1})) == Poly(2, {1, 1, 1, 1}));
    CHECK_THROWS_AS(Field::make(2, 3, Poly(2, {1, 1, 1, 1})), NotPrimitivePolynomial);

    // x^4+x^3+x^2+x+1 is irreducible but its root has order 5, not 15
    CHECK_THROWS_AS(Field::make(2, 4, Poly(2, {1, 1, 1, 1, 1})), NotPrimitivePolynomial);

    CHECK_THROWS_AS(Field::get(4, 1), NotPrime);
    CHECK_THROWS_AS(Field::get(2, 21), UnsupportedSize);
}

TEST_CASE("field arithmetic examples") {
    const Field& f3 = Field::get(3, 1);
    CHECK(FieldElement(f3, 2) + FieldElement(f3, 2) == FieldElement(f3, 1));

    const Field& f8 = Field::get(2, 3);
    FieldElement a(f8, f8.alpha());
    CHECK(a * a.pow(6) == FieldElement(f8, 1));  // multiplicative order 7

    // GF(9): inv(alpha) = alpha^7, checked against the full multiplication table
    const Field& f9 = Field::get(3, 2);
    FieldElement b(f9, f9.alpha());
    CHECK(field_inv(b) == b.pow(7));
    uint32_t found = 0;
    for (uint32_t x = 0; x < 9; ++x)
        if (f9.mul(b.rep(), x) == 1) found = x;
    CHECK(found == b.pow(7).rep());

    CHECK_THROWS_AS(field_inv(FieldElement(f9, 0)), DivisionByZero);
    CHECK_THROWS_AS(FieldElement(f8, 1) + FieldElement(f9, 1), MixedFields);
}

TEST_CASE("alpha has exact multiplicative order p^e - 1") {
    for (auto [p, e] : {std::pair{2, 1}, {2, 3}, {2, 5}, {2, 8}, {3, 2}, {3, 3}, {3, 5}, {5, 3}, {7, 2}}) {
        const Field& f = Field::get(p, e);
        CHECK(f.element_order(f.alpha()) == f.group_order());
    }
}

TEST_CASE("trace") {
    const Field& f8 = Field::get(2, 3);
    CHECK(f8.trace(0, 2) == 0);
    CHECK(f8.trace(1, 2) == 1);  // 1+1+1 in characteristic 2, m = 3 odd

    // balanced: exactly 4 of the 8 elements have trace 0
    int zeros = 0;
    for (uint32_t x = 0; x < 8; ++x)
        if (f8.trace(x, 2) == 0) ++zeros;
    CHECK(zeros == 4);

    CHECK_THROWS_AS(f8.trace(1, 4), NotASubfield);  // 4 = 2^2, 2 does not divide 3

    // GF(81) -> GF(9) trace lands in the subfield
    const Field& f81 = Field::get(3, 4);
    for (uint32_t x = 0; x < 81; ++x) {
        uint32_t t = f81.trace(x, 9);
        CHECK(f81.pow(t, 9) == t);  // fixed by Frobenius^2 <=> in GF(9)
    }
}

TEST_CASE("trace Frobenius invariance, exhaustive for p^e <= 3^6") {
    for (auto [p, e] : {std::pair{2, 4}, {2, 6}, {3, 3}, {3, 6}}) {
        const Field& f = Field::get(p, e);
        uint32_t q = static_cast<uint32_t>(p);
        for (uint32_t x = 0; x < f.order(); ++x)
            CHECK(f.trace(f.pow(x, q), q) == f.trace(x, q));
    }
}

TEST_CASE("minimal polynomials") {
    const Field& f8 = Field::get(2, 3);
    CHECK(minimal_polynomial(FieldElement(f8, 0), 2) == Poly::x(2));
    FieldElement a(f8, f8.alpha());
    CHECK(minimal_polynomial(a, 2) == f8.modulus());

    // oracle for alpha^3: expand (z-a^3)(z-a^6)(z-a^5) by hand in the field
    {
        uint32_t r1 = a.pow(3).rep(), r2 = a.pow(6).rep(), r3 = a.pow(5).rep();
        // (z-r1)(z-r2) = z^2 - (r1+r2) z + r1 r2
        uint32_t s = f8.add(r1, r2), pr = f8.mul(r1, r2);
        // * (z - r3)
        uint32_t c2 = f8.add(s, r3);                       // z^2 coefficient
        uint32_t c1 = f8.add(pr, f8.mul(s, r3));           // z coefficient
        uint32_t c0 = f8.mul(pr, r3);                      // constant
        CHECK(c2 == 1);
        CHECK(c1 == 0);
        CHECK(c0 == 1);
    }
    CHECK(minimal_polynomial(a.pow(3), 2) == Poly(2, {1, 0, 1, 1}));  // x^3+x^2+1

    CHECK_THROWS_AS(minimal_polynomial(a, 4), NotASubfield);
}

TEST_CASE("minimal polynomial is cyclotomic-coset invariant") {
    for (auto [p, e] : {std::pair{2, 4}, {3, 3}}) {
        const Field& f = Field::get(p, e);
        uint32_t q = static_cast<uint32_t>(p);
        for (uint32_t i = 0; i < f.group_order(); ++i) {
            FieldElement x(f, f.exp(i));
            CHECK(minimal_polynomial(x, q) == minimal_polynomial(x.pow(q), q));
        }
    }
}

TEST_CASE("minimal polynomial divides x^ord - 1") {
    const Field& f16 = Field::get(2, 4);
    for (uint32_t i = 1; i < 15; ++i) {
        Poly m = minimal_polynomial(FieldElement(f16, f16.exp(i)), 2);
        uint32_t ord = f16.element_order(f16.exp(i));
        CHECK(poly_divrem(Poly::x_pow_minus_one(2, static_cast<int>(ord)), m).second.is_zero());
    }
}

TEST_CASE("polynomial ring operations") {
    CHECK(poly_gcd(Poly(2, {1, 0, 1}), Poly(2, {1, 1})) == Poly(2, {1, 1}));  // x^2+1 = (x+1)^2
    auto [q, r] = poly_divrem(Poly::x_pow_minus_one(2, 7), Poly(2, {1, 1, 0, 1}));
    CHECK(r.is_zero());
    CHECK(q.degree() == 4);
    CHECK(poly_lcm(Poly(2, {1, 1}), Poly(2, {1, 1})) == Poly(2, {1, 1}));

    CHECK_THROWS_AS(poly_divrem(Poly(2, {1, 1}), Poly::zero(2)), DivisionByZeroPoly);
    CHECK_THROWS_AS(poly_mul(Poly(2, {1, 1}), Poly(3, {1, 1})), MixedBase);

    CHECK(poly_to_string(Poly(2, {1, 1, 0, 1})) == "x^3 + x + 1");
    CHECK(poly_to_string(Poly::zero(3)) == "0");
    CHECK(poly_to_string(Poly(3, {2, 0, 2})) == "2x^2 + 2");
}

TEST_CASE("poly mul then divrem round-trips (random)") {
    std::mt19937 rng(12345);
    for (int p : {2, 3, 5}) {
        std::uniform_int_distribution<int> coeff(0, p - 1), deg(0, 12);
        for (int it = 0; it < 200; ++it) {
            auto rand_poly = [&](bool nonzero) {
                std::vector<int> c(static_cast<size_t>(deg(rng)) + 1);
                for (auto& x : c) x = coeff(rng);
                if (nonzero && Poly(p, c).is_zero()) c[0] = 1;
                return Poly(p, c);
            };
            Poly a = rand_poly(false), b = rand_poly(true);
            auto [q, r] = poly_divrem(poly_mul(a, b), b);
            CHECK(r.is_zero());
            CHECK(q == a);
        }
    }
}

TEST_CASE("default modulus table is primitive for every supported entry") {
    // constructing the field runs the order check; this walks the table
    for (int e = 1; e <= 20; ++e) CHECK(Field::get(2, e).order() == (1u << e));
    for (int e = 1; e <= 12; ++e) Field::get(3, e);
    for (int e = 1; e <= 8; ++e) Field::get(5, e);
    for (int e = 1; e <= 7; ++e) Field::get(7, e);
    // a (p, e) pair outside the table goes through the deterministic search
    const Field& f = Field::get(11, 2);
    CHECK(f.element_order(f.alpha()) == 120);
}

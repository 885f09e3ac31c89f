#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dfc/bigint.hpp"
#include "dfc/errors.hpp"
#include "dfc/galois.hpp"
#include "dfc/weight_distribution.hpp"

namespace dfc {

struct CyclicMeta {
    Poly generator;
    // coordinate convention, e.g. "coordinate i <-> coefficient of x^i"
    std::string convention;
};

// A q-ary [v, k] linear code, q prime.  The generator basis is kept in
// reduced row echelon form, so equal codes have equal bases and
// enumeration order is reproducible.
struct LinearCode {
    int q = 2;
    int length = 0;  // v
    int dim = 0;     // k
    std::vector<std::vector<uint8_t>> basis;  // dim rows of length symbols
    std::optional<CyclicMeta> cyclic;
};

// Build a code from arbitrary spanning rows (they are RREF-reduced; the
// row space, not the rows, is what defines the code).
LinearCode make_code(int q, int length, const std::vector<std::vector<uint8_t>>& rows);

// Cyclic code of length v over GF(q) with generator polynomial g.
// Coordinate i of a codeword is the coefficient of x^i.
LinearCode cyclic_code(int q, int v, const Poly& g);

// Binary Reed-Muller code RM(r, m): length 2^m, evaluation vectors of all
// monomials of degree <= r.  Point order: point x is the integer
// 0..2^m-1, bit j of x = value of variable x_j.
LinearCode reed_muller(int r, int m);

// The cyclic code of length (q^m-1)/(q-1) over GF(q) generated by the
// minimal polynomial of beta = alpha^{q-1}.  Equivalent to the Hamming
// code when gcd(q-1, m) = 1.
LinearCode hamming_like_code(int q, int m);

LinearCode dual(const LinearCode& c);

// Append one coordinate carrying the negated coordinate sum, so every
// extended codeword sums to zero (the parity bit when q = 2).
LinearCode extend(const LinearCode& c);

bool same_row_space(const LinearCode& a, const LinearCode& b);

// encode a message (dim symbols) to a codeword (length symbols)
std::vector<uint8_t> encode(const LinearCode& c, const std::vector<uint8_t>& message);

struct PerfectCheck {
    bool perfect = false;
    int packing_radius = 0;
};

// Sphere-packing equality for a code of known odd minimum distance.
PerfectCheck is_perfect(const LinearCode& c, int min_distance);

}  // namespace dfc

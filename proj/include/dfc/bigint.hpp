#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <string>

namespace dfc {

// Exact integer. Weight counts and closed-form evaluations routinely
// exceed 64 bits (e.g. q^kappa for kappa > 63), so everything that could
// grow goes through this type.
using Int = mpz_class;

inline Int binom(uint64_t n, uint64_t k) {
    if (k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Int int_pow(uint64_t base, uint64_t e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

// Exact quotient; the caller promises divisibility holds, we verify it.
// Returns false on non-divisible input instead of truncating.
inline bool divexact(Int& out, const Int& a, const Int& b) {
    if (b == 0 || a % b != 0) return false;
    out = a / b;
    return true;
}

inline std::string to_decimal(const Int& x) { return x.get_str(); }

}  // namespace dfc

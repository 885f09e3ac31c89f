#pragma once

#include <stdexcept>
#include <string>

namespace dfc {

// Base of all library errors.  The three direct subclasses map onto the
// CLI exit codes: DomainError -> 1, BudgetError -> 2, ConsistencyError -> 3.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : Error {
    using Error::Error;
};

struct BudgetError : Error {
    using Error::Error;
};

// An internal invariant failed: some input that was supposed to be exact
// (a weight distribution, a closed-form evaluation) is not.
struct ConsistencyError : Error {
    using Error::Error;
};

#define DFC_ERROR(NAME, BASE)                 \
    struct NAME : BASE {                      \
        using BASE::BASE;                     \
    }

// galois
DFC_ERROR(NotPrime, DomainError);
DFC_ERROR(NotPrimitivePolynomial, DomainError);
DFC_ERROR(UnsupportedSize, DomainError);
DFC_ERROR(MixedFields, DomainError);
DFC_ERROR(DivisionByZero, DomainError);
DFC_ERROR(NotASubfield, DomainError);
DFC_ERROR(DivisionByZeroPoly, DomainError);
DFC_ERROR(MixedBase, DomainError);

// codes
DFC_ERROR(GeneratorDoesNotDivide, DomainError);
DFC_ERROR(NonCoprimeLength, DomainError);
DFC_ERROR(BadOrder, DomainError);
DFC_ERROR(UnsupportedField, DomainError);
DFC_ERROR(BudgetExceeded, BudgetError);
DFC_ERROR(EvenMinimumDistance, DomainError);

// spectra
DFC_ERROR(InconsistentInput, ConsistencyError);
DFC_ERROR(NonIntegralResult, ConsistencyError);
DFC_ERROR(OutOfDomain, DomainError);

// am_checker
DFC_ERROR(InconsistentPair, ConsistencyError);
DFC_ERROR(StrengthTooLarge, DomainError);

// design_theory
DFC_ERROR(MixedBlockSizes, DomainError);
DFC_ERROR(StrengthNotBelowBlockSize, DomainError);
DFC_ERROR(DuplicateBlocks, DomainError);
DFC_ERROR(NonIntegralLambda, ConsistencyError);
DFC_ERROR(NonIntegralDelta, ConsistencyError);
DFC_ERROR(StrengthBelowTwo, DomainError);

// constructions
DFC_ERROR(DegenerateExponent, DomainError);

#undef DFC_ERROR

}  // namespace dfc

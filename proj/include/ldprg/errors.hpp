#pragma once

#include <stdexcept>
#include <string>

namespace ldprg {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct DescriptorMismatch : Error {
    DescriptorMismatch() : Error("operands belong to different fields") {}
};

struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& what) : Error("budget exceeded: " + what) {}
};

struct ArityMismatch : Error {
    explicit ArityMismatch(const std::string& what) : Error("arity mismatch: " + what) {}
};

struct NonMultilinearSubstituent : Error {
    NonMultilinearSubstituent() : Error("substituent is not multilinear in w") {}
};

struct BothConstant : Error {
    BothConstant() : Error("sylvester matrix requires deg f + deg g >= 1") {}
};

struct ZeroPolynomial : Error {
    ZeroPolynomial() : Error("operation undefined for the zero polynomial") {}
};

struct NonMonic : Error {
    NonMonic() : Error("polynomial must be monic") {}
};

struct CharacteristicTwo : Error {
    CharacteristicTwo() : Error("characteristic 2 is not supported") {}
};

struct SeedOutOfRange : Error {
    SeedOutOfRange() : Error("seed exceeds the seed space") {}
};

struct InsufficientRandomness : Error {
    InsufficientRandomness() : Error("bit stream exhausted") {}
};

struct PrimeFieldInput : Error {
    PrimeFieldInput() : Error("strict trace requires a proper extension field") {}
};

struct CharTooSmall : Error {
    explicit CharTooSmall(const std::string& what) : Error("CharTooSmall: " + what) {}
};

struct PrimeFieldParams : Error {
    PrimeFieldParams() : Error("trace generator requires a tower base field") {}
};

struct RejectionTimeout : Error {
    explicit RejectionTimeout(const std::string& what) : Error("rejection sampling timed out: " + what) {}
};

}  // namespace ldprg

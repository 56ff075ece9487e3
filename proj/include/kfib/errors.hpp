#pragma once

#include <stdexcept>
#include <string>

namespace kfib {

struct DivisorZero : std::invalid_argument {
    DivisorZero() : std::invalid_argument("exact division by the zero polynomial") {}
};

struct BothZero : std::invalid_argument {
    BothZero() : std::invalid_argument("gcd of two zero polynomials") {}
};

struct KTooSmall : std::invalid_argument {
    explicit KTooSmall(long k)
        : std::invalid_argument("order k must be >= 2, got " + std::to_string(k)) {}
};

struct VanishingIndex : std::domain_error {
    VanishingIndex(long n, long k)
        : std::domain_error("F_{" + std::to_string(n) + "," + std::to_string(k) +
                            "} vanishes identically") {}
};

struct MonomialIndex : std::domain_error {
    MonomialIndex(long n, long k)
        : std::domain_error("F_{" + std::to_string(n) + "," + std::to_string(k) +
                            "} is a monomial; no second-highest term") {}
};

struct IndexOutOfRange : std::out_of_range {
    explicit IndexOutOfRange(const std::string& what) : std::out_of_range(what) {}
};

struct StructureViolation : std::logic_error {
    explicit StructureViolation(const std::string& what) : std::logic_error(what) {}
};

struct ConvergenceFailure : std::runtime_error {
    ConvergenceFailure(long n, long k, double residual)
        : std::runtime_error("root finding for (n=" + std::to_string(n) +
                             ", k=" + std::to_string(k) +
                             ") stalled at residual " + std::to_string(residual)),
          n(n), k(k), residual(residual) {}
    long n;
    long k;
    double residual;
};

struct ParseError : std::invalid_argument {
    explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace kfib

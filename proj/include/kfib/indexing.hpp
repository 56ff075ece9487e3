#pragma once

#include <optional>
#include <vector>

#include "kfib/int_poly.hpp"

namespace kfib {

/// Index arithmetic bundle for the pair (n, k).
///
/// For n <= 0:  k*q + r = |n| + 1, and the polynomial vanishes
/// identically iff q < r. For n >= 2:  k*(q+1) - r = n - 1. The lone
/// exception n = 1 carries q = r = 0 (the constant polynomial 1).
/// degree is empty exactly when the polynomial vanishes.
struct IndexProfile {
    long n = 0;
    long k = 0;
    long q = 0;
    long r = 0;
    long rho = 0;
    bool vanishes = false;
    std::optional<long> degree;
};

IndexProfile profile(long n, long k);  // throws KTooSmall

/// One block of identically-vanishing indices, as an n-interval [lo, hi].
struct IndexInterval {
    long lo = 0;
    long hi = 0;
    long count() const { return hi - lo + 1; }
};

/// The k(k-1)/2 vanishing indices n <= 0, grouped into their blocks
/// |n| in [s(k+1), (s+1)k-2], s = 0..k-2, ordered by s.
std::vector<IndexInterval> vanishing_indices(long k);

struct Term {
    Int coeff;
    long exponent = 0;
};

/// Lowest nonzero term of F_{n,k}. Valid for all nonvanishing indices;
/// throws VanishingIndex otherwise.
Term lowest_term(long n, long k);

/// Highest term of F_{n,k} for n <= 0. Throws VanishingIndex.
Term highest_term(long n, long k);

/// Second-highest term of F_{n,k} for n <= 0. Requires a non-monomial:
/// |n| >= 2k-1 when r = 0, |n| >= k(r+1)-1 when r >= 1.
/// Throws VanishingIndex / MonomialIndex.
Term second_highest_term(long n, long k);

}  // namespace kfib

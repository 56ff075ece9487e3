#pragma once

#include <vector>

#include "kfib/int_poly.hpp"
#include "kfib/recurrence.hpp"

namespace kfib {

/// The structural factorization F_{n,k} = x^r (x^k+1)^rho Q(x^k), with Q
/// stored as a polynomial in xi = x^k. For a nonvanishing index:
/// Q(0) != 0 and Q is not divisible by (xi + 1); reconstruction is exact.
struct Factorization {
    long n = 0;
    long k = 0;
    long r = 0;
    long rho = 0;
    IntPoly Q_xi;
};

/// Extracts the factorization by exact division, validating the exponent
/// stride first and the measured rho against the index-formula
/// prediction. Throws VanishingIndex / StructureViolation.
Factorization factorize(SequenceCache& cache, long n);

/// x^r (x^k+1)^rho Q(x^k), expanded.
IntPoly reconstruct(const Factorization& f);

/// F_{n,k} = x^{k+1-n} (x^k+1)^{n-2} for n in [2, k+1].
/// Throws IndexOutOfRange outside that window.
IntPoly closed_form_small(long n, long k);

/// Whether F_{-sk,k} equals -x (x^k+1)^{s-2} (x^k+s) exactly.
/// Holds for s in [2, k+1]; callers probe s = k+2 to watch it fail.
bool check_xks_family(SequenceCache& cache, long s);

/// The period-(k+1) congruence: F_{n+k+1} * x^{k+1} == F_n mod (x^k+1).
/// Throws VanishingIndex when either index vanishes.
bool period_shift_identity(SequenceCache& cache, long n);

/// A nonvanishing polynomial with zero interior coefficients in its
/// exponent progression. Missing exponents are reported relative to the
/// x^r prefactor (the form the polynomial is quoted in).
struct ExceptionalGap {
    long n = 0;
    std::vector<long> missing;
};

/// Scans n in [n_min, n_max] (both <= 0) for exceptional gaps.
std::vector<ExceptionalGap> scan_vanishing_coefficients(SequenceCache& cache, long n_min,
                                                        long n_max);

}  // namespace kfib

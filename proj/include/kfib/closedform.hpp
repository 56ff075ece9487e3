#pragma once

#include <vector>

#include "kfib/int_poly.hpp"

namespace kfib {

/// F_{n,k} for n <= 0 as the signed multinomial sum over compositions
/// j_1 + 2 j_2 + ... + k j_k = |n| + 1 - k with the exponent of x
/// determined by j_k alone. Exactly zero at vanishing indices.
IntPoly multinomial_neg(long n, long k);

/// Coefficients of w^0 .. w^order of the negative-index generating
/// function  w^{k-1}(1 - x w) / (1 - (1 + x^k - x w) w^k).
/// The coefficient of w^{|n|} equals F_{n,k} for n <= 0.
std::vector<IntPoly> genfun_series_neg(long k, long order);

/// Elementary symmetric polynomials sigma_1..sigma_N of the roots of
/// P_{n,k}(xi), from the closed-form coefficient expressions.
/// N = floor(d_{n,k} / k) equals the degree of P in xi.
struct SymmetricSpec {
    long n = 0;
    long k = 0;
    long N = 0;
    std::vector<Rat> sigma;  // sigma[h-1] = sigma_h
};

SymmetricSpec sigma_pos(long n, long k);  // n >= 3
SymmetricSpec sigma_neg(long n, long k);  // n <= 0; throws VanishingIndex

/// Closed forms for the sum and product of the roots of P_{n,k}(xi).
Rat sum_of_roots_formula(long n, long k);
Rat product_of_roots_formula(long n, long k);

/// Vieta ratios (-1)^h c_{N-h} / c_N read off an exact xi-polynomial;
/// the independent side of the sigma cross-checks.
std::vector<Rat> vieta_sigma_exact(const IntPoly& p_xi);

}  // namespace kfib

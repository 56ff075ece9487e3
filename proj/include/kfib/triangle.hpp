#pragma once

#include <utility>
#include <vector>

#include "kfib/int_poly.hpp"

namespace kfib {

/// Entry (n, j) of the left-justified k-nomial triangle, n >= 0:
/// the coefficient of x^j in (1 + x + ... + x^{k-1})^n.
/// Zero for j outside [0, (k-1)n].
Int coeff_pos(long k, long n, long j);

/// Entry (m, j) for a negative row m < 0: the coefficient of x^j in the
/// power-series expansion of (1 + x + ... + x^{k-1})^{-|m|}.
Int coeff_neg(long k, long m, long j);

/// One row of the triangle. Positive rows are finite with
/// (k-1)m + 1 columns; negative rows are series rows generated to any
/// requested width.
struct TriangleRow {
    long k = 0;
    long m = 0;
    std::vector<Int> coeffs;  // column j holds coeffs[j]

    static TriangleRow make(long k, long m, long cols = -1);
};

/// F_{n,k} assembled from positive triangle rows (n >= 1).
IntPoly assemble_pos(long k, long n);

/// F_{n,k} assembled along the negative-row diagonal (n <= 0); exactly
/// zero at vanishing indices.
IntPoly assemble_neg(long k, long n);

/// The (row, column) cells whose entries are the coefficients of
/// F_{n,k} for n <= 0: start at (-1, |n|-k+1), then step down one row
/// and left k columns while the column stays nonnegative. Column = power
/// of x.
std::vector<std::pair<long, long>> diagonal_cells(long k, long n);

}  // namespace kfib

#include "kfib/triangle.hpp"

namespace kfib {

Int coeff_pos(long k, long n, long j) {
    if (k < 2) throw KTooSmall(k);
    if (n < 0 || j < 0 || j > (k - 1) * n) return 0;
    if (n == 0) return j == 0 ? 1 : 0;
    // C_k(n,j) = sum_s (-1)^s binom(n,s) binom(n+j-ks-1, n-1)
    Int acc = 0;
    for (long s = 0; s <= j / k; ++s) {
        Int term = binomial(n, s) * binomial(n + j - k * s - 1, n - 1);
        acc += (s % 2 == 0) ? term : -term;
    }
    return acc;
}

Int coeff_neg(long k, long m, long j) {
    if (k < 2) throw KTooSmall(k);
    if (m >= 0) throw IndexOutOfRange("coeff_neg requires a negative row index");
    if (j < 0) return 0;
    const long a = -m;  // |m|
    // C_k(m,j) = sum_s (-1)^{j-ks} binom(|m|, j-ks) binom(|m|+s-1, |m|-1)
    Int acc = 0;
    for (long s = 0; s <= j / k; ++s) {
        Int term = binomial(a, j - k * s) * binomial(a + s - 1, a - 1);
        acc += ((j - k * s) % 2 == 0) ? term : -term;
    }
    return acc;
}

TriangleRow TriangleRow::make(long k, long m, long cols) {
    if (k < 2) throw KTooSmall(k);
    TriangleRow row;
    row.k = k;
    row.m = m;
    long width;
    if (m >= 0) {
        width = (k - 1) * m + 1;
    } else {
        if (cols < 0) throw IndexOutOfRange("negative rows need an explicit column count");
        width = cols;
    }
    if (cols >= 0 && m >= 0) width = cols;
    row.coeffs.reserve(static_cast<std::size_t>(width));
    for (long j = 0; j < width; ++j)
        row.coeffs.push_back(m >= 0 ? coeff_pos(k, m, j) : coeff_neg(k, m, j));
    return row;
}

IntPoly assemble_pos(long k, long n) {
    if (k < 2) throw KTooSmall(k);
    if (n < 1) throw IndexOutOfRange("assemble_pos requires n >= 1");
    // F = sum_h C_k(n-h-1, h) x^{(k-1)(n-1)-hk}
    IntPoly f;
    const long d = (k - 1) * (n - 1);
    for (long h = 0; h <= d / k; ++h) f.add_term(d - h * k, coeff_pos(k, n - h - 1, h));
    return f;
}

IntPoly assemble_neg(long k, long n) {
    if (k < 2) throw KTooSmall(k);
    if (n > 0) throw IndexOutOfRange("assemble_neg requires n <= 0");
    // F = sum_{j_k} C_k(-(1+j_k), |n|+1-k(1+j_k)) x^{|n|+1-k(1+j_k)}
    IntPoly f;
    const long m = -n;
    for (long jk = 0; jk <= (m + 1 - k) / k && m + 1 - k >= 0; ++jk) {
        long e = m + 1 - k * (1 + jk);
        f.add_term(e, coeff_neg(k, -(1 + jk), e));
    }
    return f;
}

std::vector<std::pair<long, long>> diagonal_cells(long k, long n) {
    if (k < 2) throw KTooSmall(k);
    std::vector<std::pair<long, long>> cells;
    if (n > 0) return cells;
    long row = -1;
    long col = -n - k + 1;
    while (col >= 0) {
        cells.emplace_back(row, col);
        row -= 1;
        col -= k;
    }
    return cells;
}

}  // namespace kfib

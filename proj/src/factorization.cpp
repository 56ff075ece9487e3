#include "kfib/factorization.hpp"

#include <algorithm>
#include <string>

#include "kfib/indexing.hpp"

namespace kfib {

Factorization factorize(SequenceCache& cache, long n) {
    const long k = cache.k();
    IndexProfile p = profile(n, k);
    if (p.vanishes) throw VanishingIndex(n, k);
    const IntPoly& f = cache.at(n);

    // A wrong-stride compression would corrupt every downstream root
    // computation, so validate the congruence before substituting.
    if (f.lowest_exponent() != p.r || !exponents_congruent(f, p.r, k))
        throw StructureViolation("exponents of F_{" + std::to_string(n) + "," +
                                 std::to_string(k) + "} are not congruent to r mod k");

    IntPoly p_xi = to_xi(mul_monomial(f, 1, -p.r), k);

    // Measure the (xi+1) multiplicity by exact division; the prediction
    // from the index formula must agree.
    const IntPoly xi_plus_1 = parse_poly("1 + x");
    long measured = 0;
    IntPoly q = p_xi;
    while (true) {
        auto next = divide_exact(q, xi_plus_1);
        if (!next) break;
        q = std::move(*next);
        ++measured;
    }
    if (measured != p.rho)
        throw StructureViolation("measured rho " + std::to_string(measured) +
                                 " != predicted " + std::to_string(p.rho) + " at (n=" +
                                 std::to_string(n) + ", k=" + std::to_string(k) + ")");
    if (q.coeff(0) == 0)
        throw StructureViolation("Q(0) = 0 at (n=" + std::to_string(n) + ", k=" +
                                 std::to_string(k) + ")");

    Factorization out;
    out.n = n;
    out.k = k;
    out.r = p.r;
    out.rho = measured;
    out.Q_xi = std::move(q);
    return out;
}

IntPoly reconstruct(const Factorization& f) {
    IntPoly xk_plus_1 = add(IntPoly::constant(1), IntPoly::monomial(1, f.k));
    IntPoly body = mul(pow(xk_plus_1, static_cast<unsigned long>(f.rho)), from_xi(f.Q_xi, f.k));
    return mul_monomial(body, 1, f.r);
}

IntPoly closed_form_small(long n, long k) {
    if (k < 2) throw KTooSmall(k);
    if (n < 2 || n > k + 1)
        throw IndexOutOfRange("closed_form_small requires 2 <= n <= k+1");
    IntPoly xk_plus_1 = add(IntPoly::constant(1), IntPoly::monomial(1, k));
    return mul_monomial(pow(xk_plus_1, static_cast<unsigned long>(n - 2)), 1, k + 1 - n);
}

bool check_xks_family(SequenceCache& cache, long s) {
    const long k = cache.k();
    if (s < 2) throw IndexOutOfRange("check_xks_family requires s >= 2");
    IntPoly xk_plus_1 = add(IntPoly::constant(1), IntPoly::monomial(1, k));
    IntPoly xk_plus_s = add(IntPoly::constant(s), IntPoly::monomial(1, k));
    IntPoly expected =
        mul_monomial(mul(pow(xk_plus_1, static_cast<unsigned long>(s - 2)), xk_plus_s), -1, 1);
    return cache.at(-s * k) == expected;
}

bool period_shift_identity(SequenceCache& cache, long n) {
    const long k = cache.k();
    if (profile(n, k).vanishes) throw VanishingIndex(n, k);
    if (profile(n + k + 1, k).vanishes) throw VanishingIndex(n + k + 1, k);
    IntPoly shifted = mul_monomial(cache.at(n + k + 1), 1, k + 1);
    IntPoly diff = sub(shifted, cache.at(n));
    return reduce_mod_xk_plus_1(diff, k).is_zero();
}

std::vector<ExceptionalGap> scan_vanishing_coefficients(SequenceCache& cache, long n_min,
                                                        long n_max) {
    if (n_min > n_max || n_max > 0)
        throw IndexOutOfRange("scan range must satisfy n_min <= n_max <= 0");
    const long k = cache.k();
    std::vector<ExceptionalGap> found;
    for (long n = n_max; n >= n_min; --n) {
        const IntPoly& f = cache.at(n);
        if (f.is_zero()) continue;
        const long lo = f.lowest_exponent();
        const long hi = *f.degree();
        ExceptionalGap gap;
        gap.n = n;
        for (long e = lo + k; e < hi; e += k)
            if (f.coeff(e) == 0) gap.missing.push_back(e - lo);
        if (!gap.missing.empty()) found.push_back(std::move(gap));
    }
    return found;
}

}  // namespace kfib

#include "kfib/indexing.hpp"

namespace kfib {

IndexProfile profile(long n, long k) {
    if (k < 2) throw KTooSmall(k);
    IndexProfile p;
    p.n = n;
    p.k = k;
    if (n > 0) {
        p.q = n == 1 ? 0 : floor_div(n - 2, k);
        p.r = mod_floor((k - 1) * (n - 1), k);
        p.rho = mod_floor(mod_floor(n - 2, k + 1), k);
        p.vanishes = false;
        p.degree = (k - 1) * (n - 1);
    } else {
        const long m = -n;  // |n|
        p.q = (m + 1) / k;
        p.r = (m + 1) % k;
        p.rho = mod_floor(mod_floor(k * m - 2, k + 1), k);
        p.vanishes = p.q < p.r;
        if (!p.vanishes) p.degree = (p.r == 0) ? m + 1 - k : m + 1 - k * p.r;
    }
    return p;
}

std::vector<IndexInterval> vanishing_indices(long k) {
    if (k < 2) throw KTooSmall(k);
    std::vector<IndexInterval> blocks;
    for (long s = 0; s <= k - 2; ++s) {
        long lo_abs = s * (k + 1);
        long hi_abs = (s + 1) * k - 2;
        blocks.push_back({-hi_abs, -lo_abs});
    }
    return blocks;
}

Term lowest_term(long n, long k) {
    IndexProfile p = profile(n, k);
    if (p.vanishes) throw VanishingIndex(n, k);
    if (n > 0) return {binomial(p.q + p.r, p.r), p.r};
    Int c = binomial(p.q, p.r);
    if (p.r % 2 != 0) c = -c;
    return {c, p.r};
}

Term highest_term(long n, long k) {
    IndexProfile p = profile(n, k);
    if (n > 0 || p.vanishes) throw VanishingIndex(n, k);
    const long m = -n;
    if (p.r == 0) return {Int(1), m + 1 - k};
    Int c = binomial(p.q - 1, p.r - 1);
    if (p.r % 2 != 0) c = -c;
    return {c, m + 1 - k * p.r};
}

Term second_highest_term(long n, long k) {
    IndexProfile p = profile(n, k);
    if (n > 0 || p.vanishes) throw VanishingIndex(n, k);
    const long m = -n;
    if (p.r == 0) {
        if (m < 2 * k - 1) throw MonomialIndex(n, k);
        Int c = (k == 2) ? Int(2 * p.q - 3) : Int(p.q - 1);
        return {c, m + 1 - 2 * k};
    }
    if (m < k * (p.r + 1) - 1) throw MonomialIndex(n, k);
    Int c = Int(p.r + 1) * binomial(p.q - 1, p.r);
    if (p.r % 2 != 0) c = -c;
    return {c, m + 1 - k * (p.r + 1)};
}

}  // namespace kfib

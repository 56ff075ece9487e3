#include "kfib/closedform.hpp"

#include <vector>

#include "kfib/indexing.hpp"
#include "kfib/triangle.hpp"

namespace kfib {

namespace {

class FactorialTable {
public:
    const Int& operator()(long n) {
        while (static_cast<long>(table_.size()) <= n)
            table_.push_back(table_.back() * Int(table_.size()));
        return table_[static_cast<std::size_t>(n)];
    }

private:
    std::vector<Int> table_{1};
};

}  // namespace

IntPoly multinomial_neg(long n, long k) {
    if (k < 2) throw KTooSmall(k);
    if (n > 0) throw IndexOutOfRange("multinomial_neg requires n <= 0");
    const long target = -n + 1 - k;  // |n| + 1 - k
    IntPoly f;
    if (target < 0) return f;
    FactorialTable fact;
    std::vector<long> mults(static_cast<std::size_t>(k), 0);
    // j_k is outermost: it alone fixes the exponent |n|+1-k(1+j_k).
    for (long jk = 0; k * jk <= target; ++jk) {
        mults[static_cast<std::size_t>(k - 1)] = jk;
        Int coeff_acc = 0;
        // remaining parts j_{k-1}..j_1 with sum i*j_i = target - k*jk
        auto recurse = [&](auto&& self, long part, long remaining) -> void {
            if (part == 1) {
                mults[0] = remaining;
                long total = 0;
                for (long m : mults) total += m;
                Int denom = 1;
                for (long m : mults) denom *= fact(m);
                Int coef = fact(total) / denom;
                if ((total - jk) % 2 != 0) coef = -coef;
                coeff_acc += coef;
                mults[0] = 0;
                return;
            }
            for (long j = 0; part * j <= remaining; ++j) {
                mults[static_cast<std::size_t>(part - 1)] = j;
                self(self, part - 1, remaining - part * j);
            }
            mults[static_cast<std::size_t>(part - 1)] = 0;
        };
        recurse(recurse, k - 1, target - k * jk);
        f.add_term(target - k * jk, coeff_acc);
    }
    return f;
}

std::vector<IntPoly> genfun_series_neg(long k, long order) {
    if (k < 2) throw KTooSmall(k);
    if (order < 0) throw IndexOutOfRange("genfun_series_neg requires order >= 0");
    std::vector<IntPoly> series(static_cast<std::size_t>(order) + 1);
    // G = sum_s w^{ks+k-1} (1 - x w) (1 + x^k - x w)^s, truncated at order.
    // bs holds (1 + x^k - x w)^s as a w-polynomial with IntPoly coefficients.
    const IntPoly b0 = add(IntPoly::constant(1), IntPoly::monomial(1, k));  // 1 + x^k
    std::vector<IntPoly> bs{IntPoly::constant(1)};
    for (long s = 0; k * s + k - 1 <= order; ++s) {
        const long base = k * s + k - 1;
        // coefficient of w^{base+t}: bs[t] - x*bs[t-1]
        for (long t = 0; t <= s + 1 && base + t <= order; ++t) {
            IntPoly c;
            if (t < static_cast<long>(bs.size())) c = bs[static_cast<std::size_t>(t)];
            if (t >= 1 && t - 1 < static_cast<long>(bs.size()))
                c = add(c, mul_monomial(bs[static_cast<std::size_t>(t - 1)], -1, 1));
            series[static_cast<std::size_t>(base + t)] =
                add(series[static_cast<std::size_t>(base + t)], c);
        }
        std::vector<IntPoly> next(bs.size() + 1);
        for (std::size_t t = 0; t < bs.size(); ++t) {
            next[t] = add(next[t], mul(bs[t], b0));
            next[t + 1] = add(next[t + 1], mul_monomial(bs[t], -1, 1));
        }
        bs = std::move(next);
    }
    return series;
}

SymmetricSpec sigma_pos(long n, long k) {
    if (k < 2) throw KTooSmall(k);
    if (n < 3) throw IndexOutOfRange("sigma_pos requires n >= 3");
    IndexProfile p = profile(n, k);
    SymmetricSpec spec;
    spec.n = n;
    spec.k = k;
    spec.N = *p.degree / k;
    spec.sigma.reserve(static_cast<std::size_t>(spec.N));
    for (long h = 1; h <= spec.N; ++h) {
        Int c = coeff_pos(k, n - h - 1, h);
        if (h % 2 != 0) c = -c;
        spec.sigma.push_back(Rat(c));
    }
    return spec;
}

SymmetricSpec sigma_neg(long n, long k) {
    if (k < 2) throw KTooSmall(k);
    if (n > 0) throw IndexOutOfRange("sigma_neg requires n <= 0");
    IndexProfile p = profile(n, k);
    if (p.vanishes) throw VanishingIndex(n, k);
    const long m = -n;
    SymmetricSpec spec;
    spec.n = n;
    spec.k = k;
    spec.N = *p.degree / k;
    spec.sigma.reserve(static_cast<std::size_t>(spec.N));
    const Int lead_abs = binomial(p.q - 1, p.r - 1);  // only used when r >= 1
    for (long h = 1; h <= spec.N; ++h) {
        if (p.r == 0) {
            Int c = coeff_neg(k, -(h + 1), m + 1 - k * (h + 1));
            if (h % 2 != 0) c = -c;
            spec.sigma.push_back(Rat(c));
        } else {
            Int c = coeff_neg(k, -(h + p.r), m + 1 - k * (h + p.r));
            if ((h + p.r) % 2 != 0) c = -c;
            spec.sigma.push_back(make_rat(c, lead_abs));
        }
    }
    return spec;
}

Rat sum_of_roots_formula(long n, long k) {
    IndexProfile p = profile(n, k);
    if (p.vanishes) throw VanishingIndex(n, k);
    if (n > 0) return Rat(-(n - 2));
    if (p.r == 0) return k == 2 ? Rat(-(2 * p.q - 3)) : Rat(-(p.q - 1));
    return make_rat(Int(-(p.r + 1) * (p.q - p.r)), Int(p.r));
}

Rat product_of_roots_formula(long n, long k) {
    IndexProfile p = profile(n, k);
    if (p.vanishes) throw VanishingIndex(n, k);
    const long N = *p.degree / k;
    if (n > 0) {
        Int v = binomial(p.q + p.r, p.r);
        if (N % 2 != 0) v = -v;
        return Rat(v);
    }
    if (p.r == 0) return Rat(N % 2 == 0 ? 1 : -1);
    Rat v = make_rat(Int(p.q), Int(p.r));
    if (N % 2 != 0) v = -v;
    return v;
}

std::vector<Rat> vieta_sigma_exact(const IntPoly& p_xi) {
    std::vector<Rat> sigma;
    if (p_xi.is_zero() || *p_xi.degree() == 0) return sigma;
    const long N = *p_xi.degree();
    const Int& lead = p_xi.leading_coeff();
    sigma.reserve(static_cast<std::size_t>(N));
    for (long h = 1; h <= N; ++h) {
        Rat v = make_rat(p_xi.coeff(N - h), lead);
        if (h % 2 != 0) v = -v;
        sigma.push_back(v);
    }
    return sigma;
}

}  // namespace kfib

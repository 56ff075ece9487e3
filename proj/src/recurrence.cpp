#include "kfib/recurrence.hpp"

#include <stdexcept>

namespace kfib {

SequenceCache::SequenceCache(long k) : k_(k) {
    if (k < 2) throw KTooSmall(k);
    computed_[1] = IntPoly::constant(1);
    for (long n = 0; n >= -(k - 2); --n) computed_[n] = IntPoly();
    lo_ = -(k - 2);
    hi_ = 1;
}

const IntPoly& SequenceCache::at(long n) {
    while (hi_ < n) {
        // F_m = x^{k-1} F_{m-1} + x^{k-2} F_{m-2} + ... + F_{m-k}
        long m = hi_ + 1;
        IntPoly acc;
        for (long j = 1; j <= k_; ++j)
            acc = add(acc, mul_monomial(computed_.at(m - j), 1, k_ - j));
        computed_.emplace(m, std::move(acc));
        hi_ = m;
    }
    while (lo_ > n) {
        // F_m = F_{m+k} - sum_{j=1}^{k-1} x^j F_{m+j}
        long m = lo_ - 1;
        IntPoly acc = computed_.at(m + k_);
        for (long j = 1; j <= k_ - 1; ++j)
            acc = sub(acc, mul_monomial(computed_.at(m + j), 1, j));
        computed_.emplace(m, std::move(acc));
        lo_ = m;
    }
    return computed_.at(n);
}

Int SequenceCache::value_at_one(long n) { return eval_int(at(n), 1); }

const IntPoly& poly_up(SequenceCache& cache, long n) {
    if (n < 1) throw std::invalid_argument("poly_up requires n >= 1");
    return cache.at(n);
}

const IntPoly& poly_down(SequenceCache& cache, long n) {
    if (n > 0) throw std::invalid_argument("poly_down requires n <= 0");
    return cache.at(n);
}

Int number_at_one(SequenceCache& cache, long n) { return cache.value_at_one(n); }

}  // namespace kfib

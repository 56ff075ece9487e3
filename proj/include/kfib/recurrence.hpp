#pragma once

#include <map>

#include "kfib/int_poly.hpp"

namespace kfib {

/// Ground-truth oracle for F_{n,k}: iterates the defining recurrence
/// upward (n >= 1) or downward (n <= 0) from the seed block
/// F_1 = 1, F_0 = F_{-1} = ... = F_{-(k-2)} = 0, caching every entry.
///
/// The cache fills a contiguous index range outward from the seeds, so a
/// random access costs the linear fill up to that index once. Single
/// writer; concurrent readers are safe between fills.
class SequenceCache {
public:
    explicit SequenceCache(long k);  // throws KTooSmall

    long k() const { return k_; }

    /// F_{n,k}, computing and caching as needed.
    const IntPoly& at(long n);

    /// Exact F_{n,k}(1); equals the k-generalized Fibonacci number with
    /// index shifted by k-2.
    Int value_at_one(long n);

    long filled_low() const { return lo_; }
    long filled_high() const { return hi_; }

private:
    long k_;
    long lo_;
    long hi_;
    std::map<long, IntPoly> computed_;
};

/// F_{n,k} for n >= 1 via the upward recurrence.
const IntPoly& poly_up(SequenceCache& cache, long n);

/// F_{n,k} for n <= 0 via the downward recurrence; exactly zero at
/// vanishing indices.
const IntPoly& poly_down(SequenceCache& cache, long n);

Int number_at_one(SequenceCache& cache, long n);

}  // namespace kfib

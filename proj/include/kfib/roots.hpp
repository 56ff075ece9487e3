#pragma once

#include <complex>
#include <string>
#include <vector>

#include "kfib/factorization.hpp"
#include "kfib/recurrence.hpp"

namespace kfib {

using Cplx = std::complex<double>;

/// All complex roots of a polynomial with double coefficients (ascending,
/// nonzero leading coefficient, degree >= 1), by Aberth-Ehrlich
/// simultaneous iteration. The contract is the residual bound: on return
/// max_j |p(z_j)| / sum_i |c_i| |z_j|^i <= tol, else ConvergenceFailure.
struct AberthResult {
    std::vector<Cplx> roots;
    double residual = 0.0;
    int iterations = 0;
};

AberthResult aberth_roots(const std::vector<double>& coeffs, double tol, long n = 0,
                          long k = 0);

/// Coefficients of p scaled by 1/max|c_i| (exact rational, then rounded),
/// so magnitudes beyond double range stay representable.
std::vector<double> normalized_coeffs(const IntPoly& p);

/// Numeric root analysis of P_{n,k}(xi). The (xi+1)^rho factor is
/// deflated exactly before solving, so the numeric stage only ever sees
/// simple roots.
struct RootReport {
    long n = 0;
    long k = 0;
    std::vector<Cplx> xi_roots;        // with multiplicity
    double zeta = 0.0;                 // max |xi root|, 0 if none
    std::vector<double> x_real_roots;  // real x-roots of F, excluding 0
    double residual = 0.0;
    long x_zero_multiplicity = 0;      // = r
    long xi_minus_one_multiplicity = 0;  // = rho
};

RootReport find_roots(SequenceCache& cache, long n, double tol);

/// Real-root classification with the parity claims checked:
/// even k -> no nonzero real roots; odd k, n > 0 -> all in [-1, 0];
/// odd k, n <= 0 -> none in the open interval (-1, 0).
/// Violations are findings, not errors.
struct RealRootClassification {
    long n = 0;
    long k = 0;
    std::vector<double> real_roots;  // excluding 0; -1 listed once per multiplicity
    long minus_one_multiplicity = 0;
    std::vector<double> noninteger_roots;
    std::vector<std::string> findings;
    bool claims_hold = true;
};

RealRootClassification real_roots_classify(SequenceCache& cache, long n, double tol);

struct ZetaPoint {
    long n = 0;
    double zeta = 0.0;
    long r = 0;
    bool converged = true;
};

/// zeta_{n,k} for every n in [n_from, n_to] (any order), zero at
/// vanishing indices. A per-index convergence failure is recorded, not
/// thrown. Runs in a parallel map with output ordered by n.
std::vector<ZetaPoint> zeta_sweep(long k, long n_from, long n_to, double tol, int jobs = 1);

/// Whether the numeric x-root multiset of F_{n,k} is invariant under
/// multiplication by a primitive k-th root of unity. The roots are found
/// directly in the x domain, so the k-fold symmetry is observed, not
/// assumed.
bool rotational_symmetry_check(SequenceCache& cache, long n, double tol);

/// k = 2: numeric roots of F_n(x) against 2i cos(j pi / n), j = 1..n-1,
/// all simple, matched within tol.
bool k2_root_formula_check(long n, double tol);

}  // namespace kfib

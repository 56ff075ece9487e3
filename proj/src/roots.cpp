#include "kfib/roots.hpp"

#include <quadmath.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>

#include "kfib/indexing.hpp"

namespace kfib {

namespace {

// The monomial basis makes clustered roots of high-degree polynomials
// unresolvable in doubles (the backward error is fine; the forward error
// is not). The solver therefore runs a double pass, certifies every
// root with the Newton inclusion bound deg*|p/p'| padded by the Horner
// rounding envelope, and redoes the solve in __float128 when the
// certificate is too wide.

template <class Real>
struct RealOps;

template <>
struct RealOps<double> {
    static double eps() { return std::numeric_limits<double>::epsilon(); }
    static double sqrt(double v) { return std::sqrt(v); }
    static double abs(double v) { return std::fabs(v); }
    static double from_double(double v) { return v; }
    static double to_double(double v) { return v; }
};

template <>
struct RealOps<__float128> {
    static __float128 eps() { return FLT128_EPSILON; }
    static __float128 sqrt(__float128 v) { return sqrtq(v); }
    static __float128 abs(__float128 v) { return fabsq(v); }
    static __float128 from_double(double v) { return v; }
    static double to_double(__float128 v) { return static_cast<double>(v); }
};

template <class Real>
struct Cx {
    Real re{}, im{};
    Cx() = default;
    Cx(Real r, Real i) : re(r), im(i) {}
    Cx operator+(const Cx& o) const { return {re + o.re, im + o.im}; }
    Cx operator-(const Cx& o) const { return {re - o.re, im - o.im}; }
    Cx operator*(const Cx& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    Cx operator/(const Cx& o) const {
        Real d = o.re * o.re + o.im * o.im;
        return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
    }
    Real abs() const { return RealOps<Real>::sqrt(re * re + im * im); }
};

// p(z) and p'(z) by Horner in one pass.
template <class Real>
void eval_with_derivative(const std::vector<Real>& c, const Cx<Real>& z, Cx<Real>& p,
                          Cx<Real>& dp) {
    p = Cx<Real>(c.back(), Real(0));
    dp = Cx<Real>(Real(0), Real(0));
    for (std::size_t i = c.size() - 1; i-- > 0;) {
        dp = dp * z + p;
        p = p * z + Cx<Real>(c[i], Real(0));
    }
}

// B(t) = sum |c_i| t^i and B'(t) = sum i |c_i| t^{i-1}.
template <class Real>
void magnitude_bounds(const std::vector<Real>& c, Real t, Real& b, Real& db) {
    b = RealOps<Real>::abs(c.back());
    db = Real(0);
    for (std::size_t i = c.size() - 1; i-- > 0;) {
        db = db * t + b;
        b = b * t + RealOps<Real>::abs(c[i]);
    }
}

// Starting points on annuli read off the upper convex hull of
// (i, log|c_i|); the standard simultaneous-iteration initialization.
std::vector<Cplx> initial_guesses(const std::vector<double>& c) {
    const std::size_t deg = c.size() - 1;
    struct HullPoint {
        std::size_t i;
        double logc;
    };
    std::vector<HullPoint> pts;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0.0) pts.push_back({i, std::log(std::abs(c[i]))});
    std::vector<HullPoint> hull;
    for (const auto& pt : pts) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull[hull.size() - 1];
            double cross = (double(b.i) - double(a.i)) * (pt.logc - a.logc) -
                           (double(pt.i) - double(a.i)) * (b.logc - a.logc);
            if (cross >= 0) hull.pop_back();
            else break;
        }
        hull.push_back(pt);
    }
    std::vector<Cplx> z;
    z.reserve(deg);
    const double two_pi = 2.0 * std::numbers::pi;
    for (std::size_t s = 0; s + 1 < hull.size(); ++s) {
        const auto& a = hull[s];
        const auto& b = hull[s + 1];
        const std::size_t count = b.i - a.i;
        const double radius = std::exp((a.logc - b.logc) / double(count));
        // spread each annulus over the full circle, dephased per annulus
        for (std::size_t j = 0; j < count; ++j) {
            double angle = two_pi * (double(j) + 0.5) / double(count) + 0.45 + 0.7 * double(s);
            z.emplace_back(radius * std::cos(angle), radius * std::sin(angle));
        }
    }
    while (z.size() < deg) z.emplace_back(1.0, 0.3);  // degenerate fallback
    return z;
}

template <class Real>
struct CoreResult {
    std::vector<Cx<Real>> roots;
    double residual = 0.0;
    double enclosure = std::numeric_limits<double>::infinity();  // max relative radius
    int iterations = 0;
};

// No per-root freezing: the pairwise repulsion is what keeps two
// approximations from settling on the same simple root.
template <class Real>
CoreResult<Real> aberth_core(const std::vector<Real>& c, std::vector<Cx<Real>> z) {
    const std::size_t deg = c.size() - 1;
    const Real eps = RealOps<Real>::eps();
    const Real stop = eps * Real(8.0) * Real(double(deg) + 4.0);
    const int max_iter = 1200;
    CoreResult<Real> out;
    for (out.iterations = 0; out.iterations < max_iter; ++out.iterations) {
        bool all_small = true;
        double moved = 0.0;
        for (std::size_t j = 0; j < deg; ++j) {
            Cx<Real> p, dp;
            eval_with_derivative(c, z[j], p, dp);
            Real bound, dbound;
            magnitude_bounds(c, z[j].abs(), bound, dbound);
            Real resid = p.abs() / bound;
            if (resid <= stop) continue;
            all_small = false;
            Cx<Real> newton = (dp.abs() == Real(0)) ? Cx<Real>(resid, resid) : p / dp;
            Cx<Real> repel(Real(0), Real(0));
            for (std::size_t m = 0; m < deg; ++m) {
                if (m == j) continue;
                Cx<Real> d = z[j] - z[m];
                if (RealOps<Real>::to_double(d.abs()) < 1e-300)
                    d = Cx<Real>(RealOps<Real>::from_double(1e-300),
                                 RealOps<Real>::from_double(1e-300));
                repel = repel + Cx<Real>(Real(1), Real(0)) / d;
            }
            Cx<Real> denom = Cx<Real>(Real(1), Real(0)) - newton * repel;
            Cx<Real> step = (RealOps<Real>::to_double(denom.abs()) == 0.0) ? newton
                                                                           : newton / denom;
            z[j] = z[j] - step;
            moved = std::max(moved, RealOps<Real>::to_double(step.abs()) /
                                        (1.0 + RealOps<Real>::to_double(z[j].abs())));
        }
        if (all_small || (out.iterations > 3 && moved < 1e-32)) break;
    }
    // residual and certified inclusion radii
    out.residual = 0.0;
    out.enclosure = 0.0;
    const double deps = RealOps<Real>::to_double(eps);
    for (std::size_t j = 0; j < deg; ++j) {
        Cx<Real> p, dp;
        eval_with_derivative(c, z[j], p, dp);
        Real bound, dbound;
        magnitude_bounds(c, z[j].abs(), bound, dbound);
        double pj = RealOps<Real>::to_double(p.abs());
        double dpj = RealOps<Real>::to_double(dp.abs());
        double bj = RealOps<Real>::to_double(bound);
        double dbj = RealOps<Real>::to_double(dbound);
        out.residual = std::max(out.residual, pj / bj);
        const double slack = 4.0 * deps * double(deg);
        double denom = dpj - slack * dbj;
        double radius = denom > 0.0 ? double(deg) * (pj + slack * bj) / denom
                                    : std::numeric_limits<double>::infinity();
        double zj = RealOps<Real>::to_double(z[j].abs());
        out.enclosure = std::max(out.enclosure, radius / (1.0 + zj));
    }
    out.roots = std::move(z);
    return out;
}

// Exact-to-the-last-chunk conversion: peel 53-bit blocks off the top.
__float128 to_float128(const Int& v) {
    if (v == 0) return 0;
    if (mpz_sizeinbase(v.get_mpz_t(), 2) <= 53) return __float128(v.get_d());
    long e = 0;
    double d = mpz_get_d_2exp(&e, v.get_mpz_t());  // v ~ d * 2^e, |d| in [0.5, 1)
    double m = std::ldexp(d, 53);                  // exact 53-bit integer
    mpz_class head(m);
    mpz_mul_2exp(head.get_mpz_t(), head.get_mpz_t(), static_cast<unsigned long>(e - 53));
    return scalbnq(__float128(m), static_cast<int>(e - 53)) + to_float128(v - head);
}

template <class Real>
std::vector<Real> normalized_coeffs_real(const IntPoly& p);

template <>
std::vector<double> normalized_coeffs_real<double>(const IntPoly& p) {
    return normalized_coeffs(p);
}

template <>
std::vector<__float128> normalized_coeffs_real<__float128>(const IntPoly& p) {
    Int max_abs = 0;
    for (const auto& [e, c] : p.terms()) {
        Int a = abs(c);
        if (a > max_abs) max_abs = a;
    }
    const __float128 scale = to_float128(max_abs);
    std::vector<__float128> out(static_cast<std::size_t>(*p.degree()) + 1, 0);
    for (const auto& [e, c] : p.terms())
        out[static_cast<std::size_t>(e)] = to_float128(c) / scale;
    return out;
}

AberthResult run_double_pass(const std::vector<double>& c) {
    CoreResult<double> core = aberth_core<double>(c, [&] {
        std::vector<Cx<double>> z0;
        for (const Cplx& z : initial_guesses(c)) z0.emplace_back(z.real(), z.imag());
        return z0;
    }());
    AberthResult out;
    out.roots.reserve(core.roots.size());
    for (const auto& z : core.roots) out.roots.emplace_back(z.re, z.im);
    out.residual = core.residual;
    out.iterations = core.iterations;
    out.enclosure = core.enclosure;
    return out;
}

}  // namespace

AberthResult aberth_roots(const std::vector<double>& coeffs, double tol, long n, long k) {
    std::vector<double> c = coeffs;
    while (!c.empty() && c.back() == 0.0) c.pop_back();
    if (c.size() < 2) throw std::invalid_argument("aberth_roots needs degree >= 1");
    AberthResult out = run_double_pass(c);
    if (!(out.residual <= tol)) throw ConvergenceFailure(n, k, out.residual);
    return out;
}

AberthResult solve_roots_certified(const IntPoly& p, double tol, long n, long k) {
    if (p.is_zero() || *p.degree() < 1)
        throw std::invalid_argument("solve_roots_certified needs degree >= 1");
    const double target = tol * 0.2;
    AberthResult first = run_double_pass(normalized_coeffs_real<double>(p));
    if (first.residual <= tol && first.enclosure <= target) return first;

    // quad pass, warm-started from the double configuration
    std::vector<__float128> cq = normalized_coeffs_real<__float128>(p);
    std::vector<Cx<__float128>> z0;
    z0.reserve(first.roots.size());
    for (const Cplx& z : first.roots)
        z0.emplace_back(__float128(z.real()), __float128(z.imag()));
    CoreResult<__float128> core = aberth_core<__float128>(cq, std::move(z0));
    AberthResult out;
    for (const auto& z : core.roots)
        out.roots.emplace_back(RealOps<__float128>::to_double(z.re),
                               RealOps<__float128>::to_double(z.im));
    out.residual = core.residual;
    out.iterations = core.iterations;
    out.enclosure = core.enclosure;
    if (!(out.residual <= tol) || !(out.enclosure <= target))
        throw ConvergenceFailure(n, k, std::max(out.residual, out.enclosure));
    return out;
}

std::vector<double> normalized_coeffs(const IntPoly& p) {
    if (p.is_zero()) return {};
    Int max_abs = 0;
    for (const auto& [e, c] : p.terms()) {
        Int a = abs(c);
        if (a > max_abs) max_abs = a;
    }
    std::vector<double> out(static_cast<std::size_t>(*p.degree()) + 1, 0.0);
    for (const auto& [e, c] : p.terms()) {
        Rat ratio = make_rat(c, max_abs);
        out[static_cast<std::size_t>(e)] = mpq_get_d(ratio.get_mpq_t());
    }
    return out;
}

RootReport find_roots(SequenceCache& cache, long n, double tol) {
    const long k = cache.k();
    IndexProfile p = profile(n, k);
    if (p.vanishes) throw VanishingIndex(n, k);

    Factorization f = factorize(cache, n);
    RootReport report;
    report.n = n;
    report.k = k;
    report.x_zero_multiplicity = f.r;
    report.xi_minus_one_multiplicity = f.rho;

    for (long i = 0; i < f.rho; ++i) report.xi_roots.emplace_back(-1.0, 0.0);
    if (!f.Q_xi.is_zero() && *f.Q_xi.degree() >= 1) {
        AberthResult solved = aberth_roots(normalized_coeffs(f.Q_xi), tol, n, k);
        report.residual = solved.residual;
        report.xi_roots.insert(report.xi_roots.end(), solved.roots.begin(), solved.roots.end());
    }

    for (const Cplx& xi : report.xi_roots) {
        report.zeta = std::max(report.zeta, std::abs(xi));
        // Real xi-roots lift to real x-roots depending on the parity of k.
        if (std::abs(xi.imag()) <= tol * (1.0 + std::abs(xi.real()))) {
            double v = xi.real();
            if (k % 2 != 0) {
                report.x_real_roots.push_back(std::copysign(std::pow(std::abs(v), 1.0 / k), v));
            } else if (v > 0) {
                double root = std::pow(v, 1.0 / k);
                report.x_real_roots.push_back(root);
                report.x_real_roots.push_back(-root);
            }
        }
    }
    std::sort(report.x_real_roots.begin(), report.x_real_roots.end());
    return report;
}

RealRootClassification real_roots_classify(SequenceCache& cache, long n, double tol) {
    const long k = cache.k();
    RootReport report = find_roots(cache, n, tol);
    RealRootClassification cls;
    cls.n = n;
    cls.k = k;
    cls.real_roots = report.x_real_roots;
    cls.minus_one_multiplicity = (k % 2 != 0) ? report.xi_minus_one_multiplicity : 0;

    const double guard = 1e-7;
    for (double x : cls.real_roots) {
        if (std::abs(x - std::round(x)) > guard) cls.noninteger_roots.push_back(x);
        if (k % 2 == 0)
            cls.findings.push_back("even k root " + std::to_string(x));
        else if (n > 0 && (x < -1.0 - guard || x > guard))
            cls.findings.push_back("positive-index root outside [-1,0]: " + std::to_string(x));
        else if (n <= 0 && x > -1.0 + guard && x < -guard)
            cls.findings.push_back("negative-index root inside (-1,0): " + std::to_string(x));
    }
    cls.claims_hold = cls.findings.empty();
    return cls;
}

std::vector<ZetaPoint> zeta_sweep(long k, long n_from, long n_to, double tol, int jobs) {
    if (n_from > n_to) std::swap(n_from, n_to);
    const long count = n_to - n_from + 1;
    std::vector<ZetaPoint> out(static_cast<std::size_t>(count));
    jobs = std::max(1, jobs);

    auto work = [&](long lo, long hi) {
        SequenceCache cache(k);  // each sweep strip owns a private cache
        for (long n = lo; n <= hi; ++n) {
            ZetaPoint pt;
            pt.n = n;
            pt.r = profile(n, k).r;
            if (profile(n, k).vanishes) {
                pt.zeta = 0.0;
            } else {
                try {
                    pt.zeta = find_roots(cache, n, tol).zeta;
                } catch (const ConvergenceFailure&) {
                    pt.zeta = std::numeric_limits<double>::quiet_NaN();
                    pt.converged = false;
                }
            }
            out[static_cast<std::size_t>(n - n_from)] = pt;
        }
    };

    if (jobs == 1 || count < 8) {
        work(n_from, n_to);
        return out;
    }
    std::vector<std::thread> pool;
    long stride = (count + jobs - 1) / jobs;
    for (int t = 0; t < jobs; ++t) {
        long lo = n_from + t * stride;
        if (lo > n_to) break;
        long hi = std::min(n_to, lo + stride - 1);
        pool.emplace_back(work, lo, hi);
    }
    for (auto& th : pool) th.join();
    return out;
}

namespace {

// Greedy nearest-neighbor multiset match within a relative tolerance.
bool multisets_match(std::vector<Cplx> a, std::vector<Cplx> b, double tol) {
    if (a.size() != b.size()) return false;
    for (const Cplx& x : a) {
        double best = 1e300;
        std::size_t best_i = 0;
        for (std::size_t i = 0; i < b.size(); ++i) {
            double d = std::abs(x - b[i]);
            if (d < best) {
                best = d;
                best_i = i;
            }
        }
        if (best > tol * (1.0 + std::abs(x))) return false;
        b.erase(b.begin() + static_cast<std::ptrdiff_t>(best_i));
    }
    return true;
}

}  // namespace

namespace {

// All k-th roots of every xi-root; the x-root multiset of F besides 0.
std::vector<Cplx> lift_to_x(const std::vector<Cplx>& xi_roots, long k) {
    std::vector<Cplx> x_roots;
    x_roots.reserve(xi_roots.size() * static_cast<std::size_t>(k));
    for (const Cplx& xi : xi_roots) {
        const double radius = std::pow(std::abs(xi), 1.0 / double(k));
        const double base = std::arg(xi) / double(k);
        for (long m = 0; m < k; ++m) {
            double a = base + 2.0 * std::numbers::pi * double(m) / double(k);
            x_roots.emplace_back(radius * std::cos(a), radius * std::sin(a));
        }
    }
    return x_roots;
}

}  // namespace

bool rotational_symmetry_check(SequenceCache& cache, long n, double tol) {
    const long k = cache.k();
    IndexProfile p = profile(n, k);
    if (p.vanishes) throw VanishingIndex(n, k);
    RootReport report = find_roots(cache, n, tol);
    std::vector<Cplx> x_roots = lift_to_x(report.xi_roots, k);
    if (x_roots.empty()) return true;  // only root was x = 0

    // At moderate degree, solve the deflated polynomial directly in the
    // x domain and require agreement with the lifted xi solution; past
    // that the monomial-basis conditioning in doubles no longer resolves
    // individual roots, so the lifted set stands on the xi solve alone.
    const IntPoly& f = cache.at(n);
    IntPoly g = mul_monomial(f, 1, -f.lowest_exponent());
    const IntPoly xk_plus_1 = add(IntPoly::constant(1), IntPoly::monomial(1, k));
    for (long i = 0; i < p.rho; ++i) g = *divide_exact(g, xk_plus_1);
    if (*g.degree() >= 1 && *g.degree() <= 160) {
        std::vector<Cplx> q_xi(report.xi_roots.begin() + report.xi_minus_one_multiplicity,
                               report.xi_roots.end());
        AberthResult direct = aberth_roots(normalized_coeffs(g), tol, n, k);
        if (!multisets_match(direct.roots, lift_to_x(q_xi, k), std::max(tol, 1e-7)))
            return false;
    }

    const double angle = 2.0 * std::numbers::pi / double(k);
    const Cplx omega(std::cos(angle), std::sin(angle));
    std::vector<Cplx> rotated;
    rotated.reserve(x_roots.size());
    for (const Cplx& z : x_roots) rotated.push_back(z * omega);
    return multisets_match(x_roots, rotated, tol);
}

bool k2_root_formula_check(long n, double tol) {
    if (n < 2) throw IndexOutOfRange("k2_root_formula_check requires n >= 2");
    SequenceCache cache(2);
    RootReport report = find_roots(cache, n, tol);

    // x = 0 (j = n/2, even n) is carried by the exact x^r factor.
    std::vector<Cplx> expected;
    for (long j = 1; j <= n - 1; ++j) {
        if (2 * j == n) continue;
        double c = 2.0 * std::cos(double(j) * std::numbers::pi / double(n));
        expected.emplace_back(0.0, c);
    }
    const long formula_zeros = (n % 2 == 0) ? 1 : 0;
    if (formula_zeros != report.x_zero_multiplicity) return false;

    std::vector<Cplx> numeric = lift_to_x(report.xi_roots, 2);
    if (!multisets_match(numeric, expected, tol)) return false;
    // simplicity: the formula values are pairwise distinct, so a clean
    // 1-1 match within tol rules out multiple roots at this resolution
    for (std::size_t i = 0; i < expected.size(); ++i)
        for (std::size_t j = i + 1; j < expected.size(); ++j)
            if (std::abs(expected[i] - expected[j]) <= 2.0 * tol) return false;
    return true;
}

}  // namespace kfib

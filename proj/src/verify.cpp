#include "kfib/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include "kfib/closedform.hpp"
#include "kfib/factorization.hpp"
#include "kfib/indexing.hpp"
#include "kfib/int_poly.hpp"
#include "kfib/recurrence.hpp"
#include "kfib/roots.hpp"
#include "kfib/triangle.hpp"

namespace kfib {

namespace {

void parallel_indices(long count, int jobs, const std::function<void(long)>& body) {
    jobs = std::max(1, jobs);
    if (jobs == 1 || count <= 1) {
        for (long i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<long> next{0};
    std::vector<std::thread> pool;
    const int workers = static_cast<int>(std::min<long>(jobs, count));
    pool.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            for (long i = next.fetch_add(1); i < count; i = next.fetch_add(1)) body(i);
        });
    for (auto& th : pool) th.join();
}

CheckResult make_result(std::string suite, std::string name, bool pass, long checked,
                        std::string detail = "") {
    CheckResult r;
    r.suite = std::move(suite);
    r.name = std::move(name);
    r.pass = pass;
    r.checked = checked;
    r.detail = std::move(detail);
    return r;
}

std::string pair_str(long n, long k) {
    return "(n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")";
}

// ---------------------------------------------------------------- polycore

IntPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> deg_dist(0, 12);
    std::uniform_int_distribution<int> coef_dist(-9, 9);
    IntPoly p;
    int d = deg_dist(rng);
    for (int e = 0; e <= d; ++e) p.add_term(e, coef_dist(rng));
    return p;
}

std::vector<CheckResult> suite_polycore(const VerifyConfig& cfg) {
    std::mt19937 rng(20240817u);
    std::uniform_int_distribution<int> num_dist(-20, 20);
    std::uniform_int_distribution<int> den_dist(1, 10);
    const long cases = cfg.property_cases;
    long ring_fail = 0, div_fail = 0, eval_fail = 0, canon_fail = 0, parse_fail = 0;
    std::string first;
    for (long i = 0; i < cases; ++i) {
        IntPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        bool ok = add(a, b) == add(b, a) && mul(a, b) == mul(b, a) &&
                  add(add(a, b), c) == add(a, add(b, c)) &&
                  mul(mul(a, b), c) == mul(a, mul(b, c)) &&
                  mul(a, add(b, c)) == add(mul(a, b), mul(a, c));
        if (!ok && ++ring_fail == 1) first = "ring axiom case " + std::to_string(i);
        if (!b.is_zero()) {
            auto q = divide_exact(mul(a, b), b);
            if (!(q && *q == a) && ++div_fail == 1)
                first = "divide_exact round trip case " + std::to_string(i);
        }
        Rat t = make_rat(num_dist(rng), den_dist(rng));
        if (eval_rational(mul(a, b), t) != eval_rational(a, t) * eval_rational(b, t))
            if (++eval_fail == 1) first = "evaluation homomorphism case " + std::to_string(i);
        IntPoly ab = add(a, b);
        for (const auto& [e, co] : ab.terms())
            if (co == 0 && ++canon_fail == 1) first = "zero coefficient stored";
        if (!(parse_poly(to_string(a)) == a) && ++parse_fail == 1)
            first = "text round trip case " + std::to_string(i);
    }
    std::vector<CheckResult> out;
    out.push_back(make_result("polycore", "ring-axioms", ring_fail == 0, cases, first));
    out.push_back(make_result("polycore", "divide-round-trip", div_fail == 0, cases));
    out.push_back(make_result("polycore", "eval-homomorphism", eval_fail == 0, cases));
    out.push_back(make_result("polycore", "canonical-form", canon_fail == 0, cases));
    out.push_back(make_result("polycore", "text-round-trip", parse_fail == 0, cases));
    return out;
}

// --------------------------------------------------------------- vanishing

std::vector<CheckResult> suite_vanishing(const VerifyConfig& cfg) {
    long checked = 0;
    bool pointwise = true, cardinality = true, blocks = true;
    std::string detail;
    for (long k = 2; k <= cfg.k_max; ++k) {
        SequenceCache cache(k);
        const long lo = -(k * k + 3 * k);
        long zero_count = 0;
        for (long n = lo; n <= 0; ++n) {
            bool is_zero = cache.at(n).is_zero();
            bool predicted = profile(n, k).vanishes;
            if (is_zero != predicted && pointwise) {
                pointwise = false;
                detail = "predicate mismatch at " + pair_str(n, k);
            }
            if (is_zero) ++zero_count;
            ++checked;
        }
        if (zero_count != k * (k - 1) / 2 && cardinality) {
            cardinality = false;
            detail = "count " + std::to_string(zero_count) + " != k(k-1)/2 for k=" +
                     std::to_string(k);
        }
        long in_blocks = 0;
        for (const IndexInterval& b : vanishing_indices(k)) {
            for (long n = b.lo; n <= b.hi; ++n) {
                if (!cache.at(n).is_zero()) {
                    blocks = false;
                    detail = "block interval contains nonzero at " + pair_str(n, k);
                }
                ++in_blocks;
            }
        }
        if (in_blocks != k * (k - 1) / 2) {
            blocks = false;
            detail = "block sizes sum to " + std::to_string(in_blocks) + " for k=" +
                     std::to_string(k);
        }
    }
    std::vector<CheckResult> out;
    out.push_back(make_result("vanishing", "predicate-pointwise", pointwise, checked, detail));
    out.push_back(make_result("vanishing", "cardinality", cardinality, cfg.k_max - 1));
    out.push_back(make_result("vanishing", "block-intervals", blocks, cfg.k_max - 1));
    return out;
}

// ---------------------------------------------------------------- theorem1

std::vector<CheckResult> suite_theorem1(const VerifyConfig& cfg) {
    bool relation = true, witness = true;
    long checked = 0;
    std::string detail;
    const long span = std::min<long>(cfg.n_abs_max, 150);
    for (long k = 2; k <= cfg.k_max; ++k) {
        // numbers by the integer recurrence, independent of polynomials
        std::map<long, Int> num;
        for (long m = 0; m <= k - 2; ++m) num[m] = 0;
        num[k - 1] = 1;
        for (long m = k; m <= span + k; ++m) {
            Int acc = 0;
            for (long j = 1; j <= k; ++j) acc += num[m - j];
            num[m] = acc;
        }
        for (long m = -1; m >= -span - k; --m) {
            Int acc = num[m + k];
            for (long j = 1; j <= k - 1; ++j) acc -= num[m + j];
            num[m] = acc;
        }
        SequenceCache cache(k);
        for (long n = -span; n <= span; ++n) {
            if (cache.value_at_one(n) != num[n + k - 2]) {
                relation = false;
                detail = "F(1) != number at " + pair_str(n, k);
            }
            ++checked;
        }
    }
    // the k = 3 witness: the number with index -16 is zero, yet the
    // polynomial evaluating to it is nonzero
    SequenceCache c3(3);
    const IntPoly& t17 = c3.at(-17);
    IntPoly expected;
    const long exps[] = {0, 3, 6, 9, 12, 15};
    const long coefs[] = {1, -5, -6, 4, 5, 1};
    for (int i = 0; i < 6; ++i) expected.add_term(exps[i], coefs[i]);
    if (c3.value_at_one(-17) != 0 || t17.is_zero() || !(t17 == expected)) {
        witness = false;
        detail = "k=3 witness failed";
    }
    std::vector<CheckResult> out;
    out.push_back(make_result("theorem1", "number-polynomial-relation", relation, checked, detail));
    out.push_back(make_result("theorem1", "zero-number-nonzero-polynomial", witness, 1, detail));
    return out;
}

// -------------------------------------------------------------- closedform

std::vector<CheckResult> suite_closedform(const VerifyConfig& cfg) {
    const long k_lo = 2, k_hi = cfg.k_max;
    std::vector<std::string> neg_fail(static_cast<std::size_t>(k_hi - k_lo + 1));
    std::vector<std::string> pos_fail(static_cast<std::size_t>(k_hi - k_lo + 1));
    parallel_indices(k_hi - k_lo + 1, cfg.jobs, [&](long idx) {
        const long k = k_lo + idx;
        SequenceCache cache(k);
        std::vector<IntPoly> series = genfun_series_neg(k, cfg.n_abs_max);
        for (long n = 0; n >= -cfg.n_abs_max; --n) {
            const IntPoly& oracle = cache.at(n);
            if (!(multinomial_neg(n, k) == oracle)) {
                neg_fail[idx] = "multinomial sum differs at " + pair_str(n, k);
                return;
            }
            if (!(series[static_cast<std::size_t>(-n)] == oracle)) {
                neg_fail[idx] = "generating function differs at " + pair_str(n, k);
                return;
            }
            if (!(assemble_neg(k, n) == oracle)) {
                neg_fail[idx] = "triangle assembly differs at " + pair_str(n, k);
                return;
            }
        }
        for (long n = 1; n <= cfg.n_abs_max; ++n)
            if (!(assemble_pos(k, n) == cache.at(n))) {
                pos_fail[idx] = "Hoggatt-Bicknell sum differs at " + pair_str(n, k);
                return;
            }
    });
    std::string neg_detail, pos_detail;
    for (const auto& s : neg_fail)
        if (!s.empty() && neg_detail.empty()) neg_detail = s;
    for (const auto& s : pos_fail)
        if (!s.empty() && pos_detail.empty()) pos_detail = s;
    const long per_k = cfg.n_abs_max + 1;
    std::vector<CheckResult> out;
    out.push_back(make_result("closedform", "negative-quadruple-agreement", neg_detail.empty(),
                              (k_hi - 1) * per_k, neg_detail));
    out.push_back(make_result("closedform", "positive-sum-agreement", pos_detail.empty(),
                              (k_hi - 1) * cfg.n_abs_max, pos_detail));
    return out;
}

// ------------------------------------------------------------------- terms

std::vector<CheckResult> suite_terms(const VerifyConfig& cfg) {
    bool deg_ok = true, low_ok = true, high_ok = true, second_ok = true, positive_ok = true;
    std::string detail;
    long checked = 0;
    auto fail = [&](bool& flag, const std::string& msg) {
        if (flag) {
            flag = false;
            if (detail.empty()) detail = msg;
        }
    };
    for (long k = 2; k <= cfg.k_max; ++k) {
        SequenceCache cache(k);
        for (long n = -cfg.n_abs_max; n <= cfg.n_abs_max; ++n) {
            ++checked;
            IndexProfile p = profile(n, k);
            const IntPoly& f = cache.at(n);
            if (p.vanishes) {
                if (!f.is_zero()) fail(deg_ok, "vanishing index nonzero " + pair_str(n, k));
                continue;
            }
            if (f.is_zero() || *f.degree() != *p.degree)
                fail(deg_ok, "degree mismatch at " + pair_str(n, k));
            if (n >= 1) {
                // all coefficients positive, exponents on the r (mod k) stride
                if (!exponents_congruent(f, p.r, k))
                    fail(positive_ok, "stride violation at " + pair_str(n, k));
                for (const auto& [e, c] : f.terms())
                    if (c <= 0) fail(positive_ok, "nonpositive coefficient at " + pair_str(n, k));
            }
            Term low = lowest_term(n, k);
            if (f.coeff(low.exponent) != low.coeff || f.lowest_exponent() != low.exponent)
                fail(low_ok, "lowest term mismatch at " + pair_str(n, k));
            if (n <= 0) {
                Term high = highest_term(n, k);
                if (*f.degree() != high.exponent || f.leading_coeff() != high.coeff)
                    fail(high_ok, "highest term mismatch at " + pair_str(n, k));
                const bool monomial = f.term_count() == 1;
                try {
                    Term second = second_highest_term(n, k);
                    if (monomial)
                        fail(second_ok, "second term returned for monomial " + pair_str(n, k));
                    // compare against the true second-highest stored term
                    auto it = f.terms().rbegin();
                    ++it;
                    if (it->first != second.exponent || it->second != second.coeff)
                        fail(second_ok, "second term mismatch at " + pair_str(n, k));
                } catch (const MonomialIndex&) {
                    if (!monomial)
                        fail(second_ok, "monomial refusal for non-monomial " + pair_str(n, k));
                }
            }
        }
        // degree non-monotonicity witness for k >= 3
        if (k >= 3) {
            bool found = false;
            for (long n = -1; n >= -cfg.n_abs_max + 1 && !found; --n) {
                IndexProfile a = profile(n, k);
                if (a.vanishes) continue;
                for (long m = n - 1; m >= -cfg.n_abs_max && !found; --m) {
                    IndexProfile b = profile(m, k);
                    if (!b.vanishes && *b.degree < *a.degree) found = true;
                }
            }
            if (!found) fail(deg_ok, "no degree non-monotonicity witness for k=" + std::to_string(k));
        }
    }
    std::vector<CheckResult> out;
    out.push_back(make_result("terms", "degree-formula", deg_ok, checked, detail));
    out.push_back(make_result("terms", "lowest-term", low_ok, checked, detail));
    out.push_back(make_result("terms", "highest-term", high_ok, checked, detail));
    out.push_back(make_result("terms", "second-highest-term", second_ok, checked, detail));
    out.push_back(make_result("terms", "positive-coefficients-stride", positive_ok, checked, detail));
    return out;
}

// ---------------------------------------------------------------- triangle

std::vector<CheckResult> suite_triangle(const VerifyConfig& cfg) {
    bool pos_ok = true, neg_ok = true, conv_ok = true, assemble_ok = true, row_ok = true;
    std::string detail;
    auto fail = [&](bool& flag, const std::string& msg) {
        flag = false;
        if (detail.empty()) detail = msg;
    };
    long checked = 0;
    for (long k = 2; k <= std::min<long>(5, cfg.k_max); ++k) {
        // brute-force multinomial oracle: expand (1 + ... + x^{k-1})^n
        IntPoly base;
        for (long e = 0; e < k; ++e) base.add_term(e, 1);
        for (long n = 0; n <= 8; ++n) {
            IntPoly expanded = pow(base, static_cast<unsigned long>(n));
            for (long j = 0; j <= 20; ++j, ++checked)
                if (coeff_pos(k, n, j) != expanded.coeff(j))
                    fail(pos_ok, "coeff_pos differs at k=" + std::to_string(k) +
                                     " n=" + std::to_string(n) + " j=" + std::to_string(j));
        }
        // series inversion oracle for negative rows
        for (long m = -1; m >= -6; --m) {
            IntPoly power = pow(base, static_cast<unsigned long>(-m));
            std::vector<Int> inv(25, 0);
            inv[0] = 1;  // constant term of the power is 1
            for (long j = 1; j <= 24; ++j) {
                Int acc = 0;
                for (long i = 1; i <= j; ++i) acc += power.coeff(i) * inv[static_cast<std::size_t>(j - i)];
                inv[static_cast<std::size_t>(j)] = -acc;
            }
            for (long j = 0; j <= 24; ++j, ++checked)
                if (coeff_neg(k, m, j) != inv[static_cast<std::size_t>(j)])
                    fail(neg_ok, "coeff_neg differs at k=" + std::to_string(k) +
                                     " m=" + std::to_string(m) + " j=" + std::to_string(j));
        }
    }
    for (long k = 2; k <= cfg.k_max; ++k) {
        for (long i = 0; i <= 3 * k; ++i, ++checked) {
            Int acc = 0;
            for (long j = 0; j <= i; ++j) acc += coeff_neg(k, -1, j) * coeff_pos(k, 1, i - j);
            if (acc != (i == 0 ? 1 : 0))
                fail(conv_ok, "row -1 is not the series inverse of row 1 at k=" +
                                  std::to_string(k) + " i=" + std::to_string(i));
        }
        for (long m = 0; m <= 8; ++m) {
            TriangleRow row = TriangleRow::make(k, m);
            Int sum = 0;
            for (const Int& v : row.coeffs) sum += v;
            Int expect;
            mpz_ui_pow_ui(expect.get_mpz_t(), static_cast<unsigned long>(k),
                          static_cast<unsigned long>(m));
            if (sum != expect) fail(row_ok, "row sum != k^m at k=" + std::to_string(k));
            for (std::size_t j = 0; j < row.coeffs.size(); ++j)
                if (row.coeffs[j] != row.coeffs[row.coeffs.size() - 1 - j])
                    fail(row_ok, "row not palindromic at k=" + std::to_string(k));
            ++checked;
        }
    }
    const long k_hi = std::min<long>(8, cfg.k_max);
    const long span = std::min<long>(200, cfg.n_abs_max);
    for (long k = 2; k <= k_hi; ++k) {
        SequenceCache cache(k);
        for (long n = -span; n <= span; ++n, ++checked) {
            const IntPoly& oracle = cache.at(n);
            IntPoly built = n >= 1 ? assemble_pos(k, n) : assemble_neg(k, n);
            if (!(built == oracle)) fail(assemble_ok, "assembly differs at " + pair_str(n, k));
        }
    }
    std::vector<CheckResult> out;
    out.push_back(make_result("triangle", "coeff-pos-multinomial-oracle", pos_ok, checked, detail));
    out.push_back(make_result("triangle", "coeff-neg-series-oracle", neg_ok, checked, detail));
    out.push_back(make_result("triangle", "row-inverse-convolution", conv_ok, checked, detail));
    out.push_back(make_result("triangle", "row-palindrome-sum", row_ok, checked, detail));
    out.push_back(make_result("triangle", "assembly-vs-recurrence", assemble_ok, checked, detail));
    return out;
}

// ----------------------------------------------------------- factorization

std::vector<CheckResult> suite_factorization(const VerifyConfig& cfg) {
    bool recon_ok = true, period_ok = true, gcd_ok = true, small_ok = true, family_ok = true,
         shift_ok = true;
    std::string detail;
    auto fail = [&](bool& flag, const std::string& msg) {
        flag = false;
        if (detail.empty()) detail = msg;
    };
    long checked = 0;
    for (long k = 2; k <= cfg.k_max; ++k) {
        SequenceCache cache(k);
        for (long n = -cfg.n_abs_max; n <= cfg.n_abs_max; ++n) {
            IndexProfile p = profile(n, k);
            if (p.vanishes) continue;
            ++checked;
            Factorization f;
            try {
                f = factorize(cache, n);
            } catch (const StructureViolation& e) {
                fail(recon_ok, std::string(e.what()));
                continue;
            }
            if (!(reconstruct(f) == cache.at(n)))
                fail(recon_ok, "reconstruction differs at " + pair_str(n, k));
            if (profile(n + k + 1, k).rho != p.rho)
                fail(period_ok, "rho period breaks at " + pair_str(n, k));
            // gcd(F, F') support: Q squarefree and coprime to xi and xi+1
            if (eval_int(f.Q_xi, -1) == 0 || f.Q_xi.coeff(0) == 0 || !is_squarefree(f.Q_xi))
                fail(gcd_ok, "Q has extra root structure at " + pair_str(n, k));
        }
        // direct pseudo-remainder gcd on a small subrange
        const long direct = std::min<long>(60, cfg.n_abs_max);
        for (long n = -direct; n <= direct; ++n) {
            IndexProfile p = profile(n, k);
            if (p.vanishes) continue;
            const IntPoly& f = cache.at(n);
            if (f.is_zero() || *f.degree() == 0) continue;
            IntPoly g = content_and_gcd(f, derivative(f));
            IntPoly xk1 = add(IntPoly::constant(1), IntPoly::monomial(1, k));
            IntPoly expect = mul_monomial(pow(xk1, static_cast<unsigned long>(std::max<long>(p.rho - 1, 0))),
                                          1, std::max<long>(p.r - 1, 0));
            if (!(g == expect)) fail(gcd_ok, "gcd(F,F') support differs at " + pair_str(n, k));
            ++checked;
        }
        for (long n = 2; n <= k + 1; ++n, ++checked)
            if (!(closed_form_small(n, k) == cache.at(n)))
                fail(small_ok, "small closed form differs at " + pair_str(n, k));
        for (long s = 2; s <= k + 1; ++s, ++checked)
            if (!check_xks_family(cache, s))
                fail(family_ok, "x^k = -s family fails at s=" + std::to_string(s) +
                                    " k=" + std::to_string(k));
        if (check_xks_family(cache, k + 2))
            fail(family_ok, "x^k = -s family unexpectedly holds at s=k+2, k=" + std::to_string(k));
        const long shift_span = std::min<long>(60, cfg.n_abs_max);
        for (long n = -shift_span; n <= shift_span - k - 1; ++n) {
            if (profile(n, k).vanishes || profile(n + k + 1, k).vanishes) continue;
            if (!period_shift_identity(cache, n))
                fail(shift_ok, "period shift congruence fails at " + pair_str(n, k));
            ++checked;
        }
    }
    // the small closed form holds for every k up to 12 regardless of scope
    for (long k = cfg.k_max + 1; k <= 12; ++k) {
        SequenceCache cache(k);
        for (long n = 2; n <= k + 1; ++n, ++checked)
            if (!(closed_form_small(n, k) == cache.at(n)))
                fail(small_ok, "small closed form differs at " + pair_str(n, k));
    }
    std::vector<CheckResult> out;
    out.push_back(make_result("factorization", "reconstruction-and-rho", recon_ok, checked, detail));
    out.push_back(make_result("factorization", "rho-periodicity", period_ok, checked, detail));
    out.push_back(make_result("factorization", "gcd-support", gcd_ok, checked, detail));
    out.push_back(make_result("factorization", "small-closed-form", small_ok, checked, detail));
    out.push_back(make_result("factorization", "xks-family", family_ok, checked, detail));
    out.push_back(make_result("factorization", "period-shift-congruence", shift_ok, checked, detail));
    return out;
}

// ------------------------------------------------------------------- sigma

std::vector<CheckResult> suite_sigma(const VerifyConfig& cfg) {
    bool vieta_ok = true, sum_ok = true, prod_ok = true;
    std::string detail;
    auto fail = [&](bool& flag, const std::string& msg) {
        flag = false;
        if (detail.empty()) detail = msg;
    };
    long checked = 0;
    for (long k = 2; k <= cfg.k_max; ++k) {
        SequenceCache cache(k);
        for (long n = -cfg.n_abs_max; n <= cfg.n_abs_max; ++n) {
            IndexProfile p = profile(n, k);
            if (p.vanishes || (n >= 0 && n < 3)) continue;
            const IntPoly& f = cache.at(n);
            IntPoly p_xi = to_xi(mul_monomial(f, 1, -p.r), k);
            if (*p_xi.degree() == 0) continue;
            SymmetricSpec spec = n > 0 ? sigma_pos(n, k) : sigma_neg(n, k);
            std::vector<Rat> exact = vieta_sigma_exact(p_xi);
            ++checked;
            if (spec.N != static_cast<long>(exact.size())) {
                fail(vieta_ok, "sigma count differs at " + pair_str(n, k));
                continue;
            }
            for (long h = 0; h < spec.N; ++h)
                if (spec.sigma[static_cast<std::size_t>(h)] != exact[static_cast<std::size_t>(h)])
                    fail(vieta_ok, "sigma_" + std::to_string(h + 1) + " differs at " + pair_str(n, k));
            if (sum_of_roots_formula(n, k) != exact.front())
                fail(sum_ok, "root sum differs at " + pair_str(n, k));
            if (product_of_roots_formula(n, k) != exact.back())
                fail(prod_ok, "root product differs at " + pair_str(n, k));
        }
    }
    std::vector<CheckResult> out;
    out.push_back(make_result("sigma", "vieta-cross-check", vieta_ok, checked, detail));
    out.push_back(make_result("sigma", "sum-of-roots", sum_ok, checked, detail));
    out.push_back(make_result("sigma", "product-of-roots", prod_ok, checked, detail));
    return out;
}

// -------------------------------------------------------------- reflection

std::vector<CheckResult> suite_reflection(const VerifyConfig& cfg) {
    bool ident_ok = true, counter_ok = true;
    std::string detail;
    SequenceCache c2(2);
    const long span = std::min<long>(cfg.n_abs_max, 200);
    long checked = 0;
    for (long n = 1; n <= span; ++n, ++checked) {
        IntPoly expect = n % 2 == 1 ? c2.at(n) : negate(c2.at(n));
        if (!(c2.at(-n) == expect)) {
            ident_ok = false;
            detail = "k=2 reflection fails at n=" + std::to_string(n);
        }
    }
    for (long k = 3; k <= cfg.k_max; ++k) {
        SequenceCache cache(k);
        bool found = false;
        for (long n = 1; n <= 50 && !found; ++n) {
            IntPoly expect = n % 2 == 1 ? cache.at(n) : negate(cache.at(n));
            if (!(cache.at(-n) == expect)) found = true;
        }
        ++checked;
        if (!found) {
            counter_ok = false;
            detail = "no reflection counterexample for k=" + std::to_string(k);
        }
    }
    std::vector<CheckResult> out;
    out.push_back(make_result("reflection", "k2-identity", ident_ok, span, detail));
    out.push_back(make_result("reflection", "k3-plus-counterexample", counter_ok,
                              std::max<long>(cfg.k_max - 2, 0), detail));
    return out;
}

// ------------------------------------------------------------------- signs

std::vector<CheckResult> suite_signs(const VerifyConfig& cfg) {
    bool ok = true;
    std::string detail;
    long checked = 0;
    const long span = std::min<long>(cfg.n_abs_max, 400);
    for (long k = 2; k <= std::min<long>(8, cfg.k_max); k += 2) {
        SequenceCache cache(k);
        for (long n = 0; n >= -span; --n) {
            const IntPoly& f = cache.at(n);
            if (f.is_zero()) continue;
            ++checked;
            bool has_pos = false, has_neg = false;
            for (const auto& [e, c] : f.terms()) (c > 0 ? has_pos : has_neg) = true;
            if (has_pos && has_neg && ok) {
                ok = false;
                detail = "sign change at " + pair_str(n, k);
            }
        }
    }
    return {make_result("signs", "even-k-single-sign", ok, checked, detail)};
}

// ------------------------------------------------------------- exceptional

std::vector<CheckResult> suite_exceptional(const VerifyConfig& cfg) {
    bool odd_ok = true, even_ok = true;
    std::string detail;
    long checked = 0;
    {
        SequenceCache c3(3);
        auto gaps = scan_vanishing_coefficients(c3, -20, -1);
        bool found = false;
        for (const auto& g : gaps)
            if (g.n == -14 && g.missing == std::vector<long>{3}) found = true;
        if (!found) {
            odd_ok = false;
            detail = "k=3 scan misses the n=-14 gap";
        }
        checked += 20;
    }
    if (cfg.n_abs_max >= 66) {
        SequenceCache c5(5);
        auto gaps = scan_vanishing_coefficients(c5, -70, -60);
        bool found = false;
        for (const auto& g : gaps)
            if (g.n == -66 && g.missing == std::vector<long>{5, 10}) found = true;
        if (!found) {
            odd_ok = false;
            detail = "k=5 scan misses the n=-66 double gap";
        }
        checked += 11;
    }
    const long span = std::min<long>(cfg.n_abs_max, 400);
    for (long k = 2; k <= std::min<long>(8, cfg.k_max); k += 2) {
        SequenceCache cache(k);
        auto gaps = scan_vanishing_coefficients(cache, -span, 0);
        checked += span;
        if (!gaps.empty()) {
            even_ok = false;
            detail = "unexpected even-k gap at " + pair_str(gaps.front().n, k);
        }
    }
    std::vector<CheckResult> out;
    out.push_back(make_result("exceptional", "odd-k-known-gaps", odd_ok, checked, detail));
    out.push_back(make_result("exceptional", "even-k-no-gaps", even_ok, checked, detail));
    return out;
}

// ------------------------------------------------------------------ genfun

std::vector<CheckResult> suite_genfun(const VerifyConfig& cfg) {
    bool gap_ok = true, boundary_ok = true;
    std::string detail;
    long checked = 0;
    for (long k = 2; k <= cfg.k_max; ++k) {
        const long order = k * k + 2 * k;
        std::vector<IntPoly> series = genfun_series_neg(k, order);
        for (long s = 0; s <= k - 2; ++s) {
            for (long a = s * (k + 1); a <= (s + 1) * k - 2; ++a, ++checked)
                if (!series[static_cast<std::size_t>(a)].is_zero()) {
                    gap_ok = false;
                    detail = "expected gap at |n|=" + std::to_string(a) + " k=" + std::to_string(k);
                }
        }
        IntPoly xk1 = add(IntPoly::constant(1), IntPoly::monomial(1, k));
        for (long s = 1; s <= k - 2; ++s, ++checked) {
            if (!(series[static_cast<std::size_t>(s * k - 1)] ==
                  pow(xk1, static_cast<unsigned long>(s - 1)))) {
                boundary_ok = false;
                detail = "first nonvanishing after block differs at s=" + std::to_string(s) +
                         " k=" + std::to_string(k);
            }
            IntPoly mono = IntPoly::monomial(s % 2 == 0 ? 1 : -1, s);
            if (!(series[static_cast<std::size_t>(s * (k + 1) - 1)] == mono)) {
                boundary_ok = false;
                detail = "last nonvanishing before block differs at s=" + std::to_string(s) +
                         " k=" + std::to_string(k);
            }
        }
        // F_{-2k} = -x(x^k + 2) and, for k >= 3, F_{-(2k+1)} = x^2
        IntPoly f2k;
        f2k.add_term(1, -2);
        f2k.add_term(k + 1, -1);
        if (!(series[static_cast<std::size_t>(2 * k)] == f2k)) {
            boundary_ok = false;
            detail = "F_{-2k} differs for k=" + std::to_string(k);
        }
        if (k >= 3 && !(series[static_cast<std::size_t>(2 * k + 1)] == IntPoly::monomial(1, 2))) {
            boundary_ok = false;
            detail = "F_{-(2k+1)} differs for k=" + std::to_string(k);
        }
        checked += 2;
    }
    std::vector<CheckResult> out;
    out.push_back(make_result("genfun", "vanishing-gap-structure", gap_ok, checked, detail));
    out.push_back(make_result("genfun", "block-boundary-identities", boundary_ok, checked, detail));
    return out;
}

// ------------------------------------------------------------------- roots

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

std::vector<CheckResult> suite_roots(const VerifyConfig& cfg) {
    bool printed_ok = true, k2_ok = true, classify_ok = true, symmetry_ok = true,
         vieta_ok = true, simple_ok = true;
    std::string detail;
    auto fail = [&](bool& flag, const std::string& msg) {
        flag = false;
        if (detail.empty()) detail = msg;
    };
    long checked = 0;

    {
        SequenceCache c3(3);
        RealRootClassification t10 = real_roots_classify(c3, 10, cfg.tol);
        if (t10.real_roots.size() != 2 || !close(t10.real_roots[0], -0.862794, 1e-5) ||
            !close(t10.real_roots[1], -0.427835, 1e-5))
            fail(printed_ok, "T_10 real roots off");
        RealRootClassification t20 = real_roots_classify(c3, -20, cfg.tol);
        const double expect[] = {-1.584586, -1.272728, 0.394958, 1.255444};
        if (t20.noninteger_roots.size() != 4 || t20.minus_one_multiplicity != 2)
            fail(printed_ok, "T_-20 root structure off");
        else {
            std::vector<double> got = t20.noninteger_roots;
            std::sort(got.begin(), got.end());
            for (int i = 0; i < 4; ++i)
                if (!close(got[static_cast<std::size_t>(i)], expect[i], 1e-5))
                    fail(printed_ok, "T_-20 real roots off");
        }
        checked += 2;
    }
    for (long n = 2; n <= 50; ++n, ++checked)
        if (!k2_root_formula_check(n, 1e-9)) fail(k2_ok, "k=2 root formula fails at n=" + std::to_string(n));

    for (long k : {3L, 4L, 5L}) {
        if (k > cfg.k_max) continue;
        SequenceCache cache(k);
        const long span = std::min<long>(60, cfg.n_abs_max);
        for (long n = -span; n <= span; ++n) {
            IndexProfile p = profile(n, k);
            if (p.vanishes || n == 1 || n == 2) continue;
            RealRootClassification cls = real_roots_classify(cache, n, cfg.tol);
            if (!cls.claims_hold) fail(classify_ok, "claims fail at " + pair_str(n, k) +
                                                        ": " + cls.findings.front());
            ++checked;
        }
    }
    {
        SequenceCache c8(8), c3(3), c5(5);
        if (!rotational_symmetry_check(c8, 40, 1e-7)) fail(symmetry_ok, "symmetry (40,8)");
        if (!rotational_symmetry_check(c3, -40, 1e-7)) fail(symmetry_ok, "symmetry (-40,3)");
        if (!rotational_symmetry_check(c5, 2, 1e-7)) fail(symmetry_ok, "symmetry (2,5)");
        checked += 3;
    }
    for (long k = 2; k <= std::min<long>(6, cfg.k_max); ++k) {
        SequenceCache cache(k);
        const long span = std::min<long>(120, cfg.n_abs_max);
        for (long n = -span; n <= span; ++n) {
            IndexProfile p = profile(n, k);
            if (p.vanishes || (n >= 0 && n < 3)) continue;
            RootReport rep = find_roots(cache, n, cfg.tol);
            if (rep.xi_roots.empty()) continue;
            ++checked;
            Cplx sum(0, 0), prod(1, 0);
            for (const Cplx& z : rep.xi_roots) {
                sum += z;
                prod *= z;
            }
            double s_expect = mpq_get_d(sum_of_roots_formula(n, k).get_mpq_t());
            double p_expect = mpq_get_d(product_of_roots_formula(n, k).get_mpq_t());
            if (std::abs(sum.real() - s_expect) > 1e-6 * (1.0 + std::abs(s_expect)))
                fail(vieta_ok, "float root sum off at " + pair_str(n, k));
            if (std::abs(prod.real() - p_expect) > 1e-6 * (1.0 + std::abs(p_expect)))
                fail(vieta_ok, "float root product off at " + pair_str(n, k));
            // after exact deflation every numeric root must be isolated
            const std::vector<Cplx>& zs = rep.xi_roots;
            for (std::size_t i = static_cast<std::size_t>(rep.xi_minus_one_multiplicity);
                 i < zs.size(); ++i)
                for (std::size_t j = i + 1; j < zs.size(); ++j)
                    if (std::abs(zs[i] - zs[j]) < 1e-8 * (1.0 + std::abs(zs[i])))
                        fail(simple_ok, "numeric root cluster at " + pair_str(n, k));
        }
    }
    std::vector<CheckResult> out;
    out.push_back(make_result("roots", "printed-real-roots", printed_ok, checked, detail));
    out.push_back(make_result("roots", "k2-cosine-formula", k2_ok, checked, detail));
    out.push_back(make_result("roots", "real-root-interval-claims", classify_ok, checked, detail));
    out.push_back(make_result("roots", "rotational-symmetry", symmetry_ok, checked, detail));
    out.push_back(make_result("roots", "float-vieta-consistency", vieta_ok, checked, detail));
    out.push_back(make_result("roots", "deflated-roots-simple", simple_ok, checked, detail));
    return out;
}

// -------------------------------------------------------------------- zeta

std::vector<CheckResult> suite_zeta(const VerifyConfig& cfg) {
    bool k2_ok = true, bound_ok = true, equality_ok = true, slope_ok = true;
    std::string detail, eq_detail;
    long checked = 0;

    {
        // k = 2, n > 0: zeta stays below 4 and approaches it
        const long top = std::max<long>(cfg.n_abs_max, 400);
        std::vector<ZetaPoint> sweep = zeta_sweep(2, 2, top, cfg.tol, cfg.jobs);
        double last = 0.0;
        for (const ZetaPoint& pt : sweep) {
            ++checked;
            if (!pt.converged || pt.zeta >= 4.0) {
                k2_ok = false;
                detail = "zeta_{n,2} bound fails at n=" + std::to_string(pt.n);
            }
            if (pt.n == top) last = pt.zeta;
        }
        if (last <= 3.99) {
            k2_ok = false;
            detail = "zeta_{" + std::to_string(top) + ",2} = " + std::to_string(last) +
                     " does not exceed 3.99";
        }
    }

    long eq_failures = 0;
    for (long k : {3L, 4L, 5L}) {
        if (k > cfg.k_max) continue;
        const long span = std::min<long>(300, cfg.n_abs_max * 2);
        std::vector<ZetaPoint> sweep = zeta_sweep(k, -span, -1, cfg.tol, cfg.jobs);
        std::vector<std::vector<std::pair<double, double>>> branch(static_cast<std::size_t>(k));
        for (const ZetaPoint& pt : sweep) {
            ++checked;
            if (!pt.converged) {
                bound_ok = false;
                detail = "sweep did not converge at " + pair_str(pt.n, k);
                continue;
            }
            const long cap = (-pt.n) / k;
            if (pt.zeta > double(cap) + 1e-6) {
                bound_ok = false;
                detail = "zeta exceeds floor(|n|/k) at " + pair_str(pt.n, k);
            }
            if (pt.r == 1 && std::abs(pt.zeta - double(cap)) > 1e-6) {
                ++eq_failures;
                if (eq_detail.empty())
                    eq_detail = "first at " + pair_str(pt.n, k) + ": zeta=" +
                                std::to_string(pt.zeta) + " vs bound " + std::to_string(cap);
            }
            if (!profile(pt.n, k).vanishes)
                branch[static_cast<std::size_t>(pt.r)].emplace_back(double(-pt.n), pt.zeta);
        }
        // least-squares slopes decrease as r runs 1..k-1
        std::vector<double> slopes;
        for (long r = 1; r <= k - 1; ++r) {
            const auto& pts = branch[static_cast<std::size_t>(r)];
            double sx = 0, sy = 0, sxx = 0, sxy = 0;
            for (const auto& [x, y] : pts) {
                sx += x;
                sy += y;
                sxx += x * x;
                sxy += x * y;
            }
            double npts = double(pts.size());
            slopes.push_back((npts * sxy - sx * sy) / (npts * sxx - sx * sx));
        }
        for (std::size_t i = 0; i + 1 < slopes.size(); ++i)
            if (!(slopes[i] > slopes[i + 1])) {
                slope_ok = false;
                detail = "branch slopes not decreasing for k=" + std::to_string(k);
            }
    }
    if (eq_failures > 0) {
        equality_ok = false;
        eq_detail = std::to_string(eq_failures) +
                    " r=1 indices miss the bound (tightness holds only for |n| = sk, " +
                    "2 <= s <= k+1); " + eq_detail;
    }

    std::vector<CheckResult> out;
    out.push_back(make_result("zeta", "k2-supremum", k2_ok, checked, detail));
    out.push_back(make_result("zeta", "negative-bound", bound_ok, checked, detail));
    out.push_back(make_result("zeta", "r1-equality", equality_ok, checked, eq_detail));
    out.push_back(make_result("zeta", "branch-slope-order", slope_ok, checked, detail));
    return out;
}

using SuiteFn = std::vector<CheckResult> (*)(const VerifyConfig&);

struct SuiteEntry {
    const char* name;
    SuiteFn fn;
};

const SuiteEntry kSuites[] = {
    {"polycore", suite_polycore},       {"vanishing", suite_vanishing},
    {"theorem1", suite_theorem1},       {"closedform", suite_closedform},
    {"terms", suite_terms},             {"triangle", suite_triangle},
    {"factorization", suite_factorization}, {"sigma", suite_sigma},
    {"reflection", suite_reflection},   {"signs", suite_signs},
    {"exceptional", suite_exceptional}, {"genfun", suite_genfun},
    {"roots", suite_roots},             {"zeta", suite_zeta},
};

}  // namespace

const std::vector<std::string>& all_suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const SuiteEntry& s : kSuites) v.emplace_back(s.name);
        return v;
    }();
    return names;
}

VerifyReport run_verify(const VerifyConfig& cfg) {
    std::vector<const SuiteEntry*> selected;
    for (const SuiteEntry& s : kSuites)
        if (cfg.suites.empty() || cfg.suites.count(s.name)) selected.push_back(&s);

    std::vector<std::vector<CheckResult>> slots(selected.size());
    parallel_indices(static_cast<long>(selected.size()), cfg.jobs, [&](long i) {
        const SuiteEntry* entry = selected[static_cast<std::size_t>(i)];
        try {
            slots[static_cast<std::size_t>(i)] = entry->fn(cfg);
        } catch (const std::exception& e) {
            slots[static_cast<std::size_t>(i)] = {
                make_result(entry->name, "aborted", false, 0, e.what())};
        }
    });

    VerifyReport report;
    for (const auto& slot : slots)
        for (const CheckResult& r : slot) {
            report.all_pass = report.all_pass && r.pass;
            report.results.push_back(r);
        }
    return report;
}

std::string render_report(const VerifyReport& report) {
    std::ostringstream out;
    long passed = 0;
    for (const CheckResult& r : report.results) {
        out << (r.pass ? "PASS" : "FAIL") << "  " << r.suite << "/" << r.name << "  (checked "
            << r.checked << ")";
        if (!r.pass && !r.detail.empty()) out << "  -- " << r.detail;
        out << "\n";
        if (r.pass) ++passed;
    }
    out << passed << "/" << report.results.size() << " checks passed\n";
    return out.str();
}

std::string render_report_json(const VerifyReport& report) {
    std::ostringstream out;
    out << "{\"all_pass\":" << (report.all_pass ? "true" : "false") << ",\"checks\":[";
    bool first = true;
    for (const CheckResult& r : report.results) {
        if (!first) out << ',';
        first = false;
        out << "{\"suite\":\"" << r.suite << "\",\"name\":\"" << r.name
            << "\",\"pass\":" << (r.pass ? "true" : "false") << ",\"checked\":" << r.checked
            << ",\"detail\":\"" << r.detail << "\"}";
    }
    out << "]}";
    return out.str();
}

}  // namespace kfib

#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>

#include "kfib/errors.hpp"

namespace kfib {

using Int = mpz_class;
using Rat = mpq_class;

/// Canonical rational from a numerator/denominator pair.
Rat make_rat(const Int& num, const Int& den);

/// binom(n, j) for n >= 0; zero outside 0 <= j <= n.
Int binomial(long n, long j);

/// Floor division and the matching nonnegative remainder, for any sign of a.
long floor_div(long a, long b);
long mod_floor(long a, long b);

/// Exact univariate polynomial over arbitrary-precision integers.
///
/// Sparse: the term map holds exponent -> coefficient and never stores a
/// zero coefficient, so two polynomials are equal iff their maps are equal.
/// The zero polynomial is the empty map and has no degree.
/// Values are immutable in practice: every operation returns a fresh
/// polynomial, so sharing across threads needs no synchronization.
class IntPoly {
public:
    using TermMap = std::map<long, Int>;

    IntPoly() = default;

    static IntPoly constant(Int c);
    static IntPoly monomial(Int c, long e);
    static IntPoly variable() { return monomial(1, 1); }

    bool is_zero() const { return terms_.empty(); }

    /// Degree, or nullopt for the zero polynomial.
    std::optional<long> degree() const;

    Int coeff(long e) const;
    const Int& leading_coeff() const;   // requires nonzero
    const Int& trailing_coeff() const;  // requires nonzero
    long lowest_exponent() const;       // requires nonzero

    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    /// Adds c*x^e in place, dropping the term if it cancels.
    void add_term(long e, const Int& c);

    bool operator==(const IntPoly& other) const { return terms_ == other.terms_; }

private:
    TermMap terms_;
};

IntPoly add(const IntPoly& a, const IntPoly& b);
IntPoly sub(const IntPoly& a, const IntPoly& b);
IntPoly negate(const IntPoly& a);

/// (a, coeff) -> (a+e, c*coeff) for every term; c = 0 annihilates.
IntPoly mul_monomial(const IntPoly& p, const Int& c, long e);

IntPoly mul(const IntPoly& a, const IntPoly& b);
IntPoly pow(const IntPoly& p, unsigned long e);

/// Exact quotient a/b, or nullopt when b does not divide a.
/// Never returns a truncated quotient. Throws DivisorZero on b = 0.
std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b);

/// Exact Horner evaluation at a rational point.
Rat eval_rational(const IntPoly& p, const Rat& x);
Int eval_int(const IntPoly& p, const Int& x);

IntPoly derivative(const IntPoly& p);

/// GCD of the coefficients (positive); 0 for the zero polynomial.
Int content(const IntPoly& p);
IntPoly primitive_part(const IntPoly& p);

/// A gcd over the rationals, returned as a primitive integer polynomial
/// with positive leading coefficient. Throws BothZero when a = b = 0.
/// Primitive-part pseudo-remainder sequence; inputs stay small here.
IntPoly content_and_gcd(const IntPoly& a, const IntPoly& b);

/// Degree of gcd(p, p') modulo a word-size prime, or -1 when the prime is
/// unusable (divides the leading coefficient). Degree 0 certifies that p
/// is squarefree over Q.
long gcd_with_derivative_degree_mod_prime(const IntPoly& p, unsigned long prime);

/// Squarefreeness over Q: fast modular certificate with an exact
/// pseudo-remainder fallback when every prime is inconclusive.
bool is_squarefree(const IntPoly& p);

/// True iff every exponent of p is congruent to r modulo k.
bool exponents_congruent(const IntPoly& p, long r, long k);

/// Reads p (all exponents divisible by k) as a polynomial in xi = x^k.
/// Throws StructureViolation when the stride does not hold.
IntPoly to_xi(const IntPoly& p, long k);

/// Substitutes x^k for xi.
IntPoly from_xi(const IntPoly& p_xi, long k);

/// Remainder of p modulo x^k + 1 (exponents folded into [0, k-1]).
IntPoly reduce_mod_xk_plus_1(const IntPoly& p, long k);

/// Ascending-order text form, e.g. "1 + 2x^3 + x^6", "-3x - 4x^5 - x^9".
std::string to_string(const IntPoly& p);

/// Parses the text form: either term order, '^' exponents, implicit
/// coefficient 1, optional '*' between coefficient and x.
IntPoly parse_poly(const std::string& text);

/// JSON object form: exponent string -> decimal coefficient string.
std::string to_json_string(const IntPoly& p);

}  // namespace kfib

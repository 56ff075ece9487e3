#include "kfib/int_poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

namespace kfib {

Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Int binomial(long n, long j) {
    if (n < 0 || j < 0 || j > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(j));
    return r;
}

long floor_div(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

long mod_floor(long a, long b) { return a - b * floor_div(a, b); }

IntPoly IntPoly::constant(Int c) { return monomial(std::move(c), 0); }

IntPoly IntPoly::monomial(Int c, long e) {
    IntPoly p;
    if (c != 0) p.terms_.emplace(e, std::move(c));
    return p;
}

std::optional<long> IntPoly::degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first;
}

Int IntPoly::coeff(long e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
}

const Int& IntPoly::leading_coeff() const { return terms_.rbegin()->second; }
const Int& IntPoly::trailing_coeff() const { return terms_.begin()->second; }
long IntPoly::lowest_exponent() const { return terms_.begin()->first; }

void IntPoly::add_term(long e, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

IntPoly add(const IntPoly& a, const IntPoly& b) {
    IntPoly r = a;
    for (const auto& [e, c] : b.terms()) r.add_term(e, c);
    return r;
}

IntPoly sub(const IntPoly& a, const IntPoly& b) {
    IntPoly r = a;
    for (const auto& [e, c] : b.terms()) r.add_term(e, -c);
    return r;
}

IntPoly negate(const IntPoly& a) {
    IntPoly r;
    for (const auto& [e, c] : a.terms()) r.add_term(e, -c);
    return r;
}

IntPoly mul_monomial(const IntPoly& p, const Int& c, long e) {
    IntPoly r;
    if (c == 0) return r;
    for (const auto& [pe, pc] : p.terms()) r.add_term(pe + e, pc * c);
    return r;
}

IntPoly mul(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    // Convolve against the smaller operand.
    const IntPoly& small = a.term_count() <= b.term_count() ? a : b;
    const IntPoly& big = a.term_count() <= b.term_count() ? b : a;
    for (const auto& [se, sc] : small.terms())
        for (const auto& [be, bc] : big.terms()) r.add_term(se + be, sc * bc);
    return r;
}

IntPoly pow(const IntPoly& p, unsigned long e) {
    IntPoly acc = IntPoly::constant(1);
    IntPoly base = p;
    while (e > 0) {
        if (e & 1UL) acc = mul(acc, base);
        e >>= 1UL;
        if (e > 0) base = mul(base, base);
    }
    return acc;
}

std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw DivisorZero();
    IntPoly quotient;
    IntPoly rem = a;
    const long db = *b.degree();
    const Int& lb = b.leading_coeff();
    while (!rem.is_zero()) {
        const long dr = *rem.degree();
        if (dr < db) return std::nullopt;
        Int q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem.leading_coeff().get_mpz_t(),
                    lb.get_mpz_t());
        if (r != 0) return std::nullopt;
        quotient.add_term(dr - db, q);
        rem = sub(rem, mul_monomial(b, q, dr - db));
    }
    return quotient;
}

Rat eval_rational(const IntPoly& p, const Rat& x) {
    if (p.is_zero()) return Rat(0);
    Rat acc(0);
    long prev = -1;
    // Horner across exponent gaps, descending.
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        if (prev < 0) {
            acc = Rat(it->second);
        } else {
            Rat step;
            mpz_pow_ui(step.get_num_mpz_t(), x.get_num().get_mpz_t(),
                       static_cast<unsigned long>(prev - it->first));
            mpz_pow_ui(step.get_den_mpz_t(), x.get_den().get_mpz_t(),
                       static_cast<unsigned long>(prev - it->first));
            acc = acc * step + Rat(it->second);
        }
        prev = it->first;
    }
    if (prev > 0) {
        Rat step;
        mpz_pow_ui(step.get_num_mpz_t(), x.get_num().get_mpz_t(),
                   static_cast<unsigned long>(prev));
        mpz_pow_ui(step.get_den_mpz_t(), x.get_den().get_mpz_t(),
                   static_cast<unsigned long>(prev));
        acc *= step;
    }
    return acc;
}

Int eval_int(const IntPoly& p, const Int& x) {
    Rat v = eval_rational(p, Rat(x));
    return v.get_num();
}

IntPoly derivative(const IntPoly& p) {
    IntPoly r;
    for (const auto& [e, c] : p.terms())
        if (e > 0) r.add_term(e - 1, c * Int(e));
    return r;
}

Int content(const IntPoly& p) {
    Int g = 0;
    for (const auto& [e, c] : p.terms()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly primitive_part(const IntPoly& p) {
    if (p.is_zero()) return p;
    Int g = content(p);
    if (p.leading_coeff() < 0) g = -g;
    IntPoly r;
    for (const auto& [e, c] : p.terms()) r.add_term(e, c / g);
    return r;
}

namespace {

// lc(b)-scaled remainder of a by b; exactness is irrelevant because the
// caller takes the primitive part immediately.
IntPoly pseudo_remainder(IntPoly rem, const IntPoly& b) {
    const long db = *b.degree();
    const Int& lb = b.leading_coeff();
    while (!rem.is_zero() && *rem.degree() >= db) {
        Int lr = rem.leading_coeff();
        long dr = *rem.degree();
        rem = sub(mul_monomial(rem, lb, 0), mul_monomial(b, lr, dr - db));
    }
    return rem;
}

}  // namespace

IntPoly content_and_gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() && b.is_zero()) throw BothZero();
    if (a.is_zero()) return primitive_part(b);
    if (b.is_zero()) return primitive_part(a);
    IntPoly u = primitive_part(a);
    IntPoly v = primitive_part(b);
    if (*u.degree() < *v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        IntPoly r = primitive_part(pseudo_remainder(u, v));
        u = std::move(v);
        v = std::move(r);
    }
    return primitive_part(u);
}

namespace {

using U64 = unsigned long long;
using U128 = unsigned __int128;

U64 mulmod(U64 a, U64 b, U64 p) { return static_cast<U64>(U128(a) * b % p); }

U64 powmod(U64 a, U64 e, U64 p) {
    U64 r = 1;
    a %= p;
    while (e > 0) {
        if (e & 1ULL) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1ULL;
    }
    return r;
}

std::vector<U64> reduce_mod(const IntPoly& p, U64 prime) {
    std::vector<U64> c(static_cast<std::size_t>(*p.degree()) + 1, 0);
    for (const auto& [e, coef] : p.terms()) {
        U64 m = mpz_fdiv_ui(coef.get_mpz_t(), prime);
        c[static_cast<std::size_t>(e)] = m;
    }
    while (!c.empty() && c.back() == 0) c.pop_back();
    return c;
}

long gcd_degree_mod(std::vector<U64> u, std::vector<U64> v, U64 p) {
    auto trim = [](std::vector<U64>& w) {
        while (!w.empty() && w.back() == 0) w.pop_back();
    };
    trim(u);
    trim(v);
    while (!v.empty()) {
        // u mod v in Z_p
        U64 inv = powmod(v.back(), p - 2, p);
        while (u.size() >= v.size()) {
            U64 f = mulmod(u.back(), inv, p);
            std::size_t off = u.size() - v.size();
            for (std::size_t i = 0; i < v.size(); ++i) {
                U64 t = mulmod(f, v[i], p);
                u[off + i] = (u[off + i] + p - t) % p;
            }
            trim(u);
            if (u.empty()) break;
        }
        std::swap(u, v);
    }
    return u.empty() ? -1 : static_cast<long>(u.size()) - 1;
}

}  // namespace

long gcd_with_derivative_degree_mod_prime(const IntPoly& p, unsigned long prime) {
    if (p.is_zero() || *p.degree() == 0) return 0;
    if (mpz_fdiv_ui(p.leading_coeff().get_mpz_t(), prime) == 0) return -1;
    std::vector<U64> u = reduce_mod(p, prime);
    IntPoly d = derivative(p);
    if (d.is_zero()) return *p.degree();
    std::vector<U64> v = reduce_mod(d, prime);
    if (v.empty()) return -1;
    long g = gcd_degree_mod(std::move(u), std::move(v), prime);
    return g < 0 ? -1 : g;
}

bool is_squarefree(const IntPoly& p) {
    if (p.is_zero()) return false;
    if (*p.degree() <= 1) return true;
    // degree-0 modular gcd certifies squarefreeness over Q
    static const unsigned long primes[] = {(1UL << 61) - 1, 2147483647UL, 4294967291UL};
    for (unsigned long prime : primes) {
        long g = gcd_with_derivative_degree_mod_prime(p, prime);
        if (g == 0) return true;
    }
    IntPoly g = content_and_gcd(p, derivative(p));
    return *g.degree() == 0;
}

bool exponents_congruent(const IntPoly& p, long r, long k) {
    for (const auto& [e, c] : p.terms())
        if (mod_floor(e, k) != mod_floor(r, k)) return false;
    return true;
}

IntPoly to_xi(const IntPoly& p, long k) {
    if (!exponents_congruent(p, 0, k))
        throw StructureViolation("exponent stride is not a multiple of " + std::to_string(k));
    IntPoly r;
    for (const auto& [e, c] : p.terms()) r.add_term(e / k, c);
    return r;
}

IntPoly from_xi(const IntPoly& p_xi, long k) {
    IntPoly r;
    for (const auto& [e, c] : p_xi.terms()) r.add_term(e * k, c);
    return r;
}

IntPoly reduce_mod_xk_plus_1(const IntPoly& p, long k) {
    IntPoly r;
    for (const auto& [e, c] : p.terms()) {
        long fold = floor_div(e, k);
        r.add_term(mod_floor(e, k), (fold % 2 == 0) ? c : -c);
    }
    return r;
}

std::string to_string(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        const bool neg = c < 0;
        Int a = abs(c);
        if (first) {
            if (neg) out << '-';
        } else {
            out << (neg ? " - " : " + ");
        }
        if (a != 1 || e == 0) out << a.get_str();
        if (e >= 1) {
            out << 'x';
            if (e > 1) out << '^' << e;
        }
        first = false;
    }
    return out.str();
}

IntPoly parse_poly(const std::string& text) {
    IntPoly result;
    std::size_t i = 0;
    const std::size_t n = text.size();
    auto skip_ws = [&] {
        while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i == n) throw ParseError("empty polynomial text");
    bool any = false;
    while (true) {
        skip_ws();
        if (i == n) break;
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            if (text[i] == '-') sign = -1;
            ++i;
            skip_ws();
        } else if (any) {
            throw ParseError("expected '+' or '-' at position " + std::to_string(i));
        }
        std::string digits;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) digits += text[i++];
        skip_ws();
        if (i < n && text[i] == '*') {
            ++i;
            skip_ws();
        }
        Int coef = digits.empty() ? Int(1) : Int(digits);
        long expo = 0;
        if (i < n && text[i] == 'x') {
            ++i;
            expo = 1;
            skip_ws();
            if (i < n && text[i] == '^') {
                ++i;
                skip_ws();
                std::string ed;
                while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ed += text[i++];
                if (ed.empty()) throw ParseError("missing exponent after '^'");
                expo = std::stol(ed);
            }
        } else if (digits.empty()) {
            throw ParseError("expected coefficient or 'x' at position " + std::to_string(i));
        }
        result.add_term(expo, sign < 0 ? Int(-coef) : coef);
        any = true;
    }
    if (!any) throw ParseError("no terms in polynomial text");
    return result;
}

std::string to_json_string(const IntPoly& p) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        if (!first) out << ',';
        out << '"' << e << "\":\"" << c.get_str() << '"';
        first = false;
    }
    out << '}';
    return out.str();
}

}  // namespace kfib

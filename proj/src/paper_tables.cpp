#include "kfib/paper_tables.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "kfib/indexing.hpp"
#include "kfib/triangle.hpp"

namespace kfib {

TableId table_id_from_name(const std::string& name) {
    if (name == "table1") return TableId::table1;
    if (name == "table2") return TableId::table2;
    if (name == "table3") return TableId::table3;
    if (name == "table4") return TableId::table4;
    throw IndexOutOfRange("unknown table: " + name);
}

namespace {

std::string strip_spaces(const std::string& s) {
    std::string out;
    for (char ch : s)
        if (ch != ' ') out += ch;
    return out;
}

// prefix (sign and pulled-out content) plus the nontrivial factors
std::pair<std::string, std::vector<std::string>> factored_parts(const Factorization& f,
                                                                bool dense) {
    Int scale = content(f.Q_xi);
    if (f.Q_xi.trailing_coeff() < 0) scale = -scale;
    IntPoly q_reduced;
    for (const auto& [e, c] : f.Q_xi.terms()) q_reduced.add_term(e, c / scale);

    std::string prefix;
    if (scale < 0) prefix += "-";
    Int mag = abs(scale);
    if (mag != 1) prefix += mag.get_str();

    std::vector<std::string> parts;
    if (f.r >= 1) parts.push_back(f.r == 1 ? "x" : "x^" + std::to_string(f.r));
    if (f.rho >= 1) {
        std::string base = "(1+x^" + std::to_string(f.k) + ")";
        parts.push_back(f.rho == 1 ? base : base + "^" + std::to_string(f.rho));
    }
    if (q_reduced.degree() != 0) {
        std::string body = to_string(from_xi(q_reduced, f.k));
        if (dense) body = strip_spaces(body);
        if (parts.empty() && prefix.empty())
            parts.push_back(body);  // lone polynomial, no parentheses
        else
            parts.push_back("(" + body + ")");
    }
    if (parts.empty()) parts.push_back("1");
    return {prefix, parts};
}

}  // namespace

std::string factored_cell(const Factorization& f) {
    auto [prefix, parts] = factored_parts(f, false);
    std::string out = prefix;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) out += " ";
        out += parts[i];
    }
    return out;
}

std::string factored_compact(const Factorization& f) {
    auto [prefix, parts] = factored_parts(f, true);
    std::string out = prefix;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) out += "*";
        out += parts[i];
    }
    return out;
}

namespace {

std::string poly_cell(const IntPoly& p) { return p.is_zero() ? "" : to_string(p); }

TextTable build_table1() {
    TextTable t;
    t.title = "Tribonacci, Quadranacci and Pentanacci polynomials for n <= 0";
    t.header = {"n", "T_n(x)", "Q_n(x)", "P_n(x)", "d_{n,3}", "d_{n,4}", "d_{n,5}"};
    SequenceCache c3(3), c4(4), c5(5);
    for (long n = 0; n >= -23; --n) {
        std::vector<std::string> row;
        row.push_back(std::to_string(n));
        row.push_back(poly_cell(c3.at(n)));
        row.push_back(poly_cell(c4.at(n)));
        row.push_back(poly_cell(c5.at(n)));
        for (long k = 3; k <= 5; ++k) {
            IndexProfile p = profile(n, k);
            row.push_back(p.vanishes ? "" : std::to_string(*p.degree));
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

TextTable build_table2() {
    TextTable t;
    t.title = "Left-justified 4-nomial triangle for n < 0";
    t.header = {"m\\j"};
    for (long j = 0; j <= 11; ++j) t.header.push_back(std::to_string(j));
    for (long m = -1; m >= -3; --m) {
        TriangleRow row = TriangleRow::make(4, m, 12);
        std::vector<std::string> cells;
        cells.push_back(std::to_string(m));
        for (const Int& v : row.coeffs) cells.push_back(v.get_str());
        t.rows.push_back(std::move(cells));
    }
    return t;
}

TextTable build_factored_table(long n_from, long n_to, const std::string& title) {
    TextTable t;
    t.title = title;
    t.header = {"n", "T_n(x)", "Q_n(x)", "rho_{n,3}", "rho_{n,4}"};
    SequenceCache c3(3), c4(4);
    const long step = n_from <= n_to ? 1 : -1;
    for (long n = n_from;; n += step) {
        std::vector<std::string> row;
        row.push_back(std::to_string(n));
        // Tribonacci column runs to n = 2(k+1) = 8 only in the positive table
        const bool t_in_range = n <= 0 || n <= 8;
        if (t_in_range && !profile(n, 3).vanishes)
            row.push_back(factored_cell(factorize(c3, n)));
        else
            row.push_back("");
        if (!profile(n, 4).vanishes)
            row.push_back(factored_cell(factorize(c4, n)));
        else
            row.push_back("");
        row.push_back(t_in_range ? std::to_string(profile(n, 3).rho) : "");
        row.push_back(std::to_string(profile(n, 4).rho));
        t.rows.push_back(std::move(row));
        if (n == n_to) break;
    }
    return t;
}

}  // namespace

TextTable make_table(TableId id) {
    switch (id) {
        case TableId::table1:
            return build_table1();
        case TableId::table2:
            return build_table2();
        case TableId::table3:
            return build_factored_table(1, 10,
                                        "Factored Tribonacci and Quadranacci polynomials, n >= 1");
        case TableId::table4:
        default:
            return build_factored_table(-10, -19,
                                        "Factored Tribonacci and Quadranacci polynomials, n < 0");
    }
}

std::string render_table(const TextTable& table) {
    std::vector<std::size_t> widths(table.header.size(), 0);
    auto grow = [&](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size() && i < widths.size(); ++i)
            widths[i] = std::max(widths[i], row[i].size());
    };
    grow(table.header);
    for (const auto& row : table.rows) grow(row);

    std::ostringstream out;
    out << "# " << table.title << "\n";
    auto emit = [&](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) out << "  ";
            out << row[i];
            if (i + 1 < row.size())
                out << std::string(widths[i] - std::min(widths[i], row[i].size()), ' ');
        }
        out << "\n";
    };
    emit(table.header);
    for (const auto& row : table.rows) emit(row);
    return out.str();
}

namespace {

bool has_top_level_sign(const std::string& s) {
    int depth = 0;
    bool seen_token = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char ch = s[i];
        if (ch == '(') ++depth;
        else if (ch == ')') --depth;
        else if (depth == 0) {
            if ((ch == '+' || ch == '-') && seen_token) return true;
            if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '+' && ch != '-')
                seen_token = true;
        }
    }
    return false;
}

}  // namespace

IntPoly parse_factored(const std::string& text) {
    if (has_top_level_sign(text)) return parse_poly(text);

    std::size_t i = 0;
    const std::size_t n = text.size();
    auto skip = [&] {
        while (i < n && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '*'))
            ++i;
    };
    skip();
    int sign = 1;
    if (i < n && (text[i] == '+' || text[i] == '-')) {
        if (text[i] == '-') sign = -1;
        ++i;
    }
    IntPoly acc = IntPoly::constant(sign);
    bool any = false;
    while (true) {
        skip();
        if (i >= n) break;
        if (text[i] == '(') {
            std::size_t close = i + 1;
            int depth = 1;
            while (close < n && depth > 0) {
                if (text[close] == '(') ++depth;
                if (text[close] == ')') --depth;
                ++close;
            }
            if (depth != 0) throw ParseError("unbalanced parentheses");
            IntPoly factor = parse_poly(text.substr(i + 1, close - i - 2));
            i = close;
            skip();
            unsigned long e = 1;
            if (i < n && text[i] == '^') {
                ++i;
                std::string d;
                while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) d += text[i++];
                if (d.empty()) throw ParseError("missing exponent after '^'");
                e = std::stoul(d);
            }
            acc = mul(acc, pow(factor, e));
        } else if (text[i] == 'x') {
            ++i;
            long e = 1;
            if (i < n && text[i] == '^') {
                ++i;
                std::string d;
                while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) d += text[i++];
                if (d.empty()) throw ParseError("missing exponent after '^'");
                e = std::stol(d);
            }
            acc = mul_monomial(acc, 1, e);
        } else if (std::isdigit(static_cast<unsigned char>(text[i]))) {
            std::string d;
            while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) d += text[i++];
            acc = mul_monomial(acc, Int(d), 0);
        } else {
            throw ParseError("unexpected character in factored form at position " +
                             std::to_string(i));
        }
        any = true;
    }
    if (!any) throw ParseError("empty factored form");
    return acc;
}

}  // namespace kfib

#pragma once

#include <string>
#include <vector>

#include "kfib/factorization.hpp"
#include "kfib/int_poly.hpp"

namespace kfib {

/// A rendered table: header row plus body rows of cell strings. Blank
/// cells mark identically vanishing polynomials.
struct TextTable {
    std::string title;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

enum class TableId { table1, table2, table3, table4 };

TableId table_id_from_name(const std::string& name);

/// table1: T_n, Q_n, P_n (k = 3, 4, 5) for n = 0..-23 with degree columns.
/// table2: left-justified 4-nomial triangle rows m = -1..-3, columns 0..11.
/// table3: factored T_n (n = 1..8) and Q_n (n = 1..10) with rho columns.
/// table4: factored T_n and Q_n for n = -10..-19 with rho columns.
TextTable make_table(TableId id);

/// Column-aligned plain-text rendering.
std::string render_table(const TextTable& table);

/// Factored cell in the tables' style: content and sign pulled out front,
/// then x^r, (1+x^k)^rho and the primitive cofactor, ascending inside,
/// e.g. "2x^2 (1+x^3)^2 (5+2x^3)". Trivial factors are omitted.
std::string factored_cell(const Factorization& f);

/// The same factorization joined with '*', e.g.
/// "x^2*(1+x^3)^2*(6+4x^3+x^6)".
std::string factored_compact(const Factorization& f);

/// Expands a factored cell string (products of optionally parenthesized,
/// optionally powered factors with an optional leading sign/integer).
/// Used to compare table text against exact polynomials.
IntPoly parse_factored(const std::string& text);

}  // namespace kfib

#ifndef SPECCOVER_IO_HPP
#define SPECCOVER_IO_HPP

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "core.hpp"
#include "transform.hpp"

namespace speccover {

namespace detail {

inline std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        if (end == text.size()) break;
        start = end + 1;
    }
    return lines;
}

inline std::vector<std::string_view> split_words(std::string_view line) {
    std::vector<std::string_view> words;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) words.push_back(line.substr(i, j - i));
        i = j;
    }
    return words;
}

inline bool blank(std::string_view line) { return split_words(line).empty(); }

[[noreturn]] inline void syntax_error(std::size_t line, const std::string& what) {
    throw ParseError(ParseError::Kind::syntax, line, "line " + std::to_string(line) + ": " + what);
}

[[noreturn]] inline void range_error(std::size_t line, const std::string& what) {
    throw ParseError(ParseError::Kind::range, line, "line " + std::to_string(line) + ": " + what);
}

template <typename Int>
Int parse_int(std::string_view word, std::size_t line) {
    Int value{};
    auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
    if (ec != std::errc{} || ptr != word.data() + word.size())
        syntax_error(line, "expected an integer, got '" + std::string(word) + "'");
    return value;
}

// 1-based index in [1, limit], returned 0-based.
inline std::size_t parse_index(std::string_view word, std::size_t limit, std::size_t line,
                               const char* what) {
    const auto v = parse_int<std::size_t>(word, line);
    if (v < 1 || v > limit)
        range_error(line, std::string(what) + " " + std::to_string(v) + " out of range 1.." +
                              std::to_string(limit));
    return v - 1;
}

inline bool parse_side(std::string_view word, std::size_t line) {
    if (word == "0") return false;
    if (word == "1") return true;
    range_error(line, "component selector must be 0 or 1, got '" + std::string(word) + "'");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// DIMACS CNF
// ---------------------------------------------------------------------------

/// Parses DIMACS CNF text. Comment lines are skipped, a clause may span
/// several lines, and repeated literals in a clause collapse to one.
inline CnfMatrix parse_dimacs(std::string_view text) {
    const auto lines = detail::split_lines(text);
    std::size_t n = 0, m = 0;
    bool have_header = false;
    std::vector<int> cells;
    std::size_t clause = 0;      // clauses completed so far
    bool clause_open = false;
    std::size_t last_line = 0;

    for (std::size_t ln = 0; ln < lines.size(); ++ln) {
        const std::size_t line_no = ln + 1;
        const auto words = detail::split_words(lines[ln]);
        if (words.empty() || words[0] == "c" || words[0][0] == 'c') continue;
        if (words[0] == "%") break;  // SATLIB trailer
        last_line = line_no;
        if (words[0] == "p") {
            if (have_header) detail::syntax_error(line_no, "duplicate problem line");
            if (words.size() != 4 || words[1] != "cnf")
                detail::syntax_error(line_no, "problem line must be 'p cnf <vars> <clauses>'");
            n = detail::parse_int<std::size_t>(words[2], line_no);
            m = detail::parse_int<std::size_t>(words[3], line_no);
            if (n == 0 || m == 0)
                detail::syntax_error(line_no, "problem line needs at least one variable and clause");
            have_header = true;
            cells.assign(n * m, 0);
            continue;
        }
        if (!have_header) detail::syntax_error(line_no, "clause before the problem line");
        for (auto w : words) {
            const auto lit = detail::parse_int<long long>(w, line_no);
            if (lit == 0) {
                if (!clause_open)
                    throw ValidationError(ValidationError::Kind::empty_clause, clause + 1, 0,
                                          "clause " + std::to_string(clause + 1) + " is empty");
                ++clause;
                clause_open = false;
                continue;
            }
            if (clause >= m)
                detail::syntax_error(line_no, "more clauses than the " + std::to_string(m) +
                                                  " declared");
            const unsigned long long var = lit < 0 ? -static_cast<unsigned long long>(lit)
                                                   : static_cast<unsigned long long>(lit);
            if (var > n)
                detail::range_error(line_no, "literal " + std::string(w) +
                                                 " exceeds the declared " + std::to_string(n) +
                                                 " variables");
            int& cell = cells[clause * n + (var - 1)];
            const int sign = lit < 0 ? -1 : 1;
            if (cell == -sign)
                throw ParseError(ParseError::Kind::tautology, clause + 1,
                                 "clause " + std::to_string(clause + 1) +
                                     " contains both polarities of variable " +
                                     std::to_string(var));
            cell = sign;
            clause_open = true;
        }
    }
    if (!have_header) detail::syntax_error(last_line + 1, "missing problem line");
    if (clause_open) detail::syntax_error(last_line, "last clause is not terminated by 0");
    if (clause != m)
        detail::syntax_error(last_line, "declared " + std::to_string(m) + " clauses, found " +
                                            std::to_string(clause));
    return CnfMatrix::validate(n, m, cells);
}

/// Canonical DIMACS text: header, then clauses in order with literals in
/// ascending variable order.
inline std::string emit_dimacs(const CnfMatrix& f) {
    std::string out = "p cnf " + std::to_string(f.variable_count()) + " " +
                      std::to_string(f.clause_count()) + "\n";
    for (std::size_t j = 0; j < f.clause_count(); ++j) {
        const auto clause = f.clause(j);
        for (std::size_t i = 0; i < clause.size(); ++i) {
            if (clause[i] == 0) continue;
            if (clause[i] < 0) out += '-';
            out += std::to_string(i + 1);
            out += ' ';
        }
        out += "0\n";
    }
    return out;
}

// ---------------------------------------------------------------------------
// Decomposition files
// ---------------------------------------------------------------------------
//
//   p sdec <n> <m>
//   n lines of m '0'/'1' characters (sM0)
//   <blank>
//   n lines of m '0'/'1' characters (sM1)

inline Decomposition parse_decomposition(std::string_view text) {
    auto lines = detail::split_lines(text);
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    if (lines.empty()) detail::syntax_error(1, "empty decomposition file");

    const auto header = detail::split_words(lines[0]);
    if (header.size() != 4 || header[0] != "p" || header[1] != "sdec")
        detail::syntax_error(1, "header must be 'p sdec <n> <m>'");
    const auto n = detail::parse_int<std::size_t>(header[2], 1);
    const auto m = detail::parse_int<std::size_t>(header[3], 1);
    if (n == 0 || m == 0) detail::syntax_error(1, "n and m must be at least 1");
    if (lines.size() != 2 * n + 2)
        detail::syntax_error(lines.size(), "expected " + std::to_string(2 * n + 2) +
                                               " lines, found " + std::to_string(lines.size()));
    if (!detail::blank(lines[n + 1]))
        detail::syntax_error(n + 2, "expected a blank line between the two matrices");

    std::vector<BitRow> rows[2] = {std::vector<BitRow>(n, BitRow(m)),
                                   std::vector<BitRow>(n, BitRow(m))};
    for (int alpha = 0; alpha < 2; ++alpha) {
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t ln = 1 + alpha * (n + 1) + i;
            const std::string_view row = lines[ln];
            if (row.size() != m)
                detail::syntax_error(ln + 1, "expected " + std::to_string(m) +
                                                 " characters, found " +
                                                 std::to_string(row.size()));
            for (std::size_t j = 0; j < m; ++j) {
                if (row[j] == '1')
                    rows[alpha][i].set(j);
                else if (row[j] != '0')
                    detail::syntax_error(ln + 1, std::string("unexpected character '") + row[j] +
                                                     "'");
            }
        }
    }
    return Decomposition::validate(std::move(rows[0]), std::move(rows[1]));
}

inline std::string emit_decomposition(const Decomposition& d) {
    const std::size_t n = d.pair_count();
    const std::size_t m = d.element_count();
    std::string out = "p sdec " + std::to_string(n) + " " + std::to_string(m) + "\n";
    for (bool alpha : {false, true}) {
        if (alpha) out += '\n';
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < m; ++j) out += d.contains(i, alpha, j) ? '1' : '0';
            out += '\n';
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Trace files
// ---------------------------------------------------------------------------
//
//   p trace <n> <m> sigma=<bits>
//   RM i d e | ADD i d e | MV j g i d e | FLIP i      (1-based indices)
//
// Counts are not serialized; a parsed trace has zero counts except the
// per-kind step totals.

inline Trace parse_trace(std::string_view text) {
    const auto lines = detail::split_lines(text);
    Trace tr;
    bool have_header = false;
    for (std::size_t ln = 0; ln < lines.size(); ++ln) {
        const std::size_t line_no = ln + 1;
        const auto w = detail::split_words(lines[ln]);
        if (w.empty() || w[0][0] == 'c') continue;
        if (!have_header) {
            if (w.size() != 5 || w[0] != "p" || w[1] != "trace" || w[4].substr(0, 6) != "sigma=")
                detail::syntax_error(line_no, "header must be 'p trace <n> <m> sigma=<bits>'");
            tr.n = detail::parse_int<std::size_t>(w[2], line_no);
            tr.m = detail::parse_int<std::size_t>(w[3], line_no);
            if (tr.n == 0 || tr.m == 0) detail::syntax_error(line_no, "n and m must be at least 1");
            const auto bits = w[4].substr(6);
            if (bits.size() != tr.n)
                detail::syntax_error(line_no, "sigma has " + std::to_string(bits.size()) +
                                                  " bits, expected " + std::to_string(tr.n));
            try {
                tr.initial = BoolTuple::from_string(bits);
            } catch (const ParseError& e) {
                detail::syntax_error(line_no, e.what());
            }
            have_header = true;
            continue;
        }
        auto expect = [&](std::size_t count) {
            if (w.size() != count)
                detail::syntax_error(line_no, std::string(w[0]) + " takes " +
                                                  std::to_string(count - 1) + " arguments");
        };
        auto pair = [&](std::size_t k) { return detail::parse_index(w[k], tr.n, line_no, "pair"); };
        auto elem = [&](std::size_t k) {
            return detail::parse_index(w[k], tr.m, line_no, "element");
        };
        auto side = [&](std::size_t k) { return detail::parse_side(w[k], line_no); };
        if (w[0] == "RM") {
            expect(4);
            tr.push(RemoveElement{pair(1), side(2), elem(3)});
        } else if (w[0] == "ADD") {
            expect(4);
            tr.push(AddElement{pair(1), side(2), elem(3)});
        } else if (w[0] == "MV") {
            expect(6);
            tr.push(MoveElement{pair(1), side(2), pair(3), side(4), elem(5)});
        } else if (w[0] == "FLIP") {
            expect(2);
            tr.push(FlipPair{pair(1)});
        } else {
            detail::syntax_error(line_no, "unknown step '" + std::string(w[0]) + "'");
        }
    }
    if (!have_header) detail::syntax_error(lines.size(), "missing trace header");
    return tr;
}

inline std::string emit_trace(const Trace& tr) {
    std::string out = "p trace " + std::to_string(tr.n) + " " + std::to_string(tr.m) +
                      " sigma=" + tr.initial.to_string() + "\n";
    auto num = [](std::size_t v) { return std::to_string(v + 1); };
    auto bit = [](bool b) { return b ? "1" : "0"; };
    for (const auto& op : tr.steps) {
        if (const auto* o = std::get_if<RemoveElement>(&op))
            out += "RM " + num(o->pair) + " " + bit(o->side) + " " + num(o->element);
        else if (const auto* o = std::get_if<AddElement>(&op))
            out += "ADD " + num(o->pair) + " " + bit(o->side) + " " + num(o->element);
        else if (const auto* o = std::get_if<MoveElement>(&op))
            out += "MV " + num(o->from_pair) + " " + bit(o->from_side) + " " + num(o->to_pair) +
                   " " + bit(o->to_side) + " " + num(o->element);
        else
            out += "FLIP " + num(std::get<FlipPair>(op).pair);
        out += '\n';
    }
    return out;
}

}  // namespace speccover

#endif

#ifndef SPECCOVER_RANDOM_HPP
#define SPECCOVER_RANDOM_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "core.hpp"
#include "sat.hpp"

namespace speccover {

namespace detail {

// Uniform draw from {-1, 0, +1}. Uses the raw engine output so results do
// not depend on the standard library's distribution implementation.
inline std::int8_t draw_cell(std::mt19937_64& rng) {
    return static_cast<std::int8_t>(static_cast<int>(rng() % 3) - 1);
}

// Redraws all-zero rows, then all-zero columns, until both are gone.
// Redrawing a column only touches zero cells of that column, so no row
// becomes empty again.
inline void fill_valid(std::vector<std::int8_t>& cells, std::size_t n, std::size_t m,
                       std::mt19937_64& rng) {
    for (auto& c : cells) c = draw_cell(rng);
    for (std::size_t j = 0; j < m; ++j) {
        auto row = cells.begin() + static_cast<std::ptrdiff_t>(j * n);
        while (std::all_of(row, row + static_cast<std::ptrdiff_t>(n),
                           [](std::int8_t c) { return c == 0; }))
            for (std::size_t i = 0; i < n; ++i) row[i] = draw_cell(rng);
    }
    for (std::size_t i = 0; i < n; ++i) {
        auto used = [&] {
            for (std::size_t j = 0; j < m; ++j)
                if (cells[j * n + i] != 0) return true;
            return false;
        };
        while (!used())
            for (std::size_t j = 0; j < m; ++j) cells[j * n + i] = draw_cell(rng);
    }
}

}  // namespace detail

/// Deterministic random CNF matrix with n variables and m clauses. With
/// `require_satisfiable`, candidates are redrawn until one is satisfiable;
/// this needs n within the oracle guard.
inline CnfMatrix random_instance(std::size_t n, std::size_t m, std::uint64_t seed,
                                 bool require_satisfiable = false) {
    if (n == 0 || m == 0) throw DimensionError("random instance needs n >= 1 and m >= 1");
    if (require_satisfiable) detail::require_enumerable(n);
    std::mt19937_64 rng(seed);
    std::vector<std::int8_t> cells(n * m);
    for (;;) {
        detail::fill_valid(cells, n, m, rng);
        CnfMatrix f(trusted, n, m, cells);
        if (!require_satisfiable || first_satisfying(f)) return f;
    }
}

/// Deterministic random CNF matrix satisfied by `sigma`: every clause gets
/// at least one literal that sigma makes true. Works for any n.
inline CnfMatrix planted_instance(std::size_t m, const BoolTuple& sigma, std::uint64_t seed) {
    const std::size_t n = sigma.size();
    if (n == 0 || m == 0) throw DimensionError("planted instance needs n >= 1 and m >= 1");
    std::mt19937_64 rng(seed);
    std::vector<std::int8_t> cells(n * m);
    detail::fill_valid(cells, n, m, rng);
    for (std::size_t j = 0; j < m; ++j) {
        bool satisfied = false;
        for (std::size_t i = 0; i < n && !satisfied; ++i) {
            const int c = cells[j * n + i];
            satisfied = (c == 1 && sigma[i]) || (c == -1 && !sigma[i]);
        }
        if (!satisfied) {
            const std::size_t i = rng() % n;
            cells[j * n + i] = sigma[i] ? 1 : -1;
        }
    }
    return CnfMatrix(trusted, n, m, std::move(cells));
}

/// Deterministic random valid decomposition with n pairs over m elements.
inline Decomposition random_decomposition(std::size_t n, std::size_t m, std::uint64_t seed) {
    if (n == 0 || m == 0) throw DimensionError("random decomposition needs n >= 1 and m >= 1");
    std::mt19937_64 rng(seed);
    std::vector<std::int8_t> cells(n * m);
    detail::fill_valid(cells, n, m, rng);
    std::vector<BitRow> rows0(n, BitRow(m)), rows1(n, BitRow(m));
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            if (cells[j * n + i] == -1) rows0[i].set(j);
            if (cells[j * n + i] == 1) rows1[i].set(j);
        }
    return Decomposition(trusted, std::move(rows0), std::move(rows1));
}

}  // namespace speccover

#endif

#ifndef SPECCOVER_CONVERT_HPP
#define SPECCOVER_CONVERT_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "core.hpp"

namespace speccover {

// Both conversions visit each of the n*m cells once in a flat loop. Per cell
// they charge loop control (1 addition + 1 comparison) and one literal
// recognition; non-zero cells also charge one assignment. Output storage is
// zero-initialized on allocation, so the total is exactly
// 3*n*m + data_length.

/// Builds the decomposition whose pair i holds the clauses containing the
/// negative (component 0) and positive (component 1) literal of x_i.
/// Clause j becomes element j.
inline Decomposition cnf_to_decomposition(const CnfMatrix& f, OpCounts* ops = nullptr) {
    const std::size_t n = f.variable_count();
    const std::size_t m = f.clause_count();
    std::vector<BitRow> rows0(n, BitRow(m));
    std::vector<BitRow> rows1(n, BitRow(m));

    const auto cells = f.cells();
    std::uint64_t writes = 0;
    for (std::size_t k = 0; k < cells.size(); ++k) {
        const std::size_t clause = k / n;
        const std::size_t var = k % n;
        switch (cells[k]) {
            case 1:
                rows1[var].set(clause);
                ++writes;
                break;
            case -1:
                rows0[var].set(clause);
                ++writes;
                break;
            default:
                break;
        }
    }
    if (ops) {
        ops->loop(cells.size());
        ops->recognitions += cells.size();
        ops->assignments += writes;
    }
    return Decomposition(trusted, std::move(rows0), std::move(rows1));
}

/// Builds the CNF whose clause j collects x_i^alpha for every pair i with
/// element j in M_i^alpha.
inline CnfMatrix decomposition_to_cnf(const Decomposition& d, OpCounts* ops = nullptr) {
    const std::size_t n = d.pair_count();
    const std::size_t m = d.element_count();
    std::vector<std::int8_t> cells(n * m, 0);

    std::uint64_t writes = 0;
    for (std::size_t k = 0; k < cells.size(); ++k) {
        const std::size_t clause = k / n;
        const std::size_t var = k % n;
        if (d.contains(var, false, clause)) {
            cells[k] = -1;
            ++writes;
        } else if (d.contains(var, true, clause)) {
            cells[k] = 1;
            ++writes;
        }
    }
    if (ops) {
        ops->loop(cells.size());
        ops->recognitions += cells.size();
        ops->assignments += writes;
    }
    return CnfMatrix(trusted, n, m, std::move(cells));
}

}  // namespace speccover

#endif

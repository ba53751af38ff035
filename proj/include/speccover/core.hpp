#ifndef SPECCOVER_CORE_HPP
#define SPECCOVER_CORE_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bit_row.hpp"
#include "error.hpp"

namespace speccover {

/// Tag for constructors that skip validation. The caller guarantees the
/// invariants of the constructed type.
struct trusted_t {
    explicit trusted_t() = default;
};
inline constexpr trusted_t trusted{};

// ---------------------------------------------------------------------------
// Elementary-operation accounting
// ---------------------------------------------------------------------------

/// Tally of elementary operations in the four categories used for every
/// complexity bound: assignments, additions/subtractions, comparisons and
/// literal recognitions. Loop control is charged as one addition plus one
/// comparison per iteration.
struct OpCounts {
    std::uint64_t assignments = 0;
    std::uint64_t additions = 0;
    std::uint64_t comparisons = 0;
    std::uint64_t recognitions = 0;

    std::uint64_t total() const noexcept {
        return assignments + additions + comparisons + recognitions;
    }

    void loop(std::uint64_t iterations = 1) noexcept {
        additions += iterations;
        comparisons += iterations;
    }

    OpCounts& operator+=(const OpCounts& other) noexcept {
        assignments += other.assignments;
        additions += other.additions;
        comparisons += other.comparisons;
        recognitions += other.recognitions;
        return *this;
    }

    friend bool operator==(const OpCounts&, const OpCounts&) = default;
};

// ---------------------------------------------------------------------------
// BoolTuple
// ---------------------------------------------------------------------------

/// Length-n vector over {0, 1}: an assignment to x_1..x_n, or the tuple of
/// superscripts selecting one component from each pair of a decomposition.
///
/// Ordering is lexicographic with position 0 most significant, which is the
/// numeric order of the tuple read as a binary number.
class BoolTuple {
public:
    BoolTuple() = default;
    explicit BoolTuple(std::size_t size) : bits_(size, 0) {}
    BoolTuple(std::initializer_list<int> bits) {
        bits_.reserve(bits.size());
        for (int b : bits) bits_.push_back(b != 0 ? 1 : 0);
    }

    /// Parses a string of '0'/'1' characters, first character = position 0.
    static BoolTuple from_string(std::string_view text) {
        BoolTuple t(text.size());
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (text[i] != '0' && text[i] != '1')
                throw ParseError(ParseError::Kind::syntax, 0,
                                 "bit string may only contain '0' and '1': '" + std::string(text) +
                                     "'");
            t.bits_[i] = text[i] == '1';
        }
        return t;
    }

    /// Tuple whose binary reading (position 0 most significant) equals `value`.
    static BoolTuple from_index(std::uint64_t value, std::size_t size) {
        BoolTuple t(size);
        for (std::size_t i = 0; i < size; ++i) t.bits_[i] = (value >> (size - 1 - i)) & 1u;
        return t;
    }

    /// Inverse of from_index. Requires size() <= 64.
    std::uint64_t index() const noexcept {
        std::uint64_t v = 0;
        for (auto b : bits_) v = (v << 1) | b;
        return v;
    }

    std::size_t size() const noexcept { return bits_.size(); }
    bool operator[](std::size_t i) const noexcept { return bits_[i] != 0; }
    void set(std::size_t i, bool value) noexcept { bits_[i] = value ? 1 : 0; }
    void flip(std::size_t i) noexcept { bits_[i] ^= 1; }

    bool is_constant(bool value) const noexcept {
        for (auto b : bits_)
            if ((b != 0) != value) return false;
        return true;
    }

    std::string to_string() const {
        std::string s(bits_.size(), '0');
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i]) s[i] = '1';
        return s;
    }

    friend bool operator==(const BoolTuple&, const BoolTuple&) = default;
    friend auto operator<=>(const BoolTuple&, const BoolTuple&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

// ---------------------------------------------------------------------------
// CnfMatrix
// ---------------------------------------------------------------------------

/// m x n matrix over {-1, 0, +1}: row j is clause c_j, column i is variable
/// x_i. +1 means x_i occurs positively, -1 negatively, 0 not at all.
///
/// Invariants: no all-zero row (empty clause) and no all-zero column
/// (unused variable). A clause holding both polarities of a variable is not
/// representable.
class CnfMatrix {
public:
    /// Validates a clause-major matrix of cells.
    static CnfMatrix validate(const std::vector<std::vector<int>>& rows) {
        if (rows.empty() || rows.front().empty())
            throw ValidationError(ValidationError::Kind::shape, 0, 0,
                                  "CNF matrix must have at least one clause and one variable");
        const std::size_t n = rows.front().size();
        std::vector<int> flat;
        flat.reserve(rows.size() * n);
        for (std::size_t j = 0; j < rows.size(); ++j) {
            if (rows[j].size() != n)
                throw ValidationError(ValidationError::Kind::shape, j + 1, 0,
                                      "CNF matrix is not rectangular at row " +
                                          std::to_string(j + 1));
            flat.insert(flat.end(), rows[j].begin(), rows[j].end());
        }
        return validate(n, rows.size(), flat);
    }

    /// Validates a flat clause-major buffer of `clauses * variables` cells.
    static CnfMatrix validate(std::size_t variables, std::size_t clauses,
                              std::span<const int> cells) {
        if (variables == 0 || clauses == 0 || cells.size() != variables * clauses)
            throw ValidationError(ValidationError::Kind::shape, 0, 0,
                                  "CNF matrix shape does not match its cell count");
        std::vector<std::int8_t> packed(cells.size());
        for (std::size_t j = 0; j < clauses; ++j)
            for (std::size_t i = 0; i < variables; ++i) {
                const int v = cells[j * variables + i];
                if (v < -1 || v > 1)
                    throw ValidationError(ValidationError::Kind::bad_entry, j + 1, i + 1,
                                          "entry (" + std::to_string(j + 1) + "," +
                                              std::to_string(i + 1) + ") = " + std::to_string(v) +
                                              " is not in {-1,0,1}");
                packed[j * variables + i] = static_cast<std::int8_t>(v);
            }
        CnfMatrix f(trusted, variables, clauses, std::move(packed));
        for (std::size_t j = 0; j < clauses; ++j) {
            bool any = false;
            for (std::size_t i = 0; i < variables && !any; ++i) any = f.at(j, i) != 0;
            if (!any)
                throw ValidationError(ValidationError::Kind::empty_clause, j + 1, 0,
                                      "clause " + std::to_string(j + 1) + " is empty");
        }
        for (std::size_t i = 0; i < variables; ++i) {
            bool any = false;
            for (std::size_t j = 0; j < clauses && !any; ++j) any = f.at(j, i) != 0;
            if (!any)
                throw ValidationError(ValidationError::Kind::unused_variable, 0, i + 1,
                                      "variable " + std::to_string(i + 1) +
                                          " occurs in no clause");
        }
        return f;
    }

    CnfMatrix(trusted_t, std::size_t variables, std::size_t clauses,
              std::vector<std::int8_t> cells)
        : n_(variables), m_(clauses), cells_(std::move(cells)) {}

    std::size_t variable_count() const noexcept { return n_; }
    std::size_t clause_count() const noexcept { return m_; }

    /// Cell for clause `clause` and variable `var`, both 0-based.
    int at(std::size_t clause, std::size_t var) const noexcept {
        return cells_[clause * n_ + var];
    }

    std::span<const std::int8_t> clause(std::size_t j) const noexcept {
        return std::span<const std::int8_t>(cells_).subspan(j * n_, n_);
    }

    std::span<const std::int8_t> cells() const noexcept { return cells_; }

    std::vector<std::vector<int>> to_rows() const {
        std::vector<std::vector<int>> rows(m_, std::vector<int>(n_));
        for (std::size_t j = 0; j < m_; ++j)
            for (std::size_t i = 0; i < n_; ++i) rows[j][i] = at(j, i);
        return rows;
    }

    friend bool operator==(const CnfMatrix&, const CnfMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::size_t m_ = 0;
    std::vector<std::int8_t> cells_;
};

// ---------------------------------------------------------------------------
// Decomposition
// ---------------------------------------------------------------------------

/// Ordered list of n pairs (M_i^0, M_i^1) of subsets of S = {e_1..e_m},
/// held as two n x m bit matrices.
///
/// Invariants:
///   - the two components of a pair are disjoint,
///   - no pair has both components empty,
///   - every element lies in some component.
class Decomposition {
public:
    static Decomposition validate(const std::vector<std::vector<int>>& sm0,
                                  const std::vector<std::vector<int>>& sm1) {
        if (sm0.empty() || sm0.size() != sm1.size() || sm0.front().empty())
            throw ValidationError(ValidationError::Kind::shape, 0, 0,
                                  "decomposition matrices must both be n x m with n, m >= 1");
        const std::size_t n = sm0.size();
        const std::size_t m = sm0.front().size();
        std::vector<BitRow> rows0(n, BitRow(m));
        std::vector<BitRow> rows1(n, BitRow(m));
        for (std::size_t i = 0; i < n; ++i) {
            if (sm0[i].size() != m || sm1[i].size() != m)
                throw ValidationError(ValidationError::Kind::shape, i + 1, 0,
                                      "decomposition matrices are not rectangular at row " +
                                          std::to_string(i + 1));
            for (std::size_t j = 0; j < m; ++j) {
                for (auto [src, dst] : {std::pair{&sm0, &rows0}, std::pair{&sm1, &rows1}}) {
                    const int v = (*src)[i][j];
                    if (v != 0 && v != 1)
                        throw ValidationError(ValidationError::Kind::bad_entry, i + 1, j + 1,
                                              "decomposition entries must be 0 or 1");
                    if (v) (*dst)[i].set(j);
                }
            }
        }
        return validate(std::move(rows0), std::move(rows1));
    }

    /// Validates a pair of row vectors; every row must have the same size m >= 1.
    static Decomposition validate(std::vector<BitRow> rows0, std::vector<BitRow> rows1) {
        if (rows0.empty() || rows0.size() != rows1.size() || rows0.front().size() == 0)
            throw ValidationError(ValidationError::Kind::shape, 0, 0,
                                  "decomposition matrices must both be n x m with n, m >= 1");
        const std::size_t m = rows0.front().size();
        for (std::size_t i = 0; i < rows0.size(); ++i)
            if (rows0[i].size() != m || rows1[i].size() != m)
                throw ValidationError(ValidationError::Kind::shape, i + 1, 0,
                                      "decomposition rows differ in length");
        Decomposition d(trusted, std::move(rows0), std::move(rows1));
        d.check_invariants();
        return d;
    }

    Decomposition(trusted_t, std::vector<BitRow> rows0, std::vector<BitRow> rows1)
        : m_(rows0.empty() ? 0 : rows0.front().size()),
          rows_{std::move(rows0), std::move(rows1)} {}

    std::size_t pair_count() const noexcept { return rows_[0].size(); }
    std::size_t element_count() const noexcept { return m_; }

    /// Row of M_i^alpha (0-based i).
    const BitRow& component(std::size_t i, bool alpha) const noexcept { return rows_[alpha][i]; }

    bool contains(std::size_t i, bool alpha, std::size_t element) const noexcept {
        return rows_[alpha][i].test(element);
    }

    /// All n rows of sM0 (alpha = 0) or sM1 (alpha = 1).
    std::span<const BitRow> domain(bool alpha) const noexcept { return rows_[alpha]; }

    std::vector<std::vector<int>> to_matrix(bool alpha) const {
        std::vector<std::vector<int>> out(pair_count(), std::vector<int>(m_));
        for (std::size_t i = 0; i < pair_count(); ++i)
            for (std::size_t j = 0; j < m_; ++j) out[i][j] = rows_[alpha][i].test(j);
        return out;
    }

    friend bool operator==(const Decomposition&, const Decomposition&) = default;

private:
    void check_invariants() const {
        const std::size_t n = pair_count();
        for (std::size_t i = 0; i < n; ++i) {
            const BitRow& r0 = rows_[0][i];
            const BitRow& r1 = rows_[1][i];
            if (r0.intersects(r1)) {
                for (std::size_t j = 0; j < m_; ++j)
                    if (r0.test(j) && r1.test(j))
                        throw ValidationError(ValidationError::Kind::overlap, i + 1, j + 1,
                                              "element " + std::to_string(j + 1) +
                                                  " lies in both components of pair " +
                                                  std::to_string(i + 1));
            }
            if (r0.none() && r1.none())
                throw ValidationError(ValidationError::Kind::empty_pair, i + 1, 0,
                                      "pair " + std::to_string(i + 1) +
                                          " has both components empty");
        }
        BitRow covered(m_);
        for (std::size_t i = 0; i < n; ++i) {
            covered |= rows_[0][i];
            covered |= rows_[1][i];
        }
        if (auto j = covered.find_first_zero())
            throw ValidationError(ValidationError::Kind::uncovered_element, 0, *j + 1,
                                  "element " + std::to_string(*j + 1) +
                                      " lies in no component");
    }

    std::size_t m_ = 0;
    std::vector<BitRow> rows_[2];
};

/// Selection of one component per pair, stored as the superscript tuple.
/// The library only hands out witnesses that cover their decomposition.
struct CoveringWitness {
    BoolTuple tuple;

    friend bool operator==(const CoveringWitness&, const CoveringWitness&) = default;
};

/// Number of literal occurrences: non-zero cells of the CNF matrix.
inline std::size_t data_length(const CnfMatrix& f) noexcept {
    std::size_t count = 0;
    for (auto c : f.cells()) count += c != 0;
    return count;
}

/// Number of element memberships: 1s across both matrices.
inline std::size_t data_length(const Decomposition& d) noexcept {
    std::size_t count = 0;
    for (bool alpha : {false, true})
        for (const BitRow& row : d.domain(alpha)) count += row.count();
    return count;
}

}  // namespace speccover

#endif

#ifndef SPECCOVER_SAT_HPP
#define SPECCOVER_SAT_HPP

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core.hpp"

namespace speccover {

inline constexpr std::size_t default_oracle_limit = 24;

/// Largest n accepted by exhaustive enumeration. `SPECCOVER_MAX_N` overrides
/// the default; values above 62 are clamped.
inline std::size_t oracle_limit() {
    if (const char* env = std::getenv("SPECCOVER_MAX_N")) {
        std::string_view text(env);
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec == std::errc{} && ptr == text.data() + text.size()) return value > 62 ? 62 : value;
    }
    return default_oracle_limit;
}

/// Value of f under the assignment t.
inline bool evaluate(const CnfMatrix& f, const BoolTuple& t) {
    if (t.size() != f.variable_count())
        throw DimensionError("assignment has " + std::to_string(t.size()) +
                             " bits but the formula has " +
                             std::to_string(f.variable_count()) + " variables");
    for (std::size_t j = 0; j < f.clause_count(); ++j) {
        bool satisfied = false;
        const auto clause = f.clause(j);
        for (std::size_t i = 0; i < clause.size() && !satisfied; ++i)
            satisfied = (clause[i] == 1 && t[i]) || (clause[i] == -1 && !t[i]);
        if (!satisfied) return false;
    }
    return true;
}

namespace detail {

// Clause j is satisfied by assignment word v iff (v & pos[j]) | (~v & neg[j])
// is non-zero. Bit (n-1-i) of v is variable i, so v counts in tuple order.
struct ClauseMasks {
    std::vector<std::uint64_t> pos;
    std::vector<std::uint64_t> neg;

    explicit ClauseMasks(const CnfMatrix& f) : pos(f.clause_count()), neg(f.clause_count()) {
        const std::size_t n = f.variable_count();
        for (std::size_t j = 0; j < f.clause_count(); ++j)
            for (std::size_t i = 0; i < n; ++i) {
                const std::uint64_t bit = std::uint64_t{1} << (n - 1 - i);
                if (f.at(j, i) == 1) pos[j] |= bit;
                if (f.at(j, i) == -1) neg[j] |= bit;
            }
    }

    bool satisfied_by(std::uint64_t v) const noexcept {
        for (std::size_t j = 0; j < pos.size(); ++j)
            if (((v & pos[j]) | (~v & neg[j])) == 0) return false;
        return true;
    }
};

inline void require_enumerable(std::size_t n) {
    const std::size_t limit = oracle_limit();
    if (n > limit) throw TooLargeError(n, limit);
}

}  // namespace detail

/// Every satisfying assignment of f, in ascending numeric order.
inline std::vector<BoolTuple> satisfying_assignments(const CnfMatrix& f) {
    const std::size_t n = f.variable_count();
    detail::require_enumerable(n);
    const detail::ClauseMasks masks(f);
    std::vector<BoolTuple> out;
    const std::uint64_t end = std::uint64_t{1} << n;
    for (std::uint64_t v = 0; v < end; ++v)
        if (masks.satisfied_by(v)) out.push_back(BoolTuple::from_index(v, n));
    return out;
}

/// Smallest satisfying assignment of f, if any.
inline std::optional<BoolTuple> first_satisfying(const CnfMatrix& f) {
    const std::size_t n = f.variable_count();
    detail::require_enumerable(n);
    const detail::ClauseMasks masks(f);
    const std::uint64_t end = std::uint64_t{1} << n;
    for (std::uint64_t v = 0; v < end; ++v)
        if (masks.satisfied_by(v)) return BoolTuple::from_index(v, n);
    return std::nullopt;
}

/// Smallest assignment satisfying both f and h, if any.
inline std::optional<BoolTuple> common_satisfying(const CnfMatrix& f, const CnfMatrix& h) {
    if (f.variable_count() != h.variable_count())
        throw DimensionError("formulas have different variable counts: " +
                             std::to_string(f.variable_count()) + " and " +
                             std::to_string(h.variable_count()));
    const std::size_t n = f.variable_count();
    detail::require_enumerable(n);
    const detail::ClauseMasks fm(f);
    const detail::ClauseMasks hm(h);
    const std::uint64_t end = std::uint64_t{1} << n;
    for (std::uint64_t v = 0; v < end; ++v)
        if (fm.satisfied_by(v) && hm.satisfied_by(v)) return BoolTuple::from_index(v, n);
    return std::nullopt;
}

}  // namespace speccover

#endif

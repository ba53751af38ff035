#ifndef SPECCOVER_COVERING_HPP
#define SPECCOVER_COVERING_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"
#include "sat.hpp"

namespace speccover {

/// Components that every covering must select.
struct ForcedReport {
    /// (pair, component) in ascending order; pair is 0-based.
    std::vector<std::pair<std::size_t, bool>> forced;
    /// Smallest pair with both components forced, if any.
    std::optional<std::size_t> contradiction;

    friend bool operator==(const ForcedReport&, const ForcedReport&) = default;
};

struct SearchStats {
    std::uint64_t candidates = 0;
};

namespace detail {

inline void require_tuple_length(const Decomposition& d, const BoolTuple& t) {
    if (t.size() != d.pair_count())
        throw DimensionError("tuple has " + std::to_string(t.size()) + " bits but the decomposition has " +
                             std::to_string(d.pair_count()) + " pairs");
}

inline bool covers_unchecked(const Decomposition& d, const BoolTuple& t, BitRow& scratch) {
    std::fill(scratch.words().begin(), scratch.words().end(), 0);
    for (std::size_t i = 0; i < d.pair_count(); ++i) scratch |= d.component(i, t[i]);
    return scratch.all();
}

// Visits tuples in ascending numeric order. Positions in `fixed` keep the bit
// given in `base`; the remaining positions are enumerated. Stops when `visit`
// returns false.
template <typename Visit>
void enumerate_tuples(const BoolTuple& base, const std::vector<bool>& fixed, Visit&& visit) {
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < base.size(); ++i)
        if (!fixed[i]) free.push_back(i);
    const std::uint64_t end = std::uint64_t{1} << free.size();
    BoolTuple t = base;
    for (std::uint64_t u = 0; u < end; ++u) {
        for (std::size_t k = 0; k < free.size(); ++k)
            t.set(free[k], (u >> (free.size() - 1 - k)) & 1u);
        if (!visit(t)) return;
    }
}

}  // namespace detail

/// True iff the components selected by t cover every element.
inline bool is_covering(const Decomposition& d, const BoolTuple& t) {
    detail::require_tuple_length(d, t);
    BitRow scratch(d.element_count());
    return detail::covers_unchecked(d, t, scratch);
}

/// Every (i, alpha) such that M_i^alpha holds an element found in no other
/// pair. Such a component must belong to every covering; a pair with both
/// components forced rules out any covering.
inline ForcedReport forced_subsets(const Decomposition& d) {
    const std::size_t n = d.pair_count();
    const std::size_t m = d.element_count();
    // Elements seen in exactly one pair so far (once), and in two or more (many).
    BitRow once(m), many(m);
    for (std::size_t i = 0; i < n; ++i) {
        auto o = once.words();
        auto mw = many.words();
        const auto a = d.component(i, false).words();
        const auto b = d.component(i, true).words();
        for (std::size_t k = 0; k < o.size(); ++k) {
            const auto here = a[k] | b[k];
            mw[k] |= o[k] & here;
            o[k] = (o[k] | here) & ~mw[k];
        }
    }
    ForcedReport report;
    for (std::size_t i = 0; i < n; ++i) {
        bool both = true;
        for (bool alpha : {false, true}) {
            if (d.component(i, alpha).intersects(once))
                report.forced.emplace_back(i, alpha);
            else
                both = false;
        }
        if (both && !report.contradiction) report.contradiction = i;
    }
    return report;
}

/// Numerically smallest covering tuple, if any. With `prune`, forced
/// components are fixed and a contradiction aborts before enumeration; the
/// result is the same.
inline std::optional<CoveringWitness> find_covering(const Decomposition& d, bool prune,
                                                    SearchStats* stats = nullptr) {
    const std::size_t n = d.pair_count();
    detail::require_enumerable(n);
    BoolTuple base(n);
    std::vector<bool> fixed(n, false);
    if (prune) {
        const ForcedReport report = forced_subsets(d);
        if (report.contradiction) return std::nullopt;
        for (auto [i, alpha] : report.forced) {
            base.set(i, alpha);
            fixed[i] = true;
        }
    }
    BitRow scratch(d.element_count());
    std::optional<CoveringWitness> found;
    std::uint64_t visited = 0;
    detail::enumerate_tuples(base, fixed, [&](const BoolTuple& t) {
        ++visited;
        if (detail::covers_unchecked(d, t, scratch)) {
            found = CoveringWitness{t};
            return false;
        }
        return true;
    });
    if (stats) stats->candidates = visited;
    return found;
}

/// Every covering tuple in ascending order.
inline std::vector<BoolTuple> all_coverings(const Decomposition& d) {
    const std::size_t n = d.pair_count();
    detail::require_enumerable(n);
    BitRow scratch(d.element_count());
    std::vector<BoolTuple> out;
    detail::enumerate_tuples(BoolTuple(n), std::vector<bool>(n, false), [&](const BoolTuple& t) {
        if (detail::covers_unchecked(d, t, scratch)) out.push_back(t);
        return true;
    });
    return out;
}

/// Swaps the two components of every listed pair (0-based). Listing a pair
/// more than once swaps it once.
inline Decomposition i_transform(const Decomposition& d, std::span<const std::size_t> pairs) {
    const std::size_t n = d.pair_count();
    std::vector<bool> swap(n, false);
    for (std::size_t i : pairs) {
        if (i >= n)
            throw DimensionError("pair index " + std::to_string(i + 1) + " out of range 1.." +
                                 std::to_string(n));
        swap[i] = true;
    }
    std::vector<BitRow> rows0(d.domain(false).begin(), d.domain(false).end());
    std::vector<BitRow> rows1(d.domain(true).begin(), d.domain(true).end());
    for (std::size_t i = 0; i < n; ++i)
        if (swap[i]) rows0[i].swap(rows1[i]);
    return Decomposition(trusted, std::move(rows0), std::move(rows1));
}

inline Decomposition i_transform(const Decomposition& d, std::initializer_list<std::size_t> pairs) {
    return i_transform(d, std::span<const std::size_t>(pairs.begin(), pairs.size()));
}

/// Turns the covering w into one that selects component `target` of every
/// pair, by swapping exactly the pairs where w selects the other component.
inline std::pair<Decomposition, CoveringWitness> normalize_covering(const Decomposition& d,
                                                                    const CoveringWitness& w,
                                                                    bool target) {
    if (!is_covering(d, w.tuple))
        throw Error("tuple " + w.tuple.to_string() + " does not cover the decomposition");
    std::vector<std::size_t> flips;
    for (std::size_t i = 0; i < d.pair_count(); ++i)
        if (w.tuple[i] != target) flips.push_back(i);
    BoolTuple constant(d.pair_count());
    for (std::size_t i = 0; i < constant.size(); ++i) constant.set(i, target);
    return {i_transform(d, flips), CoveringWitness{constant}};
}

}  // namespace speccover

#endif

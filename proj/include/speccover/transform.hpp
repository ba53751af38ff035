#ifndef SPECCOVER_TRANSFORM_HPP
#define SPECCOVER_TRANSFORM_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "convert.hpp"
#include "core.hpp"
#include "covering.hpp"
#include "sat.hpp"

namespace speccover {

// ---------------------------------------------------------------------------
// Change operations
// ---------------------------------------------------------------------------
//
// All indices are 0-based. `side` is the component selector (0 or 1).

/// Remove `element` from M_pair^side, a component the covering does not select.
struct RemoveElement {
    std::size_t pair;
    bool side;
    std::size_t element;
    friend bool operator==(const RemoveElement&, const RemoveElement&) = default;
};

/// Add `element`, absent from both components of `pair`, to M_pair^side.
struct AddElement {
    std::size_t pair;
    bool side;
    std::size_t element;
    friend bool operator==(const AddElement&, const AddElement&) = default;
};

/// Move `element` from M_from^from_side to M_to^to_side; both selected by
/// the covering. Degenerates to a removal when the target already holds it.
struct MoveElement {
    std::size_t from_pair;
    bool from_side;
    std::size_t to_pair;
    bool to_side;
    std::size_t element;
    friend bool operator==(const MoveElement&, const MoveElement&) = default;
};

/// Swap the two components of `pair`; the covering tuple bit flips with it.
struct FlipPair {
    std::size_t pair;
    friend bool operator==(const FlipPair&, const FlipPair&) = default;
};

using ChangeOp = std::variant<RemoveElement, AddElement, MoveElement, FlipPair>;

/// Why a change was refused.
enum class Condition {
    out_of_range,        // index or tuple length does not fit the decomposition
    not_covering,        // the current tuple does not cover the decomposition
    not_member,          // the element is not in the source component
    selected_component,  // removal targets a component the covering selects
    would_empty_pair,    // the source pair would lose its last element
    would_orphan,        // the element would lie in no selected component
    already_in_pair,     // addition of an element the pair already holds
    not_selected,        // move between components the covering does not select
    opposite_component   // move target pair holds the element on its other side
};

inline const char* condition_name(Condition c) noexcept {
    switch (c) {
        case Condition::out_of_range: return "out-of-range";
        case Condition::not_covering: return "not-covering";
        case Condition::not_member: return "not-member";
        case Condition::selected_component: return "selected-component";
        case Condition::would_empty_pair: return "would-empty-pair";
        case Condition::would_orphan: return "would-orphan";
        case Condition::already_in_pair: return "already-in-pair";
        case Condition::not_selected: return "not-selected";
        case Condition::opposite_component: return "opposite-component";
    }
    return "unknown";
}

class AdmissibilityError : public Error {
public:
    explicit AdmissibilityError(Condition c)
        : Error(std::string("inadmissible change: ") + condition_name(c)), condition_(c) {}
    Condition condition() const noexcept { return condition_; }

private:
    Condition condition_;
};

/// Replay hit an inadmissible step. `step()` is 1-based; 0 means the trace
/// header itself was rejected.
class InadmissibleStep : public Error {
public:
    InadmissibleStep(std::size_t step, Condition c)
        : Error("step " + std::to_string(step) + " is inadmissible: " + condition_name(c)),
          step_(step), condition_(c) {}
    std::size_t step() const noexcept { return step_; }
    Condition condition() const noexcept { return condition_; }

private:
    std::size_t step_;
    Condition condition_;
};

/// A generation precondition failed: the named function is not satisfied
/// by its tuple.
class NotSatisfiedError : public Error {
public:
    enum class Which { source, target };
    explicit NotSatisfiedError(Which which)
        : Error(which == Which::source ? "source function is not satisfied by its tuple"
                                       : "target function is not satisfied by its tuple"),
          which_(which) {}
    Which which() const noexcept { return which_; }

private:
    Which which_;
};

/// No sequence of admissible changes connects the two functions. This only
/// happens for single-clause functions, whose pairs cannot change side
/// without passing through an empty pair.
class UnreachableError : public Error {
public:
    using Error::Error;
};

// ---------------------------------------------------------------------------
// Trace
// ---------------------------------------------------------------------------

struct TraceCounts {
    std::size_t removals = 0;
    std::size_t additions = 0;
    std::size_t moves = 0;
    std::size_t flips = 0;
    OpCounts elementary;

    std::size_t steps() const noexcept { return removals + additions + moves + flips; }
};

/// Replayable list of changes from a function with n variables and m clauses,
/// starting under the covering tuple `initial`.
struct Trace {
    std::size_t n = 0;
    std::size_t m = 0;
    BoolTuple initial;
    std::vector<ChangeOp> steps;
    TraceCounts counts;

    /// Tuple after every FlipPair has been applied.
    BoolTuple final_tuple() const {
        BoolTuple t = initial;
        for (const auto& op : steps)
            if (const auto* flip = std::get_if<FlipPair>(&op)) t.flip(flip->pair);
        return t;
    }

    void push(const ChangeOp& op) {
        steps.push_back(op);
        std::visit(
            [this](const auto& o) {
                using T = std::decay_t<decltype(o)>;
                if constexpr (std::is_same_v<T, RemoveElement>) ++counts.removals;
                if constexpr (std::is_same_v<T, AddElement>) ++counts.additions;
                if constexpr (std::is_same_v<T, MoveElement>) ++counts.moves;
                if constexpr (std::is_same_v<T, FlipPair>) ++counts.flips;
            },
            op);
    }

    /// Equality of header and steps; counts are derived data.
    friend bool operator==(const Trace& a, const Trace& b) {
        return a.n == b.n && a.m == b.m && a.initial == b.initial && a.steps == b.steps;
    }
};

/// Concatenates two traces over the same dimensions. The second must start
/// from the first one's final tuple.
inline Trace concatenate(const Trace& first, const Trace& second) {
    if (first.n != second.n || first.m != second.m || first.final_tuple() != second.initial)
        throw DimensionError("traces do not chain: dimensions or tuples differ");
    Trace out = first;
    for (const auto& op : second.steps) out.push(op);
    out.counts.elementary += second.counts.elementary;
    return out;
}

namespace detail {

// Mutable decomposition plus the current covering tuple. Every mutation goes
// through apply(), which checks admissibility first.
class WorkState {
public:
    WorkState(const Decomposition& d, BoolTuple tuple)
        : m_(d.element_count()),
          rows_{std::vector<BitRow>(d.domain(false).begin(), d.domain(false).end()),
                std::vector<BitRow>(d.domain(true).begin(), d.domain(true).end())},
          flipped_(d.pair_count(), 0),
          tuple_(std::move(tuple)) {}

    std::size_t pairs() const noexcept { return rows_[0].size(); }
    std::size_t elements() const noexcept { return m_; }
    const BoolTuple& tuple() const noexcept { return tuple_; }

    const BitRow& row(std::size_t i, bool side) const noexcept {
        return rows_[side != static_cast<bool>(flipped_[i])][i];
    }
    const BitRow& selected(std::size_t i) const noexcept { return row(i, tuple_[i]); }
    const BitRow& unselected(std::size_t i) const noexcept { return row(i, !tuple_[i]); }

    bool covers() const {
        BitRow acc(m_);
        for (std::size_t i = 0; i < pairs(); ++i) acc |= selected(i);
        return acc.all();
    }

    Decomposition snapshot() const {
        std::vector<BitRow> rows0, rows1;
        rows0.reserve(pairs());
        rows1.reserve(pairs());
        for (std::size_t i = 0; i < pairs(); ++i) {
            rows0.push_back(row(i, false));
            rows1.push_back(row(i, true));
        }
        return Decomposition(trusted, std::move(rows0), std::move(rows1));
    }

    /// Checks the change against the current state and applies it, or throws
    /// AdmissibilityError leaving the state untouched.
    void apply(const ChangeOp& op) {
        if (auto c = check(op)) throw AdmissibilityError(*c);
        std::visit([this](const auto& o) { mutate(o); }, op);
    }

    std::optional<Condition> check(const ChangeOp& op) const {
        return std::visit([this](const auto& o) { return check_op(o); }, op);
    }

private:
    // A flip only toggles the pair's orientation; the rows stay in place.
    BitRow& at(std::size_t i, bool side) noexcept {
        return rows_[side != static_cast<bool>(flipped_[i])][i];
    }

    bool in_range(std::size_t i, std::size_t e) const noexcept { return i < pairs() && e < m_; }

    bool pair_empty_without(std::size_t i, bool side, std::size_t e) const {
        BitRow rest = row(i, side);
        rest.reset(e);
        return rest.none() && row(i, !side).none();
    }

    std::optional<Condition> check_op(const RemoveElement& op) const {
        if (!in_range(op.pair, op.element)) return Condition::out_of_range;
        if (!row(op.pair, op.side).test(op.element)) return Condition::not_member;
        if (tuple_[op.pair] == op.side) return Condition::selected_component;
        if (pair_empty_without(op.pair, op.side, op.element)) return Condition::would_empty_pair;
        bool still_covered = false;
        for (std::size_t k = 0; k < pairs() && !still_covered; ++k)
            still_covered = selected(k).test(op.element);
        if (!still_covered) return Condition::would_orphan;
        return std::nullopt;
    }

    std::optional<Condition> check_op(const AddElement& op) const {
        if (!in_range(op.pair, op.element)) return Condition::out_of_range;
        if (row(op.pair, 0).test(op.element) || row(op.pair, 1).test(op.element))
            return Condition::already_in_pair;
        return std::nullopt;
    }

    std::optional<Condition> check_op(const MoveElement& op) const {
        if (!in_range(op.from_pair, op.element) || op.to_pair >= pairs())
            return Condition::out_of_range;
        if (tuple_[op.from_pair] != op.from_side || tuple_[op.to_pair] != op.to_side)
            return Condition::not_selected;
        if (!row(op.from_pair, op.from_side).test(op.element)) return Condition::not_member;
        if (row(op.to_pair, !op.to_side).test(op.element)) return Condition::opposite_component;
        if (op.from_pair != op.to_pair &&
            pair_empty_without(op.from_pair, op.from_side, op.element))
            return Condition::would_empty_pair;
        return std::nullopt;
    }

    std::optional<Condition> check_op(const FlipPair& op) const {
        if (op.pair >= pairs()) return Condition::out_of_range;
        return std::nullopt;
    }

    void mutate(const RemoveElement& op) { at(op.pair, op.side).reset(op.element); }
    void mutate(const AddElement& op) { at(op.pair, op.side).set(op.element); }
    void mutate(const MoveElement& op) {
        at(op.from_pair, op.from_side).reset(op.element);
        at(op.to_pair, op.to_side).set(op.element);
    }
    void mutate(const FlipPair& op) {
        flipped_[op.pair] ^= 1;
        tuple_.flip(op.pair);
    }

    std::size_t m_;
    std::vector<BitRow> rows_[2];
    std::vector<std::uint8_t> flipped_;
    BoolTuple tuple_;
};

// Drives a WorkState toward a target decomposition under a fixed tuple,
// recording each step in the trace and charging elementary operations.
//
// Two sweeps over the cells, pair by pair. The first clears each unselected
// component down to what the target keeps there and copies the target's
// selected component in. The second drops the extra elements of the
// selected components, each onto a pair whose selected component keeps it,
// and copies the target's unselected components in. A pair whose target
// selects nothing is left entirely to the second sweep.
//
// Counting follows the conversions: loop control per iteration, one
// recognition per cell read (which literal, if any, the cell holds), one
// assignment per emitted step or array write. A test over a packed row costs
// one comparison per word.
class Generator {
public:
    Generator(WorkState& state, const Decomposition& target, Trace& trace)
        : s_(state), target_(target), trace_(trace), ops_(trace.counts.elementary),
          words_(BitRow::word_count(state.elements())) {}

    /// Flips every pair where the current tuple differs from `tuple`, each
    /// just before the first sweep reaches it. Flips never change a selected
    /// set, so the other steps stay admissible when all flips come first;
    /// `flips` receives them in that order.
    void retarget(const BoolTuple& tuple, std::vector<ChangeOp>& flips) {
        retarget_ = &tuple;
        flips_ = &flips;
    }

    void run() {
        cover_.assign(s_.elements(), 0);
        pending_.assign(s_.pairs(), 0);
        fill_selected();
        settle();
    }

private:
    enum class Cell { none, selected, unselected };

    void emit(const ChangeOp& op) {
        s_.apply(op);
        trace_.push(op);
        ++ops_.assignments;
    }

    void charge_scan() {
        ops_.comparisons += words_;
        if (words_ > 1) ops_.loop(words_);
    }

    bool sigma(std::size_t i) const { return s_.tuple()[i]; }
    const BitRow& target_selected(std::size_t i) const { return target_.component(i, sigma(i)); }
    const BitRow& target_unselected(std::size_t i) const {
        return target_.component(i, !sigma(i));
    }

    Cell current(std::size_t i, std::size_t j) {
        ++ops_.recognitions;
        if (s_.selected(i).test(j)) return Cell::selected;
        return s_.unselected(i).test(j) ? Cell::unselected : Cell::none;
    }

    Cell wanted(std::size_t i, std::size_t j) {
        ++ops_.recognitions;
        if (target_selected(i).test(j)) return Cell::selected;
        return target_unselected(i).test(j) ? Cell::unselected : Cell::none;
    }

    void move_out(std::size_t i, std::size_t j) {
        const std::size_t keeper = cover_[j];
        emit(MoveElement{i, sigma(i), keeper, sigma(keeper), j});
    }

    // A flip writes the pair's orientation flag and its tuple bit.
    void flip_if_needed(std::size_t i) {
        ++ops_.comparisons;
        if (s_.tuple()[i] == (*retarget_)[i]) return;
        s_.apply(FlipPair{i});
        flips_->push_back(FlipPair{i});
        ops_.assignments += 2;
    }

    void fill_selected() {
        for (std::size_t i = 0; i < s_.pairs(); ++i) {
            ops_.loop();
            if (retarget_) flip_if_needed(i);
            charge_scan();
            const auto first = target_selected(i).find_first();
            if (!first) {
                pending_[i] = 1;
                ++ops_.assignments;
                continue;
            }
            repair_empty_selected(i, *first);
            for (std::size_t j = 0; j < s_.elements(); ++j) {
                ops_.loop();
                const Cell have = current(i, j);
                const Cell want = wanted(i, j);
                if (want == Cell::selected) {
                    if (have == Cell::unselected) emit(RemoveElement{i, !sigma(i), j});
                    if (have != Cell::selected) emit(AddElement{i, sigma(i), j});
                    cover_[j] = i;
                    ++ops_.assignments;
                } else if (have == Cell::unselected) {
                    if (want == Cell::none) emit(RemoveElement{i, !sigma(i), j});
                } else if (have == Cell::selected || want == Cell::unselected) {
                    pending_[i] = 1;
                    ++ops_.assignments;
                }
            }
        }
    }

    // The sweep removes the unselected elements the target does not keep
    // there, which can drain a pair whose selected side is empty. Such a
    // pair first gets a target element it lacks, on the target's side. When
    // the unselected side holds every target element, the target's smallest
    // selected element t moves across now. If t is the pair's only element,
    // a stand-in on the unselected side holds the pair meanwhile; the sweep
    // removes it again.
    void repair_empty_selected(std::size_t i, std::size_t t) {
        charge_scan();
        if (s_.selected(i).any()) return;
        charge_scan();
        if (auto x = target_unselected(i).find_first()) {
            ++ops_.comparisons;
            if (!s_.unselected(i).test(*x)) emit(AddElement{i, !sigma(i), *x});
            return;
        }
        ++ops_.comparisons;
        if (!s_.unselected(i).test(t)) {
            emit(AddElement{i, sigma(i), t});
            return;
        }
        charge_scan();
        if (s_.unselected(i).count() == 1)
            emit(AddElement{i, !sigma(i), t == 0 ? std::size_t{1} : 0});
        emit(RemoveElement{i, !sigma(i), t});
        emit(AddElement{i, sigma(i), t});
    }

    // Only pairs the first sweep marked still differ from the target.
    void settle() {
        for (std::size_t i = 0; i < s_.pairs(); ++i) {
            ops_.loop();
            ++ops_.comparisons;
            if (!pending_[i]) continue;
            charge_scan();
            if (target_selected(i).any())
                settle_pair(i);
            else
                settle_drained_pair(i);
        }
    }

    // After the first sweep the unselected side holds only target elements,
    // so those cells need no second look.
    void settle_pair(std::size_t i) {
        for (std::size_t j = 0; j < s_.elements(); ++j) {
            ops_.loop();
            const Cell have = current(i, j);
            if (have == Cell::unselected) continue;
            const Cell want = wanted(i, j);
            if (have == Cell::selected && want != Cell::selected) move_out(i, j);
            if (want == Cell::unselected) emit(AddElement{i, !sigma(i), j});
        }
    }

    // The target selects nothing from pair i, so everything selected there
    // is extra. The target's smallest unselected element t goes onto the
    // unselected side first and holds the pair while the rest is settled.
    void settle_drained_pair(std::size_t i) {
        charge_scan();
        const std::size_t t = *target_unselected(i).find_first();
        const Cell have_t = current(i, t);
        if (have_t != Cell::unselected) {
            if (have_t == Cell::selected) {
                charge_scan();
                if (s_.unselected(i).none() && s_.selected(i).count() == 1)
                    emit(AddElement{i, !sigma(i), t == 0 ? std::size_t{1} : 0});
                move_out(i, t);
            }
            emit(AddElement{i, !sigma(i), t});
        }
        for (std::size_t j = 0; j < s_.elements(); ++j) {
            ops_.loop();
            const Cell have = current(i, j);
            const Cell want = wanted(i, j);
            if (have == Cell::selected) move_out(i, j);
            if (have == Cell::unselected && want == Cell::none)
                emit(RemoveElement{i, !sigma(i), j});
            if (have != Cell::unselected && want == Cell::unselected)
                emit(AddElement{i, !sigma(i), j});
        }
    }

    WorkState& s_;
    const Decomposition& target_;
    Trace& trace_;
    OpCounts& ops_;
    std::size_t words_;
    std::vector<std::size_t> cover_;
    std::vector<std::uint8_t> pending_;
    const BoolTuple* retarget_ = nullptr;
    std::vector<ChangeOp>* flips_ = nullptr;
};

inline void require_same_shape(const CnfMatrix& f, const CnfMatrix& h) {
    if (f.variable_count() != h.variable_count() || f.clause_count() != h.clause_count())
        throw DimensionError("functions differ in shape: " + std::to_string(f.variable_count()) +
                             "x" + std::to_string(f.clause_count()) + " vs " +
                             std::to_string(h.variable_count()) + "x" +
                             std::to_string(h.clause_count()));
}

inline Trace empty_trace(const CnfMatrix& f, const BoolTuple& tuple) {
    Trace tr;
    tr.n = f.variable_count();
    tr.m = f.clause_count();
    tr.initial = tuple;
    return tr;
}

// Builds the admissible-change trace from d (covered by `tuple`) to target.
inline void generate_into(Trace& tr, const Decomposition& d, const Decomposition& target,
                          const BoolTuple& tuple) {
    WorkState state(d, tuple);
    Generator(state, target, tr).run();
    if (state.snapshot() != target)
        throw std::logic_error("generation did not reach the target decomposition");
}

// Cell-by-cell equality test charged as loop control plus one comparison.
inline bool equal_counted(const CnfMatrix& f, const CnfMatrix& h, OpCounts& ops) {
    const auto a = f.cells();
    const auto b = h.cells();
    for (std::size_t k = 0; k < a.size(); ++k) {
        ops.loop();
        ++ops.comparisons;
        if (a[k] != b[k]) return false;
    }
    return true;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

/// Applies one change to the decomposition d covered by w. Returns the new
/// decomposition and witness; FlipPair complements the witness bit of its
/// pair, every other change keeps the tuple.
inline std::pair<Decomposition, CoveringWitness> apply_change(const Decomposition& d,
                                                              const CoveringWitness& w,
                                                              const ChangeOp& op) {
    if (w.tuple.size() != d.pair_count()) throw AdmissibilityError(Condition::out_of_range);
    if (!is_covering(d, w.tuple)) throw AdmissibilityError(Condition::not_covering);
    detail::WorkState state(d, w.tuple);
    state.apply(op);
    return {state.snapshot(), CoveringWitness{state.tuple()}};
}

/// Admissible-change trace turning f into h under a tuple that satisfies
/// both. Replaying it from f yields h exactly.
///
/// The procedure first gives every empty selected component an element,
/// then empties the unselected components while copying h's selected
/// components in, and finally drops the extra elements of the selected
/// components while copying h's unselected components in.
inline Trace generate_trace(const CnfMatrix& f, const CnfMatrix& h, const BoolTuple& sigma) {
    detail::require_same_shape(f, h);
    if (!evaluate(f, sigma)) throw NotSatisfiedError(NotSatisfiedError::Which::source);
    if (!evaluate(h, sigma)) throw NotSatisfiedError(NotSatisfiedError::Which::target);

    Trace tr = detail::empty_trace(f, sigma);
    if (f.clause_count() == 1) {
        // A single-element pair has exactly one valid state per side and no
        // admissible change moves it between them.
        if (!detail::equal_counted(f, h, tr.counts.elementary))
            throw UnreachableError(
                "single-clause functions are only reachable from themselves under "
                "admissible changes");
        return tr;
    }
    detail::generate_into(tr, cnf_to_decomposition(f), cnf_to_decomposition(h), sigma);
    return tr;
}

/// Extended trace from f (satisfied by sigma) to h (satisfied by delta):
/// one FlipPair for every position where sigma and delta differ, then the
/// admissible-change trace under delta.
///
/// Single-clause functions instead flip exactly the pairs whose literal
/// differs between f and h; the final tuple then differs from delta.
inline Trace generate_trace_extended(const CnfMatrix& f, const BoolTuple& sigma,
                                     const CnfMatrix& h, const BoolTuple& delta) {
    detail::require_same_shape(f, h);
    if (!evaluate(f, sigma)) throw NotSatisfiedError(NotSatisfiedError::Which::source);
    if (!evaluate(h, delta)) throw NotSatisfiedError(NotSatisfiedError::Which::target);

    Trace tr = detail::empty_trace(f, sigma);
    auto& ops = tr.counts.elementary;
    const Decomposition d = cnf_to_decomposition(f);
    const Decomposition target = cnf_to_decomposition(h);
    detail::WorkState state(d, sigma);

    if (f.clause_count() == 1) {
        for (std::size_t i = 0; i < f.variable_count(); ++i) {
            ops.loop();
            ++ops.comparisons;
            if (f.at(0, i) == h.at(0, i)) continue;
            state.apply(FlipPair{i});
            tr.push(FlipPair{i});
            ops.assignments += 2;
        }
        return tr;
    }

    std::vector<ChangeOp> flips;
    Trace body = tr;
    detail::Generator gen(state, target, body);
    gen.retarget(delta, flips);
    gen.run();
    if (state.snapshot() != target)
        throw std::logic_error("generation did not reach the target decomposition");

    for (const auto& op : flips) tr.push(op);
    for (const auto& op : body.steps) tr.push(op);
    tr.counts.elementary = body.counts.elementary;
    return tr;
}

/// Per-step observer for replay: 1-based step number (0 for the start
/// state), the decomposition after the step, and the current tuple.
using ReplayObserver =
    std::function<void(std::size_t, const Decomposition&, const BoolTuple&)>;

/// Replays the trace from f, checking every step's admissibility, and
/// returns the final function.
inline CnfMatrix replay(const CnfMatrix& f, const Trace& tr, const ReplayObserver& observer = {}) {
    if (tr.n != f.variable_count() || tr.m != f.clause_count() || tr.initial.size() != tr.n)
        throw DimensionError("trace header " + std::to_string(tr.n) + "x" + std::to_string(tr.m) +
                             " does not match the function " +
                             std::to_string(f.variable_count()) + "x" +
                             std::to_string(f.clause_count()));
    const Decomposition d = cnf_to_decomposition(f);
    if (!is_covering(d, tr.initial)) throw InadmissibleStep(0, Condition::not_covering);

    detail::WorkState state(d, tr.initial);
    if (observer) observer(0, d, state.tuple());
    for (std::size_t k = 0; k < tr.steps.size(); ++k) {
        if (auto c = state.check(tr.steps[k])) throw InadmissibleStep(k + 1, *c);
        state.apply(tr.steps[k]);
        if (observer) observer(k + 1, state.snapshot(), state.tuple());
    }
    return decomposition_to_cnf(state.snapshot());
}

/// True iff sigma satisfies both functions, i.e. each is generated from the
/// other by admissible changes under sigma.
inline bool same_class(const CnfMatrix& f, const CnfMatrix& h, const BoolTuple& sigma) {
    detail::require_same_shape(f, h);
    return evaluate(f, sigma) && evaluate(h, sigma);
}

}  // namespace speccover

#endif

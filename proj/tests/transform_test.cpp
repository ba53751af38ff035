#include "support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace speccover;

namespace {

CnfMatrix cnf(std::vector<std::vector<int>> rows) { return CnfMatrix::validate(rows); }

const auto f_ex = [] { return cnf({{1, 1}, {-1, 1}}); };
const auto h_ex = [] { return cnf({{0, 1}, {-1, 1}}); };

Condition refusal(const Decomposition& d, const BoolTuple& t, const ChangeOp& op) {
    try {
        apply_change(d, CoveringWitness{t}, op);
    } catch (const AdmissibilityError& e) {
        return e.condition();
    }
    ADD_FAILURE() << "change was accepted";
    return Condition::out_of_range;
}

// Replays tr from f checking, independently of the library's own checks,
// that every intermediate function is satisfied by the running tuple.
void expect_replays_to(const CnfMatrix& f, const Trace& tr, const CnfMatrix& h) {
    std::size_t seen = 0;
    const auto out = replay(f, tr, [&](std::size_t, const Decomposition& d, const BoolTuple& t) {
        ++seen;
        ASSERT_TRUE(oracle::eval(decomposition_to_cnf(d).to_rows(), oracle::vec(t)));
    });
    EXPECT_EQ(out, h);
    EXPECT_EQ(seen, tr.steps.size() + 1);
}

}  // namespace

TEST(ApplyChange, RemoveElement) {
    const auto d = cnf_to_decomposition(f_ex());
    const auto [next, w] = apply_change(d, CoveringWitness{BoolTuple{0, 1}}, RemoveElement{0, true, 0});
    EXPECT_EQ(decomposition_to_cnf(next), h_ex());
    EXPECT_EQ(w.tuple.to_string(), "01");
}

TEST(ApplyChange, AddElement) {
    const auto d = cnf_to_decomposition(cnf({{1, 0}, {0, 1}}));
    const auto [next, w] = apply_change(d, CoveringWitness{BoolTuple{1, 1}}, AddElement{0, true, 1});
    EXPECT_EQ(decomposition_to_cnf(next), cnf({{1, 0}, {1, 1}}));
}

TEST(ApplyChange, MoveDegeneratesToRemoval) {
    const auto d = cnf_to_decomposition(f_ex());
    const auto [next, w] =
        apply_change(d, CoveringWitness{BoolTuple{0, 1}}, MoveElement{0, false, 1, true, 1});
    EXPECT_EQ(decomposition_to_cnf(next), cnf({{1, 1}, {0, 1}}));
}

TEST(ApplyChange, FlipPair) {
    const auto d = cnf_to_decomposition(f_ex());
    const auto [next, w] = apply_change(d, CoveringWitness{BoolTuple{0, 1}}, FlipPair{0});
    EXPECT_EQ(decomposition_to_cnf(next), cnf({{-1, 1}, {1, 1}}));
    EXPECT_EQ(w.tuple.to_string(), "11");
}

TEST(ApplyChange, NamesEachRefusal) {
    const auto d = cnf_to_decomposition(f_ex());
    const BoolTuple t{0, 1};
    EXPECT_EQ(refusal(d, t, RemoveElement{2, true, 0}), Condition::out_of_range);
    EXPECT_EQ(refusal(d, t, RemoveElement{0, true, 1}), Condition::not_member);
    EXPECT_EQ(refusal(d, t, RemoveElement{1, true, 0}), Condition::selected_component);
    EXPECT_EQ(refusal(d, t, AddElement{1, false, 0}), Condition::already_in_pair);
    EXPECT_EQ(refusal(d, t, MoveElement{0, true, 1, true, 0}), Condition::not_selected);
    EXPECT_EQ(refusal(d, t, MoveElement{0, false, 1, true, 0}), Condition::not_member);
    EXPECT_EQ(refusal(d, BoolTuple{1, 0}, RemoveElement{0, false, 1}), Condition::not_covering);
    EXPECT_EQ(refusal(d, BoolTuple{0}, FlipPair{0}), Condition::out_of_range);

    // Removals only touch unselected components, so under a covering tuple
    // they cannot orphan an element; the orphan check is a backstop.
    const auto single = cnf_to_decomposition(cnf({{1, -1}, {0, -1}}));
    EXPECT_EQ(refusal(single, BoolTuple{0, 0}, RemoveElement{0, true, 0}),
              Condition::would_empty_pair);
    EXPECT_EQ(refusal(cnf_to_decomposition(cnf({{-1, -1}, {-1, 0}})), BoolTuple{0, 0},
                      MoveElement{1, false, 0, false, 0}),
              Condition::would_empty_pair);
    EXPECT_EQ(refusal(cnf_to_decomposition(cnf({{-1, 1}, {1, 1}})), BoolTuple{1, 1},
                      MoveElement{1, true, 0, true, 0}),
              Condition::opposite_component);
}

TEST(ApplyChange, RandomAdmissibleStepsKeepCovering) {
    std::mt19937_64 rng(5);
    int applied = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const std::size_t n = 1 + seed % 6, m = 1 + seed % 5;
        const auto f = random_instance(n, m, seed, true);
        Decomposition d = cnf_to_decomposition(f);
        CoveringWitness w{*first_satisfying(f)};
        for (int k = 0; k < 40; ++k) {
            ChangeOp op;
            const std::size_t i = rng() % n, e = rng() % m;
            const bool side = rng() & 1;
            switch (rng() % 4) {
                case 0: op = RemoveElement{i, side, e}; break;
                case 1: op = AddElement{i, side, e}; break;
                case 2: op = MoveElement{i, w.tuple[i], rng() % n, false, e}; break;
                default: op = FlipPair{i}; break;
            }
            if (auto* mv = std::get_if<MoveElement>(&op)) mv->to_side = w.tuple[mv->to_pair];
            try {
                std::tie(d, w) = apply_change(d, w, op);
            } catch (const AdmissibilityError&) {
                continue;
            }
            ++applied;
            ASSERT_NO_THROW(Decomposition::validate(d.to_matrix(false), d.to_matrix(true)));
            ASSERT_TRUE(oracle::covers(oracle::pairs_of(decomposition_to_cnf(d).to_rows()),
                                       oracle::vec(w.tuple)));
        }
    }
    EXPECT_GT(applied, 1000);
}

TEST(GenerateTrace, SingleRemoval) {
    const auto tr = generate_trace(f_ex(), h_ex(), BoolTuple{0, 1});
    ASSERT_EQ(tr.steps.size(), 1u);
    EXPECT_EQ(tr.steps[0], (ChangeOp{RemoveElement{0, true, 0}}));
    EXPECT_EQ(replay(f_ex(), tr), h_ex());
}

TEST(GenerateTrace, Identity) {
    const auto f = cnf({{1, -1, 0}, {0, 1, 1}, {-1, 0, 1}});
    const auto tr = generate_trace(f, f, *first_satisfying(f));
    EXPECT_TRUE(tr.steps.empty());
    EXPECT_EQ(replay(f, tr), f);
}

TEST(GenerateTrace, SwappedClauses) {
    const auto f = cnf({{1, 0}, {1, 1}});
    const auto h = cnf({{1, 1}, {1, 0}});
    expect_replays_to(f, generate_trace(f, h, BoolTuple{1, 0}), h);
}

TEST(GenerateTrace, RejectsUnsatisfiedEnds) {
    try {
        generate_trace(f_ex(), h_ex(), BoolTuple{1, 0});
        FAIL();
    } catch (const NotSatisfiedError& e) {
        EXPECT_EQ(e.which(), NotSatisfiedError::Which::source);
    }
    try {
        generate_trace(f_ex(), cnf({{1, 0}, {0, -1}}), BoolTuple{0, 1});
        FAIL();
    } catch (const NotSatisfiedError& e) {
        EXPECT_EQ(e.which(), NotSatisfiedError::Which::target);
    }
    EXPECT_THROW(generate_trace(f_ex(), cnf({{1}}), BoolTuple{1, 1}), DimensionError);
}

TEST(GenerateTrace, SingleClauseOnlyReachesItself) {
    const auto f = cnf({{1, 1}});
    const auto h = cnf({{1, -1}});
    EXPECT_THROW(generate_trace(f, h, BoolTuple{1, 0}), UnreachableError);
    EXPECT_TRUE(generate_trace(f, f, BoolTuple{1, 0}).steps.empty());
    // The oracle agrees: no admissible change leaves a single-clause function.
    EXPECT_EQ(oracle::reachable(f.to_rows(), {1, 0}).size(), 1u);
}

TEST(GenerateTrace, ReachabilityMatchesOracle) {
    // For m >= 2 every function satisfied by sigma is reachable.
    for (std::size_t n = 1; n <= 2; ++n) {
        const std::size_t m = 2;
        const auto all = oracle::all_cnfs(n, m);
        for (std::uint64_t v = 0; v < (1u << n); ++v) {
            const auto t = oracle::bits(v, n);
            const auto sigma = BoolTuple::from_index(v, n);
            for (const auto& f : all) {
                if (!oracle::eval(f, t)) continue;
                const auto reach = oracle::reachable(f, t);
                for (const auto& h : all) {
                    if (!oracle::eval(h, t)) continue;
                    ASSERT_TRUE(reach.count(h));
                    const auto tr = generate_trace(cnf(f), cnf(h), sigma);
                    ASSERT_EQ(replay(cnf(f), tr), cnf(h));
                }
            }
        }
    }
}

TEST(GenerateTrace, ExhaustiveSmall) {
    for (auto [n, m] : {std::pair<std::size_t, std::size_t>{1, 2}, {2, 2}, {1, 3}, {3, 2}, {2, 3}}) {
        const auto all = oracle::all_cnfs(n, m);
        for (std::uint64_t v = 0; v < (1u << n); ++v) {
            const auto sigma = BoolTuple::from_index(v, n);
            std::vector<CnfMatrix> sat;
            for (const auto& rows : all)
                if (oracle::eval(rows, oracle::vec(sigma))) sat.push_back(cnf(rows));
            for (const auto& f : sat)
                for (const auto& h : sat) {
                    const auto tr = generate_trace(f, h, sigma);
                    ASSERT_EQ(replay(f, tr), h);
                    ASSERT_LE(tr.counts.elementary.total(), 16 * n * m);
                }
        }
    }
}

TEST(GenerateTrace, RandomReplayAndBound) {
    for (std::uint64_t seed = 0; seed < 400; ++seed) {
        const std::size_t n = 1 + seed % 10, m = 2 + seed % 9;
        const auto sigma = BoolTuple::from_index(seed * 2654435761u, n);
        const auto f = planted_instance(m, sigma, seed);
        const auto h = planted_instance(m, sigma, seed + 7777);
        const auto tr = generate_trace(f, h, sigma);
        expect_replays_to(f, tr, h);
        EXPECT_LE(tr.counts.elementary.total(), 16 * n * m);
        EXPECT_EQ(tr.counts.steps(), tr.steps.size());
    }
}

TEST(GenerateTrace, WideInstances) {
    const auto sigma = BoolTuple::from_index(0x5a5, 12);
    const auto f = planted_instance(130, sigma, 1);
    const auto h = planted_instance(130, sigma, 2);
    const auto tr = generate_trace(f, h, sigma);
    EXPECT_EQ(replay(f, tr), h);
    EXPECT_LE(tr.counts.elementary.total(), 16u * 12 * 130);
}

TEST(GenerateTraceExtended, SingleClauseFlip) {
    const auto tr = generate_trace_extended(cnf({{1}}), BoolTuple{1}, cnf({{-1}}), BoolTuple{0});
    ASSERT_EQ(tr.steps.size(), 1u);
    EXPECT_EQ(tr.steps[0], ChangeOp{FlipPair{0}});
    EXPECT_EQ(replay(cnf({{1}}), tr), cnf({{-1}}));
}

TEST(GenerateTraceExtended, SameTupleMatchesPlain) {
    const auto sigma = BoolTuple{0, 1};
    EXPECT_EQ(generate_trace_extended(f_ex(), sigma, h_ex(), sigma),
              generate_trace(f_ex(), h_ex(), sigma));
}

TEST(GenerateTraceExtended, FlipThenGenerate) {
    const auto tr = generate_trace_extended(f_ex(), BoolTuple{1, 1}, h_ex(), BoolTuple{0, 1});
    ASSERT_FALSE(tr.steps.empty());
    EXPECT_EQ(tr.steps[0], ChangeOp{FlipPair{0}});
    expect_replays_to(f_ex(), tr, h_ex());
}

TEST(GenerateTraceExtended, EqualsFlipsThenPlainTrace) {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const std::size_t n = 1 + seed % 7, m = 2 + seed % 6;
        const auto f = random_instance(n, m, seed, true);
        const auto h = random_instance(n, m, seed + 999, true);
        const auto fs = satisfying_assignments(f), hs = satisfying_assignments(h);
        const auto sigma = fs[seed % fs.size()], delta = hs[(seed / 3) % hs.size()];

        const auto tr = generate_trace_extended(f, sigma, h, delta);
        Decomposition g = cnf_to_decomposition(f);
        Trace expected;
        expected.n = n;
        expected.m = m;
        expected.initial = sigma;
        std::vector<std::size_t> flipped;
        for (std::size_t i = 0; i < n; ++i)
            if (sigma[i] != delta[i]) {
                expected.push(FlipPair{i});
                flipped.push_back(i);
            }
        const auto plain = generate_trace(decomposition_to_cnf(i_transform(g, flipped)), h, delta);
        for (const auto& op : plain.steps) expected.push(op);
        ASSERT_EQ(tr, expected);
        expect_replays_to(f, tr, h);
    }
}

TEST(Replay, RejectsForgedStep) {
    Trace tr = generate_trace(f_ex(), h_ex(), BoolTuple{0, 1});
    tr.push(RemoveElement{1, true, 1});
    try {
        replay(f_ex(), tr);
        FAIL();
    } catch (const InadmissibleStep& e) {
        EXPECT_EQ(e.step(), 2u);
        EXPECT_EQ(e.condition(), Condition::selected_component);
    }
}

TEST(Replay, RejectsUncoveredStartAndBadHeader) {
    Trace tr;
    tr.n = 2;
    tr.m = 2;
    tr.initial = BoolTuple{1, 0};
    try {
        replay(f_ex(), tr);
        FAIL();
    } catch (const InadmissibleStep& e) {
        EXPECT_EQ(e.step(), 0u);
    }
    tr.m = 3;
    EXPECT_THROW(replay(f_ex(), tr), DimensionError);
}

TEST(Relation, ReflexiveSymmetricTransitive) {
    const auto sigma = BoolTuple::from_string("10110");
    std::vector<CnfMatrix> pop;
    for (std::uint64_t seed = 0; seed < 12; ++seed) pop.push_back(planted_instance(6, sigma, seed));
    for (const auto& f : pop) EXPECT_EQ(replay(f, generate_trace(f, f, sigma)), f);
    for (std::size_t a = 0; a < pop.size(); ++a)
        for (std::size_t b = 0; b < pop.size(); ++b) {
            EXPECT_EQ(replay(pop[a], generate_trace(pop[a], pop[b], sigma)), pop[b]);
            const std::size_t c = (a + b) % pop.size();
            const auto chain = concatenate(generate_trace(pop[a], pop[b], sigma),
                                           generate_trace(pop[b], pop[c], sigma));
            EXPECT_EQ(replay(pop[a], chain), pop[c]);
        }
}

TEST(SameClass, Examples) {
    EXPECT_TRUE(same_class(f_ex(), h_ex(), BoolTuple{0, 1}));
    EXPECT_FALSE(same_class(cnf({{1}}), cnf({{-1}}), BoolTuple{1}));
    EXPECT_TRUE(same_class(f_ex(), f_ex(), BoolTuple{1, 1}));
    EXPECT_THROW(same_class(f_ex(), cnf({{1}}), BoolTuple{1, 1}), DimensionError);
}

TEST(Concatenate, RejectsMismatchedEnds) {
    const auto a = generate_trace(f_ex(), h_ex(), BoolTuple{0, 1});
    const auto b = generate_trace(f_ex(), h_ex(), BoolTuple{1, 1});
    EXPECT_THROW(concatenate(a, b), Error);
}

TEST(GenerateTraceExtended, BoundFromThreeClauses) {
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const std::size_t n = 1 + seed % 8, m = 3 + seed % 6;
        const auto f = random_instance(n, m, seed, true);
        const auto h = random_instance(n, m, seed + 31337, true);
        const auto fs = satisfying_assignments(f), hs = satisfying_assignments(h);
        const auto tr = generate_trace_extended(f, fs[seed % fs.size()], h, hs[(seed / 7) % hs.size()]);
        ASSERT_LE(tr.counts.elementary.total(), 16 * n * m);
    }
}

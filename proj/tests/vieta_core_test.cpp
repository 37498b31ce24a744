#include "vieta/vieta_core.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using vieta::BigInt;
using vieta::EquationSpec;
using vieta::PairSolution;
using vieta::Rational;
using vieta::StepKind;
using vieta::TupleSolution;

namespace {

const EquationSpec k3(1, 3);
const EquationSpec k4(1, 4);

TupleSolution triple(long a, long b, long c) {
    return TupleSolution({Rational(a), Rational(b), Rational(c)});
}

}  // namespace

TEST(EvalK, Examples) {
    EXPECT_EQ(vieta::eval_k({2, 2}, 1), Rational(3));
    EXPECT_EQ(vieta::eval_k({1, 1}, 1), Rational(4));
    EXPECT_EQ(vieta::eval_k({3, 2}, 1), Rational(3));
    EXPECT_EQ(vieta::eval_k({4, 6}, 2), Rational(3));
    EXPECT_EQ(vieta::eval_k({5, 5}, 1), Rational(12, 5));
}

TEST(IsSolution, Examples) {
    EXPECT_TRUE(vieta::is_solution({6, 14}, k3));
    EXPECT_FALSE(vieta::is_solution({1, 2}, k3));
    EXPECT_TRUE(vieta::is_solution({15, 3}, EquationSpec(2, 6)));
    EXPECT_THROW(vieta::is_solution({1, 1}, EquationSpec(1, 3, 3)), std::domain_error);
}

TEST(IsSolution, AgreesWithEvalK) {
    for (long r = 1; r <= 3; ++r)
        for (long a = 1; a <= 40; ++a)
            for (long b = 1; b <= 40; ++b) {
                PairSolution p(a, b);
                Rational v = vieta::eval_k(p, r);
                for (long k = 1; k <= 12; ++k)
                    ASSERT_EQ(vieta::is_solution(p, EquationSpec(r, k)), v == Rational(k)) << p.str();
            }
}

TEST(Domain, Validation) {
    EXPECT_THROW(PairSolution(0, 1), std::domain_error);
    EXPECT_THROW(EquationSpec(0, 3), std::domain_error);
    EXPECT_THROW(EquationSpec(1, 3, 1), std::domain_error);
    EXPECT_THROW(triple(1, 0, 2), std::domain_error);
}

TEST(Jump, Examples) {
    EXPECT_EQ(vieta::jump_left({6, 3}, k3), PairSolution(2, 3));
    EXPECT_EQ(vieta::jump_right({6, 3}, k3), PairSolution(6, 14));
    EXPECT_EQ(vieta::jump_right({4, 4}, EquationSpec(2, 3)), PairSolution(4, 6));
    EXPECT_EQ(vieta::jump_left({1, 3}, EquationSpec(2, 6)), PairSolution(15, 3));
}

TEST(Jump, RejectsNonSolutions) {
    EXPECT_THROW(vieta::jump_left({5, 5}, k3), vieta::InvalidJump);
    EXPECT_THROW(vieta::jump_right({1, 2}, k3), vieta::InvalidJump);
}

TEST(Flip, Examples) {
    EXPECT_EQ(vieta::flip({2, 3}), PairSolution(3, 2));
    EXPECT_EQ(vieta::flip({5, 5}), PairSolution(5, 5));
    EXPECT_EQ(vieta::flip({6, 14}), PairSolution(14, 6));
}

// Involution and the Vieta product a a' = b^2 + r b, over every solution in a box.
TEST(Jump, InvolutionAndRootProduct) {
    for (long r = 1; r <= 4; ++r) {
        for (const auto& h : oracle::pairs_by_rational(r, 120)) {
            EquationSpec spec(r, h.k);
            PairSolution p(h.a, h.b);
            PairSolution l = vieta::jump_left(p, spec);
            PairSolution rt = vieta::jump_right(p, spec);
            ASSERT_EQ(vieta::jump_left(l, spec), p);
            ASSERT_EQ(vieta::jump_right(rt, spec), p);
            ASSERT_EQ(p.a * l.a, p.b * p.b + spec.r * p.b);
            ASSERT_EQ(p.b * rt.b, p.a * p.a + spec.r * p.a);
            ASSERT_TRUE(vieta::is_solution(vieta::flip(p), spec));
        }
    }
}

TEST(Descend, WorkedExample) {
    auto t = vieta::descend({6, 3}, k3);
    ASSERT_EQ(t.steps.size(), 3u);
    EXPECT_EQ(t.steps[0].kind, StepKind::jump_left);
    EXPECT_EQ(t.steps[0].after, PairSolution(2, 3));
    EXPECT_EQ(t.steps[1].kind, StepKind::flip);
    EXPECT_EQ(t.steps[1].after, PairSolution(3, 2));
    EXPECT_EQ(t.steps[2].kind, StepKind::jump_left);
    EXPECT_EQ(t.terminal, PairSolution(2, 2));
}

TEST(Descend, DiagonalInputIsEmptyTrace) {
    auto t = vieta::descend({2, 2}, k3);
    EXPECT_TRUE(t.steps.empty());
    EXPECT_EQ(t.terminal, PairSolution(2, 2));
}

TEST(Descend, LargerChainPair) {
    EXPECT_EQ(vieta::descend({611, 234}, k3).terminal, PairSolution(2, 2));
    EXPECT_EQ(vieta::descend({234, 611}, k3).terminal, PairSolution(2, 2));
}

TEST(Descend, Errors) {
    EXPECT_THROW(vieta::descend({5, 5}, k3), vieta::InvalidJump);
    EXPECT_THROW(vieta::descend({1, 1}, EquationSpec(3, 8)), std::domain_error);
}

// Jumps strictly decrease the coordinate sum, flips keep it, the trace ends
// on a listed diagonal solution, and its length is bounded by the start sum.
TEST(Descend, MonotoneOverBruteForceSolutions) {
    for (long r = 1; r <= 2; ++r) {
        auto diagonals = vieta::diagonal_solutions(r);
        for (const auto& h : oracle::pairs_by_rational(r, 400)) {
            EquationSpec spec(r, h.k);
            PairSolution p(h.a, h.b);
            auto t = vieta::descend(p, spec);
            for (const auto& s : t.steps) {
                if (s.kind == StepKind::flip) ASSERT_EQ(s.after.sum(), s.before.sum());
                else ASSERT_LT(s.after.sum(), s.before.sum());
                ASSERT_TRUE(vieta::is_solution(s.after, spec));
            }
            ASSERT_TRUE(t.terminal.diagonal());
            ASSERT_LE(BigInt(static_cast<long>(t.steps.size())), p.sum());
            bool listed = std::any_of(diagonals.begin(), diagonals.end(), [&](const auto& d) {
                return d.u == t.terminal.a && d.k == spec.k;
            });
            ASSERT_TRUE(listed) << p.str();
        }
    }
}

TEST(TryDescend, MatchesDescendAndHandlesR2) {
    auto a = vieta::try_descend({6, 3}, k3);
    ASSERT_TRUE(std::holds_alternative<vieta::JumpTrace>(a));
    auto b = vieta::descend({6, 3}, k3);
    EXPECT_EQ(std::get<vieta::JumpTrace>(a).steps, b.steps);

    auto c = vieta::try_descend({4, 6}, EquationSpec(2, 3));
    ASSERT_TRUE(std::holds_alternative<vieta::JumpTrace>(c));
    EXPECT_EQ(std::get<vieta::JumpTrace>(c).terminal, PairSolution(4, 4));

    auto d = vieta::try_descend({3, 3}, EquationSpec(3, 4));
    ASSERT_TRUE(std::holds_alternative<vieta::JumpTrace>(d));
    EXPECT_TRUE(std::get<vieta::JumpTrace>(d).steps.empty());

    EXPECT_THROW(vieta::try_descend({5, 5}, k3), vieta::InvalidJump);
}

// For r >= 3 the greedy descent is only reported on, never assumed to finish.
TEST(TryDescend, LargerShiftsEndDiagonalOrStallHonestly) {
    std::size_t stalls = 0, finished = 0;
    for (long r = 3; r <= 8; ++r) {
        for (const auto& h : oracle::pairs_by_rational(r, 250)) {
            EquationSpec spec(r, h.k);
            auto res = vieta::try_descend({h.a, h.b}, spec);
            if (auto* t = std::get_if<vieta::JumpTrace>(&res)) {
                ++finished;
                ASSERT_TRUE(t->terminal.diagonal());
                for (const auto& s : t->steps) {
                    if (s.kind == StepKind::flip) continue;
                    ASSERT_LT(s.after.sum(), s.before.sum());
                }
            } else {
                const auto& st = std::get<vieta::StallReport>(res);
                ++stalls;
                ASSERT_FALSE(st.current.diagonal());
                ASSERT_GE(st.current.a, st.current.b);
                for (const auto& p : st.attempted) ASSERT_TRUE(vieta::is_solution(p, spec));
            }
        }
    }
    RecordProperty("stalls", static_cast<int>(stalls));
    RecordProperty("finished", static_cast<int>(finished));
    EXPECT_GT(finished, 0u);
}

TEST(Ascend, Examples) {
    EXPECT_EQ(vieta::ascend({2, 2}, 4, k3),
              (std::vector<PairSolution>{{2, 3}, {3, 6}, {6, 14}, {14, 35}}));
    EXPECT_EQ(vieta::ascend({1, 1}, 4, k4),
              (std::vector<PairSolution>{{1, 2}, {2, 6}, {6, 21}, {21, 77}}));
    EXPECT_EQ(vieta::ascend({1, 1}, 2, EquationSpec(2, 6)), (std::vector<PairSolution>{{1, 3}, {3, 15}}));
    EXPECT_THROW(vieta::ascend({5, 5}, 2, k3), vieta::InvalidJump);
    EXPECT_THROW(vieta::ascend({2, 3}, 2, k3), std::domain_error);
}

TEST(Ascend, SumsIncreaseAndDescendInverts) {
    for (std::size_t n = 1; n <= 25; ++n) {
        auto chain = vieta::ascend({2, 2}, n, k3);
        for (std::size_t i = 0; i < chain.size(); ++i) {
            ASSERT_TRUE(vieta::is_solution(chain[i], k3));
            if (i) {
                ASSERT_GT(chain[i].sum(), chain[i - 1].sum());
            }
        }
        auto t = vieta::descend(chain.back(), k3);
        EXPECT_EQ(t.terminal, PairSolution(2, 2));
        EXPECT_EQ(t.jump_count(), n);
        EXPECT_EQ(t.steps.size(), 2 * n);
    }
}

TEST(Diagonal, Examples) {
    using D = vieta::DiagonalSolution;
    EXPECT_EQ(vieta::diagonal_solutions(1), (std::vector<D>{{2, 3}, {1, 4}}));
    EXPECT_EQ(vieta::diagonal_solutions(2), (std::vector<D>{{4, 3}, {2, 4}, {1, 6}}));
    EXPECT_EQ(vieta::diagonal_solutions(3), (std::vector<D>{{6, 3}, {3, 4}, {2, 5}, {1, 8}}));
}

TEST(Diagonal, MatchesScan) {
    for (long r = 1; r <= 200; ++r) {
        auto got = vieta::diagonal_solutions(r);
        auto want = oracle::diagonal_by_scan(r);
        ASSERT_EQ(got.size(), want.size()) << r;
        for (std::size_t i = 0; i < got.size(); ++i) {
            ASSERT_EQ(got[i].u, want[i].first);
            ASSERT_EQ(got[i].k, want[i].second);
            ASSERT_TRUE(vieta::is_solution({got[i].u, got[i].u}, EquationSpec(r, got[i].k)));
        }
    }
}

// AM-GM: with r = 1 no pair reaches k <= 2.
TEST(AmGm, NoSmallK) {
    for (long a = 1; a <= 200; ++a)
        for (long b = 1; b <= 200; ++b) {
            PairSolution p(a, b);
            ASSERT_GT(vieta::eval_k(p, 1), Rational(2));
            for (long k = -2; k <= 2; ++k) ASSERT_FALSE(vieta::is_solution(p, EquationSpec(1, k)));
        }
}

TEST(JumpThree, WorkedExample) {
    const EquationSpec spec(4, 7, 3);
    const auto t = triple(66, 48, 352);
    EXPECT_EQ(vieta::cyclic_sum(t, 4), Rational(7));
    EXPECT_EQ(vieta::jump_three(t, 1, spec), TupleSolution({Rational(2848, 11), Rational(48), Rational(352)}));
    // b' = (a + r) c / b and c' = (b + r) a / c
    EXPECT_EQ(vieta::jump_three(t, 2, spec), TupleSolution({Rational(66), Rational(1540, 3), Rational(352)}));
    EXPECT_EQ(vieta::jump_three(t, 3, spec), TupleSolution({Rational(66), Rational(48), Rational(39, 4)}));
    EXPECT_FALSE(vieta::jump_three(t, 1, spec).integral());
}

// The three triples as printed in the worked example with 39/4 and 1540/3 in
// positions 2 and 3 do not satisfy the equation.
TEST(JumpThree, LiteralExampleTriplesAreNotSolutions) {
    EXPECT_NE(vieta::cyclic_sum(TupleSolution({Rational(66), Rational(39, 4), Rational(352)}), 4), Rational(7));
    EXPECT_NE(vieta::cyclic_sum(TupleSolution({Rational(66), Rational(48), Rational(1540, 3)}), 4), Rational(7));
}

TEST(JumpThree, Errors) {
    EXPECT_THROW(vieta::jump_three(triple(1, 2, 3), 1, EquationSpec(4, 7, 3)), vieta::InvalidJump);
    EXPECT_THROW(vieta::jump_three(triple(66, 48, 352), 4, EquationSpec(4, 7, 3)), std::domain_error);
    EXPECT_THROW(vieta::jump_three(triple(66, 48, 352), 1, EquationSpec(4, 7, 2)), std::domain_error);
}

// Repeated rational jumps keep the cyclic sum exactly at k and are involutions.
TEST(JumpThree, PreservesSatisfaction) {
    for (auto [r, k, a, b, c] : std::vector<std::tuple<long, long, long, long, long>>{
             {4, 7, 66, 48, 352}, {2, 7, 7, 18, 40}, {1, 6, 1, 1, 1}}) {
        const EquationSpec spec(r, k, 3);
        TupleSolution t = triple(a, b, c);
        ASSERT_EQ(vieta::cyclic_sum(t, r), Rational(k));
        for (int step = 0; step < 9; ++step) {
            int pos = step % 3 + 1;
            TupleSolution next;
            try {
                next = vieta::jump_three(t, pos, spec);
            } catch (const vieta::InvalidJump&) {
                continue;
            }
            ASSERT_EQ(vieta::cyclic_sum(next, r), Rational(k));
            ASSERT_EQ(vieta::jump_three(next, pos, spec), t);
            // product of roots: x x' = (x_prev + r) x_next
            const auto i = static_cast<std::size_t>(pos - 1);
            ASSERT_EQ(t.entries[i] * next.entries[i],
                      (t.entries[(i + 2) % 3] + Rational(r)) * t.entries[(i + 1) % 3]);
            t = next;
        }
    }
}

TEST(CanonicalRotation, MinimalFirstEntry) {
    EXPECT_EQ(vieta::canonical_rotation(std::vector<long>{66, 48, 352}), (std::vector<long>{48, 352, 66}));
    EXPECT_EQ(vieta::canonical_rotation(std::vector<long>{2, 1, 3, 1, 2}), (std::vector<long>{1, 2, 2, 1, 3}));
}

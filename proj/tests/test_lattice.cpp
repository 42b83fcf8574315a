#include <gtest/gtest.h>

#include "hblm/conditions.hpp"
#include "hblm/enumerate.hpp"
#include "hblm/lattice.hpp"
#include "hblm/literal.hpp"
#include "oracles/oracles.hpp"

using namespace hblm;

namespace {

RingCtx ring(int p, int e, bool eps = false, int n = 1, int f = 1) { return build_ring(RingSpec{p, n, f, eps, e, 1, {}}); }

}  // namespace

TEST(Lattice, FullModuleIsSummandOfFullRank)
{
    RingCtx ctx = ring(3, 2, false, 2);
    Lattice m = full_module(ctx);
    EXPECT_TRUE(m.is_summand_of_rank(4));
    EXPECT_TRUE(is_O_invariant(ctx, m));
}

TEST(Lattice, MultipleOfPIsNotASummand)
{
    RingCtx ctx = ring(3, 1, false, 2);  // Z/9, e = 1
    RMatrix rows(1, 2, {3, 0});
    Lattice l = Lattice::from_rows(ctx, rows);
    EXPECT_FALSE(l.is_summand());
    EXPECT_FALSE(l.is_summand_of_rank(1));
}

TEST(Lattice, PiMOverF2IsRankTwoSummand)
{
    RingCtx ctx = ring(2, 2);
    Lattice pm = pi_multiple(ctx, full_module(ctx));
    EXPECT_TRUE(pm.is_summand_of_rank(2));
    EXPECT_TRUE(is_O_invariant(ctx, pm));
    EXPECT_TRUE(pi_action(ctx, pm).is_zero());
}

TEST(Lattice, PiMOverZ9IsNotASummand)
{
    RingCtx ctx = ring(3, 2, false, 2);
    Lattice pm = pi_multiple(ctx, full_module(ctx));
    EXPECT_FALSE(pm.is_summand());
    EXPECT_FALSE(is_point_of_N(ctx, pm));
}

TEST(Lattice, SummandCriterionMatchesOracle)
{
    std::mt19937_64 rng(21);
    for (auto spec : {RingSpec{2, 2, 1, false, 1, 1, {}}, RingSpec{2, 1, 1, true, 1, 1, {}}, RingSpec{3, 2, 1, false, 1, 1, {}},
                      RingSpec{2, 1, 1, true, 2, 1, {}}}) {
        RingCtx ctx = build_ring(spec);
        const auto& r = ctx.base();
        const std::size_t d = static_cast<std::size_t>(2 * ctx.g());
        oracle::Packing pk{r.size(), d};
        for (int t = 0; t < 200; ++t) {
            RMatrix rows = oracle::random_matrix(rng, r, 1 + rng() % 3, d);
            // Bias towards nonunit entries so that non-summands show up.
            if (rng() % 2)
                for (std::size_t c = 0; c < d; ++c) rows(0, c) = r.mul(rows(0, c), r.uniformizer_pow(1));
            Lattice l = Lattice::from_rows(ctx, rows);
            auto span = oracle::span_set(r, rows);
            for (std::size_t rank = 0; rank <= d; ++rank)
                EXPECT_EQ(l.is_summand_of_rank(rank), oracle::is_free_summand(r, pk, span, rank)) << spec.label() << " " << l.key();
            // Canonical rows span the same set; every original generator is a member.
            EXPECT_EQ(oracle::span_set(r, l.canon()), span);
            for (std::size_t i = 0; i < rows.rows(); ++i) EXPECT_TRUE(l.contains(r, rows.row(i)));
            if (l.is_summand()) {
                // The summand basis spans L and is the identity on the chart columns.
                EXPECT_EQ(oracle::span_set(r, l.basis()), span);
                for (std::size_t i = 0; i < l.basis().rows(); ++i)
                    for (std::size_t k = 0; k < l.chart_cols().size(); ++k) EXPECT_EQ(l.basis()(i, l.chart_cols()[k]), i == k ? 1u : 0u);
            }
        }
    }
}

TEST(Lattice, ContainsAndOrdering)
{
    RingCtx ctx = ring(3, 2);
    Lattice a = o_span(ctx, RMatrix(1, 4, {1, 0, 0, 0}));
    Lattice pm = pi_multiple(ctx, full_module(ctx));
    EXPECT_TRUE(full_module(ctx).contains(ctx.base(), a));
    EXPECT_FALSE(a.contains(ctx.base(), pm));
    EXPECT_NE(a, pm);
    EXPECT_EQ(Lattice::from_rows(ctx, a.canon()), a);
    EXPECT_EQ(a.key(), "1,0,0,0;0,1,0,0");
}

TEST(Lattice, InvarianceUnderPi)
{
    RingCtx ctx = ring(3, 2);
    // span_R(f1, pi f2): pi*f1 is missing.
    Lattice l = Lattice::from_rows(ctx, RMatrix(2, 4, {1, 0, 0, 0, 0, 0, 0, 1}));
    EXPECT_FALSE(is_O_invariant(ctx, l));
    EXPECT_THROW(pi_action(ctx, l), Error);
    EXPECT_TRUE(is_O_invariant(ctx, o_span(ctx, RMatrix(1, 4, {1, 2, 1, 1}))));
}

TEST(Lattice, PiActionOnFreeLineIsCompanion)
{
    for (auto ctx : {ring(3, 3), ring(3, 2, false, 2), ring(5, 2, true)}) {
        RMatrix gen(1, 2 * ctx.g());
        gen(0, 0) = 1;
        Lattice l = o_span(ctx, gen);
        EXPECT_EQ(charpol(ctx.base(), pi_action(ctx, l)), eisenstein_charpol(ctx));
    }
}

TEST(Lattice, DeformationLatticeActsDiagonally)
{
    RingCtx ctx = ring(2, 2, true);
    Lattice l = parse_lattice(ctx, "pi*f1+eps*f1 ; pi*f2");
    RMatrix a = pi_action(ctx, l);
    // Diagonalizable as diag(eps, 0): charpoly X^2 - eps X, and A (A - eps) = 0.
    EXPECT_EQ(format_poly(ctx.base(), charpol(ctx.base(), a)), "X^2 - eps*X");
    RMatrix eps_id = mat_scale(ctx.base(), RMatrix::identity(2), ctx.eps(Level::Base).coeffs[0]);
    EXPECT_TRUE(mat_mul(ctx.base(), a, mat_sub(ctx.base(), a, eps_id)).is_zero());
}

TEST(Lattice, PiActionOnFullModuleHasSquaredEisensteinCharpol)
{
    for (auto ctx : {ring(3, 2), ring(2, 3, true), ring(2, 1, false, 1, 2)}) {
        UniPoly eis = eisenstein_charpol(ctx);
        EXPECT_EQ(charpol(ctx.base(), pi_action(ctx, full_module(ctx))), poly_mul(ctx.base(), eis, eis));
    }
}

TEST(ReductionType, Examples)
{
    RingCtx ctx = ring(3, 2);
    Lattice free_line = o_span(ctx, RMatrix(1, 4, {1, 0, 0, 0}));
    EXPECT_EQ(reduction_type(ctx, free_line).chart_type(), std::make_pair(0, 2));
    Lattice pm = pi_multiple(ctx, full_module(ctx));
    EXPECT_EQ(reduction_type(ctx, pm).chart_type(), std::make_pair(1, 1));
    EXPECT_EQ(pi_power_ranks(ctx, pm), (std::vector<std::size_t>{2, 0, 0}));

    RingCtx c3 = ring(2, 3);
    // <pi f1, pi^2 f2> as an O-module.
    Lattice l = o_span(c3, RMatrix(2, 6, {0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}));
    EXPECT_EQ(reduction_type(c3, l).chart_type(), std::make_pair(1, 2));
    EXPECT_TRUE(reduction_type(c3, l).satisfies_sum_rule());
}

TEST(ReductionType, EveryFieldPointSatisfiesTheSumRule)
{
    for (auto ctx : {ring(2, 3), ring(3, 2), ring(2, 1, false, 1, 2), ring(2, 2, false, 1, 2)})
        for (const auto& l : enum_N_points(ctx, 10'000'000, 1)) {
            auto t = reduction_type(ctx, l);
            EXPECT_EQ(t.parts.size(), static_cast<std::size_t>(ctx.f()));
            EXPECT_TRUE(t.satisfies_sum_rule()) << l.key();
            auto [i, j] = t.chart_type();
            EXPECT_LE(i, j);
        }
}

TEST(ReductionType, NeedsAFieldBase)
{
    RingCtx ctx = ring(2, 2, true);
    EXPECT_THROW(reduction_type(ctx, full_module(ctx)), Error);
}

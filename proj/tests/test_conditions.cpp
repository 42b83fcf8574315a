#include <gtest/gtest.h>

#include "hblm/chart.hpp"
#include "hblm/conditions.hpp"
#include "hblm/enumerate.hpp"
#include "hblm/literal.hpp"
#include "oracles/oracles.hpp"

using namespace hblm;

namespace {

RingCtx ring(int p, int e, bool eps = false, int n = 1, int f = 1) { return build_ring(RingSpec{p, n, f, eps, e, 1, {}}); }

Lattice free_line(const RingCtx& ctx)
{
    RMatrix gen(1, 2 * ctx.g());
    gen(0, 0) = 1;
    return o_span(ctx, gen);
}

}  // namespace

TEST(Conditions, FreeLineSatisfiesEverything)
{
    for (auto ctx : {ring(3, 2), ring(2, 2, true), ring(3, 2, false, 2), ring(2, 2, false, 1, 2)}) {
        Lattice l = free_line(ctx);
        EXPECT_TRUE(is_point_of_N(ctx, l));
        EXPECT_TRUE(is_isotropic(ctx, l));
        EXPECT_TRUE(is_DP(ctx, l));
        KResult k = KChecker(ctx).check(l);
        EXPECT_TRUE(k.generic);
        EXPECT_TRUE(k.pi_only);
        EXPECT_EQ(k.pi_charpol, eisenstein_charpol(ctx));
        EXPECT_TRUE(is_R_point(ctx, l));
    }
}

TEST(Conditions, PiMOverFieldIsDPAndKButNotR)
{
    for (int p : {2, 3}) {
        RingCtx ctx = ring(p, 2);
        Lattice pm = pi_multiple(ctx, full_module(ctx));
        EXPECT_TRUE(is_point_of_N(ctx, pm));
        EXPECT_TRUE(is_DP(ctx, pm));
        EXPECT_TRUE(is_K(ctx, pm));
        EXPECT_FALSE(is_R_point(ctx, pm));
        EXPECT_FALSE(find_O_generator(ctx, pm).has_value());
    }
}

TEST(Conditions, PiMOverZ9IsNotAPoint)
{
    RingCtx ctx = ring(3, 2, false, 2);
    Lattice pm = pi_multiple(ctx, full_module(ctx));
    EXPECT_FALSE(is_point_of_N(ctx, pm));
    EXPECT_THROW(is_DP(ctx, pm), Error);
    EXPECT_THROW(is_K(ctx, pm), Error);
    EXPECT_THROW(is_R_point(ctx, pm), Error);
}

TEST(Conditions, DeformationLatticeFailsDPAndK)
{
    for (int p : {2, 3}) {
        RingCtx ctx = ring(p, 2, true);
        Lattice l = parse_lattice(ctx, "pi*f1+eps*f1 ; pi*f2");
        EXPECT_TRUE(is_point_of_N(ctx, l));
        EXPECT_FALSE(is_isotropic(ctx, l));
        EXPECT_FALSE(is_DP(ctx, l));
        KResult k = KChecker(ctx).check(l);
        EXPECT_FALSE(k.generic);
        EXPECT_FALSE(k.pi_only);
        EXPECT_EQ(format_poly(ctx.base(), k.pi_charpol), "X^2 - eps*X");
    }
}

TEST(Conditions, GenericElementOnPiMOverF3)
{
    // t0 + t1*pi acts on pi M as t0, so the generic charpoly is (X - t0)^2,
    // which equals the regular one because (X - t0)^2 - t1^2 * 3 = (X - t0)^2 mod 3; -2 = 1 in F3.
    RingCtx ctx = ring(3, 2);
    KChecker kc(ctx);
    MultiPolyRing pr(ctx.base(), 3);
    EXPECT_EQ(pr.format(kc.reference(), {"t0", "t1", "X"}), "X^2 + X*t0 + t0^2");
}

TEST(Conditions, RImpliesDPAndKOnEveryEnumeratedPoint)
{
    for (auto ctx : {ring(2, 2), ring(3, 2, true), ring(2, 2, false, 2), ring(2, 3, true), ring(2, 1, false, 1, 2)}) {
        KChecker kc(ctx);
        for (const auto& l : enum_N_points(ctx, 10'000'000, 1)) {
            const bool r = is_R_point(ctx, l);
            const bool dp = is_DP(ctx, l);
            EXPECT_EQ(dp, is_isotropic(ctx, l));
            EXPECT_EQ(dp, kc.check(l).generic) << l.key();
            if (r) {
                EXPECT_TRUE(dp);
                auto v = find_O_generator(ctx, l);
                ASSERT_TRUE(v.has_value());
                EXPECT_EQ(o_span(ctx, RMatrix(1, v->size(), *v)), l);
            }
        }
    }
}

TEST(Conditions, KImpliesEverySpecializationOverFields)
{
    // Over a field the generic identity specializes to charpol(x; L) = charpol(x; O) for each x in O.
    for (auto ctx : {ring(2, 2), ring(3, 2), ring(2, 1, false, 1, 2)}) {
        const auto& r = ctx.base();
        const auto elems = ctx.enumerate_elements(Level::Full);
        KChecker kc(ctx);
        for (const auto& l : enum_N_points(ctx, 10'000'000, 1)) {
            bool all = true;
            for (const auto& x : elems) {
                UniPoly on_l = charpol(r, restricted_action(ctx, l, ctx.action_on_M(x.coeffs)));
                UniPoly on_o = charpol(r, ctx.regular_rep(x.coeffs));
                all = all && on_l == on_o;
            }
            if (kc.check(l).generic) EXPECT_TRUE(all) << l.key();
        }
    }
}

TEST(Conditions, QuotientCharpolFactorsTheAmbient)
{
    for (auto ctx : {ring(2, 2, true), ring(3, 2, true), ring(3, 2, false, 2), ring(2, 3)}) {
        const auto& r = ctx.base();
        UniPoly whole = charpol(r, ctx.pi_on_M());
        for (const auto& l : enum_N_points(ctx, 10'000'000, 1))
            EXPECT_EQ(poly_mul(r, charpol(r, pi_action(ctx, l)), quotient_pi_charpol(ctx, l)), whole) << l.key();
    }
}

// ---------------------------------------------------------------- charts

TEST(Chart, EmbedExtractRoundTrip)
{
    std::mt19937_64 rng(41);
    for (auto ctx : {ring(3, 2), ring(5, 3), ring(3, 2, true), ring(3, 2, false, 2)})
        for (ChartType t : chart_types(ctx.e()))
            for (int k = 0; k < 30; ++k) {
                ChartPoint cp{t, oracle::random_matrix(rng, ctx.base(), ctx.e(), ctx.e())};
                Lattice l = chart_embed(ctx, cp);
                EXPECT_TRUE(l.is_summand_of_rank(static_cast<std::size_t>(ctx.e())));
                EXPECT_EQ(chart_extract(ctx, l, t), cp);
                EXPECT_EQ(chart_pi_invariant(ctx, cp), is_O_invariant(ctx, l));
                // Same endomorphism in the graph basis and in the canonical basis.
                if (chart_pi_invariant(ctx, cp))
                    EXPECT_EQ(charpol(ctx.base(), chart_pi_action(ctx, cp)), charpol(ctx.base(), pi_action(ctx, l)));
            }
}

TEST(Chart, ZeroChartIsF0)
{
    RingCtx ctx = ring(5, 3);
    for (ChartType t : chart_types(3)) {
        ChartPoint cp{t, RMatrix(3, 3)};
        EXPECT_TRUE(chart_pi_invariant(ctx, cp));
        EXPECT_TRUE(is_isotropic(ctx, chart_embed(ctx, cp)));
        EXPECT_TRUE(jcj_criterion(ctx, cp));
        EXPECT_EQ(beta_involution(cp, ctx.base()), cp);
        EXPECT_EQ(a_prime(ctx, cp), direct_sum(jordan_block(t.j), jordan_block(t.i)));
    }
}

TEST(Chart, ExtractRejectsLatticesOffTheChart)
{
    RingCtx ctx = ring(3, 2);
    // F1 itself does not project onto F0.
    Lattice f1 = Lattice::from_rows(ctx, RMatrix(2, 4, {1, 0, 0, 0, 0, 0, 1, 0}));
    EXPECT_THROW(chart_extract(ctx, f1, ChartType{1, 1}), Error);
    EXPECT_THROW(chart_embed(ctx, ChartPoint{ChartType{1, 1}, RMatrix(3, 3)}), Error);
}

TEST(Chart, BetaInvolutionExplicitForm)
{
    BaseRing r(5, 1, false);
    ChartPoint cp{ChartType{1, 1}, RMatrix(2, 2, {1, 2, 3, 4})};
    ChartPoint img = beta_involution(cp, r);
    EXPECT_EQ(img.c, RMatrix(2, 2, {r.neg(4), r.neg(2), r.neg(3), r.neg(1)}));
    EXPECT_EQ(beta_involution(img, r), cp);
}

TEST(Chart, BetaInvolutionComputesTheBetaComplement)
{
    std::mt19937_64 rng(42);
    for (auto ctx : {ring(3, 2), ring(5, 3), ring(3, 2, true), ring(2, 3), ring(3, 2, false, 2)}) {
        GramForm b = beta_gram(ctx);
        for (ChartType t : chart_types(ctx.e()))
            for (int k = 0; k < 30; ++k) {
                ChartPoint cp{t, oracle::random_matrix(rng, ctx.base(), ctx.e(), ctx.e())};
                EXPECT_EQ(chart_embed(ctx, beta_involution(cp, ctx.base())), orth_complement(ctx, chart_embed(ctx, cp), {b}));
            }
    }
}

TEST(Chart, APrimeIsTheActionOnTheComplement)
{
    RingCtx ctx = ring(3, 2);
    ChartPoint cp{ChartType{1, 1}, RMatrix(2, 2, {1, 2, 0, 1})};
    // Blocks of size one: A' = C'.
    EXPECT_EQ(a_prime(ctx, cp), beta_involution(cp, ctx.base()).c);
    std::mt19937_64 rng(43);
    for (auto c : {ring(5, 3), ring(3, 2, true)})
        for (ChartType t : chart_types(c.e()))
            for (int k = 0; k < 200; ++k) {
                ChartPoint p{t, oracle::random_matrix(rng, c.base(), c.e(), c.e())};
                ChartPoint img = beta_involution(p, c.base());
                if (!chart_pi_invariant(c, img)) continue;
                // Graph basis on the chart side, canonical basis on the lattice side.
                EXPECT_EQ(a_prime(c, p), chart_pi_action(c, img));
                EXPECT_EQ(charpol(c.base(), a_prime(c, p)), charpol(c.base(), pi_action(c, chart_embed(c, img))));
            }
}

TEST(Chart, CompanionFormula)
{
    RingCtx ctx = ring(5, 2);
    ChartPoint zero{ChartType{1, 1}, RMatrix(2, 2)};
    CompanionData cd = companion_g(ctx, zero);
    EXPECT_EQ(cd.g, UniPoly::binomial(2, 0));
    EXPECT_TRUE(mat_mul(ctx.base(), cd.m, cd.m).is_zero());
    EXPECT_THROW(companion_g(ctx, ChartPoint{ChartType{0, 2}, RMatrix(2, 2)}), Error);

    // (1,1), C = [[a,b],[c,d]]: g = (X + a)(X + d) - c*b.
    const auto& r = ctx.base();
    ChartPoint cp{ChartType{1, 1}, RMatrix(2, 2, {1, 2, 3, 4})};
    UniPoly want = poly_sub(r, poly_mul(r, UniPoly::from_coeffs({1, 1}), UniPoly::from_coeffs({4, 1})), UniPoly::from_coeffs({r.mul(3, 2)}));
    CompanionData c2 = companion_g(ctx, cp);
    EXPECT_EQ(c2.g, want);
    EXPECT_EQ(oracle::leibniz_charpol(r, c2.m), c2.g.coeffs);
}

TEST(Chart, CompanionPairingEqualsGAtPi)
{
    for (auto ctx : {ring(3, 2), ring(5, 3), ring(3, 2, true), ring(2, 3)})
        for (ChartType t : chart_types(ctx.e())) {
            if (t.i < 1) continue;
            const auto& r = ctx.base();
            const std::size_t e = static_cast<std::size_t>(ctx.e());
            std::uint64_t total = 1;
            for (std::size_t k = 0; k < e * e; ++k) total *= r.size();
            for (std::uint64_t idx = 0; idx < total; idx += 1 + total / 4000) {
                ChartPoint cp{t, RMatrix(e, e)};
                std::uint64_t v = idx;
                for (std::size_t k = 0; k < e * e; ++k) {
                    cp.c(k / e, k % e) = static_cast<Code>(v % r.size());
                    v /= r.size();
                }
                if (!chart_pi_invariant(ctx, cp)) continue;
                CompanionData cd = companion_g(ctx, cp);
                auto [e1, e2] = chart_o_generators(ctx, cp);
                EXPECT_EQ(eval_alt_form(ctx, e1, e2), eval_at_pi(ctx, cd.g));
            }
        }
}

TEST(Chart, JCJCriterionMatchesIsotropy)
{
    RingCtx ctx = ring(3, 2);
    oracle::for_each_matrix(ctx.base(), 2, [&](const RMatrix& c) {
        for (ChartType t : chart_types(2)) {
            ChartPoint cp{t, c};
            if (!chart_pi_invariant(ctx, cp)) continue;
            EXPECT_EQ(jcj_criterion(ctx, cp), is_isotropic(ctx, chart_embed(ctx, cp)));
        }
    });
    ChartPoint def{ChartType{1, 1}, RMatrix(2, 2)};
    RingCtx dual = ring(3, 2, true);
    def.c(0, 0) = dual.eps(Level::Base).coeffs[0];
    EXPECT_FALSE(jcj_criterion(dual, def));
    EXPECT_THROW(jcj_criterion(ring(2, 2), ChartPoint{ChartType{1, 1}, RMatrix(2, 2)}), Error);
}

TEST(Chart, DeformationLatticeIsAChartPoint)
{
    RingCtx ctx = ring(3, 2, true);
    Lattice l = parse_lattice(ctx, "pi*f1+eps*f1 ; pi*f2");
    ChartPoint cp = chart_extract(ctx, l, ChartType{1, 1});
    RMatrix want(2, 2);
    want(0, 0) = ctx.eps(Level::Base).coeffs[0];
    EXPECT_EQ(cp.c, want);
    EXPECT_EQ(chart_embed(ctx, cp), l);
}

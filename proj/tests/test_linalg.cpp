#include <gtest/gtest.h>

#include "hblm/linalg.hpp"
#include "oracles/oracles.hpp"

using namespace hblm;

namespace {

std::vector<BaseRing> small_rings()
{
    return {BaseRing(2, 1, false), BaseRing(3, 1, false), BaseRing(2, 2, false), BaseRing(3, 2, false), BaseRing(2, 1, true),
            BaseRing(3, 1, true), BaseRing(2, 3, false)};
}

std::vector<Code> poly_vec(const UniPoly& p) { return p.coeffs; }

}  // namespace

TEST(Charpol, BerkowitzMatchesLeibnizOnAllSmallMatrices)
{
    for (BaseRing r : {BaseRing(2, 1, false), BaseRing(3, 1, false)})
        for (std::size_t n = 1; n <= 2; ++n)
            oracle::for_each_matrix(r, n, [&](const RMatrix& a) {
                ASSERT_EQ(poly_vec(charpol(r, a)), oracle::leibniz_charpol(r, a));
                ASSERT_EQ(determinant(r, a), oracle::leibniz_det(r, a));
            });
}

TEST(Charpol, BerkowitzMatchesLeibnizOnRandomMatrices)
{
    std::mt19937_64 rng(11);
    for (const auto& r : small_rings())
        for (std::size_t n : {3u, 4u, 5u})
            for (int t = 0; t < 40; ++t) {
                RMatrix a = oracle::random_matrix(rng, r, n, n);
                ASSERT_EQ(poly_vec(charpol(r, a)), oracle::leibniz_charpol(r, a));
                ASSERT_EQ(determinant(r, a), oracle::leibniz_det(r, a));
            }
}

TEST(Charpol, CayleyHamilton)
{
    std::mt19937_64 rng(12);
    for (const auto& r : small_rings())
        for (std::size_t n = 1; n <= 5; ++n)
            for (int t = 0; t < 30; ++t) {
                RMatrix a = oracle::random_matrix(rng, r, n, n);
                UniPoly cp = charpol(r, a);
                EXPECT_TRUE(cp.is_monic());
                EXPECT_EQ(cp.degree(), static_cast<int>(n));
                EXPECT_TRUE(eval_poly_at_matrix(r, cp, a).is_zero());
            }
}

TEST(Charpol, EmptyMatrixHasCharpolOne)
{
    BaseRing r(3, 1, false);
    EXPECT_EQ(charpol(r, RMatrix(0, 0)).coeffs, (std::vector<Code>{1}));
}

TEST(Inverse, MatchesBruteForceSearch)
{
    for (BaseRing r : {BaseRing(2, 1, false), BaseRing(3, 1, false), BaseRing(2, 2, false), BaseRing(2, 1, true)})
        oracle::for_each_matrix(r, 2, [&](const RMatrix& a) {
            auto got = inverse(r, a);
            auto want = oracle::brute_inverse(r, a);
            ASSERT_EQ(got.has_value(), want.has_value());
            if (got) ASSERT_EQ(*got, *want);
        });
}

TEST(Smith, DecompositionReassembles)
{
    std::mt19937_64 rng(13);
    for (const auto& r : small_rings())
        for (int t = 0; t < 60; ++t) {
            std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
            RMatrix a = oracle::random_matrix(rng, r, rows, cols);
            SmithForm s = chain_echelon(r, a);
            EXPECT_EQ(mat_mul(r, mat_mul(r, s.u, s.d), s.v), a);
            EXPECT_EQ(mat_mul(r, s.u, s.u_inv), RMatrix::identity(rows));
            EXPECT_EQ(mat_mul(r, s.v, s.v_inv), RMatrix::identity(cols));
            for (std::size_t i = 0; i < s.profile.size(); ++i) {
                EXPECT_EQ(s.d(i, i), r.uniformizer_pow(s.profile[i]));
                if (i > 0) EXPECT_LE(s.profile[i - 1], s.profile[i]);
            }
        }
}

TEST(Howell, CanonicalFormDecidesSpanEquality)
{
    std::mt19937_64 rng(14);
    for (const auto& r : {BaseRing(2, 2, false), BaseRing(2, 1, true), BaseRing(3, 1, false), BaseRing(2, 3, false)})
        for (int t = 0; t < 150; ++t) {
            std::size_t d = 2 + rng() % 2;
            RMatrix a = oracle::random_matrix(rng, r, 1 + rng() % 3, d);
            RMatrix b = oracle::random_matrix(rng, r, 1 + rng() % 3, d);
            HowellForm ha = howell_form(r, a), hb = howell_form(r, b);
            EXPECT_EQ(oracle::span_set(r, ha.rows), oracle::span_set(r, a));
            EXPECT_EQ(ha.rows == hb.rows, oracle::span_set(r, a) == oracle::span_set(r, b));
            EXPECT_EQ(howell_form(r, ha.rows).rows, ha.rows);  // idempotent
        }
}

TEST(Howell, SameSpanDifferentGenerators)
{
    BaseRing r(2, 2, false);  // Z/4
    RMatrix a(1, 2, {2, 1});
    RMatrix b(2, 2, {2, 1, 0, 2});  // 2*(2,1) = (0,2)
    EXPECT_EQ(howell_form(r, a).rows, howell_form(r, b).rows);
    EXPECT_EQ(oracle::span_set(r, a).size(), 4u);
}

TEST(Kernel, MatchesBruteForce)
{
    std::mt19937_64 rng(15);
    for (const auto& r : {BaseRing(2, 2, false), BaseRing(3, 1, true), BaseRing(2, 1, false)})
        for (int t = 0; t < 80; ++t) {
            std::size_t rows = 1 + rng() % 3, cols = 1 + rng() % 3;
            RMatrix a = oracle::random_matrix(rng, r, rows, cols);
            RMatrix k = kernel(r, a);
            std::set<std::vector<Code>> want;
            oracle::Packing pk{r.size(), cols};
            for (std::uint32_t x = 0; x < pk.count(); ++x) {
                auto v = pk.unpack(x);
                auto img = mat_apply(r, a, v);
                if (std::all_of(img.begin(), img.end(), [](Code c) { return c == 0; })) want.insert(v);
            }
            std::set<std::vector<Code>> got;
            for (auto x : oracle::span_set(r, k.transposed())) got.insert(pk.unpack(x));
            EXPECT_EQ(got, want);
        }
}

TEST(Solve, FindsSolutionsExactlyWhenTheyExist)
{
    std::mt19937_64 rng(16);
    for (const auto& r : {BaseRing(2, 2, false), BaseRing(3, 1, true), BaseRing(3, 1, false)})
        for (int t = 0; t < 80; ++t) {
            std::size_t rows = 1 + rng() % 3, cols = 1 + rng() % 3;
            RMatrix a = oracle::random_matrix(rng, r, rows, cols);
            auto b = oracle::random_vector(rng, r, rows);
            auto x = solve(r, a, b);
            bool exists = false;
            oracle::Packing pk{r.size(), cols};
            for (std::uint32_t i = 0; i < pk.count() && !exists; ++i) exists = mat_apply(r, a, pk.unpack(i)) == b;
            EXPECT_EQ(x.has_value(), exists);
            if (x) EXPECT_EQ(mat_apply(r, a, *x), b);
        }
}

TEST(ResidueRank, CountsUnitMinors)
{
    BaseRing z9(3, 2, false);
    EXPECT_EQ(residue_rank(z9, RMatrix(1, 2, {3, 0})), 0u);
    EXPECT_EQ(residue_rank(z9, RMatrix(2, 2, {1, 3, 3, 1})), 2u);
    EXPECT_EQ(residue_rank(z9, RMatrix(2, 2, {1, 2, 2, 4})), 1u);
}

TEST(GenericCharpol, SpecializesToOrdinaryCharpol)
{
    BaseRing r(3, 1, false);
    // Commuting family {I, N} with N nilpotent: charpol of t0*I + t1*N is (X - t0)^2, and -2 = 1 in F3.
    RMatrix id = RMatrix::identity(2);
    RMatrix nil(2, 2, {0, 1, 0, 0});
    MultiPoly gp = generic_charpol(r, {id, nil});
    MultiPolyRing pr(r, 3);
    EXPECT_EQ(pr.format(gp, {"t0", "t1", "X"}), "X^2 + X*t0 + t0^2");
    // Specializing t0 = 2, t1 = 1 gives charpol of 2I + N.
    RMatrix a(2, 2, {2, 1, 0, 2});
    UniPoly direct = charpol(r, a);
    std::vector<Code> spec(3);
    for (int k = 0; k <= 2; ++k) {
        Code c = 0;
        for (const auto& [key, coeff] : gp.terms()) {
            if (MultiPoly::exponent(key, 2) != k) continue;
            Code term = coeff;
            for (int e = 0; e < MultiPoly::exponent(key, 0); ++e) term = r.mul(term, 2);
            c = r.add(c, term);
        }
        spec[k] = c;
    }
    EXPECT_EQ(spec, direct.coeffs);
}

TEST(GenericCharpol, RejectsNonCommutingFamilies)
{
    BaseRing r(2, 1, false);
    RMatrix a(2, 2, {0, 1, 0, 0}), b(2, 2, {0, 0, 1, 0});
    EXPECT_THROW(generic_charpol(r, {a, b}), Error);
}

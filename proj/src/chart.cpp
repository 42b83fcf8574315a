#include "hblm/chart.hpp"

#include <stdexcept>

namespace hblm {

namespace {

RMatrix block(const RMatrix& m, std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols)
{
    RMatrix out(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) out(r, c) = m(r0 + r, c0 + c);
    return out;
}

struct PiBlocks {
    RMatrix p00, p01, p10, p11;
};

PiBlocks pi_blocks(const RingCtx& ctx, ChartType type)
{
    RMatrix p = pi_matrix(ctx, type);
    const std::size_t e = static_cast<std::size_t>(ctx.e());
    return {block(p, 0, 0, e, e), block(p, 0, e, e, e), block(p, e, 0, e, e), block(p, e, e, e, e)};
}

void check_shape(const RingCtx& ctx, const ChartPoint& cp)
{
    check_chart_type(ctx, cp.type);
    const std::size_t e = static_cast<std::size_t>(ctx.e());
    if (cp.c.rows() != e || cp.c.cols() != e) throw Error(ErrorCode::DimensionMismatch, "chart matrix must be e x e");
}

}  // namespace

Lattice chart_embed(const RingCtx& ctx, const ChartPoint& cp)
{
    check_shape(ctx, cp);
    const std::size_t e = static_cast<std::size_t>(ctx.e());
    auto idx = chart_basis_indices(ctx, cp.type);
    RMatrix rows(e, 2 * e);
    for (std::size_t k = 0; k < e; ++k) {
        rows(k, idx[k]) = 1;
        for (std::size_t r = 0; r < e; ++r) rows(k, idx[e + r]) = cp.c(r, k);
    }
    return Lattice::from_rows(ctx, rows);
}

ChartPoint chart_extract(const RingCtx& ctx, const Lattice& lat, ChartType type)
{
    check_chart_type(ctx, type);
    const auto& ring = ctx.base();
    const std::size_t e = static_cast<std::size_t>(ctx.e());
    if (!lat.is_summand_of_rank(e)) throw Error(ErrorCode::NotInChart, "lattice is not a rank-e summand");
    auto idx = chart_basis_indices(ctx, type);
    RMatrix g0(e, e), g1(e, e);
    for (std::size_t k = 0; k < e; ++k)
        for (std::size_t r = 0; r < e; ++r) {
            g0(r, k) = lat.basis()(k, idx[r]);
            g1(r, k) = lat.basis()(k, idx[e + r]);
        }
    auto inv = inverse(ring, g0);
    if (!inv) throw Error(ErrorCode::NotInChart, "lattice does not project isomorphically onto F0");
    return ChartPoint{type, mat_mul(ring, g1, *inv)};
}

RMatrix chart_pi_action(const RingCtx& ctx, const ChartPoint& cp)
{
    check_shape(ctx, cp);
    const auto& ring = ctx.base();
    auto b = pi_blocks(ctx, cp.type);
    return mat_add(ring, b.p00, mat_mul(ring, b.p01, cp.c));
}

bool chart_pi_invariant(const RingCtx& ctx, const ChartPoint& cp)
{
    check_shape(ctx, cp);
    const auto& ring = ctx.base();
    auto b = pi_blocks(ctx, cp.type);
    RMatrix lhs = mat_add(ring, b.p10, mat_mul(ring, b.p11, cp.c));
    RMatrix rhs = mat_mul(ring, cp.c, mat_add(ring, b.p00, mat_mul(ring, b.p01, cp.c)));
    return lhs == rhs;
}

ChartPoint beta_involution(const ChartPoint& cp, const BaseRing& ring)
{
    const int e = static_cast<int>(cp.c.rows());
    RMatrix t = t_matrix(e);
    return ChartPoint{cp.type, mat_neg(ring, mat_mul(ring, mat_mul(ring, t, cp.c.transposed()), t))};
}

RMatrix a_prime(const RingCtx& ctx, const ChartPoint& cp)
{
    check_shape(ctx, cp);
    const auto& ring = ctx.base();
    auto b = pi_blocks(ctx, cp.type);
    return mat_add(ring, b.p00, mat_mul(ring, b.p01, beta_involution(cp, ring).c));
}

CompanionData companion_g(const RingCtx& ctx, const ChartPoint& cp)
{
    check_shape(ctx, cp);
    if (cp.type.i < 1) throw Error(ErrorCode::BadType, "the companion form needs i >= 1");
    const auto& ring = ctx.base();
    const int i = cp.type.i, j = cp.type.j, e = i + j;
    auto c = [&](int r, int s) { return cp.c(r - 1, s - 1); };

    RMatrix m = direct_sum(jordan_block(j), jordan_block(i));
    for (int col = 0; col < e; ++col) {
        m(j - 1, col) = ring.neg(c(e - col, e));
        m(e - 1, col) = ring.neg(c(e - col, j));
    }

    // Descending sums are assembled in ascending coefficient order.
    std::vector<Code> f1(i + 1, 0), f2(j + 1, 0), h1(j, 0), h2(i, 0);
    f1[i] = 1;
    for (int l = 1; l <= i; ++l) f1[i - l] = c(l, j);
    f2[j] = 1;
    for (int k = 1; k <= j; ++k) f2[j - k] = c(k + i, e);
    for (int k = 1; k <= j; ++k) h1[j - k] = c(k + i, j);
    for (int l = 1; l <= i; ++l) h2[i - l] = c(l, e);
    UniPoly g = poly_sub(ring, poly_mul(ring, UniPoly::from_coeffs(f1), UniPoly::from_coeffs(f2)),
                         poly_mul(ring, UniPoly::from_coeffs(h1), UniPoly::from_coeffs(h2)));

    if (m != a_prime(ctx, cp)) throw std::logic_error("companion matrix differs from the complement action");
    if (charpol(ring, m) != g) throw std::logic_error("companion charpoly differs from the product formula");
    return CompanionData{std::move(m), std::move(g)};
}

bool jcj_criterion(const RingCtx& ctx, const ChartPoint& cp)
{
    check_shape(ctx, cp);
    if (!ctx.is_tame()) throw Error(ErrorCode::WildRamification, "the trace-form criterion needs p not dividing e");
    const auto& ring = ctx.base();
    RMatrix jm = j_matrix(ring, cp.type);
    return cp.c.transposed() == mat_mul(ring, mat_mul(ring, jm, cp.c), jm);
}

std::pair<std::vector<Code>, std::vector<Code>> chart_o_generators(const RingCtx& ctx, const ChartPoint& cp)
{
    check_shape(ctx, cp);
    const std::size_t e = static_cast<std::size_t>(ctx.e());
    auto idx = chart_basis_indices(ctx, cp.type);
    auto graph_vector = [&](std::size_t k) {
        std::vector<Code> v(2 * e, 0);
        v[idx[k]] = 1;
        for (std::size_t r = 0; r < e; ++r) v[idx[e + r]] = cp.c(r, k);
        return v;
    };
    // F0 positions of pi^i f1 and pi^j f2.
    return {graph_vector(static_cast<std::size_t>(cp.type.j) - 1), graph_vector(e - 1)};
}

Elem eval_at_pi(const RingCtx& ctx, const UniPoly& poly)
{
    Elem acc = ctx.zero(Level::Full);
    Elem pi = ctx.pi();
    for (int k = poly.degree(); k >= 0; --k) {
        acc = ctx.mul(acc, pi);
        acc.coeffs[0] = ctx.base().add(acc.coeffs[0], poly.coeffs[k]);
    }
    return acc;
}

}  // namespace hblm

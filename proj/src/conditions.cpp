#include "hblm/conditions.hpp"

namespace hblm {

bool is_point_of_N(const RingCtx& ctx, const Lattice& lat)
{
    return lat.is_summand_of_rank(static_cast<std::size_t>(ctx.g())) && is_O_invariant(ctx, lat);
}

namespace {

void require_point(const RingCtx& ctx, const Lattice& lat)
{
    if (!is_point_of_N(ctx, lat)) throw Error(ErrorCode::NotAPoint, "lattice is not an O-stable rank-g summand");
}

}  // namespace

bool is_isotropic(const RingCtx& ctx, const Lattice& lat)
{
    // The coordinate forms read off every monomial coefficient of x1*y2 - x2*y1.
    for (std::size_t a = 0; a < lat.num_generators(); ++a)
        for (std::size_t b = a + 1; b < lat.num_generators(); ++b) {
            Elem v = eval_alt_form(ctx, lat.canon().row(a), lat.canon().row(b));
            for (Code c : v.coeffs)
                if (c != 0) return false;
        }
    return true;
}

bool is_DP(const RingCtx& ctx, const Lattice& lat)
{
    require_point(ctx, lat);
    return orth_complement(ctx, lat, coordinate_grams(ctx)) == lat;
}

UniPoly eisenstein_charpol(const RingCtx& ctx)
{
    const auto& ring = ctx.base();
    UniPoly one_factor = UniPoly::binomial(ctx.e(), ring.neg(ctx.p_times_u()));
    return poly_pow(ring, one_factor, ctx.f());
}

KChecker::KChecker(const RingCtx& ctx) : ctx_(&ctx)
{
    const int g = ctx.g();
    std::vector<RMatrix> regular;
    for (int k = 0; k < g; ++k) {
        regular.push_back(ctx.monomial_rep(k));
        std::vector<Code> mono(g, 0);
        mono[k] = 1;
        monomial_on_m_.push_back(ctx.action_on_M(mono));
    }
    reference_ = generic_charpol(ctx.base(), regular);
    pi_reference_ = eisenstein_charpol(ctx);
}

bool KChecker::generic_matches(const std::vector<RMatrix>& family) const
{
    return generic_charpol(ctx_->base(), family) == reference_;
}

KResult KChecker::check(const Lattice& lat) const
{
    require_point(*ctx_, lat);
    std::vector<RMatrix> family;
    for (const auto& op : monomial_on_m_) family.push_back(restricted_action(*ctx_, lat, op));
    KResult res;
    res.pi_charpol = charpol(ctx_->base(), pi_action(*ctx_, lat));
    res.pi_only = res.pi_charpol == pi_reference_;
    res.generic = generic_matches(family);
    return res;
}

bool is_K(const RingCtx& ctx, const Lattice& lat) { return KChecker(ctx).check(lat).generic; }

std::optional<std::vector<Code>> find_O_generator(const RingCtx& ctx, const Lattice& lat)
{
    require_point(ctx, lat);
    const auto& ring = ctx.base();
    const int g = ctx.g();
    std::vector<RMatrix> ops;
    for (int k = 0; k < g; ++k) {
        std::vector<Code> mono(g, 0);
        mono[k] = 1;
        ops.push_back(ctx.action_on_M(mono));
    }
    // Whether v generates depends only on v modulo the maximal ideal times L
    // (Nakayama), so residue digit vectors in the canonical basis suffice.
    std::vector<Code> digits(g, 0);
    const Code p = static_cast<Code>(ctx.p());
    for (;;) {
        std::vector<Code> v(2 * g, 0);
        for (int r = 0; r < g; ++r) {
            if (digits[r] == 0) continue;
            auto row = lat.basis().row(r);
            for (int c = 0; c < 2 * g; ++c) v[c] = ring.add(v[c], ring.mul(digits[r], row[c]));
        }
        RMatrix span(g, g);
        for (int k = 0; k < g; ++k) {
            auto coords = summand_coordinates(lat, mat_apply(ring, ops[k], v));
            for (int r = 0; r < g; ++r) span(r, k) = coords[r];
        }
        if (residue_rank(ring, span) == static_cast<std::size_t>(g)) return v;
        int r = 0;
        while (r < g && ++digits[r] == p) digits[r++] = 0;
        if (r == g) break;
    }
    return std::nullopt;
}

bool is_R_point(const RingCtx& ctx, const Lattice& lat) { return find_O_generator(ctx, lat).has_value(); }

UniPoly quotient_pi_charpol(const RingCtx& ctx, const Lattice& lat)
{
    if (!lat.is_summand()) throw Error(ErrorCode::NotAPoint, "quotient charpoly needs a direct summand");
    const auto& ring = ctx.base();
    // M = L + W with W spanned by standard vectors off the chart columns.
    // pi(w) = l + w' gives the action on M/L as the W-part of pi(w).
    RMatrix comp = standard_complement(lat);
    const std::size_t q = comp.rows();
    std::vector<std::size_t> off;
    for (std::size_t k = 0; k < q; ++k)
        for (std::size_t c = 0; c < comp.cols(); ++c)
            if (comp(k, c) == 1) off.push_back(c);
    RMatrix a(q, q);
    for (std::size_t k = 0; k < q; ++k) {
        auto image = mat_apply(ring, ctx.pi_on_M(), comp.row(k));
        // Strip the L-part: subtract the combination of canonical rows
        // matching the pivot entries.
        auto coords = summand_coordinates(lat, image);
        for (std::size_t r = 0; r < coords.size(); ++r) {
            if (coords[r] == 0) continue;
            auto row = lat.basis().row(r);
            for (std::size_t c = 0; c < image.size(); ++c) image[c] = ring.sub(image[c], ring.mul(coords[r], row[c]));
        }
        for (std::size_t r = 0; r < q; ++r) a(r, k) = image[off[r]];
    }
    return charpol(ring, a);
}

}  // namespace hblm

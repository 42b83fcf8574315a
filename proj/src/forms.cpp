#include "hblm/forms.hpp"

namespace hblm {

bool GramForm::well_formed(const BaseRing& ring) const
{
    if (gram.rows() != gram.cols()) return false;
    for (std::size_t r = 0; r < gram.rows(); ++r)
        for (std::size_t c = 0; c < gram.cols(); ++c) {
            Code want = kind == Kind::Symmetric ? gram(c, r) : ring.neg(gram(c, r));
            if (gram(r, c) != want) return false;
        }
    if (kind == Kind::Alternating)
        for (std::size_t r = 0; r < gram.rows(); ++r)
            if (gram(r, r) != 0) return false;
    return true;
}

bool GramForm::is_perfect(const BaseRing& ring) const { return ring.is_unit(determinant(ring, gram)); }

Elem eval_alt_form(const RingCtx& ctx, std::span<const Code> x, std::span<const Code> y)
{
    const std::size_t g = static_cast<std::size_t>(ctx.g());
    if (x.size() != 2 * g || y.size() != 2 * g) throw Error(ErrorCode::DimensionMismatch, "vectors of M have 2g coordinates");
    std::vector<Code> a(g), b(g);
    ctx.mul_into(x.subspan(0, g), y.subspan(g, g), a);
    ctx.mul_into(x.subspan(g, g), y.subspan(0, g), b);
    Elem out = ctx.zero(Level::Full);
    for (std::size_t k = 0; k < g; ++k) out.coeffs[k] = ctx.base().sub(a[k], b[k]);
    return out;
}

std::vector<GramForm> coordinate_grams(const RingCtx& ctx)
{
    const int g = ctx.g();
    const auto& ring = ctx.base();
    std::vector<GramForm> out(g, GramForm{RMatrix(2 * g, 2 * g), GramForm::Kind::Alternating});
    for (int k = 0; k < g; ++k)
        for (int l = 0; l < g; ++l) {
            auto prod = ctx.basis_product(k, l);
            for (int c = 0; c < g; ++c) {
                out[c].gram(k, g + l) = prod[c];
                out[c].gram(g + l, k) = ring.neg(prod[c]);
            }
        }
    return out;
}

GramForm trace_form_gram(const RingCtx& ctx)
{
    const int g = ctx.g();
    const auto& ring = ctx.base();
    GramForm out{RMatrix(2 * g, 2 * g), GramForm::Kind::Alternating};
    for (int k = 0; k < g; ++k)
        for (int l = 0; l < g; ++l) {
            Code h = ctx.trace_with_different(ctx.basis_product(k, l));
            out.gram(k, g + l) = h;
            out.gram(g + l, k) = ring.neg(h);
        }
    if (!out.is_perfect(ring)) throw Error(ErrorCode::WildRamification, "trace form is not perfect");
    return out;
}

GramForm beta_gram(const RingCtx& ctx)
{
    if (ctx.f() != 1) throw Error(ErrorCode::UnsupportedCombination, "the symmetric chart form needs f = 1");
    const int e = ctx.e();
    GramForm out{RMatrix(2 * e, 2 * e), GramForm::Kind::Symmetric};
    for (int a = 0; a < e; ++a) {
        int b = e - 1 - a;
        out.gram(a, e + b) = 1;
        out.gram(e + b, a) = 1;
    }
    return out;
}

Lattice orth_complement(const RingCtx& ctx, const Lattice& lat, const std::vector<GramForm>& forms)
{
    const auto& ring = ctx.base();
    const std::size_t n = static_cast<std::size_t>(2 * ctx.g());
    RMatrix cond(forms.size() * lat.num_generators(), n);
    std::size_t row = 0;
    for (const auto& form : forms)
        for (std::size_t r = 0; r < lat.num_generators(); ++r) {
            auto gw = mat_apply(ring, form.gram, lat.canon().row(r));
            std::copy(gw.begin(), gw.end(), cond.row(row++).begin());
        }
    return Lattice::from_generators(ctx, kernel(ring, cond));
}

bool is_isotropic_under(const RingCtx& ctx, const Lattice& lat, const std::vector<GramForm>& forms)
{
    const auto& ring = ctx.base();
    for (const auto& form : forms)
        for (std::size_t a = 0; a < lat.num_generators(); ++a)
            for (std::size_t b = a + 1; b < lat.num_generators(); ++b)
                if (form.eval(ring, lat.canon().row(a), lat.canon().row(b)) != 0) return false;
    // Diagonal pairs vanish for alternating forms; check them for the rest.
    for (const auto& form : forms)
        if (form.kind != GramForm::Kind::Alternating)
            for (std::size_t a = 0; a < lat.num_generators(); ++a)
                if (form.eval(ring, lat.canon().row(a), lat.canon().row(a)) != 0) return false;
    return true;
}

// ---------------------------------------------------------------- charts

std::vector<ChartType> chart_types(int e)
{
    std::vector<ChartType> out;
    for (int i = 0; 2 * i <= e; ++i) out.push_back({i, e - i});
    return out;
}

void check_chart_type(const RingCtx& ctx, ChartType type)
{
    if (ctx.f() != 1) throw Error(ErrorCode::UnsupportedCombination, "charts need a totally ramified ring (f = 1)");
    if (type.i < 0 || type.i > type.j || type.i + type.j != ctx.e())
        throw Error(ErrorCode::BadType, "type (" + std::to_string(type.i) + "," + std::to_string(type.j) + ") needs 0 <= i <= j and i + j = e");
}

std::vector<std::size_t> chart_basis_indices(const RingCtx& ctx, ChartType type)
{
    check_chart_type(ctx, type);
    const int e = ctx.e();
    std::vector<std::size_t> idx;
    for (int a = e - 1; a >= type.i; --a) idx.push_back(a);
    for (int a = e - 1; a >= type.j; --a) idx.push_back(e + a);
    for (int a = type.i - 1; a >= 0; --a) idx.push_back(a);
    for (int a = type.j - 1; a >= 0; --a) idx.push_back(e + a);
    return idx;
}

RMatrix chart_basis_matrix(const RingCtx& ctx, ChartType type)
{
    auto idx = chart_basis_indices(ctx, type);
    RMatrix b(idx.size(), idx.size());
    for (std::size_t k = 0; k < idx.size(); ++k) b(idx[k], k) = 1;
    return b;
}

RMatrix jordan_block(std::size_t n)
{
    RMatrix k(n, n);
    for (std::size_t r = 0; r + 1 < n; ++r) k(r, r + 1) = 1;
    return k;
}

RMatrix corner_block(std::size_t rows, std::size_t cols)
{
    RMatrix b(rows, cols);
    if (rows > 0 && cols > 0) b(rows - 1, 0) = 1;
    return b;
}

namespace {

void place(RMatrix& dst, const RMatrix& src, std::size_t r0, std::size_t c0, const BaseRing& ring, Code scale = 1)
{
    for (std::size_t r = 0; r < src.rows(); ++r)
        for (std::size_t c = 0; c < src.cols(); ++c)
            dst(r0 + r, c0 + c) = ring.add(dst(r0 + r, c0 + c), ring.mul(src(r, c), scale));
}

}  // namespace

RMatrix pi_matrix(const RingCtx& ctx, ChartType type)
{
    check_chart_type(ctx, type);
    const auto& ring = ctx.base();
    const std::size_t i = type.i, j = type.j, e = i + j;
    const Code pu = ctx.p_times_u();
    // Block offsets in the order F0f1 (j), F0f2 (i), F1f1 (i), F1f2 (j).
    const std::size_t o1 = 0, o2 = j, o3 = e, o4 = e + i;
    RMatrix p(2 * e, 2 * e);
    place(p, jordan_block(j), o1, o1, ring);
    place(p, jordan_block(i), o2, o2, ring);
    place(p, jordan_block(i), o3, o3, ring);
    place(p, jordan_block(j), o4, o4, ring);
    place(p, corner_block(j, i), o1, o3, ring);
    place(p, corner_block(i, j), o2, o4, ring);
    place(p, corner_block(i, j), o3, o1, ring, pu);
    place(p, corner_block(j, i), o4, o2, ring, pu);
    if (i == 0) {
        // pi^e f1 = pu f1 and pi^e f2 = pu f2 wrap around inside the
        // F0f1 and F1f2 chains, which are then the whole of each copy of O.
        p(o1 + j - 1, o1) = ring.add(p(o1 + j - 1, o1), pu);
        p(o4 + j - 1, o4) = ring.add(p(o4 + j - 1, o4), pu);
    }
    return p;
}

RMatrix t_matrix(int e)
{
    RMatrix t(e, e);
    for (int r = 0; r < e; ++r) t(r, e - 1 - r) = 1;
    return t;
}

RMatrix j_matrix(const BaseRing& ring, ChartType type)
{
    const int e = type.i + type.j;
    RMatrix jm(e, e);
    for (int r = 0; r < e; ++r) jm(r, e - 1 - r) = r < type.j ? 1 : ring.neg(1);
    return jm;
}

GramForm beta_gram_chart(int e)
{
    GramForm out{RMatrix(2 * e, 2 * e), GramForm::Kind::Symmetric};
    RMatrix t = t_matrix(e);
    for (int r = 0; r < e; ++r)
        for (int c = 0; c < e; ++c) {
            out.gram(r, e + c) = t(r, c);
            out.gram(e + r, c) = t(r, c);
        }
    return out;
}

GramForm trace_gram_chart(const BaseRing& ring, ChartType type)
{
    const int e = type.i + type.j;
    GramForm out{RMatrix(2 * e, 2 * e), GramForm::Kind::Alternating};
    RMatrix jm = j_matrix(ring, type);
    for (int r = 0; r < e; ++r)
        for (int c = 0; c < e; ++c) {
            out.gram(r, e + c) = jm(r, c);
            out.gram(e + c, r) = ring.neg(jm(r, c));
        }
    return out;
}

GramForm change_basis(const BaseRing& ring, const GramForm& form, const RMatrix& basis)
{
    return GramForm{mat_mul(ring, mat_mul(ring, basis.transposed(), form.gram), basis), form.kind};
}

}  // namespace hblm

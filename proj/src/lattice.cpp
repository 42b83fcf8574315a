#include "hblm/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace hblm {

Lattice Lattice::from_rows(const RingCtx& ctx, const RMatrix& rows)
{
    if (rows.cols() != static_cast<std::size_t>(2 * ctx.g()))
        throw Error(ErrorCode::DimensionMismatch, "lattice generators must have 2g coordinates");
    Lattice out;
    out.form_ = howell_form(ctx.base(), rows);
    out.find_graph_basis(ctx.base());
    return out;
}

void Lattice::find_graph_basis(const BaseRing& ring)
{
    // Greedy unit elimination over the canonical rows. The rows picked up
    // span a free summand F of L; L is itself that summand exactly when the
    // sizes agree, and |L| is read off the Howell pivots.
    const std::size_t n = form_.rows.cols();
    std::vector<std::vector<Code>> rows;
    for (std::size_t r = 0; r < form_.rows.rows(); ++r) rows.emplace_back(form_.rows.row(r).begin(), form_.rows.row(r).end());
    std::vector<std::vector<Code>> picked;
    std::vector<std::size_t> cols;
    for (std::size_t c = 0; c < n; ++c) {
        auto it = std::find_if(rows.begin(), rows.end(), [&](const auto& v) { return ring.is_unit(v[c]); });
        if (it == rows.end()) continue;
        std::vector<Code> piv = std::move(*it);
        rows.erase(it);
        Code inv = ring.inverse(piv[c]);
        for (auto& x : piv) x = ring.mul(x, inv);
        auto eliminate = [&](std::vector<Code>& v) {
            Code q = ring.neg(v[c]);
            if (q == 0) return;
            for (std::size_t k = 0; k < n; ++k) v[k] = ring.add(v[k], ring.mul(q, piv[k]));
        };
        for (auto& v : rows) eliminate(v);
        for (auto& v : picked) eliminate(v);
        picked.push_back(std::move(piv));
        cols.push_back(c);
    }
    long long log_size = 0;
    for (int a : form_.pivot_vals) log_size += ring.length() - a;
    summand_ = log_size == static_cast<long long>(picked.size()) * ring.length();
    if (!summand_) return;
    basis_ = RMatrix(picked.size(), n);
    for (std::size_t r = 0; r < picked.size(); ++r) std::copy(picked[r].begin(), picked[r].end(), basis_.row(r).begin());
    chart_cols_ = std::move(cols);
}

Lattice Lattice::from_generators(const RingCtx& ctx, const RMatrix& gens)
{
    return from_rows(ctx, gens.transposed());
}

std::string Lattice::key() const
{
    std::ostringstream os;
    for (std::size_t r = 0; r < form_.rows.rows(); ++r) {
        if (r) os << ';';
        auto row = form_.rows.row(r);
        for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << row[c];
    }
    return os.str();
}

bool Lattice::contains(const BaseRing& ring, std::span<const Code> v_in) const
{
    std::vector<Code> v(v_in.begin(), v_in.end());
    for (std::size_t i = 0; i < form_.rows.rows(); ++i) {
        std::size_t c = form_.pivot_cols[i];
        for (std::size_t k = 0; k < c; ++k)
            if (v[k] != 0) return false;
        if (v[c] == 0) continue;
        int a = form_.pivot_vals[i];
        if (ring.valuation(v[c]) < a) return false;
        Code q = ring.neg(ring.shift_down(v[c], a));
        auto row = form_.rows.row(i);
        for (std::size_t k = c; k < v.size(); ++k) v[k] = ring.add(v[k], ring.mul(q, row[k]));
    }
    return std::all_of(v.begin(), v.end(), [](Code x) { return x == 0; });
}

bool Lattice::contains(const BaseRing& ring, const Lattice& other) const
{
    for (std::size_t r = 0; r < other.form_.rows.rows(); ++r)
        if (!contains(ring, other.form_.rows.row(r))) return false;
    return true;
}

bool is_O_invariant(const RingCtx& ctx, const Lattice& lat)
{
    const auto& ring = ctx.base();
    for (const RMatrix* op : ctx.algebra_generators_on_M())
        for (std::size_t r = 0; r < lat.num_generators(); ++r)
            if (!lat.contains(ring, mat_apply(ring, *op, lat.canon().row(r)))) return false;
    return true;
}

std::vector<Code> summand_coordinates(const Lattice& lat, std::span<const Code> v)
{
    std::vector<Code> out(lat.basis().rows());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = v[lat.chart_cols()[i]];
    return out;
}

RMatrix restricted_action(const RingCtx& ctx, const Lattice& lat, const RMatrix& op)
{
    const auto& ring = ctx.base();
    if (lat.is_summand()) {
        // The summand basis restricts to the identity on the chart columns,
        // so the coordinates of an element of L are its chart entries.
        const std::size_t r = lat.basis().rows();
        RMatrix a(r, r);
        for (std::size_t k = 0; k < r; ++k) {
            auto image = mat_apply(ring, op, lat.basis().row(k));
            if (!lat.contains(ring, image)) throw Error(ErrorCode::NotInvariant, "operator does not preserve the lattice");
            auto coords = summand_coordinates(lat, image);
            for (std::size_t i = 0; i < r; ++i) a(i, k) = coords[i];
        }
        return a;
    }
    RMatrix g = lat.generator_matrix();
    auto sol = solve_matrix(ring, g, mat_mul(ring, op, g));
    if (!sol) throw Error(ErrorCode::NotInvariant, "operator does not preserve the lattice");
    return *sol;
}

RMatrix pi_action(const RingCtx& ctx, const Lattice& lat) { return restricted_action(ctx, lat, ctx.pi_on_M()); }

RMatrix standard_complement(const Lattice& lat)
{
    const std::size_t n = lat.ambient_dim();
    std::vector<std::size_t> off;
    for (std::size_t c = 0; c < n; ++c)
        if (std::find(lat.chart_cols().begin(), lat.chart_cols().end(), c) == lat.chart_cols().end()) off.push_back(c);
    RMatrix out(off.size(), n);
    for (std::size_t i = 0; i < off.size(); ++i) out(i, off[i]) = 1;
    return out;
}

std::vector<std::size_t> pi_power_ranks(const RingCtx& ctx, const Lattice& lat)
{
    if (!ctx.base_is_field()) throw Error(ErrorCode::UnsupportedCombination, "pi-power ranks need a field base");
    std::vector<std::size_t> ranks;
    Lattice cur = lat;
    for (int k = 0; k <= ctx.e(); ++k) {
        ranks.push_back(cur.num_generators());
        cur = pi_multiple(ctx, cur);
    }
    return ranks;
}

ReductionType reduction_type(const RingCtx& ctx, const Lattice& lat)
{
    if (!ctx.base_is_field()) throw Error(ErrorCode::UnsupportedCombination, "reduction types are defined over a field base");
    if (!lat.is_summand_of_rank(static_cast<std::size_t>(ctx.g())) || !is_O_invariant(ctx, lat))
        throw Error(ErrorCode::NotAPoint, "lattice is not a point of N");
    const int e = ctx.e(), f = ctx.f();
    auto ranks = pi_power_ranks(ctx, lat);
    // Over F_q[pi]/(pi^e) a module sum of cyclic parts of lengths l_i has
    // dim pi^k L = f * sum max(l_i - k, 0); parts longer than k number
    // (ranks[k] - ranks[k+1]) / f.
    std::vector<int> lengths;
    for (int k = 0; k < e; ++k) {
        std::size_t longer = (ranks[k] - ranks[k + 1]) / static_cast<std::size_t>(f);
        std::size_t longer_next = k + 1 < e ? (ranks[k + 1] - ranks[k + 2]) / static_cast<std::size_t>(f) : 0;
        for (std::size_t n = longer_next; n < longer; ++n) lengths.push_back(k + 1);
    }
    if (lengths.size() > 2) throw Error(ErrorCode::NotAPoint, "reduction has more than two cyclic parts");
    while (lengths.size() < 2) lengths.push_back(0);
    std::sort(lengths.begin(), lengths.end());
    ReductionType t;
    t.e = e;
    t.parts.assign(static_cast<std::size_t>(f), {lengths[0], lengths[1]});
    return t;
}

Lattice o_span(const RingCtx& ctx, const RMatrix& rows)
{
    const auto& ring = ctx.base();
    const int g = ctx.g();
    std::vector<RMatrix> reps;
    for (int k = 0; k < g; ++k) {
        std::vector<Code> mono(g, 0);
        mono[k] = 1;
        reps.push_back(ctx.action_on_M(mono));
    }
    RMatrix all(rows.rows() * g, rows.cols());
    for (std::size_t r = 0; r < rows.rows(); ++r)
        for (int k = 0; k < g; ++k) {
            auto v = mat_apply(ring, reps[k], rows.row(r));
            std::copy(v.begin(), v.end(), all.row(r * g + k).begin());
        }
    return Lattice::from_rows(ctx, all);
}

Lattice full_module(const RingCtx& ctx)
{
    return Lattice::from_rows(ctx, RMatrix::identity(static_cast<std::size_t>(2 * ctx.g())));
}

Lattice pi_multiple(const RingCtx& ctx, const Lattice& lat)
{
    const auto& ring = ctx.base();
    RMatrix rows(lat.num_generators(), lat.ambient_dim());
    for (std::size_t r = 0; r < lat.num_generators(); ++r) {
        auto v = mat_apply(ring, ctx.pi_on_M(), lat.canon().row(r));
        std::copy(v.begin(), v.end(), rows.row(r).begin());
    }
    return Lattice::from_rows(ctx, rows);
}

}  // namespace hblm

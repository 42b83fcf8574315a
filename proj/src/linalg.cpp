#include "hblm/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace hblm {

RMatrix mat_mul(const BaseRing& ring, const RMatrix& a, const RMatrix& b)
{
    if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "mat_mul shape mismatch");
    RMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            Code x = a(r, k);
            if (x == 0) continue;
            for (std::size_t c = 0; c < b.cols(); ++c)
                if (b(k, c) != 0) out(r, c) = ring.add(out(r, c), ring.mul(x, b(k, c)));
        }
    return out;
}

RMatrix mat_add(const BaseRing& ring, const RMatrix& a, const RMatrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorCode::DimensionMismatch, "mat_add shape mismatch");
    RMatrix out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = ring.add(a(r, c), b(r, c));
    return out;
}

RMatrix mat_sub(const BaseRing& ring, const RMatrix& a, const RMatrix& b)
{
    return mat_add(ring, a, mat_neg(ring, b));
}

RMatrix mat_scale(const BaseRing& ring, const RMatrix& a, Code c)
{
    RMatrix out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t k = 0; k < a.cols(); ++k) out(r, k) = ring.mul(a(r, k), c);
    return out;
}

RMatrix mat_neg(const BaseRing& ring, const RMatrix& a)
{
    RMatrix out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t k = 0; k < a.cols(); ++k) out(r, k) = ring.neg(a(r, k));
    return out;
}

std::vector<Code> mat_apply(const BaseRing& ring, const RMatrix& a, std::span<const Code> v)
{
    if (v.size() != a.cols()) throw Error(ErrorCode::DimensionMismatch, "mat_apply shape mismatch");
    std::vector<Code> out(a.rows(), 0);
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (a(r, c) != 0 && v[c] != 0) out[r] = ring.add(out[r], ring.mul(a(r, c), v[c]));
    return out;
}

Code bilinear(const BaseRing& ring, const RMatrix& a, std::span<const Code> x, std::span<const Code> y)
{
    auto ay = mat_apply(ring, a, y);
    Code s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s = ring.add(s, ring.mul(x[i], ay[i]));
    return s;
}

RMatrix residue(const BaseRing& ring, const RMatrix& a)
{
    RMatrix out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = ring.residue(a(r, c));
    return out;
}

RMatrix direct_sum(const RMatrix& a, const RMatrix& b)
{
    RMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) out(a.rows() + r, a.cols() + c) = b(r, c);
    return out;
}

// ---------------------------------------------------------------- Smith form

std::size_t SmithForm::rank() const
{
    std::size_t n = 0;
    for (std::size_t i = 0; i < profile.size(); ++i)
        if (d(i, i) != 0) ++n;
    return n;
}

namespace {

// row_i += q * row_k
void row_axpy(const BaseRing& ring, RMatrix& m, std::size_t i, std::size_t k, Code q)
{
    if (q == 0) return;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (m(k, c) != 0) m(i, c) = ring.add(m(i, c), ring.mul(q, m(k, c)));
}

// col_i += q * col_k
void col_axpy(const BaseRing& ring, RMatrix& m, std::size_t i, std::size_t k, Code q)
{
    if (q == 0) return;
    for (std::size_t r = 0; r < m.rows(); ++r)
        if (m(r, k) != 0) m(r, i) = ring.add(m(r, i), ring.mul(q, m(r, k)));
}

void row_swap(RMatrix& m, std::size_t i, std::size_t k)
{
    if (i == k) return;
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(i, c), m(k, c));
}

void col_swap(RMatrix& m, std::size_t i, std::size_t k)
{
    if (i == k) return;
    for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, i), m(r, k));
}

void row_scale(const BaseRing& ring, RMatrix& m, std::size_t i, Code s)
{
    for (std::size_t c = 0; c < m.cols(); ++c) m(i, c) = ring.mul(m(i, c), s);
}

void col_scale(const BaseRing& ring, RMatrix& m, std::size_t i, Code s)
{
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, i) = ring.mul(m(r, i), s);
}

}  // namespace

SmithForm chain_echelon(const BaseRing& ring, const RMatrix& a)
{
    const std::size_t m = a.rows(), n = a.cols();
    const int len = ring.length();
    // Invariant: row_ops * a * col_ops = d, with inverses kept alongside.
    RMatrix d = a;
    RMatrix row_ops = RMatrix::identity(m), row_inv = RMatrix::identity(m);
    RMatrix col_ops = RMatrix::identity(n), col_inv = RMatrix::identity(n);
    std::vector<std::size_t> row_orig(m), col_orig(n);
    std::iota(row_orig.begin(), row_orig.end(), 0);
    std::iota(col_orig.begin(), col_orig.end(), 0);

    SmithForm out;
    const std::size_t steps = std::min(m, n);
    for (std::size_t s = 0; s < steps; ++s) {
        int best = len;
        std::size_t br = 0, bc = 0;
        for (std::size_t r = s; r < m && best > 0; ++r)
            for (std::size_t c = s; c < n; ++c) {
                int v = ring.valuation(d(r, c));
                if (v < best) {
                    best = v;
                    br = r;
                    bc = c;
                    if (v == 0) break;
                }
            }
        if (best == len) {
            for (std::size_t k = s; k < steps; ++k) out.profile.push_back(len);
            break;
        }
        out.pivots.emplace_back(row_orig[br], col_orig[bc]);

        row_swap(d, s, br);
        row_swap(row_ops, s, br);
        col_swap(row_inv, s, br);
        std::swap(row_orig[s], row_orig[br]);
        col_swap(d, s, bc);
        col_swap(col_ops, s, bc);
        row_swap(col_inv, s, bc);
        std::swap(col_orig[s], col_orig[bc]);

        Code unit = ring.shift_down(d(s, s), best);
        if (unit != 1) {
            Code inv = ring.inverse(unit);
            row_scale(ring, d, s, inv);
            row_scale(ring, row_ops, s, inv);
            col_scale(ring, row_inv, s, unit);
        }
        for (std::size_t r = s + 1; r < m; ++r) {
            if (d(r, s) == 0) continue;
            Code q = ring.shift_down(d(r, s), best);
            row_axpy(ring, d, r, s, ring.neg(q));
            row_axpy(ring, row_ops, r, s, ring.neg(q));
            col_axpy(ring, row_inv, s, r, q);
        }
        for (std::size_t c = s + 1; c < n; ++c) {
            if (d(s, c) == 0) continue;
            Code q = ring.shift_down(d(s, c), best);
            col_axpy(ring, d, c, s, ring.neg(q));
            col_axpy(ring, col_ops, c, s, ring.neg(q));
            row_axpy(ring, col_inv, s, c, q);
        }
        out.profile.push_back(best);
    }

    out.d = std::move(d);
    out.u = std::move(row_inv);
    out.u_inv = std::move(row_ops);
    out.v = std::move(col_inv);
    out.v_inv = std::move(col_ops);
    return out;
}

// ---------------------------------------------------------------- Howell form

HowellForm howell_form(const BaseRing& ring, const RMatrix& generators)
{
    const std::size_t n = generators.cols();
    const int len = ring.length();
    std::vector<std::vector<Code>> pool;
    for (std::size_t r = 0; r < generators.rows(); ++r) {
        auto row = generators.row(r);
        if (std::any_of(row.begin(), row.end(), [](Code c) { return c != 0; })) pool.emplace_back(row.begin(), row.end());
    }
    auto is_zero = [](const std::vector<Code>& v) { return std::all_of(v.begin(), v.end(), [](Code c) { return c == 0; }); };

    HowellForm out;
    std::vector<std::vector<Code>> rows;
    for (std::size_t c = 0; c < n && !pool.empty(); ++c) {
        int best = len;
        std::size_t bi = 0;
        for (std::size_t i = 0; i < pool.size(); ++i) {
            int v = ring.valuation(pool[i][c]);
            if (v < best) {
                best = v;
                bi = i;
            }
        }
        if (best == len) continue;
        std::vector<Code> piv = std::move(pool[bi]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(bi));
        Code unit = ring.shift_down(piv[c], best);
        if (unit != 1) {
            Code inv = ring.inverse(unit);
            for (auto& x : piv) x = ring.mul(x, inv);
        }
        for (auto& row : pool) {
            if (row[c] == 0) continue;
            Code q = ring.neg(ring.shift_down(row[c], best));
            for (std::size_t k = c; k < n; ++k) row[k] = ring.add(row[k], ring.mul(q, piv[k]));
        }
        if (best > 0) {
            Code t = ring.uniformizer_pow(len - best);
            std::vector<Code> ann(n);
            for (std::size_t k = 0; k < n; ++k) ann[k] = ring.mul(t, piv[k]);
            pool.push_back(std::move(ann));
        }
        std::erase_if(pool, is_zero);
        rows.push_back(std::move(piv));
        out.pivot_cols.push_back(c);
        out.pivot_vals.push_back(best);
    }

    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::size_t c = out.pivot_cols[i];
        int a = out.pivot_vals[i];
        for (std::size_t k = 0; k < i; ++k) {
            Code x = rows[k][c];
            Code high = ring.sub(x, ring.truncate(x, a));
            if (high == 0) continue;
            Code q = ring.neg(ring.shift_down(high, a));
            for (std::size_t j = c; j < n; ++j) rows[k][j] = ring.add(rows[k][j], ring.mul(q, rows[i][j]));
        }
    }

    out.rows = RMatrix(rows.size(), n);
    for (std::size_t i = 0; i < rows.size(); ++i) std::copy(rows[i].begin(), rows[i].end(), out.rows.row(i).begin());
    return out;
}

// ---------------------------------------------------------------- solving

RMatrix kernel(const BaseRing& ring, const RMatrix& a)
{
    const std::size_t n = a.cols();
    const int len = ring.length();
    SmithForm sf = chain_echelon(ring, a);
    // a v = 0  <=>  d (v_mat v) = 0 with v_mat = sf.v; w = v_mat v.
    std::vector<std::vector<Code>> cols;
    for (std::size_t i = 0; i < n; ++i) {
        int prof = i < sf.profile.size() ? sf.profile[i] : len;
        if (i >= std::min(a.rows(), n)) prof = len;
        if (prof == 0) continue;
        Code scale = prof >= len ? 1 : ring.uniformizer_pow(len - prof);
        std::vector<Code> v(n);
        for (std::size_t r = 0; r < n; ++r) v[r] = ring.mul(sf.v_inv(r, i), scale);
        cols.push_back(std::move(v));
    }
    RMatrix out(n, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < n; ++r) out(r, c) = cols[c][r];
    return out;
}

std::optional<std::vector<Code>> solve(const BaseRing& ring, const RMatrix& a, std::span<const Code> b)
{
    if (b.size() != a.rows()) throw Error(ErrorCode::DimensionMismatch, "solve shape mismatch");
    SmithForm sf = chain_echelon(ring, a);
    const int len = ring.length();
    auto c = mat_apply(ring, sf.u_inv, b);
    const std::size_t diag = std::min(a.rows(), a.cols());
    std::vector<Code> y(a.cols(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        int prof = i < diag && i < sf.profile.size() ? sf.profile[i] : len;
        if (prof >= len) {
            if (c[i] != 0) return std::nullopt;
            continue;
        }
        if (ring.valuation(c[i]) < prof) return std::nullopt;
        y[i] = ring.shift_down(c[i], prof);
    }
    return mat_apply(ring, sf.v_inv, y);
}

std::optional<RMatrix> solve_matrix(const BaseRing& ring, const RMatrix& a, const RMatrix& b)
{
    if (b.rows() != a.rows()) throw Error(ErrorCode::DimensionMismatch, "solve_matrix shape mismatch");
    SmithForm sf = chain_echelon(ring, a);
    const int len = ring.length();
    const std::size_t diag = std::min(a.rows(), a.cols());
    RMatrix c = mat_mul(ring, sf.u_inv, b);
    RMatrix y(a.cols(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        int prof = i < diag && i < sf.profile.size() ? sf.profile[i] : len;
        for (std::size_t k = 0; k < b.cols(); ++k) {
            if (prof >= len) {
                if (c(i, k) != 0) return std::nullopt;
                continue;
            }
            if (ring.valuation(c(i, k)) < prof) return std::nullopt;
            y(i, k) = ring.shift_down(c(i, k), prof);
        }
    }
    return mat_mul(ring, sf.v_inv, y);
}

std::optional<RMatrix> inverse(const BaseRing& ring, const RMatrix& a)
{
    if (a.rows() != a.cols()) return std::nullopt;
    SmithForm sf = chain_echelon(ring, a);
    if (sf.profile.size() != a.rows()) return std::nullopt;
    for (int p : sf.profile)
        if (p != 0) return std::nullopt;
    return mat_mul(ring, sf.v_inv, sf.u_inv);
}

std::size_t residue_rank(const BaseRing& ring, const RMatrix& a)
{
    SmithForm sf = chain_echelon(ring, a);
    return static_cast<std::size_t>(std::count(sf.profile.begin(), sf.profile.end(), 0));
}

// ---------------------------------------------------------------- charpolys

UniPoly charpol(const BaseRing& ring, const RMatrix& a)
{
    if (a.rows() != a.cols()) throw Error(ErrorCode::DimensionMismatch, "charpol needs a square matrix");
    return UniPoly::from_coeffs(berkowitz<Code>(ring, a.rows(), a.data(), Code{0}, Code{1}));
}

Code determinant(const BaseRing& ring, const RMatrix& a)
{
    UniPoly cp = charpol(ring, a);
    Code c0 = cp.coeff(0);
    return a.rows() % 2 == 0 ? c0 : ring.neg(c0);
}

RMatrix eval_poly_at_matrix(const BaseRing& ring, const UniPoly& poly, const RMatrix& a)
{
    RMatrix acc(a.rows(), a.cols());
    for (int k = poly.degree(); k >= 0; --k) {
        acc = mat_mul(ring, acc, a);
        for (std::size_t i = 0; i < a.rows(); ++i) acc(i, i) = ring.add(acc(i, i), poly.coeffs[k]);
    }
    return acc;
}

MultiPoly generic_charpol(const BaseRing& ring, const std::vector<RMatrix>& family)
{
    const int nfam = static_cast<int>(family.size());
    if (family.empty()) throw Error(ErrorCode::DimensionMismatch, "empty matrix family");
    const std::size_t n = family[0].rows();
    for (const auto& m : family)
        if (m.rows() != n || m.cols() != n) throw Error(ErrorCode::DimensionMismatch, "family shapes differ");
    for (int i = 0; i < nfam; ++i)
        for (int j = i + 1; j < nfam; ++j)
            if (mat_mul(ring, family[i], family[j]) != mat_mul(ring, family[j], family[i]))
                throw Error(ErrorCode::NonCommutingFamily, "matrices " + std::to_string(i) + " and " + std::to_string(j) + " do not commute");

    MultiPolyRing pr(ring, nfam + 1);
    std::vector<MultiPoly> generic(n * n, pr.zero());
    for (int k = 0; k < nfam; ++k) {
        MultiPoly t = pr.variable(k);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                if (family[k](r, c) != 0) generic[r * n + c] = pr.add(generic[r * n + c], pr.scale(t, family[k](r, c)));
    }
    auto coeffs = berkowitz<MultiPoly>(pr, n, generic, pr.zero(), pr.one());
    MultiPoly x = pr.variable(nfam);
    MultiPoly out = pr.zero();
    MultiPoly xpow = pr.one();
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        out = pr.add(out, pr.mul(coeffs[k], xpow));
        xpow = pr.mul(xpow, x);
    }
    return out;
}

}  // namespace hblm

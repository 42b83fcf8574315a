#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hblm/matrix.hpp"
#include "hblm/poly.hpp"
#include "hblm/rings.hpp"

namespace hblm {

RMatrix mat_mul(const BaseRing& ring, const RMatrix& a, const RMatrix& b);
RMatrix mat_add(const BaseRing& ring, const RMatrix& a, const RMatrix& b);
RMatrix mat_sub(const BaseRing& ring, const RMatrix& a, const RMatrix& b);
RMatrix mat_scale(const BaseRing& ring, const RMatrix& a, Code c);
RMatrix mat_neg(const BaseRing& ring, const RMatrix& a);
std::vector<Code> mat_apply(const BaseRing& ring, const RMatrix& a, std::span<const Code> v);
/// x^T * a * y.
Code bilinear(const BaseRing& ring, const RMatrix& a, std::span<const Code> x, std::span<const Code> y);
/// Entrywise reduction modulo the maximal ideal, as codes of F_p.
RMatrix residue(const BaseRing& ring, const RMatrix& a);
/// Block diagonal matrix.
RMatrix direct_sum(const RMatrix& a, const RMatrix& b);

/// Smith-like decomposition over a chain ring: a = u * d * v with u, v
/// invertible and d diagonal with entries t^profile[k] (t the uniformizer,
/// profile[k] == length() meaning the entry is zero).
struct SmithForm {
    RMatrix u;
    RMatrix d;
    RMatrix v;
    RMatrix u_inv;
    RMatrix v_inv;
    std::vector<int> profile;
    /// Original (row, col) of each chosen pivot, in elimination order.
    std::vector<std::pair<std::size_t, std::size_t>> pivots;

    /// Number of nonzero diagonal entries.
    std::size_t rank() const;
};

/// Pivots are chosen by minimal valuation, first in row-major order.
SmithForm chain_echelon(const BaseRing& ring, const RMatrix& a);

/// Canonical echelon form of the row span of `generators` (Howell form):
/// pivots are powers t^a, entries above pivots are reduced modulo the pivot
/// ideal, and each row's annihilator multiple lies in the span of later rows.
/// Two generating sets span the same submodule iff their forms are equal.
struct HowellForm {
    RMatrix rows;
    std::vector<std::size_t> pivot_cols;
    std::vector<int> pivot_vals;
};
HowellForm howell_form(const BaseRing& ring, const RMatrix& generators);

/// Columns generate {v : a v = 0}.
RMatrix kernel(const BaseRing& ring, const RMatrix& a);
std::optional<std::vector<Code>> solve(const BaseRing& ring, const RMatrix& a, std::span<const Code> b);
/// Solves a * x = b column by column.
std::optional<RMatrix> solve_matrix(const BaseRing& ring, const RMatrix& a, const RMatrix& b);
std::optional<RMatrix> inverse(const BaseRing& ring, const RMatrix& a);
/// Rank of the reduction modulo the maximal ideal.
std::size_t residue_rank(const BaseRing& ring, const RMatrix& a);

/// det(X*I - a) by Berkowitz; monic of degree rows().
UniPoly charpol(const BaseRing& ring, const RMatrix& a);
Code determinant(const BaseRing& ring, const RMatrix& a);
/// poly(a) by Horner's rule.
RMatrix eval_poly_at_matrix(const BaseRing& ring, const UniPoly& poly, const RMatrix& a);

/// Charpoly of sum_k t_k * family[k] over R[t_0..t_{g-1}], returned as one
/// MultiPoly in g + 1 variables with X the last one. Requires a pairwise
/// commuting family of equal square shape.
MultiPoly generic_charpol(const BaseRing& ring, const std::vector<RMatrix>& family);

}  // namespace hblm

#pragma once

#include <span>
#include <vector>

#include "hblm/lattice.hpp"
#include "hblm/linalg.hpp"
#include "hblm/rings.hpp"

namespace hblm {

/// R-bilinear form on R^{2g}: (x, y) -> x^T * gram * y.
struct GramForm {
    enum class Kind { Alternating, Symmetric };

    RMatrix gram;
    Kind kind = Kind::Alternating;

    Code eval(const BaseRing& ring, std::span<const Code> x, std::span<const Code> y) const
    {
        return bilinear(ring, gram, x, y);
    }
    /// Checks the symmetry flag against the matrix (zero diagonal for alternating).
    bool well_formed(const BaseRing& ring) const;
    /// Gram determinant is a unit.
    bool is_perfect(const BaseRing& ring) const;
};

/// <(x1, x2), (y1, y2)> = x1*y2 - x2*y1 with values in O_R.
Elem eval_alt_form(const RingCtx& ctx, std::span<const Code> x, std::span<const Code> y);

/// The g R-valued forms reading the monomial coefficients of eval_alt_form.
std::vector<GramForm> coordinate_grams(const RingCtx& ctx);

/// tr(d * <x, y>) in the standard basis; needs a tame ring.
GramForm trace_form_gram(const RingCtx& ctx);

/// Symmetric form: coefficient of pi^(e-1) in x1*y2 + x2*y1 (f = 1 only).
GramForm beta_gram(const RingCtx& ctx);

/// {v : form(v, w) = 0 for all w in L and every supplied form}.
Lattice orth_complement(const RingCtx& ctx, const Lattice& lat, const std::vector<GramForm>& forms);
/// form(v, w) = 0 for all pairs of canonical generators and every form.
bool is_isotropic_under(const RingCtx& ctx, const Lattice& lat, const std::vector<GramForm>& forms);

// -------------------------------------------------------- chart bases (f = 1)

/// Exponents of the chart generators pi^i f1, pi^j f2 with i <= j, i + j = e.
struct ChartType {
    int i = 0;
    int j = 0;

    friend bool operator==(const ChartType&, const ChartType&) = default;
    friend auto operator<=>(const ChartType&, const ChartType&) = default;
};

/// All types (i, e - i) with 0 <= i <= e / 2.
std::vector<ChartType> chart_types(int e);
void check_chart_type(const RingCtx& ctx, ChartType type);

/// Standard indices of the chart basis: first F0 = pi^(e-1) f1 .. pi^i f1,
/// pi^(e-1) f2 .. pi^j f2, then F1 = pi^(i-1) f1 .. f1, pi^(j-1) f2 .. f2.
std::vector<std::size_t> chart_basis_indices(const RingCtx& ctx, ChartType type);
/// Permutation matrix whose columns are the chart basis in standard coordinates.
RMatrix chart_basis_matrix(const RingCtx& ctx, ChartType type);

/// Multiplication by pi in the chart basis, assembled from Jordan blocks
/// K_j, K_i and the corner blocks B_ji, B_ij, pu*B_ij, pu*B_ji.
RMatrix pi_matrix(const RingCtx& ctx, ChartType type);
/// Nilpotent upper Jordan block of size n.
RMatrix jordan_block(std::size_t n);
/// rows x cols matrix with a single 1 in the bottom-left corner.
RMatrix corner_block(std::size_t rows, std::size_t cols);

/// e x e antidiagonal matrix of ones.
RMatrix t_matrix(int e);
/// Antidiagonal with j entries 1 followed by i entries -1.
RMatrix j_matrix(const BaseRing& ring, ChartType type);
/// (0 T; T 0).
GramForm beta_gram_chart(int e);
/// (0 J; -J^T 0).
GramForm trace_gram_chart(const BaseRing& ring, ChartType type);

/// basis^T * form * basis.
GramForm change_basis(const BaseRing& ring, const GramForm& form, const RMatrix& basis);

}  // namespace hblm

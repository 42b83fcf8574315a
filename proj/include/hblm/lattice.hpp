#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hblm/linalg.hpp"
#include "hblm/rings.hpp"

namespace hblm {

/// Elementary-divisor profile of a point over a field: per unramified factor
/// the reduction is k[pi]/(pi^e1) + k[pi]/(pi^e2) with e1 <= e2. The chart
/// exponents of the same point are (i, j) = (e - e2, e - e1).
struct ReductionType {
    int e = 1;
    std::vector<std::pair<int, int>> parts;

    std::pair<int, int> chart_type(std::size_t factor = 0) const
    {
        return {e - parts.at(factor).second, e - parts.at(factor).first};
    }
    bool satisfies_sum_rule() const
    {
        for (auto [e1, e2] : parts)
            if (e1 + e2 != e) return false;
        return true;
    }

    friend bool operator==(const ReductionType&, const ReductionType&) = default;
};

/// R-submodule of M = O_R^2 = R^{2g}, stored by the Howell form of its
/// generators. Equal spans have equal canonical rows, hence equal keys.
class Lattice {
public:
    Lattice() = default;

    /// Columns of `gens` (2g x r) generate the submodule.
    static Lattice from_generators(const RingCtx& ctx, const RMatrix& gens);
    /// Rows of `rows` (r x 2g) generate the submodule.
    static Lattice from_rows(const RingCtx& ctx, const RMatrix& rows);

    /// Canonical generators as rows.
    const RMatrix& canon() const noexcept { return form_.rows; }
    const std::vector<std::size_t>& pivot_cols() const noexcept { return form_.pivot_cols; }
    const std::vector<int>& pivot_vals() const noexcept { return form_.pivot_vals; }
    std::size_t num_generators() const noexcept { return form_.rows.rows(); }
    std::size_t ambient_dim() const noexcept { return form_.rows.cols(); }
    /// Canonical generators as columns (2g x r).
    RMatrix generator_matrix() const { return form_.rows.transposed(); }

    /// Rows joined by ';', entries by ','.
    std::string key() const;

    bool contains(const BaseRing& ring, std::span<const Code> v) const;
    bool contains(const BaseRing& ring, const Lattice& other) const;

    /// Free direct summand of rank r: residue rank r and |L| = |R|^r.
    bool is_summand_of_rank(std::size_t r) const { return summand_ && basis_.rows() == r; }
    bool is_summand() const noexcept { return summand_; }

    /// For a summand: the basis with identity on chart_cols(), the first
    /// columns (in order) on which L projects isomorphically.
    const RMatrix& basis() const noexcept { return basis_; }
    const std::vector<std::size_t>& chart_cols() const noexcept { return chart_cols_; }

    friend bool operator==(const Lattice& a, const Lattice& b) { return a.form_.rows == b.form_.rows; }
    friend auto operator<=>(const Lattice& a, const Lattice& b) { return a.form_.rows <=> b.form_.rows; }

private:
    void find_graph_basis(const BaseRing& ring);

    HowellForm form_;
    bool summand_ = false;
    RMatrix basis_;
    std::vector<std::size_t> chart_cols_;
};

bool is_O_invariant(const RingCtx& ctx, const Lattice& lat);

/// Matrix A (r x r) with op * G = G * A for the canonical generator matrix G.
/// Throws NotInvariant when op does not preserve the lattice.
RMatrix restricted_action(const RingCtx& ctx, const Lattice& lat, const RMatrix& op);
RMatrix pi_action(const RingCtx& ctx, const Lattice& lat);

/// Coordinates of v in the basis of a summand (entries at chart columns).
std::vector<Code> summand_coordinates(const Lattice& lat, std::span<const Code> v);

/// Standard basis vectors off the chart columns: a complement of a summand.
RMatrix standard_complement(const Lattice& lat);

/// R-rank of pi^k L over a field base, for k = 0..e.
std::vector<std::size_t> pi_power_ranks(const RingCtx& ctx, const Lattice& lat);
ReductionType reduction_type(const RingCtx& ctx, const Lattice& lat);

/// O_R-span of the given vectors of M (rows r x 2g).
Lattice o_span(const RingCtx& ctx, const RMatrix& rows);

/// The whole of M and t*M style helpers used in tests and checks.
Lattice full_module(const RingCtx& ctx);
Lattice pi_multiple(const RingCtx& ctx, const Lattice& lat);

}  // namespace hblm

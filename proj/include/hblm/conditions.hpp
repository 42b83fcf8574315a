#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hblm/forms.hpp"
#include "hblm/lattice.hpp"
#include "hblm/poly.hpp"

namespace hblm {

/// O-invariant free direct summand of rank g.
bool is_point_of_N(const RingCtx& ctx, const Lattice& lat);

/// L inside L-perp for the coordinate forms of the O-valued alternating form.
bool is_isotropic(const RingCtx& ctx, const Lattice& lat);
/// L equals its orthogonal complement. Throws NotAPoint off N.
bool is_DP(const RingCtx& ctx, const Lattice& lat);

/// Outcome of the determinant condition with the cheaper pi-only test kept
/// alongside so that disagreements between the two can be reported.
struct KResult {
    bool generic = false;
    bool pi_only = false;
    UniPoly pi_charpol;
};

/// Decides the determinant condition on a point by comparing the charpoly of
/// the generic element sum t_k b_k acting on L with its charpoly on O_R.
/// Holds the reference polynomials so that repeated checks are cheap.
class KChecker {
public:
    explicit KChecker(const RingCtx& ctx);

    /// Throws NotAPoint off N.
    KResult check(const Lattice& lat) const;
    /// Same for an r x r action family already restricted to a module.
    bool generic_matches(const std::vector<RMatrix>& family) const;

    const MultiPoly& reference() const noexcept { return reference_; }
    const UniPoly& pi_reference() const noexcept { return pi_reference_; }

private:
    const RingCtx* ctx_;
    std::vector<RMatrix> monomial_on_m_;
    MultiPoly reference_;
    UniPoly pi_reference_;
};

bool is_K(const RingCtx& ctx, const Lattice& lat);

/// Some v in L generates L over O_R. Throws NotAPoint off N.
bool is_R_point(const RingCtx& ctx, const Lattice& lat);
/// The generator found by the search, in canonical element order.
std::optional<std::vector<Code>> find_O_generator(const RingCtx& ctx, const Lattice& lat);

/// charpol(pi) on O_R: (X^e - p*u)^f.
UniPoly eisenstein_charpol(const RingCtx& ctx);
/// Charpoly of pi on M / L through the standard complement of a summand.
UniPoly quotient_pi_charpol(const RingCtx& ctx, const Lattice& lat);

}  // namespace hblm

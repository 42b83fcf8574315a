#pragma once

#include "hblm/conditions.hpp"
#include "hblm/forms.hpp"
#include "hblm/lattice.hpp"

namespace hblm {

/// Graph datum of a type-(i, j) chart: C (e x e) is the matrix of a map
/// h : F0 -> F1 in the chart basis, and the lattice is {x + h(x) : x in F0}.
struct ChartPoint {
    ChartType type;
    RMatrix c;

    friend bool operator==(const ChartPoint&, const ChartPoint&) = default;
};

Lattice chart_embed(const RingCtx& ctx, const ChartPoint& cp);
/// Inverse of chart_embed on lattices projecting isomorphically onto F0.
ChartPoint chart_extract(const RingCtx& ctx, const Lattice& lat, ChartType type);

/// P10 + P11*C == C*(P00 + P01*C): the graph is stable under pi.
bool chart_pi_invariant(const RingCtx& ctx, const ChartPoint& cp);
/// P00 + P01*C, the action of pi on the graph in the graph basis.
RMatrix chart_pi_action(const RingCtx& ctx, const ChartPoint& cp);

/// C' = -T * C^T * T: the chart of the complement under the symmetric form.
ChartPoint beta_involution(const ChartPoint& cp, const BaseRing& ring);
/// (K_j + K_i) + (B_ji + B_ij) * C', the action of pi on the complement.
RMatrix a_prime(const RingCtx& ctx, const ChartPoint& cp);

/// Two-block companion matrix built from the entries of C and its
/// characteristic polynomial
///   g = [X^i + sum c(l,j) X^(i-l)] [X^j + sum c(k+i,e) X^(j-k)]
///       - [sum c(k+i,j) X^(j-k)] [sum c(l,e) X^(i-l)]
/// with 1-based entries c(r, s) of C. Needs i >= 1.
struct CompanionData {
    RMatrix m;
    UniPoly g;
};
CompanionData companion_g(const RingCtx& ctx, const ChartPoint& cp);

/// C^T == J*C*J. Needs a tame ring.
bool jcj_criterion(const RingCtx& ctx, const ChartPoint& cp);

/// Generators of the graph as an O-module: the graph vectors over pi^i f1 and pi^j f2.
std::pair<std::vector<Code>, std::vector<Code>> chart_o_generators(const RingCtx& ctx, const ChartPoint& cp);
/// g evaluated at pi, as an element of O_R.
Elem eval_at_pi(const RingCtx& ctx, const UniPoly& poly);

}  // namespace hblm

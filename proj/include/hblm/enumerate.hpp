#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hblm/conditions.hpp"
#include "hblm/lattice.hpp"
#include "hblm/rings.hpp"

namespace hblm {

struct EnumConfig {
    RingSpec ring;
    std::uint64_t max_candidates = 10'000'000;
    unsigned workers = 1;
    /// Skip the per-point predicates that are not needed (all on by default).
    bool want_dp = true;
    bool want_k = true;
    bool want_r = true;
};

/// g-element subsets of {0..2g-1} in lexicographic order.
std::vector<std::vector<std::size_t>> chart_subsets(int g);

/// Number of chart matrices inspected by enum_N_points. Saturates.
std::uint64_t candidate_count(const RingCtx& ctx);

/// Every point of N(R) exactly once, sorted by canonical form. A summand is
/// produced only by the chart on which its residue reduction has its
/// reduced-echelon pivots, so no global deduplication is needed; the result is
/// still checked for duplicates. Throws BudgetExceeded above the budget.
std::vector<Lattice> enum_N_points(const RingCtx& ctx, std::uint64_t max_candidates, unsigned workers);

struct PointInfo {
    Lattice lattice;
    bool isotropic = false;
    bool dp = false;
    bool k = false;
    bool k_pi_only = false;
    bool r = false;
    std::optional<ReductionType> type;
};

struct Classification {
    std::uint64_t n = 0;
    std::uint64_t dp = 0;
    std::uint64_t k = 0;
    std::uint64_t r = 0;
    /// "(i,j)" chart type -> count, field bases only.
    std::map<std::string, std::uint64_t> type_counts;
    /// Keys of points in exactly one of N^DP and N^K.
    std::vector<std::string> dp_k_witnesses;
    /// Keys of points where the pi-only determinant test disagrees with the generic one.
    std::vector<std::string> pi_generic_disagreements;
    std::vector<PointInfo> points;
};

PointInfo classify_point(const RingCtx& ctx, const KChecker& kc, const Lattice& lat, const EnumConfig& cfg);
Classification classify(const RingCtx& ctx, const EnumConfig& cfg);

std::string type_label(const ReductionType& t);

}  // namespace hblm

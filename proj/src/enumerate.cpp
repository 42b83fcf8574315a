#include "hblm/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>
#include <thread>

namespace hblm {

std::vector<std::vector<std::size_t>> chart_subsets(int g)
{
    const std::size_t n = static_cast<std::size_t>(2 * g), k = static_cast<std::size_t>(g);
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur(k);
    for (std::size_t i = 0; i < k; ++i) cur[i] = i;
    for (;;) {
        out.push_back(cur);
        std::size_t i = k;
        while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t m = i; m < k; ++m) cur[m] = cur[m - 1] + 1;
    }
    return out;
}

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b)
{
    if (a != 0 && b > kSaturated / a) return kSaturated;
    return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > kSaturated - b ? kSaturated : a + b; }

// One free entry of the chart matrix: row r of the generator block, column c
// of M, ranging over the whole ring or only over its maximal ideal.
struct FreeSlot {
    std::size_t row;
    std::size_t col;
    bool ideal;
};

struct SparseOp {
    // For each output coordinate, the (input coordinate, coefficient) pairs.
    std::vector<std::vector<std::pair<std::size_t, Code>>> rows;
};

SparseOp sparse(const RMatrix& m)
{
    SparseOp s;
    s.rows.resize(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m(r, c) != 0) s.rows[r].emplace_back(c, m(r, c));
    return s;
}

std::vector<FreeSlot> free_slots(const std::vector<std::size_t>& subset, std::size_t n)
{
    std::vector<FreeSlot> slots;
    std::vector<bool> in_subset(n, false);
    for (auto c : subset) in_subset[c] = true;
    for (std::size_t r = 0; r < subset.size(); ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (!in_subset[c]) slots.push_back({r, c, c < subset[r]});
    return slots;
}

std::uint64_t chart_candidates(const BaseRing& ring, const std::vector<std::size_t>& subset, std::size_t n)
{
    std::uint64_t count = 1;
    for (const auto& s : free_slots(subset, n)) count = sat_mul(count, s.ideal ? ring.size() / ring.p() : ring.size());
    return count;
}

// Scans one chart and returns the generator rows of every invariant graph.
std::vector<RMatrix> scan_chart(const RingCtx& ctx, const std::vector<SparseOp>& ops, const std::vector<std::size_t>& subset)
{
    const auto& ring = ctx.base();
    const std::size_t g = subset.size(), n = 2 * g;
    const auto slots = free_slots(subset, n);
    const Code p = static_cast<Code>(ring.p());
    const Code ideal_size = ring.size() / p;

    std::vector<std::size_t> off;
    {
        std::vector<bool> in_subset(n, false);
        for (auto c : subset) in_subset[c] = true;
        for (std::size_t c = 0; c < n; ++c)
            if (!in_subset[c]) off.push_back(c);
    }

    RMatrix rows(g, n);
    for (std::size_t r = 0; r < g; ++r) rows(r, subset[r]) = 1;
    std::vector<Code> digit(slots.size(), 0);
    std::vector<Code> image(n);
    std::vector<RMatrix> found;

    auto invariant = [&]() {
        for (const auto& op : ops)
            for (std::size_t r = 0; r < g; ++r) {
                auto row = rows.row(r);
                for (std::size_t c = 0; c < n; ++c) {
                    Code s = 0;
                    for (auto [k, a] : op.rows[c])
                        if (row[k] != 0) s = ring.add(s, ring.mul(a, row[k]));
                    image[c] = s;
                }
                // image must equal sum_s image[subset[s]] * rows[s].
                for (std::size_t c : off) {
                    Code want = 0;
                    for (std::size_t s = 0; s < g; ++s) {
                        Code coeff = image[subset[s]];
                        if (coeff != 0 && rows(s, c) != 0) want = ring.add(want, ring.mul(coeff, rows(s, c)));
                    }
                    if (want != image[c]) return false;
                }
            }
        return true;
    };

    for (;;) {
        if (invariant()) found.push_back(rows);
        std::size_t k = 0;
        for (; k < slots.size(); ++k) {
            Code limit = slots[k].ideal ? ideal_size : ring.size();
            if (++digit[k] < limit) {
                rows(slots[k].row, slots[k].col) = slots[k].ideal ? digit[k] * p : digit[k];
                break;
            }
            digit[k] = 0;
            rows(slots[k].row, slots[k].col) = 0;
        }
        if (k == slots.size()) break;
    }
    return found;
}

template <class Fn>
void parallel_for(std::size_t count, unsigned workers, Fn&& fn)
{
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    auto body = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count || failed.load()) return;
            try {
                fn(i);
            } catch (...) {
                if (!failed.exchange(true)) error = std::current_exception();
                return;
            }
        }
    };
    if (workers == 1) {
        body();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(body);
        for (auto& t : pool) t.join();
    }
    if (error) std::rethrow_exception(error);
}

}  // namespace

std::uint64_t candidate_count(const RingCtx& ctx)
{
    std::uint64_t total = 0;
    const std::size_t n = static_cast<std::size_t>(2 * ctx.g());
    for (const auto& s : chart_subsets(ctx.g())) total = sat_add(total, chart_candidates(ctx.base(), s, n));
    return total;
}

std::vector<Lattice> enum_N_points(const RingCtx& ctx, std::uint64_t max_candidates, unsigned workers)
{
    if (max_candidates == 0) throw Error(ErrorCode::InvalidSpec, "budget must be positive");
    std::uint64_t need = candidate_count(ctx);
    if (need > max_candidates)
        throw Error(ErrorCode::BudgetExceeded, "enumeration needs " + (need == kSaturated ? std::string("more than 2^64") : std::to_string(need)) +
                                                   " chart candidates, budget is " + std::to_string(max_candidates) +
                                                   "; raise --budget or choose a smaller ring");
    std::vector<SparseOp> ops;
    for (const RMatrix* op : ctx.algebra_generators_on_M()) ops.push_back(sparse(*op));

    const auto subsets = chart_subsets(ctx.g());
    std::vector<std::vector<Lattice>> per_chart(subsets.size());
    parallel_for(subsets.size(), workers, [&](std::size_t i) {
        for (const auto& rows : scan_chart(ctx, ops, subsets[i])) per_chart[i].push_back(Lattice::from_rows(ctx, rows));
    });

    std::vector<Lattice> out;
    for (auto& v : per_chart)
        for (auto& l : v) out.push_back(std::move(l));
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end())
        throw std::logic_error("chart attribution produced a duplicate point");
    return out;
}

std::string type_label(const ReductionType& t)
{
    auto [i, j] = t.chart_type();
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

PointInfo classify_point(const RingCtx& ctx, const KChecker& kc, const Lattice& lat, const EnumConfig& cfg)
{
    PointInfo info;
    info.lattice = lat;
    info.isotropic = is_isotropic(ctx, lat);
    if (cfg.want_dp) info.dp = is_DP(ctx, lat);
    if (cfg.want_k) {
        KResult kr = kc.check(lat);
        info.k = kr.generic;
        info.k_pi_only = kr.pi_only;
    }
    if (cfg.want_r) info.r = is_R_point(ctx, lat);
    if (ctx.base_is_field()) info.type = reduction_type(ctx, lat);
    return info;
}

Classification classify(const RingCtx& ctx, const EnumConfig& cfg)
{
    auto points = enum_N_points(ctx, cfg.max_candidates, cfg.workers);
    KChecker kc(ctx);
    Classification out;
    out.points.resize(points.size());
    parallel_for(points.size(), cfg.workers, [&](std::size_t i) { out.points[i] = classify_point(ctx, kc, points[i], cfg); });
    out.n = points.size();
    for (const auto& pt : out.points) {
        out.dp += pt.dp;
        out.k += pt.k;
        out.r += pt.r;
        if (pt.type) ++out.type_counts[type_label(*pt.type)];
        if (cfg.want_dp && cfg.want_k && pt.dp != pt.k) out.dp_k_witnesses.push_back(pt.lattice.key());
        if (cfg.want_k && pt.k != pt.k_pi_only) out.pi_generic_disagreements.push_back(pt.lattice.key());
    }
    return out;
}

}  // namespace hblm

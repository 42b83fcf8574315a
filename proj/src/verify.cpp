#include "hblm/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <limits>
#include <stdexcept>

#include "hblm/chart.hpp"
#include "hblm/enumerate.hpp"

namespace hblm {

std::string_view to_string(CheckStatus s)
{
    switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
    }
    return "unknown";
}

const std::vector<std::string>& all_checks()
{
    static const std::vector<std::string> names = {
        "dp_equals_k",   "beta_duality",          "trace_form_duality", "unramified_collapse", "rapoport_strict",
        "nonisotropic_deformation", "isotropic_lift", "type_criterion", "charpol_square",
    };
    return names;
}

bool is_known_check(const std::string& name)
{
    const auto& names = all_checks();
    return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<RingSpec> default_grid()
{
    std::vector<RingSpec> grid;
    for (int p : {2, 3, 5})
        for (int e : {1, 2, 3}) grid.push_back(RingSpec{p, 1, 1, false, e, 1, {}});
    grid.push_back(RingSpec{2, 1, 2, false, 1, 1, {}});
    grid.push_back(RingSpec{2, 1, 1, true, 2, 1, {}});
    grid.push_back(RingSpec{3, 1, 1, true, 2, 1, {}});
    grid.push_back(RingSpec{2, 1, 1, true, 3, 1, {}});
    grid.push_back(RingSpec{2, 2, 1, false, 2, 1, {}});
    grid.push_back(RingSpec{3, 2, 1, false, 2, 1, {}});
    return grid;
}

bool all_passed(const std::vector<VerificationReport>& reports)
{
    return std::none_of(reports.begin(), reports.end(), [](const auto& r) { return r.status == CheckStatus::Fail; });
}

namespace {

void skip(VerificationReport& rep, const std::string& reason)
{
    rep.status = CheckStatus::Skipped;
    rep.notes.push_back("skipped: " + reason);
}

void fail_unless(VerificationReport& rep, bool ok, const std::string& witness)
{
    if (ok) return;
    rep.status = CheckStatus::Fail;
    rep.witnesses.push_back(witness);
}

Counts counts_of(const Classification& cl) { return Counts{cl.n, cl.dp, cl.k, cl.r}; }

std::string format_matrix(const BaseRing& ring, const RMatrix& m)
{
    std::string out = "[";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r) out += "; ";
        for (std::size_t c = 0; c < m.cols(); ++c) out += (c ? ", " : "") + ring.format(m(r, c));
    }
    return out + "]";
}

std::string chart_witness(const BaseRing& ring, const ChartPoint& cp, const std::string& what)
{
    return "type (" + std::to_string(cp.type.i) + "," + std::to_string(cp.type.j) + ") C=" + format_matrix(ring, cp.c) + ": " + what;
}

std::string lattice_witness(const Lattice& lat, const std::string& what) { return lat.key() + ": " + what; }

EnumConfig enum_config(const RingSpec& spec, const CheckOptions& opts)
{
    EnumConfig cfg;
    cfg.ring = spec;
    cfg.max_candidates = opts.budget;
    cfg.workers = opts.workers;
    return cfg;
}

/// Calls fn for every pi-invariant chart point of every type.
void for_each_invariant_chart(const RingCtx& ctx, std::uint64_t budget, const std::function<void(const ChartPoint&)>& fn)
{
    const auto& ring = ctx.base();
    const std::size_t e = static_cast<std::size_t>(ctx.e());
    const auto types = chart_types(ctx.e());
    std::uint64_t per_type = 1;
    for (std::size_t k = 0; k < e * e; ++k) {
        if (per_type > std::numeric_limits<std::uint64_t>::max() / ring.size()) {
            per_type = std::numeric_limits<std::uint64_t>::max();
            break;
        }
        per_type *= ring.size();
    }
    if (per_type > budget / types.size())
        throw Error(ErrorCode::BudgetExceeded, "chart scan needs " + std::to_string(per_type) + " matrices per type, budget is " + std::to_string(budget));

    for (ChartType type : types) {
        RMatrix p = pi_matrix(ctx, type);
        auto blk = [&](std::size_t r0, std::size_t c0) {
            RMatrix b(e, e);
            for (std::size_t r = 0; r < e; ++r)
                for (std::size_t c = 0; c < e; ++c) b(r, c) = p(r0 + r, c0 + c);
            return b;
        };
        RMatrix p00 = blk(0, 0), p01 = blk(0, e), p10 = blk(e, 0), p11 = blk(e, e);
        ChartPoint cp{type, RMatrix(e, e)};
        for (std::uint64_t idx = 0; idx < per_type; ++idx) {
            std::uint64_t t = idx;
            for (std::size_t k = 0; k < e * e; ++k) {
                cp.c(k / e, k % e) = static_cast<Code>(t % ring.size());
                t /= ring.size();
            }
            RMatrix lhs = mat_add(ring, p10, mat_mul(ring, p11, cp.c));
            RMatrix rhs = mat_mul(ring, cp.c, mat_add(ring, p00, mat_mul(ring, p01, cp.c)));
            if (lhs == rhs) fn(cp);
        }
    }
}

// ---------------------------------------------------------------- checks

void check_dp_equals_k(const RingCtx& ctx, const CheckOptions& opts, VerificationReport& rep)
{
    Classification cl = classify(ctx, enum_config(ctx.spec(), opts));
    rep.counts = counts_of(cl);
    for (const auto& key : cl.dp_k_witnesses) fail_unless(rep, false, key + ": in exactly one of N^DP and N^K");
    for (const auto& key : cl.pi_generic_disagreements) rep.notes.push_back("pi-only determinant test disagrees with the generic one at " + key);
    if (!ctx.is_tame()) rep.notes.push_back("wild ramification: p divides e; complements use the coordinate forms");
}

void check_beta_duality(const RingCtx& ctx, const CheckOptions& opts, VerificationReport& rep)
{
    if (ctx.f() != 1) return skip(rep, "chart forms need f = 1");
    if (!ctx.is_tame()) return skip(rep, "wild: p divides e");
    const auto& ring = ctx.base();
    const int e = ctx.e();
    if (opts.corrupt_beta_sign && ring.p() == 2) return skip(rep, "sign corruption is invisible in characteristic 2");
    KChecker kc(ctx);
    GramForm beta = beta_gram(ctx);
    RMatrix t = t_matrix(e);
    if (opts.corrupt_beta_sign) {
        t(0, e - 1) = ring.neg(1);
        rep.notes.push_back("negative control: one sign of T flipped");
    }
    auto involution = [&](const ChartPoint& cp) {
        return ChartPoint{cp.type, mat_neg(ring, mat_mul(ring, mat_mul(ring, t, cp.c.transposed()), t))};
    };
    for_each_invariant_chart(ctx, opts.budget, [&](const ChartPoint& cp) {
        ++rep.counts.n;
        ChartPoint image = involution(cp);
        fail_unless(rep, involution(image) == cp, chart_witness(ring, cp, "involution is not of order two"));
        Lattice g = chart_embed(ctx, cp);
        Lattice phi = chart_embed(ctx, image);
        if (!opts.corrupt_beta_sign)
            fail_unless(rep, orth_complement(ctx, g, {beta}) == phi, chart_witness(ring, cp, "chart image differs from the beta complement"));
        bool iso = is_isotropic(ctx, g);
        bool k = is_point_of_N(ctx, phi) && kc.check(phi).generic;
        rep.counts.dp += iso;
        rep.counts.k += k;
        rep.counts.r += is_R_point(ctx, g);
        fail_unless(rep, iso == k, chart_witness(ring, cp, iso ? "isotropic but complement fails (K)" : "not isotropic but complement satisfies (K)"));
        bool pi_k = charpol(ring, chart_pi_action(ctx, image)) == kc.pi_reference();
        if (pi_k != k) rep.notes.push_back(chart_witness(ring, cp, "charpol of A' disagrees with the generic determinant test"));
        if (cp.type.i >= 1 && !opts.corrupt_beta_sign) {
            try {
                CompanionData cd = companion_g(ctx, cp);
                auto [e1, e2] = chart_o_generators(ctx, cp);
                fail_unless(rep, eval_alt_form(ctx, e1, e2) == eval_at_pi(ctx, cd.g),
                            chart_witness(ring, cp, "pairing of the O-generators differs from g(pi)"));
            } catch (const std::logic_error& ex) {
                fail_unless(rep, false, chart_witness(ring, cp, ex.what()));
            }
        }
    });
    rep.notes.push_back("counts: N = invariant chart points, DP = isotropic graphs, K = complements satisfying (K), R = graphs satisfying (R)");
}

void check_trace_form_duality(const RingCtx& ctx, const CheckOptions& opts, VerificationReport& rep)
{
    if (!ctx.is_tame()) return skip(rep, "wild: p divides e, the inverse different is not available");
    const auto& ring = ctx.base();
    GramForm trace = trace_form_gram(ctx);
    fail_unless(rep, trace.well_formed(ring) && trace.is_perfect(ring), "trace form is not a perfect alternating form");

    if (ctx.f() == 1) {
        std::uint64_t chart_points = 0;
        for_each_invariant_chart(ctx, opts.budget, [&](const ChartPoint& cp) {
            ++chart_points;
            bool iso = is_isotropic(ctx, chart_embed(ctx, cp));
            fail_unless(rep, jcj_criterion(ctx, cp) == iso, chart_witness(ring, cp, "C^T = JCJ disagrees with isotropy"));
        });
        for (ChartType type : chart_types(ctx.e())) {
            GramForm in_chart = change_basis(ring, trace, chart_basis_matrix(ctx, type));
            fail_unless(rep, in_chart.gram == trace_gram_chart(ring, type).gram,
                        "trace form in the type (" + std::to_string(type.i) + "," + std::to_string(type.j) + ") chart basis is not (0 J; -J^T 0)");
        }
        rep.notes.push_back("chart points checked: " + std::to_string(chart_points));
    } else {
        rep.notes.push_back("chart criterion needs f = 1; only complements compared");
    }

    Classification cl = classify(ctx, enum_config(ctx.spec(), opts));
    rep.counts = counts_of(cl);
    auto coord = coordinate_grams(ctx);
    for (const auto& pt : cl.points)
        fail_unless(rep, orth_complement(ctx, pt.lattice, coord) == orth_complement(ctx, pt.lattice, {trace}),
                    lattice_witness(pt.lattice, "complements under the two forms differ"));
}

void check_unramified_collapse(const RingCtx& ctx, const CheckOptions& opts, VerificationReport& rep)
{
    if (ctx.e() != 1) return skip(rep, "needs e = 1");
    Classification cl = classify(ctx, enum_config(ctx.spec(), opts));
    rep.counts = counts_of(cl);
    for (const auto& pt : cl.points)
        fail_unless(rep, pt.dp && pt.k && pt.r, lattice_witness(pt.lattice, "point misses one of (DP), (K), (R)"));
}

void check_rapoport_strict(const RingCtx& ctx, const CheckOptions& opts, VerificationReport& rep)
{
    if (!ctx.base_is_field()) return skip(rep, "needs a field base");
    if (ctx.e() < 2) return skip(rep, "needs e >= 2");
    Classification cl = classify(ctx, enum_config(ctx.spec(), opts));
    rep.counts = counts_of(cl);
    bool any_gap = false;
    for (const auto& pt : cl.points) {
        auto [i, j] = pt.type->chart_type();
        if (pt.r) {
            fail_unless(rep, i == 0, lattice_witness(pt.lattice, "(R) point of type " + type_label(*pt.type)));
            fail_unless(rep, pt.dp, lattice_witness(pt.lattice, "(R) point outside N^DP"));
        } else {
            fail_unless(rep, i >= 1, lattice_witness(pt.lattice, "type (0," + std::to_string(j) + ") point without (R)"));
            if (pt.dp) {
                any_gap = true;
                rep.witnesses.push_back(lattice_witness(pt.lattice, "in N^DP but not N^R, type " + type_label(*pt.type)));
            }
        }
    }
    if (!any_gap) {
        rep.status = CheckStatus::Fail;
        rep.notes.push_back("no point separates N^R from N^DP");
    }
    if (rep.status == CheckStatus::Pass) rep.notes.push_back("witnesses list N^DP minus N^R");
}

void check_nonisotropic_deformation(const RingCtx& ctx, const CheckOptions&, VerificationReport& rep)
{
    if (!ctx.spec().eps) return skip(rep, "needs a dual-number base");
    if (ctx.e() != 2 || ctx.f() != 1) return skip(rep, "needs e = 2 and f = 1");
    const auto& ring = ctx.base();
    const Code eps = static_cast<Code>(ring.p());
    // Standard coordinates: f1, pi f1, f2, pi f2.
    std::vector<Code> g1{eps, 1, 0, 0}, g2{0, 0, 0, 1};
    RMatrix rows(2, 4);
    std::copy(g1.begin(), g1.end(), rows.row(0).begin());
    std::copy(g2.begin(), g2.end(), rows.row(1).begin());
    Lattice lat = Lattice::from_rows(ctx, rows);
    const std::string key = lat.key();

    bool point = is_point_of_N(ctx, lat);
    fail_unless(rep, point, key + ": not a point of N");
    if (!point) return;
    rep.counts.n = 1;

    Elem pairing = eval_alt_form(ctx, g1, g2);
    Elem pi_eps = ctx.mul(ctx.pi(), ctx.eps(Level::Full));
    fail_unless(rep, pairing == pi_eps, key + ": pairing of the generators is " + ctx.format(pairing) + ", expected pi*eps");
    rep.notes.push_back("pairing of generators: " + ctx.format(pairing));

    bool iso = is_isotropic(ctx, lat);
    bool dp = is_DP(ctx, lat);
    KResult k = KChecker(ctx).check(lat);
    rep.counts.dp = dp;
    rep.counts.k = k.generic;
    rep.counts.r = is_R_point(ctx, lat);
    fail_unless(rep, !iso, key + ": unexpectedly isotropic");
    fail_unless(rep, !dp, key + ": unexpectedly satisfies (DP)");
    fail_unless(rep, !k.generic, key + ": unexpectedly satisfies (K)");

    // pi acts on the two generators by diag(eps, 0).
    auto pg1 = mat_apply(ring, ctx.pi_on_M(), g1);
    auto pg2 = mat_apply(ring, ctx.pi_on_M(), g2);
    std::vector<Code> eps_g1(4);
    for (int c = 0; c < 4; ++c) eps_g1[c] = ring.mul(eps, g1[c]);
    bool diag = pg1 == eps_g1 && std::all_of(pg2.begin(), pg2.end(), [](Code x) { return x == 0; });
    fail_unless(rep, diag, key + ": pi does not act as diag(eps, 0) on the generators");
    UniPoly want = UniPoly::from_coeffs({0, ring.neg(eps), 1});
    fail_unless(rep, k.pi_charpol == want, key + ": charpol(pi; L) = " + format_poly(ring, k.pi_charpol));
    rep.notes.push_back("charpol(pi; L) = " + format_poly(ring, k.pi_charpol));

    ChartPoint cp = chart_extract(ctx, lat, ChartType{1, 1});
    rep.notes.push_back("type (1,1) chart matrix " + format_matrix(ring, cp.c));
    fail_unless(rep, chart_embed(ctx, cp) == lat, key + ": chart round trip changed the lattice");
}

void check_isotropic_lift(const RingCtx& ctx, const CheckOptions&, VerificationReport& rep)
{
    if (!ctx.spec().eps) return skip(rep, "needs a dual-number base");
    if (ctx.f() != 1 || ctx.e() > 3) return skip(rep, "needs f = 1 and e <= 3");
    const auto& ring = ctx.base();
    const int e = ctx.e(), g = ctx.g();
    const Code eps = static_cast<Code>(ring.p());
    KChecker kc(ctx);
    std::vector<Elem> units;
    for (auto& x : ctx.enumerate_elements(Level::Full))
        if (ctx.is_unit(x)) units.push_back(x);
    std::uint64_t iso_only_mismatch = 0;
    for (int e1 = 0; e1 <= e; ++e1)
        for (int e2 = 0; e2 <= e; ++e2)
            for (const Elem& x : units) {
                // v1 = pi^e1 f1 + x eps f2, v2 = pi^e2 f2 + eps f1.
                RMatrix rows(2, 2 * g);
                if (e1 < e) rows(0, e1) = 1;
                for (int k = 0; k < g; ++k) rows(0, g + k) = ring.mul(eps, x.coeffs[k]);
                if (e2 < e) rows(1, g + e2) = 1;
                rows(1, 0) = ring.add(rows(1, 0), eps);
                Lattice lat = o_span(ctx, rows);
                bool point = is_point_of_N(ctx, lat);
                bool iso = is_isotropic(ctx, lat);
                bool expected = e1 + e2 == e;
                std::string label = "e1=" + std::to_string(e1) + " e2=" + std::to_string(e2) + " x=" + ctx.format(x);
                fail_unless(rep, (point && iso) == expected,
                            label + (expected ? ": lift is not an isotropic point" : ": lift is an isotropic point"));
                if (iso != expected) ++iso_only_mismatch;
                if (point) {
                    ++rep.counts.n;
                    rep.counts.dp += is_DP(ctx, lat);
                    rep.counts.k += kc.check(lat).generic;
                    rep.counts.r += is_R_point(ctx, lat);
                }
            }
    rep.notes.push_back("units x tried: " + std::to_string(units.size()));
    if (iso_only_mismatch)
        rep.notes.push_back(std::to_string(iso_only_mismatch) + " lifts where isotropy alone (without the point condition) differs from e1 + e2 = e");
}

void check_type_criterion(const RingCtx& ctx, const CheckOptions& opts, VerificationReport& rep)
{
    if (!ctx.base_is_field()) return skip(rep, "needs a field base");
    Classification cl = classify(ctx, enum_config(ctx.spec(), opts));
    rep.counts = counts_of(cl);
    for (const auto& pt : cl.points) {
        fail_unless(rep, pt.k == pt.type->satisfies_sum_rule(), lattice_witness(pt.lattice, "(K) disagrees with the sum rule for " + type_label(*pt.type)));
        if (ctx.totally_ramified()) fail_unless(rep, pt.k, lattice_witness(pt.lattice, "totally ramified point without (K)"));
    }
}

void check_charpol_square(const RingCtx& ctx, const CheckOptions& opts, VerificationReport& rep)
{
    const auto& ring = ctx.base();
    Classification cl = classify(ctx, enum_config(ctx.spec(), opts));
    rep.counts = counts_of(cl);
    const UniPoly whole = charpol(ring, ctx.pi_on_M());
    const UniPoly q = eisenstein_charpol(ctx);
    const UniPoly q2 = poly_mul(ring, q, q);
    std::uint64_t nilpotent_gaps = 0;
    for (const auto& pt : cl.points) {
        UniPoly p_l = charpol(ring, pi_action(ctx, pt.lattice));
        UniPoly p_quot = quotient_pi_charpol(ctx, pt.lattice);
        fail_unless(rep, poly_mul(ring, p_l, p_quot) == whole, lattice_witness(pt.lattice, "charpol(pi; M) != charpol(pi; L) * charpol(pi; M/L)"));
        if (!pt.dp) continue;
        fail_unless(rep, poly_mul(ring, p_l, p_l) == q2, lattice_witness(pt.lattice, "P^2 != Q^2 on a DP point"));
        if (p_l != q) {
            ++nilpotent_gaps;
            fail_unless(rep, false, lattice_witness(pt.lattice, "DP point with P = " + format_poly(ring, p_l) + " != Q"));
        }
    }
    if (ring.p() == 2) rep.notes.push_back("DP points where P - Q has nonzero nilpotent coefficients: " + std::to_string(nilpotent_gaps));
}

}  // namespace

VerificationReport run_check(const std::string& name, const RingSpec& spec, const CheckOptions& opts)
{
    if (!is_known_check(name)) throw Error(ErrorCode::UnknownCheck, "unknown check '" + name + "'");
    auto start = std::chrono::steady_clock::now();
    RingCtx ctx = build_ring(spec);
    VerificationReport rep;
    rep.check = name;
    rep.ring = ctx.spec();
    if (name == "dp_equals_k") check_dp_equals_k(ctx, opts, rep);
    else if (name == "beta_duality") check_beta_duality(ctx, opts, rep);
    else if (name == "trace_form_duality") check_trace_form_duality(ctx, opts, rep);
    else if (name == "unramified_collapse") check_unramified_collapse(ctx, opts, rep);
    else if (name == "rapoport_strict") check_rapoport_strict(ctx, opts, rep);
    else if (name == "nonisotropic_deformation") check_nonisotropic_deformation(ctx, opts, rep);
    else if (name == "isotropic_lift") check_isotropic_lift(ctx, opts, rep);
    else if (name == "type_criterion") check_type_criterion(ctx, opts, rep);
    else if (name == "charpol_square") check_charpol_square(ctx, opts, rep);
    rep.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

std::vector<VerificationReport> run_suite(const std::vector<RingSpec>& grid, const std::vector<std::string>& checks,
                                          const CheckOptions& opts)
{
    for (const auto& c : checks)
        if (!is_known_check(c)) throw Error(ErrorCode::UnknownCheck, "unknown check '" + c + "'");
    std::vector<VerificationReport> out;
    for (const auto& spec : grid)
        for (const auto& c : checks) out.push_back(run_check(c, spec, opts));
    return out;
}

}  // namespace hblm

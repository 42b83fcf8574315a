#include <gtest/gtest.h>

#include "hblm/report.hpp"
#include "hblm/verify.hpp"

using namespace hblm;

namespace {

RingSpec spec(int p, int e, bool eps = false, int n = 1, int f = 1) { return RingSpec{p, n, f, eps, e, 1, {}}; }

VerificationReport run(const std::string& name, const RingSpec& s, CheckOptions opts = {}) { return run_check(name, s, opts); }

}  // namespace

TEST(Verify, CheckRegistry)
{
    EXPECT_EQ(all_checks().size(), 9u);
    for (const auto& c : all_checks()) EXPECT_TRUE(is_known_check(c));
    EXPECT_FALSE(is_known_check("nope"));
    try {
        run("nope", spec(2, 1));
        FAIL();
    } catch (const Error& ex) {
        EXPECT_EQ(ex.code(), ErrorCode::UnknownCheck);
    }
}

TEST(Verify, DpEqualsKOnDualNumbers)
{
    auto rep = run("dp_equals_k", spec(3, 2, true));
    EXPECT_EQ(rep.status, CheckStatus::Pass);
    EXPECT_EQ(rep.counts.dp, rep.counts.k);
    EXPECT_EQ(rep.counts, (Counts{189, 135, 135, 108}));
    auto wild = run("dp_equals_k", spec(2, 2, true));
    EXPECT_EQ(wild.status, CheckStatus::Pass);
    EXPECT_EQ(wild.counts, (Counts{40, 32, 32, 24}));
}

TEST(Verify, DeformationExample)
{
    for (int p : {2, 3}) {
        auto rep = run("nonisotropic_deformation", spec(p, 2, true));
        EXPECT_EQ(rep.status, CheckStatus::Pass);
        EXPECT_EQ(rep.counts, (Counts{1, 0, 0, 0}));
        bool pairing = false, poly = false;
        for (const auto& n : rep.notes) {
            pairing = pairing || n == "pairing of generators: eps*pi";
            poly = poly || n == "charpol(pi; L) = X^2 - eps*X";
        }
        EXPECT_TRUE(pairing);
        EXPECT_TRUE(poly);
    }
}

TEST(Verify, TameOnlyChecksSkipOnWildRings)
{
    for (const char* name : {"trace_form_duality", "beta_duality"}) {
        auto rep = run(name, spec(2, 2));
        EXPECT_EQ(rep.status, CheckStatus::Skipped);
        ASSERT_FALSE(rep.notes.empty());
        EXPECT_NE(rep.notes[0].find("wild"), std::string::npos);
    }
}

TEST(Verify, StrictInclusionWitnesses)
{
    auto rep = run("rapoport_strict", spec(2, 2));
    EXPECT_EQ(rep.status, CheckStatus::Pass);
    EXPECT_EQ(rep.counts.dp, 7u);
    EXPECT_EQ(rep.counts.r, 6u);
    ASSERT_EQ(rep.witnesses.size(), 1u);
    EXPECT_NE(rep.witnesses[0].find("(1,1)"), std::string::npos);
}

TEST(Verify, UnramifiedCollapse)
{
    auto rep = run("unramified_collapse", spec(2, 1, false, 1, 2));
    EXPECT_EQ(rep.status, CheckStatus::Pass);
    EXPECT_EQ(rep.counts, (Counts{5, 5, 5, 5}));
}

TEST(Verify, LiftConstruction)
{
    auto rep = run("isotropic_lift", spec(2, 3, true));
    EXPECT_EQ(rep.status, CheckStatus::Pass);
    EXPECT_TRUE(rep.witnesses.empty());
}

TEST(Verify, CorruptedBetaIsCaught)
{
    CheckOptions opts;
    opts.corrupt_beta_sign = true;
    auto rep = run("beta_duality", spec(5, 3), opts);
    EXPECT_EQ(rep.status, CheckStatus::Fail);
    ASSERT_FALSE(rep.witnesses.empty());
    EXPECT_NE(rep.witnesses[0].find("C=["), std::string::npos);
}

TEST(Verify, FailureAlwaysCarriesAWitness)
{
    auto reps = run_suite(default_grid(), all_checks(), CheckOptions{});
    EXPECT_EQ(reps.size(), default_grid().size() * all_checks().size());
    for (const auto& r : reps) {
        EXPECT_NE(r.status, CheckStatus::Fail) << r.check << " " << r.ring.label();
        if (r.status == CheckStatus::Fail) EXPECT_FALSE(r.witnesses.empty());
    }
    EXPECT_TRUE(all_passed(reps));
}

TEST(Verify, SuiteOrderingAndEmptyList)
{
    EXPECT_TRUE(run_suite(default_grid(), {}, CheckOptions{}).empty());
    auto reps = run_suite({spec(2, 1), spec(3, 1)}, {"dp_equals_k", "type_criterion"}, CheckOptions{});
    ASSERT_EQ(reps.size(), 4u);
    EXPECT_EQ(reps[0].ring, spec(2, 1));
    EXPECT_EQ(reps[1].check, "type_criterion");
    EXPECT_EQ(reps[2].ring, spec(3, 1));
}

TEST(Verify, BudgetExceededPropagates)
{
    CheckOptions opts;
    opts.budget = 10;
    EXPECT_THROW(run("dp_equals_k", spec(3, 2), opts), Error);
}

TEST(Verify, ReproducibleModuloWallTime)
{
    CheckOptions one, many;
    many.workers = 4;
    auto a = run_suite({spec(3, 2, true), spec(2, 3)}, all_checks(), one);
    auto b = run_suite({spec(3, 2, true), spec(2, 3)}, all_checks(), many);
    EXPECT_EQ(reports_json(a, false), reports_json(b, false));
}

#include <gtest/gtest.h>

#include "hblm/report.hpp"

using namespace hblm;

namespace {

VerificationReport sample()
{
    VerificationReport r;
    r.check = "dp_equals_k";
    r.ring = RingSpec{3, 1, 1, true, 2, 1, {}};
    r.status = CheckStatus::Fail;
    r.counts = Counts{189, 135, 134, 108};
    r.witnesses = {"1,0,0,0;0,1,0,0: in exactly one of N^DP and N^K"};
    r.notes = {"a note"};
    r.wall_ms = 17;
    return r;
}

}  // namespace

TEST(Report, JsonSchema)
{
    auto j = to_json(sample());
    EXPECT_EQ(j["check"], "dp_equals_k");
    EXPECT_EQ(j["status"], "fail");
    EXPECT_EQ(j["ring"]["eps"], 1);
    EXPECT_EQ(j["counts"]["K"], 134);
    EXPECT_EQ(j["meta"]["wall_ms"], 17);
    EXPECT_EQ(j["meta"]["version"], kVersion);
    EXPECT_FALSE(to_json(sample(), false)["meta"].contains("wall_ms"));
}

TEST(Report, JsonRoundTrip)
{
    auto j = to_json(sample());
    VerificationReport back = report_from_json(nlohmann::json::parse(j.dump()));
    EXPECT_EQ(to_json(back).dump(), j.dump());
    EXPECT_EQ(back.counts, sample().counts);
    EXPECT_EQ(back.ring.serialize(), sample().ring.serialize());
}

TEST(Report, RejectsMalformedJson)
{
    auto j = to_json(sample());
    j["status"] = "maybe";
    EXPECT_THROW(report_from_json(j), Error);
    auto k = to_json(sample());
    k.erase("counts");
    EXPECT_THROW(report_from_json(k), Error);
}

TEST(Report, SerializationIsDeterministic)
{
    EXPECT_EQ(reports_json({sample(), sample()}), reports_json({sample(), sample()}));
    auto text = reports_text({sample()}, false);
    EXPECT_NE(text.find("dp_equals_k  F3[eps] e=2  fail  N=189 DP=135 K=134 R=108"), std::string::npos);
    EXPECT_NE(text.find("witness: 1,0,0,0"), std::string::npos);
}

TEST(Report, CsvFormats)
{
    EXPECT_EQ(atlas_csv_header(), "p,n,f,eps,e,u,N,DP,K,R,dp_eq_k\n");
    EXPECT_EQ(atlas_csv_row(AtlasRow{RingSpec{3, 1, 1, true, 2, 1, {}}, Counts{189, 135, 135, 108}, true}), "3,1,1,1,2,1,189,135,135,108,1\n");
    EXPECT_EQ(reports_csv({sample()}), "check,ring,status,N,DP,K,R,witnesses\ndp_equals_k,F3[eps] e=2,fail,189,135,134,108,1\n");
}

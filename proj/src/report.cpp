#include "hblm/report.hpp"

#include <sstream>

namespace hblm {

using nlohmann::json;

json ring_to_json(const RingSpec& spec)
{
    return json{{"p", spec.p}, {"n", spec.n}, {"f", spec.f}, {"eps", spec.eps ? 1 : 0}, {"e", spec.e}, {"u", spec.u}};
}

RingSpec ring_from_json(const json& j)
{
    try {
        RingSpec spec;
        spec.p = j.at("p").get<int>();
        spec.n = j.at("n").get<int>();
        spec.f = j.at("f").get<int>();
        spec.eps = j.at("eps").get<int>() != 0;
        spec.e = j.at("e").get<int>();
        spec.u = j.at("u").get<long>();
        return spec;
    } catch (const json::exception& ex) {
        throw Error(ErrorCode::ParseError, std::string("ring object: ") + ex.what());
    }
}

json to_json(const VerificationReport& rep, bool with_wall_time)
{
    json meta{{"version", kVersion}};
    if (with_wall_time) meta["wall_ms"] = rep.wall_ms;
    return json{
        {"check", rep.check},
        {"ring", ring_to_json(rep.ring)},
        {"status", std::string(to_string(rep.status))},
        {"counts", {{"N", rep.counts.n}, {"DP", rep.counts.dp}, {"K", rep.counts.k}, {"R", rep.counts.r}}},
        {"witnesses", rep.witnesses},
        {"notes", rep.notes},
        {"meta", meta},
    };
}

VerificationReport report_from_json(const json& j)
{
    try {
        VerificationReport rep;
        rep.check = j.at("check").get<std::string>();
        rep.ring = ring_from_json(j.at("ring"));
        const auto status = j.at("status").get<std::string>();
        if (status == "pass")
            rep.status = CheckStatus::Pass;
        else if (status == "fail")
            rep.status = CheckStatus::Fail;
        else if (status == "skipped")
            rep.status = CheckStatus::Skipped;
        else
            throw Error(ErrorCode::ParseError, "unknown status '" + status + "'");
        const auto& c = j.at("counts");
        rep.counts = Counts{c.at("N").get<std::uint64_t>(), c.at("DP").get<std::uint64_t>(), c.at("K").get<std::uint64_t>(),
                            c.at("R").get<std::uint64_t>()};
        rep.witnesses = j.at("witnesses").get<std::vector<std::string>>();
        if (j.contains("notes")) rep.notes = j.at("notes").get<std::vector<std::string>>();
        const auto& meta = j.at("meta");
        if (meta.contains("wall_ms")) rep.wall_ms = meta.at("wall_ms").get<std::int64_t>();
        return rep;
    } catch (const json::exception& ex) {
        throw Error(ErrorCode::ParseError, std::string("report: ") + ex.what());
    }
}

VerificationReport classification_report(const RingSpec& spec, const Classification& cl, std::int64_t wall_ms)
{
    VerificationReport rep;
    rep.check = "classify";
    rep.ring = spec;
    rep.counts = Counts{cl.n, cl.dp, cl.k, cl.r};
    rep.wall_ms = wall_ms;
    for (const auto& key : cl.dp_k_witnesses) rep.witnesses.push_back(key + ": in exactly one of N^DP and N^K");
    if (!rep.witnesses.empty()) rep.status = CheckStatus::Fail;
    for (const auto& key : cl.pi_generic_disagreements)
        rep.notes.push_back("pi-only determinant test disagrees with the generic one at " + key);
    return rep;
}

json classification_to_json(const RingSpec& spec, const Classification& cl, std::int64_t wall_ms, bool with_wall_time)
{
    json j = to_json(classification_report(spec, cl, wall_ms), with_wall_time);
    json types = json::object();
    for (const auto& [label, count] : cl.type_counts) types[label] = count;
    j["types"] = types;
    return j;
}

std::string reports_json(const std::vector<VerificationReport>& reports, bool with_wall_time)
{
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(to_json(r, with_wall_time));
    return json{{"reports", arr}}.dump(2) + "\n";
}

std::string reports_text(const std::vector<VerificationReport>& reports, bool with_wall_time)
{
    std::ostringstream out;
    for (const auto& r : reports) {
        out << r.check << "  " << r.ring.label() << "  " << to_string(r.status) << "  N=" << r.counts.n << " DP=" << r.counts.dp
            << " K=" << r.counts.k << " R=" << r.counts.r;
        if (with_wall_time) out << "  (" << r.wall_ms << " ms)";
        out << "\n";
        for (const auto& w : r.witnesses) out << "    witness: " << w << "\n";
        for (const auto& n : r.notes) out << "    note: " << n << "\n";
    }
    return out.str();
}

namespace {

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string reports_csv(const std::vector<VerificationReport>& reports)
{
    std::ostringstream out;
    out << "check,ring,status,N,DP,K,R,witnesses\n";
    for (const auto& r : reports)
        out << r.check << ',' << csv_field(r.ring.label()) << ',' << to_string(r.status) << ',' << r.counts.n << ','
            << r.counts.dp << ',' << r.counts.k << ',' << r.counts.r << ',' << r.witnesses.size() << "\n";
    return out.str();
}

std::string atlas_csv_header() { return "p,n,f,eps,e,u,N,DP,K,R,dp_eq_k\n"; }

std::string atlas_csv_row(const AtlasRow& row)
{
    std::ostringstream out;
    out << row.ring.p << ',' << row.ring.n << ',' << row.ring.f << ',' << (row.ring.eps ? 1 : 0) << ',' << row.ring.e << ','
        << row.ring.u << ',' << row.counts.n << ',' << row.counts.dp << ',' << row.counts.k << ',' << row.counts.r << ','
        << (row.dp_eq_k ? 1 : 0) << "\n";
    return out.str();
}

}  // namespace hblm

#include "hblm/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "hblm/conditions.hpp"
#include "hblm/enumerate.hpp"
#include "hblm/literal.hpp"
#include "hblm/report.hpp"
#include "hblm/verify.hpp"

namespace hblm {

namespace {

using nlohmann::json;

struct RingFlags {
    std::optional<int> p, n, f, e;
    std::optional<long> u;
    std::optional<std::string> m;
    std::optional<std::string> base;
    std::optional<std::string> config;
};

struct Options {
    RingFlags ring;
    std::string format = "text";
    std::string output;
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    std::uint64_t budget = 10'000'000;
    std::string lattice;
    bool r_span = false;
    bool generic = false;
    bool no_timing = false;
    std::string suite = "all";
    bool grid = false;
    std::string rings_file;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::InvalidSpec, "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RingSpec resolve_ring(const RingFlags& flags)
{
    RingSpec spec = flags.config ? RingSpec::parse(read_file(*flags.config)) : RingSpec{};
    if (flags.p) spec.p = *flags.p;
    if (flags.n) spec.n = *flags.n;
    if (flags.f) spec.f = *flags.f;
    if (flags.e) spec.e = *flags.e;
    if (flags.u) spec.u = *flags.u;
    if (flags.m) spec.m = RingSpec::parse("m=" + *flags.m).m;
    if (flags.base) {
        if (*flags.base == "fp") {
            spec.eps = false;
            if (!flags.n) spec.n = 1;
        } else if (*flags.base == "zpn") {
            spec.eps = false;
            if (!flags.n && spec.n < 2) spec.n = 2;
        } else if (*flags.base == "feps") {
            spec.eps = true;
            if (!flags.n) spec.n = 1;
        }
    }
    return spec;
}

void add_ring_flags(CLI::App* cmd, Options& o)
{
    cmd->add_option("--p", o.ring.p, "residue characteristic");
    cmd->add_option("--n", o.ring.n, "length of the base ring Z/p^n");
    cmd->add_option("--f", o.ring.f, "unramified degree");
    cmd->add_option("--m", o.ring.m, "unramified minimal polynomial, ascending coefficients, e.g. 1,1,1");
    cmd->add_option("--e", o.ring.e, "ramification index");
    cmd->add_option("--u", o.ring.u, "unit u in pi^e = p*u");
    cmd->add_option("--base", o.ring.base, "base ring kind")->check(CLI::IsMember({"fp", "zpn", "feps"}));
    cmd->add_option("--config", o.ring.config, "ring spec file (key=value lines); flags override it")->check(CLI::ExistingFile);
}

void add_output_flags(CLI::App* cmd, Options& o)
{
    cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("-o,--output", o.output, "write to this file instead of standard output");
}

void add_run_flags(CLI::App* cmd, Options& o)
{
    cmd->add_option("--workers", o.workers, "worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--budget", o.budget, "maximum number of chart candidates")->check(CLI::PositiveNumber);
}

void add_lattice_flags(CLI::App* cmd, Options& o)
{
    cmd->add_option("--lattice", o.lattice, "generators, e.g. \"pi*f1+eps*f1 ; pi*f2\"")->required();
    cmd->add_flag("--r-span", o.r_span, "take the R-span of the generators instead of the O-span");
}

std::int64_t elapsed_ms(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
}

void emit(const Options& o, const std::string& text, std::ostream& out)
{
    if (o.output.empty()) {
        out << text;
        return;
    }
    std::ofstream file(o.output);
    if (!file) throw Error(ErrorCode::InvalidSpec, "cannot write '" + o.output + "'");
    file << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_ring_info(const Options& o, std::ostream& out)
{
    RingCtx ctx = build_ring(resolve_ring(o.ring));
    const auto& spec = ctx.spec();
    const std::string eis = format_poly(ctx.base(), eisenstein_charpol(ctx));
    const std::uint64_t candidates = candidate_count(ctx);
    if (o.format == "json") {
        json j{{"ring", ring_to_json(spec)},
               {"label", spec.label()},
               {"spec", spec.serialize()},
               {"base_size", ctx.base().size()},
               {"g", ctx.g()},
               {"tame", ctx.is_tame()},
               {"pi_charpol", eis},
               {"chart_candidates", candidates}};
        emit(o, dump(j), out);
    } else if (o.format == "csv") {
        std::ostringstream s;
        s << "label,base_size,g,tame,pi_charpol,chart_candidates\n"
          << spec.label() << ',' << ctx.base().size() << ',' << ctx.g() << ',' << (ctx.is_tame() ? 1 : 0) << ',' << eis << ','
          << candidates << "\n";
        emit(o, s.str(), out);
    } else {
        std::ostringstream s;
        s << "ring:             " << spec.label() << "\n"
          << "spec:             " << spec.serialize() << "\n"
          << "|R|:              " << ctx.base().size() << "\n"
          << "rank g of O_R:    " << ctx.g() << "\n"
          << "tame:             " << yes_no(ctx.is_tame()) << "\n"
          << "charpol(pi; O_R): " << eis << "\n"
          << "chart candidates: " << candidates << "\n";
        emit(o, s.str(), out);
    }
    return kExitOk;
}

int cmd_enumerate(const Options& o, std::ostream& out)
{
    RingCtx ctx = build_ring(resolve_ring(o.ring));
    auto points = enum_N_points(ctx, o.budget, o.workers);
    if (o.format == "json") {
        json keys = json::array();
        for (const auto& l : points) keys.push_back(l.key());
        emit(o, dump(json{{"ring", ring_to_json(ctx.spec())}, {"count", points.size()}, {"points", keys}}), out);
    } else if (o.format == "csv") {
        std::string s = "key\n";
        for (const auto& l : points) s += "\"" + l.key() + "\"\n";
        emit(o, s, out);
    } else {
        std::string s = ctx.spec().label() + ": " + std::to_string(points.size()) + " points\n";
        for (const auto& l : points) s += l.key() + "\n";
        emit(o, s, out);
    }
    return kExitOk;
}

int cmd_classify(const Options& o, std::ostream& out)
{
    RingCtx ctx = build_ring(resolve_ring(o.ring));
    EnumConfig cfg;
    cfg.ring = ctx.spec();
    cfg.max_candidates = o.budget;
    cfg.workers = o.workers;
    auto start = std::chrono::steady_clock::now();
    Classification cl = classify(ctx, cfg);
    const std::int64_t ms = elapsed_ms(start);
    VerificationReport rep = classification_report(ctx.spec(), cl, ms);
    if (o.format == "json") {
        emit(o, dump(classification_to_json(ctx.spec(), cl, ms, !o.no_timing)), out);
    } else if (o.format == "csv") {
        emit(o, atlas_csv_header() + atlas_csv_row(AtlasRow{ctx.spec(), rep.counts, cl.dp_k_witnesses.empty()}), out);
    } else {
        std::string s = reports_text({rep}, false);
        for (const auto& [label, count] : cl.type_counts) s += "    type " + label + ": " + std::to_string(count) + "\n";
        emit(o, s, out);
    }
    return rep.status == CheckStatus::Fail ? kExitVerificationFailed : kExitOk;
}

int cmd_charpol(const Options& o, std::ostream& out)
{
    RingCtx ctx = build_ring(resolve_ring(o.ring));
    Lattice lat = parse_lattice(ctx, o.lattice, o.r_span ? SpanKind::R : SpanKind::O);
    if (!lat.is_summand()) throw Error(ErrorCode::NotAPoint, "the lattice is not a free direct summand, its charpoly is not defined");
    const auto& ring = ctx.base();
    std::string result;
    if (o.generic) {
        std::vector<RMatrix> family;
        std::vector<std::string> names;
        for (int k = 0; k < ctx.g(); ++k) {
            std::vector<Code> mono(static_cast<std::size_t>(ctx.g()), 0);
            mono[k] = 1;
            family.push_back(restricted_action(ctx, lat, ctx.action_on_M(mono)));
            names.push_back("t" + std::to_string(k));
        }
        names.push_back("X");
        MultiPolyRing pr(ring, ctx.g() + 1);
        result = pr.format(generic_charpol(ring, family), names);
    } else {
        result = format_poly(ring, charpol(ring, pi_action(ctx, lat)));
    }
    if (o.format == "json")
        emit(o, dump(json{{"ring", ring_to_json(ctx.spec())}, {"lattice", lat.key()}, {"generic", o.generic}, {"charpol", result}}), out);
    else if (o.format == "csv")
        emit(o, "charpol\n" + result + "\n", out);
    else
        emit(o, result + "\n", out);
    return kExitOk;
}

int cmd_check_lattice(const Options& o, std::ostream& out)
{
    RingCtx ctx = build_ring(resolve_ring(o.ring));
    Lattice lat = parse_lattice(ctx, o.lattice, o.r_span ? SpanKind::R : SpanKind::O);
    const bool point = is_point_of_N(ctx, lat);
    json j{{"ring", ring_to_json(ctx.spec())},
           {"lattice", lat.key()},
           {"o_invariant", is_O_invariant(ctx, lat)},
           {"summand", lat.is_summand()},
           {"rank", lat.is_summand() ? lat.basis().rows() : lat.num_generators()},
           {"point", point},
           {"isotropic", is_isotropic(ctx, lat)}};
    if (point) {
        KResult k = KChecker(ctx).check(lat);
        j["DP"] = is_DP(ctx, lat);
        j["K"] = k.generic;
        j["K_pi_only"] = k.pi_only;
        j["R"] = is_R_point(ctx, lat);
        j["pi_charpol"] = format_poly(ctx.base(), k.pi_charpol);
        if (ctx.base_is_field()) j["type"] = type_label(reduction_type(ctx, lat));
    }
    if (o.format == "json") {
        emit(o, dump(j), out);
        return kExitOk;
    }
    std::vector<std::string> keys{"o_invariant", "summand", "rank", "point", "isotropic", "DP", "K", "K_pi_only", "R", "pi_charpol", "type"};
    std::ostringstream s;
    if (o.format == "csv") {
        std::string header, row;
        for (const auto& k : keys) {
            if (!j.contains(k)) continue;
            header += (header.empty() ? "" : ",") + k;
            row += (row.empty() ? "" : ",") + (j[k].is_string() ? j[k].get<std::string>() : j[k].dump());
        }
        s << header << "\n" << row << "\n";
    } else {
        s << "lattice: " << lat.key() << "\n";
        for (const auto& k : keys)
            if (j.contains(k)) s << k << ": " << (j[k].is_string() ? j[k].get<std::string>() : j[k].dump()) << "\n";
    }
    emit(o, s.str(), out);
    return kExitOk;
}

std::vector<std::string> selected_checks(const std::string& suite)
{
    if (suite == "all") return all_checks();
    std::vector<std::string> out;
    std::istringstream ss(suite);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!is_known_check(item)) throw Error(ErrorCode::UnknownCheck, "unknown check '" + item + "'");
        out.push_back(item);
    }
    return out;
}

std::vector<RingSpec> selected_rings(const Options& o)
{
    if (!o.rings_file.empty()) {
        std::vector<RingSpec> grid;
        std::istringstream lines(read_file(o.rings_file));
        std::string line;
        while (std::getline(lines, line)) {
            if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            grid.push_back(RingSpec::parse(line));
        }
        return grid;
    }
    if (o.grid) return default_grid();
    return {resolve_ring(o.ring)};
}

std::string format_reports(const Options& o, const std::vector<VerificationReport>& reports)
{
    if (o.format == "json") return reports_json(reports, !o.no_timing);
    if (o.format == "csv") return reports_csv(reports);
    return reports_text(reports, false);
}

int cmd_verify(const Options& o, std::ostream& out)
{
    CheckOptions opts;
    opts.budget = o.budget;
    opts.workers = o.workers;
    auto reports = run_suite(selected_rings(o), selected_checks(o.suite), opts);
    emit(o, format_reports(o, reports), out);
    return all_passed(reports) ? kExitOk : kExitVerificationFailed;
}

int cmd_atlas(const Options& o, std::ostream& out, std::ostream& err)
{
    namespace fs = std::filesystem;
    const fs::path dir = o.output.empty() ? fs::path("atlas") : fs::path(o.output);
    fs::create_directories(dir);
    std::string csv = atlas_csv_header();
    bool all_equal = true;
    for (const auto& spec : o.rings_file.empty() ? default_grid() : selected_rings(o)) {
        RingCtx ctx = build_ring(spec);
        EnumConfig cfg;
        cfg.ring = spec;
        cfg.max_candidates = o.budget;
        cfg.workers = o.workers;
        auto start = std::chrono::steady_clock::now();
        Classification cl = classify(ctx, cfg);
        const std::int64_t ms = elapsed_ms(start);
        std::string name = spec.label();
        for (char& c : name)
            if (c == ' ' || c == '/' || c == '[' || c == ']' || c == '=') c = '_';
        std::ofstream file(dir / (name + ".json"));
        if (!file) throw Error(ErrorCode::InvalidSpec, "cannot write into '" + dir.string() + "'");
        file << dump(classification_to_json(spec, cl, ms, !o.no_timing));
        const bool eq = cl.dp_k_witnesses.empty();
        all_equal = all_equal && eq;
        csv += atlas_csv_row(AtlasRow{spec, Counts{cl.n, cl.dp, cl.k, cl.r}, eq});
        err << spec.label() << ": N=" << cl.n << " DP=" << cl.dp << " K=" << cl.k << " R=" << cl.r << "\n";
    }
    std::ofstream summary(dir / "atlas.csv");
    summary << csv;
    out << "wrote " << (dir / "atlas.csv").string() << "\n";
    return all_equal ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Enumerate and verify O-stable Lagrangian summands of (O_F (x) R)^2 over finite chain rings", "hblm"};
    app.require_subcommand(1);
    Options o;

    auto* ring_info = app.add_subcommand("ring-info", "describe the coefficient tower");
    add_ring_flags(ring_info, o);
    add_output_flags(ring_info, o);

    auto* enumerate = app.add_subcommand("enumerate", "list every point of N(R) by canonical key");
    add_ring_flags(enumerate, o);
    add_output_flags(enumerate, o);
    add_run_flags(enumerate, o);

    auto* classify_cmd = app.add_subcommand("classify", "count points satisfying (DP), (K), (R) and by reduction type");
    add_ring_flags(classify_cmd, o);
    add_output_flags(classify_cmd, o);
    add_run_flags(classify_cmd, o);
    classify_cmd->add_flag("--no-timing", o.no_timing, "omit wall time from JSON output");

    auto* charpol_cmd = app.add_subcommand("charpol", "characteristic polynomial of pi on a lattice");
    add_ring_flags(charpol_cmd, o);
    add_output_flags(charpol_cmd, o);
    add_lattice_flags(charpol_cmd, o);
    charpol_cmd->add_flag("--generic", o.generic, "charpoly of the generic element t0*b0 + ... in variables t_k and X");

    auto* check_lattice = app.add_subcommand("check-lattice", "evaluate the point, (DP), (K), (R) predicates on a lattice");
    add_ring_flags(check_lattice, o);
    add_output_flags(check_lattice, o);
    add_lattice_flags(check_lattice, o);

    auto* verify = app.add_subcommand("verify", "run named checks");
    add_ring_flags(verify, o);
    add_output_flags(verify, o);
    add_run_flags(verify, o);
    verify->add_option("--suite", o.suite, "'all' or a comma-separated list of check ids");
    verify->add_flag("--grid", o.grid, "run over the default ring grid instead of a single ring");
    verify->add_option("--rings", o.rings_file, "file with one ring spec per line")->check(CLI::ExistingFile);
    verify->add_flag("--no-timing", o.no_timing, "omit wall time from JSON output");

    auto* atlas = app.add_subcommand("atlas", "classify every ring of a grid, one JSON per ring plus atlas.csv");
    add_run_flags(atlas, o);
    atlas->add_option("-o,--output", o.output, "output directory (default ./atlas)");
    atlas->add_option("--rings", o.rings_file, "file with one ring spec per line (default grid otherwise)")->check(CLI::ExistingFile);
    atlas->add_flag("--no-timing", o.no_timing, "omit wall time from the per-ring JSON");

    auto* list = app.add_subcommand("list-checks", "print the check ids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (ring_info->parsed()) return cmd_ring_info(o, out);
        if (enumerate->parsed()) return cmd_enumerate(o, out);
        if (classify_cmd->parsed()) return cmd_classify(o, out);
        if (charpol_cmd->parsed()) return cmd_charpol(o, out);
        if (check_lattice->parsed()) return cmd_check_lattice(o, out);
        if (verify->parsed()) return cmd_verify(o, out);
        if (atlas->parsed()) return cmd_atlas(o, out, err);
        if (list->parsed()) {
            for (const auto& c : all_checks()) out << c << "\n";
            return kExitOk;
        }
    } catch (const Error& ex) {
        err << "error: " << ex.what() << "\n";
        return kExitUsage;
    } catch (const std::filesystem::filesystem_error& ex) {
        err << "error: " << ex.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace hblm

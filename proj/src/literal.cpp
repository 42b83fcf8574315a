#include "hblm/literal.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace hblm {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::ParseError, "lattice literal: " + what); }

std::string strip(std::string_view s)
{
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char sep)
{
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i)
        if (i == s.size() || s[i] == sep) {
            parts.push_back(strip(s.substr(start, i - start)));
            start = i + 1;
        }
    return parts;
}

// Splits a sum into signed terms: "a+b-c" -> {(+,a), (+,b), (-,c)}.
std::vector<std::pair<bool, std::string>> signed_terms(const std::string& sum)
{
    std::vector<std::pair<bool, std::string>> terms;
    bool negative = false;
    bool signed_term = false;
    std::string cur;
    for (char c : sum) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if ((c == '+' || c == '-') && (cur.empty() || cur.back() != '^')) {
            if (!cur.empty()) {
                terms.emplace_back(negative, cur);
                cur.clear();
            } else if (signed_term || !terms.empty()) {
                fail("doubled sign in '" + sum + "'");
            }
            negative = c == '-';
            signed_term = true;
            continue;
        }
        if (cur.empty()) signed_term = false;
        cur += c;
    }
    if (cur.empty()) fail("empty term in '" + sum + "'");
    terms.emplace_back(negative, cur);
    return terms;
}

long long parse_int(const std::string& s)
{
    if (s.empty() || s.size() > 12) fail("bad integer '" + s + "'");
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) fail("bad integer '" + s + "'");
    return std::stoll(s);
}

// Splits "pi^3" into ("pi", 3); a bare symbol has exponent 1.
std::pair<std::string, int> power(const std::string& factor)
{
    auto caret = factor.find('^');
    if (caret == std::string::npos) return {factor, 1};
    long long exp = parse_int(factor.substr(caret + 1));
    if (exp > 64) fail("exponent too large in '" + factor + "'");
    return {factor.substr(0, caret), static_cast<int>(exp)};
}

// One term of a generator: an element of O_R times f1 or f2.
std::pair<Elem, int> parse_module_term(const RingCtx& ctx, const std::string& term)
{
    Elem value = ctx.one(Level::Full);
    int basis = -1;
    for (const auto& raw : split(term, '*')) {
        if (raw.empty()) fail("empty factor in '" + term + "'");
        auto [sym, exp] = power(raw);
        if (sym == "f1" || sym == "f2") {
            if (basis >= 0) fail("more than one of f1, f2 in '" + term + "'");
            if (exp != 1) fail("f1, f2 cannot carry exponents");
            basis = sym == "f1" ? 0 : 1;
        } else if (sym == "pi") {
            value = ctx.mul(value, ctx.pow(ctx.pi(), exp));
        } else if (sym == "w") {
            if (ctx.f() == 1) fail("w needs f > 1");
            value = ctx.mul(value, ctx.pow(ctx.omega(), exp));
        } else if (sym == "eps") {
            if (!ctx.spec().eps) fail("eps needs a dual-number base");
            value = ctx.mul(value, ctx.pow(ctx.eps(Level::Full), exp));
        } else {
            if (raw.find('^') != std::string::npos) fail("integer powers are not supported: '" + raw + "'");
            value = ctx.mul(value, ctx.from_int(parse_int(sym), Level::Full));
        }
    }
    if (basis < 0) fail("term '" + term + "' names neither f1 nor f2");
    return {value, basis};
}

Code parse_coordinate(const RingCtx& ctx, const std::string& sum)
{
    const auto& ring = ctx.base();
    Code total = 0;
    for (const auto& [negative, term] : signed_terms(sum)) {
        Code value = 1;
        for (const auto& raw : split(term, '*')) {
            auto [sym, exp] = power(raw);
            if (sym == "eps") {
                if (!ctx.spec().eps) fail("eps needs a dual-number base");
                for (int k = 0; k < exp; ++k) value = ring.mul(value, ctx.eps(Level::Base).coeffs[0]);
            } else {
                if (raw.find('^') != std::string::npos) fail("integer powers are not supported: '" + raw + "'");
                value = ring.mul(value, ring.from_int(parse_int(sym)));
            }
        }
        total = negative ? ring.sub(total, value) : ring.add(total, value);
    }
    return total;
}

}  // namespace

RMatrix parse_generators(const RingCtx& ctx, std::string_view text)
{
    const std::size_t g = static_cast<std::size_t>(ctx.g());
    auto gens = split(text, ';');
    if (gens.size() == 1 && gens[0].empty()) fail("no generators");
    RMatrix rows(gens.size(), 2 * g);
    for (std::size_t r = 0; r < gens.size(); ++r) {
        const auto& gen = gens[r];
        if (gen.empty()) fail("empty generator");
        if (gen.find(',') != std::string::npos) {
            auto coords = split(gen, ',');
            if (coords.size() != 2 * g)
                fail("coordinate vector '" + gen + "' has " + std::to_string(coords.size()) + " entries, expected " +
                     std::to_string(2 * g));
            for (std::size_t c = 0; c < 2 * g; ++c) rows(r, c) = parse_coordinate(ctx, coords[c]);
            continue;
        }
        std::vector<Elem> parts{ctx.zero(Level::Full), ctx.zero(Level::Full)};
        for (const auto& [negative, term] : signed_terms(gen)) {
            auto [value, basis] = parse_module_term(ctx, term);
            parts[basis] = negative ? ctx.sub(parts[basis], value) : ctx.add(parts[basis], value);
        }
        for (std::size_t k = 0; k < g; ++k) {
            rows(r, k) = parts[0].coeffs[k];
            rows(r, g + k) = parts[1].coeffs[k];
        }
    }
    return rows;
}

Lattice parse_lattice(const RingCtx& ctx, std::string_view text, SpanKind kind)
{
    RMatrix rows = parse_generators(ctx, text);
    return kind == SpanKind::O ? o_span(ctx, rows) : Lattice::from_rows(ctx, rows);
}

}  // namespace hblm

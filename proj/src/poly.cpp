#include "hblm/poly.hpp"

#include <map>

namespace hblm {

namespace {

void strip(std::vector<Code>& c)
{
    while (!c.empty() && c.back() == 0) c.pop_back();
}

// Sign convention shared by univariate and multivariate printing: returns the
// code to print and whether it is shown with a leading minus.
std::pair<Code, bool> signed_coeff(const BaseRing& ring, Code c)
{
    Code n = ring.neg(c);
    if (n < c) return {n, true};
    if (n == c && c != 0 && !ring.is_unit(c)) return {c, true};
    return {c, false};
}

std::string coeff_text(const BaseRing& ring, Code c, bool has_monomial)
{
    if (has_monomial && c == 1) return {};
    std::string s = ring.format(c);
    if (s.find(' ') != std::string::npos) s = "(" + s + ")";
    return has_monomial ? s + "*" : s;
}

void append_term(std::string& out, const BaseRing& ring, Code c, const std::string& mono)
{
    auto [shown, minus] = signed_coeff(ring, c);
    bool has_mono = !mono.empty();
    std::string body = coeff_text(ring, shown, has_mono) + mono;
    if (out.empty()) {
        out = (minus ? "-" : "") + body;
    } else {
        out += minus ? " - " : " + ";
        out += body;
    }
}

}  // namespace

UniPoly UniPoly::from_coeffs(std::vector<Code> c)
{
    strip(c);
    return UniPoly{std::move(c)};
}

UniPoly UniPoly::binomial(int deg, Code value)
{
    std::vector<Code> c(deg + 1, 0);
    c[0] = value;
    c[deg] = 1;
    if (deg == 0) c[0] = 1;
    return from_coeffs(std::move(c));
}

UniPoly poly_add(const BaseRing& ring, const UniPoly& a, const UniPoly& b)
{
    std::vector<Code> c(std::max(a.coeffs.size(), b.coeffs.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = ring.add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
    return UniPoly::from_coeffs(std::move(c));
}

UniPoly poly_sub(const BaseRing& ring, const UniPoly& a, const UniPoly& b)
{
    std::vector<Code> c(std::max(a.coeffs.size(), b.coeffs.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = ring.sub(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
    return UniPoly::from_coeffs(std::move(c));
}

UniPoly poly_mul(const BaseRing& ring, const UniPoly& a, const UniPoly& b)
{
    if (a.coeffs.empty() || b.coeffs.empty()) return {};
    std::vector<Code> c(a.coeffs.size() + b.coeffs.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) c[i + j] = ring.add(c[i + j], ring.mul(a.coeffs[i], b.coeffs[j]));
    return UniPoly::from_coeffs(std::move(c));
}

UniPoly poly_pow(const BaseRing& ring, const UniPoly& a, int k)
{
    UniPoly out = UniPoly::from_coeffs({1});
    for (int i = 0; i < k; ++i) out = poly_mul(ring, out, a);
    return out;
}

std::string format_poly(const BaseRing& ring, const UniPoly& poly, const std::string& var)
{
    std::string out;
    for (int k = poly.degree(); k >= 0; --k) {
        Code c = poly.coeffs[k];
        if (c == 0) continue;
        std::string mono = k == 0 ? "" : k == 1 ? var : var + "^" + std::to_string(k);
        append_term(out, ring, c, mono);
    }
    return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------- MultiPoly

MultiPoly::Key MultiPoly::pack(const std::vector<int>& exponents)
{
    Key key = 0;
    for (std::size_t v = 0; v < exponents.size(); ++v) {
        if (exponents[v] < 0 || exponents[v] > kMaxExponent)
            throw Error(ErrorCode::UnsupportedCombination, "exponent out of range for packed monomials");
        key |= static_cast<Key>(exponents[v]) << (4 * v);
    }
    return key;
}

Code MultiPoly::coeff(Key key) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), key, [](const Term& t, Key k) { return t.first < k; });
    return it != terms_.end() && it->first == key ? it->second : 0;
}

MultiPolyRing::MultiPolyRing(const BaseRing& base, int nvars) : base_(&base), nvars_(nvars)
{
    if (nvars < 0 || nvars > MultiPoly::kMaxVars)
        throw Error(ErrorCode::UnsupportedCombination, "too many polynomial indeterminates");
}

MultiPoly MultiPolyRing::normalized(std::vector<MultiPoly::Term> terms) const
{
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    MultiPoly out(nvars_);
    for (const auto& [key, c] : terms) {
        if (!out.terms_.empty() && out.terms_.back().first == key) {
            out.terms_.back().second = base_->add(out.terms_.back().second, c);
        } else {
            out.terms_.emplace_back(key, c);
        }
    }
    std::erase_if(out.terms_, [](const auto& t) { return t.second == 0; });
    return out;
}

MultiPoly MultiPolyRing::constant(Code c) const { return normalized({{0, c}}); }

MultiPoly MultiPolyRing::variable(int var) const
{
    return normalized({{MultiPoly::Key{1} << (4 * var), 1}});
}

MultiPoly MultiPolyRing::monomial(const std::vector<int>& exponents, Code c) const
{
    return normalized({{MultiPoly::pack(exponents), c}});
}

MultiPoly MultiPolyRing::add(const MultiPoly& a, const MultiPoly& b) const
{
    std::vector<MultiPoly::Term> t = a.terms_;
    t.insert(t.end(), b.terms_.begin(), b.terms_.end());
    return normalized(std::move(t));
}

MultiPoly MultiPolyRing::sub(const MultiPoly& a, const MultiPoly& b) const
{
    std::vector<MultiPoly::Term> t = a.terms_;
    for (const auto& [k, c] : b.terms_) t.emplace_back(k, base_->neg(c));
    return normalized(std::move(t));
}

MultiPoly MultiPolyRing::mul(const MultiPoly& a, const MultiPoly& b) const
{
    std::vector<MultiPoly::Term> t;
    t.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) {
            Code c = base_->mul(ca, cb);
            if (c == 0) continue;
            // Per-variable exponent sums must not carry into the next nibble.
            for (int v = 0; v < nvars_; ++v)
                if (MultiPoly::exponent(ka, v) + MultiPoly::exponent(kb, v) > MultiPoly::kMaxExponent)
                    throw Error(ErrorCode::UnsupportedCombination, "monomial degree exceeds packed range");
            t.emplace_back(ka + kb, c);
        }
    return normalized(std::move(t));
}

MultiPoly MultiPolyRing::scale(const MultiPoly& a, Code c) const
{
    std::vector<MultiPoly::Term> t;
    for (const auto& [k, x] : a.terms_) t.emplace_back(k, base_->mul(x, c));
    return normalized(std::move(t));
}

MultiPoly MultiPolyRing::substitute(const MultiPoly& a, int var, Code value) const
{
    std::vector<MultiPoly::Term> t;
    for (const auto& [k, x] : a.terms_) {
        int ex = MultiPoly::exponent(k, var);
        Code c = x;
        for (int i = 0; i < ex; ++i) c = base_->mul(c, value);
        MultiPoly::Key cleared = k & ~(MultiPoly::Key{0xF} << (4 * var));
        t.emplace_back(cleared, c);
    }
    return normalized(std::move(t));
}

std::string MultiPolyRing::format(const MultiPoly& a, const std::vector<std::string>& names) const
{
    // Highest total degree first, then by reversed packed key so that the
    // last variable (X by convention) leads.
    auto terms = a.terms_;
    auto total = [&](MultiPoly::Key k) {
        int s = 0;
        for (int v = 0; v < nvars_; ++v) s += MultiPoly::exponent(k, v);
        return s;
    };
    std::sort(terms.begin(), terms.end(), [&](const auto& x, const auto& y) {
        int tx = total(x.first), ty = total(y.first);
        if (tx != ty) return tx > ty;
        return x.first > y.first;
    });
    std::string out;
    for (const auto& [k, c] : terms) {
        std::string mono;
        for (int v = nvars_ - 1; v >= 0; --v) {
            int ex = MultiPoly::exponent(k, v);
            if (ex == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += names.at(v);
            if (ex > 1) mono += "^" + std::to_string(ex);
        }
        append_term(out, *base_, c, mono);
    }
    return out.empty() ? "0" : out;
}

}  // namespace hblm

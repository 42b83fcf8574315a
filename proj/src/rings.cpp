#include "hblm/rings.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>
#include <tuple>

#include "hblm/poly.hpp"

namespace hblm {

namespace {

long long mod_pos(long long v, long long m)
{
    long long r = v % m;
    return r < 0 ? r + m : r;
}

std::string trim(std::string_view s)
{
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

long long parse_int(std::string_view key, std::string_view value)
{
    long long out = 0;
    auto* first = value.data();
    auto* last = value.data() + value.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc() || ptr != last)
        throw Error(ErrorCode::ParseError, "bad integer for '" + std::string(key) + "': " + std::string(value));
    return out;
}

// Polynomials over F_p as ascending coefficient vectors.
std::vector<int> poly_mod_p(std::vector<int> a, const std::vector<int>& m, int p)
{
    // m monic
    int dm = static_cast<int>(m.size()) - 1;
    for (int i = static_cast<int>(a.size()) - 1; i >= dm; --i) {
        int c = mod_pos(a[i], p);
        if (c == 0) continue;
        for (int k = 0; k <= dm; ++k) a[i - dm + k] = static_cast<int>(mod_pos(a[i - dm + k] - c * m[k], p));
    }
    a.resize(std::max(dm, 0));
    for (auto& c : a) c = static_cast<int>(mod_pos(c, p));
    return a;
}

}  // namespace

// ---------------------------------------------------------------- RingSpec

std::string RingSpec::serialize() const
{
    std::ostringstream os;
    os << "p=" << p << " n=" << n << " f=" << f << " eps=" << (eps ? 1 : 0) << " e=" << e << " u=" << u << " m=";
    if (m.empty()) {
        os << '-';
    } else {
        for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i];
    }
    return os.str();
}

RingSpec RingSpec::parse(std::string_view text)
{
    RingSpec spec;
    std::istringstream lines{std::string(text)};
    std::string line, tok;
    while (std::getline(lines, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream is(line);
        while (is >> tok) {
            auto eq = tok.find('=');
            if (eq == std::string::npos) throw Error(ErrorCode::ParseError, "expected key=value, got '" + tok + "'");
            std::string key = tok.substr(0, eq);
            std::string value = tok.substr(eq + 1);
            if (key == "p") {
                spec.p = static_cast<int>(parse_int(key, value));
            } else if (key == "n") {
                spec.n = static_cast<int>(parse_int(key, value));
            } else if (key == "f") {
                spec.f = static_cast<int>(parse_int(key, value));
            } else if (key == "e") {
                spec.e = static_cast<int>(parse_int(key, value));
            } else if (key == "u") {
                spec.u = parse_int(key, value);
            } else if (key == "eps") {
                spec.eps = parse_int(key, value) != 0;
            } else if (key == "m") {
                spec.m.clear();
                if (value != "-") {
                    std::string item;
                    std::istringstream ms(value);
                    while (std::getline(ms, item, ',')) spec.m.push_back(static_cast<int>(parse_int(key, trim(item))));
                }
            } else {
                throw Error(ErrorCode::ParseError, "unknown ring spec key '" + key + "'");
            }
        }
    }
    return spec;
}

std::string RingSpec::label() const
{
    std::ostringstream os;
    if (n > 1) {
        long long q = 1;
        for (int i = 0; i < n; ++i) q *= p;
        os << "Z/" << q;
    } else {
        os << 'F' << p;
    }
    if (eps) os << "[eps]";
    if (f > 1) os << " f=" << f;
    os << " e=" << e;
    if (u != 1) os << " u=" << u;
    return os.str();
}

// ---------------------------------------------------------------- BaseRing

BaseRing::BaseRing(int p, int n, bool eps) : p_(p)
{
    if (eps) {
        kind_ = Kind::DualNumbers;
        length_ = 2;
    } else if (n == 1) {
        kind_ = Kind::PrimeField;
        length_ = 1;
    } else {
        kind_ = Kind::IntegersMod;
        length_ = n;
    }
    pow_p_.resize(length_ + 1);
    pow_p_[0] = 1;
    for (int i = 1; i <= length_; ++i) {
        if (pow_p_[i - 1] > std::numeric_limits<Code>::max() / static_cast<Code>(p))
            throw Error(ErrorCode::UnsupportedCombination, "base ring too large");
        pow_p_[i] = pow_p_[i - 1] * static_cast<Code>(p);
    }
    size_ = pow_p_[length_];
}

Code BaseRing::add(Code a, Code b) const
{
    if (kind_ == Kind::DualNumbers) {
        Code P = static_cast<Code>(p_);
        return (a % P + b % P) % P + ((a / P + b / P) % P) * P;
    }
    return static_cast<Code>((static_cast<std::uint64_t>(a) + b) % size_);
}

Code BaseRing::neg(Code a) const
{
    if (kind_ == Kind::DualNumbers) {
        Code P = static_cast<Code>(p_);
        return (P - a % P) % P + ((P - a / P) % P) * P;
    }
    return (size_ - a) % size_;
}

Code BaseRing::sub(Code a, Code b) const { return add(a, neg(b)); }

Code BaseRing::mul(Code a, Code b) const
{
    if (kind_ == Kind::DualNumbers) {
        std::uint64_t P = static_cast<std::uint64_t>(p_);
        std::uint64_t a0 = a % P, a1 = a / P, b0 = b % P, b1 = b / P;
        return static_cast<Code>((a0 * b0) % P + ((a0 * b1 + a1 * b0) % P) * P);
    }
    return static_cast<Code>((static_cast<std::uint64_t>(a) * b) % size_);
}

Code BaseRing::from_int(long long v) const
{
    // Integers map through Z -> Z/p^length for Z/p^n, through F_p otherwise.
    long long m = kind_ == Kind::IntegersMod ? static_cast<long long>(size_) : p_;
    return static_cast<Code>(mod_pos(v, m));
}

int BaseRing::valuation(Code a) const
{
    if (a == 0) return length_;
    int v = 0;
    while (a % static_cast<Code>(p_) == 0) {
        a /= static_cast<Code>(p_);
        ++v;
    }
    return v;
}

Code BaseRing::inverse(Code a) const
{
    if (!is_unit(a)) throw Error(ErrorCode::NotAUnit, format(a) + " is not a unit");
    auto inv_mod = [](long long x, long long m) {
        long long g0 = m, g1 = mod_pos(x, m), s0 = 0, s1 = 1;
        while (g1 != 0) {
            long long q = g0 / g1;
            std::tie(g0, g1) = std::make_pair(g1, g0 - q * g1);
            std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
        }
        return mod_pos(s0, m);
    };
    if (kind_ == Kind::DualNumbers) {
        long long P = p_;
        long long a0 = a % p_, a1 = a / p_;
        long long i0 = inv_mod(a0, P);
        long long i1 = mod_pos(-a1 * i0 % P * i0, P);
        return static_cast<Code>(i0 + i1 * P);
    }
    return static_cast<Code>(inv_mod(a, size_));
}

Code BaseRing::uniformizer_pow(int a) const
{
    if (a >= length_) return 0;
    return pow_p_[a];
}

Code BaseRing::shift_down(Code x, int a) const
{
    assert(valuation(x) >= a);
    if (a >= length_) return 0;
    return x / pow_p_[a];
}

Code BaseRing::truncate(Code x, int a) const
{
    if (a >= length_) return x;
    return x % pow_p_[a];
}

std::string BaseRing::format(Code a) const
{
    if (kind_ != Kind::DualNumbers) return std::to_string(a);
    Code a0 = a % static_cast<Code>(p_), a1 = a / static_cast<Code>(p_);
    if (a1 == 0) return std::to_string(a0);
    std::string eps = a1 == 1 ? "eps" : std::to_string(a1) + "*eps";
    if (a0 == 0) return eps;
    return std::to_string(a0) + " + " + eps;
}

// ---------------------------------------------------------------- helpers

bool is_prime(long long n)
{
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool is_irreducible_mod_p(const std::vector<int>& poly, int p)
{
    int deg = static_cast<int>(poly.size()) - 1;
    if (deg < 1 || mod_pos(poly.back(), p) != 1) return false;
    // Trial division by every monic polynomial of degree 1..deg/2.
    for (int d = 1; 2 * d <= deg; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long idx = 0; idx < count; ++idx) {
            std::vector<int> div(d + 1);
            long long t = idx;
            for (int i = 0; i < d; ++i) {
                div[i] = static_cast<int>(t % p);
                t /= p;
            }
            div[d] = 1;
            auto r = poly_mod_p(poly, div, p);
            if (std::all_of(r.begin(), r.end(), [](int c) { return c == 0; })) return false;
        }
    }
    return true;
}

std::vector<int> default_min_poly(int p, int f)
{
    long long count = 1;
    for (int i = 0; i < f; ++i) count *= p;
    for (long long idx = 0; idx < count; ++idx) {
        std::vector<int> poly(f + 1);
        long long t = idx;
        for (int i = 0; i < f; ++i) {
            poly[i] = static_cast<int>(t % p);
            t /= p;
        }
        poly[f] = 1;
        if (is_irreducible_mod_p(poly, p)) return poly;
    }
    throw Error(ErrorCode::ReducibleMinPoly, "no irreducible polynomial found");
}

// ---------------------------------------------------------------- RingCtx

RingCtx build_ring(const RingSpec& spec_in)
{
    RingSpec spec = spec_in;
    if (!is_prime(spec.p)) throw Error(ErrorCode::NotPrime, std::to_string(spec.p) + " is not prime");
    if (spec.n < 1 || spec.e < 1 || spec.f < 1)
        throw Error(ErrorCode::InvalidSpec, "n, e and f must be at least 1");
    if (spec.f > 1 && spec.n > 1)
        throw Error(ErrorCode::UnsupportedCombination, "f > 1 requires n = 1 (Galois rings of length > 1 are not supported)");
    if (spec.eps && spec.n > 1)
        throw Error(ErrorCode::UnsupportedCombination, "dual numbers require n = 1");
    if (spec.u % spec.p == 0) throw Error(ErrorCode::InvalidSpec, "u must be a unit");
    if (spec.f == 1) {
        if (!spec.m.empty() && spec.m.size() != 2)
            throw Error(ErrorCode::InvalidSpec, "m must be '-' or linear when f = 1");
        spec.m.clear();
    } else {
        if (spec.m.empty()) spec.m = default_min_poly(spec.p, spec.f);
        if (static_cast<int>(spec.m.size()) != spec.f + 1)
            throw Error(ErrorCode::InvalidSpec, "m must have degree f");
        for (auto& c : spec.m) c = static_cast<int>(mod_pos(c, spec.p));
        if (!is_irreducible_mod_p(spec.m, spec.p))
            throw Error(ErrorCode::ReducibleMinPoly, "m is not irreducible modulo p");
    }
    if (spec.e * spec.f > MultiPoly::kMaxVars - 1)
        throw Error(ErrorCode::UnsupportedCombination, "e*f must be at most 15");
    return RingCtx(spec);
}

RingCtx::RingCtx(const RingSpec& spec) : spec_(spec), base_(spec.p, spec.n, spec.eps)
{
    const int e = spec_.e, f = spec_.f, gg = e * f;
    pu_ = base_.mul(base_.prime(), base_.from_int(spec_.u));

    // w^k reduced modulo m, for k = 0..2f-2, as F_p coefficient vectors.
    std::vector<std::vector<int>> wpow(2 * f - 1, std::vector<int>(f, 0));
    for (int k = 0; k < 2 * f - 1; ++k) {
        std::vector<int> mono(k + 1, 0);
        mono[k] = 1;
        auto r = f > 1 ? poly_mod_p(mono, spec_.m, spec_.p) : std::vector<int>{k == 0 ? 1 : 0};
        r.resize(f, 0);
        wpow[k] = r;
    }

    structure_.assign(static_cast<std::size_t>(gg) * gg * gg, 0);
    for (int a = 0; a < f; ++a)
        for (int c = 0; c < e; ++c)
            for (int a2 = 0; a2 < f; ++a2)
                for (int c2 = 0; c2 < e; ++c2) {
                    int k = monomial_index(a, c), l = monomial_index(a2, c2);
                    int pc = c + c2;
                    Code scale = 1;
                    if (pc >= e) {
                        pc -= e;
                        scale = pu_;
                    }
                    for (int s = 0; s < f; ++s) {
                        Code w = base_.from_int(wpow[a + a2][s]);
                        Code& slot = structure_[(static_cast<std::size_t>(k) * gg + l) * gg + monomial_index(s, pc)];
                        slot = base_.add(slot, base_.mul(w, scale));
                    }
                }

    monomial_rep_.reserve(gg);
    for (int k = 0; k < gg; ++k) {
        RMatrix rep(gg, gg);
        for (int l = 0; l < gg; ++l) {
            auto col = basis_product(k, l);
            for (int r = 0; r < gg; ++r) rep(r, l) = col[r];
        }
        monomial_rep_.push_back(std::move(rep));
    }

    auto on_m = [&](const RMatrix& rep) {
        RMatrix out(2 * gg, 2 * gg);
        for (int r = 0; r < gg; ++r)
            for (int c = 0; c < gg; ++c) {
                out(r, c) = rep(r, c);
                out(gg + r, gg + c) = rep(r, c);
            }
        return out;
    };
    pi_on_m_ = on_m(monomial_rep_[e > 1 ? monomial_index(0, 1) : 0]);
    if (e == 1) {
        // pi = p*u when e = 1.
        RMatrix rep(gg, gg);
        for (int r = 0; r < gg; ++r) rep(r, r) = pu_;
        pi_on_m_ = on_m(rep);
    }
    omega_on_m_ = on_m(monomial_rep_[f > 1 ? monomial_index(1, 0) : 0]);
}

std::uint64_t RingCtx::size(Level level) const
{
    std::uint64_t s = base_.size();
    if (level == Level::Base) return s;
    std::uint64_t out = 1;
    for (int i = 0; i < g(); ++i) {
        if (out > std::numeric_limits<std::uint64_t>::max() / s) return std::numeric_limits<std::uint64_t>::max();
        out *= s;
    }
    return out;
}

std::string RingCtx::monomial_name(int index) const
{
    int a = index / spec_.e, c = index % spec_.e;
    std::string out;
    if (a > 0) out += a == 1 ? "w" : "w^" + std::to_string(a);
    if (c > 0) {
        if (!out.empty()) out += '*';
        out += c == 1 ? "pi" : "pi^" + std::to_string(c);
    }
    return out.empty() ? "1" : out;
}

void RingCtx::mul_into(std::span<const Code> a, std::span<const Code> b, std::span<Code> out) const
{
    const int gg = g();
    std::fill(out.begin(), out.end(), 0);
    for (int k = 0; k < gg; ++k) {
        if (a[k] == 0) continue;
        for (int l = 0; l < gg; ++l) {
            if (b[l] == 0) continue;
            Code ab = base_.mul(a[k], b[l]);
            auto prod = basis_product(k, l);
            for (int s = 0; s < gg; ++s)
                if (prod[s] != 0) out[s] = base_.add(out[s], base_.mul(ab, prod[s]));
        }
    }
}

RMatrix RingCtx::regular_rep(std::span<const Code> a) const
{
    const int gg = g();
    RMatrix out(gg, gg);
    for (int k = 0; k < gg; ++k) {
        if (a[k] == 0) continue;
        const RMatrix& rep = monomial_rep_[k];
        for (int r = 0; r < gg; ++r)
            for (int c = 0; c < gg; ++c) out(r, c) = base_.add(out(r, c), base_.mul(a[k], rep(r, c)));
    }
    return out;
}

RMatrix RingCtx::action_on_M(std::span<const Code> a) const
{
    const int gg = g();
    RMatrix rep = regular_rep(a);
    RMatrix out(2 * gg, 2 * gg);
    for (int r = 0; r < gg; ++r)
        for (int c = 0; c < gg; ++c) {
            out(r, c) = rep(r, c);
            out(gg + r, gg + c) = rep(r, c);
        }
    return out;
}

std::vector<const RMatrix*> RingCtx::algebra_generators_on_M() const
{
    std::vector<const RMatrix*> gens;
    if (spec_.e > 1) gens.push_back(&pi_on_m_);
    if (spec_.f > 1) gens.push_back(&omega_on_m_);
    return gens;
}

void RingCtx::check_level(const Elem& a) const
{
    std::size_t want = a.level == Level::Base ? 1 : static_cast<std::size_t>(g());
    if (a.coeffs.size() != want) throw Error(ErrorCode::DimensionMismatch, "element has wrong coefficient count");
}

Elem RingCtx::zero(Level level) const
{
    return Elem{level, std::vector<Code>(level == Level::Base ? 1 : g(), 0)};
}

Elem RingCtx::one(Level level) const
{
    Elem out = zero(level);
    out.coeffs[0] = 1;
    return out;
}

Elem RingCtx::from_int(long long v, Level level) const
{
    Elem out = zero(level);
    out.coeffs[0] = base_.from_int(v);
    return out;
}

Elem RingCtx::pi() const
{
    Elem out = zero(Level::Full);
    if (spec_.e > 1) {
        out.coeffs[monomial_index(0, 1)] = 1;
    } else {
        out.coeffs[0] = pu_;
    }
    return out;
}

Elem RingCtx::omega() const
{
    Elem out = zero(Level::Full);
    if (spec_.f > 1) {
        out.coeffs[monomial_index(1, 0)] = 1;
    } else {
        out.coeffs[0] = 1;
    }
    return out;
}

Elem RingCtx::eps(Level level) const
{
    if (!spec_.eps) throw Error(ErrorCode::UnsupportedCombination, "ring has no eps");
    Elem out = zero(level);
    out.coeffs[0] = static_cast<Code>(spec_.p);
    return out;
}

Elem RingCtx::lift(const Elem& base_elem) const
{
    if (base_elem.level != Level::Base) throw Error(ErrorCode::LevelMismatch, "lift expects a base element");
    Elem out = zero(Level::Full);
    out.coeffs[0] = base_elem.coeffs.at(0);
    return out;
}

Elem RingCtx::arith(const Elem& a, const Elem& b, ArithOp op) const
{
    if (a.level != b.level) throw Error(ErrorCode::LevelMismatch, "operands live on different tower levels");
    check_level(a);
    check_level(b);
    Elem out = zero(a.level);
    const std::size_t n = a.coeffs.size();
    switch (op) {
    case ArithOp::Add:
        for (std::size_t i = 0; i < n; ++i) out.coeffs[i] = base_.add(a.coeffs[i], b.coeffs[i]);
        break;
    case ArithOp::Sub:
        for (std::size_t i = 0; i < n; ++i) out.coeffs[i] = base_.sub(a.coeffs[i], b.coeffs[i]);
        break;
    case ArithOp::Neg:
        for (std::size_t i = 0; i < n; ++i) out.coeffs[i] = base_.neg(a.coeffs[i]);
        break;
    case ArithOp::Mul:
        if (a.level == Level::Base) {
            out.coeffs[0] = base_.mul(a.coeffs[0], b.coeffs[0]);
        } else {
            mul_into(a.coeffs, b.coeffs, out.coeffs);
        }
        break;
    }
    return out;
}

Elem RingCtx::pow(const Elem& a, int k) const
{
    Elem out = one(a.level);
    for (int i = 0; i < k; ++i) out = mul(out, a);
    return out;
}

bool RingCtx::is_unit(const Elem& a) const
{
    check_level(a);
    if (a.level == Level::Base) return base_.is_unit(a.coeffs[0]);
    // O_R is local with residue field F_{p^f}: a unit iff its residue image
    // (the pi^0 part modulo the base maximal ideal) is nonzero.
    for (int w = 0; w < spec_.f; ++w)
        if (base_.residue(a.coeffs[monomial_index(w, 0)]) != 0) return true;
    return false;
}

Elem RingCtx::invert(const Elem& a) const
{
    if (!is_unit(a)) throw Error(ErrorCode::NotAUnit, format(a) + " is not a unit");
    if (a.level == Level::Base) return Elem{Level::Base, {base_.inverse(a.coeffs[0])}};
    // Solve regular_rep(a) * x = 1 by Gauss-Jordan; the matrix is invertible
    // because its determinant is the norm of a unit.
    const int gg = g();
    RMatrix m = regular_rep(a.coeffs);
    std::vector<Code> rhs(gg, 0);
    rhs[0] = 1;
    for (int col = 0; col < gg; ++col) {
        int piv = -1;
        for (int r = col; r < gg; ++r)
            if (base_.is_unit(m(r, col))) {
                piv = r;
                break;
            }
        if (piv < 0) throw Error(ErrorCode::NotAUnit, "singular regular representation");
        if (piv != col) {
            for (int c = 0; c < gg; ++c) std::swap(m(piv, c), m(col, c));
            std::swap(rhs[piv], rhs[col]);
        }
        Code inv = base_.inverse(m(col, col));
        for (int c = 0; c < gg; ++c) m(col, c) = base_.mul(m(col, c), inv);
        rhs[col] = base_.mul(rhs[col], inv);
        for (int r = 0; r < gg; ++r) {
            if (r == col || m(r, col) == 0) continue;
            Code fct = m(r, col);
            for (int c = 0; c < gg; ++c) m(r, c) = base_.sub(m(r, c), base_.mul(fct, m(col, c)));
            rhs[r] = base_.sub(rhs[r], base_.mul(fct, rhs[col]));
        }
    }
    return Elem{Level::Full, rhs};
}

std::vector<Elem> RingCtx::enumerate_elements(Level level) const
{
    const std::size_t len = level == Level::Base ? 1 : static_cast<std::size_t>(g());
    const std::uint64_t total = size(level);
    if (total > (1ull << 24)) throw Error(ErrorCode::BudgetExceeded, "ring level too large to enumerate");
    std::vector<Elem> out;
    out.reserve(total);
    Elem cur{level, std::vector<Code>(len, 0)};
    for (std::uint64_t i = 0; i < total; ++i) {
        out.push_back(cur);
        for (std::size_t k = 0; k < len; ++k) {
            if (++cur.coeffs[k] < base_.size()) break;
            cur.coeffs[k] = 0;
        }
    }
    return out;
}

Code RingCtx::trace_reg(std::span<const Code> a) const
{
    RMatrix rep = regular_rep(a);
    Code tr = 0;
    for (int i = 0; i < g(); ++i) tr = base_.add(tr, rep(i, i));
    return tr;
}

Elem RingCtx::trace_reg(const Elem& a) const
{
    if (a.level != Level::Full) throw Error(ErrorCode::LevelMismatch, "trace_reg expects a full-level element");
    check_level(a);
    return Elem{Level::Base, {trace_reg(std::span<const Code>(a.coeffs))}};
}

DifferentGenerator RingCtx::different_generator() const
{
    if (!is_tame())
        throw Error(ErrorCode::WildRamification, "e = " + std::to_string(spec_.e) + " is divisible by p");
    return DifferentGenerator{base_.inverse(base_.from_int(spec_.e)), 1 - spec_.e};
}

Code RingCtx::trace_with_different(std::span<const Code> a) const
{
    const DifferentGenerator d = different_generator();
    // d * w^s pi^c = unit * w^s pi^(c + exponent). Nonnegative exponents are
    // honest elements whose trace is the regular-representation trace; the
    // exponents in (-e, 0) have trace zero, since pi^(-k) = pi^(e-k) / (p u)
    // and pi^(e-k) is traceless in characteristic zero.
    Code total = 0;
    std::vector<Code> mono(g(), 0);
    for (int s = 0; s < spec_.f; ++s)
        for (int c = 0; c < spec_.e; ++c) {
            Code coeff = a[monomial_index(s, c)];
            if (coeff == 0) continue;
            int exponent = c + d.pi_exponent;
            if (exponent < 0) continue;
            std::fill(mono.begin(), mono.end(), 0);
            mono[monomial_index(s, exponent)] = 1;
            total = base_.add(total, base_.mul(coeff, base_.mul(d.unit, trace_reg(std::span<const Code>(mono)))));
        }
    return total;
}

std::string RingCtx::format(const Elem& a) const
{
    if (a.level == Level::Base) return base_.format(a.coeffs.at(0));
    std::string out;
    for (int k = 0; k < g(); ++k) {
        Code c = a.coeffs[k];
        if (c == 0) continue;
        std::string coeff = base_.format(c);
        std::string term;
        if (k == 0) {
            term = coeff;
        } else if (c == 1) {
            term = monomial_name(k);
        } else {
            bool compound = coeff.find(' ') != std::string::npos;
            term = (compound ? "(" + coeff + ")" : coeff) + "*" + monomial_name(k);
        }
        if (!out.empty()) out += " + ";
        out += term;
    }
    return out.empty() ? "0" : out;
}

RingSpec RingCtx::residue_spec() const
{
    RingSpec r = spec_;
    r.n = 1;
    r.eps = false;
    r.u = static_cast<long>(mod_pos(spec_.u, spec_.p));
    return r;
}

}  // namespace hblm

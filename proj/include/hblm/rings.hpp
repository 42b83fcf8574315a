#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hblm/error.hpp"
#include "hblm/matrix.hpp"

namespace hblm {

/// Description of a coefficient tower R -> O_R = R[w]/(m(w))[pi]/(pi^e - p*u).
///
/// The base R is F_p (n = 1), Z/p^n, or the dual numbers F_p[eps]. The
/// unramified part of degree f needs n = 1 so that O_R never involves a
/// Galois ring of higher length.
struct RingSpec {
    int p = 2;
    int n = 1;
    int f = 1;
    bool eps = false;
    int e = 1;
    long u = 1;
    /// Coefficients of the monic unramified minimal polynomial in ascending
    /// degree (leading 1 included). Empty when f == 1; when f > 1 and empty,
    /// build_ring picks the first irreducible polynomial in lexicographic order.
    std::vector<int> m;

    /// Single line `p=3 n=1 f=1 eps=0 e=2 u=1 m=-`.
    std::string serialize() const;
    /// Parses the serialized form; `#` starts a comment running to the end of
    /// the line. Unknown keys are rejected, missing keys keep
    /// their defaults, so the same syntax works for config files.
    static RingSpec parse(std::string_view text);
    /// Short label such as `F3[eps] e=2` used in logs and report file names.
    std::string label() const;

    friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

/// Finite chain ring with residue field F_p: F_p, Z/p^n or F_p[eps].
/// Every element is d0 + d1*t + ... + d_{l-1}*t^{l-1} with digits in [0, p),
/// where t is the uniformizer (p or eps) and l the length.
class BaseRing {
public:
    enum class Kind { PrimeField, IntegersMod, DualNumbers };

    BaseRing(int p, int n, bool eps);

    Kind kind() const noexcept { return kind_; }
    int p() const noexcept { return p_; }
    /// Nilpotency index of the maximal ideal (t^length = 0).
    int length() const noexcept { return length_; }
    Code size() const noexcept { return size_; }
    bool is_field() const noexcept { return length_ == 1; }

    Code add(Code a, Code b) const;
    Code sub(Code a, Code b) const;
    Code neg(Code a) const;
    Code mul(Code a, Code b) const;
    Code from_int(long long v) const;

    /// Index of the first nonzero digit; length() for zero.
    int valuation(Code a) const;
    bool is_unit(Code a) const { return a % static_cast<Code>(p_) != 0; }
    Code inverse(Code a) const;
    Code residue(Code a) const { return a % static_cast<Code>(p_); }
    /// t^a (zero once a >= length()).
    Code uniformizer_pow(int a) const;
    /// Canonical quotient q with t^a * q = x; requires valuation(x) >= a.
    Code shift_down(Code x, int a) const;
    /// Canonical representative of x modulo t^a.
    Code truncate(Code x, int a) const;
    /// The image of the rational prime p in this ring.
    Code prime() const { return from_int(p_); }

    std::string format(Code a) const;

private:
    Kind kind_;
    int p_;
    int length_;
    Code size_;
    std::vector<Code> pow_p_;  // p^k, k = 0..length
};

enum class Level { Base, Full };

/// An element of either tower level. Base-level elements carry one
/// coefficient; full-level elements carry g = e*f coefficients over the
/// monomials w^a pi^c ordered by w-degree, then pi-degree.
struct Elem {
    Level level = Level::Base;
    std::vector<Code> coeffs;

    friend bool operator==(const Elem&, const Elem&) = default;
    friend auto operator<=>(const Elem&, const Elem&) = default;
};

enum class ArithOp { Add, Sub, Mul, Neg };

/// The inverse different d = (e*pi^(e-1))^(-1) kept as unit * pi^exponent.
struct DifferentGenerator {
    Code unit = 1;
    int pi_exponent = 0;
};

/// Immutable arithmetic context for a tower. Shareable across threads.
class RingCtx {
public:
    explicit RingCtx(const RingSpec& spec);

    const RingSpec& spec() const noexcept { return spec_; }
    const BaseRing& base() const noexcept { return base_; }
    int p() const noexcept { return spec_.p; }
    int e() const noexcept { return spec_.e; }
    int f() const noexcept { return spec_.f; }
    /// R-rank of O_R.
    int g() const noexcept { return spec_.e * spec_.f; }
    bool is_tame() const noexcept { return spec_.e % spec_.p != 0; }
    bool base_is_field() const noexcept { return base_.is_field(); }
    bool totally_ramified() const noexcept { return spec_.f == 1; }
    /// p*u inside the base ring; the value of pi^e.
    Code p_times_u() const noexcept { return pu_; }

    /// Number of elements of a level (saturates at UINT64_MAX).
    std::uint64_t size(Level level) const;
    int monomial_index(int w_degree, int pi_degree) const { return w_degree * spec_.e + pi_degree; }
    std::string monomial_name(int index) const;

    // Raw full-level arithmetic on coefficient vectors of length g.
    void mul_into(std::span<const Code> a, std::span<const Code> b, std::span<Code> out) const;
    /// Coefficients of b_k * b_l in the monomial basis.
    std::span<const Code> basis_product(int k, int l) const
    {
        return {structure_.data() + (static_cast<std::size_t>(k) * g() + l) * g(), static_cast<std::size_t>(g())};
    }

    /// Regular representation: g x g matrix of multiplication by basis monomial k.
    const RMatrix& monomial_rep(int k) const { return monomial_rep_[k]; }
    RMatrix regular_rep(std::span<const Code> a) const;
    /// Multiplication by pi / w on M = O_R^2 in the standard R-basis
    /// f1*b_0..f1*b_{g-1}, f2*b_0..f2*b_{g-1}.
    const RMatrix& pi_on_M() const noexcept { return pi_on_m_; }
    const RMatrix& omega_on_M() const noexcept { return omega_on_m_; }
    RMatrix action_on_M(std::span<const Code> a) const;
    /// Generators of O_R as an R-algebra whose invariance defines O-submodules.
    std::vector<const RMatrix*> algebra_generators_on_M() const;

    // Element-level API.
    Elem zero(Level level) const;
    Elem one(Level level) const;
    Elem from_int(long long v, Level level) const;
    Elem pi() const;
    Elem omega() const;
    Elem eps(Level level) const;
    Elem lift(const Elem& base_elem) const;
    Elem arith(const Elem& a, const Elem& b, ArithOp op) const;
    Elem add(const Elem& a, const Elem& b) const { return arith(a, b, ArithOp::Add); }
    Elem sub(const Elem& a, const Elem& b) const { return arith(a, b, ArithOp::Sub); }
    Elem mul(const Elem& a, const Elem& b) const { return arith(a, b, ArithOp::Mul); }
    Elem neg(const Elem& a) const { return arith(a, a, ArithOp::Neg); }
    Elem pow(const Elem& a, int k) const;
    bool is_unit(const Elem& a) const;
    Elem invert(const Elem& a) const;
    /// Every element exactly once; the first coefficient varies fastest.
    std::vector<Elem> enumerate_elements(Level level) const;

    /// Trace of multiplication by a on O_R as a free R-module.
    Elem trace_reg(const Elem& a) const;
    Code trace_reg(std::span<const Code> a) const;
    DifferentGenerator different_generator() const;
    /// tr(d * a) for a in O_R, with d the inverse different.
    Code trace_with_different(std::span<const Code> a) const;

    std::string format(const Elem& a) const;

    /// Same tower over the residue field F_p.
    RingSpec residue_spec() const;

private:
    void check_level(const Elem& a) const;

    RingSpec spec_;
    BaseRing base_;
    Code pu_ = 0;
    std::vector<Code> structure_;  // g*g*g
    std::vector<RMatrix> monomial_rep_;
    RMatrix pi_on_m_;
    RMatrix omega_on_m_;
};

/// Validates the spec and builds the context.
RingCtx build_ring(const RingSpec& spec);

bool is_prime(long long n);
/// True iff the monic polynomial (ascending coefficients) is irreducible over F_p.
bool is_irreducible_mod_p(const std::vector<int>& poly, int p);
/// First monic irreducible polynomial of degree f over F_p in lexicographic order.
std::vector<int> default_min_poly(int p, int f);

}  // namespace hblm

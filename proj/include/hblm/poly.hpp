#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hblm/rings.hpp"

namespace hblm {

/// Univariate polynomial over the base ring, ascending coefficients, no
/// trailing zeros (the zero polynomial has no coefficients).
struct UniPoly {
    std::vector<Code> coeffs;

    static UniPoly from_coeffs(std::vector<Code> c);
    /// X^deg + constant_term.
    static UniPoly binomial(int deg, Code constant_term);
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    Code coeff(int k) const { return k >= 0 && k < static_cast<int>(coeffs.size()) ? coeffs[k] : 0; }
    bool is_monic() const { return !coeffs.empty() && coeffs.back() == 1; }

    friend bool operator==(const UniPoly&, const UniPoly&) = default;
};

UniPoly poly_add(const BaseRing& ring, const UniPoly& a, const UniPoly& b);
UniPoly poly_sub(const BaseRing& ring, const UniPoly& a, const UniPoly& b);
UniPoly poly_mul(const BaseRing& ring, const UniPoly& a, const UniPoly& b);
UniPoly poly_pow(const BaseRing& ring, const UniPoly& a, int k);

/// Renders with the sign convention of the Eisenstein polynomial: a
/// coefficient c is written as "- (-c)" when -c has the smaller digit code, or
/// when c = -c is a nonzero nonunit (characteristic 2 nilpotents), so that
/// X^2 - eps*X and X^2 - 2 read naturally.
std::string format_poly(const BaseRing& ring, const UniPoly& poly, const std::string& var = "X");

/// Sparse polynomial in up to 16 indeterminates with exponents below 16,
/// terms kept sorted by packed exponent key.
class MultiPoly {
public:
    static constexpr int kMaxVars = 16;
    static constexpr int kMaxExponent = 15;

    using Key = std::uint64_t;
    using Term = std::pair<Key, Code>;

    MultiPoly() = default;
    explicit MultiPoly(int nvars) : nvars_(nvars) {}

    int nvars() const noexcept { return nvars_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    static Key pack(const std::vector<int>& exponents);
    static int exponent(Key key, int var) { return static_cast<int>((key >> (4 * var)) & 0xF); }

    /// Coefficient of the monomial with the given packed key.
    Code coeff(Key key) const;

    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

private:
    friend class MultiPolyRing;
    int nvars_ = 0;
    std::vector<Term> terms_;
};

/// Arithmetic on MultiPoly over a base ring.
class MultiPolyRing {
public:
    MultiPolyRing(const BaseRing& base, int nvars);

    const BaseRing& base() const noexcept { return *base_; }
    int nvars() const noexcept { return nvars_; }

    MultiPoly zero() const { return MultiPoly(nvars_); }
    MultiPoly one() const { return constant(1); }
    MultiPoly constant(Code c) const;
    MultiPoly variable(int var) const;
    MultiPoly monomial(const std::vector<int>& exponents, Code c) const;

    MultiPoly add(const MultiPoly& a, const MultiPoly& b) const;
    MultiPoly sub(const MultiPoly& a, const MultiPoly& b) const;
    MultiPoly mul(const MultiPoly& a, const MultiPoly& b) const;
    MultiPoly scale(const MultiPoly& a, Code c) const;
    /// Replaces `var` by the constant value.
    MultiPoly substitute(const MultiPoly& a, int var, Code value) const;

    std::string format(const MultiPoly& a, const std::vector<std::string>& names) const;

private:
    MultiPoly normalized(std::vector<MultiPoly::Term> terms) const;

    const BaseRing* base_;
    int nvars_;
};

/// Division-free characteristic polynomial det(X*I - A) of an n x n matrix
/// given row-major, by Berkowitz's recurrence over leading principal
/// submatrices. Works over any commutative ring: only +, -, * are used.
/// Returns the n+1 ascending coefficients (monic).
template <class T, class Ring>
std::vector<T> berkowitz(const Ring& ring, std::size_t n, const std::vector<T>& a, const T& zero, const T& one)
{
    if (n == 0) return {one};
    auto at = [&](std::size_t r, std::size_t c) -> const T& { return a[r * n + c]; };

    // Descending coefficients of the charpoly of the leading r x r block.
    std::vector<T> vect{one, ring.sub(zero, at(0, 0))};
    for (std::size_t r = 1; r < n; ++r) {
        // Block [[A_r, col], [row, diag]] with A_r the leading r x r block.
        std::vector<T> q;
        q.reserve(r + 2);
        q.push_back(one);
        q.push_back(ring.sub(zero, at(r, r)));
        std::vector<T> w(r);
        for (std::size_t i = 0; i < r; ++i) w[i] = at(i, r);
        for (std::size_t k = 0; k < r; ++k) {
            T dot = zero;
            for (std::size_t i = 0; i < r; ++i) dot = ring.add(dot, ring.mul(at(r, i), w[i]));
            q.push_back(ring.sub(zero, dot));
            if (k + 1 < r) {
                std::vector<T> next(r, zero);
                for (std::size_t i = 0; i < r; ++i)
                    for (std::size_t j = 0; j < r; ++j) next[i] = ring.add(next[i], ring.mul(at(i, j), w[j]));
                w = std::move(next);
            }
        }
        // Multiply by the lower-triangular Toeplitz matrix with first column q.
        std::vector<T> next(r + 2, zero);
        for (std::size_t i = 0; i < r + 2; ++i)
            for (std::size_t k = 0; k <= std::min(i, r); ++k) next[i] = ring.add(next[i], ring.mul(q[i - k], vect[k]));
        vect = std::move(next);
    }
    return {vect.rbegin(), vect.rend()};
}

}  // namespace hblm

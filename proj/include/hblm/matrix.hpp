#pragma once

#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace hblm {

/// Element of a base chain ring, stored as its digit expansion
/// d0 + d1*t + d2*t^2 + ... packed as d0 + d1*p + d2*p^2 + ...
using Code = std::uint32_t;

/// Dense row-major matrix of base-ring codes. Arithmetic lives in linalg.hpp
/// because every operation needs the ring.
class RMatrix {
public:
    RMatrix() = default;
    RMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    RMatrix(std::size_t rows, std::size_t cols, std::vector<Code> data)
        : rows_(rows), cols_(cols), data_(std::move(data))
    {
        assert(data_.size() == rows_ * cols_);
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Code& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Code operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Code> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Code> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    std::vector<Code> column(std::size_t c) const
    {
        std::vector<Code> out(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
        return out;
    }

    const std::vector<Code>& data() const noexcept { return data_; }

    RMatrix transposed() const
    {
        RMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    static RMatrix identity(std::size_t n)
    {
        RMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    bool is_zero() const
    {
        for (Code c : data_)
            if (c != 0) return false;
        return true;
    }

    friend bool operator==(const RMatrix&, const RMatrix&) = default;
    friend auto operator<=>(const RMatrix& a, const RMatrix& b)
    {
        if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
        if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
        return a.data_ <=> b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Code> data_;
};

}  // namespace hblm

#pragma once

#include <cstdint>
#include <vector>

#include "char2/coeffring.hpp"

namespace char2 {

// Dense matrix over an arbitrary coefficient field, used for the exact rank /
// kernel computations that stay small. Heavy F2 eliminations go through
// BitMatrix instead.
class ScalarMat {
public:
    ScalarMat(size_t rows, size_t cols, const FieldSpec& ring)
        : rows_(rows), cols_(cols), ring_(ring), a_(rows * cols, Scalar::zero(ring)) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const FieldSpec& ring() const { return ring_; }

    Scalar& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    const Scalar& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

    // In-place reduced row echelon form; returns pivot columns. Requires a
    // field.
    std::vector<size_t> rref();
    size_t rank() const;
    // Basis of the right kernel, one vector per non-pivot column, each in
    // reduced echelon form (unit at its free column).
    std::vector<std::vector<Scalar>> kernel_basis() const;

private:
    size_t rows_, cols_;
    FieldSpec ring_;
    std::vector<Scalar> a_;
};

// Row-major bit matrix over F2.
class BitMatrix {
public:
    BitMatrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), stride_((cols + 63) / 64), bits_(rows * stride_, 0) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    bool get(size_t r, size_t c) const {
        return (bits_[r * stride_ + c / 64] >> (c % 64)) & 1u;
    }
    void set(size_t r, size_t c, bool v) {
        uint64_t& w = bits_[r * stride_ + c / 64];
        uint64_t m = uint64_t{1} << (c % 64);
        w = v ? (w | m) : (w & ~m);
    }
    void xor_row(size_t dst, size_t src) {
        uint64_t* d = &bits_[dst * stride_];
        const uint64_t* s = &bits_[src * stride_];
        for (size_t i = 0; i < stride_; ++i) d[i] ^= s[i];
    }
    void swap_rows(size_t a, size_t b) {
        if (a == b) return;
        for (size_t i = 0; i < stride_; ++i)
            std::swap(bits_[a * stride_ + i], bits_[b * stride_ + i]);
    }
    bool row_is_zero(size_t r) const {
        const uint64_t* p = &bits_[r * stride_];
        for (size_t i = 0; i < stride_; ++i)
            if (p[i]) return false;
        return true;
    }

    std::vector<size_t> rref();
    size_t rank() const;
    std::vector<std::vector<uint8_t>> kernel_basis() const;

private:
    size_t rows_, cols_, stride_;
    std::vector<uint64_t> bits_;
};

} // namespace char2

#include "char2/linalg.hpp"

namespace char2 {

std::vector<size_t> ScalarMat::rref() {
    require(ring_.is_field(), Errc::InvalidConfig, "rref needs a field");
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < cols_ && row < rows_; ++col) {
        size_t sel = row;
        while (sel < rows_ && at(sel, col).is_zero()) ++sel;
        if (sel == rows_) continue;
        for (size_t c = 0; c < cols_; ++c) std::swap(at(row, c), at(sel, c));
        Scalar pinv = at(row, col).inv();
        for (size_t c = col; c < cols_; ++c) at(row, c) = at(row, c) * pinv;
        for (size_t r = 0; r < rows_; ++r) {
            if (r == row || at(r, col).is_zero()) continue;
            Scalar f = at(r, col);
            for (size_t c = col; c < cols_; ++c)
                at(r, c) = at(r, c) - f * at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

size_t ScalarMat::rank() const {
    ScalarMat tmp = *this;
    return tmp.rref().size();
}

std::vector<std::vector<Scalar>> ScalarMat::kernel_basis() const {
    ScalarMat tmp = *this;
    std::vector<size_t> pivots = tmp.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(cols_, Scalar::zero(ring_));
        v[free] = Scalar::one(ring_);
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -tmp.at(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<size_t> BitMatrix::rref() {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < cols_ && row < rows_; ++col) {
        size_t sel = row;
        while (sel < rows_ && !get(sel, col)) ++sel;
        if (sel == rows_) continue;
        swap_rows(row, sel);
        for (size_t r = 0; r < rows_; ++r)
            if (r != row && get(r, col)) xor_row(r, row);
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

size_t BitMatrix::rank() const {
    BitMatrix tmp = *this;
    return tmp.rref().size();
}

std::vector<std::vector<uint8_t>> BitMatrix::kernel_basis() const {
    BitMatrix tmp = *this;
    std::vector<size_t> pivots = tmp.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<uint8_t>> basis;
    for (size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<uint8_t> v(cols_, 0);
        v[free] = 1;
        for (size_t r = 0; r < pivots.size(); ++r)
            if (tmp.get(r, free)) v[pivots[r]] = 1;
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace char2

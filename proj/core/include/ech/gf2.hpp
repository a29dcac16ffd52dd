// Dense bit-packed GF(2) matrices, just enough for boundary ranks.
#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

namespace ech {

class Gf2Matrix {
public:
    Gf2Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), words_((cols + 63) / 64),
          data_(rows * words_, 0) {}

    void set(std::size_t r, std::size_t c) {
        data_[r * words_ + c / 64] |= std::uint64_t{1} << (c % 64);
    }
    bool get(std::size_t r, std::size_t c) const {
        return (data_[r * words_ + c / 64] >> (c % 64)) & 1;
    }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    // Rank by Gaussian elimination; the matrix is consumed.
    std::size_t rank() && {
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t pivot = r;
            while (pivot < rows_ && !get(pivot, c)) ++pivot;
            if (pivot == rows_) continue;
            std::swap_ranges(data_.begin() + r * words_,
                             data_.begin() + (r + 1) * words_,
                             data_.begin() + pivot * words_);
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r || !get(i, c)) continue;
                for (std::size_t w = 0; w < words_; ++w)
                    data_[i * words_ + w] ^= data_[r * words_ + w];
            }
            ++r;
        }
        return r;
    }

private:
    std::size_t rows_, cols_, words_;
    std::vector<std::uint64_t> data_;
};

}  // namespace ech

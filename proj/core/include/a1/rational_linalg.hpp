#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace a1 {

// Dense row-major matrix over Q for rank computations.
struct RatMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<mpq_class> data; // rows*cols entries

    RatMatrix() = default;
    RatMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
    mpq_class& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const mpq_class& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

// Rank over Q by Gaussian elimination. Destroys its argument.
std::size_t rank_destructive(RatMatrix& m);

// Kernel dimension: cols - rank.
std::size_t kernel_dim(RatMatrix m);

} // namespace a1

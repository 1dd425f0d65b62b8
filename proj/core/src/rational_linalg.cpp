#include "a1/rational_linalg.hpp"

#include <utility>

namespace a1 {

std::size_t rank_destructive(RatMatrix& m) {
    std::size_t rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
        // Pick the shortest nonzero pivot in this column to limit growth.
        std::size_t pivot = m.rows;
        std::size_t best = 0;
        for (std::size_t i = row; i < m.rows; ++i) {
            const mpq_class& v = m.at(i, col);
            if (v == 0) continue;
            std::size_t sz = mpz_size(v.get_num().get_mpz_t()) + mpz_size(v.get_den().get_mpz_t());
            if (pivot == m.rows || sz < best) {
                pivot = i;
                best = sz;
            }
        }
        if (pivot == m.rows) continue;
        if (pivot != row)
            for (std::size_t j = col; j < m.cols; ++j) std::swap(m.at(row, j), m.at(pivot, j));
        const mpq_class p = m.at(row, col);
        for (std::size_t i = row + 1; i < m.rows; ++i) {
            mpq_class& lead = m.at(i, col);
            if (lead == 0) continue;
            mpq_class f = lead / p;
            lead = 0;
            for (std::size_t j = col + 1; j < m.cols; ++j) {
                mpq_class& e = m.at(i, j);
                e -= f * m.at(row, j);
            }
        }
        ++row;
        ++rank;
    }
    return rank;
}

std::size_t kernel_dim(RatMatrix m) {
    return m.cols - rank_destructive(m);
}

} // namespace a1

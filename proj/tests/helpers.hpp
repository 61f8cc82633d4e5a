#ifndef HOPFCAT_TEST_HELPERS_HPP
#define HOPFCAT_TEST_HELPERS_HPP

#include <initializer_list>
#include <random>

#include "hopfcat/matrix.hpp"

namespace hopfcat::testing {

template <class F>
Mat<F> mk(std::initializer_list<std::initializer_list<long>> rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
    Mat<F> m(r, c);
    int i = 0;
    for (const auto& row : rows) {
        int j = 0;
        for (long v : row) m(i, j++) = F(v);
        ++i;
    }
    return m;
}

template <class F>
Mat<F> random_mat(std::mt19937& rng, int r, int c, long lo = -5, long hi = 5) {
    std::uniform_int_distribution<long> d(lo, hi);
    Mat<F> m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m(i, j) = F(d(rng));
    return m;
}

} // namespace hopfcat::testing

#endif

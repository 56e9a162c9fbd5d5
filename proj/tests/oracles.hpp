// Independent reference implementations used to check the library: cofactor
// determinants, dense polynomial evaluation, and brute-force tensor algebra.
#pragma once

#include "ncyb/matrix.hpp"

#include <vector>

namespace ncyb::oracle {

// Cofactor-expansion determinant over a commutative ring.
template <class R>
typename R::E det(const R& ring, const Mat<typename R::E>& A) {
    const std::size_t n = A.rows();
    if (n == 0) return ring.one();
    if (n == 1) return A.at(0, 0);
    typename R::E acc = ring.zero();
    for (std::size_t j = 0; j < n; ++j) {
        if (ring.is_zero(A.at(0, j))) continue;
        Mat<typename R::E> m;
        m.row_labels.assign(A.row_labels.begin() + 1, A.row_labels.end());
        for (std::size_t c = 0; c < n; ++c)
            if (c != j) m.col_labels.push_back(A.col_labels[c]);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) m.a.push_back(A.at(r, c));
        typename R::E term = ring.mul(A.at(0, j), det(ring, m));
        acc = (j % 2 == 0) ? ring.add(acc, term) : ring.sub(acc, term);
    }
    return acc;
}

// Minor with one row and one column removed (by label).
template <class E>
Mat<E> drop_row_col(const Mat<E>& A, int row, int col) {
    std::vector<int> rows, cols;
    for (int r : A.row_labels)
        if (r != row) rows.push_back(r);
    for (int c : A.col_labels)
        if (c != col) cols.push_back(c);
    return labeled_submatrix(A, rows, cols);
}

} // namespace ncyb::oracle

// Quasi-determinant calculus over arbitrary ring entries: recursive and
// via-inverse evaluation, matrix inversion, quasi-Plucker coordinates, and
// both Gauss decompositions, with label-preserving submatrix indexing.
#pragma once

#include "ncyb/matrix.hpp"

#include <map>
#include <sstream>
#include <tuple>
#include <vector>

namespace ncyb {

enum class QdStrategy { recursive, via_inverse, automatic };

namespace detail {
inline std::string label_list(const std::vector<int>& v) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "}";
    return os.str();
}
inline std::vector<int> without(const std::vector<int>& v, int x) {
    std::vector<int> r;
    r.reserve(v.size());
    for (int y : v)
        if (y != x) r.push_back(y);
    return r;
}
} // namespace detail

// One evaluation session per matrix: memoizes quasi-determinants keyed by
// (row label set, col label set, i, j). Not thread safe; use one session per
// thread of evaluation.
template <class R>
class QdSession {
public:
    using E = typename R::E;

    QdSession(const R& ring, const Mat<E>& A) : ring_(ring), A_(A) {}

    E quasi_det(int i, int j, QdStrategy strategy = QdStrategy::automatic) {
        return qd(A_.row_labels, A_.col_labels, i, j, strategy);
    }

    E qd(std::vector<int> rows, std::vector<int> cols, int i, int j,
         QdStrategy strategy = QdStrategy::automatic) {
        std::sort(rows.begin(), rows.end());
        std::sort(cols.begin(), cols.end());
        if (rows.size() != cols.size()) throw ShapeError("quasi_det of non-square matrix");
        Key key{rows, cols, i, j,
                strategy == QdStrategy::recursive}; // strategies memoized separately
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        E val = compute(rows, cols, i, j, strategy);
        memo_.emplace(std::move(key), val);
        return val;
    }

private:
    using Key = std::tuple<std::vector<int>, std::vector<int>, int, int, bool>;

    E compute(const std::vector<int>& rows, const std::vector<int>& cols, int i, int j,
              QdStrategy strategy) {
        (void)A_.row_pos(i);
        (void)A_.col_pos(j);
        bool have_i = std::find(rows.begin(), rows.end(), i) != rows.end();
        bool have_j = std::find(cols.begin(), cols.end(), j) != cols.end();
        if (!have_i || !have_j) throw LabelError("quasi_det frame outside submatrix");
        if (rows.size() == 1) return A_.by_label(i, j);
        if (strategy == QdStrategy::recursive) return compute_recursive(rows, cols, i, j);
        return compute_via_inverse(rows, cols, i, j);
    }

    E compute_via_inverse(const std::vector<int>& rows, const std::vector<int>& cols, int i,
                          int j) {
        std::vector<int> mr = detail::without(rows, i);
        std::vector<int> mc = detail::without(cols, j);
        Mat<E> minor = labeled_submatrix(A_, mr, mc);
        auto inv = ring_.try_invert_mat(minor);
        if (!inv)
            throw SingularQuasiDet("minor rows " + detail::label_list(mr) + " cols " +
                                   detail::label_list(mc) + " not invertible");
        E acc = A_.by_label(i, j);
        for (int k : mc)
            for (int l : mr)
                acc = ring_.sub(acc, ring_.mul(ring_.mul(A_.by_label(i, k), inv->by_label(k, l)),
                                               A_.by_label(l, j)));
        return acc;
    }

    E compute_recursive(const std::vector<int>& rows, const std::vector<int>& cols, int i,
                        int j) {
        std::vector<int> mr = detail::without(rows, i);
        std::vector<int> mc = detail::without(cols, j);
        E acc = A_.by_label(i, j);
        for (int k : mc)
            for (int l : mr) {
                E inner = qd(mr, mc, l, k, QdStrategy::recursive);
                auto inv = ring_.try_invert(inner);
                if (!inv)
                    throw SingularQuasiDet(
                        "inner quasi-determinant at (" + std::to_string(l) + "," +
                        std::to_string(k) + ") of minor rows " + detail::label_list(mr) +
                        " cols " + detail::label_list(mc) + " not invertible");
                acc = ring_.sub(acc,
                                ring_.mul(ring_.mul(A_.by_label(i, k), *inv), A_.by_label(l, j)));
            }
        return acc;
    }

    const R& ring_;
    const Mat<E>& A_;
    std::map<Key, E> memo_;
};

template <class R>
typename R::E quasi_det(const R& ring, const Mat<typename R::E>& A, int i, int j,
                        QdStrategy strategy = QdStrategy::automatic) {
    QdSession<R> s(ring, A);
    return s.quasi_det(i, j, strategy);
}

// A^{-1} via quasi-determinants: B[i,j] = |A|_{ji}^{-1}. Row labels of the
// result are A's column labels (and vice versa), matching B's index role.
template <class R>
Mat<typename R::E> inverse_via_quasidet(const R& ring, const Mat<typename R::E>& A) {
    QdSession<R> s(ring, A);
    Mat<typename R::E> B = mat_zero(ring, A.col_labels, A.row_labels);
    for (std::size_t bi = 0; bi < B.rows(); ++bi)
        for (std::size_t bj = 0; bj < B.cols(); ++bj) {
            int jlab = B.row_labels[bi]; // column of A
            int ilab = B.col_labels[bj]; // row of A
            typename R::E d = s.quasi_det(ilab, jlab);
            auto inv = ring.try_invert(d);
            if (!inv)
                throw SingularQuasiDet("quasi-determinant at (" + std::to_string(ilab) + "," +
                                       std::to_string(jlab) + ") not invertible");
            B.at(bi, bj) = *inv;
        }
    return B;
}

// Left quasi-Plucker coordinate q^{J}_{ij} of an m x N matrix (m = |J|+1):
// (|A_{i,J}|_{si})^{-1} |A_{j,J}|_{sj} for any row label s; s-independent.
template <class R>
typename R::E left_qplucker(const R& ring, const Mat<typename R::E>& A, int i, int j,
                            const std::vector<int>& J, int s) {
    if (std::find(J.begin(), J.end(), i) != J.end())
        throw LabelError("left_qplucker: i must not lie in J");
    if (J.size() + 1 != A.rows()) throw ShapeError("left_qplucker: |J| must be rows-1");
    std::vector<int> ci{i}, cj{j};
    ci.insert(ci.end(), J.begin(), J.end());
    cj.insert(cj.end(), J.begin(), J.end());
    QdSession<R> sess(ring, A);
    typename R::E di = sess.qd(A.row_labels, ci, s, i);
    auto inv = ring.try_invert(di);
    if (!inv)
        throw SingularQuasiDet("left_qplucker: |A_{i,J}|_{si} not invertible (i=" +
                               std::to_string(i) + ")");
    return ring.mul(*inv, sess.qd(A.row_labels, cj, s, j));
}

// Right quasi-Plucker coordinate r^{I}_{ij} of an N x m matrix (m = |I|+1):
// |A^{i,I}|_{it} (|A^{j,I}|_{jt})^{-1} for any column label t; t-independent.
template <class R>
typename R::E right_qplucker(const R& ring, const Mat<typename R::E>& A, int i, int j,
                             const std::vector<int>& I, int t) {
    if (std::find(I.begin(), I.end(), j) != I.end())
        throw LabelError("right_qplucker: j must not lie in I");
    if (I.size() + 1 != A.cols()) throw ShapeError("right_qplucker: |I| must be cols-1");
    std::vector<int> ri{i}, rj{j};
    ri.insert(ri.end(), I.begin(), I.end());
    rj.insert(rj.end(), I.begin(), I.end());
    QdSession<R> sess(ring, A);
    typename R::E dj = sess.qd(rj, A.col_labels, j, t);
    auto inv = ring.try_invert(dj);
    if (!inv)
        throw SingularQuasiDet("right_qplucker: |A^{j,I}|_{jt} not invertible (j=" +
                               std::to_string(j) + ")");
    return ring.mul(sess.qd(ri, A.col_labels, i, t), *inv);
}

enum class GaussVariant { senior, junior };

template <class E>
struct GaussFactors {
    Mat<E> E_upper; // unit upper triangular
    Mat<E> H_diag;  // diagonal
    Mat<E> F_lower; // unit lower triangular
    GaussVariant variant;
};

// Senior: A = E H F with H_k = |A^{k..N}_{k..N}|_{kk}.
// Junior: A = F H E with H_k = |A^{1..k}_{1..k}|_{kk}.
// Requires row labels == col labels == 1..N in natural order.
template <class R>
GaussFactors<typename R::E> gauss_decompose(const R& ring, const Mat<typename R::E>& A,
                                            GaussVariant variant) {
    using E = typename R::E;
    const std::vector<int>& lab = A.row_labels;
    int N = static_cast<int>(A.rows());
    Mat<E> Em = mat_identity(ring, lab);
    Mat<E> Hm = mat_zero(ring, lab, lab);
    Mat<E> Fm = mat_identity(ring, lab);
    QdSession<R> sess(ring, A);

    auto range = [&](int a, int b) { // labels a..b inclusive
        std::vector<int> v;
        for (int k = a; k <= b; ++k) v.push_back(lab[static_cast<std::size_t>(k - 1)]);
        return v;
    };

    for (int k = 1; k <= N; ++k) {
        std::vector<int> rng = variant == GaussVariant::senior ? range(k, N) : range(1, k);
        int lk = lab[static_cast<std::size_t>(k - 1)];
        E h = sess.qd(rng, rng, lk, lk);
        if (!ring.try_invert(h))
            throw SingularQuasiDet("gauss_decompose: H_" + std::to_string(k) +
                                   " not invertible");
        Hm.by_label(lk, lk) = h;
    }

    for (int j = 2; j <= N; ++j) {
        for (int i = 1; i < j; ++i) {
            int li = lab[static_cast<std::size_t>(i - 1)];
            int lj = lab[static_cast<std::size_t>(j - 1)];
            if (variant == GaussVariant::senior) {
                // E_ij = r^{j+1..N}_{ij}(A columns j..N); F_ji = q^{j+1..N}_{ji}(A rows j..N).
                std::vector<int> tail = range(j + 1, N);
                std::vector<int> colsj = range(j, N);
                Mat<E> right = labeled_submatrix(A, lab, colsj);
                Em.by_label(li, lj) = right_qplucker(ring, right, li, lj, tail, lj);
                Mat<E> bottom = labeled_submatrix(A, colsj, lab);
                Fm.by_label(lj, li) = left_qplucker(ring, bottom, lj, li, tail, lj);
            } else {
                // E~_ij = q^{1..i-1}_{ij}(A rows 1..i); F~_ji = r^{1..i-1}_{ji}(A cols 1..i).
                std::vector<int> head = range(1, i - 1);
                std::vector<int> rowsi = range(1, i);
                Mat<E> top = labeled_submatrix(A, rowsi, lab);
                Em.by_label(li, lj) = left_qplucker(ring, top, li, lj, head, li);
                Mat<E> left = labeled_submatrix(A, lab, rowsi);
                Fm.by_label(lj, li) = right_qplucker(ring, left, lj, li, head, li);
            }
        }
    }
    return GaussFactors<E>{std::move(Em), std::move(Hm), std::move(Fm), variant};
}

template <class R>
Mat<typename R::E> gauss_reconstruct(const R& ring, const GaussFactors<typename R::E>& G) {
    if (G.variant == GaussVariant::senior)
        return mat_mul(ring, mat_mul(ring, G.E_upper, G.H_diag), G.F_lower);
    return mat_mul(ring, mat_mul(ring, G.F_lower, G.H_diag), G.E_upper);
}

} // namespace ncyb

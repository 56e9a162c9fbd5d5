// Classical (commutative) Yang-Baxter maps.
//
// Over a commutative ring the zero-curvature system of ybmap.hpp is solved
// by ratios of ordinary minor determinants of the same 2n x 2n block
// matrices. This header provides a cofactor determinant, the determinant
// forms of the forward and inverse maps, the classical r-matrices, and a
// seeded random state generator used by the numeric checks.
#pragma once

#include "ncyb/matrix.hpp"
#include "ncyb/qrat.hpp"
#include "ncyb/ratfun.hpp"
#include "ncyb/ybmap.hpp"

#include <vector>

namespace ncyb {

// Cofactor-expansion determinant; fine for the small minors used here.
template <class Ring>
typename Ring::E cdet(const Ring& ring, const Mat<typename Ring::E>& A) {
    if (A.rows() != A.cols()) throw ShapeError("determinant of non-square matrix");
    std::size_t m = A.rows();
    if (m == 0) return ring.one();
    if (m == 1) return A.at(0, 0);
    typename Ring::E acc = ring.zero();
    for (std::size_t k = 0; k < m; ++k) {
        if (ring.is_zero(A.at(0, k))) continue;
        std::vector<int> rl(A.row_labels.begin() + 1, A.row_labels.end());
        std::vector<int> cl;
        for (std::size_t c = 0; c < m; ++c)
            if (c != k) cl.push_back(A.col_labels[c]);
        typename Ring::E term = ring.mul(A.at(0, k), cdet(ring, labeled_submatrix(A, rl, cl)));
        acc = (k % 2 == 0) ? ring.add(acc, term) : ring.sub(acc, term);
    }
    return acc;
}

namespace detail {

template <class Ring>
typename Ring::E ring_div(const Ring& ring, const typename Ring::E& x,
                          const typename Ring::E& y) {
    auto inv = ring.try_invert(y);
    if (!inv) throw Singular("division by non-invertible element");
    return ring.mul(x, *inv);
}

} // namespace detail

// Determinant-ratio forward map; commutative counterpart of qd_forward_map.
template <class Ring>
YBState<Ring> classical_forward_map(const Ring& ring, const YBState<Ring>& st) {
    using E = typename Ring::E;
    int n = st.n;
    Mat<E> M = block_matrix(ring, st);
    auto minor = [&](const std::vector<int>& rows, const std::vector<int>& cols) {
        return cdet(ring, labeled_submatrix(M, rows, cols));
    };
    auto u = [&](int a, int k) -> E {
        if (k == 0) return ring.one();
        return a == 1 ? st.Lp1.by_label(k, k) : st.Lp2.by_label(k, k);
    };
    // suffixP[i] = prod_{k=i}^{n} u_k^{(1)} u_k^{(2)}
    std::vector<E> suffixP(static_cast<std::size_t>(n) + 2, ring.one());
    for (int k = n; k >= 1; --k)
        suffixP[static_cast<std::size_t>(k)] = ring.mul(
            ring.mul(u(1, k), u(2, k)), suffixP[static_cast<std::size_t>(k + 1)]);
    E V = u(1, n);

    auto Jminor = [&](int a, int b) { // det J^{a..n}_{b..n} with J the unbarred core
        return minor(detail::label_range(a, n), detail::label_range(b, n));
    };

    YBState<Ring> ts = yb_state_zero(ring, n);
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            {
                std::vector<int> cols{barred(j, n)};
                for (int c : detail::label_range(i + 1, n)) cols.push_back(c);
                E d = minor(detail::label_range(i, n), cols);
                ts.Lp1.by_label(i, j) = detail::ring_div(
                    ring, ring.mul(d, V), suffixP[static_cast<std::size_t>(i)]);
            }
            {
                std::vector<int> cols{i};
                for (int c : detail::label_range(j + 1, n)) cols.push_back(c);
                E d = minor(detail::label_range(j, n), cols);
                ts.Lm1.by_label(j, i) = detail::ring_div(
                    ring, ring.mul(d, V), suffixP[static_cast<std::size_t>(j)]);
            }
            {
                std::vector<int> rows{i};
                for (int r : detail::label_range(j + 1, n)) rows.push_back(r);
                E d = minor(rows, detail::label_range(j, n));
                E den = ring.mul(ring.mul(Jminor(j, j), Jminor(j + 1, j + 1)), V);
                ts.Lp2.by_label(i, j) = detail::ring_div(
                    ring, ring.mul(d, suffixP[static_cast<std::size_t>(j)]), den);
            }
            {
                std::vector<int> rows{barred(j, n)};
                for (int r : detail::label_range(i + 1, n)) rows.push_back(r);
                E d = minor(rows, detail::label_range(i, n));
                E den = ring.mul(ring.mul(Jminor(i + 1, i + 1), Jminor(i, i)), V);
                ts.Lm2.by_label(j, i) = detail::ring_div(
                    ring, ring.mul(d, suffixP[static_cast<std::size_t>(i)]), den);
            }
        }
    return ts;
}

// Determinant-ratio inverse map; commutative counterpart of qd_inverse_map.
template <class Ring>
YBState<Ring> classical_inverse_map(const Ring& ring, const YBState<Ring>& ts) {
    using E = typename Ring::E;
    int n = ts.n;
    Mat<E> Mt = block_matrix_tilde(ring, ts);
    auto minor = [&](const std::vector<int>& rows, const std::vector<int>& cols) {
        return cdet(ring, labeled_submatrix(Mt, rows, cols));
    };
    auto ut = [&](int a, int k) -> E {
        if (k == 0) return ring.one();
        return a == 1 ? ts.Lp1.by_label(k, k) : ts.Lp2.by_label(k, k);
    };
    // prefixQ[m] = prod_{k=1}^{m} u~_k^{(2)} u~_k^{(1)}
    std::vector<E> prefixQ(static_cast<std::size_t>(n) + 1, ring.one());
    for (int k = 1; k <= n; ++k)
        prefixQ[static_cast<std::size_t>(k)] = ring.mul(
            prefixQ[static_cast<std::size_t>(k - 1)], ring.mul(ut(2, k), ut(1, k)));

    auto Jtminor = [&](int b) { // det J~^{1..b}_{1..b}
        return minor(detail::label_range(1, b), detail::label_range(1, b));
    };

    YBState<Ring> st = yb_state_zero(ring, n);
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            {
                std::vector<int> rows = detail::label_range(1, j - 1);
                rows.push_back(barred(i, n));
                E d = minor(rows, detail::label_range(1, j));
                E den = ring.mul(Jtminor(j - 1), Jtminor(j));
                st.Lp1.by_label(i, j) = detail::ring_div(
                    ring, ring.mul(d, prefixQ[static_cast<std::size_t>(j - 1)]), den);
            }
            {
                std::vector<int> rows = detail::label_range(1, i - 1);
                rows.push_back(j);
                E d = minor(rows, detail::label_range(1, i));
                E den = ring.mul(Jtminor(i - 1), Jtminor(i));
                st.Lm1.by_label(j, i) = detail::ring_div(
                    ring, ring.mul(d, prefixQ[static_cast<std::size_t>(i - 1)]), den);
            }
            {
                std::vector<int> cols = detail::label_range(1, i - 1);
                cols.push_back(j);
                E d = minor(detail::label_range(1, i), cols);
                st.Lp2.by_label(i, j) = detail::ring_div(
                    ring, d, prefixQ[static_cast<std::size_t>(i - 1)]);
            }
            {
                std::vector<int> cols = detail::label_range(1, j - 1);
                cols.push_back(barred(i, n));
                E d = minor(detail::label_range(1, j), cols);
                st.Lm2.by_label(j, i) = detail::ring_div(
                    ring, d, prefixQ[static_cast<std::size_t>(j - 1)]);
            }
        }
    return st;
}

// Companion classical map, as in the quantum case.
template <class Ring>
YBState<Ring> classical_star_map(const Ring& ring, const YBState<Ring>& st) {
    return swap_pairs(classical_inverse_map(ring, swap_pairs(st)));
}

// Seeded random classical state: independent diagonal units per pair,
// random strictly-triangular entries. Entries are guaranteed invertible on
// the diagonal but the map may still hit a singular minor; callers resample.
inline YBState<QRatRing> random_classical_state(const QRatRing& ring, int n, Rng& rng) {
    YBState<QRatRing> st = yb_state_zero(ring, n);
    for (int a = 1; a <= 2; ++a) {
        Mat<QRat>& Lp = a == 1 ? st.Lp1 : st.Lp2;
        Mat<QRat>& Lm = a == 1 ? st.Lm1 : st.Lm2;
        std::vector<QRat> u(static_cast<std::size_t>(n) + 1, QRat(1));
        for (int k = 1; k <= n; ++k) u[static_cast<std::size_t>(k)] = rng.small_rational();
        for (int k = 1; k <= n; ++k) {
            Lp.by_label(k, k) = u[static_cast<std::size_t>(k)];
            Lm.by_label(k, k) = u[static_cast<std::size_t>(k - 1)];
        }
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                Lp.by_label(i, j) = rng.small_rational_or_zero();
                Lm.by_label(j, i) = rng.small_rational_or_zero();
            }
    }
    return st;
}

// Classical r-matrices on the tensor square of C^n, with an indeterminate
// spectral parameter:
//   plain:   r(x) = x r+ - x^{-1} r-,
//            r+ =  sum_{i<j} E_ij (x) E_ji - (1/2) sum_{i!=j} E_ii (x) E_jj,
//            r- = -sum_{i>j} E_ij (x) E_ji + (1/2) sum_{i!=j} E_ii (x) E_jj;
//   twisted: s(x) = x s+ - x^{-1} s-,
//            s+ =  sum_{i<j} (E_ij (x) E_ji - E_ii (x) E_jj),
//            s- = -sum_{i>j} (E_ij (x) E_ji - E_ii (x) E_jj).
enum class ClassicalRKind { plain, twisted };

inline Mat<RatFun> classical_r_part(const RFRing& ring, int n, ClassicalRKind kind,
                                    bool plus) {
    std::size_t N = static_cast<std::size_t>(n);
    Mat<RatFun> r = mat_zero(ring, N * N, N * N);
    auto idx = [&](int a, int b) {
        return static_cast<std::size_t>(a - 1) * N + static_cast<std::size_t>(b - 1);
    };
    RatFun half = RatFun::constant(ring.vars, QRat(1, 2));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            bool ordered = plus ? (i < j) : (i > j);
            RatFun sign = plus ? ring.one() : -ring.one();
            if (ordered) // E_ij (x) E_ji term
                r.at(idx(i, j), idx(j, i)) = r.at(idx(i, j), idx(j, i)) + sign;
            // diagonal (x) diagonal term
            RatFun w = kind == ClassicalRKind::plain ? half : ring.one();
            if (kind == ClassicalRKind::plain || ordered)
                r.at(idx(i, j), idx(i, j)) = r.at(idx(i, j), idx(i, j)) - sign * w;
        }
    return r;
}

inline Mat<RatFun> classical_r(const RFRing& ring, int n, ClassicalRKind kind,
                               const RatFun& x) {
    Mat<RatFun> rp = classical_r_part(ring, n, kind, true);
    Mat<RatFun> rm = classical_r_part(ring, n, kind, false);
    return mat_sub(ring, mat_scale(ring, x, rp), mat_scale(ring, x.inverse(), rm));
}

} // namespace ncyb

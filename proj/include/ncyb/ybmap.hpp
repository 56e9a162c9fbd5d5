// Yang-Baxter maps built from zero-curvature data.
//
// A map state holds two pairs of triangular n x n matrices (L^{+(a)},
// L^{-(a)}), a = 1, 2, whose entries live in an arbitrary -- possibly
// noncommutative -- ring. The forward map produces the unique tilded state
// solving
//
//   L^{+(1)} L^{+(2)} = L~^{+(2)} L~^{+(1)},
//   L^{-(1)} L^{+(2)} = L~^{+(2)} L~^{-(1)},
//   L^{-(1)} L^{-(2)} = L~^{-(2)} L~^{-(1)},
//
// in closed form through quasi-determinants of a single 2n x 2n block
// matrix; the inverse map recovers the original state from the tilded one.
// Quasi-Plucker variants of both maps and the companion map obtained by
// swapping the roles of the two pairs are provided as independent
// computation paths.
#pragma once

#include "ncyb/errors.hpp"
#include "ncyb/matrix.hpp"
#include "ncyb/quasidet.hpp"

#include <vector>

namespace ncyb {

template <class Ring>
struct YBState {
    int n = 0;
    Mat<typename Ring::E> Lp1, Lm1; // pair 1: upper / lower triangular
    Mat<typename Ring::E> Lp2, Lm2; // pair 2
};

namespace detail {

inline std::vector<int> label_range(int a, int b) { // a..b inclusive; empty if a > b
    std::vector<int> v;
    for (int k = a; k <= b; ++k) v.push_back(k);
    return v;
}

} // namespace detail

// Label of "barred" index k in the 2n x 2n block matrices below.
inline int barred(int k, int n) { return n + k; }

template <class Ring>
YBState<Ring> swap_pairs(const YBState<Ring>& st) {
    return YBState<Ring>{st.n, st.Lp2, st.Lm2, st.Lp1, st.Lm1};
}

// Zero state with n x n outer shape.
template <class Ring>
YBState<Ring> yb_state_zero(const Ring& ring, int n) {
    auto labs = default_labels(static_cast<std::size_t>(n));
    YBState<Ring> st;
    st.n = n;
    st.Lp1 = mat_zero(ring, labs, labs);
    st.Lm1 = st.Lp1;
    st.Lp2 = st.Lp1;
    st.Lm2 = st.Lp1;
    return st;
}

// 2n x 2n block matrix
//   rows n+1..2n (barred), 1..n;  cols n+1..2n (barred), 1..n
//   [ 0                   L^{-(1)} L^{-(2)} ]
//   [ L^{+(1)} L^{+(2)}   L^{-(1)} L^{+(2)} ]
// Row k-bar carries row k of L^{-(1)}L^{-(2)}; column k-bar carries column k
// of L^{+(1)}L^{+(2)}; the unbarred core is J = L^{-(1)} L^{+(2)}.
template <class Ring>
Mat<typename Ring::E> block_matrix(const Ring& ring, const YBState<Ring>& st) {
    int n = st.n;
    Mat<typename Ring::E> J = mat_mul(ring, st.Lm1, st.Lp2);
    Mat<typename Ring::E> PP = mat_mul(ring, st.Lp1, st.Lp2);
    Mat<typename Ring::E> MM = mat_mul(ring, st.Lm1, st.Lm2);
    std::vector<int> labs = detail::label_range(n + 1, 2 * n);
    for (int k = 1; k <= n; ++k) labs.push_back(k);
    Mat<typename Ring::E> M = mat_zero(ring, labs, labs);
    for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
            M.by_label(barred(k, n), l) = MM.by_label(k, l);
            M.by_label(k, barred(l, n)) = PP.by_label(k, l);
            M.by_label(k, l) = J.by_label(k, l);
        }
    return M;
}

// Tilde-side block matrix (pair order reversed in the products):
//   [ 0                     L~^{+(2)} L~^{+(1)} ]
//   [ L~^{-(2)} L~^{-(1)}   L~^{+(2)} L~^{-(1)} ]
// Here row k-bar carries row k of L~^{+(2)}L~^{+(1)} and column k-bar carries
// column k of L~^{-(2)}L~^{-(1)}; the core is J~ = L~^{+(2)} L~^{-(1)}.
template <class Ring>
Mat<typename Ring::E> block_matrix_tilde(const Ring& ring, const YBState<Ring>& ts) {
    int n = ts.n;
    Mat<typename Ring::E> Jt = mat_mul(ring, ts.Lp2, ts.Lm1);
    Mat<typename Ring::E> PP = mat_mul(ring, ts.Lp2, ts.Lp1);
    Mat<typename Ring::E> MM = mat_mul(ring, ts.Lm2, ts.Lm1);
    std::vector<int> labs = detail::label_range(n + 1, 2 * n);
    for (int k = 1; k <= n; ++k) labs.push_back(k);
    Mat<typename Ring::E> M = mat_zero(ring, labs, labs);
    for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
            M.by_label(barred(k, n), l) = PP.by_label(k, l);
            M.by_label(k, barred(l, n)) = MM.by_label(k, l);
            M.by_label(k, l) = Jt.by_label(k, l);
        }
    return M;
}

namespace detail {

template <class Ring>
typename Ring::E invert_or_throw(const Ring& ring, const typename Ring::E& x,
                                 const char* what) {
    auto inv = ring.try_invert(x);
    if (!inv) throw Singular(std::string(what) + " not invertible");
    return *inv;
}

} // namespace detail

// Forward map: quasi-determinant solution of the zero-curvature system.
template <class Ring>
YBState<Ring> qd_forward_map(const Ring& ring, const YBState<Ring>& st) {
    using E = typename Ring::E;
    int n = st.n;
    Mat<E> M = block_matrix(ring, st);
    QdSession<Ring> sess(ring, M);

    auto u = [&](int a, int k) -> E { // diagonal entries u_k^{(a)}; u_0 = 1
        if (k == 0) return ring.one();
        return a == 1 ? st.Lp1.by_label(k, k) : st.Lp2.by_label(k, k);
    };

    std::vector<E> H(static_cast<std::size_t>(n) + 1, ring.one());
    std::vector<E> Hinv(static_cast<std::size_t>(n) + 1, ring.one());
    for (int k = 1; k <= n; ++k) {
        auto rng = detail::label_range(k, n);
        H[static_cast<std::size_t>(k)] = sess.qd(rng, rng, k, k);
        Hinv[static_cast<std::size_t>(k)] =
            detail::invert_or_throw(ring, H[static_cast<std::size_t>(k)], "leading minor");
    }

    // fwd[m] = (H_1^{-1} u_1^{(1)} u_1^{(2)}) ... (H_m^{-1} u_m^{(1)} u_m^{(2)})
    // back[m] = ((u_m^{(1)} u_m^{(2)})^{-1} H_m) ... ((u_1^{(1)} u_1^{(2)})^{-1} H_1)
    std::vector<E> fwd(static_cast<std::size_t>(n) + 1, ring.one());
    std::vector<E> back(static_cast<std::size_t>(n) + 1, ring.one());
    for (int k = 1; k <= n; ++k) {
        E uu = ring.mul(u(1, k), u(2, k));
        E uuinv = detail::invert_or_throw(ring, uu, "diagonal unit");
        fwd[static_cast<std::size_t>(k)] =
            ring.mul(fwd[static_cast<std::size_t>(k - 1)],
                     ring.mul(Hinv[static_cast<std::size_t>(k)], uu));
        back[static_cast<std::size_t>(k)] =
            ring.mul(ring.mul(uuinv, H[static_cast<std::size_t>(k)]),
                     back[static_cast<std::size_t>(k - 1)]);
    }

    YBState<Ring> ts = yb_state_zero(ring, n);
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            {
                std::vector<int> rows = detail::label_range(i, n);
                std::vector<int> cols{barred(j, n)};
                for (int c : detail::label_range(i + 1, n)) cols.push_back(c);
                E qd = sess.qd(rows, cols, i, barred(j, n));
                ts.Lp1.by_label(i, j) =
                    ring.mul(ring.mul(fwd[static_cast<std::size_t>(i - 1)],
                                      Hinv[static_cast<std::size_t>(i)]),
                             qd);
            }
            {
                std::vector<int> rows = detail::label_range(j, n);
                std::vector<int> cols{i};
                for (int c : detail::label_range(j + 1, n)) cols.push_back(c);
                E qd = sess.qd(rows, cols, j, i);
                ts.Lm1.by_label(j, i) =
                    ring.mul(ring.mul(fwd[static_cast<std::size_t>(j - 1)],
                                      Hinv[static_cast<std::size_t>(j)]),
                             qd);
            }
            {
                std::vector<int> rows{i};
                for (int r : detail::label_range(j + 1, n)) rows.push_back(r);
                std::vector<int> cols = detail::label_range(j, n);
                E qd = sess.qd(rows, cols, i, j);
                ts.Lp2.by_label(i, j) = ring.mul(qd, back[static_cast<std::size_t>(j - 1)]);
            }
            {
                std::vector<int> rows{barred(j, n)};
                for (int r : detail::label_range(i + 1, n)) rows.push_back(r);
                std::vector<int> cols = detail::label_range(i, n);
                E qd = sess.qd(rows, cols, barred(j, n), i);
                ts.Lm2.by_label(j, i) = ring.mul(qd, back[static_cast<std::size_t>(i - 1)]);
            }
        }
    return ts;
}

// Inverse map: recovers the original state from the tilded one.
template <class Ring>
YBState<Ring> qd_inverse_map(const Ring& ring, const YBState<Ring>& ts) {
    using E = typename Ring::E;
    int n = ts.n;
    Mat<E> Mt = block_matrix_tilde(ring, ts);
    QdSession<Ring> sess(ring, Mt);

    auto ut = [&](int a, int k) -> E {
        if (k == 0) return ring.one();
        return a == 1 ? ts.Lp1.by_label(k, k) : ts.Lp2.by_label(k, k);
    };

    std::vector<E> Ht(static_cast<std::size_t>(n) + 1, ring.one());
    std::vector<E> Htinv(static_cast<std::size_t>(n) + 1, ring.one());
    for (int k = 1; k <= n; ++k) {
        auto rng = detail::label_range(1, k);
        Ht[static_cast<std::size_t>(k)] = sess.qd(rng, rng, k, k);
        Htinv[static_cast<std::size_t>(k)] =
            detail::invert_or_throw(ring, Ht[static_cast<std::size_t>(k)], "leading minor");
    }

    // fwd[m] = (H~_1 (u~_1^{(2)} u~_1^{(1)})^{-1}) ... (H~_m (...)^{-1})
    // back[m] = (u~_m^{(2)} u~_m^{(1)} H~_m^{-1}) ... (u~_1^{(2)} u~_1^{(1)} H~_1^{-1})
    std::vector<E> fwd(static_cast<std::size_t>(n) + 1, ring.one());
    std::vector<E> back(static_cast<std::size_t>(n) + 1, ring.one());
    for (int k = 1; k <= n; ++k) {
        E uu = ring.mul(ut(2, k), ut(1, k));
        E uuinv = detail::invert_or_throw(ring, uu, "diagonal unit");
        fwd[static_cast<std::size_t>(k)] =
            ring.mul(fwd[static_cast<std::size_t>(k - 1)],
                     ring.mul(Ht[static_cast<std::size_t>(k)], uuinv));
        back[static_cast<std::size_t>(k)] =
            ring.mul(ring.mul(uu, Htinv[static_cast<std::size_t>(k)]),
                     back[static_cast<std::size_t>(k - 1)]);
    }

    YBState<Ring> st = yb_state_zero(ring, n);
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            {
                std::vector<int> rows = detail::label_range(1, j - 1);
                rows.push_back(barred(i, n));
                std::vector<int> cols = detail::label_range(1, j);
                E qd = sess.qd(rows, cols, barred(i, n), j);
                st.Lp1.by_label(i, j) =
                    ring.mul(ring.mul(qd, Htinv[static_cast<std::size_t>(j)]),
                             back[static_cast<std::size_t>(j - 1)]);
            }
            {
                std::vector<int> rows = detail::label_range(1, i - 1);
                rows.push_back(j);
                std::vector<int> cols = detail::label_range(1, i);
                E qd = sess.qd(rows, cols, j, i);
                st.Lm1.by_label(j, i) =
                    ring.mul(ring.mul(qd, Htinv[static_cast<std::size_t>(i)]),
                             back[static_cast<std::size_t>(i - 1)]);
            }
            {
                std::vector<int> rows = detail::label_range(1, i);
                std::vector<int> cols = detail::label_range(1, i - 1);
                cols.push_back(j);
                E qd = sess.qd(rows, cols, i, j);
                st.Lp2.by_label(i, j) = ring.mul(fwd[static_cast<std::size_t>(i - 1)], qd);
            }
            {
                std::vector<int> rows = detail::label_range(1, j);
                std::vector<int> cols = detail::label_range(1, j - 1);
                cols.push_back(barred(i, n));
                E qd = sess.qd(rows, cols, j, barred(i, n));
                st.Lm2.by_label(j, i) = ring.mul(fwd[static_cast<std::size_t>(j - 1)], qd);
            }
        }
    return st;
}

// Forward map expressed through quasi-Plucker coordinates of the block
// matrix; an independent path agreeing with qd_forward_map.
template <class Ring>
YBState<Ring> qp_forward_map(const Ring& ring, const YBState<Ring>& st) {
    using E = typename Ring::E;
    int n = st.n;
    Mat<E> M = block_matrix(ring, st);
    std::vector<int> all = M.col_labels;

    auto rows_from = [&](int a) { return labeled_submatrix(M, detail::label_range(a, n), all); };
    auto cols_from = [&](int a) { return labeled_submatrix(M, all, detail::label_range(a, n)); };

    // fwd[m] = q^{2..n}_{1,1bar} ... q^{m+1..n}_{m,mbar};
    // back[m] = r^{m+1..n}_{m,mbar} ... r^{2..n}_{1,1bar}.
    std::vector<E> fwd(static_cast<std::size_t>(n) + 1, ring.one());
    std::vector<E> back(static_cast<std::size_t>(n) + 1, ring.one());
    for (int k = 1; k <= n; ++k) {
        E qk = left_qplucker(ring, rows_from(k), k, barred(k, n),
                             detail::label_range(k + 1, n), k);
        E rk = right_qplucker(ring, cols_from(k), k, barred(k, n),
                              detail::label_range(k + 1, n), k);
        fwd[static_cast<std::size_t>(k)] = ring.mul(fwd[static_cast<std::size_t>(k - 1)], qk);
        back[static_cast<std::size_t>(k)] = ring.mul(rk, back[static_cast<std::size_t>(k - 1)]);
    }

    YBState<Ring> ts = yb_state_zero(ring, n);
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            ts.Lp1.by_label(i, j) =
                ring.mul(fwd[static_cast<std::size_t>(i - 1)],
                         left_qplucker(ring, rows_from(i), i, barred(j, n),
                                       detail::label_range(i + 1, n), i));
            ts.Lm1.by_label(j, i) =
                ring.mul(fwd[static_cast<std::size_t>(j - 1)],
                         left_qplucker(ring, rows_from(j), j, i,
                                       detail::label_range(j + 1, n), j));
            ts.Lp2.by_label(i, j) =
                ring.mul(right_qplucker(ring, cols_from(j), i, barred(j, n),
                                        detail::label_range(j + 1, n), j),
                         back[static_cast<std::size_t>(j - 1)]);
            ts.Lm2.by_label(j, i) =
                ring.mul(right_qplucker(ring, cols_from(i), barred(j, n), barred(i, n),
                                        detail::label_range(i + 1, n), i),
                         back[static_cast<std::size_t>(i - 1)]);
        }
    return ts;
}

// Inverse map through quasi-Plucker coordinates of the tilde block matrix.
template <class Ring>
YBState<Ring> qp_inverse_map(const Ring& ring, const YBState<Ring>& ts) {
    using E = typename Ring::E;
    int n = ts.n;
    Mat<E> Mt = block_matrix_tilde(ring, ts);
    std::vector<int> all = Mt.col_labels;

    auto rows_upto = [&](int b) { return labeled_submatrix(Mt, detail::label_range(1, b), all); };
    auto cols_upto = [&](int b) { return labeled_submatrix(Mt, all, detail::label_range(1, b)); };

    // fwd[m] = q^{}_{1bar,1} ... q^{1..m-1}_{mbar,m};
    // back[m] = r^{1..m-1}_{mbar,m} ... r^{}_{1bar,1}.
    std::vector<E> fwd(static_cast<std::size_t>(n) + 1, ring.one());
    std::vector<E> back(static_cast<std::size_t>(n) + 1, ring.one());
    for (int k = 1; k <= n; ++k) {
        E qk = left_qplucker(ring, rows_upto(k), barred(k, n), k,
                             detail::label_range(1, k - 1), k);
        E rk = right_qplucker(ring, cols_upto(k), barred(k, n), k,
                              detail::label_range(1, k - 1), k);
        fwd[static_cast<std::size_t>(k)] = ring.mul(fwd[static_cast<std::size_t>(k - 1)], qk);
        back[static_cast<std::size_t>(k)] = ring.mul(rk, back[static_cast<std::size_t>(k - 1)]);
    }

    YBState<Ring> st = yb_state_zero(ring, n);
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            st.Lp1.by_label(i, j) =
                ring.mul(right_qplucker(ring, cols_upto(j), barred(i, n), j,
                                        detail::label_range(1, j - 1), j),
                         back[static_cast<std::size_t>(j - 1)]);
            st.Lm1.by_label(j, i) =
                ring.mul(right_qplucker(ring, cols_upto(i), j, i,
                                        detail::label_range(1, i - 1), i),
                         back[static_cast<std::size_t>(i - 1)]);
            st.Lp2.by_label(i, j) =
                ring.mul(fwd[static_cast<std::size_t>(i - 1)],
                         left_qplucker(ring, rows_upto(i), barred(i, n), j,
                                       detail::label_range(1, i - 1), i));
            st.Lm2.by_label(j, i) =
                ring.mul(fwd[static_cast<std::size_t>(j - 1)],
                         left_qplucker(ring, rows_upto(j), barred(j, n), barred(i, n),
                                       detail::label_range(1, j - 1), j));
        }
    return st;
}

// Companion map: the inverse map read with the two pairs exchanged on both
// sides. Satisfies the starred zero-curvature system checked below.
template <class Ring>
YBState<Ring> star_map(const Ring& ring, const YBState<Ring>& st) {
    return swap_pairs(qd_inverse_map(ring, swap_pairs(st)));
}

// The three zero-curvature products relating a state and its image.
template <class Ring>
bool check_zero_curvature(const Ring& ring, const YBState<Ring>& st,
                          const YBState<Ring>& ts) {
    return mat_eq(ring, mat_mul(ring, st.Lp1, st.Lp2), mat_mul(ring, ts.Lp2, ts.Lp1)) &&
           mat_eq(ring, mat_mul(ring, st.Lm1, st.Lp2), mat_mul(ring, ts.Lp2, ts.Lm1)) &&
           mat_eq(ring, mat_mul(ring, st.Lm1, st.Lm2), mat_mul(ring, ts.Lm2, ts.Lm1));
}

// Starred variant of the zero-curvature system.
template <class Ring>
bool check_zero_curvature_star(const Ring& ring, const YBState<Ring>& st,
                               const YBState<Ring>& ts) {
    return mat_eq(ring, mat_mul(ring, st.Lp1, st.Lp2), mat_mul(ring, ts.Lp2, ts.Lp1)) &&
           mat_eq(ring, mat_mul(ring, st.Lp1, st.Lm2), mat_mul(ring, ts.Lm2, ts.Lp1)) &&
           mat_eq(ring, mat_mul(ring, st.Lm1, st.Lm2), mat_mul(ring, ts.Lm2, ts.Lm1));
}

// Block-matrix form of the zero-curvature system: the block matrix of the
// source state equals the tilde matrix of the image transposed at the 2 x 2
// block level only (off-diagonal blocks exchanged, interiors untouched).
template <class Ring>
bool check_block_zero_curvature(const Ring& ring, const YBState<Ring>& st,
                                const YBState<Ring>& ts) {
    int n = st.n;
    Mat<typename Ring::E> M = block_matrix(ring, st);
    Mat<typename Ring::E> Mt = block_matrix_tilde(ring, ts);
    for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
            if (!ring.eq(M.by_label(k, l), Mt.by_label(k, l))) return false;
            if (!ring.eq(M.by_label(barred(k, n), l), Mt.by_label(k, barred(l, n))))
                return false;
            if (!ring.eq(M.by_label(k, barred(l, n)), Mt.by_label(barred(k, n), l)))
                return false;
        }
    return true;
}

} // namespace ncyb

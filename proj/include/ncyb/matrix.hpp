// Label-preserving matrices over arbitrary (possibly noncommutative) rings.
//
// A LabeledMat keeps the original row/column labels of the matrix it was cut
// from, so nested submatrix extraction and quasi-determinant framing always
// refer to entries by their original indices. Ring arithmetic is supplied by
// a ring object (see the ring structs below), never assumed from the entry
// type, so entries can themselves be matrices.
#pragma once

#include "ncyb/errors.hpp"
#include "ncyb/qrat.hpp"
#include "ncyb/ratfun.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <sstream>
#include <vector>

namespace ncyb {

template <class E>
struct Mat {
    std::vector<int> row_labels;
    std::vector<int> col_labels;
    std::vector<E> a; // row-major

    Mat() = default;
    Mat(std::vector<int> rl, std::vector<int> cl, std::vector<E> entries)
        : row_labels(std::move(rl)), col_labels(std::move(cl)), a(std::move(entries)) {
        if (a.size() != row_labels.size() * col_labels.size())
            throw ShapeError("entry grid does not match label lists");
    }

    std::size_t rows() const { return row_labels.size(); }
    std::size_t cols() const { return col_labels.size(); }

    E& at(std::size_t i, std::size_t j) { return a[i * cols() + j]; }
    const E& at(std::size_t i, std::size_t j) const { return a[i * cols() + j]; }

    std::size_t row_pos(int label) const {
        for (std::size_t i = 0; i < row_labels.size(); ++i)
            if (row_labels[i] == label) return i;
        throw LabelError("row label " + std::to_string(label) + " not present");
    }
    std::size_t col_pos(int label) const {
        for (std::size_t j = 0; j < col_labels.size(); ++j)
            if (col_labels[j] == label) return j;
        throw LabelError("col label " + std::to_string(label) + " not present");
    }

    const E& by_label(int r, int c) const { return at(row_pos(r), col_pos(c)); }
    E& by_label(int r, int c) { return at(row_pos(r), col_pos(c)); }
};

inline std::vector<int> default_labels(std::size_t n) {
    std::vector<int> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(i) + 1;
    return v;
}

// ---------------------------------------------------------------------------
// Ring objects
// ---------------------------------------------------------------------------

struct QRatRing {
    using E = QRat;
    E zero() const { return QRat(0); }
    E one() const { return QRat(1); }
    E add(const E& x, const E& y) const { return x + y; }
    E sub(const E& x, const E& y) const { return x - y; }
    E mul(const E& x, const E& y) const { return x * y; }
    E neg(const E& x) const { return -x; }
    bool eq(const E& x, const E& y) const { return x == y; }
    bool is_zero(const E& x) const { return x == 0; }
    bool commutative() const { return true; }
    std::optional<E> try_invert(const E& x) const {
        if (x == 0) return std::nullopt;
        return QRat(1) / x;
    }
    std::optional<Mat<E>> try_invert_mat(const Mat<E>& m) const;
};

struct RFRing {
    VarSetPtr vars;
    using E = RatFun;
    explicit RFRing(VarSetPtr v) : vars(std::move(v)) {}
    E zero() const { return RatFun::zero(vars); }
    E one() const { return RatFun::one(vars); }
    E add(const E& x, const E& y) const { return x + y; }
    E sub(const E& x, const E& y) const { return x - y; }
    E mul(const E& x, const E& y) const { return x * y; }
    E neg(const E& x) const { return -x; }
    bool eq(const E& x, const E& y) const { return x == y; }
    bool is_zero(const E& x) const { return x.is_zero(); }
    bool commutative() const { return true; }
    std::optional<E> try_invert(const E& x) const {
        if (x.is_zero()) return std::nullopt;
        return x.inverse();
    }
    std::optional<Mat<E>> try_invert_mat(const Mat<E>& m) const;
};

// ---------------------------------------------------------------------------
// Generic operations
// ---------------------------------------------------------------------------

template <class R>
Mat<typename R::E> mat_zero(const R& ring, std::vector<int> rl, std::vector<int> cl) {
    std::vector<typename R::E> a(rl.size() * cl.size(), ring.zero());
    return Mat<typename R::E>(std::move(rl), std::move(cl), std::move(a));
}

template <class R>
Mat<typename R::E> mat_zero(const R& ring, std::size_t rows, std::size_t cols) {
    return mat_zero(ring, default_labels(rows), default_labels(cols));
}

template <class R>
Mat<typename R::E> mat_identity(const R& ring, std::vector<int> labels) {
    auto m = mat_zero(ring, labels, labels);
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, i) = ring.one();
    return m;
}

template <class R>
Mat<typename R::E> mat_identity_n(const R& ring, std::size_t n) {
    return mat_identity(ring, default_labels(n));
}

template <class R>
Mat<typename R::E> mat_add(const R& ring, const Mat<typename R::E>& A,
                           const Mat<typename R::E>& B) {
    if (A.rows() != B.rows() || A.cols() != B.cols()) throw ShapeError("mat_add shape");
    Mat<typename R::E> C = A;
    for (std::size_t k = 0; k < C.a.size(); ++k) C.a[k] = ring.add(A.a[k], B.a[k]);
    return C;
}

template <class R>
Mat<typename R::E> mat_sub(const R& ring, const Mat<typename R::E>& A,
                           const Mat<typename R::E>& B) {
    if (A.rows() != B.rows() || A.cols() != B.cols()) throw ShapeError("mat_sub shape");
    Mat<typename R::E> C = A;
    for (std::size_t k = 0; k < C.a.size(); ++k) C.a[k] = ring.sub(A.a[k], B.a[k]);
    return C;
}

template <class R>
Mat<typename R::E> mat_neg(const R& ring, const Mat<typename R::E>& A) {
    Mat<typename R::E> C = A;
    for (auto& x : C.a) x = ring.neg(x);
    return C;
}

// Entry multiplication order is always A-entry times B-entry.
template <class R>
Mat<typename R::E> mat_mul(const R& ring, const Mat<typename R::E>& A,
                           const Mat<typename R::E>& B) {
    if (A.cols() != B.rows()) throw ShapeError("mat_mul inner dimension");
    Mat<typename R::E> C = mat_zero(ring, A.row_labels, B.col_labels);
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t k = 0; k < A.cols(); ++k) {
            if (ring.is_zero(A.at(i, k))) continue;
            for (std::size_t j = 0; j < B.cols(); ++j)
                C.at(i, j) = ring.add(C.at(i, j), ring.mul(A.at(i, k), B.at(k, j)));
        }
    return C;
}

template <class R>
Mat<typename R::E> mat_scale(const R& ring, const typename R::E& c,
                             const Mat<typename R::E>& A) {
    Mat<typename R::E> C = A;
    for (auto& x : C.a) x = ring.mul(c, x);
    return C;
}

template <class R>
Mat<typename R::E> mat_scale_right(const R& ring, const Mat<typename R::E>& A,
                                   const typename R::E& c) {
    Mat<typename R::E> C = A;
    for (auto& x : C.a) x = ring.mul(x, c);
    return C;
}

template <class R>
bool mat_eq(const R& ring, const Mat<typename R::E>& A, const Mat<typename R::E>& B) {
    if (A.rows() != B.rows() || A.cols() != B.cols()) return false;
    for (std::size_t k = 0; k < A.a.size(); ++k)
        if (!ring.eq(A.a[k], B.a[k])) return false;
    return true;
}

template <class R>
bool mat_is_zero(const R& ring, const Mat<typename R::E>& A) {
    for (const auto& x : A.a)
        if (!ring.is_zero(x)) return false;
    return true;
}

template <class E>
Mat<E> mat_transpose(const Mat<E>& A) {
    Mat<E> C;
    C.row_labels = A.col_labels;
    C.col_labels = A.row_labels;
    C.a.resize(A.a.size(), A.a.empty() ? E{} : A.a[0]);
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) C.a[j * A.rows() + i] = A.at(i, j);
    return C;
}

// Kronecker product, lexicographic basis with the left factor most
// significant: (A kron B)[(i-1)*rowsB + k, (j-1)*colsB + l] = A[i,j]*B[k,l].
template <class R>
Mat<typename R::E> kron(const R& ring, const Mat<typename R::E>& A,
                        const Mat<typename R::E>& B) {
    std::size_t r = A.rows() * B.rows(), c = A.cols() * B.cols();
    Mat<typename R::E> C = mat_zero(ring, default_labels(r), default_labels(c));
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j)
            for (std::size_t k = 0; k < B.rows(); ++k)
                for (std::size_t l = 0; l < B.cols(); ++l)
                    C.at(i * B.rows() + k, j * B.cols() + l) = ring.mul(A.at(i, j), B.at(k, l));
    return C;
}

// P(u kron v) = v kron u; P^2 = I.
template <class R>
Mat<typename R::E> permutation_matrix(const R& ring, std::size_t n) {
    Mat<typename R::E> P = mat_zero(ring, default_labels(n * n), default_labels(n * n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) P.at(i * n + j, j * n + i) = ring.one();
    return P;
}

// Submatrix selected by original labels; labels are preserved.
template <class E>
Mat<E> labeled_submatrix(const Mat<E>& A, const std::vector<int>& rows,
                         const std::vector<int>& cols) {
    Mat<E> C;
    C.row_labels = rows;
    C.col_labels = cols;
    C.a.reserve(rows.size() * cols.size());
    for (int r : rows) {
        std::size_t i = A.row_pos(r);
        for (int c : cols) C.a.push_back(A.at(i, A.col_pos(c)));
    }
    return C;
}

// Gauss-Jordan inverse over a commutative ring whose invertible elements are
// recognized by try_invert (fields and local rings). Labels: result maps
// B[i,j] with row labels = A.col_labels, col labels = A.row_labels.
template <class R>
std::optional<Mat<typename R::E>> gauss_jordan_inverse(const R& ring,
                                                       const Mat<typename R::E>& A) {
    if (A.rows() != A.cols()) throw ShapeError("inverse of non-square matrix");
    std::size_t n = A.rows();
    Mat<typename R::E> W = A;
    Mat<typename R::E> Inv = mat_identity(ring, A.col_labels);
    Inv.col_labels = A.row_labels;
    for (std::size_t col = 0; col < n; ++col) {
        std::optional<typename R::E> pivinv;
        std::size_t piv = col;
        for (std::size_t r = col; r < n; ++r) {
            pivinv = ring.try_invert(W.at(r, col));
            if (pivinv) {
                piv = r;
                break;
            }
        }
        if (!pivinv) return std::nullopt;
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(W.a[piv * n + j], W.a[col * n + j]);
                std::swap(Inv.a[piv * n + j], Inv.a[col * n + j]);
            }
        }
        for (std::size_t j = 0; j < n; ++j) {
            W.at(col, j) = ring.mul(*pivinv, W.at(col, j));
            Inv.at(col, j) = ring.mul(*pivinv, Inv.at(col, j));
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || ring.is_zero(W.at(r, col))) continue;
            typename R::E f = W.at(r, col);
            for (std::size_t j = 0; j < n; ++j) {
                W.at(r, j) = ring.sub(W.at(r, j), ring.mul(f, W.at(col, j)));
                Inv.at(r, j) = ring.sub(Inv.at(r, j), ring.mul(f, Inv.at(col, j)));
            }
        }
    }
    return Inv;
}

inline std::optional<Mat<QRat>> QRatRing::try_invert_mat(const Mat<QRat>& m) const {
    return gauss_jordan_inverse(*this, m);
}
inline std::optional<Mat<RatFun>> RFRing::try_invert_mat(const Mat<RatFun>& m) const {
    return gauss_jordan_inverse(*this, m);
}

// Exact inverse over a commutative field; throws Singular.
template <class R>
Mat<typename R::E> field_inverse(const R& ring, const Mat<typename R::E>& A) {
    auto inv = ring.try_invert_mat(A);
    if (!inv) throw Singular("field_inverse: singular matrix");
    return *inv;
}

// ---------------------------------------------------------------------------
// Operator-entried matrices: entries are dim x dim matrices over a base ring.
// ---------------------------------------------------------------------------

template <class Base>
struct OpRing {
    Base base;
    std::size_t dim;
    using E = Mat<typename Base::E>;

    OpRing(Base b, std::size_t d) : base(std::move(b)), dim(d) {}

    E zero() const { return mat_zero(base, default_labels(dim), default_labels(dim)); }
    E one() const { return mat_identity_n(base, dim); }
    E add(const E& x, const E& y) const { return mat_add(base, x, y); }
    E sub(const E& x, const E& y) const { return mat_sub(base, x, y); }
    E mul(const E& x, const E& y) const { return mat_mul(base, x, y); }
    E neg(const E& x) const { return mat_neg(base, x); }
    bool eq(const E& x, const E& y) const { return mat_eq(base, x, y); }
    bool is_zero(const E& x) const { return mat_is_zero(base, x); }
    bool commutative() const { return false; }

    std::optional<E> try_invert(const E& x) const { return base.try_invert_mat(x); }

    // Block matrices are inverted by flattening to the scalar level.
    std::optional<Mat<E>> try_invert_mat(const Mat<E>& m) const {
        if (m.rows() != m.cols()) throw ShapeError("block inverse of non-square matrix");
        std::size_t N = m.rows();
        Mat<typename Base::E> flat =
            mat_zero(base, default_labels(N * dim), default_labels(N * dim));
        for (std::size_t I = 0; I < N; ++I)
            for (std::size_t J = 0; J < N; ++J) {
                const E& blk = m.at(I, J);
                if (blk.rows() != dim || blk.cols() != dim)
                    throw ShapeError("operator entry has wrong carrier dimension");
                for (std::size_t i = 0; i < dim; ++i)
                    for (std::size_t j = 0; j < dim; ++j)
                        flat.at(I * dim + i, J * dim + j) = blk.at(i, j);
            }
        auto flatinv = base.try_invert_mat(flat);
        if (!flatinv) return std::nullopt;
        Mat<E> out = mat_zero(*this, m.col_labels, m.row_labels);
        for (std::size_t I = 0; I < N; ++I)
            for (std::size_t J = 0; J < N; ++J) {
                E blk = zero();
                for (std::size_t i = 0; i < dim; ++i)
                    for (std::size_t j = 0; j < dim; ++j)
                        blk.at(i, j) = flatinv->at(I * dim + i, J * dim + j);
                out.at(I, J) = std::move(blk);
            }
        return out;
    }
};

// Embeds an operator acting on a subset of tensor legs into the full product
// space. `dims` lists all leg dimensions in order; `legs` lists the
// (0-based) legs the operator acts on, in the order matching its own index
// decomposition. Basis order is lexicographic, leftmost leg most significant.
template <class R>
Mat<typename R::E> embed_legs(const R& ring, const Mat<typename R::E>& A,
                              const std::vector<std::size_t>& dims,
                              const std::vector<std::size_t>& legs) {
    std::size_t total = 1;
    for (std::size_t d : dims) total *= d;
    std::size_t sub = 1;
    for (std::size_t l : legs) sub *= dims[l];
    if (A.rows() != sub || A.cols() != sub) throw ShapeError("embed_legs operator size");

    std::vector<std::size_t> stride(dims.size(), 1);
    for (std::size_t k = dims.size(); k-- > 1;) stride[k - 1] = stride[k] * dims[k];

    auto decompose = [&](std::size_t idx, std::vector<std::size_t>& digs) {
        for (std::size_t k = 0; k < dims.size(); ++k) {
            digs[k] = idx / stride[k];
            idx %= stride[k];
        }
    };
    auto sub_index = [&](const std::vector<std::size_t>& digs) {
        std::size_t s = 0;
        for (std::size_t l : legs) s = s * dims[l] + digs[l];
        return s;
    };

    Mat<typename R::E> out = mat_zero(ring, default_labels(total), default_labels(total));
    std::vector<std::size_t> rd(dims.size()), cd(dims.size());
    for (std::size_t r = 0; r < total; ++r) {
        decompose(r, rd);
        for (std::size_t c = 0; c < total; ++c) {
            decompose(c, cd);
            bool match = true;
            for (std::size_t k = 0; k < dims.size() && match; ++k) {
                bool onleg = std::find(legs.begin(), legs.end(), k) != legs.end();
                if (!onleg && rd[k] != cd[k]) match = false;
            }
            if (match) out.at(r, c) = A.at(sub_index(rd), sub_index(cd));
        }
    }
    return out;
}

template <class E>
std::string mat_to_string(const Mat<E>& A,
                          const std::function<std::string(const E&)>& fmt) {
    std::ostringstream os;
    for (std::size_t i = 0; i < A.rows(); ++i) {
        os << "[";
        for (std::size_t j = 0; j < A.cols(); ++j) {
            if (j) os << ", ";
            os << fmt(A.at(i, j));
        }
        os << "]\n";
    }
    return os.str();
}

} // namespace ncyb

// Truncated jets in a nilpotent parameter h.
//
// A Jet of order K stores coefficients of h^0..h^{K-1}; arithmetic truncates
// at the smaller order of the operands, which models the loss of one valid
// order each time a commutator is divided by h. Order K=2 gives dual numbers
// (h^2 = 0) with q = 1 + h; order K=3 uses q = 1 + h + h^2/2 (exp(h)
// truncated), which is what the quasi-classical bracket checks need.
#pragma once

#include "ncyb/errors.hpp"
#include "ncyb/matrix.hpp"

#include <vector>

namespace ncyb {

template <class C>
struct Jet {
    std::vector<C> c; // coefficient of h^k at index k; size = order

    std::size_t order() const { return c.size(); }
};

template <class Base>
struct JetRing {
    Base base;
    std::size_t K;
    using E = Jet<typename Base::E>;

    JetRing(Base b, std::size_t order) : base(std::move(b)), K(order) {}

    E from_parts(std::vector<typename Base::E> parts) const {
        parts.resize(K, base.zero());
        return E{std::move(parts)};
    }
    E constant(const typename Base::E& x) const { return from_parts({x}); }
    E zero() const { return constant(base.zero()); }
    E one() const { return constant(base.one()); }
    // h itself.
    E h() const { return from_parts({base.zero(), base.one()}); }
    // q = exp(h) truncated to the ring order: 1 + h + h^2/2 + ...
    E q_value() const {
        std::vector<typename Base::E> p;
        QRat fact(1);
        for (std::size_t k = 0; k < K; ++k) {
            if (k > 0) fact *= QRat(static_cast<long>(k));
            p.push_back(scale_rat(base.one(), QRat(1) / fact));
        }
        return E{std::move(p)};
    }

    E add(const E& x, const E& y) const {
        std::size_t m = std::min(x.order(), y.order());
        E r;
        r.c.reserve(m);
        for (std::size_t k = 0; k < m; ++k) r.c.push_back(base.add(x.c[k], y.c[k]));
        return r;
    }
    E sub(const E& x, const E& y) const {
        std::size_t m = std::min(x.order(), y.order());
        E r;
        r.c.reserve(m);
        for (std::size_t k = 0; k < m; ++k) r.c.push_back(base.sub(x.c[k], y.c[k]));
        return r;
    }
    E neg(const E& x) const {
        E r = x;
        for (auto& v : r.c) v = base.neg(v);
        return r;
    }
    E mul(const E& x, const E& y) const {
        std::size_t m = std::min(x.order(), y.order());
        E r;
        r.c.assign(m, base.zero());
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; i + j < m; ++j)
                r.c[i + j] = base.add(r.c[i + j], base.mul(x.c[i], y.c[j]));
        return r;
    }
    bool eq(const E& x, const E& y) const {
        std::size_t m = std::min(x.order(), y.order());
        for (std::size_t k = 0; k < m; ++k)
            if (!base.eq(x.c[k], y.c[k])) return false;
        return true;
    }
    // Equality of the first m coefficients only.
    bool eq_mod(const E& x, const E& y, std::size_t m) const {
        if (x.order() < m || y.order() < m)
            throw TowerMismatch("jet comparison beyond valid order");
        for (std::size_t k = 0; k < m; ++k)
            if (!base.eq(x.c[k], y.c[k])) return false;
        return true;
    }
    bool is_zero(const E& x) const {
        for (const auto& v : x.c)
            if (!base.is_zero(v)) return false;
        return true;
    }
    bool commutative() const { return base.commutative(); }

    // Invertible iff the classical part is; Neumann-series inversion.
    std::optional<E> try_invert(const E& x) const {
        if (x.c.empty()) throw TowerMismatch("jet of order zero");
        auto inv0 = base.try_invert(x.c[0]);
        if (!inv0) return std::nullopt;
        std::size_t m = x.order();
        E r;
        r.c.assign(m, base.zero());
        r.c[0] = *inv0;
        // r solves x*r = 1 order by order.
        for (std::size_t k = 1; k < m; ++k) {
            typename Base::E acc = base.zero();
            for (std::size_t j = 0; j < k; ++j)
                acc = base.add(acc, base.mul(x.c[k - j], r.c[j]));
            r.c[k] = base.neg(base.mul(*inv0, acc));
        }
        return r;
    }

    std::optional<Mat<E>> try_invert_mat(const Mat<E>& m) const {
        return gauss_jordan_inverse(*this, m);
    }

    // Division by h: defined only when the h^0 part vanishes; drops the top
    // coefficient, so the result has order one less than the input.
    E shift_down(const E& x) const {
        if (!base.is_zero(x.c.at(0)))
            throw NotQuasiCommutative("h^0 coefficient does not vanish");
        E r;
        r.c.assign(x.c.begin() + 1, x.c.end());
        return r;
    }

    // Componentwise h^1 coefficient.
    typename Base::E h_coefficient(const E& x) const { return x.c.at(1); }
    typename Base::E classical_part(const E& x) const { return x.c.at(0); }

private:
    static typename Base::E scale_rat(const typename Base::E& x, const QRat& r);
};

template <>
inline QRat JetRing<QRatRing>::scale_rat(const QRat& x, const QRat& r) {
    return x * r;
}
template <>
inline RatFun JetRing<RFRing>::scale_rat(const RatFun& x, const QRat& r) {
    return x * RatFun::constant(x.vars(), r);
}

} // namespace ncyb

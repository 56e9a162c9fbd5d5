// Truncated power series in a formal variable x with RatFun coefficients.
#pragma once

#include "ncyb/errors.hpp"
#include "ncyb/ratfun.hpp"

#include <vector>

namespace ncyb {

struct TruncSeries {
    std::vector<RatFun> c; // coefficient of x^k at index k; size = K

    std::size_t K() const { return c.size(); }
};

struct SeriesRing {
    VarSetPtr vars; // coefficient variable registry
    std::size_t K;

    SeriesRing(VarSetPtr v, std::size_t order) : vars(std::move(v)), K(order) {}

    TruncSeries from_coeffs(std::vector<RatFun> coeffs) const {
        coeffs.resize(K, RatFun::zero(vars));
        return TruncSeries{std::move(coeffs)};
    }
    TruncSeries zero() const { return from_coeffs({}); }
    TruncSeries one() const { return from_coeffs({RatFun::one(vars)}); }
    TruncSeries x() const { return from_coeffs({RatFun::zero(vars), RatFun::one(vars)}); }

    TruncSeries add(const TruncSeries& a, const TruncSeries& b) const {
        TruncSeries r = a;
        for (std::size_t k = 0; k < K; ++k) r.c[k] = a.c[k] + b.c[k];
        return r;
    }
    TruncSeries sub(const TruncSeries& a, const TruncSeries& b) const {
        TruncSeries r = a;
        for (std::size_t k = 0; k < K; ++k) r.c[k] = a.c[k] - b.c[k];
        return r;
    }
    TruncSeries mul(const TruncSeries& a, const TruncSeries& b) const {
        TruncSeries r = zero();
        for (std::size_t i = 0; i < K; ++i) {
            if (a.c[i].is_zero()) continue;
            for (std::size_t j = 0; i + j < K; ++j) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
        }
        return r;
    }
    bool eq(const TruncSeries& a, const TruncSeries& b) const {
        for (std::size_t k = 0; k < K; ++k)
            if (a.c[k] != b.c[k]) return false;
        return true;
    }

    // Multiplicative inverse; requires an invertible constant term.
    TruncSeries invert(const TruncSeries& a) const {
        if (a.c.at(0).is_zero()) throw NotInvertible("series constant term is zero");
        RatFun inv0 = a.c[0].inverse();
        TruncSeries r = zero();
        r.c[0] = inv0;
        for (std::size_t k = 1; k < K; ++k) {
            RatFun acc = RatFun::zero(vars);
            for (std::size_t j = 0; j < k; ++j) acc = acc + a.c[k - j] * r.c[j];
            r.c[k] = -(inv0 * acc);
        }
        return r;
    }

    // s(c*x): coefficient_k becomes c^k * coefficient_k.
    TruncSeries substitute_scaled(const TruncSeries& s, const RatFun& scale) const {
        TruncSeries r = s;
        RatFun p = RatFun::one(vars);
        for (std::size_t k = 0; k < K; ++k) {
            r.c[k] = s.c[k] * p;
            p = p * scale;
        }
        return r;
    }
};

inline TruncSeries series_substitute_scaled(const SeriesRing& ring, const TruncSeries& s,
                                            const RatFun& scale) {
    return ring.substitute_scaled(s, scale);
}

} // namespace ncyb

// Fraction field over sparse multivariate polynomials.
//
// One code path serves every symbolic scalar in the library: rational
// functions in q (with optional spectral indeterminates) and rational
// functions in named classical coordinates. Inverse powers are ordinary
// fractions. Canonical form: reduced, denominator monic under grlex.
#pragma once

#include "ncyb/poly.hpp"

#include <string>

namespace ncyb {

class RatFun {
public:
    RatFun() = default;

    static RatFun zero(const VarSetPtr& vars) { return RatFun(Poly::zero(vars)); }
    static RatFun one(const VarSetPtr& vars) { return constant(vars, QRat(1)); }
    static RatFun constant(const VarSetPtr& vars, const QRat& c) {
        return RatFun(Poly::constant(vars, c));
    }
    static RatFun variable(const VarSetPtr& vars, const std::string& name, int power = 1);
    explicit RatFun(Poly num);
    RatFun(Poly num, Poly den); // reduces and normalizes

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const VarSetPtr& vars() const { return num_.vars(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;

    RatFun operator-() const;
    RatFun operator+(const RatFun& o) const;
    RatFun operator-(const RatFun& o) const;
    RatFun operator*(const RatFun& o) const;
    RatFun operator/(const RatFun& o) const;
    RatFun inverse() const; // throws NotInvertible on zero
    RatFun pow(int k) const; // any integer power

    // Exact equality (canonical forms compared; cross-multiplication fallback
    // is unnecessary because reduction is canonical).
    bool operator==(const RatFun& o) const;
    bool operator!=(const RatFun& o) const { return !(*this == o); }

    RatFun extend(const VarSetPtr& bigger) const;
    QRat eval(const std::vector<QRat>& point) const; // throws on zero denominator

    std::string to_string() const;

private:
    void reduce();
    Poly num_, den_;
};

} // namespace ncyb

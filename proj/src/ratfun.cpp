#include "ncyb/ratfun.hpp"

#include <cassert>

namespace ncyb {

RatFun RatFun::variable(const VarSetPtr& vars, const std::string& name, int power) {
    if (power >= 0) return RatFun(Poly::variable(vars, name, power));
    return RatFun(Poly::constant(vars, QRat(1)), Poly::variable(vars, name, -power));
}

RatFun::RatFun(Poly num) : num_(std::move(num)) {
    den_ = Poly::constant(num_.vars(), QRat(1));
}

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw NotInvertible("zero denominator");
    reduce();
}

void RatFun::reduce() {
    if (num_.is_zero()) {
        den_ = Poly::constant(num_.vars(), QRat(1));
        return;
    }
    if (!den_.is_constant()) {
        if (auto q = Poly::div_exact(num_, den_)) {
            num_ = *q;
            den_ = Poly::constant(num_.vars(), QRat(1));
        } else {
            Poly g = Poly::gcd(num_, den_);
            if (!g.is_constant()) {
                num_ = *Poly::div_exact(num_, g);
                den_ = *Poly::div_exact(den_, g);
            }
        }
    }
    // Monic denominator.
    QRat lc = den_.leading_term().coef;
    if (lc != 1) {
        QRat inv = QRat(1) / lc;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

bool RatFun::is_one() const { return den_.is_constant() && num_ == den_; }

RatFun RatFun::operator-() const {
    RatFun r(*this);
    r.num_ = -r.num_;
    return r;
}

RatFun RatFun::operator+(const RatFun& o) const {
    if (den_ == o.den_) return RatFun(num_ + o.num_, den_);
    return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator-(const RatFun& o) const { return *this + (-o); }

RatFun RatFun::operator*(const RatFun& o) const {
    // Cross-reduce before multiplying to limit intermediate growth.
    Poly g1 = Poly::gcd(num_, o.den_);
    Poly g2 = Poly::gcd(o.num_, den_);
    Poly a = g1.is_constant() ? num_ : *Poly::div_exact(num_, g1);
    Poly d2 = g1.is_constant() ? o.den_ : *Poly::div_exact(o.den_, g1);
    Poly b = g2.is_constant() ? o.num_ : *Poly::div_exact(o.num_, g2);
    Poly d1 = g2.is_constant() ? den_ : *Poly::div_exact(den_, g2);
    return RatFun(a * b, d1 * d2);
}

RatFun RatFun::operator/(const RatFun& o) const { return *this * o.inverse(); }

RatFun RatFun::inverse() const {
    if (num_.is_zero()) throw NotInvertible("inverse of zero rational function");
    return RatFun(den_, num_);
}

RatFun RatFun::pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    RatFun r = RatFun::one(vars());
    RatFun b = *this;
    while (k > 0) {
        if (k & 1) r = r * b;
        k >>= 1;
        if (k) b = b * b;
    }
    return r;
}

bool RatFun::operator==(const RatFun& o) const {
    // Canonical forms make structural comparison sound; keep the
    // cross-multiplication as a cheap belt-and-braces fallback.
    if (num_ == o.num_ && den_ == o.den_) return true;
    return num_ * o.den_ == o.num_ * den_;
}

RatFun RatFun::extend(const VarSetPtr& bigger) const {
    RatFun r;
    r.num_ = num_.extend(bigger);
    r.den_ = den_.extend(bigger);
    return r;
}

QRat RatFun::eval(const std::vector<QRat>& point) const {
    QRat d = den_.eval(point);
    if (d == 0) throw NotInvertible("denominator vanishes at evaluation point");
    return num_.eval(point) / d;
}

std::string RatFun::to_string() const {
    if (den_.is_constant() && den_.constant_value() == 1) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

} // namespace ncyb

#include "doctest.h"

#include "ncyb/jet.hpp"
#include "ncyb/poly.hpp"
#include "ncyb/ratfun.hpp"
#include "ncyb/series.hpp"

using namespace ncyb;

TEST_CASE("polynomial arithmetic matches dense evaluation") {
    auto vars = make_vars({"x", "y"});
    Poly x = Poly::variable(vars, "x");
    Poly y = Poly::variable(vars, "y");
    Poly p = (x + y).pow(3) - x.pow(3) - y.pow(3);
    // (x+y)^3 - x^3 - y^3 = 3xy(x+y)
    Poly rhs = Poly::constant(vars, QRat(3)) * x * y * (x + y);
    CHECK(p == rhs);
    CHECK(p.eval({QRat(2), QRat(5)}) == QRat(3 * 2 * 5 * 7));
}

TEST_CASE("gcd reduces a constructed common factor") {
    auto vars = make_vars({"x", "y"});
    Poly x = Poly::variable(vars, "x");
    Poly y = Poly::variable(vars, "y");
    Poly common = x * y + Poly::constant(vars, QRat(1));
    Poly a = common * (x + y);
    Poly b = common * (x - y);
    Poly g = Poly::gcd(a, b);
    CHECK(Poly::div_exact(a, g).has_value());
    CHECK(Poly::div_exact(b, g).has_value());
    CHECK(Poly::div_exact(g, common).has_value());
    CHECK(Poly::div_exact(common, g).has_value());
}

TEST_CASE("rational functions satisfy the geometric series identity") {
    auto vars = make_vars({"q"});
    RatFun q = RatFun::variable(vars, "q");
    RatFun one = RatFun::one(vars);
    // 1 + q + q^2 + q^3 = (1 - q^4) / (1 - q)
    RatFun lhs = one + q + q.pow(2) + q.pow(3);
    RatFun rhs = (one - q.pow(4)) / (one - q);
    CHECK(lhs == rhs);
    CHECK(q.pow(-2) * q.pow(5) == q.pow(3));
    CHECK((q - q.pow(-1)).inverse() * (q.pow(2) - one) == q);
}

TEST_CASE("rational function evaluation and cancellation") {
    auto vars = make_vars({"x"});
    RatFun x = RatFun::variable(vars, "x");
    RatFun one = RatFun::one(vars);
    RatFun f = (x.pow(2) - one) / (x - one); // = x + 1
    CHECK(f == x + one);
    CHECK(f.eval({QRat(7)}) == QRat(8));
}

TEST_CASE("jets multiply like truncated exponential series") {
    auto vars = make_vars({"u"});
    RFRing base(vars);
    JetRing<RFRing> jr(base, 3);
    auto q = jr.q_value(); // 1 + h + h^2/2 mod h^3
    auto qinv = *jr.try_invert(q);
    CHECK(jr.eq(jr.mul(q, qinv), jr.one()));
    // q - q^{-1} = 2h + O(h^3)
    auto diff = jr.sub(q, qinv);
    CHECK(base.is_zero(diff.c[0]));
    CHECK(base.eq(diff.c[1], base.add(base.one(), base.one())));
}

TEST_CASE("truncated series inversion") {
    auto vars = make_vars({"a"});
    SeriesRing sr(vars, 6);
    auto one = sr.one();
    auto x = sr.x();
    auto f = sr.sub(one, x); // 1 - x
    auto g = sr.invert(f);   // geometric series
    for (std::size_t k = 0; k < 6; ++k) CHECK(g.c[k] == RatFun::one(vars));
    CHECK(sr.eq(sr.mul(f, g), one));
}

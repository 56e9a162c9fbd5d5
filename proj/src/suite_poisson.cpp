#include "ncyb/classical.hpp"
#include "ncyb/jet.hpp"
#include "ncyb/rep.hpp"
#include "ncyb/suites.hpp"
#include "ncyb/ybmap.hpp"

#include <chrono>
#include <string>
#include <vector>

namespace ncyb {

namespace {

// Jets truncated at h^6; identities are compared modulo the stated order.
constexpr std::size_t kJetOrder = 6;

template <class Base>
using JMat = Mat<typename JetRing<Base>::E>;

QRat poly_coef_lift(const QRatRing&, const QRat& c) { return c; }
RatFun poly_coef_lift(const RFRing& g, const QRat& c) {
    return RatFun::constant(g.vars, c);
}

template <class Base>
typename JetRing<Base>::E jet_scale(const JetRing<Base>& jr,
                                    const typename JetRing<Base>::E& x,
                                    const QRat& c) {
    typename JetRing<Base>::E s = x; // keep x's truncation order
    typename Base::E cl = poly_coef_lift(jr.base, c);
    for (auto& v : s.c) v = jr.base.mul(v, cl);
    return s;
}

// Evaluates a rational function of the single deformation variable at the
// jet q = exp(h).
template <class Base>
typename JetRing<Base>::E eval_at_jet(const JetRing<Base>& jr, const RatFun& x,
                                      const typename JetRing<Base>::E& qj) {
    auto eval_poly = [&](const Poly& p) {
        typename JetRing<Base>::E acc = jr.zero();
        for (const auto& t : p.terms()) {
            typename JetRing<Base>::E mono = jr.constant(poly_coef_lift(jr.base, t.coef));
            for (std::size_t v = 0; v < t.exp.size(); ++v)
                for (int k = 0; k < t.exp[v]; ++k) mono = jr.mul(mono, qj);
            acc = jr.add(acc, mono);
        }
        return acc;
    };
    auto num = eval_poly(x.num());
    auto den = eval_poly(x.den());
    auto dinv = jr.try_invert(den);
    if (!dinv) throw SingularQuasiDet("jet evaluation: denominator not invertible");
    return jr.mul(num, *dinv);
}

template <class Base>
JMat<Base> mat_at_jet(const JetRing<Base>& jr, const OpMat& A,
                      const typename JetRing<Base>::E& qj) {
    JMat<Base> out = mat_zero(jr, A.row_labels, A.col_labels);
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j)
            out.at(i, j) = eval_at_jet(jr, A.at(i, j), qj);
    return out;
}

// {a, b} = (h-coefficient extension of [a, b]) / 2: requires the classical
// part of the commutator to vanish.
template <class Base>
JMat<Base> jet_bracket(const JetRing<Base>& jr, const JMat<Base>& A,
                       const JMat<Base>& B) {
    JMat<Base> c = mat_sub(jr, mat_mul(jr, A, B), mat_mul(jr, B, A));
    JMat<Base> out = c;
    for (auto& x : out.a)
        x = jet_scale(jr, jr.shift_down(x), QRat(1, 2));
    return out;
}

template <class Base>
bool mat_eq_mod(const JetRing<Base>& jr, const JMat<Base>& A, const JMat<Base>& B,
                std::size_t m) {
    if (A.rows() != B.rows() || A.cols() != B.cols()) return false;
    for (std::size_t i = 0; i < A.a.size(); ++i)
        if (!jr.eq_mod(A.a[i], B.a[i], m)) return false;
    return true;
}

using QJet = JetRing<QRatRing>;
using QJMat = JMat<QRatRing>;

struct JetRep {
    QJet jr;
    Rep r;
    QJet::E qj;

    explicit JetRep(int n)
        : jr(QRatRing{}, kJetOrder), r(fundamental_rep(n, q_vars())), qj(jr.q_value()) {}

    QJMat e(int i, int j) const { return mat_at_jet(jr, r.Eimg(i, j), qj); }
    QJMat k(int l) const { return mat_at_jet(jr, r.Kp(l), qj); }
    QJMat kinv(int l) const { return mat_at_jet(jr, r.Km(l), qj); }
};

bool check_generator_brackets(const JetRep& J, std::string& why) {
    const QJet& jr = J.jr;
    int n = J.r.n;
    // {k_l, k_m} = 0 exactly
    for (int l = 1; l <= n; ++l)
        for (int m = 1; m <= n; ++m)
            if (!mat_eq(jr, jet_bracket(jr, J.k(l), J.k(m)),
                        mat_zero(jr, J.r.dim, J.r.dim))) {
                why = "cartan-cartan";
                return false;
            }
    // {k_l, e_ij} = ((d_il - d_jl)/2) e_ij k_l
    for (int l = 1; l <= n; ++l)
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                if (i == j) continue;
                QJMat lhs = jet_bracket(jr, J.k(l), J.e(i, j));
                QJMat rhs = mat_mul(jr, J.e(i, j), J.k(l));
                QRat w = QRat((l == i ? 1 : 0) - (l == j ? 1 : 0), 2);
                for (auto& x : rhs.a) x = jet_scale(jr, x, w);
                if (!mat_eq_mod(jr, lhs, rhs, 2)) {
                    why = "cartan-root";
                    return false;
                }
            }
    // {e_{i,i+1}, e_{j+1,j}} = d_ij (k_i k_{i+1}^{-1} - k_i^{-1} k_{i+1})
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) {
            QJMat lhs = jet_bracket(jr, J.e(i, i + 1), J.e(j + 1, j));
            QJMat rhs = mat_zero(jr, J.r.dim, J.r.dim);
            if (i == j)
                rhs = mat_sub(jr, mat_mul(jr, J.k(i), J.kinv(i + 1)),
                              mat_mul(jr, J.kinv(i), J.k(i + 1)));
            if (!mat_eq_mod(jr, lhs, rhs, 2)) {
                why = "raising-lowering";
                return false;
            }
        }
    // distant same-sign brackets vanish
    for (int i = 1; i < n; ++i)
        for (int j = i + 2; j < n; ++j) {
            if (!mat_is_zero(jr, jet_bracket(jr, J.e(i, i + 1), J.e(j, j + 1))) ||
                !mat_is_zero(jr, jet_bracket(jr, J.e(i + 1, i), J.e(j + 1, j)))) {
                why = "distant";
                return false;
            }
        }
    return true;
}

bool check_serre_and_roots(const JetRep& J, std::string& why) {
    const QJet& jr = J.jr;
    int n = J.r.n;
    // quasi-classical Serre identities, both signs and both orderings
    for (int i = 1; i + 1 < n; ++i) {
        std::pair<QJMat, QJMat> pairs[4] = {
            {J.e(i, i + 1), J.e(i + 1, i + 2)},
            {J.e(i + 1, i + 2), J.e(i, i + 1)},
            {J.e(i + 1, i), J.e(i + 2, i + 1)},
            {J.e(i + 2, i + 1), J.e(i + 1, i)},
        };
        for (auto& [a, b] : pairs) {
            QJMat lhs = jet_bracket(jr, a, jet_bracket(jr, a, b));
            QJMat quad = mat_mul(jr, mat_mul(jr, a, a), b);
            for (auto& x : quad.a) x = jet_scale(jr, x, QRat(1, 4));
            if (!mat_eq_mod(jr, lhs, quad, kJetOrder - 2)) {
                why = "serre";
                return false;
            }
        }
    }
    // composite root vectors, independent of the pivot; plain and extended
    for (int i = 1; i <= n; ++i)
        for (int j = i + 2; j <= n; ++j)
            for (int k = i + 1; k < j; ++k) {
                QJMat br = jet_bracket(jr, J.e(i, k), J.e(k, j));
                QJMat half = mat_mul(jr, J.e(k, j), J.e(i, k));
                for (auto& x : half.a) x = jet_scale(jr, x, QRat(1, 2));
                QJMat lhs = mat_sub(jr, br, half);
                if (!mat_eq_mod(jr, lhs, J.e(i, j), 2)) {
                    why = "composite-positive";
                    return false;
                }
                // extended bracket, product taken in the opposite order
                QJMat half2 = mat_mul(jr, J.e(i, k), J.e(k, j));
                for (auto& x : half2.a) x = jet_scale(jr, x, QRat(1, 2));
                if (!mat_eq_mod(jr, mat_sub(jr, br, half2), J.e(i, j), 2)) {
                    why = "composite-positive-ex";
                    return false;
                }
                QJMat brn = jet_bracket(jr, J.e(j, k), J.e(k, i));
                QJMat halfn = mat_mul(jr, J.e(k, i), J.e(j, k));
                for (auto& x : halfn.a) x = jet_scale(jr, x, QRat(1, 2));
                if (!mat_eq_mod(jr, mat_add(jr, brn, halfn), J.e(j, i), 2)) {
                    why = "composite-negative";
                    return false;
                }
            }
    return true;
}

// Classical Hopf data as the first-order shadow of the quantum maps.
bool check_classical_hopf(const JetRep& J) {
    const QJet& jr = J.jr;
    int n = J.r.n;
    GenTable S = hopf_maps(J.r, HopfWhich::antipode);
    for (int i = 1; i < n; ++i) {
        QJMat Se = mat_at_jet(jr, S.E.at({i, i + 1}), J.qj);
        QJMat rhs = mat_mul(jr, J.e(i, i + 1), mat_mul(jr, J.kinv(i), J.k(i + 1)));
        for (auto& x : rhs.a) x = jet_scale(jr, x, QRat(-1));
        if (!mat_eq_mod(jr, Se, rhs, 2)) return false;
        QJMat Sf = mat_at_jet(jr, S.E.at({i + 1, i}), J.qj);
        QJMat rhsf = mat_mul(jr, mat_mul(jr, J.k(i), J.kinv(i + 1)), J.e(i + 1, i));
        for (auto& x : rhsf.a) x = jet_scale(jr, x, QRat(-1));
        if (!mat_eq_mod(jr, Sf, rhsf, 2)) return false;
    }
    return true;
}

// r-matrix form of the defining relations, with symbolic spectral
// parameters, in both gauges.
bool check_poisson_rmat(int n, ClassicalRKind kind, Gauge gauge) {
    using RJet = JetRing<RFRing>;
    VarSetPtr lv = make_vars({"lambda", "mu"});
    RFRing base(lv);
    RJet jr(base, 4);
    RJet::E qj = jr.q_value();
    RatFun lam = RatFun::variable(lv, "lambda");
    RatFun mu = RatFun::variable(lv, "mu");

    Rep r = fundamental_rep(n, q_vars());
    LPair L = build_L_operators(r, gauge);
    std::size_t d = r.dim;

    // outer matrices with jet-operator entries, embedded in aux legs {0,1}
    auto lop = [&](const RatFun& x, bool leg0) {
        std::size_t N = static_cast<std::size_t>(n);
        JMat<RFRing> out = mat_zero(jr, N * N * d, N * N * d);
        std::vector<std::size_t> dims{N, N};
        auto xj = jr.constant(x);
        auto xinvj = jr.constant(x.inverse());
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b) {
                JMat<RFRing> ent = mat_sub(
                    jr,
                    mat_at_jet(jr, L.Lplus.by_label(a, b), qj),
                    mat_at_jet(jr, L.Lminus.by_label(a, b), qj));
                // lambda L+ - lambda^{-1} L-
                JMat<RFRing> plus = mat_at_jet(jr, L.Lplus.by_label(a, b), qj);
                JMat<RFRing> minus = mat_at_jet(jr, L.Lminus.by_label(a, b), qj);
                (void)ent;
                for (auto& y : plus.a) y = jr.mul(y, xj);
                for (auto& y : minus.a) y = jr.mul(y, xinvj);
                ent = mat_sub(jr, plus, minus);
                // place at outer position
                OpMat unit = mat_zero(RFRing(lv), N, N);
                unit.by_label(a, b) = RatFun::one(lv);
                OpMat outer = embed_legs(RFRing(lv), unit, dims, {leg0 ? 0u : 1u});
                for (std::size_t p = 0; p < N * N; ++p)
                    for (std::size_t qq = 0; qq < N * N; ++qq) {
                        if (RFRing(lv).is_zero(outer.at(p, qq))) continue;
                        for (std::size_t ii = 0; ii < d; ++ii)
                            for (std::size_t jj = 0; jj < d; ++jj)
                                out.at(p * d + ii, qq * d + jj) =
                                    jr.add(out.at(p * d + ii, qq * d + jj),
                                           ent.at(ii, jj));
                    }
            }
        return out;
    };

    JMat<RFRing> A = lop(lam, true);
    JMat<RFRing> B = lop(mu, false);
    JMat<RFRing> lhs = jet_bracket(jr, A, B);

    // (lambda mu / (mu^2 - lambda^2)) [r_12(lambda/mu), l_13 l_23]
    Mat<RatFun> r12 = classical_r(base, n, kind, lam / mu);
    std::size_t N = static_cast<std::size_t>(n);
    JMat<RFRing> R12 = mat_zero(jr, N * N * d, N * N * d);
    for (std::size_t p = 0; p < N * N; ++p)
        for (std::size_t qq = 0; qq < N * N; ++qq) {
            if (base.is_zero(r12.at(p, qq))) continue;
            auto v = jr.constant(r12.at(p, qq));
            for (std::size_t ii = 0; ii < d; ++ii)
                R12.at(p * d + ii, qq * d + ii) = v;
        }
    JMat<RFRing> prod = mat_mul(jr, A, B);
    JMat<RFRing> rhs = mat_sub(jr, mat_mul(jr, R12, prod), mat_mul(jr, prod, R12));
    RatFun pref = lam * mu / (mu * mu - lam * lam);
    for (auto& x : rhs.a) x = jr.mul(x, jr.constant(pref));

    return mat_eq_mod(jr, lhs, rhs, 2);
}

// The noncommutative map formulas degenerate to the classical map when
// the entries commute.
bool check_map_limit(int n, std::uint64_t seed) {
    QRatRing ring;
    int done = 0;
    std::uint64_t s = seed;
    while (done < 10) {
        Rng rng(s++);
        try {
            YBState<QRatRing> st = random_classical_state(ring, n, rng);
            YBState<QRatRing> a = classical_forward_map(ring, st);
            YBState<QRatRing> b = qd_forward_map(ring, st);
            if (!mat_eq(ring, a.Lp1, b.Lp1) || !mat_eq(ring, a.Lm1, b.Lm1) ||
                !mat_eq(ring, a.Lp2, b.Lp2) || !mat_eq(ring, a.Lm2, b.Lm2))
                return false;
            YBState<QRatRing> c = classical_star_map(ring, st);
            YBState<QRatRing> e = star_map(ring, st);
            if (!mat_eq(ring, c.Lp1, e.Lp1) || !mat_eq(ring, c.Lm1, e.Lm1) ||
                !mat_eq(ring, c.Lp2, e.Lp2) || !mat_eq(ring, c.Lm2, e.Lm2))
                return false;
            ++done;
        } catch (const SingularQuasiDet&) {
        }
    }
    return true;
}

} // namespace

Report run_poisson_suite(const SuiteConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    Report rep;
    rep.suite = "poisson";
    int n = cfg.n;
    JetRep J(n);

    std::string why;
    bool gb = check_generator_brackets(J, why);
    rep.add("generator-brackets", "poisson-brackets", gb, gb ? "" : why);
    bool sr = check_serre_and_roots(J, why);
    rep.add("serre-and-composite-roots", "quasi-classical-serre", sr, sr ? "" : why);
    rep.add("classical-hopf", "classical-hopf", check_classical_hopf(J));
    rep.add("r-matrix-form-plain", "poisson-r-matrix",
            check_poisson_rmat(n, ClassicalRKind::plain, Gauge::plain));
    rep.add("r-matrix-form-twisted", "poisson-r-matrix",
            check_poisson_rmat(n, ClassicalRKind::twisted, Gauge::twisted));
    rep.add("map-commutative-limit", "map-limit", check_map_limit(n, cfg.seed));

    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return rep;
}

} // namespace ncyb

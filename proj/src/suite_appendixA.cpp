#include "ncyb/rep.hpp"
#include "ncyb/suites.hpp"

#include <chrono>
#include <string>
#include <vector>

namespace ncyb {

namespace {

using Op = OpMat;

// Simple-generator table embedded on a common carrier.
struct Tab {
    std::vector<Op> E, F;   // index i-1, i = 1..n-1
    std::vector<Op> Kp, Km; // index l-1, l = 1..n
};

Tab leg_table(const RFRing& g, const Rep& r, const std::vector<std::size_t>& dims,
              std::size_t leg) {
    Tab t;
    for (int i = 1; i < r.n; ++i) {
        t.E.push_back(embed_legs(g, r.Eimg(i, i + 1), dims, {leg}));
        t.F.push_back(embed_legs(g, r.Eimg(i + 1, i), dims, {leg}));
    }
    for (int l = 1; l <= r.n; ++l) {
        t.Kp.push_back(embed_legs(g, r.Kp(l), dims, {leg}));
        t.Km.push_back(embed_legs(g, r.Km(l), dims, {leg}));
    }
    return t;
}

Tab conjugate(const RFRing& g, const Tab& t, const Op& C, const Op& Cinv) {
    auto cj = [&](const Op& x) { return mat_mul(g, mat_mul(g, C, x), Cinv); };
    Tab o;
    for (const Op& x : t.E) o.E.push_back(cj(x));
    for (const Op& x : t.F) o.F.push_back(cj(x));
    for (const Op& x : t.Kp) o.Kp.push_back(cj(x));
    for (const Op& x : t.Km) o.Km.push_back(cj(x));
    return o;
}

// Coproduct combination of two commuting generator tables.
Tab delta_combine(const RFRing& g, const Tab& a, const Tab& b) {
    Tab o;
    int n = static_cast<int>(a.Kp.size());
    for (int i = 1; i < n; ++i) {
        std::size_t k = static_cast<std::size_t>(i) - 1;
        Op kb = mat_mul(g, b.Kp[k], b.Km[k + 1]);
        o.E.push_back(mat_add(g, mat_mul(g, a.E[k], kb), b.E[k]));
        Op ka = mat_mul(g, a.Km[k], a.Kp[k + 1]);
        o.F.push_back(mat_add(g, a.F[k], mat_mul(g, ka, b.F[k])));
    }
    for (std::size_t l = 0; l < a.Kp.size(); ++l) {
        o.Kp.push_back(mat_mul(g, a.Kp[l], b.Kp[l]));
        o.Km.push_back(mat_mul(g, a.Km[l], b.Km[l]));
    }
    return o;
}

bool tab_eq(const RFRing& g, const Tab& a, const Tab& b) {
    for (std::size_t i = 0; i < a.E.size(); ++i)
        if (!mat_eq(g, a.E[i], b.E[i]) || !mat_eq(g, a.F[i], b.F[i])) return false;
    for (std::size_t l = 0; l < a.Kp.size(); ++l)
        if (!mat_eq(g, a.Kp[l], b.Kp[l]) || !mat_eq(g, a.Km[l], b.Km[l])) return false;
    return true;
}

struct Setup {
    Rep r;
    RFRing g;
    std::size_t d;

    explicit Setup(int n) : r(fundamental_rep(n, q_vars())), g(r.ring()), d(r.dim) {}
};

// swap-coproduct identity: the opposite combination equals the conjugated one
bool check_map1(const Setup& s) {
    std::vector<std::size_t> dims{s.d, s.d};
    Tab t1 = leg_table(s.g, s.r, dims, 0);
    Tab t2 = leg_table(s.g, s.r, dims, 1);
    Op R = universal_R_image(s.r, s.r, RKind::R);
    Op Rinv = universal_R_inverse_image(s.r, s.r, RKind::R);
    Tab lhs = delta_combine(s.g, t2, t1); // opposite coproduct
    Tab rhs = conjugate(s.g, delta_combine(s.g, t1, t2), R, Rinv);
    return tab_eq(s.g, lhs, rhs);
}

// compatibility of the map with the coproduct applied on two of three legs
bool check_map23(const Setup& s, bool first_pair) {
    std::vector<std::size_t> dims{s.d, s.d, s.d};
    Tab t[3] = {leg_table(s.g, s.r, dims, 0), leg_table(s.g, s.r, dims, 1),
                leg_table(s.g, s.r, dims, 2)};
    Op R = universal_R_image(s.r, s.r, RKind::R);
    Op Rinv = universal_R_inverse_image(s.r, s.r, RKind::R);
    auto emb = [&](const Op& X, std::size_t a, std::size_t b) {
        return embed_legs(s.g, X, dims, {a, b});
    };
    Op R12 = emb(R, 0, 1), R13 = emb(R, 0, 2), R23 = emb(R, 1, 2);
    Op R12i = emb(Rinv, 0, 1), R13i = emb(Rinv, 0, 2), R23i = emb(Rinv, 1, 2);

    if (first_pair) {
        // legs (1,2) merged by the coproduct swap against leg 3 under the
        // cabled conjugator R13 R23
        Tab merged = delta_combine(s.g, t[0], t[1]);
        Op C = mat_mul(s.g, R13, R23), Ci = mat_mul(s.g, R23i, R13i);
        Tab lhs = delta_combine(s.g, t[2], merged);
        Tab rhs = conjugate(s.g, delta_combine(s.g, merged, t[2]), C, Ci);
        return tab_eq(s.g, lhs, rhs);
    }
    // leg 1 swaps against the merged pair (2,3) under R13 R12
    Tab merged = delta_combine(s.g, t[1], t[2]);
    Op C = mat_mul(s.g, R13, R12), Ci = mat_mul(s.g, R12i, R13i);
    Tab lhs = delta_combine(s.g, merged, t[0]);
    Tab rhs = conjugate(s.g, delta_combine(s.g, t[0], merged), C, Ci);
    return tab_eq(s.g, lhs, rhs);
}

// counit on either leg makes the conjugation trivial
bool check_map45(const Setup& s) {
    Rep tr = trivial_rep(s.r.n, s.r.vars);
    Op Ra = universal_R_image(tr, s.r, RKind::R);
    Op Rb = universal_R_image(s.r, tr, RKind::R);
    Op I = mat_identity_n(s.g, s.d);
    if (!mat_eq(s.g, Ra, I) || !mat_eq(s.g, Rb, I)) return false;
    // conjugating the remaining-leg generators is then the identity map
    std::vector<std::size_t> dims{s.d};
    Tab t = leg_table(s.g, s.r, dims, 0);
    Tab c = conjugate(s.g, t, Ra, Ra);
    return tab_eq(s.g, t, c);
}

// double-antipode exchange between the map and its inverse
bool check_r_rinv(const Setup& s) {
    std::vector<std::size_t> dims{s.d, s.d};
    Rep sr = antipode_rep(s.r);
    Op R = universal_R_image(s.r, s.r, RKind::R);
    Op Rinv = universal_R_inverse_image(s.r, s.r, RKind::R);
    Op Rss = universal_R_image(sr, sr, RKind::R);
    Op Rssi = universal_R_inverse_image(sr, sr, RKind::R);

    auto gens = [&](const Rep& rep) {
        std::vector<Op> v;
        for (int i = 1; i < rep.n; ++i) {
            v.push_back(rep.Eimg(i, i + 1));
            v.push_back(rep.Eimg(i + 1, i));
        }
        for (int l = 1; l <= rep.n; ++l) {
            v.push_back(rep.Kp(l));
            v.push_back(rep.Km(l));
        }
        return v;
    };
    std::vector<Op> gs = gens(sr); // images of the antipoded generators
    for (std::size_t leg = 0; leg < 2; ++leg)
        for (const Op& x : gs) {
            Op lhs = mat_mul(
                s.g, mat_mul(s.g, R, embed_legs(s.g, mat_transpose(x), dims, {leg})),
                Rinv);
            Op inner = mat_mul(
                s.g, mat_mul(s.g, Rssi, embed_legs(s.g, x, dims, {leg})), Rss);
            if (!mat_eq(s.g, lhs, mat_transpose(inner))) return false;
        }
    return true;
}

} // namespace

Report run_appendixA_suite(const SuiteConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    Report rep;
    rep.suite = "appendixA";
    Setup s(cfg.n);

    rep.add("map-vs-swapped-coproduct", "map-coproduct-swap", check_map1(s));
    rep.add("map-vs-merged-first-pair", "map-coproduct-merge", check_map23(s, true));
    rep.add("map-vs-merged-second-pair", "map-coproduct-merge", check_map23(s, false));
    rep.add("counit-leg-fixes-map", "map-counit", check_map45(s));
    rep.add("antipode-pair-inverts-map", "map-antipode", check_r_rinv(s));

    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return rep;
}

} // namespace ncyb

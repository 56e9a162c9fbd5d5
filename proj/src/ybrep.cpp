#include "ncyb/ybrep.hpp"

namespace ncyb {

void embed_l_pair(const Rep& r, Gauge gauge, const std::vector<std::size_t>& dims,
                  std::size_t leg, Mat<OpMat>& Lp, Mat<OpMat>& Lm) {
    RFRing base = r.ring();
    LPair pair = build_L_operators(r, gauge);
    int n = r.n;
    std::size_t total = 1;
    for (std::size_t d : dims) total *= d;
    QOpRing ring(base, total);
    Lp = mat_zero(ring, static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    Lm = Lp;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            Lp.by_label(i, j) = embed_legs(base, pair.Lplus.by_label(i, j), dims, {leg});
            Lm.by_label(i, j) = embed_legs(base, pair.Lminus.by_label(i, j), dims, {leg});
        }
}

RepMapSetup::RepMapSetup(Rep a, Rep b, Gauge g)
    : r1(std::move(a)),
      r2(std::move(b)),
      gauge(g),
      dims{r1.dim, r2.dim},
      ring(r1.ring(), r1.dim * r2.dim) {
    state.n = r1.n;
    embed_l_pair(r1, gauge, dims, 0, state.Lp1, state.Lm1);
    embed_l_pair(r2, gauge, dims, 1, state.Lp2, state.Lm2);
    RKind kf = gauge == Gauge::twisted ? RKind::R_twisted : RKind::R;
    RKind ks = gauge == Gauge::twisted ? RKind::Rstar_twisted : RKind::Rstar;
    R = universal_R_image(r1, r2, kf);
    Rinv = universal_R_inverse_image(r1, r2, kf);
    Rs = universal_R_image(r1, r2, ks);
    Rsinv = universal_R_inverse_image(r1, r2, ks);
}

QYBState adjoint_transform(const RepMapSetup& setup, const QYBState& st, bool star) {
    const RFRing& base = setup.ring.base;
    const OpMat& C = star ? setup.Rs : setup.R;
    const OpMat& Cinv = star ? setup.Rsinv : setup.Rinv;
    auto conj = [&](const Mat<OpMat>& A) {
        Mat<OpMat> out = A;
        for (std::size_t i = 0; i < A.rows(); ++i)
            for (std::size_t j = 0; j < A.cols(); ++j)
                out.at(i, j) = mat_mul(base, mat_mul(base, C, A.at(i, j)), Cinv);
        return out;
    };
    QYBState ts;
    ts.n = st.n;
    ts.Lp1 = conj(st.Lp1);
    ts.Lm1 = conj(st.Lm1);
    ts.Lp2 = conj(st.Lp2);
    ts.Lm2 = conj(st.Lm2);
    return ts;
}

} // namespace ncyb

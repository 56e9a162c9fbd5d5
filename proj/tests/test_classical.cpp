#include "doctest.h"

#include "ncyb/classical.hpp"
#include "ncyb/quasidet.hpp"

#include "oracles.hpp"

using namespace ncyb;

namespace {

bool states_equal(const QRatRing& ring, const YBState<QRatRing>& a,
                  const YBState<QRatRing>& b) {
    return mat_eq(ring, a.Lp1, b.Lp1) && mat_eq(ring, a.Lm1, b.Lm1) &&
           mat_eq(ring, a.Lp2, b.Lp2) && mat_eq(ring, a.Lm2, b.Lm2);
}

} // namespace

TEST_CASE("classical map: zero curvature, round trip, and quasi-determinant agreement") {
    QRatRing ring;
    Rng rng(424243);
    for (int n = 2; n <= 4; ++n) {
        int done = 0;
        while (done < 8) {
            YBState<QRatRing> st = random_classical_state(ring, n, rng);
            YBState<QRatRing> ts, back, qd_ts;
            try {
                ts = classical_forward_map(ring, st);
                back = classical_inverse_map(ring, ts);
                qd_ts = qd_forward_map(ring, st);
            } catch (const Singular&) {
                continue;
            } catch (const SingularQuasiDet&) {
                continue;
            }
            CHECK(check_zero_curvature(ring, st, ts));
            CHECK(check_block_zero_curvature(ring, st, ts));
            CHECK(states_equal(ring, back, st));
            // commutative specialization of the quasi-determinant map
            CHECK(states_equal(ring, ts, qd_ts));
            ++done;
        }
    }
}

TEST_CASE("classical companion map inverts with the swapped zero-curvature system") {
    QRatRing ring;
    Rng rng(77);
    int done = 0;
    while (done < 6) {
        YBState<QRatRing> st = random_classical_state(ring, 3, rng);
        YBState<QRatRing> ts;
        try {
            ts = classical_star_map(ring, st);
        } catch (const Singular&) {
            continue;
        } catch (const SingularQuasiDet&) {
            continue;
        }
        CHECK(check_zero_curvature_star(ring, st, ts));
        ++done;
    }
}

TEST_CASE("full core determinant reduces to the diagonal units") {
    QRatRing ring;
    Rng rng(909);
    for (int n = 2; n <= 4; ++n) {
        YBState<QRatRing> st = random_classical_state(ring, n, rng);
        Mat<QRat> J = mat_mul(ring, st.Lm1, st.Lp2);
        QRat det = cdet(ring, J);
        QRat expect = st.Lp2.by_label(n, n); // u_n^{(2)}
        for (int k = 1; k < n; ++k)
            expect *= st.Lp1.by_label(k, k) * st.Lp2.by_label(k, k);
        CHECK(det == expect);
    }
}

TEST_CASE("minor determinants of a product expand by Cauchy-Binet") {
    QRatRing ring;
    Rng rng(5152);
    const int N = 4;
    auto labs = default_labels(N);
    Mat<QRat> A = mat_zero(ring, labs, labs), B = A;
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
            A.by_label(i, j) = rng.small_rational_or_zero();
            B.by_label(i, j) = rng.small_rational_or_zero();
        }
    Mat<QRat> AB = mat_mul(ring, A, B);
    std::vector<int> rows{1, 3}, cols{2, 4};
    QRat lhs = cdet(ring, labeled_submatrix(AB, rows, cols));
    QRat rhs(0);
    for (int k1 = 1; k1 <= N; ++k1)
        for (int k2 = k1 + 1; k2 <= N; ++k2) {
            std::vector<int> mid{k1, k2};
            rhs += cdet(ring, labeled_submatrix(A, rows, mid)) *
                   cdet(ring, labeled_submatrix(B, mid, cols));
        }
    CHECK(lhs == rhs);
}

TEST_CASE("commutative Gauss factors are determinant ratios") {
    QRatRing ring;
    Rng rng(31316);
    const int n = 3;
    int done = 0;
    while (done < 5) {
        YBState<QRatRing> st = random_classical_state(ring, n, rng);
        Mat<QRat> J = mat_mul(ring, st.Lm1, st.Lp2);
        GaussFactors<QRat> gf;
        try {
            gf = gauss_decompose(ring, J, GaussVariant::senior);
        } catch (const SingularQuasiDet&) {
            continue;
        }
        auto minor = [&](const std::vector<int>& rows, const std::vector<int>& cols) {
            return cdet(ring, labeled_submatrix(J, rows, cols));
        };
        auto rng_lab = [&](int a, int b) {
            std::vector<int> v;
            for (int k = a; k <= b; ++k) v.push_back(k);
            return v;
        };
        for (int i = 1; i <= n; ++i) {
            QRat h = minor(rng_lab(i, n), rng_lab(i, n)) /
                     (i < n ? minor(rng_lab(i + 1, n), rng_lab(i + 1, n)) : QRat(1));
            CHECK(gf.H_diag.by_label(i, i) == h);
        }
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                std::vector<int> rE{i};
                for (int k = j + 1; k <= n; ++k) rE.push_back(k);
                CHECK(gf.E_upper.by_label(i, j) ==
                      minor(rE, rng_lab(j, n)) / minor(rng_lab(j, n), rng_lab(j, n)));
                std::vector<int> cF{i};
                for (int k = j + 1; k <= n; ++k) cF.push_back(k);
                CHECK(gf.F_lower.by_label(j, i) ==
                      minor(rng_lab(j, n), cF) / minor(rng_lab(j, n), rng_lab(j, n)));
            }
        // inverse factors: signed complementary minors over the same core
        Mat<QRat> Einv = field_inverse(ring, gf.E_upper);
        Mat<QRat> Finv = field_inverse(ring, gf.F_lower);
        for (int i = 1; i <= n; ++i)
            for (int j = i; j <= n; ++j) {
                std::vector<int> rows; // i..n with j removed
                for (int k = i; k <= n; ++k)
                    if (k != j) rows.push_back(k);
                QRat den = i < n ? minor(rng_lab(i + 1, n), rng_lab(i + 1, n)) : QRat(1);
                QRat sgn = ((j - i) % 2 == 0) ? QRat(1) : QRat(-1);
                CHECK(Einv.by_label(i, j) == sgn * minor(rows, rng_lab(i + 1, n)) / den);
                CHECK(Finv.by_label(j, i) == sgn * minor(rng_lab(i + 1, n), rows) / den);
            }
        ++done;
    }
}

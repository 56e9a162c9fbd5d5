#include "doctest.h"

#include "ncyb/rep.hpp"
#include "ncyb/ybmap.hpp"
#include "ncyb/ybrep.hpp"

using namespace ncyb;

namespace {

bool states_equal(const QOpRing& ring, const QYBState& a, const QYBState& b) {
    return mat_eq(ring, a.Lp1, b.Lp1) && mat_eq(ring, a.Lm1, b.Lm1) &&
           mat_eq(ring, a.Lp2, b.Lp2) && mat_eq(ring, a.Lm2, b.Lm2);
}

} // namespace

TEST_CASE("zero-curvature map matches conjugation on the n=2 carrier") {
    auto vars = q_vars();
    Rep r = fundamental_rep(2, vars);
    RepMapSetup setup(r, r, Gauge::twisted);
    QYBState expected = adjoint_transform(setup, setup.state, false);
    QYBState got = qd_forward_map(setup.ring, setup.state);
    CHECK(states_equal(setup.ring, got, expected));
    CHECK(check_zero_curvature(setup.ring, setup.state, got));
    CHECK(check_block_zero_curvature(setup.ring, setup.state, got));

    QYBState back = qd_inverse_map(setup.ring, got);
    CHECK(states_equal(setup.ring, back, setup.state));

    QYBState got_qp = qp_forward_map(setup.ring, setup.state);
    CHECK(states_equal(setup.ring, got_qp, expected));
    QYBState back_qp = qp_inverse_map(setup.ring, got);
    CHECK(states_equal(setup.ring, back_qp, setup.state));
}

TEST_CASE("companion map matches conjugation by the companion R-matrix") {
    auto vars = q_vars();
    Rep r = fundamental_rep(2, vars);
    RepMapSetup setup(r, r, Gauge::twisted);
    QYBState expected = adjoint_transform(setup, setup.state, true);
    QYBState got = star_map(setup.ring, setup.state);
    CHECK(states_equal(setup.ring, got, expected));
    CHECK(check_zero_curvature_star(setup.ring, setup.state, got));
}

// Representation-backed Yang-Baxter map states.
//
// Builds a YBState whose entries are operators on the joint carrier of two
// representations (each L-operator pair embedded in its own tensor leg), and
// the conjugation oracle: the image state is obtained by conjugating every
// entry with the R-matrix image on the joint carrier. The closed-form maps
// in ybmap.hpp must reproduce this conjugation exactly.
#pragma once

#include "ncyb/matrix.hpp"
#include "ncyb/rep.hpp"
#include "ncyb/ybmap.hpp"

namespace ncyb {

using QOpRing = OpRing<RFRing>;
using QYBState = YBState<QOpRing>;

struct RepMapSetup {
    Rep r1, r2;
    Gauge gauge = Gauge::twisted;
    std::vector<std::size_t> dims; // leg dimensions {d1, d2}
    QOpRing ring;                  // operators on the joint carrier
    QYBState state;
    OpMat R, Rinv;   // forward-map conjugator
    OpMat Rs, Rsinv; // companion-map conjugator

    RepMapSetup(Rep a, Rep b, Gauge g);
};

// Conjugates every entry of the state by R (star = false) or by the
// companion R-matrix (star = true).
QYBState adjoint_transform(const RepMapSetup& setup, const QYBState& st, bool star);

// Embeds the L-operator pair of `r` into tensor leg `leg` (0-based) of a
// carrier with the given leg dimensions.
void embed_l_pair(const Rep& r, Gauge gauge, const std::vector<std::size_t>& dims,
                  std::size_t leg, Mat<OpMat>& Lp, Mat<OpMat>& Lm);

} // namespace ncyb

// Finite-dimensional representation machinery for the quantum algebra:
// generator images, coproducts, Hopf maps, composite root vectors,
// q-exponentials, universal-R images, L-operators and closed-form R-matrices.
#pragma once

#include "ncyb/matrix.hpp"
#include "ncyb/ratfun.hpp"

#include <map>
#include <utility>
#include <vector>

namespace ncyb {

using OpMat = Mat<RatFun>;

// Images of the generator set {E_ij (i != j), q^{E_kk}, q^{-E_kk}}.
struct GenTable {
    std::map<std::pair<int, int>, OpMat> E; // i != j
    std::vector<OpMat> Kplus;               // q^{E_kk}, index k-1
    std::vector<OpMat> Kminus;              // q^{-E_kk}
};

struct Rep {
    int n = 0;
    std::size_t dim = 0;
    VarSetPtr vars; // scalar registry containing at least q
    GenTable gen;
    std::vector<std::vector<int>> weights; // weights[b][k]: E_kk eigenvalue on basis b

    const OpMat& Eimg(int i, int j) const { return gen.E.at({i, j}); }
    const OpMat& Kp(int k) const { return gen.Kplus.at(static_cast<std::size_t>(k) - 1); }
    const OpMat& Km(int k) const { return gen.Kminus.at(static_cast<std::size_t>(k) - 1); }
    // Diagonal image of E_kk (integer weights).
    OpMat Ekk(int k) const;
    // Diagonal image of q^{m * omega_k}, omega_k = E_11 + ... + E_kk.
    OpMat omega_power(int k, int m) const;
    RFRing ring() const { return RFRing(vars); }
};

inline RatFun qvar(const VarSetPtr& vars, int power = 1) {
    return RatFun::variable(vars, "q", power);
}

VarSetPtr q_vars();               // {q}
VarSetPtr q_lambda_mu_vars();     // {q, lambda, mu}

Rep fundamental_rep(int n, const VarSetPtr& vars);
Rep trivial_rep(int n, const VarSetPtr& vars); // one-dimensional counit carrier

// Composite root vector image by one admissible pivot k (i < k < j or j < k < i).
OpMat root_vector_image_choice(const Rep& r, int i, int j, int k);
// Fills all composite root-vector images (pivot choice k = min(i,j)+1).
void root_vector_images(Rep& r);

enum class CoproductVariant { delta, delta_op, delta_F };
Rep coproduct_rep(const Rep& r1, const Rep& r2, CoproductVariant variant);

// The homomorphism x -> pi(S(x))^T on the same carrier (transposition
// restores multiplicativity); weights are negated.
Rep antipode_rep(const Rep& r);

enum class HopfWhich { antipode, counit };
// Generator-image table of pi(S(x)) (anti-homomorphic table) or of the
// counit scalars lifted to dim x dim multiples of the identity.
GenTable hopf_maps(const Rep& r, HopfWhich which);

// exp_base(X) for nilpotent X; throws NotNilpotent past max_pow.
OpMat q_exponential(const RFRing& ring, const OpMat& X, const RatFun& base,
                    std::size_t max_pow = 64);

enum class RKind { R, Rstar, R_twisted, Rstar_twisted };
OpMat universal_R_image(const Rep& r1, const Rep& r2, RKind kind);
// Inverse built from reversed inverted factors (not by matrix inversion).
OpMat universal_R_inverse_image(const Rep& r1, const Rep& r2, RKind kind);

// Partial transposes on a d1*d2 kron-indexed square matrix.
OpMat partial_transpose_first(const RFRing& ring, const OpMat& M, std::size_t d1,
                              std::size_t d2);
OpMat partial_transpose_second(const RFRing& ring, const OpMat& M, std::size_t d1,
                               std::size_t d2);

enum class Gauge { plain, twisted };

struct LPair {
    Mat<OpMat> Lminus; // lower triangular operator matrix
    Mat<OpMat> Lplus;  // upper triangular operator matrix
    Gauge gauge = Gauge::twisted;
};

LPair build_L_operators(const Rep& r, Gauge gauge);

// (pi x 1) of a universal-R image, reshaped as an n x n operator matrix over
// the quantum space of r; used to cross-check build_L_operators.
Mat<OpMat> r_image_as_L(const Rep& r, RKind kind);

struct NumericR {
    OpMat Rplus;
    OpMat Rminus;
    Gauge variant;
};

NumericR numeric_R(int n, Gauge variant, const VarSetPtr& vars);
// lambda R+ - lambda^{-1} R-.
OpMat spectral_R(const NumericR& nr, const VarSetPtr& vars, const RatFun& lambda);
// Check form: P R.
OpMat check_R(const RFRing& ring, const OpMat& R, std::size_t n);

} // namespace ncyb

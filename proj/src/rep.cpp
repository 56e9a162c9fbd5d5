#include "ncyb/rep.hpp"

#include "ncyb/errors.hpp"

#include <algorithm>
#include <string>

namespace ncyb {

namespace {

OpMat diag_q_power(const RFRing& ring, const std::vector<int>& exps) {
    const std::size_t d = exps.size();
    OpMat D = mat_zero(ring, d, d);
    for (std::size_t b = 0; b < d; ++b) {
        D.at(b, b) = RatFun::variable(ring.vars, "q", exps[b]);
    }
    return D;
}

std::vector<std::pair<int, int>> ordered_root_pairs(int n) {
    // Ascending in the order that puts larger first index (then larger second
    // index) earlier: for n = 3 this yields (2,3), (1,3), (1,2).
    std::vector<std::pair<int, int>> pairs;
    for (int i = n - 1; i >= 1; --i) {
        for (int j = n; j > i; --j) {
            pairs.emplace_back(i, j);
        }
    }
    return pairs;
}

int weight_dot(const std::vector<int>& v, const std::vector<int>& w) {
    int s = 0;
    for (std::size_t k = 0; k < v.size(); ++k) s += v[k] * w[k];
    return s;
}

// Exponent of q on a tensor-basis pair for the Cartan prefactors.
enum class CartanMode { diag, diag_neg, lower_incl, lower_strict };

int cartan_exponent(CartanMode mode, const std::vector<int>& v, const std::vector<int>& w) {
    switch (mode) {
        case CartanMode::diag:
            return weight_dot(v, w);
        case CartanMode::diag_neg:
            return -weight_dot(v, w);
        case CartanMode::lower_incl: {
            int s = 0;
            for (std::size_t i = 0; i < v.size(); ++i) {
                for (std::size_t j = 0; j <= i; ++j) s += v[i] * w[j];
            }
            return s;
        }
        case CartanMode::lower_strict: {
            int s = 0;
            for (std::size_t i = 0; i < v.size(); ++i) {
                for (std::size_t j = 0; j < i; ++j) s += v[i] * w[j];
            }
            return s;
        }
    }
    return 0;
}

OpMat cartan_matrix(const RFRing& ring, const Rep& r1, const Rep& r2, CartanMode mode,
                    int sign = 1) {
    const std::size_t d1 = r1.dim;
    const std::size_t d2 = r2.dim;
    OpMat D = mat_zero(ring, d1 * d2, d1 * d2);
    for (std::size_t b1 = 0; b1 < d1; ++b1) {
        for (std::size_t b2 = 0; b2 < d2; ++b2) {
            const std::size_t t = b1 * d2 + b2;
            const int e = sign * cartan_exponent(mode, r1.weights[b1], r2.weights[b2]);
            D.at(t, t) = RatFun::variable(ring.vars, "q", e);
        }
    }
    return D;
}

} // namespace

OpMat Rep::Ekk(int k) const {
    RFRing rg = ring();
    OpMat D = mat_zero(rg, dim, dim);
    for (std::size_t b = 0; b < dim; ++b) {
        D.at(b, b) = RatFun::constant(vars, QRat(weights[b][static_cast<std::size_t>(k) - 1]));
    }
    return D;
}

OpMat Rep::omega_power(int k, int m) const {
    RFRing rg = ring();
    std::vector<int> exps(dim, 0);
    for (std::size_t b = 0; b < dim; ++b) {
        int s = 0;
        for (int t = 1; t <= k; ++t) s += weights[b][static_cast<std::size_t>(t) - 1];
        exps[b] = m * s;
    }
    return diag_q_power(rg, exps);
}

VarSetPtr q_vars() { return make_vars({"q"}); }

VarSetPtr q_lambda_mu_vars() { return make_vars({"q", "lambda", "mu"}); }

Rep fundamental_rep(int n, const VarSetPtr& vars) {
    Rep r;
    r.n = n;
    r.dim = static_cast<std::size_t>(n);
    r.vars = vars;
    RFRing ring(vars);
    const RatFun coef = qvar(vars) - qvar(vars, -1);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            OpMat M = mat_zero(ring, r.dim, r.dim);
            M.at(static_cast<std::size_t>(i) - 1, static_cast<std::size_t>(j) - 1) = coef;
            r.gen.E.insert({{i, j}, std::move(M)});
        }
    }
    for (int k = 1; k <= n; ++k) {
        std::vector<int> ep(r.dim, 0);
        ep[static_cast<std::size_t>(k) - 1] = 1;
        r.gen.Kplus.push_back(diag_q_power(ring, ep));
        for (auto& e : ep) e = -e;
        r.gen.Kminus.push_back(diag_q_power(ring, ep));
    }
    for (int b = 1; b <= n; ++b) {
        std::vector<int> w(static_cast<std::size_t>(n), 0);
        w[static_cast<std::size_t>(b) - 1] = 1;
        r.weights.push_back(std::move(w));
    }
    return r;
}

Rep trivial_rep(int n, const VarSetPtr& vars) {
    Rep r;
    r.n = n;
    r.dim = 1;
    r.vars = vars;
    RFRing ring(vars);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (i != j) r.gen.E.insert({{i, j}, mat_zero(ring, 1, 1)});
        }
    }
    for (int k = 1; k <= n; ++k) {
        r.gen.Kplus.push_back(mat_identity_n(ring, 1));
        r.gen.Kminus.push_back(mat_identity_n(ring, 1));
    }
    r.weights.push_back(std::vector<int>(static_cast<std::size_t>(n), 0));
    return r;
}

OpMat root_vector_image_choice(const Rep& r, int i, int j, int k) {
    RFRing ring(r.vars);
    const RatFun coef = (qvar(r.vars) - qvar(r.vars, -1)).inverse();
    if (i < j) {
        if (!(i < k && k < j)) throw LabelError("pivot out of range");
        const OpMat& A = r.Eimg(i, k);
        const OpMat& B = r.Eimg(k, j);
        return mat_scale(ring, coef,
                         mat_sub(ring, mat_mul(ring, A, B),
                                 mat_scale(ring, qvar(r.vars), mat_mul(ring, B, A))));
    }
    if (!(j < k && k < i)) throw LabelError("pivot out of range");
    const OpMat& A = r.Eimg(i, k);
    const OpMat& B = r.Eimg(k, j);
    return mat_scale(ring, coef,
                     mat_sub(ring, mat_mul(ring, A, B),
                             mat_scale(ring, qvar(r.vars, -1), mat_mul(ring, B, A))));
}

void root_vector_images(Rep& r) {
    for (int gap = 2; gap < r.n; ++gap) {
        for (int i = 1; i + gap <= r.n; ++i) {
            const int j = i + gap;
            r.gen.E[{i, j}] = root_vector_image_choice(r, i, j, i + 1);
            r.gen.E[{j, i}] = root_vector_image_choice(r, j, i, i + 1);
        }
    }
}

Rep coproduct_rep(const Rep& r1, const Rep& r2, CoproductVariant variant) {
    if (r1.n != r2.n) throw ShapeError("coproduct factors have different rank");
    Rep r;
    r.n = r1.n;
    r.dim = r1.dim * r2.dim;
    r.vars = r1.vars;
    RFRing ring(r.vars);
    const OpMat I1 = mat_identity_n(ring, r1.dim);
    const OpMat I2 = mat_identity_n(ring, r2.dim);

    for (int k = 1; k <= r.n; ++k) {
        r.gen.Kplus.push_back(kron(ring, r1.Kp(k), r2.Kp(k)));
        r.gen.Kminus.push_back(kron(ring, r1.Km(k), r2.Km(k)));
    }
    for (int i = 1; i < r.n; ++i) {
        const OpMat& e1 = r1.Eimg(i, i + 1);
        const OpMat& f1 = r1.Eimg(i + 1, i);
        const OpMat& e2 = r2.Eimg(i, i + 1);
        const OpMat& f2 = r2.Eimg(i + 1, i);
        OpMat de, df;
        switch (variant) {
            case CoproductVariant::delta: {
                OpMat k2 = mat_mul(ring, r2.Kp(i), r2.Km(i + 1));
                OpMat k1 = mat_mul(ring, r1.Km(i), r1.Kp(i + 1));
                de = mat_add(ring, kron(ring, e1, k2), kron(ring, I1, e2));
                df = mat_add(ring, kron(ring, f1, I2), kron(ring, k1, f2));
                break;
            }
            case CoproductVariant::delta_op: {
                OpMat k1 = mat_mul(ring, r1.Kp(i), r1.Km(i + 1));
                OpMat k2 = mat_mul(ring, r2.Km(i), r2.Kp(i + 1));
                de = mat_add(ring, kron(ring, k1, e2), kron(ring, e1, I2));
                df = mat_add(ring, kron(ring, I1, f2), kron(ring, f1, k2));
                break;
            }
            case CoproductVariant::delta_F: {
                de = mat_add(ring, kron(ring, e1, r2.Kp(i)), kron(ring, r1.Km(i), e2));
                df = mat_add(ring, kron(ring, f1, r2.Km(i + 1)),
                             kron(ring, r1.Kp(i + 1), f2));
                break;
            }
        }
        r.gen.E.insert({{i, i + 1}, std::move(de)});
        r.gen.E.insert({{i + 1, i}, std::move(df)});
    }
    for (std::size_t b1 = 0; b1 < r1.dim; ++b1) {
        for (std::size_t b2 = 0; b2 < r2.dim; ++b2) {
            std::vector<int> w(static_cast<std::size_t>(r.n));
            for (std::size_t k = 0; k < w.size(); ++k) {
                w[k] = r1.weights[b1][k] + r2.weights[b2][k];
            }
            r.weights.push_back(std::move(w));
        }
    }
    root_vector_images(r);
    return r;
}

GenTable hopf_maps(const Rep& r, HopfWhich which) {
    GenTable t;
    RFRing ring(r.vars);
    if (which == HopfWhich::counit) {
        const OpMat Z = mat_zero(ring, r.dim, r.dim);
        const OpMat I = mat_identity_n(ring, r.dim);
        for (int i = 1; i < r.n; ++i) {
            t.E.insert({{i, i + 1}, Z});
            t.E.insert({{i + 1, i}, Z});
        }
        for (int k = 1; k <= r.n; ++k) {
            t.Kplus.push_back(I);
            t.Kminus.push_back(I);
        }
        return t;
    }
    for (int i = 1; i < r.n; ++i) {
        OpMat k_minus = mat_mul(ring, r.Km(i), r.Kp(i + 1));
        OpMat k_plus = mat_mul(ring, r.Kp(i), r.Km(i + 1));
        t.E.insert({{i, i + 1}, mat_neg(ring, mat_mul(ring, r.Eimg(i, i + 1), k_minus))});
        t.E.insert({{i + 1, i}, mat_neg(ring, mat_mul(ring, k_plus, r.Eimg(i + 1, i)))});
    }
    for (int k = 1; k <= r.n; ++k) {
        t.Kplus.push_back(r.Km(k));
        t.Kminus.push_back(r.Kp(k));
    }
    return t;
}

Rep antipode_rep(const Rep& r) {
    Rep s;
    s.n = r.n;
    s.dim = r.dim;
    s.vars = r.vars;
    RFRing ring(r.vars);
    GenTable st = hopf_maps(r, HopfWhich::antipode);
    for (int i = 1; i < r.n; ++i) {
        s.gen.E.insert({{i, i + 1}, mat_transpose(st.E.at({i, i + 1}))});
        s.gen.E.insert({{i + 1, i}, mat_transpose(st.E.at({i + 1, i}))});
    }
    for (int k = 1; k <= r.n; ++k) {
        s.gen.Kplus.push_back(mat_transpose(st.Kplus[static_cast<std::size_t>(k) - 1]));
        s.gen.Kminus.push_back(mat_transpose(st.Kminus[static_cast<std::size_t>(k) - 1]));
    }
    for (const auto& w : r.weights) {
        std::vector<int> nw(w.size());
        for (std::size_t k = 0; k < w.size(); ++k) nw[k] = -w[k];
        s.weights.push_back(std::move(nw));
    }
    root_vector_images(s);
    return s;
}

OpMat q_exponential(const RFRing& ring, const OpMat& X, const RatFun& base,
                    std::size_t max_pow) {
    const std::size_t d = X.rows();
    OpMat acc = mat_identity_n(ring, d);
    OpMat term = mat_identity_n(ring, d);
    const RatFun one = RatFun::one(ring.vars);
    for (std::size_t k = 1; k <= max_pow; ++k) {
        term = mat_mul(ring, term, X);
        if (mat_is_zero(ring, term)) return acc;
        // (k)_base = (1 - base^k) / (1 - base)
        RatFun denom = (one - base.pow(static_cast<int>(k))) / (one - base);
        term = mat_scale(ring, denom.inverse(), term);
        acc = mat_add(ring, acc, term);
    }
    throw NotNilpotent("q_exponential: argument power did not vanish");
}

namespace {

OpMat universal_R_image_impl(const Rep& r1, const Rep& r2, RKind kind, bool invert) {
    RFRing ring(r1.vars);
    const std::size_t d1 = r1.dim;
    const std::size_t d2 = r2.dim;
    const RatFun q = qvar(r1.vars);
    const RatFun coef = (q - qvar(r1.vars, -1)).inverse();
    const bool star = (kind == RKind::Rstar || kind == RKind::Rstar_twisted);
    const int csign = invert ? -1 : 1;

    std::vector<std::pair<int, int>> pairs = ordered_root_pairs(r1.n);
    if (star != invert) std::reverse(pairs.begin(), pairs.end());

    std::vector<OpMat> factors;
    for (const auto& [i, j] : pairs) {
        OpMat X = star ? kron(ring, r1.Eimg(j, i), r2.Eimg(i, j))
                       : kron(ring, r1.Eimg(i, j), r2.Eimg(j, i));
        RatFun c = star ? -coef : coef;
        if (invert) c = -c;
        RatFun base = qvar(r1.vars, star ? 2 : -2);
        if (invert) base = base.inverse();
        factors.push_back(q_exponential(ring, mat_scale(ring, c, X), base));
    }

    OpMat mid = mat_identity_n(ring, d1 * d2);
    for (const auto& f : factors) mid = mat_mul(ring, mid, f);

    switch (kind) {
        case RKind::R: {
            OpMat D = cartan_matrix(ring, r1, r2, CartanMode::diag, csign);
            return invert ? mat_mul(ring, mid, D) : mat_mul(ring, D, mid);
        }
        case RKind::Rstar: {
            OpMat D = cartan_matrix(ring, r1, r2, CartanMode::diag_neg, csign);
            return invert ? mat_mul(ring, D, mid) : mat_mul(ring, mid, D);
        }
        case RKind::R_twisted: {
            OpMat D = cartan_matrix(ring, r1, r2, CartanMode::lower_incl, csign);
            return mat_mul(ring, D, mat_mul(ring, mid, D));
        }
        case RKind::Rstar_twisted: {
            OpMat D = cartan_matrix(ring, r1, r2, CartanMode::lower_strict, csign);
            return mat_mul(ring, D, mat_mul(ring, mid, D));
        }
    }
    throw UsageError("unknown R kind");
}

} // namespace

OpMat universal_R_image(const Rep& r1, const Rep& r2, RKind kind) {
    return universal_R_image_impl(r1, r2, kind, false);
}

OpMat universal_R_inverse_image(const Rep& r1, const Rep& r2, RKind kind) {
    return universal_R_image_impl(r1, r2, kind, true);
}

OpMat partial_transpose_first(const RFRing& ring, const OpMat& M, std::size_t d1,
                              std::size_t d2) {
    OpMat out = mat_zero(ring, d1 * d2, d1 * d2);
    for (std::size_t a = 0; a < d1; ++a)
        for (std::size_t b = 0; b < d2; ++b)
            for (std::size_t c = 0; c < d1; ++c)
                for (std::size_t e = 0; e < d2; ++e)
                    out.at(a * d2 + b, c * d2 + e) = M.at(c * d2 + b, a * d2 + e);
    return out;
}

OpMat partial_transpose_second(const RFRing& ring, const OpMat& M, std::size_t d1,
                               std::size_t d2) {
    OpMat out = mat_zero(ring, d1 * d2, d1 * d2);
    for (std::size_t a = 0; a < d1; ++a)
        for (std::size_t b = 0; b < d2; ++b)
            for (std::size_t c = 0; c < d1; ++c)
                for (std::size_t e = 0; e < d2; ++e)
                    out.at(a * d2 + b, c * d2 + e) = M.at(a * d2 + e, c * d2 + b);
    return out;
}

LPair build_L_operators(const Rep& r, Gauge gauge) {
    RFRing ring(r.vars);
    OpRing<RFRing> op(ring, r.dim);
    const int n = r.n;
    Mat<OpMat> Lm = mat_zero(op, static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    Mat<OpMat> Lp = mat_zero(op, static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
        const std::size_t kk = static_cast<std::size_t>(k) - 1;
        if (gauge == Gauge::plain) {
            Lm.at(kk, kk) = r.Km(k);
            Lp.at(kk, kk) = r.Kp(k);
        } else {
            Lm.at(kk, kk) = r.omega_power(k - 1, 2);
            Lp.at(kk, kk) = r.omega_power(k, 2);
        }
    }
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const std::size_t ii = static_cast<std::size_t>(i) - 1;
            const std::size_t jj = static_cast<std::size_t>(j) - 1;
            if (gauge == Gauge::plain) {
                Lm.at(jj, ii) = mat_neg(ring, mat_mul(ring, r.Eimg(i, j), r.Km(i)));
                Lp.at(ii, jj) = mat_mul(ring, r.Kp(i), r.Eimg(j, i));
            } else {
                OpMat wl = mat_mul(ring, r.omega_power(i - 1, 1), r.omega_power(j - 1, 1));
                Lm.at(jj, ii) = mat_neg(ring, mat_mul(ring, wl, r.Eimg(i, j)));
                OpMat wu = mat_mul(ring, r.omega_power(i, 1), r.omega_power(j, 1));
                Lp.at(ii, jj) = mat_mul(ring, wu, r.Eimg(j, i));
            }
        }
    }
    return LPair{std::move(Lm), std::move(Lp), gauge};
}

Mat<OpMat> r_image_as_L(const Rep& r, RKind kind) {
    RFRing ring(r.vars);
    Rep fund = fundamental_rep(r.n, r.vars);
    root_vector_images(fund);
    OpMat M = universal_R_image(fund, r, kind);
    OpRing<RFRing> op(ring, r.dim);
    const std::size_t n = static_cast<std::size_t>(r.n);
    Mat<OpMat> L = mat_zero(op, n, n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            OpMat blk = mat_zero(ring, r.dim, r.dim);
            for (std::size_t s = 0; s < r.dim; ++s)
                for (std::size_t t = 0; t < r.dim; ++t)
                    blk.at(s, t) = M.at(a * r.dim + s, b * r.dim + t);
            L.at(a, b) = std::move(blk);
        }
    }
    return L;
}

NumericR numeric_R(int n, Gauge variant, const VarSetPtr& vars) {
    RFRing ring(vars);
    const std::size_t d = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    OpMat Rp = mat_zero(ring, d, d);
    OpMat Rm = mat_zero(ring, d, d);
    const std::size_t nn = static_cast<std::size_t>(n);
    for (std::size_t i = 0; i < nn; ++i) {
        for (std::size_t j = 0; j < nn; ++j) {
            const std::size_t t = i * nn + j;
            if (variant == Gauge::plain) {
                Rp.at(t, t) = RatFun::variable(vars, "q", i == j ? 1 : 0);
                Rm.at(t, t) = RatFun::variable(vars, "q", i == j ? -1 : 0);
            } else {
                Rp.at(t, t) = RatFun::variable(vars, "q", i >= j ? 2 : 0);
                Rm.at(t, t) = RatFun::variable(vars, "q", i > j ? 2 : 0);
            }
        }
    }
    const RatFun cp = variant == Gauge::plain
                          ? RatFun::variable(vars, "q") - RatFun::variable(vars, "q", -1)
                          : RatFun::variable(vars, "q", 2) - RatFun::one(vars);
    for (std::size_t i = 0; i < nn; ++i) {
        for (std::size_t j = i + 1; j < nn; ++j) {
            Rp.at(i * nn + j, j * nn + i) = cp;
            Rm.at(j * nn + i, i * nn + j) = -cp;
        }
    }
    return NumericR{std::move(Rp), std::move(Rm), variant};
}

OpMat spectral_R(const NumericR& nr, const VarSetPtr& vars, const RatFun& lambda) {
    RFRing ring(vars);
    return mat_sub(ring, mat_scale(ring, lambda, nr.Rplus),
                   mat_scale(ring, lambda.inverse(), nr.Rminus));
}

OpMat check_R(const RFRing& ring, const OpMat& R, std::size_t n) {
    OpMat P = mat_zero(ring, n * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            P.at(i * n + j, j * n + i) = RatFun::one(ring.vars);
    return mat_mul(ring, P, R);
}

} // namespace ncyb

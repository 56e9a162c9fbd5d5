#include "ncyb/poly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace ncyb {

int VarSet::index(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<int>(i);
    throw LabelError("unknown variable '" + name + "'");
}

VarSetPtr make_vars(std::vector<std::string> names) {
    auto vs = std::make_shared<VarSet>();
    vs->names = std::move(names);
    return vs;
}

int grlex_cmp(const Expv& a, const Expv& b) {
    long da = 0, db = 0;
    for (int e : a) da += e;
    for (int e : b) db += e;
    if (da != db) return da < db ? -1 : 1;
    // Later-registered variables are more significant.
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

void Poly::check_same(const Poly& o) const {
    if (vars_ == o.vars_) return;
    if (vars_ && o.vars_ && *vars_ == *o.vars_) return;
    throw TowerMismatch("polynomials over different variable registries");
}

Poly Poly::constant(const VarSetPtr& vars, const QRat& c) {
    Poly p(vars);
    if (c != 0) p.terms_.push_back({Expv(vars->size(), 0), c});
    return p;
}

Poly Poly::variable(const VarSetPtr& vars, int idx, int power) {
    Expv e(vars->size(), 0);
    e.at(static_cast<std::size_t>(idx)) = power;
    return monomial(vars, std::move(e), QRat(1));
}

Poly Poly::variable(const VarSetPtr& vars, const std::string& name, int power) {
    return variable(vars, vars->index(name), power);
}

Poly Poly::monomial(const VarSetPtr& vars, Expv exp, const QRat& c) {
    Poly p(vars);
    if (exp.size() != vars->size()) throw ShapeError("monomial exponent arity");
    if (c != 0) p.terms_.push_back({std::move(exp), c});
    return p;
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    for (int e : terms_[0].exp)
        if (e != 0) return false;
    return true;
}

QRat Poly::constant_value() const {
    if (terms_.empty()) return QRat(0);
    assert(is_constant());
    return terms_[0].coef;
}

int Poly::total_degree() const {
    if (terms_.empty()) return -1;
    int best = 0;
    for (const auto& t : terms_) {
        int d = 0;
        for (int e : t.exp) d += e;
        best = std::max(best, d);
    }
    return best;
}

int Poly::degree_in(int var) const {
    if (terms_.empty()) return -1;
    int best = 0;
    for (const auto& t : terms_) best = std::max(best, t.exp[static_cast<std::size_t>(var)]);
    return best;
}

bool Poly::depends_on(int var) const {
    for (const auto& t : terms_)
        if (t.exp[static_cast<std::size_t>(var)] != 0) return true;
    return false;
}

const Poly::Term& Poly::leading_term() const {
    assert(!terms_.empty());
    return terms_.front();
}

Poly Poly::from_map(const VarSetPtr& vars, std::map<Expv, QRat>&& m) {
    Poly p(vars);
    p.terms_.reserve(m.size());
    for (auto& [e, c] : m)
        if (c != 0) p.terms_.push_back({e, c});
    std::sort(p.terms_.begin(), p.terms_.end(),
              [](const Term& a, const Term& b) { return grlex_cmp(a.exp, b.exp) > 0; });
    return p;
}

Poly Poly::operator-() const {
    Poly p(*this);
    for (auto& t : p.terms_) t.coef = -t.coef;
    return p;
}

Poly Poly::operator+(const Poly& o) const {
    check_same(o);
    Poly p(vars_ ? vars_ : o.vars_);
    p.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (i == terms_.size()) {
            p.terms_.push_back(o.terms_[j++]);
        } else if (j == o.terms_.size()) {
            p.terms_.push_back(terms_[i++]);
        } else {
            int c = grlex_cmp(terms_[i].exp, o.terms_[j].exp);
            if (c > 0) {
                p.terms_.push_back(terms_[i++]);
            } else if (c < 0) {
                p.terms_.push_back(o.terms_[j++]);
            } else {
                QRat s = terms_[i].coef + o.terms_[j].coef;
                if (s != 0) p.terms_.push_back({terms_[i].exp, s});
                ++i;
                ++j;
            }
        }
    }
    return p;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    check_same(o);
    const VarSetPtr& vs = vars_ ? vars_ : o.vars_;
    if (terms_.empty() || o.terms_.empty()) return Poly(vs);
    std::map<Expv, QRat> acc;
    for (const auto& a : terms_) {
        for (const auto& b : o.terms_) {
            Expv e(a.exp);
            for (std::size_t k = 0; k < e.size(); ++k) e[k] += b.exp[k];
            QRat& slot = acc[std::move(e)];
            slot += a.coef * b.coef;
        }
    }
    return from_map(vs, std::move(acc));
}

Poly Poly::operator*(const QRat& c) const {
    if (c == 0) return Poly(vars_);
    Poly p(*this);
    for (auto& t : p.terms_) t.coef *= c;
    return p;
}

Poly Poly::pow(int k) const {
    assert(k >= 0);
    Poly r = constant(vars_, QRat(1));
    Poly b = *this;
    while (k > 0) {
        if (k & 1) r = r * b;
        b = (k >>= 1) ? b * b : b;
    }
    return r;
}

bool Poly::operator==(const Poly& o) const {
    check_same(o);
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].exp != o.terms_[i].exp || terms_[i].coef != o.terms_[i].coef) return false;
    return true;
}

Poly Poly::coeff_in_var(int var, int d) const {
    Poly p(vars_);
    for (const auto& t : terms_) {
        if (t.exp[static_cast<std::size_t>(var)] == d) {
            Expv e(t.exp);
            e[static_cast<std::size_t>(var)] = 0;
            p.terms_.push_back({std::move(e), t.coef});
        }
    }
    std::sort(p.terms_.begin(), p.terms_.end(),
              [](const Term& a, const Term& b) { return grlex_cmp(a.exp, b.exp) > 0; });
    return p;
}

Poly Poly::extend(const VarSetPtr& bigger) const {
    std::vector<std::size_t> where(vars_ ? vars_->size() : 0);
    for (std::size_t i = 0; i < where.size(); ++i)
        where[i] = static_cast<std::size_t>(bigger->index(vars_->names[i]));
    Poly p(bigger);
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        Expv e(bigger->size(), 0);
        for (std::size_t i = 0; i < where.size(); ++i) e[where[i]] = t.exp[i];
        p.terms_.push_back({std::move(e), t.coef});
    }
    std::sort(p.terms_.begin(), p.terms_.end(),
              [](const Term& a, const Term& b) { return grlex_cmp(a.exp, b.exp) > 0; });
    return p;
}

QRat Poly::eval(const std::vector<QRat>& point) const {
    QRat acc(0);
    for (const auto& t : terms_) {
        QRat m = t.coef;
        for (std::size_t k = 0; k < t.exp.size(); ++k) {
            for (int e = 0; e < t.exp[k]; ++e) m *= point.at(k);
        }
        acc += m;
    }
    return acc;
}

std::optional<Poly> Poly::div_exact(const Poly& a, const Poly& b) {
    a.check_same(b);
    if (b.is_zero()) return std::nullopt;
    const VarSetPtr& vs = a.vars_ ? a.vars_ : b.vars_;
    Poly r = a;
    Poly q = Poly::zero(vs);
    const Term& lb = b.leading_term();
    while (!r.is_zero()) {
        const Term& lr = r.leading_term();
        Expv e(lr.exp);
        for (std::size_t k = 0; k < e.size(); ++k) {
            e[k] -= lb.exp[k];
            if (e[k] < 0) return std::nullopt;
        }
        Poly qt = Poly::monomial(vs, std::move(e), lr.coef / lb.coef);
        q = q + qt;
        r = r - qt * b;
    }
    return q;
}

namespace {

// Pseudo-remainder of f by g in variable `var`: lc(g)^(df-dg+1) f mod g.
Poly pseudo_rem(const Poly& f, const Poly& g, int var, const VarSetPtr& vs) {
    int dg = g.degree_in(var);
    Poly lcg = g.coeff_in_var(var, dg);
    Poly r = f;
    int e = f.degree_in(var) - dg + 1;
    while (!r.is_zero() && r.degree_in(var) >= dg) {
        int dr = r.degree_in(var);
        Poly lcr = r.coeff_in_var(var, dr);
        Poly shift = Poly::variable(vs, var, dr - dg);
        r = lcg * r - lcr * shift * g;
        --e;
    }
    if (e < 0) e = 0;
    return lcg.pow(e) * r;
}

// Content of f with respect to `var` (gcd of its coefficient polynomials).
Poly content_in_var(const Poly& f, int var) {
    Poly c = Poly::zero(f.vars());
    for (int d = 0; d <= f.degree_in(var); ++d) {
        Poly cd = f.coeff_in_var(var, d);
        if (!cd.is_zero()) c = Poly::gcd(c, cd);
        if (c.is_constant() && !c.is_zero()) break;
    }
    return c;
}

Poly make_monic(const Poly& p) {
    if (p.is_zero()) return p;
    return p * (QRat(1) / p.leading_term().coef);
}

} // namespace

Poly Poly::gcd(const Poly& a, const Poly& b) {
    a.check_same(b);
    const VarSetPtr& vs = a.vars_ ? a.vars_ : b.vars_;
    if (a.is_zero()) return make_monic(b);
    if (b.is_zero()) return make_monic(a);
    if (a.is_constant() || b.is_constant()) return constant(vs, QRat(1));

    // Common monomial part.
    Expv mexp(vs->size(), 0);
    bool first = true;
    auto accumulate_min = [&](const Poly& p) {
        for (const auto& t : p.terms_) {
            if (first) {
                mexp = t.exp;
                first = false;
            } else {
                for (std::size_t k = 0; k < mexp.size(); ++k) mexp[k] = std::min(mexp[k], t.exp[k]);
            }
        }
    };
    accumulate_min(a);
    accumulate_min(b);
    bool have_monomial = false;
    for (int e : mexp) have_monomial = have_monomial || e > 0;
    if (have_monomial) {
        Poly m = monomial(vs, mexp, QRat(1));
        Poly ar = *div_exact(a, m);
        Poly br = *div_exact(b, m);
        return make_monic(m * gcd(ar, br));
    }

    if (a.is_monomial() || b.is_monomial()) return constant(vs, QRat(1));

    // Cheap exact-divisibility shortcuts.
    if (div_exact(a, b)) return make_monic(b);
    if (div_exact(b, a)) return make_monic(a);

    // Main variable: the most significant variable either polynomial uses.
    int var = -1;
    for (int k = static_cast<int>(vs->size()) - 1; k >= 0; --k) {
        if (a.depends_on(k) || b.depends_on(k)) {
            var = k;
            break;
        }
    }
    assert(var >= 0);
    if (!a.depends_on(var) || !b.depends_on(var)) {
        // The main variable cannot divide both; recurse on the content side.
        const Poly& with = a.depends_on(var) ? a : b;
        const Poly& without = a.depends_on(var) ? b : a;
        return make_monic(gcd(content_in_var(with, var), without));
    }

    Poly ca = content_in_var(a, var);
    Poly cb = content_in_var(b, var);
    Poly pa = *div_exact(a, ca);
    Poly pb = *div_exact(b, cb);
    Poly d = gcd(ca, cb);

    // Subresultant polynomial remainder sequence on the primitive parts.
    Poly f = pa, g = pb;
    if (f.degree_in(var) < g.degree_in(var)) std::swap(f, g);
    Poly hh = constant(vs, QRat(1));
    Poly gg = constant(vs, QRat(1));
    while (true) {
        int delta = f.degree_in(var) - g.degree_in(var);
        Poly r = pseudo_rem(f, g, var, vs);
        if (r.is_zero()) break;
        if (r.degree_in(var) == 0) {
            // Primitive parts are coprime in the main variable.
            return make_monic(d);
        }
        f = g;
        Poly divisor = gg * hh.pow(delta);
        auto q = div_exact(r, divisor);
        assert(q.has_value());
        g = *q;
        gg = f.coeff_in_var(var, f.degree_in(var));
        if (delta >= 1) {
            auto hq = div_exact(gg.pow(delta), hh.pow(delta - 1));
            assert(hq.has_value());
            hh = *hq;
        }
    }
    Poly pg = *div_exact(g, content_in_var(g, var));
    return make_monic(d * pg);
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool firstt = true;
    for (const auto& t : terms_) {
        QRat c = t.coef;
        if (!firstt) {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        firstt = false;
        bool any_var = false;
        std::ostringstream mono;
        for (std::size_t k = 0; k < t.exp.size(); ++k) {
            if (t.exp[k] == 0) continue;
            if (any_var) mono << "*";
            mono << vars_->names[k];
            if (t.exp[k] != 1) mono << "^" << t.exp[k];
            any_var = true;
        }
        if (!any_var) {
            os << c.str();
        } else {
            if (c != 1) os << c.str() << "*";
            os << mono.str();
        }
    }
    return os.str();
}

} // namespace ncyb

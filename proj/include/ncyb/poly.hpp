// Sparse multivariate polynomials over exact rationals.
//
// Monomials are exponent vectors over a shared, ordered variable registry
// (VarSet). Terms are kept sorted in descending graded-lexicographic order
// (total degree first; ties broken lexicographically with later-registered
// variables more significant). All arithmetic is exact.
#pragma once

#include "ncyb/errors.hpp"
#include "ncyb/qrat.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ncyb {

// Ordered registry of variable names shared by a family of polynomials.
struct VarSet {
    std::vector<std::string> names;

    int index(const std::string& name) const;
    std::size_t size() const { return names.size(); }
    bool operator==(const VarSet& o) const { return names == o.names; }
};

using VarSetPtr = std::shared_ptr<const VarSet>;

VarSetPtr make_vars(std::vector<std::string> names);

using Expv = std::vector<int>;

// Graded-lexicographic comparison; returns <0, 0, >0.
int grlex_cmp(const Expv& a, const Expv& b);

class Poly {
public:
    struct Term {
        Expv exp;
        QRat coef; // never zero
    };

    Poly() = default;

    static Poly zero(const VarSetPtr& vars) { return Poly(vars); }
    static Poly constant(const VarSetPtr& vars, const QRat& c);
    static Poly variable(const VarSetPtr& vars, int idx, int power = 1);
    static Poly variable(const VarSetPtr& vars, const std::string& name, int power = 1);
    static Poly monomial(const VarSetPtr& vars, Expv exp, const QRat& c);

    const VarSetPtr& vars() const { return vars_; }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    QRat constant_value() const; // requires is_constant()
    bool is_monomial() const { return terms_.size() == 1; }

    int total_degree() const;            // -1 for zero
    int degree_in(int var) const;        // -1 for zero
    bool depends_on(int var) const;

    const Term& leading_term() const; // grlex-largest; requires nonzero

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const QRat& c) const;
    Poly pow(int k) const; // k >= 0

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Coefficient of var^d, as a polynomial in the remaining variables.
    Poly coeff_in_var(int var, int d) const;

    // Re-expresses this polynomial over a larger registry (matched by name).
    Poly extend(const VarSetPtr& bigger) const;

    // Full evaluation at rational points (one value per variable).
    QRat eval(const std::vector<QRat>& point) const;

    // Exact division; nullopt if not divisible.
    static std::optional<Poly> div_exact(const Poly& a, const Poly& b);

    // Monic gcd (leading grlex coefficient 1); gcd(0,0) = 0.
    static Poly gcd(const Poly& a, const Poly& b);

    std::string to_string() const;

private:
    explicit Poly(VarSetPtr vars) : vars_(std::move(vars)) {}
    void check_same(const Poly& o) const;
    static Poly from_map(const VarSetPtr& vars, std::map<Expv, QRat>&& m);

    VarSetPtr vars_;
    std::vector<Term> terms_; // descending grlex, nonzero coefficients
};

} // namespace ncyb

#include "ncyb/series.hpp"
#include "ncyb/suites.hpp"

#include <chrono>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

namespace ncyb {

namespace {

// f(x) = sum_k z^k / ((1)_p (2)_p ... (k)_p) x^k with p = q^{-2},
// z = (q - q^{-1})^{-1}, (m)_p = (1 - p^m)/(1 - p).
TruncSeries build_f(const SeriesRing& sr, const RatFun& q) {
    RatFun z = (q - q.pow(-1)).inverse();
    RatFun p = q.pow(-2);
    std::vector<RatFun> c{RatFun::one(sr.vars)};
    RatFun onem = RatFun::one(sr.vars) - p;
    for (std::size_t k = 1; k < sr.K; ++k) {
        RatFun mk = (RatFun::one(sr.vars) - p.pow(static_cast<int>(k))) / onem;
        c.push_back(c.back() * z * mk.inverse());
    }
    return sr.from_coeffs(std::move(c));
}

bool check_functional_equation(int K, std::string& why) {
    VarSetPtr vars = make_vars({"q"});
    SeriesRing sr(vars, static_cast<std::size_t>(K) + 1);
    RatFun q = RatFun::variable(vars, "q");
    TruncSeries f = build_f(sr, q);
    // linear coefficient
    if (f.c.at(1) != (q - q.pow(-1)).inverse()) {
        why = "linear-coefficient";
        return false;
    }
    // f(x q^2) (1 - q x) = f(x)
    TruncSeries shifted = sr.substitute_scaled(f, q * q);
    TruncSeries factor = sr.from_coeffs({RatFun::one(vars), -q});
    if (!sr.eq(sr.mul(shifted, factor), f)) {
        why = "functional-equation";
        return false;
    }
    // equivalent inverted form: f(x q^2) = f(x) (1 - q x)^{-1}
    if (!sr.eq(shifted, sr.mul(f, sr.invert(factor)))) {
        why = "inverted-form";
        return false;
    }
    return true;
}

double log_f_product(double x, double t) {
    // log f(x) = -sum_{j>=0} log(1 - e^{-(2j+1)t} x)
    double acc = 0.0;
    for (std::size_t j = 0;; ++j) {
        double term = std::exp(-(2.0 * static_cast<double>(j) + 1.0) * t) * x;
        if (term < 1e-18) break;
        acc -= std::log1p(-term);
        if (j > 50'000'000) break;
    }
    return acc;
}

double dilog(double x) {
    double acc = 0.0, p = x;
    for (int k = 1; k < 200; ++k) {
        acc += p / (static_cast<double>(k) * static_cast<double>(k));
        p *= x;
    }
    return acc;
}

// Leading asymptotics: log f(x) = Li2(x)/(2t) + O(t). The product samples
// the integrand at the midpoints (2j+1)t of intervals of width 2t, so the
// half-boundary correction term cancels and the error is first order in t.
bool check_asymptotics(std::string& detail) {
    const double ts[3] = {1e-2, 1e-3, 1e-4};
    bool ok = true;
    detail.clear();
    for (double x : {0.25, 0.5}) {
        double ratio_min = 0.0, ratio_max = 0.0;
        for (int i = 0; i < 3; ++i) {
            double t = ts[i];
            double err = std::fabs(log_f_product(x, t) - dilog(x) / (2.0 * t));
            double ratio = err / t;
            if (i == 0) {
                ratio_min = ratio_max = ratio;
            } else {
                ratio_min = std::min(ratio_min, ratio);
                ratio_max = std::max(ratio_max, ratio);
            }
        }
        if (!(ratio_min > 0.0) || ratio_max > 4.0 * ratio_min) ok = false;
        detail += "x=" + std::to_string(x) + " spread=" +
                  std::to_string(ratio_max / ratio_min) + " ";
    }
    return ok;
}

} // namespace

Report run_appendixB_suite(const SuiteConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    Report rep;
    rep.suite = "appendixB";

    std::string why;
    int K = cfg.trunc_order < 12 ? 12 : cfg.trunc_order;
    bool fe = check_functional_equation(K, why);
    rep.add("series-functional-equation", "q-exponential-shift", fe, fe ? "" : why);

    std::string detail;
    bool as = check_asymptotics(detail);
    rep.add("dilogarithm-asymptotics", "scalar-asymptotics", as, detail);

    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return rep;
}

} // namespace ncyb

#include "ncyb/classical.hpp"
#include "ncyb/errors.hpp"
#include "ncyb/suites.hpp"

#include <sstream>

namespace ncyb {

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{
        "quasidet", "uqrep", "ybmap", "classical", "poisson", "appendixA",
        "appendixB"};
    return names;
}

std::vector<Report> run_suites(const std::string& name, const SuiteConfig& cfg) {
    std::vector<Report> out;
    auto one = [&](const std::string& s) -> Report {
        if (s == "quasidet") return run_quasidet_suite(cfg);
        if (s == "uqrep") return run_uqrep_suite(cfg);
        if (s == "ybmap") return run_ybmap_suite(cfg);
        if (s == "classical") return run_classical_suite(cfg);
        if (s == "poisson") return run_poisson_suite(cfg);
        if (s == "appendixA") return run_appendixA_suite(cfg);
        if (s == "appendixB") return run_appendixB_suite(cfg);
        throw UsageError("unknown suite: " + s);
    };
    if (name == "all") {
        for (const auto& s : suite_names()) out.push_back(one(s));
    } else {
        out.push_back(one(name));
    }
    return out;
}

// Worked example: the symbolic forward map for a traceless-normalized state.
std::string classical_demo(int n) {
    std::vector<std::string> names;
    for (int a = 1; a <= 2; ++a) {
        std::string sa = std::to_string(a);
        for (int k = 1; k < n; ++k) names.push_back("u" + std::to_string(k) + "_" + sa);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                names.push_back("a" + std::to_string(i) + std::to_string(j) + "_" + sa);
                names.push_back("b" + std::to_string(j) + std::to_string(i) + "_" + sa);
            }
    }
    RFRing ring(make_vars(std::move(names)));
    const VarSetPtr& vars = ring.vars;
    auto v = [&](const std::string& nm) { return RatFun::variable(vars, nm); };

    YBState<RFRing> st = yb_state_zero(ring, n);
    for (int a = 1; a <= 2; ++a) {
        Mat<RatFun>& Lp = a == 1 ? st.Lp1 : st.Lp2;
        Mat<RatFun>& Lm = a == 1 ? st.Lm1 : st.Lm2;
        std::string sa = std::to_string(a);
        for (int k = 1; k <= n; ++k) {
            // normalization: the last diagonal unit is set to one
            Lp.by_label(k, k) =
                k == n ? ring.one() : v("u" + std::to_string(k) + "_" + sa);
            Lm.by_label(k, k) =
                k == 1 ? ring.one() : v("u" + std::to_string(k - 1) + "_" + sa);
        }
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                Lp.by_label(i, j) =
                    v("a" + std::to_string(i) + std::to_string(j) + "_" + sa);
                Lm.by_label(j, i) =
                    v("b" + std::to_string(j) + std::to_string(i) + "_" + sa);
            }
    }

    YBState<RFRing> ts = classical_forward_map(ring, st);
    std::ostringstream os;
    os << "classical forward map, n=" << n
       << " (diagonal units u*, upper entries a*, lower entries b*;"
       << " last diagonal unit of each pair normalized to 1)\n";
    auto dump = [&](const char* tag, const Mat<RatFun>& A) {
        os << tag << ":\n";
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                const RatFun& x = A.by_label(i, j);
                if (ring.is_zero(x)) continue;
                os << "  (" << i << "," << j << ") = " << x.to_string() << "\n";
            }
    };
    dump("L+(1) out", ts.Lp1);
    dump("L-(1) out", ts.Lm1);
    dump("L+(2) out", ts.Lp2);
    dump("L-(2) out", ts.Lm2);
    return os.str();
}

} // namespace ncyb

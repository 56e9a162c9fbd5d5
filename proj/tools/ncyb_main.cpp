// ncyb command-line entry point: runs verification suites and the map demo.
#include "ncyb/errors.hpp"
#include "ncyb/suites.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

namespace {

using nlohmann::ordered_json;

const char* mode_name(ncyb::Mode m) {
    switch (m) {
    case ncyb::Mode::symbolic: return "symbolic";
    case ncyb::Mode::numeric: return "numeric";
    case ncyb::Mode::dual: return "dual";
    }
    return "symbolic";
}

ordered_json report_json(const ncyb::Report& rep, const ncyb::SuiteConfig& cfg) {
    ordered_json j;
    j["suite"] = rep.suite;
    j["config"] = ordered_json{{"n", cfg.n},
                               {"mode", mode_name(cfg.mode)},
                               {"seed", cfg.seed},
                               {"trunc_order", cfg.trunc_order},
                               {"samples", cfg.samples}};
    ordered_json checks = ordered_json::array();
    for (const auto& c : rep.checks) {
        ordered_json jc;
        jc["name"] = c.name;
        jc["anchor"] = c.anchor;
        jc["status"] = c.status;
        jc["detail"] =
            c.detail.empty() ? ordered_json(nullptr) : ordered_json{{"message", c.detail}};
        checks.push_back(std::move(jc));
    }
    j["checks"] = std::move(checks);
    j["elapsed_ms"] = rep.elapsed_ms;
    j["status"] = rep.status();
    return j;
}

void print_text(const ncyb::Report& rep) {
    std::cout << "suite " << rep.suite << ": " << rep.status() << " ("
              << rep.checks.size() << " checks, " << rep.elapsed_ms << " ms)\n";
    for (const auto& c : rep.checks) {
        std::cout << "  [" << c.status << "] " << c.name;
        if (!c.detail.empty()) std::cout << " -- " << c.detail;
        std::cout << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification toolkit for quasi-determinant Yang-Baxter maps"};
    app.require_subcommand(1);

    std::string suite;
    std::string mode_str = "symbolic";
    std::string json_path;
    ncyb::SuiteConfig cfg;

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "suite name or 'all'")->required();
    verify->add_option("--n", cfg.n, "rank parameter")->check(CLI::Range(2, 16));
    verify->add_option("--mode", mode_str, "symbolic|numeric|dual")
        ->check(CLI::IsMember({"symbolic", "numeric", "dual"}));
    verify->add_option("--seed", cfg.seed, "random seed");
    verify->add_option("--trunc-order", cfg.trunc_order, "series truncation order")
        ->check(CLI::PositiveNumber);
    verify->add_option("--samples", cfg.samples, "random sample count")
        ->check(CLI::PositiveNumber);
    verify->add_option("--json", json_path, "write JSON report(s) to this path");

    int demo_n = 3;
    auto* demo = app.add_subcommand("demo", "print a worked example");
    std::string demo_what;
    demo->add_option("what", demo_what, "example name (map)")->required();
    demo->add_option("--n", demo_n, "rank parameter")->check(CLI::Range(2, 6));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (demo->parsed()) {
        if (demo_what != "map") {
            std::cerr << "unknown demo: " << demo_what << "\n";
            return 2;
        }
        std::cout << ncyb::classical_demo(demo_n);
        return 0;
    }

    cfg.mode = mode_str == "numeric" ? ncyb::Mode::numeric
               : mode_str == "dual"  ? ncyb::Mode::dual
                                     : ncyb::Mode::symbolic;

    std::vector<ncyb::Report> reports;
    try {
        reports = ncyb::run_suites(suite, cfg);
    } catch (const ncyb::UsageError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    bool all_ok = true;
    ordered_json out = ordered_json::array();
    for (const auto& rep : reports) {
        print_text(rep);
        out.push_back(report_json(rep, cfg));
        all_ok = all_ok && rep.ok();
    }
    if (!json_path.empty()) {
        std::ofstream f(json_path);
        if (!f) {
            std::cerr << "cannot open " << json_path << "\n";
            return 2;
        }
        if (out.size() == 1)
            f << out.front().dump(2) << "\n";
        else
            f << out.dump(2) << "\n";
        if (!f) {
            std::cerr << "write error: " << json_path << "\n";
            return 2;
        }
    }
    return all_ok ? 0 : 1;
}

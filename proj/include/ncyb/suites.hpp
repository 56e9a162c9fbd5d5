// Verification suites. Each suite runs a battery of identity checks and
// returns a Report; run_suite dispatches by name ("all" runs every suite).
#pragma once

#include "ncyb/report.hpp"

#include <string>
#include <vector>

namespace ncyb {

Report run_quasidet_suite(const SuiteConfig& cfg);
Report run_uqrep_suite(const SuiteConfig& cfg);
Report run_ybmap_suite(const SuiteConfig& cfg);
Report run_classical_suite(const SuiteConfig& cfg);
Report run_poisson_suite(const SuiteConfig& cfg);
Report run_appendixA_suite(const SuiteConfig& cfg);
Report run_appendixB_suite(const SuiteConfig& cfg);

// Throws UsageError on an unknown suite name.
std::vector<Report> run_suites(const std::string& name, const SuiteConfig& cfg);

// Names of all registered suites, in canonical order.
const std::vector<std::string>& suite_names();

// Worked n=3 example of the classical forward map with symbolic coordinates.
std::string classical_demo(int n);

} // namespace ncyb

#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "siegel/rayclass.hpp"

namespace siegel {

struct SuiteResult {
    std::string name;
    bool passed = true;
    std::string detail;                 // summary, includes the max residual
    std::vector<double> residuals_log2; // log2 of normalized residuals (residual/bound)
};

struct VerifyOptions {
    std::uint64_t seed = 1;
    long ell = 5;
    long n = 5;
    mpfr_prec_t prec = 256;
};

// suite name: cyclo | symplectic | cmdata | theta | rayclass | all
std::vector<SuiteResult> run_suites(const std::string& which, const VerifyOptions& opt);

void print_suite_report(std::ostream& out, const std::vector<SuiteResult>& results,
                        bool histograms = true);

} // namespace siegel

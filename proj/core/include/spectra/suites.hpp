#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace spectra {

struct SuiteResult {
    std::string name;
    bool ok = false;
    std::string detail;
};

/// Names of the property suites, in run order.
std::vector<std::string> suite_names();

/// Run one suite; throws std::invalid_argument for an unknown name.
SuiteResult run_suite(const std::string& name, std::uint64_t seed);

std::vector<SuiteResult> run_all_suites(std::uint64_t seed);

}  // namespace spectra

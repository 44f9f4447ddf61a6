#pragma once
// Acceptance suite shared by `zml selftest` and the ctest acceptance runner.

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace zml::accept {

struct Options {
    std::string zeros_path;       // criteria 9-11
    std::string zml_binary;       // criterion 12 respawns the CLI
    std::uint64_t seed = 20260826;
    std::vector<int> criteria;    // empty = all 12
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    bool documented_expected_fail = false;  // known analytic impossibility, see README
    std::string detail;
};

CriterionResult run_criterion(int id, const Options& opt);

// prints one line per criterion; returns true when every criterion either
// passes or is a documented expected failure (which still prints FAIL).
bool run_all(const Options& opt, std::ostream& os);

}  // namespace zml::accept

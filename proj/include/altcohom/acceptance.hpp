#pragma once

#include <string>
#include <vector>

#include "altcohom/presentation.hpp"

namespace altcohom::accept {

struct CriterionResult {
    int number = 0;
    std::string title;
    bool pass = false;
    // failure traced to a reference value that is provably inconsistent; see detail
    bool source_inconsistent = false;
    std::size_t checks = 0;
    std::vector<std::string> failures;  // first few
    std::string detail;
    double seconds = 0;
    std::string line() const;
};

inline constexpr int kCriteria = 10;

CriterionResult run_criterion(int number);
std::vector<CriterionResult> run_all();

// One entry Sq^j(generator) of the published A8 table, compared with the computed square.
struct SqTableEntry {
    std::string generator;
    int j = 0;
    std::string published;
    std::string computed;
    bool match = false;
};

// Requires the A8 generators under their sigma/d names (throws std::runtime_error otherwise).
std::vector<SqTableEntry> a8_sq_table(const present::PresentationReport& a8);

// Checks that the published entries Sq^1 sigma2 = d3 and Sq^1 d3 = sigma2^2 force
// Sq^1 Sq^1 sigma2 = sigma2^2, and that sigma2^2 is nonzero; returns the explanation or "".
std::string a8_table_adem_violation(const present::PresentationReport& a8);

}  // namespace altcohom::accept

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace weyl {

// One check inside a criterion; rendered as "key = value" in machine output.
struct CheckDetail {
    std::string key;
    std::string value;
    bool ok = true;
};

struct CriterionResult {
    int index = 0;
    std::string name;
    bool pass = false;
    double seconds = 0.0;
    std::vector<CheckDetail> details;
};

inline constexpr int kCriterionCount = 10;

// Runs one of the ten verification criteria (1-based).
CriterionResult run_criterion(int index);

std::vector<CriterionResult> run_verification_suite();

void write_machine_report(std::ostream& os, const std::vector<CriterionResult>& results);
void write_text_report(std::ostream& os, const std::vector<CriterionResult>& results);

}  // namespace weyl

#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace nicx {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// suite: morse | duality | sigma | series | characters | all.  Each check
// recomputes its claim by two routes (or against a frozen value) and never
// throws for a mere mismatch; structural errors still propagate.
std::vector<CheckResult> verify_suite(const std::string& suite, int jobs = 1);

nlohmann::json checks_to_json(const std::vector<CheckResult>& checks);

} // namespace nicx

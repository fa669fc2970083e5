#ifndef M0NLAB_VERIFY_HPP
#define M0NLAB_VERIFY_HPP

#include <string>
#include <vector>

namespace m0nlab {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

// The exhaustive suite behind `verify-all`. `level` caps the ambient n of
// every sweep (each criterion also has its own hard cap); jobs parallelizes
// the heavy sweeps with deterministic merging.
CriterionResult check_intersection_table();
CriterionResult check_chain_action(int level, int jobs);
CriterionResult check_failure_classification(int level);
CriterionResult check_fcurve_action(int level, int jobs);
CriterionResult check_lr_stack(int level);
CriterionResult check_log_concavity(int level);
CriterionResult check_toeplitz_hr();

std::vector<CriterionResult> run_all(int level, int jobs);

} // namespace m0nlab

#endif

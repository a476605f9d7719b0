#pragma once

#include <string>
#include <vector>

namespace hypgroup {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

struct CorpusReport {
    std::vector<CriterionResult> results;
    bool all_pass = false;
    double seconds = 0;
};

// Desk-scale verification suite over the worked examples and closed-form
// constants; every check is exact or carries its tolerance inline, and the
// criteria with runtime budgets fail when they exceed them. Verdicts are
// independent of the thread count.
CorpusReport corpus_run(int threads = 1);

} // namespace hypgroup

// Acceptance gate: one line per verified claim, nonzero exit on any failure.
#include <cstdio>

#include "hypgroup/corpus.hpp"

int main() {
    hypgroup::CorpusReport report = hypgroup::corpus_run(4);
    int passed = 0;
    for (const auto& r : report.results) {
        std::printf("[%s] %2d %-22s (%6.2fs) %s\n", r.pass ? "PASS" : "FAIL", r.id,
                    r.name.c_str(), r.seconds, r.detail.c_str());
        if (r.pass) ++passed;
    }
    std::printf("%d/%d claims verified in %.2fs\n", passed,
                static_cast<int>(report.results.size()), report.seconds);
    return report.all_pass ? 0 : 1;
}

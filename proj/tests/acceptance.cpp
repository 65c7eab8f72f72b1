// Acceptance suite: runs every verification criterion at its stated
// tolerance and prints one pass/fail line per criterion.

#include "supersat/verify.hpp"

#include <cstdio>

int main() {
    supersat::RunConfig cfg = supersat::config_from_env();
    bool all = true;
    for (int id = 1; id <= supersat::verify::criterion_count(); ++id) {
        supersat::verify::CriterionResult r = supersat::verify::run_criterion(id, cfg);
        all = all && r.pass;
        std::printf("[%2d/%d] %s  %s  (%.2fs)\n", r.id, supersat::verify::criterion_count(),
                    r.pass ? "PASS" : "FAIL", r.name.c_str(), r.seconds);
        std::printf("        %s\n", r.detail.c_str());
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}

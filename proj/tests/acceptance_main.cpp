#include <cstdio>

#include "detmor/verify.hpp"

// Acceptance gate: one line per criterion, nonzero exit on any failure.

int main() {
    auto results = detmor::verify::run_all();
    bool all_pass = true;
    int n = 0;
    for (const auto& r : results) {
        ++n;
        std::printf("criterion %d (%s): %s (checks=%zu%s)%s%s\n", n,
                    r.name.c_str(), r.pass ? "PASS" : "FAIL", r.checks,
                    r.vacuous ? ", vacuous" : "",
                    r.detail.empty() ? "" : " - ", r.detail.c_str());
        all_pass = all_pass && r.pass;
    }
    return all_pass ? 0 : 1;
}

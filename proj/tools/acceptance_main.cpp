// One PASS/FAIL line per acceptance criterion; exit 1 if any fails.
#include <cstdio>
#include <exception>

#include "nok/acceptance.hpp"

int main() {
    int failed = 0;
    try {
        nok::run_acceptance(nok::Exec::Parallel, [&](const nok::CriterionResult& r) {
            if (!r.pass) ++failed;
            std::printf("%s %d %s: %s [%.0f ms]\n", r.pass ? "PASS" : "FAIL", r.id, r.title.c_str(),
                        r.detail.c_str(), r.wall_ms);
            std::fflush(stdout);
        });
    } catch (const std::exception& e) {
        std::printf("FAIL error: %s\n", e.what());
        return 1;
    }
    return failed ? 1 : 0;
}

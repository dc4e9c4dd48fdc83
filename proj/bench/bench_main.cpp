#include <cstdio>

#include "CLI11.hpp"
#include "kernels.hpp"

int main(int argc, char** argv) {
    CLI::App app{"serial vs OpenMP timings of the nok kernels"};
    nok::Caps caps{2, 4, 24, 0};
    int reps = 3;
    app.add_option("--N", caps.N, "partitions per tuple")->check(CLI::PositiveNumber);
    app.add_option("--D", caps.D, "total Q-degree cap")->check(CLI::NonNegativeNumber);
    app.add_option("--M", caps.M, "tau cap")->check(CLI::NonNegativeNumber);
    app.add_option("--reps", reps, "repetitions per path")->check(CLI::PositiveNumber);
    CLI11_PARSE(app, argc, argv);

    std::printf("threads: %d  caps: N=%d D=%d M=%d  reps: %d\n", nok::max_threads(), caps.N, caps.D, caps.M, reps);
    std::printf("%-36s %12s %12s %8s %s\n", "kernel", "serial ms", "parallel ms", "speedup", "same");
    bool ok = true;
    for (const auto& r : nok::bench::run(caps, reps)) {
        ok = ok && r.same_result;
        std::printf("%-36s %12.2f %12.2f %8.2f %s\n", r.kernel.c_str(), r.serial_ms, r.parallel_ms,
                    r.parallel_ms > 0 ? r.serial_ms / r.parallel_ms : 0.0, r.same_result ? "yes" : "NO");
    }
    return ok ? 0 : 1;
}

#pragma once

// Serial-vs-parallel timing of the OpenMP kernels. Shared by `nok bench` and nok_bench.

#include <chrono>
#include <string>
#include <vector>

#include "nok/exec.hpp"
#include "nok/fock.hpp"
#include "nok/identities.hpp"

namespace nok::bench {

struct Row {
    std::string kernel;
    double serial_ms = 0;
    double parallel_ms = 0;
    bool same_result = false;
};

template <class F>
double time_ms(F&& f, int reps) {
    const auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < reps; ++i) f();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count() / reps;
}

template <class F>
Row compare_paths(std::string name, F&& kernel, int reps) {
    Row r;
    r.kernel = std::move(name);
    const auto a = kernel(Exec::Serial);
    const auto b = kernel(Exec::Parallel);
    r.same_result = a == b;
    r.serial_ms = time_ms([&] { (void)kernel(Exec::Serial); }, reps);
    r.parallel_ms = time_ms([&] { (void)kernel(Exec::Parallel); }, reps);
    return r;
}

inline std::vector<Row> run(const Caps& caps, int reps) {
    std::vector<Row> rows;
    const int W = caps.M;
    rows.push_back(compare_paths(
        "zn_def (vertex table + tuple sum)", [&](Exec e) { return partition_def(Family::Z, caps, W, e); }, reps));
    rows.push_back(compare_paths(
        "zn_sum (hook-weighted tuple sum)", [&](Exec e) { return partition_sum(Family::Z, caps, W, true, e); }, reps));
    rows.push_back(compare_paths(
        "zn_prod (MSeries products)", [&](Exec e) { return partition_prod(Family::Z, caps, W, true, e); }, reps));
    rows.push_back(compare_paths(
        "fock trace (L=2)",
        [&](Exec e) {
            const auto vars = make_vars({"x1", "x2", "y1", "y2", "Q"}, caps.D);
            FockEngine eng(vars, W, caps.D);
            const OperatorWord word{GammaAtom{GammaAtom::Dir::Minus, 1, Monomial::var(0, 5), 0},
                                    GammaAtom{GammaAtom::Dir::Minus, -1, Monomial::var(1, 5), 0},
                                    EnergyAtom{Monomial::var(4, 5), 0},
                                    GammaAtom{GammaAtom::Dir::Plus, 1, Monomial::var(2, 5), 0},
                                    GammaAtom{GammaAtom::Dir::Plus, 1, Monomial::var(3, 5), 0}};
            return trace(eng, word, Pairing::Identity, e);
        },
        reps));
    return rows;
}

}  // namespace nok::bench

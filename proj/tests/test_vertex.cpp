#include "doctest.h"
#include "nok/vertex.hpp"

using namespace nok;

TEST_CASE("vertex examples") {
    const int M = 30;
    CHECK(topological_vertex({}, {}, {}, M).value == LaurentSeries::one(M));
    auto g = LaurentSeries::geometric(2, 1, M);
    CHECK(eq_to_order(topological_vertex({}, {1}, {}, M).value, g, M).equal);
    CHECK(eq_to_order(topological_vertex({}, {}, {1}, M).value, g, M).equal);
    CHECK(eq_to_order(topological_vertex({1}, {}, {}, M).value, g, M).equal);
    auto v = topological_vertex({1}, {1}, {}, M);
    CHECK(v.labels[0] == Partition{1});
    CHECK(v.window() >= M - 4);
}

TEST_CASE("rotation and mirror examples") {
    auto r = check_rotation({1}, {}, {}, 30);
    CHECK(r.equal);
    CHECK(r.window >= 30);
    CHECK(check_rotation({}, {}, {}, 30).equal);
    CHECK(check_mirror({}, {}, {}, 30).equal);
    CHECK(check_mirror({1}, {1}, {}, 30).equal);
    auto m = check_mirror({2}, {1, 1}, {1}, 20);
    CHECK(m.equal);
    CHECK(m.window >= 20);
}

TEST_CASE("symmetry sweep, total size <= 4") {
    for (const auto& a : enumerate_upto(4))
        for (const auto& b : enumerate_upto(4 - a.size()))
            for (const auto& c : enumerate_upto(4 - a.size() - b.size())) {
                INFO(a.to_string(), b.to_string(), c.to_string());
                CHECK(check_rotation(a, b, c, 16).equal);
                CHECK(check_mirror(a, b, c, 16).equal);
            }
}

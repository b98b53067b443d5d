#include "doctest.h"

#include <atomic>
#include <functional>
#include <stdexcept>

#include "kazhdan/parallel.hpp"
#include "kazhdan/verify.hpp"

using namespace kazhdan::verify;

TEST_CASE("SL_n(Z/m) orders") {
    CHECK(sl_order(3, 2) == 168);
    CHECK(sl_order(2, 3) == 24);
    CHECK(sl_order(3, 5) == 372000);
    CHECK(sl_order(2, 4) == 48);
    CHECK(sl_order(2, 6) == 6 * 24);
    CHECK(sl_order(40, 65521) == 0);
}

TEST_CASE("heisenberg verification") {
    for (unsigned p : {2u, 3u}) {
        const auto v = heisenberg_verification(p, {});
        CHECK(v.passed());
        CHECK(v.report.satisfied);
        for (const auto& c : v.checks) CHECK_MESSAGE(c.passed, c.name << ": " << c.detail);
    }
}

TEST_CASE("six points verification and the cap") {
    const auto v = six_points_verification(3, 2, {});
    CHECK(v.passed());
    CHECK(v.report.value("order") == 168.0);
    CHECK(v.report.value("kappa_spectral_roots") >= 0.125);
    RunOptions small;
    small.regular_cap = 100;
    const auto skipped = six_points_verification(3, 2, small);
    CHECK(skipped.skipped);
    CHECK_FALSE(skipped.report.satisfied);
    CHECK(skipped.warning.find("168") != std::string::npos);
}

TEST_CASE("parallel runner") {
    std::atomic<int> sum{0};
    std::vector<std::function<void()>> tasks;
    for (int i = 1; i <= 20; ++i) tasks.emplace_back([&, i] { sum += i; });
    kazhdan::run_parallel(tasks, 4);
    CHECK(sum == 210);
    std::vector<std::function<void()>> failing{[] {}, [] { throw std::runtime_error("boom"); }};
    CHECK_THROWS_AS(kazhdan::run_parallel(failing, 2), std::runtime_error);
}

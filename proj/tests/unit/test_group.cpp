#include "doctest.h"

#include <cmath>
#include <random>

#include "kazhdan/error.hpp"
#include "kazhdan/group.hpp"
#include "test_support.hpp"

using namespace kazhdan::group;
using kazhdan::linalg::CMatrix;
using kazhdan::linalg::Complex;

namespace {

GroupPtr cyclic(std::size_t n) {
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    return FiniteGroup::from_table(t);
}

// Averaging projector of H on ℂ[G] under the left regular action, as a dense matrix.
CMatrix dense_projector(const GroupPtr& g, const Subgroup& h) {
    const std::size_t n = g->order();
    CMatrix p(n, n);
    const double w = 1.0 / static_cast<double>(h.order());
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t e : h.elements()) p(g->mult(e, x), x) += w;
    return p;
}

// ‖P_H P_K − J/N‖, the orthogonality constant of the fixed spaces on ℂ[G] ⊖ constants.
double dense_group_epsilon(const GroupPtr& g, const Subgroup& h, const Subgroup& k) {
    const std::size_t n = g->order();
    CMatrix m = dense_projector(g, h) * dense_projector(g, k);
    for (auto& z : m.data()) z -= 1.0 / static_cast<double>(n);
    return testsupport::oracle_sigma_max(m);
}

}  // namespace

TEST_CASE("groups from tables") {
    const auto z6 = cyclic(6);
    CHECK(z6->order() == 6);
    CHECK(z6->identity() == 0);
    CHECK(z6->inverse(2) == 4);
    CHECK(z6->element_order(2) == 3);
    CHECK(z6->power(1, 5) == 5);
    CHECK(z6->commutator(1, 2) == 0);
    CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {0, 1}}), kazhdan::InputError);
    CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1}}), kazhdan::InputError);
    // non-associative loop of order 5
    CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1, 2, 3, 4},
                                             {1, 0, 3, 4, 2},
                                             {2, 4, 0, 1, 3},
                                             {3, 2, 4, 0, 1},
                                             {4, 3, 1, 2, 0}}),
                    kazhdan::InputError);
}

TEST_CASE("matrix groups") {
    const auto h = heisenberg(3);
    CHECK(h.group->order() == 27);
    CHECK(h.X.order() == 3);
    CHECK(is_normal(h.Z));
    CHECK_FALSE(is_normal(h.X));
    CHECK(commutator_subgroup(h.X, h.Y).elements() == h.Z.elements());
    CHECK(generates(h.group, {h.X, h.Y}));
    CHECK(commute(h.X, h.Z));
    CHECK_FALSE(commute(h.X, h.Y));

    const auto sys = eln_root_subgroups(3, RingZm{2});
    CHECK(sys.group->order() == 168);
    const auto i3 = identity_matrix(3);
    CHECK(determinant_mod(multiply(elementary(3, 0, 1, 1, 5), elementary(3, 1, 2, 3, 5), 3, 5), 3, 5) == 1);
    CHECK(sys.group->find(i3) == sys.group->identity());
    CHECK_THROWS_AS(FiniteGroup::matrix_group(2, RingZm{4}, {{2, 0, 0, 1}}), kazhdan::InputError);
    CHECK_THROWS_AS(eln_root_subgroups(3, RingZm{5}, 1000), kazhdan::CapExceeded);
}

TEST_CASE("subgroup closure and join") {
    const auto z12 = cyclic(12);
    CHECK(subgroup_closure(z12, {8}).order() == 3);
    CHECK(subgroup_closure(z12, {}).order() == 1);
    const auto j = subgroup_join(z12, {subgroup_closure(z12, {8}), subgroup_closure(z12, {6})});
    CHECK(j.order() == 6);
    CHECK(is_abelian(whole_group(z12)));
}

TEST_CASE("Helmert coordinates round-trip and preserve norms") {
    std::mt19937_64 rng(testsupport::kSeed);
    for (std::size_t n : {2u, 3u, 10u, 57u}) {
        auto f = testsupport::random_vector(rng, n);
        Complex mean = 0;
        for (auto z : f) mean += z;
        mean /= static_cast<double>(n);
        for (auto& z : f) z -= mean;
        const auto c = helmert_forward(f);
        CHECK(c.size() == n - 1);
        CHECK(std::abs(kazhdan::linalg::norm(c) - kazhdan::linalg::norm(f)) < 1e-12);
        const auto back = helmert_back(c);
        for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(back[i] - f[i]) < 1e-12);
    }
}

TEST_CASE("fixed subspace dimensions in the regular representation") {
    const auto h = heisenberg(3);
    const auto reg = regular_rep(h.group);
    CHECK(reg.dim() == 27);
    CHECK(fixed_subspace(reg, h.X).dim() == 9);
    CHECK(fixed_subspace(reg, whole_group(h.group)).dim() == 1);
    const auto comp = regular_rep_complement(h.group);
    CHECK(comp.dim() == 26);
    CHECK(fixed_subspace(comp, h.Z).dim() == 8);
    CHECK(fixed_subspace(comp, whole_group(h.group)).dim() == 0);
    CHECK(comp.unitarity_residual() < 1e-12);
    CHECK(comp.homomorphism_residual() < 1e-12);
}

TEST_CASE("group_epsilon agrees with a dense projector computation") {
    const auto h = heisenberg(3);
    CHECK(std::abs(group_epsilon(h.group, h.X, h.Y) - dense_group_epsilon(h.group, h.X, h.Y)) < 1e-10);
    CHECK(std::abs(group_epsilon(h.group, h.X, h.Z) - dense_group_epsilon(h.group, h.X, h.Z)) < 1e-10);
    const auto hm = heisenberg_mod(4);
    CHECK(std::abs(group_epsilon(hm.group, hm.X, hm.Y) - dense_group_epsilon(hm.group, hm.X, hm.Y)) < 1e-10);
    const auto sys = eln_root_subgroups(3, RingZm{2});
    const auto& x12 = sys.X.at({1, 2});
    const auto& x23 = sys.X.at({2, 3});
    CHECK(std::abs(group_epsilon(sys.group, x12, x23) - dense_group_epsilon(sys.group, x12, x23)) < 1e-10);
}

TEST_CASE("heisenberg irreps") {
    for (unsigned p : {2u, 3u, 5u}) {
        const auto irreps = heisenberg_irreps(p);
        CHECK(irreps.size() == p * p + p - 1);
        std::size_t sum = 0;
        for (const auto& r : irreps) {
            sum += r.degree * r.degree;
            CHECK(r.rep.unitarity_residual() < 1e-12);
            CHECK(r.rep.homomorphism_residual() < 1e-12);
        }
        CHECK(sum == p * p * p);
        const auto h = heisenberg(p);
        CHECK(std::abs(group_epsilon(h.group, h.X, h.Y) - 1.0 / std::sqrt(static_cast<double>(p))) < 1e-9);
    }
    CHECK_THROWS_AS(heisenberg(4), kazhdan::InputError);
    CHECK_THROWS_AS(heisenberg(17), kazhdan::InputError);
}

TEST_CASE("class-2 groups stay below 1/sqrt(2)") {
    for (unsigned m : {2u, 3u, 4u, 5u, 8u, 9u}) {
        const auto h = heisenberg_mod(m);
        CHECK(group_epsilon(h.group, h.X, h.Y) <= 1.0 / std::sqrt(2.0) + 1e-9);
    }
}

TEST_CASE("block heisenberg with one-dimensional corners") {
    // a = c = 1: generic irreps have degree q^b with one-dimensional fixed spaces
    for (auto [b, m] : {std::pair<std::size_t, unsigned>{2, 2}, {2, 3}, {3, 2}}) {
        const auto bh = block_heisenberg(1, b, 1, m);
        const double expected = 1.0 / std::sqrt(std::pow(static_cast<double>(m), static_cast<double>(b)));
        CHECK(bh.group->order() == static_cast<std::size_t>(std::pow(m, 2 * b + 1)));
        CHECK(std::abs(group_epsilon(bh.group, bh.X, bh.Y) - expected) < 1e-9);
    }
}

TEST_CASE("the whole group fixes nothing off the constants") {
    const auto h = heisenberg(3);
    CHECK(group_epsilon(h.group, h.Z, whole_group(h.group)) < 1e-12);
}

TEST_CASE("A2 system of EL_3(Z/2)") {
    const auto sys = eln_root_subgroups(3, RingZm{2});
    CHECK(verify_a2_system(sys.group, sys.X).ok);
    auto broken = sys.X;
    std::swap(broken.at({1, 2}), broken.at({2, 1}));
    const auto r = verify_a2_system(sys.group, broken);
    CHECK_FALSE(r.ok);
    CHECK(r.axiom >= 'a');
    CHECK(r.axiom <= 'd');
    CHECK_FALSE(r.message.empty());
}

TEST_CASE("spectral Kazhdan lower bound on cyclic groups") {
    for (std::size_t n = 2; n <= 12; ++n)
        CHECK(std::abs(kazhdan_spectral_lower(cyclic(n), {1}) - 2.0 * std::sin(M_PI / static_cast<double>(n))) <
              1e-10);
    CHECK_THROWS_AS(kazhdan_spectral_lower(cyclic(6), {2}), kazhdan::InputError);
    CHECK_THROWS_AS(kazhdan_spectral_lower(cyclic(6), {1}, 4), kazhdan::CapExceeded);
}

TEST_CASE("S = G minus the identity gives at least sqrt(2)") {
    // Z/3: L_S has eigenvalue 2 − 2cos(2π/3) = 3, so the bound is √(2·3/2) = √3
    CHECK(kazhdan_spectral_lower(cyclic(3), {1, 2}) == doctest::Approx(std::sqrt(3.0)));
    for (std::size_t n = 2; n <= 9; ++n) {
        std::vector<std::size_t> s;
        for (std::size_t g = 1; g < n; ++g) s.push_back(g);
        CHECK(kazhdan_spectral_lower(cyclic(n), s) >= std::sqrt(2.0) - 1e-12);
    }
    const auto h = heisenberg(3);
    std::vector<std::size_t> all;
    for (std::size_t g = 0; g < h.group->order(); ++g)
        if (g != h.group->identity()) all.push_back(g);
    CHECK(kazhdan_spectral_lower(h.group, all) >= std::sqrt(2.0) - 1e-12);
}

TEST_CASE("group codistance") {
    const auto h = heisenberg(3);
    const auto r = group_codistance(h.group, {h.X, h.Y});
    CHECK(r.generating);
    CHECK(r.value == doctest::Approx((1.0 + 1.0 / std::sqrt(3.0)) / 2.0));
    const auto nongen = group_codistance(h.group, {h.X, h.Z});
    CHECK_FALSE(nongen.generating);
    CHECK_FALSE(nongen.warning.empty());
}

#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "kazhdan/error.hpp"
#include "kazhdan/linalg.hpp"
#include "test_support.hpp"

using namespace kazhdan::linalg;
using testsupport::random_hermitian;
using testsupport::random_subspace;
using testsupport::random_vector;

namespace {

CVector unit(std::size_t n, std::size_t k) {
    CVector v(n);
    v[k] = 1.0;
    return v;
}

Subspace span(std::size_t n, std::initializer_list<CVector> vs) { return orthonormalize(vs, {}, n); }

double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
    REQUIRE(a.size() == b.size());
    double m = 0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

}  // namespace

TEST_CASE("jacobi eigenvalues match an independent solver") {
    std::mt19937_64 rng(testsupport::kSeed);
    for (std::size_t n : {1u, 2u, 3u, 5u, 8u, 13u, 20u}) {
        const CMatrix h = random_hermitian(rng, n);
        const EigenResult r = jacobi_eigen(h);
        CHECK(max_diff(r.values, testsupport::oracle_eigenvalues(h)) < 1e-10);
        CHECK(std::is_sorted(r.values.begin(), r.values.end()));
        // H v = λ v column by column
        for (std::size_t k = 0; k < n; ++k) {
            const CVector v = r.vectors.column(k);
            const CVector hv = h * v;
            double res = 0;
            for (std::size_t i = 0; i < n; ++i) res = std::max(res, std::abs(hv[i] - r.values[k] * v[i]));
            CHECK(res < 1e-9);
        }
    }
}

TEST_CASE("tridiagonal QL agrees with jacobi on real symmetric input") {
    std::mt19937_64 rng(testsupport::kSeed + 1);
    for (std::size_t n : {2u, 7u, 30u, 70u, 100u}) {
        const CMatrix h = random_hermitian(rng, n, true);
        const EigenResult ql = tridiagonal_ql_eigen(h);
        const EigenResult jac = jacobi_eigen(h);
        CHECK(max_diff(ql.values, jac.values) < 1e-9);
        CHECK(max_diff(ql.values, testsupport::oracle_eigenvalues(h)) < 1e-9);
        const CMatrix back = ql.vectors.adjoint() * h * ql.vectors;
        for (std::size_t k = 0; k < n; ++k) CHECK(std::abs(back(k, k) - ql.values[k]) < 1e-8);
    }
}

TEST_CASE("hermitian_eigen dispatches to either route with the same answer") {
    std::mt19937_64 rng(testsupport::kSeed + 2);
    const CMatrix big_real = random_hermitian(rng, 80, true);
    const CMatrix big_complex = random_hermitian(rng, 40);
    CHECK(max_diff(hermitian_eigenvalues(big_real), testsupport::oracle_eigenvalues(big_real)) < 1e-9);
    CHECK(max_diff(hermitian_eigenvalues(big_complex), testsupport::oracle_eigenvalues(big_complex)) < 1e-9);
}

TEST_CASE("largest singular value") {
    std::mt19937_64 rng(testsupport::kSeed + 3);
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t r = 1 + trial % 5, c = 1 + (trial * 3) % 7;
        CMatrix m(r, c);
        for (auto& z : m.data()) z = {g(rng), g(rng)};
        CHECK(std::abs(largest_singular_value(m) - testsupport::oracle_sigma_max(m)) < 1e-9);
    }
    CHECK(largest_singular_value(CMatrix(3, 0)) == 0.0);
}

TEST_CASE("orthonormalize drops dependent vectors") {
    const Subspace s = span(3, {unit(3, 0), unit(3, 1), CVector{1.0, 1.0, 0.0}});
    CHECK(s.dim() == 2);
    CHECK(s.ambient_dim() == 3);
    CHECK(orthonormalize({}, {}, 4).dim() == 0);
}

TEST_CASE("orthogonality constant basic cases") {
    const Subspace x = span(2, {unit(2, 0)});
    const Subspace y = span(2, {unit(2, 1)});
    const Subspace d = span(2, {CVector{1.0, 1.0}});
    CHECK(orthogonality_constant(x, y) == doctest::Approx(0.0));
    CHECK(orthogonality_constant(x, x) == doctest::Approx(1.0));
    CHECK(orthogonality_constant(x, d) == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(orthogonality_constant(x, Subspace::zero(2)) == 0.0);
    CHECK_THROWS_AS(orthogonality_constant(x, Subspace::zero(3)), kazhdan::InputError);
}

TEST_CASE("complement and sum") {
    std::mt19937_64 rng(testsupport::kSeed + 4);
    const Subspace w = random_subspace(rng, 6, 2);
    const Subspace wc = complement(w);
    CHECK(wc.dim() == 4);
    CHECK(orthogonality_constant(w, wc) < 1e-10);
    CHECK(subspace_sum(w, wc).dim() == 6);
    CHECK(complement(Subspace::whole(3)).dim() == 0);
}

TEST_CASE("closeness equals orthogonality to the complement") {
    std::mt19937_64 rng(testsupport::kSeed + 5);
    std::uniform_real_distribution<double> ue(0.0, 1.0);
    int violations = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = 2 + trial % 5;
        const Subspace u = random_subspace(rng, n, 1 + trial % (n - 1));
        const Subspace w = random_subspace(rng, n, 1 + (trial / 3) % (n - 1));
        const double eps = ue(rng);
        const ClosenessResult cr = is_eps_close(u, w, eps);
        const double other = orthogonality_constant(u, complement(w));
        if (std::abs(cr.distance - other) > 1e-9) ++violations;
        if (std::abs(other - eps) > 1e-9 && cr.close != (other <= eps)) ++violations;
        // witness is a unit vector of U attaining the distance
        CHECK(std::abs(norm(cr.witness) - 1.0) < 1e-9);
        const CVector pw = project(cr.witness, w);
        CVector perp(n);
        for (std::size_t i = 0; i < n; ++i) perp[i] = cr.witness[i] - pw[i];
        CHECK(std::abs(norm(perp) - cr.distance) < 1e-8);
    }
    CHECK(violations == 0);
}

TEST_CASE("codistance of two subspaces is (1+eps)/2") {
    std::mt19937_64 rng(testsupport::kSeed + 6);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 2 + trial % 6;
        const Subspace u = random_subspace(rng, n, 1 + trial % (n - 1));
        const Subspace w = random_subspace(rng, n, 1 + (trial / 2) % (n - 1));
        CHECK(std::abs(codistance({u, w}) - (1.0 + orthogonality_constant(u, w)) / 2.0) < 1e-9);
    }
}

TEST_CASE("codistance equals the top eigenvalue of the averaged projector") {
    std::mt19937_64 rng(testsupport::kSeed + 7);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 3 + trial % 4, k = 2 + trial % 4;
        std::vector<Subspace> subs;
        for (std::size_t i = 0; i < k; ++i) subs.push_back(random_subspace(rng, n, 1 + (i + trial) % (n - 1)));
        CMatrix avg(n, n);
        for (const auto& s : subs) avg = avg + testsupport::projector(s);
        avg = Complex(1.0 / static_cast<double>(k)) * avg;
        const auto oracle = testsupport::oracle_eigenvalues(avg);
        const CodistanceResult r = codistance_detail(subs);
        CHECK(std::abs(r.value - oracle.back()) < 1e-10);
        CHECK(r.value >= 1.0 / static_cast<double>(k) - 1e-12);
        CHECK(r.value <= 1.0 + 1e-12);
        // random vectors never beat the sup
        for (int s = 0; s < 20; ++s) {
            const CVector x = random_vector(rng, n);
            double q = 0;
            for (const auto& sub : subs) q += std::pow(norm(project(x, sub)), 2);
            CHECK(q / static_cast<double>(k) / std::pow(norm(x), 2) <= r.value + 1e-10);
        }
        // components are projections of the eigenvector
        REQUIRE(r.components.size() == k);
        for (std::size_t i = 0; i < k; ++i) {
            const CVector p = project(r.eigenvector, subs[i]);
            for (std::size_t j = 0; j < n; ++j) CHECK(std::abs(p[j] - r.components[i][j]) < 1e-10);
        }
    }
}

TEST_CASE("codistance extremes") {
    const Subspace a = span(3, {unit(3, 0)});
    const Subspace b = span(3, {unit(3, 1)});
    const Subspace c = span(3, {unit(3, 2)});
    CHECK(codistance({a, b, c}) == doctest::Approx(1.0 / 3.0));
    CHECK(codistance({a, a, a}) == doctest::Approx(1.0));
    CHECK_THROWS_AS(codistance({a, Subspace::zero(3)}), kazhdan::InputError);
    CHECK(codistance({a, Subspace::zero(3)}, {true, {}}) == doctest::Approx(0.5));
    CHECK_THROWS_AS(codistance({}), kazhdan::InputError);
}

TEST_CASE("weighted codistance") {
    std::mt19937_64 rng(testsupport::kSeed + 8);
    const Subspace u = random_subspace(rng, 4, 2);
    const Subspace w = random_subspace(rng, 4, 1);
    // uniform weights reduce to the plain codistance
    CHECK(std::abs(weighted_codistance({u, w}, {2.0, 2.0}) - codistance({u, w})) < 1e-12);
    // two subspaces: ε² = ((a₁+a₂)ρ/a₁ − 1)((a₁+a₂)ρ/a₂ − 1)
    const double eps = orthogonality_constant(u, w);
    const double a1 = 0.3, a2 = 0.9;
    const double rho = weighted_codistance({u, w}, {a1, a2});
    CHECK(std::abs(((a1 + a2) * rho / a1 - 1) * ((a1 + a2) * rho / a2 - 1) - eps * eps) < 1e-9);
    CHECK_THROWS_AS(weighted_codistance({u, w}, {1.0}), kazhdan::InputError);
    CHECK_THROWS_AS(weighted_codistance({u, w}, {1.0, -1.0}), kazhdan::InputError);
}

TEST_CASE("sum of two subspaces is nearly orthogonal to a third") {
    std::mt19937_64 rng(testsupport::kSeed + 9);
    int violations = 0, tested = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = 4 + trial % 4;
        const Subspace x = random_subspace(rng, n, 1);
        const Subspace y = random_subspace(rng, n, 1);
        const Subspace z = random_subspace(rng, n, 1 + trial % 2);
        const double e1 = orthogonality_constant(x, z), e2 = orthogonality_constant(y, z),
                     e3 = orthogonality_constant(x, y);
        if (e3 >= 1.0 - 1e-9) continue;
        ++tested;
        const double bound = std::sqrt(2.0) * std::max(e1, e2) / std::sqrt(1.0 - e3);
        if (orthogonality_constant(subspace_sum(x, y), z) > bound + 1e-9) ++violations;
    }
    CHECK(tested > 400);
    CHECK(violations == 0);
}

TEST_CASE("witness bound b_j >= sqrt(1-rho)|x|") {
    // x orthogonal to both subspaces
    const Witness w0 = kazhdanprep_witness({span(3, {unit(3, 1)}), span(3, {unit(3, 2)})}, unit(3, 0));
    CHECK(w0.norm == doctest::Approx(1.0));
    // x inside every subspace
    const Subspace plane = span(3, {unit(3, 0), unit(3, 1)});
    CHECK(kazhdanprep_witness({plane, span(3, {unit(3, 0)})}, unit(3, 0)).norm == doctest::Approx(0.0));

    std::mt19937_64 rng(testsupport::kSeed + 10);
    int violations = 0;
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<Subspace> subs;
        for (int i = 0; i < 3; ++i) subs.push_back(random_subspace(rng, 4, 1 + (trial + i) % 3));
        const CVector x = random_vector(rng, 4);
        const Witness w = kazhdanprep_witness(subs, x);
        // recompute both sides directly
        double best = 0;
        for (const auto& s : subs) {
            const CVector p = project(x, s);
            CVector r(4);
            for (std::size_t i = 0; i < 4; ++i) r[i] = x[i] - p[i];
            best = std::max(best, norm(r));
        }
        CHECK(std::abs(best - w.norm) < 1e-12);
        if (w.norm < std::sqrt(1.0 - codistance(subs)) * norm(x) - 1e-9) ++violations;
    }
    CHECK(violations == 0);
}

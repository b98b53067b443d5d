#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "kazhdan/criteria.hpp"
#include "kazhdan/group.hpp"

namespace kazhdan::verify {

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct Verification {
    criteria::BoundReport report;  // numeric values; satisfied ⇔ every check passed
    std::vector<Check> checks;
    bool skipped = false;
    std::string warning;

    bool passed() const;
};

struct RunOptions {
    std::uint64_t seed = group::kDefaultSeed;
    std::size_t jobs = 1;
    std::size_t regular_cap = group::kDefaultRegularCap;
};

// Irreducible representations of H(𝔽_p): census, character orthonormality,
// Σ dim² = p³, ε(V^X, V^Y) per irrep and group_epsilon(⟨x⟩, ⟨y⟩) on ℂ[G].
Verification heisenberg_verification(unsigned p, const RunOptions& opt = {});

// EL_n(ℤ/m) with its root subgroups: A₂ axioms, codistance of the vertex
// groups G_ij, and the spectral Kazhdan lower bound for ∪X_ij.
Verification six_points_verification(std::size_t n, unsigned m, const RunOptions& opt = {});

// |SL_n(ℤ/m)| = m^{n²−1} Π_{p | m} Π_{k=2..n} (1 − p^{−k}); 0 on overflow.
std::size_t sl_order(std::size_t n, unsigned m);

}  // namespace kazhdan::verify

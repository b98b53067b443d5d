#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kazhdan/linalg.hpp"

namespace kazhdan::group {

inline constexpr std::size_t kDefaultClosureCap = 1'000'000;
inline constexpr std::size_t kDefaultRegularCap = 6000;
inline constexpr std::uint64_t kDefaultSeed = 0xA2;

struct RingZm {
    unsigned modulus = 2;
};

// n×n matrix over ℤ/m, row-major, entries in [0, m).
using IntMatrix = std::vector<std::uint32_t>;

IntMatrix identity_matrix(std::size_t n);
// e_ij(r) with 0-based i ≠ j.
IntMatrix elementary(std::size_t n, std::size_t i, std::size_t j, unsigned r, unsigned m);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b, std::size_t n, unsigned m);
long long determinant_mod(const IntMatrix& a, std::size_t n, unsigned m);

class FiniteGroup {
public:
    // Validates identity, inverses and associativity (full for order ≤ 200,
    // sampled otherwise).
    static std::shared_ptr<const FiniteGroup> from_table(const std::vector<std::vector<std::size_t>>& mult,
                                                         std::uint64_t seed = kDefaultSeed);
    static std::shared_ptr<const FiniteGroup> matrix_group(std::size_t n, RingZm ring,
                                                           const std::vector<IntMatrix>& generators,
                                                           std::size_t cap = kDefaultClosureCap);

    std::size_t order() const { return order_; }
    std::size_t identity() const { return identity_; }
    std::size_t inverse(std::size_t g) const { return inverse_[g]; }
    std::size_t mult(std::size_t a, std::size_t b) const;
    std::size_t commutator(std::size_t a, std::size_t b) const;  // a b a⁻¹ b⁻¹
    std::size_t power(std::size_t a, std::size_t k) const;
    std::size_t element_order(std::size_t a) const;
    std::string label(std::size_t g) const;

    bool is_matrix_group() const { return matrix_dim_ > 0; }
    std::size_t matrix_dim() const { return matrix_dim_; }
    unsigned modulus() const { return modulus_; }
    IntMatrix matrix(std::size_t g) const;
    std::optional<std::size_t> find(const IntMatrix& m) const;
    // Indices of the generators passed to matrix_group, in order.
    const std::vector<std::size_t>& generator_indices() const { return generators_; }

    // Throws std::logic_error on a violated group law.
    void check_axioms(std::uint64_t seed = kDefaultSeed) const;

private:
    FiniteGroup() = default;
    std::size_t order_ = 0;
    std::size_t identity_ = 0;
    std::vector<std::size_t> inverse_;
    std::vector<std::uint32_t> table_;  // order² entries when cached
    std::vector<std::size_t> generators_;

    std::size_t matrix_dim_ = 0;
    unsigned modulus_ = 0;
    std::vector<std::uint32_t> payload_;  // order · n² entries
    std::unordered_map<std::string, std::uint32_t> index_;

    std::string key(const IntMatrix& m) const;
    std::size_t mult_uncached(std::size_t a, std::size_t b) const;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

class Subgroup {
public:
    Subgroup() = default;
    Subgroup(GroupPtr parent, std::vector<std::size_t> elements);

    const GroupPtr& parent() const { return parent_; }
    const std::vector<std::size_t>& elements() const { return elements_; }
    std::size_t order() const { return elements_.size(); }
    bool contains(std::size_t g) const;

private:
    GroupPtr parent_;
    std::vector<std::size_t> elements_;  // sorted
    std::vector<char> member_;
};

Subgroup subgroup_closure(const GroupPtr& g, const std::vector<std::size_t>& generators);
Subgroup subgroup_join(const GroupPtr& g, const std::vector<Subgroup>& parts);
Subgroup whole_group(const GroupPtr& g);
bool generates(const GroupPtr& g, const std::vector<Subgroup>& parts);
bool is_normal(const Subgroup& h);
bool is_abelian(const Subgroup& h);
bool commute(const Subgroup& a, const Subgroup& b);
// Subgroup generated by all [a,b], a ∈ A, b ∈ B.
Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b);

class UnitaryRep {
public:
    enum class Kind { explicit_matrices, regular, regular_complement };

    // Extends generator images to a homomorphism along a breadth-first word
    // tree, then checks unitarity and ρ(gh) = ρ(g)ρ(h) on sampled pairs.
    static UnitaryRep from_generator_images(const GroupPtr& g, const std::vector<std::size_t>& generators,
                                            const std::vector<linalg::CMatrix>& images,
                                            std::uint64_t seed = kDefaultSeed);

    Kind kind() const { return kind_; }
    const GroupPtr& group() const { return group_; }
    std::size_t dim() const { return dim_; }
    linalg::CMatrix matrix(std::size_t g) const;
    linalg::CVector apply(std::size_t g, const linalg::CVector& v) const;

    // Largest unitarity and homomorphism residuals seen on sampled elements.
    double unitarity_residual(std::size_t samples = 64, std::uint64_t seed = kDefaultSeed) const;
    double homomorphism_residual(std::size_t samples = 64, std::uint64_t seed = kDefaultSeed) const;

private:
    friend UnitaryRep regular_rep(const GroupPtr&, std::size_t);
    friend UnitaryRep regular_rep_complement(const GroupPtr&, std::size_t);
    Kind kind_ = Kind::explicit_matrices;
    GroupPtr group_;
    std::size_t dim_ = 0;
    std::vector<linalg::CMatrix> matrices_;
};

// Left regular representation g·δ_x = δ_{gx} on ℂ[G].
UnitaryRep regular_rep(const GroupPtr& g, std::size_t cap = kDefaultRegularCap);
// Restriction to ℂ[G] ⊖ constants, in Helmert coordinates.
UnitaryRep regular_rep_complement(const GroupPtr& g, std::size_t cap = kDefaultRegularCap);

// Helmert coordinates: an orthonormal basis of the complement of the constant
// vector in ℂᴺ with O(N) transforms in both directions.
linalg::CVector helmert_forward(const linalg::CVector& f);  // ℂᴺ → ℂᴺ⁻¹
linalg::CVector helmert_back(const linalg::CVector& c);     // ℂᴺ⁻¹ → ℂᴺ

linalg::Subspace fixed_subspace(const UnitaryRep& rep, const Subgroup& h, const linalg::Tolerance& tol = {});

double group_epsilon(const GroupPtr& g, const Subgroup& h, const Subgroup& k,
                     std::size_t cap = kDefaultRegularCap);

struct GroupCodistance {
    double value = 1.0;
    bool generating = true;
    std::string warning;
};

GroupCodistance group_codistance(const GroupPtr& g, const std::vector<Subgroup>& subgroups,
                                 std::size_t cap = kDefaultRegularCap);

// √(2 λ₁(L_S)/|S|) with L_S = |S|·I − ½Σ(π(s)+π(s)⁻¹) on ℂ[G] ⊖ constants.
double kazhdan_spectral_lower(const GroupPtr& g, const std::vector<std::size_t>& s,
                              std::size_t cap = kDefaultRegularCap);

struct Heisenberg {
    GroupPtr group;
    unsigned modulus = 0;
    std::size_t x = 0, y = 0, z = 0;
    Subgroup X, Y, Z;
};

// Upper unitriangular 3×3 matrices over ℤ/m, x = e₁₂(1), y = e₂₃(1), z = e₁₃(1).
Heisenberg heisenberg_mod(unsigned m);
// Same over 𝔽_p; p must be a prime ≤ 13.
Heisenberg heisenberg(unsigned p);

struct HeisenbergIrrep {
    UnitaryRep rep;
    std::size_t degree = 1;
    std::string name;  // "chi(a,b)" or "rho(k)" for ζ = exp(2πik/p)
};

std::vector<HeisenbergIrrep> heisenberg_irreps(const Heisenberg& h);
std::vector<HeisenbergIrrep> heisenberg_irreps(unsigned p);

// Block unitriangular group ⟨X, Y⟩ inside EL_{a+b+c}(ℤ/m): X is the a×b block
// above the diagonal, Y the b×c block, Z the a×c corner.
struct BlockHeisenberg {
    GroupPtr group;
    std::size_t a = 0, b = 0, c = 0;
    Subgroup X, Y, Z;
};

BlockHeisenberg block_heisenberg(std::size_t a, std::size_t b, std::size_t c, unsigned m,
                                 std::size_t cap = kDefaultClosureCap);

using IndexPair = std::pair<int, int>;  // ordered pair from {1,2,3}

struct ElnSystem {
    GroupPtr group;
    std::size_t n = 0;
    unsigned modulus = 0;
    std::size_t a = 0, b = 0, c = 0;
    std::map<IndexPair, Subgroup> X;       // root subgroups X_ij
    std::map<IndexPair, Subgroup> vertex;  // G_ij = ⟨X_ik, X_kj⟩
};

// Index pairs (i,j), i≠j, in the order (1,2),(1,3),(2,1),(2,3),(3,1),(3,2).
const std::vector<IndexPair>& ordered_pairs();

ElnSystem eln_root_subgroups(std::size_t n, RingZm ring, std::size_t cap = kDefaultClosureCap);

struct A2Report {
    bool ok = true;
    char axiom = 0;  // 'a'..'d' of the first violation
    int i = 0, j = 0, k = 0;
    std::string message;
};

A2Report verify_a2_system(const GroupPtr& g, const std::map<IndexPair, Subgroup>& x);

}  // namespace kazhdan::group

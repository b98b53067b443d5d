#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <set>

#include "kazhdan/error.hpp"
#include "kazhdan/group.hpp"

namespace kazhdan::group {

using linalg::CMatrix;
using linalg::Complex;

namespace {

void require_parent(const GroupPtr& g, const Subgroup& h) {
    if (h.parent() != g) throw InputError("subgroup belongs to a different group");
}

bool is_prime(unsigned p) {
    if (p < 2) return false;
    for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Complex root_of_unity(unsigned k, unsigned p) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k % p) / static_cast<double>(p);
    return {std::cos(angle), std::sin(angle)};
}

}  // namespace

double group_epsilon(const GroupPtr& g, const Subgroup& h, const Subgroup& k, std::size_t cap) {
    require_parent(g, h);
    require_parent(g, k);
    if (!generates(g, {h, k})) return 1.0;
    const UnitaryRep rep = regular_rep_complement(g, cap);
    return linalg::orthogonality_constant(fixed_subspace(rep, h), fixed_subspace(rep, k));
}

GroupCodistance group_codistance(const GroupPtr& g, const std::vector<Subgroup>& subgroups, std::size_t cap) {
    if (subgroups.size() < 2) throw InputError("codistance needs at least two subgroups");
    for (const auto& h : subgroups) require_parent(g, h);
    GroupCodistance out;
    if (!generates(g, subgroups)) {
        out.value = 1.0;
        out.generating = false;
        out.warning = "subgroups do not generate the group; codistance is 1";
        return out;
    }
    const UnitaryRep rep = regular_rep_complement(g, cap);
    std::vector<linalg::Subspace> fixed;
    for (const auto& h : subgroups) fixed.push_back(fixed_subspace(rep, h));
    linalg::CodistanceOptions opt;
    opt.allow_zero = true;
    out.value = linalg::codistance(fixed, opt);
    return out;
}

double kazhdan_spectral_lower(const GroupPtr& g, const std::vector<std::size_t>& s, std::size_t cap) {
    if (s.empty()) throw InputError("generating multiset is empty");
    if (g->order() < 2) throw InputError("trivial group has no nontrivial representations");
    if (g->order() > cap)
        throw CapExceeded("group order " + std::to_string(g->order()) + " exceeds the regular representation cap " +
                          std::to_string(cap));
    if (subgroup_closure(g, s).order() != g->order()) throw InputError("S does not generate the group");
    const std::size_t n = g->order();
    CMatrix l(n, n);
    const double size = static_cast<double>(s.size());
    for (std::size_t x = 0; x < n; ++x) l(x, x) += size;
    for (std::size_t e : s)
        for (std::size_t x = 0; x < n; ++x) {
            const std::size_t y = g->mult(e, x);
            l(y, x) -= 0.5;
            l(x, y) -= 0.5;
        }
    // The constants span the kernel because S generates; the next eigenvalue
    // is the bottom of the spectrum on the complement.
    const auto values = linalg::hermitian_eigenvalues(l);
    return std::sqrt(2.0 * std::max(values[1], 0.0) / size);
}

Heisenberg heisenberg_mod(unsigned m) {
    if (m < 2) throw InputError("modulus must be at least 2");
    Heisenberg h;
    h.modulus = m;
    const IntMatrix x = elementary(3, 0, 1, 1, m);
    const IntMatrix y = elementary(3, 1, 2, 1, m);
    h.group = FiniteGroup::matrix_group(3, RingZm{m}, {x, y});
    h.x = *h.group->find(x);
    h.y = *h.group->find(y);
    h.z = *h.group->find(elementary(3, 0, 2, 1, m));
    h.X = subgroup_closure(h.group, {h.x});
    h.Y = subgroup_closure(h.group, {h.y});
    h.Z = subgroup_closure(h.group, {h.z});
    return h;
}

Heisenberg heisenberg(unsigned p) {
    if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
    if (p > 13) throw InputError("Heisenberg groups are limited to p <= 13");
    return heisenberg_mod(p);
}

std::vector<HeisenbergIrrep> heisenberg_irreps(const Heisenberg& h) {
    const unsigned p = h.modulus;
    if (!is_prime(p)) throw InputError("irreducible representations need a prime modulus");
    std::vector<HeisenbergIrrep> out;
    const std::vector<std::size_t> gens{h.x, h.y};
    for (unsigned a = 0; a < p; ++a)
        for (unsigned b = 0; b < p; ++b) {
            CMatrix rx(1, 1), ry(1, 1);
            rx(0, 0) = root_of_unity(a, p);
            ry(0, 0) = root_of_unity(b, p);
            out.push_back({UnitaryRep::from_generator_images(h.group, gens, {rx, ry}), 1,
                           "chi(" + std::to_string(a) + "," + std::to_string(b) + ")"});
        }
    for (unsigned k = 1; k < p; ++k) {
        // ρ_ζ(x) e_i = ζ^i e_i, ρ_ζ(y) e_i = e_{i+1}, indices i = 1..p mod p.
        CMatrix rx(p, p), ry(p, p);
        for (unsigned i = 1; i <= p; ++i) {
            rx(i - 1, i - 1) = root_of_unity(k * i, p);
            ry(i % p, i - 1) = 1.0;
        }
        out.push_back({UnitaryRep::from_generator_images(h.group, gens, {rx, ry}), p, "rho(" + std::to_string(k) + ")"});
    }
    return out;
}

std::vector<HeisenbergIrrep> heisenberg_irreps(unsigned p) { return heisenberg_irreps(heisenberg(p)); }

BlockHeisenberg block_heisenberg(std::size_t a, std::size_t b, std::size_t c, unsigned m, std::size_t cap) {
    if (a == 0 || b == 0 || c == 0) throw InputError("block sizes must be positive");
    const std::size_t n = a + b + c;
    std::vector<IntMatrix> xg, yg, zg;
    for (std::size_t k = 0; k < a; ++k)
        for (std::size_t l = a; l < a + b; ++l) xg.push_back(elementary(n, k, l, 1, m));
    for (std::size_t k = a; k < a + b; ++k)
        for (std::size_t l = a + b; l < n; ++l) yg.push_back(elementary(n, k, l, 1, m));
    for (std::size_t k = 0; k < a; ++k)
        for (std::size_t l = a + b; l < n; ++l) zg.push_back(elementary(n, k, l, 1, m));
    std::vector<IntMatrix> all = xg;
    all.insert(all.end(), yg.begin(), yg.end());

    BlockHeisenberg bh;
    bh.a = a;
    bh.b = b;
    bh.c = c;
    bh.group = FiniteGroup::matrix_group(n, RingZm{m}, all, cap);
    auto indices = [&](const std::vector<IntMatrix>& ms) {
        std::vector<std::size_t> idx;
        for (const auto& mat : ms) {
            const auto f = bh.group->find(mat);
            if (!f) throw std::logic_error("block generator missing from the group");
            idx.push_back(*f);
        }
        return idx;
    };
    bh.X = subgroup_closure(bh.group, indices(xg));
    bh.Y = subgroup_closure(bh.group, indices(yg));
    bh.Z = subgroup_closure(bh.group, indices(zg));
    return bh;
}

const std::vector<IndexPair>& ordered_pairs() {
    static const std::vector<IndexPair> pairs{{1, 2}, {1, 3}, {2, 1}, {2, 3}, {3, 1}, {3, 2}};
    return pairs;
}

ElnSystem eln_root_subgroups(std::size_t n, RingZm ring, std::size_t cap) {
    if (n < 3) throw InputError("EL_n root subgroups need n >= 3");
    const unsigned m = ring.modulus;
    ElnSystem sys;
    sys.n = n;
    sys.modulus = m;
    sys.a = n / 3;
    sys.b = (n + 1) / 3;
    sys.c = (n + 2) / 3;
    // ℐ₁ = [0,a), ℐ₂ = [a,a+b), ℐ₃ = [a+b,n), 0-based.
    const std::size_t lo[4] = {0, 0, sys.a, sys.a + sys.b};
    const std::size_t hi[4] = {0, sys.a, sys.a + sys.b, n};

    std::vector<IntMatrix> all;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) all.push_back(elementary(n, i, j, 1, m));
    sys.group = FiniteGroup::matrix_group(n, ring, all, cap);

    for (const auto& [i, j] : ordered_pairs()) {
        std::vector<std::size_t> gens;
        for (std::size_t k = lo[i]; k < hi[i]; ++k)
            for (std::size_t l = lo[j]; l < hi[j]; ++l) gens.push_back(*sys.group->find(elementary(n, k, l, 1, m)));
        sys.X[{i, j}] = subgroup_closure(sys.group, gens);
    }
    for (const auto& [i, j] : ordered_pairs()) {
        const int k = 6 - i - j;
        sys.vertex[{i, j}] = subgroup_join(sys.group, {sys.X.at({i, k}), sys.X.at({k, j})});
    }
    return sys;
}

A2Report verify_a2_system(const GroupPtr& g, const std::map<IndexPair, Subgroup>& x) {
    for (const auto& p : ordered_pairs()) {
        if (!x.count(p)) throw InputError("A2 system is missing a subgroup");
        require_parent(g, x.at(p));
    }
    std::vector<std::array<int, 3>> perms;
    for (const auto& [i, j] : ordered_pairs()) perms.push_back({i, j, 6 - i - j});

    auto fail = [](char axiom, int i, int j, int k, std::string msg) {
        A2Report r;
        r.ok = false;
        r.axiom = axiom;
        r.i = i;
        r.j = j;
        r.k = k;
        r.message = std::move(msg);
        return r;
    };
    auto name = [](int i, int j) { return "X" + std::to_string(i) + std::to_string(j); };

    for (const auto& [i, j] : ordered_pairs())
        if (!is_abelian(x.at({i, j}))) return fail('a', i, j, 0, name(i, j) + " is not abelian");
    for (const auto& [i, j, k] : perms)
        if (!commute(x.at({i, j}), x.at({i, k})))
            return fail('b', i, j, k, name(i, j) + " and " + name(i, k) + " do not commute");
    for (const auto& [i, j, k] : perms)
        if (!commute(x.at({j, i}), x.at({k, i})))
            return fail('c', i, j, k, name(j, i) + " and " + name(k, i) + " do not commute");
    for (const auto& [i, j, k] : perms) {
        const Subgroup c = commutator_subgroup(x.at({i, j}), x.at({j, k}));
        if (c.elements() != x.at({i, k}).elements())
            return fail('d', i, j, k, "[" + name(i, j) + "," + name(j, k) + "] differs from " + name(i, k));
    }
    return {};
}

}  // namespace kazhdan::group

#include "kazhdan/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

#include "kazhdan/error.hpp"
#include "kazhdan/parallel.hpp"

namespace kazhdan::verify {

using criteria::BoundReport;

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void finalize(Verification& v, const std::string& bound_name, double bound) {
    v.report.bound_name = bound_name;
    v.report.satisfied = !v.skipped && v.passed();
    v.report.bound = v.report.satisfied ? bound : 0.0;
    for (const auto& c : v.checks) v.report.labels.emplace_back(c.name, c.passed ? "pass" : "fail");
    if (!v.warning.empty()) v.report.notes.push_back(v.warning);
}

}  // namespace

bool Verification::passed() const {
    return !skipped && !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::size_t sl_order(std::size_t n, unsigned m) {
    __extension__ using Wide = unsigned __int128;
    const Wide limit = static_cast<Wide>(~std::size_t{0});
    Wide total = 1;
    auto mul = [&](Wide f) {
        if (f != 0 && total > limit / f) return false;
        total *= f;
        return total <= limit;
    };
    unsigned rest = m;
    for (unsigned p = 2; rest > 1; ++p) {
        if (rest % p) continue;
        unsigned e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        // |SL_n(ℤ/p^e)| = p^{(e−1)(n²−1)} · p^{n(n−1)/2} · Π_{k=2..n}(p^k − 1)
        const std::size_t exponent = (e - 1) * (n * n - 1) + n * (n - 1) / 2;
        for (std::size_t i = 0; i < exponent; ++i)
            if (!mul(p)) return 0;
        for (std::size_t k = 2; k <= n; ++k) {
            Wide pk = 1;
            for (std::size_t i = 0; i < k; ++i) {
                pk *= p;
                if (pk > limit) return 0;
            }
            if (!mul(pk - 1)) return 0;
        }
    }
    return static_cast<std::size_t>(total);
}

Verification heisenberg_verification(unsigned p, const RunOptions& opt) {
    const group::Heisenberg h = group::heisenberg(p);
    const auto irreps = group::heisenberg_irreps(h);
    const std::size_t order = h.group->order();
    const double target = 1.0 / std::sqrt(static_cast<double>(p));

    Verification v;
    v.report.criterion = "heisenberg";
    v.report.inputs = {{"p", static_cast<double>(p)}};

    std::size_t deg1 = 0, degp = 0, sum_sq = 0;
    for (const auto& r : irreps) {
        if (r.degree == 1) ++deg1;
        if (r.degree == p) ++degp;
        sum_sq += r.degree * r.degree;
    }
    v.checks.push_back({"census", deg1 == std::size_t{p} * p && degp == p - 1 && deg1 + degp == irreps.size(),
                        std::to_string(deg1) + " of degree 1, " + std::to_string(degp) + " of degree " +
                            std::to_string(p)});
    v.checks.push_back({"sum_dim_squared", sum_sq == order && order == std::size_t{p} * p * p,
                        std::to_string(sum_sq) + " vs |G| = " + std::to_string(order)});

    // Per-irrep work: characters, residuals, fixed subspaces and ε.
    struct Slot {
        std::vector<linalg::Complex> character;
        double residual = 0;
        double eps = 0;
        std::size_t dim_x = 0, dim_y = 0;
    };
    std::vector<Slot> slots(irreps.size());
    std::vector<std::function<void()>> tasks;
    for (std::size_t i = 0; i < irreps.size(); ++i)
        tasks.emplace_back([&, i] {
            const auto& rep = irreps[i].rep;
            Slot& s = slots[i];
            s.character.resize(order);
            for (std::size_t g = 0; g < order; ++g) {
                const linalg::CMatrix m = rep.matrix(g);
                linalg::Complex tr = 0;
                for (std::size_t k = 0; k < m.rows(); ++k) tr += m(k, k);
                s.character[g] = tr;
            }
            s.residual = std::max(rep.unitarity_residual(order, opt.seed), rep.homomorphism_residual(256, opt.seed));
            const auto vx = group::fixed_subspace(rep, h.X);
            const auto vy = group::fixed_subspace(rep, h.Y);
            s.dim_x = vx.dim();
            s.dim_y = vy.dim();
            s.eps = linalg::orthogonality_constant(vx, vy);
        });
    double group_eps = 0;
    tasks.emplace_back([&] { group_eps = group::group_epsilon(h.group, h.X, h.Y, opt.regular_cap); });
    run_parallel(tasks, opt.jobs);

    double worst_inner = 0, worst_residual = 0, worst_p = 0, worst_1 = 0;
    bool fixed_dims_ok = true;
    for (std::size_t i = 0; i < irreps.size(); ++i) {
        worst_residual = std::max(worst_residual, slots[i].residual);
        for (std::size_t j = i; j < irreps.size(); ++j) {
            linalg::Complex ip = 0;
            for (std::size_t g = 0; g < order; ++g) ip += slots[i].character[g] * std::conj(slots[j].character[g]);
            ip /= static_cast<double>(order);
            worst_inner = std::max(worst_inner, std::abs(ip - linalg::Complex(i == j ? 1.0 : 0.0)));
        }
        if (irreps[i].degree == p) {
            worst_p = std::max(worst_p, std::abs(slots[i].eps - target));
            fixed_dims_ok = fixed_dims_ok && slots[i].dim_x == 1 && slots[i].dim_y == 1;
        } else if (i != 0) {
            worst_1 = std::max(worst_1, slots[i].eps);
        }
    }
    v.checks.push_back({"characters_orthonormal", worst_inner < 1e-9, "max deviation " + fmt(worst_inner)});
    v.checks.push_back({"unitary_homomorphisms", worst_residual < 1e-10, "max residual " + fmt(worst_residual)});
    v.checks.push_back({"fixed_dims_degree_p", fixed_dims_ok, "dim V^X = dim V^Y = 1"});
    v.checks.push_back({"eps_degree_p", worst_p <= 1e-10, "max |eps - 1/sqrt(p)| = " + fmt(worst_p)});
    v.checks.push_back({"eps_degree_1_nontrivial", worst_1 <= 1e-12, "max eps = " + fmt(worst_1)});
    v.checks.push_back(
        {"group_epsilon", std::abs(group_eps - target) <= 1e-9, "group_epsilon = " + fmt(group_eps)});

    v.report.intermediates = {{"order", static_cast<double>(order)},
                              {"degree_1_count", static_cast<double>(deg1)},
                              {"degree_p_count", static_cast<double>(degp)},
                              {"sum_dim_squared", static_cast<double>(sum_sq)},
                              {"target", target},
                              {"eps_degree_p_max_dev", worst_p},
                              {"group_epsilon", group_eps}};
    finalize(v, "group_epsilon", group_eps);
    return v;
}

Verification six_points_verification(std::size_t n, unsigned m, const RunOptions& opt) {
    if (n < 3) throw InputError("needs n >= 3");
    if (m < 2) throw InputError("modulus must be at least 2");
    Verification v;
    v.report.criterion = "six_points";
    v.report.inputs = {{"n", static_cast<double>(n)}, {"mod", static_cast<double>(m)}};
    const std::size_t expected = sl_order(n, m);
    v.report.intermediates.emplace_back("expected_order", static_cast<double>(expected));
    if (expected == 0 || expected > opt.regular_cap) {
        v.skipped = true;
        v.warning = "skipped: |EL_" + std::to_string(n) + "(Z/" + std::to_string(m) + ")| = " +
                    (expected ? std::to_string(expected) : std::string("overflow")) +
                    " exceeds the group-order cap " + std::to_string(opt.regular_cap);
        finalize(v, "kappa_vertex", 0.0);
        return v;
    }

    const group::ElnSystem sys = group::eln_root_subgroups(n, group::RingZm{m}, std::max(expected, opt.regular_cap));
    const auto& g = sys.group;
    v.checks.push_back({"group_order", g->order() == expected,
                        "|G| = " + std::to_string(g->order()) + ", expected " + std::to_string(expected)});

    const group::A2Report a2 = group::verify_a2_system(g, sys.X);
    v.checks.push_back({"a2_axioms", a2.ok, a2.ok ? "axioms (a)-(d) hold" : a2.message});

    std::vector<group::Subgroup> vertex;
    std::set<std::size_t> root_union, vertex_union;
    for (const auto& pr : group::ordered_pairs()) {
        vertex.push_back(sys.vertex.at(pr));
        for (std::size_t e : sys.X.at(pr).elements())
            if (e != g->identity()) root_union.insert(e);
        for (std::size_t e : sys.vertex.at(pr).elements())
            if (e != g->identity()) vertex_union.insert(e);
    }

    group::GroupCodistance rho;
    double kappa_roots = 0, kappa_vertex_spec = 0;
    std::vector<std::function<void()>> tasks{
        [&] { rho = group::group_codistance(g, vertex, opt.regular_cap); },
        [&] {
            kappa_roots =
                group::kazhdan_spectral_lower(g, {root_union.begin(), root_union.end()}, opt.regular_cap);
        },
        [&] {
            kappa_vertex_spec =
                group::kazhdan_spectral_lower(g, {vertex_union.begin(), vertex_union.end()}, opt.regular_cap);
        }};
    run_parallel(tasks, opt.jobs);

    const double gap = 2.0 / (17.0 + 6.0 * std::sqrt(2.0));
    const double rho_limit = 1.0 - gap;
    const double kappa_from_rho = std::sqrt(2.0 * std::max(0.0, 1.0 - rho.value));
    v.checks.push_back({"vertex_groups_generate", rho.generating, rho.generating ? "the G_ij generate G" : rho.warning});
    v.checks.push_back({"codistance_bound", rho.value <= rho_limit + 1e-9,
                        "rho = " + fmt(rho.value) + " vs limit " + fmt(rho_limit)});
    v.checks.push_back({"kappa_vertex_ge_3_8", kappa_from_rho >= 0.375,
                        "sqrt(2(1-rho)) = " + fmt(kappa_from_rho)});
    v.checks.push_back({"kappa_roots_ge_1_8", kappa_roots >= 0.125, "spectral lower = " + fmt(kappa_roots)});

    v.report.intermediates.insert(v.report.intermediates.end(),
                                  {{"order", static_cast<double>(g->order())},
                                   {"codistance", rho.value},
                                   {"codistance_limit", rho_limit},
                                   {"kappa_from_codistance", kappa_from_rho},
                                   {"root_union_size", static_cast<double>(root_union.size())},
                                   {"kappa_spectral_roots", kappa_roots},
                                   {"vertex_union_size", static_cast<double>(vertex_union.size())},
                                   {"kappa_spectral_vertex_groups", kappa_vertex_spec}});
    finalize(v, "kappa_from_codistance", kappa_from_rho);
    return v;
}

}  // namespace kazhdan::verify

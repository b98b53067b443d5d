#include "kazhdan/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "kazhdan/error.hpp"

namespace kazhdan::criteria {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

void finish(BoundReport& r, double bound, bool preconditions) {
    r.satisfied = preconditions && bound > 0;
    r.bound = r.satisfied ? bound : 0.0;
}

void require_unit_interval(double v, const char* what) {
    if (!(v >= 0.0 && v <= 1.0)) throw InputError(std::string(what) + " must lie in [0,1]");
}

}  // namespace

double BoundReport::value(const std::string& key) const {
    for (const auto& [k, v] : intermediates)
        if (k == key) return v;
    for (const auto& [k, v] : inputs)
        if (k == key) return v;
    if (key == bound_name) return bound;
    throw InputError("report '" + criterion + "' has no value named " + key);
}

std::optional<std::string> BoundReport::label(const std::string& key) const {
    for (const auto& [k, v] : labels)
        if (k == key) return v;
    return std::nullopt;
}

EpsilonMatrix::EpsilonMatrix(std::vector<std::vector<double>> values) : v_(std::move(values)) {
    const std::size_t n = v_.size();
    if (n < 2) throw InputError("epsilon matrix needs n >= 2");
    for (std::size_t i = 0; i < n; ++i) {
        if (v_[i].size() != n) throw InputError("epsilon matrix is not square");
        v_[i][i] = 0.0;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            require_unit_interval(v_[i][j], "epsilon entries");
            if (v_[i][j] != v_[j][i]) throw InputError("epsilon matrix is not symmetric");
        }
}

EpsilonMatrix EpsilonMatrix::uniform(std::size_t n, double eps) {
    return EpsilonMatrix(std::vector<std::vector<double>>(n, std::vector<double>(n, eps)));
}

double EpsilonMatrix::max_off_diagonal() const {
    double m = 0.0;
    for (std::size_t i = 0; i < v_.size(); ++i)
        for (std::size_t j = 0; j < v_.size(); ++j)
            if (i != j) m = std::max(m, v_[i][j]);
    return m;
}

BoundReport orthogT_bounds(double rho, std::optional<double> delta) {
    if (!(rho >= 0.0)) throw InputError("rho must be nonnegative");
    BoundReport r;
    r.criterion = "orthogT";
    r.inputs = {{"rho", rho}};
    if (delta) r.inputs.emplace_back("delta", *delta);
    r.bound_name = "kappa_a";
    const bool ok = rho < 1.0;
    const double gap = ok ? 1.0 - rho : 0.0;
    r.intermediates = {{"kappa_a", std::sqrt(2.0 * gap)}};
    if (delta) r.intermediates.emplace_back("kappa_b", *delta * std::sqrt(gap));
    if (!ok) r.notes.push_back("codistance is not below 1");
    finish(r, std::sqrt(2.0 * gap), ok);
    return r;
}

BoundReport gg1_bound(double rho, int k, double lambda1) {
    if (k < 2) throw InputError("gg1 needs k >= 2");
    BoundReport r;
    r.criterion = "gg1";
    r.inputs = {{"rho", rho}, {"k", static_cast<double>(k)}, {"lambda1", lambda1}};
    r.bound_name = "kappa_lower";
    const bool pre = rho > 0.0 && rho < 1.0 && lambda1 > 0.0;
    if (!pre) {
        r.notes.push_back("needs 0 < rho < 1 and lambda1 > 0");
        finish(r, 0.0, false);
        return r;
    }
    const double codist = rho / (1.0 - rho) * (2.0 * k / lambda1 - 1.0);
    const double threshold = lambda1 / (2.0 * k);
    r.intermediates = {{"codistance_bound", codist}, {"rho_threshold", threshold}};
    const bool ok = rho < threshold;
    if (!ok) r.notes.push_back("rho is not below lambda1/(2k)");
    finish(r, ok ? std::sqrt(2.0 * (1.0 - codist)) : 0.0, ok);
    return r;
}

BoundReport corollary_tn(int n, double eps, std::optional<double> delta) {
    if (n < 2) throw InputError("n subgroups: needs n >= 2");
    require_unit_interval(eps, "eps");
    BoundReport r;
    r.criterion = "tn";
    r.inputs = {{"n", static_cast<double>(n)}, {"eps", eps}};
    if (delta) r.inputs.emplace_back("delta", *delta);
    r.bound_name = "kappa_a";
    const double slack = 1.0 - (n - 1) * eps;
    const bool ok = slack > 0.0;
    const double kappa_a = ok ? std::sqrt(2.0 * slack / n) : 0.0;
    r.intermediates.emplace_back("kappa_a", kappa_a);
    if (delta) r.intermediates.emplace_back("kappa_b", ok ? *delta * std::sqrt(slack / n) : 0.0);
    for (int m = 2; m <= n; ++m) {
        const double denom = m * (1.0 - (m - 2) * eps);
        r.intermediates.emplace_back("rho_" + std::to_string(m),
                                     denom > 0 ? (1.0 + eps) / denom : std::numeric_limits<double>::infinity());
    }
    if (!ok) r.notes.push_back("needs eps < 1/(n-1)");
    finish(r, kappa_a, ok);
    return r;
}

BoundReport corollary_t3(double eps1, double eps2, double eps3, std::optional<double> delta) {
    require_unit_interval(eps1, "eps1");
    require_unit_interval(eps2, "eps2");
    require_unit_interval(eps3, "eps3");
    if (eps3 >= 1.0) throw InputError("three subgroups: needs eps3 < 1");
    BoundReport r;
    r.criterion = "t3";
    r.inputs = {{"eps1", eps1}, {"eps2", eps2}, {"eps3", eps3}};
    if (delta) r.inputs.emplace_back("delta", *delta);
    r.bound_name = "kappa_a";
    const double eps0 = kSqrt2 * std::max(eps1, eps2) / std::sqrt(1.0 - eps3);
    const double eps_prime = std::max({eps1, eps2, eps3});
    const bool ok = eps0 < 1.0;
    const double prod = ok ? (1.0 - eps0) * (1.0 - eps_prime) : 0.0;
    r.intermediates = {{"eps0", eps0}, {"eps_prime", eps_prime}, {"kappa_a", std::sqrt(prod / 2.0)}};
    if (delta) r.intermediates.emplace_back("kappa_b", *delta / 2.0 * std::sqrt(prod));
    if (!ok) r.notes.push_back("needs eps0 < 1");
    finish(r, std::sqrt(prod / 2.0), ok);
    return r;
}

double two_subgroup_rho(double eps, double a1, double a2) {
    if (!(a1 > 0 && a2 > 0)) throw InputError("weights must be positive");
    require_unit_interval(eps, "eps");
    // With β = a₂/S, γ = a₁/S the relation reads ρ² − ρ + βγ(1 − ε²) = 0.
    const double s = a1 + a2;
    const double bg = (a1 / s) * (a2 / s);
    const double disc = std::max(0.0, 1.0 - 4.0 * bg * (1.0 - eps * eps));
    return 0.5 * (1.0 + std::sqrt(disc));
}

TriangleSolution solve_triangle_system(double e1, double e2, double e3) {
    require_unit_interval(e1, "eps1");
    require_unit_interval(e2, "eps2");
    require_unit_interval(e3, "eps3");
    const double sum_sq = e1 * e1 + e2 * e2 + e3 * e3;
    if (!(sum_sq + 2.0 * e1 * e2 * e3 < 1.0))
        throw InputError("needs eps1^2 + eps2^2 + eps3^2 + 2 eps1 eps2 eps3 < 1");

    TriangleSolution s;
    if (e1 == 0.0 && e2 == 0.0 && e3 == 0.0) return s;

    auto f = [&](double u) { return u * (u * u - sum_sq) - 2.0 * e1 * e2 * e3; };
    double lo = std::sqrt(sum_sq);
    double hi = 1.0;
    for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (f(mid) <= 0.0 ? lo : hi) = mid;
    }
    // Of the two bracket ends, keep the one with the smaller residual.
    const double u = std::abs(f(lo)) <= std::abs(f(hi)) ? lo : hi;
    s.u0 = u;
    // A zero ε forces the matching unknown to zero; this also covers the
    // 0/0 limits of the closed forms.
    const double denom = u * u - e2 * e2;
    s.z0 = (e3 == 0.0) ? 0.0 : e3 * std::sqrt(std::max(0.0, u * u - e1 * e1) / denom);
    s.x0 = (e1 == 0.0) ? 0.0 : e1 * e1 / (u - s.z0);
    s.y0 = (e2 == 0.0) ? 0.0 : e2 * e2 / (u - s.x0);
    if (!std::isfinite(s.x0) || !std::isfinite(s.y0) || !std::isfinite(s.z0))
        throw InputError("triangle system is numerically degenerate for these eps");

    s.residuals = {s.x0 * (u - s.z0) - e1 * e1, s.y0 * (u - s.x0) - e2 * e2, s.z0 * (u - s.y0) - e3 * e3, f(u)};
    s.quadratic_residual = denom * s.z0 * s.z0 - (u * u * u - e1 * e1 * u - e2 * e2 * u + e3 * e3 * u) * s.z0 +
                           e3 * e3 * (u * u - e1 * e1);
    return s;
}

T3GraphResult t3graph_solve(double e1, double e2, double e3) {
    T3GraphResult out;
    out.solution = solve_triangle_system(e1, e2, e3);
    out.graph = graph::complete_graph(3);
    const TriangleSolution& s = out.solution;
    const double u = s.u0;
    auto& c = out.c;
    c[0][1] = 1 + u - s.x0;
    c[0][2] = 1 + s.z0;
    c[1][0] = 1 + s.x0;
    c[1][2] = 1 + u - s.y0;
    c[2][0] = 1 + u - s.z0;
    c[2][1] = 1 + s.y0;

    // Vertex p sees the two edge groups whose pairwise constant is ε_p.
    const std::array<double, 3> eps{e1, e2, e3};
    for (int p = 0; p < 3; ++p) {
        const int q1 = (p + 1) % 3;
        const int q2 = (p + 2) % 3;
        out.rho_local[p] = two_subgroup_rho(eps[p], c[q1][p], c[q2][p]);
    }

    std::vector<double> cvec;
    for (const auto& e : out.graph.edges()) cvec.push_back(c[e.tail][e.head]);
    const std::vector<double> rho(out.rho_local.begin(), out.rho_local.end());
    const auto alpha = graph::gg2_alpha(out.graph, cvec, rho);
    std::copy(alpha.begin(), alpha.end(), out.alpha.begin());
    out.graph = out.graph.with_weights(alpha, cvec);
    out.lambda1 = graph::lambda1(graph::weighted_laplacian(out.graph));

    BoundReport& r = out.report;
    r.criterion = "t3graph";
    r.inputs = {{"eps1", e1}, {"eps2", e2}, {"eps3", e3}};
    r.intermediates = {{"u0", u},
                       {"x0", s.x0},
                       {"y0", s.y0},
                       {"z0", s.z0},
                       {"residual_max", std::max({std::abs(s.residuals[0]), std::abs(s.residuals[1]),
                                                  std::abs(s.residuals[2]), std::abs(s.residuals[3])})},
                       {"quadratic_residual", s.quadratic_residual},
                       {"alpha1", alpha[0]},
                       {"alpha2", alpha[1]},
                       {"alpha3", alpha[2]},
                       {"lambda1", out.lambda1},
                       {"lambda1_closed_form", 3.0 / (2.0 + u)},
                       {"rho_alpha_upper", 1.0 / out.lambda1}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j) r.intermediates.emplace_back("c" + std::to_string(i + 1) + std::to_string(j + 1), c[i][j]);
    r.bound_name = "codistance_gap";
    finish(r, 1.0 - 1.0 / out.lambda1, out.lambda1 > 1.0);
    return out;
}

BoundReport gg2_criterion(const graph::WeightedGraph& topology, const std::vector<double>& c,
                          const std::vector<double>& rho_local) {
    const auto alpha = graph::gg2_alpha(topology, c, rho_local);
    const graph::WeightedGraph g = topology.with_weights(alpha, c);
    const double l1 = graph::lambda1(graph::weighted_laplacian(g));
    double rho = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < g.edges().size(); ++k) {
        const std::size_t y = g.edges()[k].head;
        rho = std::min(rho, c[k] / (alpha[y] * static_cast<double>(g.in_degree(y))));
    }
    BoundReport r;
    r.criterion = "gg2";
    r.inputs = {{"vertices", static_cast<double>(g.vertex_count())}};
    r.intermediates = {{"lambda1", l1}, {"rho_alpha_upper", 1.0 / l1}, {"rho_min", rho}};
    if (rho < 1.0) r.intermediates.emplace_back("rho_alpha_sharp", (1.0 / (1.0 - rho)) * (1.0 / l1 - rho));
    for (std::size_t y = 0; y < alpha.size(); ++y)
        r.intermediates.emplace_back("alpha" + std::to_string(y + 1), alpha[y]);
    r.bound_name = "codistance_gap";
    if (!(l1 > 1.0)) r.notes.push_back("needs lambda1 > 1");
    finish(r, 1.0 - 1.0 / l1, l1 > 1.0);
    return r;
}

BoundReport posdef_check(const EpsilonMatrix& e) {
    const std::size_t n = e.size();
    std::vector<double> a(n * n);
    linalg::CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            a[i * n + j] = (i == j) ? 1.0 : -e(i, j);
            m(i, j) = a[i * n + j];
        }
    // Symmetric Gaussian elimination without pivoting: positive definite iff
    // every pivot exceeds the tolerance.
    bool positive = true;
    double min_pivot = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < n && positive; ++k) {
        const double piv = a[k * n + k];
        min_pivot = std::min(min_pivot, piv);
        if (piv <= 1e-12) {
            positive = false;
            break;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            const double f = a[i * n + k] / piv;
            for (std::size_t j = k; j < n; ++j) a[i * n + j] -= f * a[k * n + j];
        }
    }
    const double min_eig = linalg::hermitian_eigenvalues(m).front();
    BoundReport r;
    r.criterion = "posdef";
    r.inputs = {{"n", static_cast<double>(n)}, {"max_eps", e.max_off_diagonal()}};
    r.intermediates = {{"min_eigenvalue", min_eig}, {"min_pivot", min_pivot}};
    r.bound_name = "min_eigenvalue";
    if (!positive) r.notes.push_back("elimination met a nonpositive pivot");
    finish(r, min_eig, positive);
    return r;
}

bool six_points_exact_comparison() {
    // 2/√(17+6√2) ≥ 3/8 ⇔ 256 ≥ 9(17+6√2) ⇔ 103 ≥ 54√2 ⇔ 103² ≥ 2·54².
    constexpr long long lhs = 103LL * 103LL;
    constexpr long long rhs = 2LL * 54LL * 54LL;
    return lhs >= rhs;
}

BoundReport six_points_constants() {
    using ld = long double;
    const ld r2 = std::sqrt(static_cast<ld>(2));
    const ld rho_a = 0.5L;
    const ld rho_b = (1 + r2) / (4 * r2);
    // Coefficients of |(dg)₁|² after the local codistance estimates.
    const ld a1 = 8 * rho_b;
    const ld p = (4 - (4 - a1) / 3) / 4;
    const ld q = (4 - 5 * (4 - a1) / 3) / 8;
    const ld x_bound = (p - q) / (1 - q);
    const ld gap = 1 - x_bound;
    const ld kappa_vertex = std::sqrt(2 * gap);
    const ld kappa_edge = kappa_vertex / 3;

    BoundReport r;
    r.criterion = "six_points";
    r.intermediates = {{"rho_a", static_cast<double>(rho_a)},
                       {"rho_b", static_cast<double>(rho_b)},
                       {"coeff_p", static_cast<double>(p)},
                       {"coeff_q", static_cast<double>(q)},
                       {"projection_bound", static_cast<double>(x_bound)},
                       {"projection_bound_closed_form", static_cast<double>((18 - 3 * r2) / (22 - 5 * r2))},
                       {"gap", static_cast<double>(gap)},
                       {"gap_closed_form", static_cast<double>(2 / (17 + 6 * r2))},
                       {"codistance_bound", static_cast<double>(x_bound)},
                       {"kappa_vertex", static_cast<double>(kappa_vertex)},
                       {"kappa_edge", static_cast<double>(kappa_edge)}};
    const bool exact = six_points_exact_comparison();
    const bool vertex_ok = exact && kappa_vertex >= 0.375L;
    const bool edge_ok = kappa_edge >= 0.125L;
    r.labels = {{"kappa_vertex_ge_3_8", vertex_ok ? "true" : "false"},
                {"kappa_edge_ge_1_8", edge_ok ? "true" : "false"}};
    r.bound_name = "kappa_vertex";
    finish(r, static_cast<double>(kappa_vertex), vertex_ok && edge_ok);
    return r;
}

double eln_relative_ratio(int n, int d) {
    return 1.0 / (12.0 * std::sqrt(2.0 * d) + 2.0 * std::sqrt(3.0 * n) + 36.0 * kSqrt2);
}

BoundReport eln_kazhdan(int n, int d, bool steinberg) {
    if (n < 3) throw InputError("needs n >= 3");
    if (d < 0) throw InputError("needs d >= 0");
    BoundReport r;
    r.criterion = steinberg ? "eln_steinberg" : "eln";
    r.inputs = {{"n", static_cast<double>(n)}, {"d", static_cast<double>(d)}};
    const double ratio = eln_relative_ratio(n, d);
    const double kappa_b = 1.0 / 8.0;
    r.intermediates = {{"kappa_B", kappa_b},
                       {"relative_ratio", ratio},
                       {"alpha_d_n", appendix_alpha(d, n)},
                       {"kappa", relative_combine(kappa_b, ratio)}};
    r.labels = {{"group", steinberg ? "St_n(R)" : "EL_n(R)"}};
    r.bound_name = "kappa";
    finish(r, relative_combine(kappa_b, ratio), true);
    return r;
}

BoundReport gamma_kazhdan(int n, int d, const RingSpec& r0) {
    if (d < 0) throw InputError("needs d >= 0");
    BoundReport r;
    r.criterion = "gamma";
    r.inputs = {{"n", static_cast<double>(n)}, {"d", static_cast<double>(d)}};
    r.bound_name = "kappa";
    const double root_d = std::sqrt(d + 1.0);
    const int n3 = n / 3;
    if (r0.integers) {
        r.labels.emplace_back("ring", "Z");
        if (n < 7) {
            r.notes.push_back("hypothesis n >= 7 fails for R0 = Z");
            r.labels.emplace_back("case", "unsatisfied");
            finish(r, 0.0, false);
            return r;
        }
        double cn;
        if (n == 7) {
            cn = 1.0 / 6.0;
            r.labels.emplace_back("case", "n=7");
        } else if (n == 8) {
            cn = 1.0 / 4.0;
            r.labels.emplace_back("case", "n=8");
        } else {
            cn = std::sqrt(2.0 / 3.0 * (1.0 - std::pow(0.5, n3 - 1)));
            r.labels.emplace_back("case", "n>=9");
        }
        const double denom = root_d * (std::sqrt(20.0 * n / 3.0 + 130.0) + 12.0);
        r.intermediates = {{"C_n", cn}, {"kappa_S", cn / root_d}, {"denominator", denom}};
        finish(r, cn / denom, true);
        return r;
    }
    if (r0.p < 2 || r0.s < 1) throw InputError("field needs p >= 2 and s >= 1");
    const double q = std::pow(static_cast<double>(r0.p), static_cast<double>(r0.s));
    r.labels.emplace_back("ring", "F_" + std::to_string(r0.p) + (r0.s > 1 ? "^" + std::to_string(r0.s) : ""));
    r.inputs.emplace_back("q", q);
    if (n < 3 || q < 5) {
        r.notes.push_back(n < 3 ? "hypothesis n >= 3 fails" : "hypothesis |R0| >= 5 fails");
        r.labels.emplace_back("case", "unsatisfied");
        finish(r, 0.0, false);
        return r;
    }
    r.labels.emplace_back("case", "field");
    const double cnq = std::sqrt(2.0 / 3.0 * (1.0 - 2.0 * std::pow(1.0 / q, n3)));
    const double c3 = std::floor((n + 2) / 3.0);
    const double denom = root_d * c3 * c3 * r0.p * r0.s;
    r.intermediates = {{"C_nq", cnq}, {"kappa_S", cnq / root_d}, {"denominator", denom}};
    finish(r, cnq / denom, true);
    return r;
}

BoundReport kms_bound(int d, double m) {
    if (d < 2) throw InputError("needs d >= 2");
    BoundReport r;
    r.criterion = "kms";
    r.inputs = {{"d", static_cast<double>(d)}, {"m", m}};
    r.bound_name = "kappa";
    const double threshold = (d - 1.0) * (d - 1.0);
    r.intermediates = {{"threshold", threshold}};
    const bool ok = m > threshold;
    if (!ok) r.notes.push_back("needs m > (d-1)^2");
    finish(r, ok ? std::sqrt(2.0 / d * (1.0 - (d - 1.0) / std::sqrt(m))) : 0.0, ok);
    return r;
}

double relative_combine(double kappa_b, double kappa_ratio) {
    if (kappa_b < 0 || kappa_ratio < 0) throw InputError("Kazhdan constants must be nonnegative");
    return kappa_b * kappa_ratio;
}

double kassabov_alpha(double s) { return std::sqrt(10.0 * s + 120.0) + 12.0; }

double appendix_alpha(double d, double s) { return 6.0 * kSqrt2 * (std::sqrt(d) + 3.0) + std::sqrt(3.0 * s); }

}  // namespace kazhdan::criteria

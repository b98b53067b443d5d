#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kazhdan/graph.hpp"

namespace kazhdan::criteria {

// Result of evaluating one closed-form criterion. `bound` is the headline
// quantity named by `bound_name`; it is positive exactly when the report is
// satisfied, and 0 when the criterion does not apply.
struct BoundReport {
    std::string criterion;
    std::vector<std::pair<std::string, double>> inputs;
    std::vector<std::pair<std::string, double>> intermediates;
    std::vector<std::pair<std::string, std::string>> labels;
    std::string bound_name;
    double bound = 0.0;
    bool satisfied = false;
    std::vector<std::string> notes;

    // Looks up an input or intermediate by name; throws if absent.
    double value(const std::string& key) const;
    std::optional<std::string> label(const std::string& key) const;
};

class EpsilonMatrix {
public:
    // values[i][j] for i ≠ j; the diagonal is ignored.
    explicit EpsilonMatrix(std::vector<std::vector<double>> values);
    static EpsilonMatrix uniform(std::size_t n, double eps);

    std::size_t size() const { return v_.size(); }
    double operator()(std::size_t i, std::size_t j) const { return v_[i][j]; }
    double max_off_diagonal() const;

private:
    std::vector<std::vector<double>> v_;
};

BoundReport orthogT_bounds(double rho, std::optional<double> delta = std::nullopt);
BoundReport gg1_bound(double rho, int k, double lambda1);
BoundReport corollary_tn(int n, double eps, std::optional<double> delta = std::nullopt);
BoundReport corollary_t3(double eps1, double eps2, double eps3, std::optional<double> delta = std::nullopt);

// Larger root ρ of ε² = ((a₁+a₂)ρ/a₁ − 1)((a₁+a₂)ρ/a₂ − 1), the weighted
// codistance of two subspaces at angle-cosine ε with weights (a₁, a₂).
double two_subgroup_rho(double eps, double a1, double a2);

struct TriangleSolution {
    double x0 = 0, y0 = 0, z0 = 0, u0 = 0;
    std::array<double, 4> residuals{};  // the four equations of the system
    double quadratic_residual = 0;      // the quadratic in z at z = z₀
};

struct T3GraphResult {
    TriangleSolution solution;
    std::array<std::array<double, 3>, 3> c{};  // c[tail][head], 0-based, diagonal unused
    std::array<double, 3> rho_local{};
    std::array<double, 3> alpha{};
    graph::WeightedGraph graph;
    double lambda1 = 0;
    BoundReport report;
};

// Solves the triangle system by bisection on f(u) = u(u² − Σε²) − 2ε₁ε₂ε₃ and
// builds the triangle weighting. Throws InputError when
// ε₁² + ε₂² + ε₃² + 2ε₁ε₂ε₃ ≥ 1.
TriangleSolution solve_triangle_system(double eps1, double eps2, double eps3);
T3GraphResult t3graph_solve(double eps1, double eps2, double eps3);

// Weighted-graph criterion with α chosen from local codistances. Reports
// λ₁, the bound ρ_α ≤ 1/λ₁ and the sharper bound (1/(1−ρ))(1/λ₁ − ρ) with
// ρ = min c(e)/(α(e⁺) deg e⁺).
BoundReport gg2_criterion(const graph::WeightedGraph& topology, const std::vector<double>& c,
                          const std::vector<double>& rho_local);

BoundReport posdef_check(const EpsilonMatrix& e);
BoundReport six_points_constants();

// Exact integer form of 2/√(17+6√2) ≥ 3/8, i.e. 103² ≥ 2·54².
bool six_points_exact_comparison();

BoundReport eln_kazhdan(int n, int d, bool steinberg = false);

struct RingSpec {
    bool integers = true;  // ℤ, otherwise the field 𝔽_{p^s}
    unsigned p = 0;
    unsigned s = 1;
};

BoundReport gamma_kazhdan(int n, int d, const RingSpec& r0);
BoundReport kms_bound(int d, double m);

double relative_combine(double kappa_b, double kappa_ratio);
double kassabov_alpha(double s);             // √(10s+120) + 12
double appendix_alpha(double d, double s);   // 6√2(√d+3) + √(3s)
double eln_relative_ratio(int n, int d);     // 1/(12√(2d) + 2√(3n) + 36√2)

}  // namespace kazhdan::criteria

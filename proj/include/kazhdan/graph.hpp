#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "kazhdan/linalg.hpp"

namespace kazhdan::graph {

struct Edge {
    std::size_t tail;  // e⁻
    std::size_t head;  // e⁺
};

using EdgeWeights = std::map<std::pair<std::size_t, std::size_t>, double>;

// Finite loop-free connected graph. Every undirected edge {u,v} is stored as
// the two directed edges (u,v) and (v,u). Vertices are 0-based.
class WeightedGraph {
public:
    // Missing alpha entries default to 1, missing c entries to 1/2.
    static WeightedGraph from_undirected(std::size_t vertex_count,
                                         const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                                         const std::map<std::size_t, double>& alpha = {},
                                         const EdgeWeights& c = {});

    std::size_t vertex_count() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t reverse(std::size_t e) const { return e ^ 1U; }
    const std::vector<double>& alpha() const { return alpha_; }
    const std::vector<double>& c() const { return c_; }
    double c(std::size_t tail, std::size_t head) const;
    std::size_t in_degree(std::size_t y) const;  // number of e with e⁺ = y
    bool adjacent(std::size_t u, std::size_t v) const;

    WeightedGraph with_weights(std::vector<double> alpha, std::vector<double> c) const;

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;  // edge 2k and 2k+1 are mutual reversals
    std::vector<double> alpha_;
    std::vector<double> c_;
    void validate() const;
};

WeightedGraph complete_graph(std::size_t n);
WeightedGraph cycle_graph(std::size_t n);
WeightedGraph path_graph(std::size_t n);
// Vertices (i,j), i≠j in {1,2,3}, ordered (1,2),(1,3),(2,1),(2,3),(3,1),(3,2);
// (i,j) ~ (k,l) iff {i,j,k,l} = {1,2,3}.
WeightedGraph magic_graph();

struct LaplacianMatrix {
    enum class Kind { standard, weighted };
    linalg::CMatrix matrix;  // real symmetric
    Kind kind = Kind::standard;
    std::vector<long long> exact;  // row-major integer matrix, standard kind only
};

LaplacianMatrix standard_laplacian(const WeightedGraph& g);
// D^{1/2} M D^{1/2}, similar to Δ = D M where D = diag(α) and M is the
// c-weighted coboundary form.
LaplacianMatrix weighted_laplacian(const WeightedGraph& g);

std::vector<double> spectrum(const LaplacianMatrix& l, const linalg::Tolerance& tol = {});
double lambda1(const LaplacianMatrix& l, const linalg::Tolerance& tol = {});

// Distinct eigenvalues, certified exactly: numeric eigenvalues are rounded to
// integers r_k and Π(L − r_k I) = 0 is checked in integer arithmetic, along
// with minimality of every factor. Empty optional if no certificate exists.
std::optional<std::vector<long long>> exact_distinct_spectrum(const LaplacianMatrix& l);
std::optional<long long> exact_lambda1(const LaplacianMatrix& l);

// α(y) = 1/(ρ_local(y) · Σ_{e⁺=y} 1/c(e)).
std::vector<double> gg2_alpha(const WeightedGraph& g, const std::vector<double>& c,
                              const std::vector<double>& rho_local);

}  // namespace kazhdan::graph

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "kazhdan/error.hpp"
#include "kazhdan/graph.hpp"

namespace kazhdan::graph {

WeightedGraph WeightedGraph::from_undirected(std::size_t vertex_count,
                                             const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                                             const std::map<std::size_t, double>& alpha,
                                             const EdgeWeights& c) {
    if (vertex_count == 0) throw InputError("graph needs at least one vertex");
    WeightedGraph g;
    g.n_ = vertex_count;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (auto [u, v] : edges) {
        if (u >= vertex_count || v >= vertex_count)
            throw InputError("edge endpoint out of range: " + std::to_string(u) + "," + std::to_string(v));
        if (u == v) throw InputError("loops are not allowed (vertex " + std::to_string(u) + ")");
        if (!seen.insert({std::min(u, v), std::max(u, v)}).second)
            throw InputError("repeated edge " + std::to_string(u) + "," + std::to_string(v));
        g.edges_.push_back({u, v});
        g.edges_.push_back({v, u});
    }
    g.alpha_.assign(vertex_count, 1.0);
    for (auto [y, a] : alpha) {
        if (y >= vertex_count) throw InputError("alpha given for unknown vertex " + std::to_string(y));
        g.alpha_[y] = a;
    }
    g.c_.assign(g.edges_.size(), 0.5);
    for (const auto& [key, w] : c) {
        bool found = false;
        for (std::size_t e = 0; e < g.edges_.size(); ++e) {
            if (g.edges_[e].tail == key.first && g.edges_[e].head == key.second) {
                g.c_[e] = w;
                found = true;
            }
        }
        if (!found)
            throw InputError("weight given for a non-edge " + std::to_string(key.first) + "," +
                             std::to_string(key.second));
    }
    g.validate();
    return g;
}

void WeightedGraph::validate() const {
    for (double a : alpha_)
        if (!(a > 0) || !std::isfinite(a)) throw InputError("vertex weights must be positive");
    for (double w : c_)
        if (!(w > 0) || !std::isfinite(w)) throw InputError("edge weights must be positive");
    std::vector<char> seen(n_, 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        const std::size_t y = stack.back();
        stack.pop_back();
        for (const auto& e : edges_)
            if (e.tail == y && !seen[e.head]) {
                seen[e.head] = 1;
                stack.push_back(e.head);
            }
    }
    if (std::count(seen.begin(), seen.end(), 0) > 0) throw InputError("graph is disconnected");
}

double WeightedGraph::c(std::size_t tail, std::size_t head) const {
    for (std::size_t e = 0; e < edges_.size(); ++e)
        if (edges_[e].tail == tail && edges_[e].head == head) return c_[e];
    throw InputError("no such edge");
}

std::size_t WeightedGraph::in_degree(std::size_t y) const {
    return static_cast<std::size_t>(
        std::count_if(edges_.begin(), edges_.end(), [y](const Edge& e) { return e.head == y; }));
}

bool WeightedGraph::adjacent(std::size_t u, std::size_t v) const {
    return std::any_of(edges_.begin(), edges_.end(),
                       [u, v](const Edge& e) { return e.tail == u && e.head == v; });
}

WeightedGraph WeightedGraph::with_weights(std::vector<double> alpha, std::vector<double> c) const {
    if (alpha.size() != n_ || c.size() != edges_.size()) throw InputError("weight vector sizes do not match graph");
    WeightedGraph g = *this;
    g.alpha_ = std::move(alpha);
    g.c_ = std::move(c);
    g.validate();
    return g;
}

WeightedGraph complete_graph(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return WeightedGraph::from_undirected(n, e);
}

WeightedGraph cycle_graph(std::size_t n) {
    if (n < 3) throw InputError("cycle needs at least 3 vertices");
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return WeightedGraph::from_undirected(n, e);
}

WeightedGraph path_graph(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return WeightedGraph::from_undirected(n, e);
}

WeightedGraph magic_graph() {
    const std::vector<std::pair<int, int>> v{{1, 2}, {1, 3}, {2, 1}, {2, 3}, {3, 1}, {3, 2}};
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t a = 0; a < v.size(); ++a)
        for (std::size_t b = a + 1; b < v.size(); ++b) {
            const std::set<int> s{v[a].first, v[a].second, v[b].first, v[b].second};
            if (s == std::set<int>{1, 2, 3}) e.emplace_back(a, b);
        }
    return WeightedGraph::from_undirected(6, e);
}

LaplacianMatrix standard_laplacian(const WeightedGraph& g) {
    const std::size_t n = g.vertex_count();
    LaplacianMatrix l;
    l.kind = LaplacianMatrix::Kind::standard;
    l.exact.assign(n * n, 0);
    for (const auto& e : g.edges()) {
        l.exact[e.head * n + e.head] += 1;
        l.exact[e.head * n + e.tail] -= 1;
    }
    l.matrix = linalg::CMatrix(n, n);
    for (std::size_t i = 0; i < n * n; ++i) l.matrix.data()[i] = static_cast<double>(l.exact[i]);
    return l;
}

LaplacianMatrix weighted_laplacian(const WeightedGraph& g) {
    const std::size_t n = g.vertex_count();
    linalg::CMatrix m(n, n);
    for (std::size_t k = 0; k < g.edges().size(); ++k) {
        const Edge& e = g.edges()[k];
        const double w = 1.0 / (g.c()[k] + g.c()[g.reverse(k)]);
        m(e.head, e.head) += w;
        m(e.head, e.tail) -= w;
    }
    LaplacianMatrix l;
    l.kind = LaplacianMatrix::Kind::weighted;
    l.matrix = linalg::CMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            l.matrix(i, j) = std::sqrt(g.alpha()[i]) * m(i, j).real() * std::sqrt(g.alpha()[j]);
    return l;
}

std::vector<double> spectrum(const LaplacianMatrix& l, const linalg::Tolerance& tol) {
    return linalg::hermitian_eigenvalues(l.matrix, tol);
}

double lambda1(const LaplacianMatrix& l, const linalg::Tolerance& tol) {
    const auto values = spectrum(l, tol);
    const double threshold = tol.eig_tol * static_cast<double>(l.matrix.rows());
    for (double v : values)
        if (v > threshold) return v;
    throw InputError("no eigenvalue above the kernel threshold");
}

namespace {

__extension__ using Wide = __int128;
constexpr Wide kOverflowGuard = static_cast<Wide>(1) << 100;

// Product of (L − r I) over the given roots; empty optional on overflow risk.
std::optional<std::vector<Wide>> root_product(const std::vector<long long>& l, std::size_t n,
                                              const std::vector<long long>& roots) {
    std::vector<Wide> acc(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) acc[i * n + i] = 1;
    for (long long r : roots) {
        std::vector<Wide> f(n * n);
        for (std::size_t i = 0; i < n * n; ++i) f[i] = l[i];
        for (std::size_t i = 0; i < n; ++i) f[i * n + i] -= r;
        std::vector<Wide> next(n * n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                const Wide a = acc[i * n + k];
                if (a == 0) continue;
                for (std::size_t j = 0; j < n; ++j) next[i * n + j] += a * f[k * n + j];
            }
        for (Wide x : next)
            if (x > kOverflowGuard || x < -kOverflowGuard) return std::nullopt;
        acc = std::move(next);
    }
    return acc;
}

}  // namespace

std::optional<std::vector<long long>> exact_distinct_spectrum(const LaplacianMatrix& l) {
    if (l.kind != LaplacianMatrix::Kind::standard || l.exact.empty()) return std::nullopt;
    const std::size_t n = l.matrix.rows();
    std::set<long long> candidates;
    for (double v : spectrum(l)) {
        const double r = std::round(v);
        if (std::abs(v - r) > 1e-6) return std::nullopt;
        candidates.insert(static_cast<long long>(r));
    }
    const std::vector<long long> roots(candidates.begin(), candidates.end());
    const auto full = root_product(l.exact, n, roots);
    if (!full) return std::nullopt;
    for (Wide x : *full)
        if (x != 0) return std::nullopt;
    for (std::size_t k = 0; k < roots.size(); ++k) {
        std::vector<long long> others;
        for (std::size_t j = 0; j < roots.size(); ++j)
            if (j != k) others.push_back(roots[j]);
        const auto partial = root_product(l.exact, n, others);
        if (!partial) return std::nullopt;
        if (std::all_of(partial->begin(), partial->end(), [](Wide x) { return x == 0; })) return std::nullopt;
    }
    return roots;
}

std::optional<long long> exact_lambda1(const LaplacianMatrix& l) {
    const auto roots = exact_distinct_spectrum(l);
    if (!roots) return std::nullopt;
    for (long long r : *roots)
        if (r > 0) return r;
    return std::nullopt;
}

std::vector<double> gg2_alpha(const WeightedGraph& g, const std::vector<double>& c,
                              const std::vector<double>& rho_local) {
    if (c.size() != g.edges().size()) throw InputError("gg2 alpha: edge weight count mismatch");
    if (rho_local.size() != g.vertex_count()) throw InputError("gg2 alpha: local codistance count mismatch");
    std::vector<double> inv_sum(g.vertex_count(), 0.0);
    for (std::size_t k = 0; k < g.edges().size(); ++k) {
        if (!(c[k] > 0)) throw InputError("gg2 alpha: edge weights must be positive");
        inv_sum[g.edges()[k].head] += 1.0 / c[k];
    }
    std::vector<double> alpha(g.vertex_count());
    for (std::size_t y = 0; y < g.vertex_count(); ++y) {
        if (!(rho_local[y] > 0) || rho_local[y] > 1.0)
            throw InputError("gg2 alpha: local codistance must lie in (0,1]");
        alpha[y] = 1.0 / (rho_local[y] * inv_sum[y]);
    }
    return alpha;
}

}  // namespace kazhdan::graph

#include <algorithm>
#include <cmath>

#include "kazhdan/error.hpp"
#include "kazhdan/linalg.hpp"

namespace kazhdan::linalg {

Subspace::Subspace(std::size_t ambient_dim, CMatrix basis)
    : ambient_dim_(ambient_dim), basis_(std::move(basis)) {
    if (basis_.cols() > 0 && basis_.rows() != ambient_dim_)
        throw InputError("subspace basis rows do not match the ambient dimension");
    if (basis_.cols() == 0) basis_ = CMatrix(ambient_dim_, 0);
    if (basis_.cols() > ambient_dim_) throw InputError("more basis vectors than ambient dimensions");
}

Subspace Subspace::zero(std::size_t ambient_dim) { return Subspace(ambient_dim, CMatrix(ambient_dim, 0)); }

Subspace Subspace::whole(std::size_t ambient_dim) {
    return Subspace(ambient_dim, CMatrix::identity(ambient_dim));
}

namespace {

void subtract_projection(CVector& w, const std::vector<CVector>& q) {
    for (const auto& b : q) {
        const Complex c = dot(b, w);
        if (c == Complex(0.0, 0.0)) continue;
        for (std::size_t i = 0; i < w.size(); ++i) w[i] -= c * b[i];
    }
}

}  // namespace

Subspace orthonormalize(const std::vector<CVector>& vectors, const Tolerance& tol,
                        std::optional<std::size_t> ambient_dim) {
    if (vectors.empty() && !ambient_dim) throw InputError("orthonormalize: empty input with unknown dimension");
    const std::size_t n = ambient_dim ? *ambient_dim : vectors.front().size();
    std::vector<CVector> q;
    for (const auto& v : vectors) {
        if (v.size() != n) throw InputError("orthonormalize: inconsistent vector dimensions");
        const double nv = norm(v);
        if (nv < tol.rank_tol) continue;
        CVector w = v;
        for (auto& z : w) z /= nv;
        subtract_projection(w, q);
        subtract_projection(w, q);
        const double r = norm(w);
        if (r < tol.rank_tol) continue;
        for (auto& z : w) z /= r;
        q.push_back(std::move(w));
        if (q.size() == n) break;
    }
    return Subspace(n, CMatrix::from_columns(q, n));
}

Subspace complement(const Subspace& w, const Tolerance& tol) {
    const std::size_t n = w.ambient_dim();
    std::vector<CVector> vs;
    vs.reserve(w.dim() + n);
    for (std::size_t j = 0; j < w.dim(); ++j) vs.push_back(w.basis().column(j));
    for (std::size_t i = 0; i < n; ++i) {
        CVector e(n);
        e[i] = 1.0;
        vs.push_back(std::move(e));
    }
    const Subspace all = orthonormalize(vs, tol, n);
    CMatrix rest(n, n - w.dim());
    for (std::size_t j = w.dim(); j < all.dim(); ++j)
        for (std::size_t i = 0; i < n; ++i) rest(i, j - w.dim()) = all.basis()(i, j);
    return Subspace(n, rest);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b, const Tolerance& tol) {
    if (a.ambient_dim() != b.ambient_dim()) throw InputError("subspace sum: ambient mismatch");
    std::vector<CVector> vs;
    for (std::size_t j = 0; j < a.dim(); ++j) vs.push_back(a.basis().column(j));
    for (std::size_t j = 0; j < b.dim(); ++j) vs.push_back(b.basis().column(j));
    return orthonormalize(vs, tol, a.ambient_dim());
}

CVector project(const CVector& v, const Subspace& w) {
    if (v.size() != w.ambient_dim()) throw InputError("project: dimension mismatch");
    const CMatrix& q = w.basis();
    CVector coeff(q.cols());
    for (std::size_t i = 0; i < q.rows(); ++i)
        for (std::size_t j = 0; j < q.cols(); ++j) coeff[j] += std::conj(q(i, j)) * v[i];
    return q * coeff;
}

double orthogonality_constant(const Subspace& u, const Subspace& w, const Tolerance& tol) {
    if (u.ambient_dim() != w.ambient_dim()) throw InputError("orthogonality constant: ambient mismatch");
    if (u.dim() == 0 || w.dim() == 0) return 0.0;
    const double s = largest_singular_value(adjoint_times(u.basis(), w.basis()), tol);
    return std::clamp(s, 0.0, 1.0);
}

ClosenessResult is_eps_close(const Subspace& u, const Subspace& w, double eps, const Tolerance& tol) {
    if (u.ambient_dim() != w.ambient_dim()) throw InputError("eps-closeness: ambient mismatch");
    if (eps < 0) throw InputError("eps-closeness: negative eps");
    ClosenessResult out;
    if (u.dim() == 0) {
        out.close = true;
        return out;
    }
    // |P_{W⊥} u|² = 1 − |P_W u|², minimised |P_W u|² is the bottom eigenvalue
    // of Q_Uᴴ P_W Q_U.
    const CMatrix m = adjoint_times(u.basis(), w.basis());
    CMatrix g(u.dim(), u.dim());
    for (std::size_t i = 0; i < u.dim(); ++i)
        for (std::size_t j = 0; j < u.dim(); ++j) {
            Complex s = 0.0;
            for (std::size_t k = 0; k < m.cols(); ++k) s += m(i, k) * std::conj(m(j, k));
            g(i, j) = s;
        }
    const EigenResult eig = hermitian_eigen(g, tol);
    const double mu = std::clamp(eig.values.front(), 0.0, 1.0);
    out.distance = std::sqrt(1.0 - mu);
    out.close = out.distance <= eps + tol.eig_tol;
    out.witness = u.basis() * eig.vectors.column(0);
    const double nw = norm(out.witness);
    for (auto& z : out.witness) z /= nw;
    return out;
}

namespace {

void validate_family(const std::vector<Subspace>& subspaces, const CodistanceOptions& opt) {
    if (subspaces.size() < 2) throw InputError("codistance needs at least two subspaces");
    const std::size_t n = subspaces.front().ambient_dim();
    for (const auto& s : subspaces) {
        if (s.ambient_dim() != n) throw InputError("codistance: ambient dimensions differ");
        if (s.dim() == 0 && !opt.allow_zero) throw InputError("codistance: zero subspace (not allowed)");
    }
}

// Top eigenpair of Σ β_i P_i, via the smaller of B Bᴴ and Bᴴ B with
// B = [√β_1 Q_1 | … | √β_n Q_n].
CodistanceResult averaged_projector_top(const std::vector<Subspace>& subspaces,
                                        const std::vector<double>& beta, const Tolerance& tol) {
    const std::size_t n = subspaces.front().ambient_dim();
    std::size_t total = 0;
    for (const auto& s : subspaces) total += s.dim();

    CMatrix b(n, total);
    std::size_t col = 0;
    for (std::size_t i = 0; i < subspaces.size(); ++i) {
        const double w = std::sqrt(beta[i]);
        const CMatrix& q = subspaces[i].basis();
        for (std::size_t j = 0; j < q.cols(); ++j, ++col)
            for (std::size_t r = 0; r < n; ++r) b(r, col) = w * q(r, j);
    }

    CodistanceResult out;
    CVector v(n);
    if (total == 0 || n == 0) {
        if (n > 0) v[0] = 1.0;
        out.value = 0.0;
    } else if (total <= n) {
        const EigenResult eig = hermitian_eigen(adjoint_times(b, b), tol);
        out.value = eig.values.back();
        v = b * eig.vectors.column(total - 1);
    } else {
        const CMatrix bt = b.adjoint();
        const EigenResult eig = hermitian_eigen(adjoint_times(bt, bt), tol);
        out.value = eig.values.back();
        v = eig.vectors.column(n - 1);
    }
    const double nv = norm(v);
    if (nv > 0)
        for (auto& z : v) z /= nv;
    out.eigenvector = v;
    for (const auto& s : subspaces) out.components.push_back(project(v, s));
    out.value = std::clamp(out.value, 0.0, 1.0);
    return out;
}

}  // namespace

CodistanceResult codistance_detail(const std::vector<Subspace>& subspaces, const CodistanceOptions& opt) {
    validate_family(subspaces, opt);
    const std::vector<double> beta(subspaces.size(), 1.0 / static_cast<double>(subspaces.size()));
    return averaged_projector_top(subspaces, beta, opt.tol);
}

double codistance(const std::vector<Subspace>& subspaces, const CodistanceOptions& opt) {
    return codistance_detail(subspaces, opt).value;
}

CodistanceResult weighted_codistance_detail(const std::vector<Subspace>& subspaces,
                                            const std::vector<double>& alpha,
                                            const CodistanceOptions& opt) {
    if (alpha.size() != subspaces.size()) throw InputError("weighted codistance: weight count mismatch");
    for (double a : alpha)
        if (!(a > 0) || !std::isfinite(a)) throw InputError("weighted codistance: weights must be positive");
    validate_family(subspaces, opt);
    double total = 0.0;
    for (double a : alpha) total += 1.0 / a;
    std::vector<double> beta;
    for (double a : alpha) beta.push_back((1.0 / a) / total);
    return averaged_projector_top(subspaces, beta, opt.tol);
}

double weighted_codistance(const std::vector<Subspace>& subspaces, const std::vector<double>& alpha,
                           const CodistanceOptions& opt) {
    return weighted_codistance_detail(subspaces, alpha, opt).value;
}

Witness kazhdanprep_witness(const std::vector<Subspace>& subspaces, const CVector& x) {
    if (subspaces.empty()) throw InputError("witness: no subspaces");
    if (norm(x) == 0.0) throw InputError("witness: x must be nonzero");
    Witness best;
    best.norm = -1.0;
    for (std::size_t j = 0; j < subspaces.size(); ++j) {
        const CVector p = project(x, subspaces[j]);
        CVector r = x;
        for (std::size_t i = 0; i < r.size(); ++i) r[i] -= p[i];
        const double nr = norm(r);
        if (nr > best.norm) {
            best.norm = nr;
            best.index = j;
        }
    }
    return best;
}

}  // namespace kazhdan::linalg

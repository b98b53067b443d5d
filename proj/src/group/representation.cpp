#include <algorithm>
#include <cmath>
#include <random>

#include "kazhdan/error.hpp"
#include "kazhdan/group.hpp"

namespace kazhdan::group {

using linalg::CMatrix;
using linalg::Complex;
using linalg::CVector;

namespace {

constexpr double kRepResidualLimit = 1e-9;

}  // namespace

UnitaryRep UnitaryRep::from_generator_images(const GroupPtr& g, const std::vector<std::size_t>& generators,
                                             const std::vector<CMatrix>& images, std::uint64_t seed) {
    if (generators.size() != images.size()) throw InputError("one image per generator is required");
    if (images.empty()) throw InputError("at least one generator is required");
    const std::size_t d = images.front().rows();
    for (const auto& m : images)
        if (m.rows() != d || m.cols() != d) throw InputError("generator images must share one square shape");

    UnitaryRep rep;
    rep.kind_ = Kind::explicit_matrices;
    rep.group_ = g;
    rep.dim_ = d;
    rep.matrices_.assign(g->order(), CMatrix());
    std::vector<char> seen(g->order(), 0);
    std::vector<std::size_t> queue{g->identity()};
    rep.matrices_[g->identity()] = CMatrix::identity(d);
    seen[g->identity()] = 1;
    for (std::size_t cur = 0; cur < queue.size(); ++cur) {
        const std::size_t x = queue[cur];
        for (std::size_t s = 0; s < generators.size(); ++s) {
            const std::size_t y = g->mult(x, generators[s]);
            if (seen[y]) continue;
            seen[y] = 1;
            rep.matrices_[y] = rep.matrices_[x] * images[s];
            queue.push_back(y);
        }
    }
    if (queue.size() != g->order()) throw InputError("generators do not generate the group");
    if (rep.unitarity_residual(64, seed) > kRepResidualLimit)
        throw InputError("generator images are not unitary");
    if (rep.homomorphism_residual(256, seed) > kRepResidualLimit)
        throw InputError("generator images do not define a homomorphism");
    return rep;
}

CMatrix UnitaryRep::matrix(std::size_t g) const {
    if (g >= group_->order()) throw InputError("element index out of range");
    switch (kind_) {
        case Kind::explicit_matrices:
            return matrices_[g];
        case Kind::regular: {
            const std::size_t n = group_->order();
            CMatrix p(n, n);
            for (std::size_t x = 0; x < n; ++x) p(group_->mult(g, x), x) = 1.0;
            return p;
        }
        case Kind::regular_complement: {
            CMatrix p(dim_, dim_);
            for (std::size_t k = 0; k < dim_; ++k) {
                CVector e(dim_);
                e[k] = 1.0;
                p.set_column(k, apply(g, e));
            }
            return p;
        }
    }
    return {};
}

CVector UnitaryRep::apply(std::size_t g, const CVector& v) const {
    if (v.size() != dim_) throw InputError("vector dimension does not match the representation");
    switch (kind_) {
        case Kind::explicit_matrices:
            return matrices_[g] * v;
        case Kind::regular: {
            CVector out(v.size());
            for (std::size_t x = 0; x < v.size(); ++x) out[group_->mult(g, x)] = v[x];
            return out;
        }
        case Kind::regular_complement: {
            const CVector f = helmert_back(v);
            CVector moved(f.size());
            for (std::size_t x = 0; x < f.size(); ++x) moved[group_->mult(g, x)] = f[x];
            return helmert_forward(moved);
        }
    }
    return {};
}

double UnitaryRep::unitarity_residual(std::size_t samples, std::uint64_t seed) const {
    if (dim_ == 0) return 0.0;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, group_->order() - 1);
    double worst = 0.0;
    const CMatrix id = CMatrix::identity(dim_);
    for (std::size_t t = 0; t < std::min(samples, group_->order()); ++t) {
        const std::size_t g = samples >= group_->order() ? t : pick(rng);
        const CMatrix m = matrix(g);
        worst = std::max(worst, linalg::max_abs_diff(linalg::adjoint_times(m, m), id));
    }
    return worst;
}

double UnitaryRep::homomorphism_residual(std::size_t samples, std::uint64_t seed) const {
    if (dim_ == 0) return 0.0;
    std::mt19937_64 rng(seed ^ 0x5bd1e995ULL);
    std::uniform_int_distribution<std::size_t> pick(0, group_->order() - 1);
    double worst = 0.0;
    for (std::size_t t = 0; t < samples; ++t) {
        const std::size_t a = pick(rng);
        const std::size_t b = pick(rng);
        worst = std::max(worst, linalg::max_abs_diff(matrix(group_->mult(a, b)), matrix(a) * matrix(b)));
    }
    return worst;
}

UnitaryRep regular_rep(const GroupPtr& g, std::size_t cap) {
    if (g->order() > cap)
        throw CapExceeded("group order " + std::to_string(g->order()) + " exceeds the regular representation cap " +
                          std::to_string(cap));
    UnitaryRep rep;
    rep.kind_ = UnitaryRep::Kind::regular;
    rep.group_ = g;
    rep.dim_ = g->order();
    return rep;
}

UnitaryRep regular_rep_complement(const GroupPtr& g, std::size_t cap) {
    UnitaryRep rep = regular_rep(g, cap);
    rep.kind_ = UnitaryRep::Kind::regular_complement;
    rep.dim_ = g->order() - 1;
    return rep;
}

CVector helmert_forward(const CVector& f) {
    if (f.empty()) throw InputError("Helmert transform of an empty vector");
    CVector c(f.size() - 1);
    Complex prefix = 0.0;
    for (std::size_t k = 1; k < f.size(); ++k) {
        prefix += f[k - 1];
        const double kd = static_cast<double>(k);
        c[k - 1] = (prefix - kd * f[k]) / std::sqrt(kd * (kd + 1.0));
    }
    return c;
}

CVector helmert_back(const CVector& c) {
    const std::size_t n = c.size() + 1;
    CVector f(n);
    Complex suffix = 0.0;
    for (std::size_t i = n; i-- > 0;) {
        const double id = static_cast<double>(i);
        if (i >= 1) f[i] = -id * c[i - 1] / std::sqrt(id * (id + 1.0));
        f[i] += suffix;
        if (i >= 1) suffix += c[i - 1] / std::sqrt(id * (id + 1.0));
    }
    return f;
}

namespace {

// Right cosets Hx as lists of element indices.
std::vector<std::vector<std::size_t>> right_cosets(const Subgroup& h) {
    const auto& g = h.parent();
    std::vector<char> done(g->order(), 0);
    std::vector<std::vector<std::size_t>> cosets;
    for (std::size_t x = 0; x < g->order(); ++x) {
        if (done[x]) continue;
        std::vector<std::size_t> c;
        for (std::size_t e : h.elements()) {
            const std::size_t y = g->mult(e, x);
            done[y] = 1;
            c.push_back(y);
        }
        cosets.push_back(std::move(c));
    }
    return cosets;
}

}  // namespace

linalg::Subspace fixed_subspace(const UnitaryRep& rep, const Subgroup& h, const linalg::Tolerance& tol) {
    if (h.parent() != rep.group()) throw InputError("subgroup does not belong to the representation's group");
    const std::size_t d = rep.dim();
    if (d == 0) return linalg::Subspace::zero(0);

    if (rep.kind() == UnitaryRep::Kind::explicit_matrices) {
        CMatrix p(d, d);
        for (std::size_t e : h.elements()) p = p + rep.matrix(e);
        p = Complex(1.0 / static_cast<double>(h.order()), 0.0) * p;
        if (linalg::max_abs_diff(p * p, p) > 1e-10 || linalg::max_abs_diff(p.adjoint(), p) > 1e-10)
            throw std::logic_error("averaging projector is not an orthogonal projection");
        std::vector<CVector> cols;
        for (std::size_t j = 0; j < d; ++j) cols.push_back(p.column(j));
        return linalg::orthonormalize(cols, tol, d);
    }

    // Functions constant on right cosets: normalised indicators for ℂ[G];
    // inside the complement, Helmert combinations of those indicators are an
    // orthonormal basis of the part orthogonal to constants.
    const auto cosets = right_cosets(h);
    const std::size_t n = rep.group()->order();
    const std::size_t r = cosets.size();
    const double scale = 1.0 / std::sqrt(static_cast<double>(h.order()));

    if (rep.kind() == UnitaryRep::Kind::regular) {
        CMatrix basis(n, r);
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t x : cosets[j]) basis(x, j) = scale;
        return linalg::Subspace(n, basis);
    }

    CMatrix basis(d, r - 1);
    for (std::size_t k = 0; k + 1 < r; ++k) {
        CVector coeff(r - 1);
        coeff[k] = 1.0;
        const CVector over_cosets = helmert_back(coeff);
        CVector f(n);
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t x : cosets[j]) f[x] = over_cosets[j] * scale;
        basis.set_column(k, helmert_forward(f));
    }
    return linalg::Subspace(d, basis);
}

}  // namespace kazhdan::group

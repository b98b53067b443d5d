#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "kazhdan/error.hpp"
#include "kazhdan/linalg.hpp"

namespace kazhdan::linalg {

namespace {

constexpr std::size_t kJacobiMaxSweeps = 100;
// Above this size real symmetric problems go through tridiagonal QL.
constexpr std::size_t kJacobiRealLimit = 64;

void require_square(const CMatrix& h) {
    if (h.rows() != h.cols()) throw InputError("eigensolver needs a square matrix");
}

EigenResult sorted(std::vector<double> values, const CMatrix& vectors) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    EigenResult out;
    out.values.resize(values.size());
    out.vectors = CMatrix(vectors.rows(), vectors.cols());
    for (std::size_t k = 0; k < order.size(); ++k) {
        out.values[k] = values[order[k]];
        for (std::size_t i = 0; i < vectors.rows(); ++i) out.vectors(i, k) = vectors(i, order[k]);
    }
    return out;
}

// Householder reduction of a real symmetric matrix to tridiagonal form.
// On return v holds the accumulated orthogonal transform, d the diagonal and
// e the subdiagonal (e[0] unused).
void tred2(std::size_t n, std::vector<double>& v, std::vector<double>& d, std::vector<double>& e) {
    auto V = [&](std::size_t i, std::size_t j) -> double& { return v[i * n + j]; };
    for (std::size_t j = 0; j < n; ++j) d[j] = V(n - 1, j);

    for (std::size_t i = n - 1; i > 0; --i) {
        double scale = 0.0;
        double h = 0.0;
        for (std::size_t k = 0; k < i; ++k) scale += std::abs(d[k]);
        if (scale == 0.0) {
            e[i] = d[i - 1];
            for (std::size_t j = 0; j < i; ++j) {
                d[j] = V(i - 1, j);
                V(i, j) = 0.0;
                V(j, i) = 0.0;
            }
        } else {
            for (std::size_t k = 0; k < i; ++k) {
                d[k] /= scale;
                h += d[k] * d[k];
            }
            double f = d[i - 1];
            double g = std::sqrt(h);
            if (f > 0) g = -g;
            e[i] = scale * g;
            h -= f * g;
            d[i - 1] = f - g;
            for (std::size_t j = 0; j < i; ++j) e[j] = 0.0;

            for (std::size_t j = 0; j < i; ++j) {
                f = d[j];
                V(j, i) = f;
                g = e[j] + V(j, j) * f;
                for (std::size_t k = j + 1; k + 1 <= i; ++k) {
                    g += V(k, j) * d[k];
                    e[k] += V(k, j) * f;
                }
                e[j] = g;
            }
            f = 0.0;
            for (std::size_t j = 0; j < i; ++j) {
                e[j] /= h;
                f += e[j] * d[j];
            }
            const double hh = f / (h + h);
            for (std::size_t j = 0; j < i; ++j) e[j] -= hh * d[j];
            for (std::size_t j = 0; j < i; ++j) {
                f = d[j];
                g = e[j];
                for (std::size_t k = j; k + 1 <= i; ++k) V(k, j) -= (f * e[k] + g * d[k]);
                d[j] = V(i - 1, j);
                V(i, j) = 0.0;
            }
        }
        d[i] = h;
    }

    for (std::size_t i = 0; i + 1 < n; ++i) {
        V(n - 1, i) = V(i, i);
        V(i, i) = 1.0;
        const double h = d[i + 1];
        if (h != 0.0) {
            for (std::size_t k = 0; k <= i; ++k) d[k] = V(k, i + 1) / h;
            for (std::size_t j = 0; j <= i; ++j) {
                double g = 0.0;
                for (std::size_t k = 0; k <= i; ++k) g += V(k, i + 1) * V(k, j);
                for (std::size_t k = 0; k <= i; ++k) V(k, j) -= g * d[k];
            }
        }
        for (std::size_t k = 0; k <= i; ++k) V(k, i + 1) = 0.0;
    }
    for (std::size_t j = 0; j < n; ++j) {
        d[j] = V(n - 1, j);
        V(n - 1, j) = 0.0;
    }
    V(n - 1, n - 1) = 1.0;
    e[0] = 0.0;
}

// Implicit QL iterations on the tridiagonal form produced by tred2.
void tql2(std::size_t n, std::vector<double>& v, std::vector<double>& d, std::vector<double>& e) {
    auto V = [&](std::size_t i, std::size_t j) -> double& { return v[i * n + j]; };
    for (std::size_t i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = 0.0;

    double f = 0.0;
    double tst1 = 0.0;
    const double eps = std::numeric_limits<double>::epsilon();
    for (std::size_t l = 0; l < n; ++l) {
        tst1 = std::max(tst1, std::abs(d[l]) + std::abs(e[l]));
        std::size_t m = l;
        while (m < n) {
            if (std::abs(e[m]) <= eps * tst1) break;
            ++m;
        }
        if (m == n) m = n - 1;  // e[n-1] is zero, so this is unreachable in exact arithmetic
        if (m > l) {
            int iter = 0;
            do {
                if (++iter > 60) throw std::runtime_error("tridiagonal QL did not converge");
                double g = d[l];
                double p = (d[l + 1] - g) / (2.0 * e[l]);
                double r = std::hypot(p, 1.0);
                if (p < 0) r = -r;
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                const double dl1 = d[l + 1];
                double h = g - d[l];
                for (std::size_t i = l + 2; i < n; ++i) d[i] -= h;
                f += h;

                p = d[m];
                double c = 1.0, c2 = 1.0, c3 = 1.0;
                const double el1 = e[l + 1];
                double s = 0.0, s2 = 0.0;
                for (std::size_t ii = m; ii-- > l;) {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    g = c * e[ii];
                    h = c * p;
                    r = std::hypot(p, e[ii]);
                    e[ii + 1] = s * r;
                    s = e[ii] / r;
                    c = p / r;
                    p = c * d[ii] - s * g;
                    d[ii + 1] = h + s * (c * g + s * d[ii]);
                    for (std::size_t k = 0; k < n; ++k) {
                        h = V(k, ii + 1);
                        V(k, ii + 1) = s * V(k, ii) + c * h;
                        V(k, ii) = c * V(k, ii) - s * h;
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;
            } while (std::abs(e[l]) > eps * tst1);
        }
        d[l] += f;
        e[l] = 0.0;
    }
}

}  // namespace

EigenResult jacobi_eigen(const CMatrix& h, double eig_tol) {
    require_square(h);
    const std::size_t n = h.rows();
    CMatrix a = h;
    CMatrix v = CMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) a(i, i) = a(i, i).real();

    double frob = 0.0;
    for (const auto& z : a.data()) frob += std::norm(z);
    frob = std::sqrt(frob);
    const double target = std::max(eig_tol * 1e-3 * frob, std::numeric_limits<double>::min());

    for (std::size_t sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
        if (std::sqrt(2.0 * off) <= target) break;

        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex b = a(p, q);
                const double absb = std::abs(b);
                if (absb <= target / static_cast<double>(n * n)) continue;
                const Complex e = b / absb;
                const Complex ebar = std::conj(e);
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double theta = (aqq - app) / (2.0 * absb);
                double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                if (theta < 0) t = -t;
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                // A <- A U with U_pp = c, U_pq = s, U_qp = -s ē, U_qq = c ē.
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q);
                    a(k, p) = c * akp - s * ebar * akq;
                    a(k, q) = s * akp + c * ebar * akq;
                }
                // A <- Uᴴ A.
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex apk = a(p, k);
                    const Complex aqk = a(q, k);
                    a(p, k) = c * apk - s * e * aqk;
                    a(q, k) = s * apk + c * e * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex vkp = v(k, p);
                    const Complex vkq = v(k, q);
                    v(k, p) = c * vkp - s * ebar * vkq;
                    v(k, q) = s * vkp + c * ebar * vkq;
                }
            }
        }
    }

    std::vector<double> values(n);
    for (std::size_t i = 0; i < n; ++i) values[i] = a(i, i).real();
    return sorted(std::move(values), v);
}

EigenResult tridiagonal_ql_eigen(const CMatrix& h) {
    require_square(h);
    const std::size_t n = h.rows();
    if (n == 0) return {};
    std::vector<double> v(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) v[i * n + j] = 0.5 * (h(i, j).real() + h(j, i).real());
    std::vector<double> d(n), e(n);
    tred2(n, v, d, e);
    tql2(n, v, d, e);
    CMatrix vec(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) vec(i, j) = v[i * n + j];
    return sorted(std::move(d), vec);
}

EigenResult hermitian_eigen(const CMatrix& h, const Tolerance& tol) {
    require_square(h);
    if (h.rows() > kJacobiRealLimit && h.is_real()) return tridiagonal_ql_eigen(h);
    return jacobi_eigen(h, tol.eig_tol);
}

std::vector<double> hermitian_eigenvalues(const CMatrix& h, const Tolerance& tol) {
    return hermitian_eigen(h, tol).values;
}

double largest_singular_value(const CMatrix& m, const Tolerance& tol) {
    if (m.rows() == 0 || m.cols() == 0) return 0.0;
    const CMatrix gram = m.cols() <= m.rows() ? adjoint_times(m, m) : adjoint_times(m.adjoint(), m.adjoint());
    const auto values = hermitian_eigenvalues(gram, tol);
    return std::sqrt(std::max(0.0, values.back()));
}

}  // namespace kazhdan::linalg

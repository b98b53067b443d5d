#pragma once

#include <cmath>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "kazhdan/linalg.hpp"

namespace testsupport {

using kazhdan::linalg::CMatrix;
using kazhdan::linalg::Complex;
using kazhdan::linalg::CVector;
using kazhdan::linalg::Subspace;

inline constexpr std::uint64_t kSeed = 0xA2;

inline CVector random_vector(std::mt19937_64& rng, std::size_t n) {
    std::normal_distribution<double> g;
    CVector v(n);
    for (auto& z : v) z = {g(rng), g(rng)};
    return v;
}

inline Subspace random_subspace(std::mt19937_64& rng, std::size_t n, std::size_t k) {
    std::vector<CVector> vs;
    for (std::size_t i = 0; i < k; ++i) vs.push_back(random_vector(rng, n));
    return kazhdan::linalg::orthonormalize(vs, {}, n);
}

inline CMatrix random_hermitian(std::mt19937_64& rng, std::size_t n, bool real = false) {
    std::normal_distribution<double> g;
    CMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const Complex z = (i == j || real) ? Complex(g(rng), 0) : Complex(g(rng), g(rng));
            a(i, j) = z;
            a(j, i) = std::conj(z);
        }
    return a;
}

// Eigenvalues from Eigen, used only as an independent oracle.
inline std::vector<double> oracle_eigenvalues(const CMatrix& a) {
    Eigen::MatrixXcd m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
    std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
    return out;
}

// Largest singular value from Eigen's JacobiSVD.
inline double oracle_sigma_max(const CMatrix& a) {
    if (a.rows() == 0 || a.cols() == 0) return 0.0;
    Eigen::MatrixXcd m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    return Eigen::JacobiSVD<Eigen::MatrixXcd>(m).singularValues()(0);
}

// Projector onto a subspace as a dense matrix.
inline CMatrix projector(const Subspace& s) {
    return s.basis() * s.basis().adjoint();
}

}  // namespace testsupport

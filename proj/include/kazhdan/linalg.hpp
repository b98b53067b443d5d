#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

namespace kazhdan::linalg {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

struct Tolerance {
    double rank_tol = 1e-9;
    double eig_tol = 1e-12;
};

// Dense row-major complex matrix.
class CMatrix {
public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols);

    static CMatrix identity(std::size_t n);
    static CMatrix from_columns(const std::vector<CVector>& cols, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    CVector column(std::size_t j) const;
    void set_column(std::size_t j, const CVector& v);

    CMatrix adjoint() const;
    bool is_real(double tol = 0.0) const;

    const std::vector<Complex>& data() const { return data_; }
    std::vector<Complex>& data() { return data_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

CMatrix operator*(const CMatrix& a, const CMatrix& b);
CMatrix operator+(const CMatrix& a, const CMatrix& b);
CMatrix operator-(const CMatrix& a, const CMatrix& b);
CMatrix operator*(Complex s, const CMatrix& a);
CVector operator*(const CMatrix& a, const CVector& v);

// aᴴ·b without forming the adjoint.
CMatrix adjoint_times(const CMatrix& a, const CMatrix& b);

Complex dot(const CVector& a, const CVector& b);  // conjugate-linear in a
double norm(const CVector& v);
double max_abs_diff(const CMatrix& a, const CMatrix& b);

// Eigen-decomposition of a Hermitian matrix, eigenvalues ascending.
struct EigenResult {
    std::vector<double> values;
    CMatrix vectors;  // column k belongs to values[k]
};

// Cyclic Jacobi rotations, valid for any Hermitian input.
EigenResult jacobi_eigen(const CMatrix& h, double eig_tol = 1e-12);

// Householder tridiagonalisation followed by implicit QL. Real symmetric
// input only (imaginary parts are ignored).
EigenResult tridiagonal_ql_eigen(const CMatrix& h);

// Dispatches to Jacobi for complex or small matrices and to the
// tridiagonal QL route for large real symmetric ones.
EigenResult hermitian_eigen(const CMatrix& h, const Tolerance& tol = {});
std::vector<double> hermitian_eigenvalues(const CMatrix& h, const Tolerance& tol = {});

// Largest singular value, from the smaller of MᴴM and MMᴴ.
double largest_singular_value(const CMatrix& m, const Tolerance& tol = {});

// Closed subspace stored as an orthonormal basis (columns).
class Subspace {
public:
    Subspace() = default;
    // Trusts that `basis` has orthonormal columns; checked at rank_tol.
    Subspace(std::size_t ambient_dim, CMatrix basis);

    static Subspace zero(std::size_t ambient_dim);
    static Subspace whole(std::size_t ambient_dim);

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t dim() const { return basis_.cols(); }
    const CMatrix& basis() const { return basis_; }

private:
    std::size_t ambient_dim_ = 0;
    CMatrix basis_;
};

// Modified Gram-Schmidt with one re-orthogonalisation pass.
Subspace orthonormalize(const std::vector<CVector>& vectors, const Tolerance& tol = {},
                        std::optional<std::size_t> ambient_dim = std::nullopt);

Subspace complement(const Subspace& w, const Tolerance& tol = {});
Subspace subspace_sum(const Subspace& a, const Subspace& b, const Tolerance& tol = {});

CVector project(const CVector& v, const Subspace& w);

double orthogonality_constant(const Subspace& u, const Subspace& w, const Tolerance& tol = {});

struct ClosenessResult {
    bool close = false;
    double distance = 0.0;  // max over unit u ∈ U of |P_{W⊥} u|
    CVector witness;        // unit vector of U attaining it (empty if U = 0)
};

ClosenessResult is_eps_close(const Subspace& u, const Subspace& w, double eps,
                             const Tolerance& tol = {});

struct CodistanceResult {
    double value = 0.0;
    CVector eigenvector;              // unit top eigenvector of the averaged projector
    std::vector<CVector> components;  // u_i = P_{U_i}(eigenvector)
};

struct CodistanceOptions {
    bool allow_zero = false;
    Tolerance tol{};
};

double codistance(const std::vector<Subspace>& subspaces, const CodistanceOptions& opt = {});
CodistanceResult codistance_detail(const std::vector<Subspace>& subspaces,
                                   const CodistanceOptions& opt = {});

double weighted_codistance(const std::vector<Subspace>& subspaces, const std::vector<double>& alpha,
                           const CodistanceOptions& opt = {});
CodistanceResult weighted_codistance_detail(const std::vector<Subspace>& subspaces,
                                            const std::vector<double>& alpha,
                                            const CodistanceOptions& opt = {});

struct Witness {
    std::size_t index = 0;
    double norm = 0.0;
};

// j maximising |P_{V_j⊥}(x)|.
Witness kazhdanprep_witness(const std::vector<Subspace>& subspaces, const CVector& x);

}  // namespace kazhdan::linalg

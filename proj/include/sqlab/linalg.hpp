#pragma once

#include <complex>
#include <vector>

#include "sqlab/point.hpp"

namespace sqlab {

// Dense row-major matrix, small sizes only (Hessians are 2n x 2n with n <= ~10).
struct Matrix {
    int rows = 0, cols = 0;
    Vec a;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(std::size_t(r) * c, 0.0) {}

    double& operator()(int i, int j) { return a[std::size_t(i) * cols + j]; }
    double operator()(int i, int j) const { return a[std::size_t(i) * cols + j]; }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    double max_abs() const {
        double m = 0.0;
        for (double v : a) m = std::max(m, std::abs(v));
        return m;
    }
};

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);

bool is_symmetric(const Matrix& m, double tol = 1e-8);
void symmetrize(Matrix& m);

// All eigenvalues of a symmetric matrix by cyclic Jacobi sweeps, ascending.
std::vector<double> symmetric_eigenvalues(Matrix m);

// Largest eigenvalue; throws NotSymmetric when the input fails the symmetry
// check at tolerance 1e-8 relative to the largest entry magnitude.
double max_eigenvalue_symmetric(const Matrix& m);

// Orthonormal basis of the hyperplane orthogonal to a unit vector, built from
// the Householder reflector that swaps e_1 and the vector. Returns a
// dim x (dim-1) matrix whose columns span the hyperplane.
Matrix householder_tangent_basis(const Vec& unit_normal);

// Restriction q^T M q of a symmetric form onto the column span of q.
Matrix restrict_form(const Matrix& m, const Matrix& basis);

// --- small complex helpers (generic norms of bounded symmetric domains) ---

using CMat = std::vector<std::complex<double>>;  // row-major r x c

// Determinant by LU with partial pivoting.
std::complex<double> complex_determinant(CMat m, int n);

// Largest eigenvalue of a Hermitian matrix via the real symmetric embedding
// [[Re, -Im], [Im, Re]] (eigenvalues doubled in multiplicity, values equal).
double hermitian_max_eigenvalue(const CMat& m, int n);

}  // namespace sqlab

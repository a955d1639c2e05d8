#include "sqlab/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "sqlab/errors.hpp"

namespace sqlab {

Matrix matmul(const Matrix& a, const Matrix& b) {
    Matrix c(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < b.cols; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

Matrix transpose(const Matrix& m) {
    Matrix t(m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) t(j, i) = m(i, j);
    return t;
}

bool is_symmetric(const Matrix& m, double tol) {
    if (m.rows != m.cols) return false;
    const double scale = std::max(1.0, m.max_abs());
    for (int i = 0; i < m.rows; ++i)
        for (int j = i + 1; j < m.cols; ++j)
            if (std::abs(m(i, j) - m(j, i)) > tol * scale) return false;
    return true;
}

void symmetrize(Matrix& m) {
    for (int i = 0; i < m.rows; ++i)
        for (int j = i + 1; j < m.cols; ++j) {
            const double v = 0.5 * (m(i, j) + m(j, i));
            m(i, j) = v;
            m(j, i) = v;
        }
}

std::vector<double> symmetric_eigenvalues(Matrix m) {
    const int n = m.rows;
    if (n == 0) return {};
    if (n == 1) return {m(0, 0)};

    auto off_norm = [&] {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) s += m(i, j) * m(i, j);
        return std::sqrt(2.0 * s);
    };

    double frob = 0.0;
    for (double v : m.a) frob += v * v;
    frob = std::sqrt(frob);
    const double stop = 1e-15 * std::max(frob, 1e-300);

    // cyclic Jacobi sweeps
    for (int sweep = 0; sweep < 64 && off_norm() > stop; ++sweep) {
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) {
                const double apq = m(p, q);
                if (std::abs(apq) <= 1e-300) continue;
                const double theta = (m(q, q) - m(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double mkp = m(k, p), mkq = m(k, q);
                    m(k, p) = c * mkp - s * mkq;
                    m(k, q) = s * mkp + c * mkq;
                }
                for (int k = 0; k < n; ++k) {
                    const double mpk = m(p, k), mqk = m(q, k);
                    m(p, k) = c * mpk - s * mqk;
                    m(q, k) = s * mpk + c * mqk;
                }
            }
    }

    std::vector<double> eig(std::size_t(n));
    for (int i = 0; i < n; ++i) eig[std::size_t(i)] = m(i, i);
    std::sort(eig.begin(), eig.end());
    return eig;
}

double max_eigenvalue_symmetric(const Matrix& m) {
    if (m.rows != m.cols) throw NotSymmetric("matrix is not square");
    if (!is_symmetric(m, 1e-8)) throw NotSymmetric("matrix is not symmetric at 1e-8");
    Matrix s = m;
    symmetrize(s);
    return symmetric_eigenvalues(std::move(s)).back();
}

Matrix householder_tangent_basis(const Vec& unit_normal) {
    const int dim = int(unit_normal.size());
    Matrix basis(dim, dim - 1);

    Vec v = unit_normal;
    v[0] -= 1.0;
    const double v2 = dot(v, v);
    if (v2 < 1e-24) {
        // normal is already e_1
        for (int j = 1; j < dim; ++j) basis(j, j - 1) = 1.0;
        return basis;
    }
    // columns 2..dim of H = I - 2 v v^T / (v^T v); H e_1 = unit_normal
    for (int j = 1; j < dim; ++j) {
        const double f = 2.0 * v[std::size_t(j)] / v2;
        for (int i = 0; i < dim; ++i) basis(i, j - 1) = (i == j ? 1.0 : 0.0) - f * v[std::size_t(i)];
    }
    return basis;
}

Matrix restrict_form(const Matrix& m, const Matrix& basis) {
    return matmul(transpose(basis), matmul(m, basis));
}

std::complex<double> complex_determinant(CMat m, int n) {
    std::complex<double> det = 1.0;
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(m[std::size_t(r) * n + col]) > std::abs(m[std::size_t(piv) * n + col]))
                piv = r;
        if (std::abs(m[std::size_t(piv) * n + col]) < 1e-300) return 0.0;
        if (piv != col) {
            for (int c = 0; c < n; ++c)
                std::swap(m[std::size_t(piv) * n + c], m[std::size_t(col) * n + c]);
            det = -det;
        }
        const std::complex<double> d = m[std::size_t(col) * n + col];
        det *= d;
        for (int r = col + 1; r < n; ++r) {
            const std::complex<double> f = m[std::size_t(r) * n + col] / d;
            if (f == std::complex<double>(0.0)) continue;
            for (int c = col; c < n; ++c) m[std::size_t(r) * n + c] -= f * m[std::size_t(col) * n + c];
        }
    }
    return det;
}

double hermitian_max_eigenvalue(const CMat& m, int n) {
    Matrix e(2 * n, 2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const auto z = m[std::size_t(i) * n + j];
            e(i, j) = z.real();
            e(i, j + n) = -z.imag();
            e(i + n, j) = z.imag();
            e(i + n, j + n) = z.real();
        }
    symmetrize(e);
    return symmetric_eigenvalues(std::move(e)).back();
}

}  // namespace sqlab

// Dense complex linear algebra for small matrices (up to 144x144):
// Hermitian eigendecomposition (cyclic Jacobi), one-sided Jacobi SVD,
// null-space extraction, Kronecker products and partial traces.
#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace qcorr::linalg {

using cplx = std::complex<double>;

class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<cplx>& data() const { return data_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    cplx trace() const;
    double max_abs() const;
    double frobenius_norm() const;
    bool is_hermitian(double tol) const;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(cplx scalar);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(cplx s, ComplexMatrix m) { return m *= s; }
    friend ComplexMatrix operator*(ComplexMatrix m, cplx s) { return m *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

    // y = this * x
    std::vector<cplx> apply(const std::vector<cplx>& x) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;  // row-major
};

// Eigenvalues ascending; eigenvector columns orthonormal, same order.
struct HermitianSpectrum {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;
};

// Cyclic complex Jacobi. Throws std::invalid_argument if the input is not
// square or deviates from Hermiticity by more than herm_tol (max-abs).
HermitianSpectrum herm_eig(const ComplexMatrix& m, double herm_tol = 1e-12);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// One-sided Jacobi SVD of a square matrix. Singular values descending;
// v holds the right singular vectors as columns (so |m * v_k| = sv[k]).
// Small singular values come out with absolute accuracy ~eps*|m|, which
// is what makes the null-space threshold below reliable.
struct Svd {
    std::vector<double> singular_values;
    ComplexMatrix v;
};
Svd svd(const ComplexMatrix& m);

// Orthonormal kernel basis: right singular vectors with sigma <= tol * sigma_max.
// The zero matrix yields the full space; an empty result is valid.
std::vector<std::vector<cplx>> null_space(const ComplexMatrix& m, double tol = 1e-9);

// Partial traces of a matrix on a bipartite space of dimensions (da, db),
// index convention (i_a * db + i_b).
ComplexMatrix partial_trace_second(const ComplexMatrix& m, std::size_t da, std::size_t db);
ComplexMatrix partial_trace_first(const ComplexMatrix& m, std::size_t da, std::size_t db);

// Row-major vectorization, vec[i*n + j] = m(i, j), and its inverse.
std::vector<cplx> vec(const ComplexMatrix& m);
ComplexMatrix unvec(const std::vector<cplx>& v, std::size_t rows, std::size_t cols);

// Gaussian elimination with partial pivoting; for the small systems used
// when combining Liouvillian kernel vectors.
std::vector<cplx> solve(ComplexMatrix a, std::vector<cplx> b);

}  // namespace qcorr::linalg

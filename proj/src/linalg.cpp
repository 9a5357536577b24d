#include "qcorr/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qcorr::linalg {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Unitary 2x2 rotation that diagonalizes the Hermitian block
// [[app, w], [conj(w), aqq]] with w = |w| e^{i phi}:
//   U = [[c, s e^{i phi}], [-s e^{-i phi}, c]],  tan(2 theta) = 2|w| / (aqq - app).
struct Rotation {
    double c;
    double s;
    cplx phase;  // e^{i phi}
};

Rotation make_rotation(double app, double aqq, cplx w) {
    const double aw = std::abs(w);
    const double tau = (aqq - app) / (2.0 * aw);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    return {c, t * c, w / aw};
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, cplx{0.0, 0.0}) {
    if (rows == 0 || cols == 0) {
        throw std::invalid_argument("ComplexMatrix: dimensions must be positive");
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows)
    : ComplexMatrix(rows.size(), rows.begin()->size()) {
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != cols_) {
            throw std::invalid_argument("ComplexMatrix: ragged initializer");
        }
        std::size_t j = 0;
        for (const auto& x : row) (*this)(i, j++) = x;
        ++i;
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

cplx ComplexMatrix::trace() const {
    cplx t = 0.0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& x : data_) m = std::max(m, std::abs(x));
    return m;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& x : data_) s += std::norm(x);
    return std::sqrt(s);
}

bool ComplexMatrix::is_hermitian(double tol) const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < cols_; ++j)
            if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
    return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw std::invalid_argument("ComplexMatrix: shape mismatch in +=");
    }
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw std::invalid_argument("ComplexMatrix: shape mismatch in -=");
    }
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx scalar) {
    for (auto& x : data_) x *= scalar;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("ComplexMatrix: shape mismatch in *");
    ComplexMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

std::vector<cplx> ComplexMatrix::apply(const std::vector<cplx>& x) const {
    if (x.size() != cols_) throw std::invalid_argument("ComplexMatrix: shape mismatch in apply");
    std::vector<cplx> y(rows_, cplx{0.0, 0.0});
    for (std::size_t i = 0; i < rows_; ++i) {
        cplx acc = 0.0;
        const cplx* row = data_.data() + i * cols_;
        for (std::size_t j = 0; j < cols_; ++j) acc += row[j] * x[j];
        y[i] = acc;
    }
    return y;
}

HermitianSpectrum herm_eig(const ComplexMatrix& m, double herm_tol) {
    if (!m.square()) throw std::invalid_argument("herm_eig: matrix must be square");
    if (!m.is_hermitian(herm_tol)) {
        throw std::invalid_argument("herm_eig: matrix not Hermitian within tolerance " +
                                    std::to_string(herm_tol));
    }
    const std::size_t n = m.rows();
    ComplexMatrix a = m;
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double scale = std::max(a.frobenius_norm(), 1.0);
    const double off_stop = 1e-14 * scale;

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
        if (std::sqrt(2.0 * off) <= off_stop) break;
        if (sweep == 99) throw std::runtime_error("herm_eig: Jacobi sweeps did not converge");

        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx w = a(p, q);
                const double aw = std::abs(w);
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                if (aw <= kEps * (std::abs(app) + std::abs(aqq)) || aw == 0.0) continue;

                const auto [c, s, ph] = make_rotation(app, aqq, w);
                const cplx phc = std::conj(ph);
                const double t = s / c;

                // columns: A <- A U, then rows: A <- U^dagger A
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * phc * akq;
                    a(k, q) = s * ph * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * ph * aqk;
                    a(q, k) = s * phc * apk + c * aqk;
                }
                a(p, p) = app - t * aw;
                a(q, q) = aqq + t * aw;
                a(p, q) = 0.0;
                a(q, p) = 0.0;

                for (std::size_t k = 0; k < n; ++k) {
                    const cplx vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * phc * vkq;
                    v(k, q) = s * ph * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

    HermitianSpectrum out;
    out.eigenvalues.resize(n);
    out.eigenvectors = ComplexMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        out.eigenvalues[j] = a(order[j], order[j]).real();
        for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, j) = v(i, order[j]);
    }
    return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const cplx aij = a(i, j);
            if (aij == cplx{0.0, 0.0}) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return out;
}

Svd svd(const ComplexMatrix& m) {
    if (!m.square()) throw std::invalid_argument("svd: matrix must be square");
    const std::size_t n = m.rows();
    ComplexMatrix g = m;  // maintains g = m * v
    ComplexMatrix v = ComplexMatrix::identity(n);

    std::vector<double> colsq(n, 0.0);
    auto recompute_colsq = [&]() {
        for (std::size_t j = 0; j < n; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < n; ++k) s += std::norm(g(k, j));
            colsq[j] = s;
        }
    };
    recompute_colsq();

    bool converged = false;
    for (int sweep = 0; sweep < 100 && !converged; ++sweep) {
        converged = true;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                cplx gram = 0.0;
                for (std::size_t k = 0; k < n; ++k) gram += std::conj(g(k, i)) * g(k, j);
                const double ag = std::abs(gram);
                // threshold sits above the ~n*eps*|g_i||g_j| roundoff floor of the
                // gram computation, otherwise tiny columns never stop rotating
                if (ag <= 1e-13 * std::sqrt(colsq[i] * colsq[j]) || ag == 0.0) continue;
                converged = false;

                const auto [c, s, ph] = make_rotation(colsq[i], colsq[j], gram);
                const cplx phc = std::conj(ph);
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx gi = g(k, i), gj = g(k, j);
                    g(k, i) = c * gi - s * phc * gj;
                    g(k, j) = s * ph * gi + c * gj;
                    const cplx vi = v(k, i), vj = v(k, j);
                    v(k, i) = c * vi - s * phc * vj;
                    v(k, j) = s * ph * vi + c * vj;
                }
                const double t = s / c;
                colsq[i] -= t * ag;
                colsq[j] += t * ag;
            }
        }
        // column norms drift under repeated updates; refresh between sweeps
        recompute_colsq();
    }
    if (!converged) throw std::runtime_error("svd: Jacobi sweeps did not converge");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a_, std::size_t b_) { return colsq[a_] > colsq[b_]; });

    Svd out;
    out.singular_values.resize(n);
    out.v = ComplexMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        out.singular_values[j] = std::sqrt(std::max(colsq[order[j]], 0.0));
        for (std::size_t i = 0; i < n; ++i) out.v(i, j) = v(i, order[j]);
    }
    return out;
}

std::vector<std::vector<cplx>> null_space(const ComplexMatrix& m, double tol) {
    if (!m.square()) throw std::invalid_argument("null_space: matrix must be square");
    const Svd s = svd(m);
    const std::size_t n = m.rows();
    const double smax = s.singular_values.front();

    std::vector<std::vector<cplx>> basis;
    for (std::size_t j = 0; j < n; ++j) {
        if (smax > 0.0 && s.singular_values[j] > tol * smax) continue;
        std::vector<cplx> col(n);
        for (std::size_t i = 0; i < n; ++i) col[i] = s.v(i, j);
        basis.push_back(std::move(col));
    }
    return basis;
}

ComplexMatrix partial_trace_second(const ComplexMatrix& m, std::size_t da, std::size_t db) {
    if (m.rows() != da * db || m.cols() != da * db) {
        throw std::invalid_argument("partial_trace_second: dimension mismatch");
    }
    ComplexMatrix out(da, da);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j) {
            cplx s = 0.0;
            for (std::size_t k = 0; k < db; ++k) s += m(i * db + k, j * db + k);
            out(i, j) = s;
        }
    return out;
}

ComplexMatrix partial_trace_first(const ComplexMatrix& m, std::size_t da, std::size_t db) {
    if (m.rows() != da * db || m.cols() != da * db) {
        throw std::invalid_argument("partial_trace_first: dimension mismatch");
    }
    ComplexMatrix out(db, db);
    for (std::size_t k = 0; k < db; ++k)
        for (std::size_t l = 0; l < db; ++l) {
            cplx s = 0.0;
            for (std::size_t i = 0; i < da; ++i) s += m(i * db + k, i * db + l);
            out(k, l) = s;
        }
    return out;
}

std::vector<cplx> vec(const ComplexMatrix& m) { return m.data(); }

ComplexMatrix unvec(const std::vector<cplx>& v, std::size_t rows, std::size_t cols) {
    if (v.size() != rows * cols) throw std::invalid_argument("unvec: size mismatch");
    ComplexMatrix out(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) out(i, j) = v[i * cols + j];
    return out;
}

std::vector<cplx> solve(ComplexMatrix a, std::vector<cplx> b) {
    if (!a.square() || a.rows() != b.size()) throw std::invalid_argument("solve: shape mismatch");
    const std::size_t n = a.rows();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(a(i, k)) > std::abs(a(piv, k))) piv = i;
        if (std::abs(a(piv, k)) == 0.0) throw std::runtime_error("solve: singular matrix");
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
            std::swap(b[k], b[piv]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            const cplx f = a(i, k) / a(k, k);
            if (f == cplx{0.0, 0.0}) continue;
            for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
            b[i] -= f * b[k];
        }
    }
    std::vector<cplx> x(n);
    for (std::size_t i = n; i-- > 0;) {
        cplx s = b[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= a(i, j) * x[j];
        x[i] = s / a(i, i);
    }
    return x;
}

}  // namespace qcorr::linalg

#include "ttb/complex_matrix.hpp"

#include <cmath>
#include <cstdlib>

#include "ttb/errors.hpp"
#include "ttb/rng.hpp"

namespace ttb {

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (Index r = 0; r < rows_; ++r)
        for (Index c = 0; c < cols_; ++c)
            out(c, r) = std::conj((*this)(r, c));
    return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix out(cols_, rows_);
    for (Index r = 0; r < rows_; ++r)
        for (Index c = 0; c < cols_; ++c)
            out(c, r) = (*this)(r, c);
    return out;
}

ComplexMatrix ComplexMatrix::conj() const {
    ComplexMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = std::conj(a_[i]);
    return out;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const Complex& z : a_) s += std::norm(z);
    return std::sqrt(s);
}

Complex ComplexMatrix::trace() const {
    Complex t = 0.0;
    const Index n = std::min(rows_, cols_);
    for (Index i = 0; i < n; ++i) t += (*this)(i, i);
    return t;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw ShapeError("matrix addition: dimension mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw ShapeError("matrix subtraction: dimension mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex z) {
    for (Complex& v : a_) v *= z;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows())
        throw ShapeError("matrix product: dimension mismatch");
    ComplexMatrix out(a.rows(), b.cols());
    for (Index i = 0; i < a.rows(); ++i) {
        for (Index k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{0.0, 0.0}) continue;
            for (Index j = 0; j < b.cols(); ++j)
                out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

ComplexMatrix matrix_power(const ComplexMatrix& m, std::int64_t n) {
    if (m.rows() != m.cols()) throw ShapeError("matrix_power: not square");
    if (n < 0) throw RangeError("matrix_power: negative exponent");
    ComplexMatrix result = ComplexMatrix::identity(m.rows());
    ComplexMatrix base = m;
    while (n > 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return result;
}

ComplexMatrix matrix_inverse(const ComplexMatrix& m, double rel_tol) {
    if (m.rows() != m.cols()) throw ShapeError("matrix_inverse: not square");
    const Index n = m.rows();
    ComplexMatrix a = m;
    ComplexMatrix inv = ComplexMatrix::identity(n);
    double scale = 0.0;
    for (Index r = 0; r < n; ++r)
        for (Index c = 0; c < n; ++c)
            scale = std::max(scale, std::abs(a(r, c)));
    if (scale == 0.0) throw DomainError("matrix_inverse: zero matrix");

    for (Index col = 0; col < n; ++col) {
        Index pivot = col;
        double best = std::abs(a(col, col));
        for (Index r = col + 1; r < n; ++r) {
            const double v = std::abs(a(r, col));
            if (v > best) { best = v; pivot = r; }
        }
        if (best <= rel_tol * scale)
            throw DomainError("matrix_inverse: singular to working precision");
        if (pivot != col) {
            for (Index c = 0; c < n; ++c) {
                std::swap(a(pivot, c), a(col, c));
                std::swap(inv(pivot, c), inv(col, c));
            }
        }
        const Complex d = a(col, col);
        for (Index c = 0; c < n; ++c) {
            a(col, c) /= d;
            inv(col, c) /= d;
        }
        for (Index r = 0; r < n; ++r) {
            if (r == col) continue;
            const Complex f = a(r, col);
            if (f == Complex{0.0, 0.0}) continue;
            for (Index c = 0; c < n; ++c) {
                a(r, c) -= f * a(col, c);
                inv(r, c) -= f * inv(col, c);
            }
        }
    }
    return inv;
}

Complex matrix_determinant(ComplexMatrix a) {
    if (a.rows() != a.cols()) throw ShapeError("matrix_determinant: not square");
    const Index n = a.rows();
    Complex det = 1.0;
    for (Index col = 0; col < n; ++col) {
        Index pivot = col;
        double best = std::abs(a(col, col));
        for (Index r = col + 1; r < n; ++r) {
            const double v = std::abs(a(r, col));
            if (v > best) { best = v; pivot = r; }
        }
        if (best == 0.0) return Complex{0.0, 0.0};
        if (pivot != col) {
            for (Index c = col; c < n; ++c) std::swap(a(pivot, c), a(col, c));
            det = -det;
        }
        det *= a(col, col);
        for (Index r = col + 1; r < n; ++r) {
            const Complex f = a(r, col) / a(col, col);
            if (f == Complex{0.0, 0.0}) continue;
            for (Index c = col; c < n; ++c) a(r, c) -= f * a(col, c);
        }
    }
    return det;
}

ComplexMatrix random_unitary_matrix(Index n, RngStream& rng) {
    ComplexMatrix g(n, n);
    for (Index r = 0; r < n; ++r)
        for (Index c = 0; c < n; ++c)
            g(r, c) = Complex{rng.gaussian(), rng.gaussian()};

    // Modified Gram-Schmidt on columns; MGS leaves R with a positive real
    // diagonal, which is the phase convention that makes Q Haar-distributed.
    ComplexMatrix q(n, n);
    for (Index c = 0; c < n; ++c) {
        std::vector<Complex> v(static_cast<std::size_t>(n));
        for (Index r = 0; r < n; ++r) v[static_cast<std::size_t>(r)] = g(r, c);
        for (Index prev = 0; prev < c; ++prev) {
            Complex proj = 0.0;
            for (Index r = 0; r < n; ++r)
                proj += std::conj(q(r, prev)) * v[static_cast<std::size_t>(r)];
            for (Index r = 0; r < n; ++r)
                v[static_cast<std::size_t>(r)] -= proj * q(r, prev);
        }
        double norm = 0.0;
        for (Index r = 0; r < n; ++r) norm += std::norm(v[static_cast<std::size_t>(r)]);
        norm = std::sqrt(norm);
        if (norm < 1e-14) {
            // Degenerate draw; fall back to a canonical basis column.
            for (Index r = 0; r < n; ++r)
                v[static_cast<std::size_t>(r)] = (r == c) ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
            norm = 1.0;
        }
        for (Index r = 0; r < n; ++r)
            q(r, c) = v[static_cast<std::size_t>(r)] / norm;
    }
    return q;
}

} // namespace ttb

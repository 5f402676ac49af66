#ifndef TTB_COMPLEX_MATRIX_HPP
#define TTB_COMPLEX_MATRIX_HPP

#include <complex>
#include <cstdint>
#include <vector>

namespace ttb {

using Complex = std::complex<double>;
using Index = std::int64_t;

// Dense row-major complex matrix. Square tensors store their unfolded form
// in exactly this layout, so fold/unfold round trips are bitwise exact.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(Index rows, Index cols)
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows * cols)) {}

    static ComplexMatrix identity(Index n) {
        ComplexMatrix m(n, n);
        for (Index i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    Index rows() const { return rows_; }
    Index cols() const { return cols_; }

    Complex& operator()(Index r, Index c) {
        return a_[static_cast<std::size_t>(r * cols_ + c)];
    }
    const Complex& operator()(Index r, Index c) const {
        return a_[static_cast<std::size_t>(r * cols_ + c)];
    }

    std::vector<Complex>& data() { return a_; }
    const std::vector<Complex>& data() const { return a_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conj() const;

    double frobenius_norm() const;
    Complex trace() const;

    ComplexMatrix& operator+=(const ComplexMatrix& o);
    ComplexMatrix& operator-=(const ComplexMatrix& o);
    ComplexMatrix& operator*=(Complex z);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(Complex z, ComplexMatrix a) { return a *= z; }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

private:
    Index rows_ = 0;
    Index cols_ = 0;
    std::vector<Complex> a_;
};

// Integer matrix power by binary exponentiation, n >= 0.
ComplexMatrix matrix_power(const ComplexMatrix& m, std::int64_t n);

// Gauss-Jordan inverse with partial pivoting; throws DomainError if the
// pivot falls below rel_tol times the largest initial pivot scale.
ComplexMatrix matrix_inverse(const ComplexMatrix& m, double rel_tol = 1e-12);

// Determinant via LU with partial pivoting.
Complex matrix_determinant(ComplexMatrix m);

// QR-derived unitary with Haar-like distribution (Ginibre then modified
// Gram-Schmidt, columns rephased against the R diagonal).
class RngStream;
ComplexMatrix random_unitary_matrix(Index n, RngStream& rng);

} // namespace ttb

#endif

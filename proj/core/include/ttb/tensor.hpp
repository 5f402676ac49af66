#ifndef TTB_TENSOR_HPP
#define TTB_TENSOR_HPP

#include <string>
#include <vector>

#include "ttb/complex_matrix.hpp"
#include "ttb/shape.hpp"

namespace ttb {

class RngStream;

// Dense complex square tensor of order 2N: entries indexed by
// (i_1..i_N, j_1..j_N) with the first N indices forming the row group.
// Internally the entries are held in unfolding order, i.e. the storage IS
// the d x d unfolded matrix, which makes fold(unfold(T)) == T bitwise.
class SquareTensor {
public:
    SquareTensor() = default;
    SquareTensor(Shape shape, ComplexMatrix unfolded);
    explicit SquareTensor(Shape shape);

    static SquareTensor zero(const Shape& shape) { return SquareTensor(shape); }
    static SquareTensor identity(const Shape& shape);
    // Entries i.i.d. standard complex Gaussian.
    static SquareTensor random(const Shape& shape, RngStream& rng);

    const Shape& shape() const { return shape_; }
    Index dim() const { return shape_.unfolded_dim(); }

    // Entry access through the multi-index convention of the shape.
    Complex at(const std::vector<Index>& row_multi,
               const std::vector<Index>& col_multi) const;
    void set(const std::vector<Index>& row_multi,
             const std::vector<Index>& col_multi, Complex v);

    const ComplexMatrix& matrix() const { return m_; }
    ComplexMatrix& matrix() { return m_; }

    SquareTensor conjugate_transpose() const;
    // Entrywise complex conjugate (the "*" of the statistics module).
    SquareTensor entrywise_conjugate() const;
    Complex trace() const { return m_.trace(); }
    double frobenius_norm() const { return m_.frobenius_norm(); }

    SquareTensor& operator+=(const SquareTensor& o);
    SquareTensor& operator-=(const SquareTensor& o);
    SquareTensor& operator*=(Complex z);
    friend SquareTensor operator+(SquareTensor a, const SquareTensor& b) { return a += b; }
    friend SquareTensor operator-(SquareTensor a, const SquareTensor& b) { return a -= b; }
    friend SquareTensor operator*(Complex z, SquareTensor a) { return a *= z; }

private:
    Shape shape_;
    ComplexMatrix m_;
};

// The algebra isomorphism: unfold is linear, bijective, and turns the
// Einstein product into the matrix product.
ComplexMatrix unfold(const SquareTensor& t);
SquareTensor fold(const Shape& shape, ComplexMatrix unfolded);

// Contraction over the shared N indices (square case), realized as
// fold(unfold(a) * unfold(b)).
SquareTensor einstein_product(const SquareTensor& a, const SquareTensor& b);

Complex inner_product(const SquareTensor& x, const SquareTensor& y);

SquareTensor tensor_inverse(const SquareTensor& t);

// Square tensor whose unfolding equals its conjugate transpose. Construction
// checks the relative defect against tol and stores (M + M^H)/2 exactly.
class HermitianTensor {
public:
    HermitianTensor() = default;
    explicit HermitianTensor(const SquareTensor& t, double rel_tol = -1.0);

    static HermitianTensor zero(const Shape& shape);
    static HermitianTensor identity(const Shape& shape);
    // Unfolding diag(values) in the canonical basis.
    static HermitianTensor diagonal(const Shape& shape, const std::vector<double>& values);
    static HermitianTensor random(const Shape& shape, RngStream& rng);
    // Random eigenbasis with eigenvalues uniform in [lo, hi].
    static HermitianTensor random_spectrum(const Shape& shape, RngStream& rng,
                                           double lo, double hi);

    const SquareTensor& base() const { return base_; }
    const Shape& shape() const { return base_.shape(); }
    Index dim() const { return base_.dim(); }
    const ComplexMatrix& matrix() const { return base_.matrix(); }

    HermitianTensor& operator+=(const HermitianTensor& o);
    HermitianTensor& operator-=(const HermitianTensor& o);
    HermitianTensor& operator*=(double s);
    friend HermitianTensor operator+(HermitianTensor a, const HermitianTensor& b) { return a += b; }
    friend HermitianTensor operator-(HermitianTensor a, const HermitianTensor& b) { return a -= b; }
    friend HermitianTensor operator*(double s, HermitianTensor a) { return a *= s; }

private:
    SquareTensor base_;
};

// Random unitary square tensor (QR-derived).
SquareTensor random_unitary_tensor(const Shape& shape, RngStream& rng);

// Tensor literal file format used by the CLI for fixtures:
// {"mode_dims":[...], "entries_re":[...], "entries_im":[...]} in unfolding order.
std::string tensor_to_json(const SquareTensor& t);
SquareTensor tensor_from_json(const std::string& text);
SquareTensor tensor_from_json_file(const std::string& path);

} // namespace ttb

#endif

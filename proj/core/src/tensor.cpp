#include "ttb/tensor.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ttb/config.hpp"
#include "ttb/errors.hpp"
#include "ttb/rng.hpp"

namespace ttb {

SquareTensor::SquareTensor(Shape shape, ComplexMatrix unfolded)
    : shape_(std::move(shape)), m_(std::move(unfolded)) {
    if (m_.rows() != shape_.unfolded_dim() || m_.cols() != shape_.unfolded_dim())
        throw ShapeError("SquareTensor: unfolded matrix does not match shape");
}

SquareTensor::SquareTensor(Shape shape)
    : shape_(std::move(shape)),
      m_(shape_.unfolded_dim(), shape_.unfolded_dim()) {}

SquareTensor SquareTensor::identity(const Shape& shape) {
    return SquareTensor(shape, ComplexMatrix::identity(shape.unfolded_dim()));
}

SquareTensor SquareTensor::random(const Shape& shape, RngStream& rng) {
    SquareTensor t(shape);
    const Index d = shape.unfolded_dim();
    for (Index r = 0; r < d; ++r)
        for (Index c = 0; c < d; ++c)
            t.m_(r, c) = Complex{rng.gaussian(), rng.gaussian()};
    return t;
}

Complex SquareTensor::at(const std::vector<Index>& row_multi,
                         const std::vector<Index>& col_multi) const {
    return m_(shape_.linear_index(row_multi), shape_.linear_index(col_multi));
}

void SquareTensor::set(const std::vector<Index>& row_multi,
                       const std::vector<Index>& col_multi, Complex v) {
    m_(shape_.linear_index(row_multi), shape_.linear_index(col_multi)) = v;
}

SquareTensor SquareTensor::conjugate_transpose() const {
    return SquareTensor(shape_, m_.adjoint());
}

SquareTensor SquareTensor::entrywise_conjugate() const {
    return SquareTensor(shape_, m_.conj());
}

SquareTensor& SquareTensor::operator+=(const SquareTensor& o) {
    if (shape_ != o.shape_) throw ShapeError("tensor addition: shape mismatch");
    m_ += o.m_;
    return *this;
}

SquareTensor& SquareTensor::operator-=(const SquareTensor& o) {
    if (shape_ != o.shape_) throw ShapeError("tensor subtraction: shape mismatch");
    m_ -= o.m_;
    return *this;
}

SquareTensor& SquareTensor::operator*=(Complex z) {
    m_ *= z;
    return *this;
}

ComplexMatrix unfold(const SquareTensor& t) { return t.matrix(); }

SquareTensor fold(const Shape& shape, ComplexMatrix unfolded) {
    return SquareTensor(shape, std::move(unfolded));
}

SquareTensor einstein_product(const SquareTensor& a, const SquareTensor& b) {
    if (a.shape() != b.shape())
        throw ShapeError("einstein_product: shape mismatch");
    return fold(a.shape(), unfold(a) * unfold(b));
}

Complex inner_product(const SquareTensor& x, const SquareTensor& y) {
    if (x.shape() != y.shape())
        throw ShapeError("inner_product: shape mismatch");
    Complex s = 0.0;
    const auto& mx = x.matrix().data();
    const auto& my = y.matrix().data();
    for (std::size_t i = 0; i < mx.size(); ++i) s += std::conj(mx[i]) * my[i];
    return s; // == Tr(unfold(x)^H unfold(y))
}

SquareTensor tensor_inverse(const SquareTensor& t) {
    return fold(t.shape(), matrix_inverse(unfold(t)));
}

HermitianTensor::HermitianTensor(const SquareTensor& t, double rel_tol) {
    if (rel_tol < 0.0) rel_tol = config::kTolHermitian;
    const ComplexMatrix& m = t.matrix();
    ComplexMatrix h = m.adjoint();
    double defect = 0.0;
    for (Index r = 0; r < m.rows(); ++r)
        for (Index c = 0; c < m.cols(); ++c)
            defect += std::norm(m(r, c) - h(r, c));
    defect = std::sqrt(defect);
    const double scale = std::max(1.0, m.frobenius_norm());
    if (defect > rel_tol * scale)
        throw DomainError("HermitianTensor: input is not Hermitian within tolerance");
    ComplexMatrix sym(m.rows(), m.cols());
    for (Index r = 0; r < m.rows(); ++r)
        for (Index c = 0; c < m.cols(); ++c)
            sym(r, c) = 0.5 * (m(r, c) + h(r, c));
    for (Index i = 0; i < sym.rows(); ++i) sym(i, i) = Complex{sym(i, i).real(), 0.0};
    base_ = SquareTensor(t.shape(), std::move(sym));
}

HermitianTensor HermitianTensor::zero(const Shape& shape) {
    return HermitianTensor(SquareTensor::zero(shape));
}

HermitianTensor HermitianTensor::identity(const Shape& shape) {
    return HermitianTensor(SquareTensor::identity(shape));
}

HermitianTensor HermitianTensor::diagonal(const Shape& shape,
                                          const std::vector<double>& values) {
    if (static_cast<Index>(values.size()) != shape.unfolded_dim())
        throw ShapeError("HermitianTensor::diagonal: need d values");
    SquareTensor t(shape);
    for (Index i = 0; i < shape.unfolded_dim(); ++i)
        t.matrix()(i, i) = values[static_cast<std::size_t>(i)];
    return HermitianTensor(t);
}

HermitianTensor HermitianTensor::random(const Shape& shape, RngStream& rng) {
    SquareTensor g = SquareTensor::random(shape, rng);
    SquareTensor h = g + g.conjugate_transpose();
    h *= Complex{0.5, 0.0};
    return HermitianTensor(h);
}

HermitianTensor HermitianTensor::random_spectrum(const Shape& shape, RngStream& rng,
                                                 double lo, double hi) {
    const Index d = shape.unfolded_dim();
    ComplexMatrix u = random_unitary_matrix(d, rng);
    ComplexMatrix m(d, d);
    std::vector<double> lam(static_cast<std::size_t>(d));
    for (auto& v : lam) v = rng.uniform(lo, hi);
    for (Index r = 0; r < d; ++r)
        for (Index c = 0; c < d; ++c) {
            Complex s = 0.0;
            for (Index i = 0; i < d; ++i)
                s += u(r, i) * lam[static_cast<std::size_t>(i)] * std::conj(u(c, i));
            m(r, c) = s;
        }
    return HermitianTensor(SquareTensor(shape, std::move(m)));
}

HermitianTensor& HermitianTensor::operator+=(const HermitianTensor& o) {
    base_ += o.base_;
    return *this;
}

HermitianTensor& HermitianTensor::operator-=(const HermitianTensor& o) {
    base_ -= o.base_;
    return *this;
}

HermitianTensor& HermitianTensor::operator*=(double s) {
    base_ *= Complex{s, 0.0};
    return *this;
}

SquareTensor random_unitary_tensor(const Shape& shape, RngStream& rng) {
    return SquareTensor(shape, random_unitary_matrix(shape.unfolded_dim(), rng));
}

std::string tensor_to_json(const SquareTensor& t) {
    nlohmann::json j;
    j["mode_dims"] = t.shape().mode_dims();
    std::vector<double> re, im;
    re.reserve(t.matrix().data().size());
    im.reserve(t.matrix().data().size());
    for (const Complex& z : t.matrix().data()) {
        re.push_back(z.real());
        im.push_back(z.imag());
    }
    j["entries_re"] = re;
    j["entries_im"] = im;
    return j.dump();
}

SquareTensor tensor_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("tensor literal: ") + e.what());
    }
    if (!j.contains("mode_dims") || !j.contains("entries_re") || !j.contains("entries_im"))
        throw ConfigError("tensor literal: mode_dims/entries_re/entries_im required");
    Shape shape(j["mode_dims"].get<std::vector<Index>>());
    const auto re = j["entries_re"].get<std::vector<double>>();
    const auto im = j["entries_im"].get<std::vector<double>>();
    const std::size_t want =
        static_cast<std::size_t>(shape.unfolded_dim() * shape.unfolded_dim());
    if (re.size() != want || im.size() != want)
        throw ConfigError("tensor literal: entry count must equal unfolded_dim^2");
    ComplexMatrix m(shape.unfolded_dim(), shape.unfolded_dim());
    for (std::size_t i = 0; i < want; ++i) m.data()[i] = Complex{re[i], im[i]};
    return SquareTensor(shape, std::move(m));
}

SquareTensor tensor_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("tensor literal: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return tensor_from_json(buf.str());
}

} // namespace ttb

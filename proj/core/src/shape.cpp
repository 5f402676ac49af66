#include "ttb/shape.hpp"

#include "ttb/config.hpp"
#include "ttb/errors.hpp"

namespace ttb {

Shape::Shape(std::vector<Index> mode_dims) : dims_(std::move(mode_dims)) {
    if (dims_.empty()) throw ShapeError("Shape: at least one mode required");
    Index d = 1;
    for (Index dim : dims_) {
        if (dim < 1) throw ShapeError("Shape: mode dimensions must be >= 1");
        d *= dim;
    }
    if (d > config::max_unfolded_dim().load())
        throw RangeError("Shape: unfolded dimension exceeds configured cap");
    d_ = d;
}

Index Shape::linear_index(const std::vector<Index>& multi) const {
    if (static_cast<Index>(multi.size()) != order())
        throw ShapeError("Shape: multi-index order mismatch");
    Index lin = 0;
    for (std::size_t k = 0; k < dims_.size(); ++k) {
        const Index i = multi[k];
        if (i < 0 || i >= dims_[k]) throw RangeError("Shape: index out of range");
        lin = lin * dims_[k] + i;
    }
    return lin;
}

std::vector<Index> Shape::multi_index(Index linear) const {
    if (linear < 0 || linear >= d_) throw RangeError("Shape: linear index out of range");
    std::vector<Index> multi(dims_.size());
    for (std::size_t k = dims_.size(); k-- > 0;) {
        multi[k] = linear % dims_[k];
        linear /= dims_[k];
    }
    return multi;
}

} // namespace ttb

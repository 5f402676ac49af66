#ifndef TTB_SHAPE_HPP
#define TTB_SHAPE_HPP

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "ttb/complex_matrix.hpp"

namespace ttb {

// Paired mode dimensions (I_1, ..., I_N) of a square order-2N tensor together
// with the cached unfolded dimension d = prod I_n.
class Shape {
public:
    Shape() = default;
    explicit Shape(std::vector<Index> mode_dims);
    Shape(std::initializer_list<Index> dims) : Shape(std::vector<Index>(dims)) {}

    const std::vector<Index>& mode_dims() const { return dims_; }
    Index order() const { return static_cast<Index>(dims_.size()); }
    Index unfolded_dim() const { return d_; }

    // Row-major mixed-radix linearization with the last mode fastest.
    Index linear_index(const std::vector<Index>& multi) const;
    std::vector<Index> multi_index(Index linear) const;

    bool operator==(const Shape& o) const { return dims_ == o.dims_; }
    bool operator!=(const Shape& o) const { return !(*this == o); }

private:
    std::vector<Index> dims_;
    Index d_ = 0;
};

} // namespace ttb

#endif

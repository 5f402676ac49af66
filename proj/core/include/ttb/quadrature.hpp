#ifndef TTB_QUADRATURE_HPP
#define TTB_QUADRATURE_HPP

#include <vector>

namespace ttb {

// Gauss-Legendre nodes and weights on [-1, 1], computed to machine accuracy
// by Newton iteration on the Legendre recurrence.
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

// Composite rule: n-point Gauss-Legendre on each unit-length subinterval of
// [lo, hi] (the range is split into ceil(hi - lo) equal pieces).
struct CompositeRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

CompositeRule composite_gauss_legendre(double lo, double hi, int nodes_per_unit);

} // namespace ttb

#endif

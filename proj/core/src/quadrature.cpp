#include "ttb/quadrature.hpp"

#include <cmath>
#include <cstddef>

#include "ttb/errors.hpp"

namespace ttb {

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    if (n < 1) throw RangeError("gauss_legendre: n must be >= 1");
    nodes.assign(static_cast<std::size_t>(n), 0.0);
    weights.assign(static_cast<std::size_t>(n), 0.0);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Chebyshev-based initial guess for the i-th root.
        double x = std::cos(M_PI * (static_cast<double>(i) + 0.75) /
                            (static_cast<double>(n) + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // Legendre recurrence up to degree n.
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= n; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[static_cast<std::size_t>(i)] = -x;
        nodes[static_cast<std::size_t>(n - 1 - i)] = x;
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        weights[static_cast<std::size_t>(i)] = w;
        weights[static_cast<std::size_t>(n - 1 - i)] = w;
    }
}

CompositeRule composite_gauss_legendre(double lo, double hi, int nodes_per_unit) {
    if (hi <= lo) throw RangeError("composite_gauss_legendre: empty interval");
    std::vector<double> base_nodes, base_weights;
    gauss_legendre(nodes_per_unit, base_nodes, base_weights);
    const int pieces = static_cast<int>(std::ceil(hi - lo - 1e-12));
    const double h = (hi - lo) / pieces;
    CompositeRule rule;
    rule.nodes.reserve(static_cast<std::size_t>(pieces * nodes_per_unit));
    rule.weights.reserve(static_cast<std::size_t>(pieces * nodes_per_unit));
    for (int p = 0; p < pieces; ++p) {
        const double a = lo + p * h;
        const double mid = a + 0.5 * h;
        for (std::size_t i = 0; i < base_nodes.size(); ++i) {
            rule.nodes.push_back(mid + 0.5 * h * base_nodes[i]);
            rule.weights.push_back(0.5 * h * base_weights[i]);
        }
    }
    return rule;
}

} // namespace ttb

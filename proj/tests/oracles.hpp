#ifndef TTB_TESTS_ORACLES_HPP
#define TTB_TESTS_ORACLES_HPP

// Brute-force reference implementations used as independent oracles by the
// test suites. Everything here deliberately avoids the library's fast paths:
// contractions are written as raw index loops, eigenvalues come from
// characteristic polynomials, and subset sums are enumerated directly.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "ttb/complex_matrix.hpp"
#include "ttb/rng.hpp"
#include "ttb/shape.hpp"
#include "ttb/tensor.hpp"

namespace ttb::oracle {

// Einstein product by direct summation over the shared indices: the 2N-index
// loops of the defining contraction, no matrix detour.
inline SquareTensor einstein_product_bruteforce(const SquareTensor& a,
                                                const SquareTensor& b) {
    const Shape& shape = a.shape();
    const Index d = shape.unfolded_dim();
    SquareTensor out(shape);
    std::vector<std::vector<Index>> multis;
    multis.reserve(static_cast<std::size_t>(d));
    for (Index i = 0; i < d; ++i) multis.push_back(shape.multi_index(i));
    for (Index i = 0; i < d; ++i)
        for (Index k = 0; k < d; ++k) {
            Complex s = 0.0;
            for (Index j = 0; j < d; ++j)
                s += a.at(multis[static_cast<std::size_t>(i)],
                          multis[static_cast<std::size_t>(j)]) *
                     b.at(multis[static_cast<std::size_t>(j)],
                          multis[static_cast<std::size_t>(k)]);
            out.set(multis[static_cast<std::size_t>(i)],
                    multis[static_cast<std::size_t>(k)], s);
        }
    return out;
}

// Characteristic polynomial det(M - x I) of a small Hermitian matrix,
// evaluated by Laplace expansion (fine for d <= 4).
inline Complex char_poly_det(const ComplexMatrix& m, double x) {
    const Index n = m.rows();
    std::function<Complex(std::vector<Index>, std::vector<Index>)> det =
        [&](std::vector<Index> rows, std::vector<Index> cols) -> Complex {
        if (rows.size() == 1) {
            Complex v = m(rows[0], cols[0]);
            if (rows[0] == cols[0]) v -= x;
            return v;
        }
        Complex acc = 0.0;
        double sign = 1.0;
        for (std::size_t i = 0; i < cols.size(); ++i) {
            std::vector<Index> sub_rows(rows.begin() + 1, rows.end());
            std::vector<Index> sub_cols;
            for (std::size_t j = 0; j < cols.size(); ++j)
                if (j != i) sub_cols.push_back(cols[j]);
            Complex v = m(rows[0], cols[i]);
            if (rows[0] == cols[i]) v -= x;
            acc += sign * v * det(sub_rows, sub_cols);
            sign = -sign;
        }
        return acc;
    };
    std::vector<Index> idx(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
    return det(idx, idx);
}

// Eigenvalues of a Hermitian matrix by bisection on the characteristic
// polynomial sign changes; independent of the Jacobi path.
inline std::vector<double> eigenvalues_by_charpoly(const ComplexMatrix& m) {
    const Index n = m.rows();
    double radius = 0.0; // Gershgorin
    for (Index r = 0; r < n; ++r) {
        double row = 0.0;
        for (Index c = 0; c < n; ++c) row += std::abs(m(r, c));
        radius = std::max(radius, row);
    }
    radius += 1.0;
    auto p = [&](double x) { return char_poly_det(m, x).real(); };

    // Scan for sign changes on a fine grid, then bisect each bracket.
    const int grid = 20000;
    std::vector<double> roots;
    double prev_x = -radius;
    double prev_p = p(prev_x);
    for (int i = 1; i <= grid && static_cast<Index>(roots.size()) < n; ++i) {
        const double x = -radius + 2.0 * radius * i / grid;
        const double px = p(x);
        if ((prev_p < 0.0 && px >= 0.0) || (prev_p > 0.0 && px <= 0.0)) {
            double lo = prev_x, hi = x, plo = prev_p;
            for (int it = 0; it < 200; ++it) {
                const double mid = 0.5 * (lo + hi);
                const double pm = p(mid);
                if ((plo < 0.0) == (pm < 0.0)) { lo = mid; plo = pm; }
                else hi = mid;
            }
            roots.push_back(0.5 * (lo + hi));
        }
        prev_x = x;
        prev_p = px;
    }
    std::sort(roots.begin(), roots.end(), std::greater<double>());
    return roots;
}

// e_k by explicit subset enumeration.
inline double elementary_symmetric_bruteforce(const std::vector<double>& v, Index k) {
    double total = 0.0;
    const Index d = static_cast<Index>(v.size());
    std::function<void(Index, Index, double)> rec = [&](Index start, Index left, double prod) {
        if (left == 0) { total += prod; return; }
        for (Index i = start; i <= d - left; ++i)
            rec(i + 1, left - 1, prod * v[static_cast<std::size_t>(i)]);
    };
    rec(0, k, 1.0);
    return total;
}

// Random convex combination of permutations applied to a vector: the result
// is majorized by the input (Birkhoff).
inline std::vector<double> doubly_stochastic_mix(const std::vector<double>& y,
                                                 RngStream& rng, int permutations = 4) {
    const std::size_t n = y.size();
    std::vector<double> out(n, 0.0);
    std::vector<double> w(static_cast<std::size_t>(permutations));
    double wsum = 0.0;
    for (double& v : w) { v = 0.1 + rng.next_double(); wsum += v; }
    for (double& v : w) v /= wsum;
    for (int p = 0; p < permutations; ++p) {
        std::vector<std::size_t> perm(n);
        for (std::size_t i = 0; i < n; ++i) perm[i] = i;
        for (std::size_t i = n; i > 1; --i)
            std::swap(perm[i - 1], perm[rng.next_below(i)]);
        for (std::size_t i = 0; i < n; ++i)
            out[i] += w[static_cast<std::size_t>(p)] * y[perm[i]];
    }
    return out;
}

// Dense-grid argmin of a scalar function.
inline double dense_grid_argmin(const std::function<double(double)>& f, double lo,
                                double hi, int points) {
    double best_t = lo, best_v = f(lo);
    for (int i = 1; i < points; ++i) {
        const double t = lo + (hi - lo) * i / (points - 1);
        const double v = f(t);
        if (v < best_v) { best_v = v; best_t = t; }
    }
    return best_t;
}

} // namespace ttb::oracle

#endif

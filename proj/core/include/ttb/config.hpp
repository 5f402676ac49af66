#ifndef TTB_CONFIG_HPP
#define TTB_CONFIG_HPP

#include <atomic>
#include <cstdint>

namespace ttb::config {

// Relative tolerance for accepting a tensor as Hermitian before symmetrizing.
inline constexpr double kTolHermitian = 1e-10;

// Jacobi eigensolver: off-diagonal tolerance is kJacobiTol * ||M||_F.
inline constexpr double kJacobiTol = 1e-12;
inline constexpr int kJacobiMaxSweeps = 100;

// Hermitian rank counting: |lambda_i| > kTolRank * max(1, |lambda_1|).
inline constexpr double kTolRank = 1e-10;

// Eigenvalues of |T| above -kAbsClamp (relative) clamp to zero before sqrt;
// anything more negative is an internal-consistency failure.
inline constexpr double kAbsClamp = 1e-10;

// Equality tolerance for inequality checks: absolute + relative part.
inline constexpr double kIneqAbsTol = 1e-10;
inline constexpr double kIneqRelTol = 1e-8;

// Antisymmetric compound operators: largest admissible unfolded dimension.
inline constexpr std::int64_t kCompoundCap = 12;

// Quadrature for the beta density: Gauss-Legendre nodes per unit interval,
// default half-width of the truncated integration range, admissible tail mass.
inline constexpr int kQuadNodesPerUnit = 32;
inline constexpr double kQuadDefaultT = 12.0;
inline constexpr double kQuadTailTol = 1e-12;

// Bound optimizer: bisection iterations on the bracketing grid cell.
inline constexpr int kBisectIters = 80;

// Chernoff t-grid: log-spaced, exponent guard m*n*s*R*t <= kExpGuard.
inline constexpr double kChernoffTMin = 1e-4;
inline constexpr double kExpGuard = 40.0;

// Bernstein t-grid stays strictly inside (0, kBernsteinPoleFrac / (m*n*s)).
inline constexpr double kBernsteinPoleFrac = 0.999;

// Default abstract constant in the Chernoff/Bernstein statistics terms.
inline constexpr double kDefaultCLatala = 1.0;

// Unfolded dimension cap; compound operators explode combinatorially beyond
// this and nothing in the verification suites needs more.
inline std::atomic<std::int64_t>& max_unfolded_dim() {
    static std::atomic<std::int64_t> cap{512};
    return cap;
}

} // namespace ttb::config

#endif

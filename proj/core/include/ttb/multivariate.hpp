#ifndef TTB_MULTIVARIATE_HPP
#define TTB_MULTIVARIATE_HPP

#include <optional>
#include <vector>

#include "ttb/norms.hpp"
#include "ttb/quadrature.hpp"
#include "ttb/scalar_functions.hpp"
#include "ttb/spectral.hpp"

namespace ttb {

// beta_theta(t) = sin(pi theta) / (2 theta (cosh(pi t) + cos(pi theta))),
// with the theta -> 0 limit beta_0(t) = pi / (2 (cosh(pi t) + 1)).
double beta_density(double theta, double t);

// Truncated quadrature against beta_theta over [-T, T]; construction verifies
// that the captured mass is 1 up to the tail tolerance.
class BetaDensity {
public:
    explicit BetaDensity(double theta = 0.0, double truncation = -1.0,
                         int nodes_per_unit = -1);

    double theta() const { return theta_; }
    double truncation() const { return T_; }
    const std::vector<double>& nodes() const { return rule_.nodes; }
    // Quadrature weight times the density value at each node.
    const std::vector<double>& mass() const { return mass_; }
    double total_mass() const { return total_mass_; }

    // Integral of values[i] against the density (pairwise summation).
    double integrate(const std::vector<double>& values) const;

private:
    double theta_;
    double T_;
    CompositeRule rule_;
    std::vector<double> mass_;
    double total_mass_ = 0.0;
};

// Positive definite factors with the function and gauge a verification run
// will use.
struct MultivariateInstance {
    std::vector<HermitianTensor> factors;
    ScalarFunction f;
    GaugeSpec gauge;
};

// Shared evaluation engine: eigendecompositions of the factors are computed
// once and the singular values of prod C_i^(1 + i t) are cached per node for
// reuse across functions and gauges on the same factor set.
class MultivariateEvaluator {
public:
    MultivariateEvaluator(std::vector<HermitianTensor> factors, BetaDensity quad);

    // || f(exp(sum log C_i)) ||_rho
    double lhs(const ScalarFunction& f, const GaugeSpec& gauge) const;
    // exp of the beta_0-average of log || f(|prod C_i^(1+it)|) ||_rho
    double rhs_geometric(const ScalarFunction& f, const GaugeSpec& gauge);
    // beta_0-average of || g(|prod C_i^(1+it)|) ||_rho
    double rhs_arithmetic(const ScalarFunction& g, const GaugeSpec& gauge);

    // Largest relative gap between the integrand at t and at -t; exact zero
    // is only guaranteed for n <= 2 or conjugation-symmetric factor sets.
    double even_symmetry_residual(const ScalarFunction& f, const GaugeSpec& gauge);

    const std::vector<double>& node_singulars(std::size_t node);
    const BetaDensity& quadrature() const { return quad_; }

private:
    std::vector<HermitianTensor> factors_;
    std::vector<SpectralDecomposition> decs_;
    BetaDensity quad_;
    std::vector<std::optional<std::vector<double>>> cache_;
    Shape shape_;
};

double lhs_multivariate(const MultivariateInstance& inst);
double rhs_geometric(const MultivariateInstance& inst, const BetaDensity& quad);
double rhs_arithmetic(const MultivariateInstance& inst, const BetaDensity& quad);

struct LieTrotterResult {
    double error = 0.0; // ||(prod exp(L_k/n))^n - exp(sum L_k)|| (operator norm)
    double bound = 0.0; // 2 exp(2 sum ||L_k||) / n, sharp for the two-factor case
};

LieTrotterResult lie_trotter_error(const std::vector<HermitianTensor>& factors,
                                   std::int64_t n_steps);

} // namespace ttb

#endif

#include "ttb/multivariate.hpp"

#include <cmath>

#include "ttb/config.hpp"
#include "ttb/errors.hpp"
#include "ttb/parallel.hpp"

namespace ttb {

double beta_density(double theta, double t) {
    if (theta < 0.0 || theta > 1.0)
        throw RangeError("beta_density: theta must lie in [0, 1]");
    const double pi = M_PI;
    if (theta < 1e-14)
        return pi / (2.0 * (std::cosh(pi * t) + 1.0));
    return std::sin(pi * theta) / (2.0 * theta * (std::cosh(pi * t) + std::cos(pi * theta)));
}

BetaDensity::BetaDensity(double theta, double truncation, int nodes_per_unit)
    : theta_(theta),
      T_(truncation > 0.0 ? truncation : config::kQuadDefaultT) {
    if (theta < 0.0 || theta > 1.0)
        throw RangeError("BetaDensity: theta must lie in [0, 1]");
    const int npu = nodes_per_unit > 0 ? nodes_per_unit : config::kQuadNodesPerUnit;
    rule_ = composite_gauss_legendre(-T_, T_, npu);
    mass_.resize(rule_.nodes.size());
    for (std::size_t i = 0; i < rule_.nodes.size(); ++i)
        mass_[i] = rule_.weights[i] * beta_density(theta_, rule_.nodes[i]);
    total_mass_ = pairwise_sum(mass_);
    if (std::abs(total_mass_ - 1.0) > config::kQuadTailTol)
        throw PrecisionError("BetaDensity: captured mass misses 1 beyond the tail tolerance");
}

double BetaDensity::integrate(const std::vector<double>& values) const {
    if (values.size() != mass_.size())
        throw RangeError("BetaDensity::integrate: one value per node required");
    std::vector<double> terms(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) terms[i] = values[i] * mass_[i];
    return pairwise_sum(terms);
}

MultivariateEvaluator::MultivariateEvaluator(std::vector<HermitianTensor> factors,
                                             BetaDensity quad)
    : factors_(std::move(factors)), quad_(std::move(quad)) {
    if (factors_.empty())
        throw DomainError("MultivariateEvaluator: at least one factor required");
    shape_ = factors_.front().shape();
    decs_.reserve(factors_.size());
    for (const auto& c : factors_) {
        if (c.shape() != shape_)
            throw ShapeError("MultivariateEvaluator: factors must share a shape");
        SpectralDecomposition dec = eig_hermitian(c);
        if (dec.eigenvalues.back() <= 0.0)
            throw DomainError("MultivariateEvaluator: factors must be positive definite");
        decs_.push_back(std::move(dec));
    }
    cache_.assign(quad_.nodes().size(), std::nullopt);
}

const std::vector<double>& MultivariateEvaluator::node_singulars(std::size_t node) {
    if (node >= cache_.size())
        throw RangeError("MultivariateEvaluator: node index out of range");
    if (!cache_[node]) {
        const double t = quad_.nodes()[node];
        const Index d = shape_.unfolded_dim();
        ComplexMatrix prod = ComplexMatrix::identity(d);
        // Index-ascending left-to-right product of the complex powers.
        for (const auto& dec : decs_) {
            std::vector<Complex> pw(dec.eigenvalues.size());
            for (std::size_t i = 0; i < dec.eigenvalues.size(); ++i) {
                const double ln = std::log(dec.eigenvalues[i]);
                pw[i] = std::exp(Complex{ln, t * ln});
            }
            prod = prod * dec.assemble_complex(pw).matrix();
        }
        cache_[node] = singular_spectrum(SquareTensor(shape_, std::move(prod))).values;
    }
    return *cache_[node];
}

double MultivariateEvaluator::lhs(const ScalarFunction& f, const GaugeSpec& gauge) const {
    HermitianTensor log_sum = tensor_log(factors_.front());
    for (std::size_t i = 1; i < factors_.size(); ++i)
        log_sum += tensor_log(factors_[i]);
    const auto lam = eig_hermitian(tensor_exp(log_sum)).eigenvalues;
    std::vector<double> mapped(lam.size());
    for (std::size_t i = 0; i < lam.size(); ++i) mapped[i] = std::abs(f.fn(lam[i]));
    return gauge_apply(gauge, std::move(mapped));
}

double MultivariateEvaluator::rhs_geometric(const ScalarFunction& f, const GaugeSpec& gauge) {
    std::vector<double> vals(quad_.nodes().size());
    for (std::size_t i = 0; i < vals.size(); ++i) {
        const auto& sv = node_singulars(i);
        std::vector<double> mapped(sv.size());
        for (std::size_t j = 0; j < sv.size(); ++j) mapped[j] = std::abs(f.fn(sv[j]));
        const double norm = gauge_apply(gauge, std::move(mapped));
        if (norm <= 0.0)
            throw DomainError("rhs_geometric: log of a non-positive norm");
        vals[i] = std::log(norm);
    }
    return std::exp(quad_.integrate(vals) / quad_.total_mass());
}

double MultivariateEvaluator::rhs_arithmetic(const ScalarFunction& g, const GaugeSpec& gauge) {
    std::vector<double> vals(quad_.nodes().size());
    for (std::size_t i = 0; i < vals.size(); ++i) {
        const auto& sv = node_singulars(i);
        std::vector<double> mapped(sv.size());
        for (std::size_t j = 0; j < sv.size(); ++j) mapped[j] = std::abs(g.fn(sv[j]));
        vals[i] = gauge_apply(gauge, std::move(mapped));
    }
    return quad_.integrate(vals) / quad_.total_mass();
}

double MultivariateEvaluator::even_symmetry_residual(const ScalarFunction& f,
                                                     const GaugeSpec& gauge) {
    const auto& nodes = quad_.nodes();
    const std::size_t n = nodes.size();
    double worst = 0.0;
    // Composite Gauss-Legendre on a symmetric range yields mirrored nodes:
    // node i pairs with node n-1-i.
    for (std::size_t i = 0; i < n / 2; ++i) {
        const auto& a = node_singulars(i);
        const auto& b = node_singulars(n - 1 - i);
        std::vector<double> fa(a.size()), fb(b.size());
        for (std::size_t j = 0; j < a.size(); ++j) fa[j] = std::abs(f.fn(a[j]));
        for (std::size_t j = 0; j < b.size(); ++j) fb[j] = std::abs(f.fn(b[j]));
        const double va = gauge_apply(gauge, std::move(fa));
        const double vb = gauge_apply(gauge, std::move(fb));
        worst = std::max(worst, std::abs(va - vb) / std::max(1.0, std::abs(va)));
    }
    return worst;
}

double lhs_multivariate(const MultivariateInstance& inst) {
    MultivariateEvaluator ev(inst.factors, BetaDensity(0.0));
    return ev.lhs(inst.f, inst.gauge);
}

double rhs_geometric(const MultivariateInstance& inst, const BetaDensity& quad) {
    MultivariateEvaluator ev(inst.factors, quad);
    return ev.rhs_geometric(inst.f, inst.gauge);
}

double rhs_arithmetic(const MultivariateInstance& inst, const BetaDensity& quad) {
    MultivariateEvaluator ev(inst.factors, quad);
    return ev.rhs_arithmetic(inst.f, inst.gauge);
}

LieTrotterResult lie_trotter_error(const std::vector<HermitianTensor>& factors,
                                   std::int64_t n_steps) {
    if (factors.empty()) throw DomainError("lie_trotter_error: no factors");
    if (n_steps < 1) throw RangeError("lie_trotter_error: n_steps must be >= 1");
    const Shape& shape = factors.front().shape();
    const Index d = shape.unfolded_dim();

    ComplexMatrix step = ComplexMatrix::identity(d);
    HermitianTensor sum = factors.front();
    double norm_sum = 0.0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].shape() != shape)
            throw ShapeError("lie_trotter_error: factors must share a shape");
        HermitianTensor scaled = factors[i];
        scaled *= 1.0 / static_cast<double>(n_steps);
        step = step * tensor_exp(scaled).matrix();
        if (i > 0) sum += factors[i];
        norm_sum += operator_norm(factors[i].base());
    }

    const ComplexMatrix lhs = matrix_power(step, n_steps);
    const ComplexMatrix rhs = tensor_exp(sum).matrix();
    LieTrotterResult res;
    res.error = operator_norm(SquareTensor(shape, lhs - rhs));
    res.bound = 2.0 * std::exp(2.0 * norm_sum) / static_cast<double>(n_steps);
    return res;
}

} // namespace ttb

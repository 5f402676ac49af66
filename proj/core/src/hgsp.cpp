#include "ttb/hgsp.hpp"

#include <cmath>

#include "ttb/config.hpp"
#include "ttb/errors.hpp"
#include "ttb/norms.hpp"
#include "ttb/rng.hpp"
#include "ttb/spectral.hpp"

namespace ttb {

HypergraphShift random_hgso(const Shape& shape, double edge_probability, RngStream& rng,
                            double weight_low, double weight_high) {
    if (edge_probability < 0.0 || edge_probability > 1.0)
        throw RangeError("random_hgso: edge probability must lie in [0, 1]");
    const Index d = shape.unfolded_dim();
    SquareTensor t(shape);
    HypergraphShift out;
    for (Index r = 0; r < d; ++r) {
        for (Index c = r; c < d; ++c) {
            if (!rng.bernoulli(edge_probability)) continue;
            const double w = rng.uniform(weight_low, weight_high);
            t.matrix()(r, c) = w;
            t.matrix()(c, r) = w;
            out.edges.insert({r, c});
            out.edges.insert({c, r});
        }
    }
    out.S = HermitianTensor(t);
    return out;
}

FilterCoefficients::FilterCoefficients(std::vector<double> coeffs) : h(std::move(coeffs)) {
    if (h.empty()) throw DomainError("FilterCoefficients: K >= 1 required");
}

SquareTensor filter(const HermitianTensor& S, const FilterCoefficients& h) {
    const Shape& shape = S.shape();
    const Index d = shape.unfolded_dim();
    // Horner: P = h_{K-1} I; P = P S + h_k I.
    ComplexMatrix p(d, d);
    for (Index i = 0; i < d; ++i) p(i, i) = h.h.back();
    for (std::size_t k = h.h.size() - 1; k-- > 0;) {
        p = p * S.matrix();
        for (Index i = 0; i < d; ++i) p(i, i) += h.h[k];
    }
    return SquareTensor(shape, std::move(p));
}

SquareTensor filter(const HypergraphShift& S, const FilterCoefficients& h) {
    return filter(S.S, h);
}

std::vector<double> gamma_expansion(const FilterCoefficients& h) {
    const int K = h.taps();
    std::vector<double> gamma(static_cast<std::size_t>(2 * K - 1), 0.0);
    for (int a = 0; a < K; ++a)
        for (int b = 0; b < K; ++b)
            gamma[static_cast<std::size_t>(a + b)] += h.h[static_cast<std::size_t>(a)] *
                                                      h.h[static_cast<std::size_t>(b)];
    return gamma;
}

HermitianTensor covariance_tensor(const HermitianTensor& S, const FilterCoefficients& h,
                                  CovariancePath path) {
    const Shape& shape = S.shape();
    const Index d = shape.unfolded_dim();

    auto gram_path = [&]() {
        const SquareTensor H = filter(S, h);
        return HermitianTensor(
            SquareTensor(shape, H.matrix().adjoint() * H.matrix()));
    };
    auto expansion_path = [&]() {
        // Valid for symmetric S only.
        double asym = 0.0;
        for (Index r = 0; r < d; ++r)
            for (Index c = 0; c < d; ++c)
                asym += std::norm(S.matrix()(r, c) - S.matrix()(c, r));
        if (std::sqrt(asym) > 1e-10 * std::max(1.0, S.matrix().frobenius_norm()))
            throw ConfigError("covariance_tensor: gamma expansion needs a symmetric HGSO");
        const auto gamma = gamma_expansion(h);
        ComplexMatrix acc(d, d);
        ComplexMatrix power = ComplexMatrix::identity(d);
        for (std::size_t k = 0; k < gamma.size(); ++k) {
            if (k > 0) power = power * S.matrix();
            ComplexMatrix term = power;
            term *= Complex{gamma[k], 0.0};
            acc += term;
        }
        return HermitianTensor(SquareTensor(shape, std::move(acc)));
    };

    switch (path) {
        case CovariancePath::Gram:
            return gram_path();
        case CovariancePath::Expansion:
            return expansion_path();
        case CovariancePath::Auto: {
            HermitianTensor g = gram_path();
            HermitianTensor e = expansion_path();
            const double diff = (g - e).base().frobenius_norm();
            const double scale = std::max(1.0, g.base().frobenius_norm());
            if (diff > 1e-10 * scale)
                throw InternalError("covariance_tensor: evaluation paths disagree");
            return g;
        }
    }
    throw InternalError("covariance_tensor: unreachable");
}

HermitianTensor markov_covariance(const HermitianTensor& S) {
    const auto sv = singular_spectrum(S.base()).values;
    if (sv.back() <= 1e-10 * std::max(1.0, sv.front()))
        throw DomainError("markov_covariance: S is singular to working precision");
    return HermitianTensor(tensor_inverse(S.base()));
}

HermitianTensor structural_equation_covariance(const HermitianTensor& S) {
    const SquareTensor gap = SquareTensor::identity(S.shape()) - S.base();
    const auto sv = singular_spectrum(gap).values;
    if (sv.back() <= 1e-10 * std::max(1.0, sv.front()))
        throw DomainError("structural_equation_covariance: I - S is singular");
    const SquareTensor inv = tensor_inverse(gap);
    return HermitianTensor(einstein_product(inv, inv));
}

CertificationReport covariance_tail_bound(const EnsembleSpec& spec_for_x, double h0,
                                          double h1, Index k,
                                          const std::vector<double>& theta_grid,
                                          std::int64_t trials, std::uint64_t seed,
                                          int workers, double c_latala,
                                          std::int64_t statistic_samples) {
    spec_for_x.validate();
    if (spec_for_x.kind != EnsembleSpec::Kind::BoundedPSD)
        throw ConfigError("covariance_tail_bound: Chernoff hypotheses need a bounded PSD ensemble");
    // S = sum_j X'_j with X' = X / m: realized through the normalization scale.
    EnsembleSpec scaled = spec_for_x;
    const double gamma = scaled.normalization.value_or(1.0) /
                         static_cast<double>(scaled.m);
    scaled.normalization = gamma;
    const PolynomialSpec g({h0 * h0, 2.0 * h0 * h1, h1 * h1}, 1.0);
    return certify(scaled, g, k, theta_grid, BoundKind::Chernoff, trials, seed, workers,
                   c_latala, statistic_samples);
}

} // namespace ttb

#ifndef TTB_HGSP_HPP
#define TTB_HGSP_HPP

#include <set>
#include <utility>
#include <vector>

#include "ttb/ensembles.hpp"
#include "ttb/tensor.hpp"

namespace ttb {

// Hypergraph shift operator: a symmetric square tensor whose support is the
// hyperedge set, kept alongside as unfolded index pairs.
struct HypergraphShift {
    HermitianTensor S;
    std::set<std::pair<Index, Index>> edges; // unfolded (row, col), both orders

    const Shape& shape() const { return S.shape(); }
};

// Erdos-Renyi hyperedge sampling with symmetric mirroring; real uniform
// weights on the sampled edges.
HypergraphShift random_hgso(const Shape& shape, double edge_probability, RngStream& rng,
                            double weight_low = -1.0, double weight_high = 1.0);

struct FilterCoefficients {
    std::vector<double> h; // h_0 .. h_{K-1}

    FilterCoefficients() = default;
    explicit FilterCoefficients(std::vector<double> coeffs);
    int taps() const { return static_cast<int>(h.size()); }
};

// Polynomial hypergraph filter sum h_k S^k via Horner evaluation.
SquareTensor filter(const HypergraphShift& S, const FilterCoefficients& h);
SquareTensor filter(const HermitianTensor& S, const FilterCoefficients& h);

// gamma_k = sum_{k'+k''=k} h_{k'} h_{k''}.
std::vector<double> gamma_expansion(const FilterCoefficients& h);

enum class CovariancePath { Auto, Gram, Expansion };

// Covariance tensor of the filtered white signal: H^H * H, equal to
// sum gamma_k S^k for symmetric S. Auto evaluates both and cross-checks.
HermitianTensor covariance_tensor(const HermitianTensor& S, const FilterCoefficients& h,
                                  CovariancePath path = CovariancePath::Auto);

// Markov-random-field and structural-equation covariance constructors;
// provided with invertibility guards, excluded from bound certification.
HermitianTensor markov_covariance(const HermitianTensor& S);
HermitianTensor structural_equation_covariance(const HermitianTensor& S);

// Ky Fan tail certification of ||C_x([h0, h1])||_(k) where S = sum X'_j and
// X' = X/m: maps to the Chernoff bound with g = (h0^2, 2 h0 h1, h1^2), s = 1.
CertificationReport covariance_tail_bound(const EnsembleSpec& spec_for_x, double h0,
                                          double h1, Index k,
                                          const std::vector<double>& theta_grid,
                                          std::int64_t trials, std::uint64_t seed,
                                          int workers = 1, double c_latala = 1.0,
                                          std::int64_t statistic_samples = 2000);

} // namespace ttb

#endif

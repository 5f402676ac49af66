#ifndef TTB_MAJORIZATION_HPP
#define TTB_MAJORIZATION_HPP

#include <string>
#include <vector>

#include "ttb/norms.hpp"
#include "ttb/scalar_functions.hpp"
#include "ttb/tensor.hpp"

namespace ttb {

class RngStream;

// Descending real vector; the constructor rejects unsorted input.
struct SpectrumVector {
    std::vector<double> values;

    SpectrumVector() = default;
    explicit SpectrumVector(std::vector<double> v);
    std::size_t size() const { return values.size(); }
};

// Prefix-sum dominance; equality of totals for the non-weak variant.
bool majorizes_weak(const SpectrumVector& x, const SpectrumVector& y);
bool majorizes(const SpectrumVector& x, const SpectrumVector& y);
// Prefix-product dominance on nonnegative vectors (log 0 = -inf convention:
// zeros are admitted and kill the products from that position on).
bool log_majorizes_weak(const SpectrumVector& x, const SpectrumVector& y);
bool log_majorizes(const SpectrumVector& x, const SpectrumVector& y);

// Antisymmetric compound operator: the C(d,k) x C(d,k) matrix of k x k
// minors of unfold(t), subsets in lexicographic order.
ComplexMatrix compound(const SquareTensor& t, Index k);

// k-subsets of {0..d-1} in lexicographic order.
std::vector<std::vector<Index>> k_subsets(Index d, Index k);

// Finite discrete measure: tensors D_tau with positive weights summing to 1.
struct DiscreteMeasureFamily {
    std::vector<HermitianTensor> tensors;
    std::vector<double> weights;

    DiscreteMeasureFamily() = default;
    DiscreteMeasureFamily(std::vector<HermitianTensor> ts, std::vector<double> ws);
};

enum class MajorizationVariant { Weak, Full };

struct NormCheckEntry {
    std::string fn;
    std::string gauge;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0; // rhs - lhs
    bool ok = false;
};

struct AverageMajorizationReport {
    bool majorization_holds = false;
    std::vector<NormCheckEntry> norm_checks;
    // True when the majorization hypothesis holds but a norm-side inequality
    // failed beyond tolerance: a falsifier for the implementation.
    bool falsified = false;
    double worst_margin = 0.0;
    // Reverse-direction diagnostic (off by default): all norm checks held
    // while the majorization side failed. Only indicative, since finitely
    // many test functions cannot certify the reverse implication.
    bool reverse_counterexample = false;
};

// Majorization-with-average verifier: compares lambda(C) against the
// weighted average of the lambda(D_tau) and, for each supplied function and
// gauge, ||f(C)||_rho against the weighted average of ||f(D_tau)||_rho.
AverageMajorizationReport verify_average_majorization(
    const HermitianTensor& c, const DiscreteMeasureFamily& fam,
    MajorizationVariant variant, const std::vector<ScalarFunction>& test_functions,
    const std::vector<GaugeSpec>& gauges, bool attempt_reverse = false);

struct AverageLogMajorizationReport {
    bool log_majorization_holds = false;
    std::vector<NormCheckEntry> geometric_checks; // exp of averaged log norms
    std::vector<NormCheckEntry> arithmetic_checks;
    bool falsified = false;
    double worst_margin = 0.0;
};

// Log-majorization verifier: lambda(C) against exp of the averaged log
// spectra, with the geometric-mean bound for the f family and the arithmetic
// bound for the g family.
AverageLogMajorizationReport verify_average_log_majorization(
    const HermitianTensor& c, const DiscreteMeasureFamily& fam,
    MajorizationVariant variant, const std::vector<ScalarFunction>& f_family,
    const std::vector<ScalarFunction>& g_family, const std::vector<GaugeSpec>& gauges);

// Instance construction for the rejection-sampled property tests: the family
// is sampled freely and C is built by averaging spectra in a random basis,
// with a few T-transforms so the majorization hypothesis holds non-trivially.
struct MajorizationInstance {
    HermitianTensor c;
    DiscreteMeasureFamily family;
};

MajorizationInstance make_average_majorization_instance(const Shape& shape,
                                                        int family_size, RngStream& rng,
                                                        MajorizationVariant variant);
MajorizationInstance make_average_log_majorization_instance(const Shape& shape,
                                                            int family_size, RngStream& rng,
                                                            MajorizationVariant variant);

} // namespace ttb

#endif

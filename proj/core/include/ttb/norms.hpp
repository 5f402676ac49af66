#ifndef TTB_NORMS_HPP
#define TTB_NORMS_HPP

#include <string>
#include <vector>

#include "ttb/tensor.hpp"

namespace ttb {

// Symmetric gauge selector for the unitarily invariant norms. Operator is
// KyFan(1); KTrace is the elementary symmetric polynomial e_k.
struct GaugeSpec {
    enum class Kind { KyFan, Schatten, KTrace, Operator };

    Kind kind = Kind::Operator;
    Index k = 1;    // KyFan / KTrace
    double p = 2.0; // Schatten

    static GaugeSpec ky_fan(Index k) { return {Kind::KyFan, k, 0.0}; }
    static GaugeSpec schatten(double p) { return {Kind::Schatten, 0, p}; }
    static GaugeSpec k_trace(Index k) { return {Kind::KTrace, k, 0.0}; }
    static GaugeSpec op() { return {Kind::Operator, 1, 0.0}; }

    void validate(Index d) const;
    std::string name() const;

    // CLI config form, e.g. {"kind":"kyfan","k":2}.
    std::string to_json() const;
    static GaugeSpec from_json(const std::string& text);
};

// Gauge function applied to a nonnegative vector (sorted internally, so the
// value is symmetric in the entries).
double gauge_apply(const GaugeSpec& gauge, std::vector<double> values);

// ||T||_rho = rho(singular values of T).
double gauge_norm(const GaugeSpec& gauge, const SquareTensor& t);

// Sum of the k largest singular values; k = 1 is the operator norm.
double ky_fan_norm(const SquareTensor& t, Index k);
double operator_norm(const SquareTensor& t);

// (Sum sigma_i^p)^(1/p); p = 1 is the trace norm.
double schatten_norm(const SquareTensor& t, double p);

// Elementary symmetric polynomial e_k of the eigenvalues; k = 1 is the trace.
// Direct subset sums up to d = 12, Newton's identities above.
double k_trace(const HermitianTensor& h, Index k);
double elementary_symmetric(const std::vector<double>& values, Index k);

struct GaugeHolderResult {
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = false;
};

// Hoelder inequality for gauge functions: rho(componentwise prod b_i^alpha_i)
// <= prod rho(b_i)^alpha_i for nonnegative vectors and convex weights.
GaugeHolderResult gauge_holder_check(const std::vector<std::vector<double>>& vectors,
                                     const std::vector<double>& weights,
                                     const GaugeSpec& gauge);

} // namespace ttb

#endif

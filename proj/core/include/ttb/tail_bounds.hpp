#ifndef TTB_TAIL_BOUNDS_HPP
#define TTB_TAIL_BOUNDS_HPP

#include <functional>
#include <optional>
#include <vector>

#include "ttb/tensor.hpp"

namespace ttb {

// g(x) = (a_0 + a_1 x + ... + a_n x^n)^s with nonnegative coefficients and
// outer power s >= 1.
struct PolynomialSpec {
    std::vector<double> coefficients; // a_0 .. a_n
    double s = 1.0;

    PolynomialSpec() = default;
    PolynomialSpec(std::vector<double> a, double power);

    int degree() const { return static_cast<int>(coefficients.size()) - 1; }
    double base(double x) const; // a_0 + a_1 x + ... (Horner)
    double operator()(double x) const;

    // "a0,a1,...;s" as accepted by the CLI.
    static PolynomialSpec parse(const std::string& text);
    std::string to_string() const;
};

struct ProductInequalityResult {
    double lhs = 0.0; // || |prod C_i|^s ||_(k)
    double mid = 0.0; // prod || |C_i|^{s p_i} ||_(k)^{1/p_i}
    double rhs = 0.0; // sum || |C_i|^{s p_i} ||_(k) / p_i
    bool holds = false;
};

// Ky Fan k-norm inequalities for a product of tensors, with Hoelder weights
// sum 1/p_i = 1.
ProductInequalityResult ky_fan_product_inequality_check(
    const std::vector<SquareTensor>& tensors, double s,
    const std::vector<double>& p, Index k);

struct SumInequalityResult {
    double lhs = 0.0; // || |sum C_i|^s ||_(k)
    double rhs = 0.0; // m^{s-1} sum || |C_i|^s ||_(k)
    bool holds = false;
};

SumInequalityResult ky_fan_sum_inequality_check(const std::vector<SquareTensor>& tensors,
                                                double s, Index k);

struct MomentStatistic {
    double value = 0.0;
    // Six-term breakdown: row/col/fourth for the x (real) part then the y
    // (imaginary) part of the unfolded samples.
    double terms[6] = {0, 0, 0, 0, 0, 0};
    bool mean_shift_warning = false; // upsilon only
};

// Xi statistic: six-term moment functional of the centered unfolded real and
// imaginary parts, expectations taken as plain sample means.
MomentStatistic xi_statistic(const std::vector<SquareTensor>& samples);

// Upsilon: identical form without centering; the mean is zero by hypothesis
// and a warning is raised when the sample mean strays beyond 5 standard errors.
MomentStatistic upsilon_statistic(const std::vector<SquareTensor>& samples);

// sigma_1(E[(X+X*)/2]) + sigma_1(E[(X-X*)/2]) from samples.
double sigma1_bar_statistic(const std::vector<SquareTensor>& samples);

struct BoundReport {
    std::vector<double> t_grid;
    std::vector<double> values;
    std::optional<double> t_opt;
    double bound_at_opt = 0.0; // grid minimum when t_opt is absent
    bool convexity_ok = false;
    double first_order_residual = 0.0; // relative, at t_opt
    bool side_condition_ok = true;     // Bernstein: C l s Upsilon_j < theta/m
};

struct ChernoffParams {
    double R = 1.0;
    int m = 1;
    Index k = 1;
    double theta = 1.0;
    double c_latala = 1.0;
    std::vector<double> sigma1_bar; // per summand
    std::vector<double> xi;         // per summand
};

std::vector<double> make_chernoff_grid(const ChernoffParams& params,
                                       const PolynomialSpec& g, int points);

// Exponential bound curve of the generalized Chernoff inequality. t_opt is
// the zero of the exact first-order condition, located by safeguarded
// bisection on the bracketing grid cell; the convexity flag evaluates the
// printed A-term condition theta^2 A1 - 2 theta A2 + A3 > 0 on the grid.
BoundReport chernoff_bound(const ChernoffParams& params, const PolynomialSpec& g,
                           const std::vector<double>& t_grid);

double chernoff_curve_value(const ChernoffParams& params, const PolynomialSpec& g, double t);

struct BernsteinParams {
    int m = 1;
    Index k = 1;
    double theta = 1.0;
    double c_latala = 1.0;
    std::vector<double> sigma1_Aj_sq; // sigma_1(A_j^2)
    std::vector<double> upsilon;      // per summand
};

std::vector<double> make_bernstein_grid(const BernsteinParams& params,
                                        const PolynomialSpec& g, int points);

// Bernstein curve with B terms. B2/B3 are evaluated as the exact first and
// second derivatives of B1 (so B2(t_opt) = theta B1(t_opt) characterizes the
// curve minimizer); with literal_condition set, the convexity diagnostic
// instead evaluates the printed forms with B2 in the last slot.
BoundReport bernstein_bound(const BernsteinParams& params, const PolynomialSpec& g,
                            const std::vector<double>& t_grid,
                            bool literal_condition = false);

double bernstein_curve_value(const BernsteinParams& params, const PolynomialSpec& g, double t);
double bernstein_b1(const BernsteinParams& params, const PolynomialSpec& g, double t);
double bernstein_b2(const BernsteinParams& params, const PolynomialSpec& g, double t);
double bernstein_b3(const BernsteinParams& params, const PolynomialSpec& g, double t);

// Estimates of E || exp(p_j l s t X_j) ||_(k) supplied by the caller.
using MgfNormFn = std::function<double(int j, int l, double t)>;

// Generic Ky Fan tail bound: evaluates the bracketed expression over the
// grid with caller-supplied expectation estimates and returns the infimum.
BoundReport generic_kyfan_tail_bound(const PolynomialSpec& g, const MgfNormFn& mgf_norms,
                                     const std::vector<double>& p, Index k, double theta,
                                     const std::vector<double>& t_grid);

struct PsdOrderCondition {
    double min_eig_gap = 0.0;
    bool holds = false;
};

// lambda_min(g(exp(t S)) - exp(t g(S))): both sides are functions of S, so
// the gap is evaluated directly on the eigenvalues.
PsdOrderCondition psd_order_condition_check(const HermitianTensor& sum_tensor,
                                            const PolynomialSpec& g, double t);
PsdOrderCondition psd_order_condition_from_eigenvalues(const std::vector<double>& lambda,
                                                       const PolynomialSpec& g, double t);

} // namespace ttb

#endif

#include "ttb/tail_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "ttb/config.hpp"
#include "ttb/errors.hpp"
#include "ttb/norms.hpp"
#include "ttb/spectral.hpp"

namespace ttb {

namespace {

constexpr double kWeightTol = 1e-12;

double ineq_tol(double reference) {
    return config::kIneqAbsTol + config::kIneqRelTol * std::abs(reference);
}

// sum_{i<=k} sigma_i^power
double top_k_power_sum(const std::vector<double>& sigma, Index k, double power) {
    double s = 0.0;
    for (Index i = 0; i < k; ++i)
        s += std::pow(sigma[static_cast<std::size_t>(i)], power);
    return s;
}

void check_holder_weights(const std::vector<double>& p, std::size_t m) {
    if (p.size() != m) throw DomainError("holder weights: one p_i per tensor required");
    double inv = 0.0;
    for (double v : p) {
        if (v <= 0.0) throw DomainError("holder weights: p_i must be positive");
        inv += 1.0 / v;
    }
    if (std::abs(inv - 1.0) > kWeightTol)
        throw DomainError("holder weights: sum of 1/p_i must equal 1");
}

struct GridMin {
    std::size_t index = 0;
    double value = 0.0;
};

GridMin grid_minimum(const std::vector<double>& values) {
    GridMin gm;
    gm.value = values.front();
    for (std::size_t i = 1; i < values.size(); ++i)
        if (values[i] < gm.value) { gm.value = values[i]; gm.index = i; }
    return gm;
}

// Safeguarded bisection for a minimizer of the curve: phi is the derivative
// surrogate, so only a (-, +) bracket marks a minimum. Maximizer brackets
// (+, -) are skipped; with no minimizing bracket the optimum sits on the
// grid boundary and t_opt stays absent.
std::optional<double> bisect_first_order(const std::vector<double>& grid,
                                         const std::function<double(double)>& phi,
                                         double scale_at_root, double* residual) {
    std::optional<double> root;
    double prev_t = grid.front();
    double prev_phi = phi(prev_t);
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const double t = grid[i];
        const double ph = phi(t);
        if (prev_phi == 0.0) { root = prev_t; break; }
        if (prev_phi < 0.0 && ph >= 0.0) {
            double lo = prev_t, hi = t, flo = prev_phi;
            for (int it = 0; it < config::kBisectIters; ++it) {
                const double mid = 0.5 * (lo + hi);
                const double fm = phi(mid);
                if ((flo < 0.0) == (fm < 0.0)) { lo = mid; flo = fm; }
                else hi = mid;
            }
            root = 0.5 * (lo + hi);
            break;
        }
        prev_t = t;
        prev_phi = ph;
    }
    if (root && residual) {
        const double r = std::abs(phi(*root));
        *residual = r / std::max(std::abs(scale_at_root), 1e-300);
    }
    return root;
}

} // namespace

PolynomialSpec::PolynomialSpec(std::vector<double> a, double power)
    : coefficients(std::move(a)), s(power) {
    if (coefficients.empty()) throw DomainError("PolynomialSpec: empty coefficient list");
    for (double c : coefficients)
        if (c < 0.0) throw DomainError("PolynomialSpec: coefficients must be nonnegative");
    if (s < 1.0) throw DomainError("PolynomialSpec: power s must be >= 1");
}

double PolynomialSpec::base(double x) const {
    double acc = 0.0;
    for (std::size_t i = coefficients.size(); i-- > 0;) acc = acc * x + coefficients[i];
    return acc;
}

double PolynomialSpec::operator()(double x) const { return std::pow(base(x), s); }

PolynomialSpec PolynomialSpec::parse(const std::string& text) {
    const auto semi = text.find(';');
    const std::string coeffs = text.substr(0, semi);
    double power = 1.0;
    if (semi != std::string::npos) {
        try {
            power = std::stod(text.substr(semi + 1));
        } catch (const std::exception&) {
            throw ConfigError("PolynomialSpec: cannot parse power in '" + text + "'");
        }
    }
    std::vector<double> a;
    std::istringstream in(coeffs);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        try {
            a.push_back(std::stod(tok));
        } catch (const std::exception&) {
            throw ConfigError("PolynomialSpec: cannot parse coefficient '" + tok + "'");
        }
    }
    if (a.empty()) throw ConfigError("PolynomialSpec: no coefficients in '" + text + "'");
    return PolynomialSpec(std::move(a), power);
}

std::string PolynomialSpec::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
        if (i) out << ',';
        out << coefficients[i];
    }
    out << ';' << s;
    return out.str();
}

ProductInequalityResult ky_fan_product_inequality_check(
    const std::vector<SquareTensor>& tensors, double s,
    const std::vector<double>& p, Index k) {
    if (tensors.empty()) throw DomainError("product inequality: no tensors");
    if (s < 1.0) throw DomainError("product inequality: s must be >= 1");
    check_holder_weights(p, tensors.size());

    SquareTensor prod = tensors.front();
    for (std::size_t i = 1; i < tensors.size(); ++i)
        prod = einstein_product(prod, tensors[i]);

    ProductInequalityResult res;
    res.lhs = top_k_power_sum(singular_spectrum(prod).values, k, s);
    res.mid = 1.0;
    res.rhs = 0.0;
    for (std::size_t i = 0; i < tensors.size(); ++i) {
        const double norm_i =
            top_k_power_sum(singular_spectrum(tensors[i]).values, k, s * p[i]);
        res.mid *= std::pow(norm_i, 1.0 / p[i]);
        res.rhs += norm_i / p[i];
    }
    res.holds = res.lhs <= res.mid + ineq_tol(res.mid) &&
                res.mid <= res.rhs + ineq_tol(res.rhs);
    return res;
}

SumInequalityResult ky_fan_sum_inequality_check(const std::vector<SquareTensor>& tensors,
                                                double s, Index k) {
    if (tensors.empty()) throw DomainError("sum inequality: no tensors");
    if (s < 1.0) throw DomainError("sum inequality: s must be >= 1");
    SquareTensor sum = tensors.front();
    for (std::size_t i = 1; i < tensors.size(); ++i) sum += tensors[i];

    SumInequalityResult res;
    res.lhs = top_k_power_sum(singular_spectrum(sum).values, k, s);
    double tail = 0.0;
    for (const auto& t : tensors)
        tail += top_k_power_sum(singular_spectrum(t).values, k, s);
    res.rhs = std::pow(static_cast<double>(tensors.size()), s - 1.0) * tail;
    res.holds = res.lhs <= res.rhs + ineq_tol(res.rhs);
    return res;
}

namespace {

// Shared six-term evaluation; center toggles the Xi/Upsilon difference.
MomentStatistic six_term_statistic(const std::vector<SquareTensor>& samples, bool center) {
    if (samples.size() < 2)
        throw InsufficientSamples("moment statistic: at least 2 samples required");
    const Index d = samples.front().dim();
    const std::size_t n = samples.size();
    const double inv_n = 1.0 / static_cast<double>(n);

    // Mean of the real and imaginary parts of the unfolded samples.
    std::vector<double> mean_x(static_cast<std::size_t>(d * d), 0.0);
    std::vector<double> mean_y(static_cast<std::size_t>(d * d), 0.0);
    for (const auto& s : samples) {
        if (s.dim() != d) throw ShapeError("moment statistic: mixed shapes");
        const auto& data = s.matrix().data();
        for (std::size_t i = 0; i < data.size(); ++i) {
            mean_x[i] += data[i].real();
            mean_y[i] += data[i].imag();
        }
    }
    for (double& v : mean_x) v *= inv_n;
    for (double& v : mean_y) v *= inv_n;

    std::vector<double> ex2(static_cast<std::size_t>(d * d), 0.0);
    std::vector<double> ex4(static_cast<std::size_t>(d * d), 0.0);
    std::vector<double> ey2(static_cast<std::size_t>(d * d), 0.0);
    std::vector<double> ey4(static_cast<std::size_t>(d * d), 0.0);
    for (const auto& s : samples) {
        const auto& data = s.matrix().data();
        for (std::size_t i = 0; i < data.size(); ++i) {
            const double x = data[i].real() - (center ? mean_x[i] : 0.0);
            const double y = data[i].imag() - (center ? mean_y[i] : 0.0);
            ex2[i] += x * x;
            ex4[i] += x * x * x * x;
            ey2[i] += y * y;
            ey4[i] += y * y * y * y;
        }
    }
    for (double& v : ex2) v *= inv_n;
    for (double& v : ex4) v *= inv_n;
    for (double& v : ey2) v *= inv_n;
    for (double& v : ey4) v *= inv_n;

    auto row_col_fourth = [d](const std::vector<double>& m2, const std::vector<double>& m4,
                              double& row_term, double& col_term, double& fourth_term) {
        double max_row = 0.0, max_col = 0.0, total4 = 0.0;
        for (Index i = 0; i < d; ++i) {
            double row = 0.0;
            for (Index j = 0; j < d; ++j)
                row += m2[static_cast<std::size_t>(i * d + j)];
            max_row = std::max(max_row, row);
        }
        for (Index j = 0; j < d; ++j) {
            double col = 0.0;
            for (Index i = 0; i < d; ++i)
                col += m2[static_cast<std::size_t>(i * d + j)];
            max_col = std::max(max_col, col);
        }
        for (double v : m4) total4 += v;
        row_term = std::sqrt(max_row);
        col_term = std::sqrt(max_col);
        fourth_term = std::pow(total4, 0.25);
    };

    MomentStatistic stat;
    row_col_fourth(ex2, ex4, stat.terms[0], stat.terms[1], stat.terms[2]);
    row_col_fourth(ey2, ey4, stat.terms[3], stat.terms[4], stat.terms[5]);
    stat.value = stat.terms[0] + stat.terms[1] + stat.terms[2] +
                 stat.terms[3] + stat.terms[4] + stat.terms[5];

    if (!center) {
        // Hypothesis says E X = O; flag sample means beyond 5 standard errors.
        for (std::size_t i = 0; i < mean_x.size(); ++i) {
            const double var_x = std::max(ex2[i] - mean_x[i] * mean_x[i], 0.0);
            const double var_y = std::max(ey2[i] - mean_y[i] * mean_y[i], 0.0);
            const double se_x = std::sqrt(var_x * inv_n);
            const double se_y = std::sqrt(var_y * inv_n);
            if ((se_x > 0.0 && std::abs(mean_x[i]) > 5.0 * se_x) ||
                (se_y > 0.0 && std::abs(mean_y[i]) > 5.0 * se_y)) {
                stat.mean_shift_warning = true;
                break;
            }
        }
    }
    return stat;
}

} // namespace

MomentStatistic xi_statistic(const std::vector<SquareTensor>& samples) {
    return six_term_statistic(samples, true);
}

MomentStatistic upsilon_statistic(const std::vector<SquareTensor>& samples) {
    return six_term_statistic(samples, false);
}

double sigma1_bar_statistic(const std::vector<SquareTensor>& samples) {
    if (samples.empty()) throw InsufficientSamples("sigma1_bar: no samples");
    const Index d = samples.front().dim();
    const Shape& shape = samples.front().shape();
    ComplexMatrix mean_sym(d, d);
    ComplexMatrix mean_skew(d, d);
    const double inv_n = 1.0 / static_cast<double>(samples.size());
    for (const auto& s : samples) {
        const ComplexMatrix& m = s.matrix();
        for (Index r = 0; r < d; ++r)
            for (Index c = 0; c < d; ++c) {
                // (X + X*)/2 and (X - X*)/2 with * the entrywise conjugate.
                mean_sym(r, c) += Complex{m(r, c).real(), 0.0};
                mean_skew(r, c) += Complex{0.0, m(r, c).imag()};
            }
    }
    mean_sym *= Complex{inv_n, 0.0};
    mean_skew *= Complex{inv_n, 0.0};
    return operator_norm(SquareTensor(shape, mean_sym)) +
           operator_norm(SquareTensor(shape, mean_skew));
}

namespace {

struct ChernoffCurve {
    const ChernoffParams& prm;
    const PolynomialSpec& g;

    double outer() const {
        return std::pow(static_cast<double>(g.degree() + 1), g.s - 1.0);
    }

    // Bracket F(t), its exact first and second derivatives, and the printed
    // A terms for the convexity diagnostic.
    double F(double t) const {
        const double k = static_cast<double>(prm.k);
        const double m = static_cast<double>(prm.m);
        double acc = k * std::pow(g.coefficients[0], g.s);
        for (int l = 1; l <= g.degree(); ++l) {
            const double ls = l * g.s;
            const double al = std::pow(g.coefficients[static_cast<std::size_t>(l)], ls);
            if (al == 0.0) continue;
            const double e = std::exp(m * ls * prm.R * t);
            for (int j = 0; j < prm.m; ++j) {
                const double stat = prm.sigma1_bar[static_cast<std::size_t>(j)] +
                                    prm.c_latala * prm.xi[static_cast<std::size_t>(j)];
                acc += (k * al / m) * (1.0 + (e - 1.0) * stat);
            }
        }
        return acc;
    }

    double dF(double t) const {
        const double k = static_cast<double>(prm.k);
        const double m = static_cast<double>(prm.m);
        double acc = 0.0;
        for (int l = 1; l <= g.degree(); ++l) {
            const double ls = l * g.s;
            const double al = std::pow(g.coefficients[static_cast<std::size_t>(l)], ls);
            if (al == 0.0) continue;
            const double e = std::exp(m * ls * prm.R * t);
            for (int j = 0; j < prm.m; ++j) {
                const double stat = prm.sigma1_bar[static_cast<std::size_t>(j)] +
                                    prm.c_latala * prm.xi[static_cast<std::size_t>(j)];
                acc += (k * al / m) * (m * ls * prm.R) * e * stat;
            }
        }
        return acc;
    }

    double a2_printed(double t) const {
        const double k = static_cast<double>(prm.k);
        const double m = static_cast<double>(prm.m);
        double acc = 0.0;
        for (int l = 1; l <= g.degree(); ++l) {
            const double ls = l * g.s;
            const double al = std::pow(g.coefficients[static_cast<std::size_t>(l)], ls);
            if (al == 0.0) continue;
            const double e = std::exp(m * ls * prm.R * t);
            for (int j = 0; j < prm.m; ++j) {
                const double stat = prm.sigma1_bar[static_cast<std::size_t>(j)] +
                                    prm.c_latala * prm.xi[static_cast<std::size_t>(j)];
                acc += k * ls * prm.R * k * al * stat * e;
            }
        }
        return acc;
    }

    double a3_printed(double t) const {
        const double k = static_cast<double>(prm.k);
        const double m = static_cast<double>(prm.m);
        double acc = 0.0;
        for (int l = 1; l <= g.degree(); ++l) {
            const double ls = l * g.s;
            const double al = std::pow(g.coefficients[static_cast<std::size_t>(l)], ls);
            if (al == 0.0) continue;
            const double e = std::exp(m * ls * prm.R * t);
            for (int j = 0; j < prm.m; ++j) {
                const double stat = prm.sigma1_bar[static_cast<std::size_t>(j)] +
                                    prm.c_latala * prm.xi[static_cast<std::size_t>(j)];
                acc += k * m * (ls * prm.R) * (ls * prm.R) * al * stat * e;
            }
        }
        return acc;
    }
};

void validate_chernoff(const ChernoffParams& p) {
    if (p.R <= 0.0) throw DomainError("chernoff: R must be positive");
    if (p.m < 1) throw DomainError("chernoff: m must be >= 1");
    if (p.k < 1) throw RangeError("chernoff: k must be >= 1");
    if (p.theta <= 0.0) throw DomainError("chernoff: theta must be positive");
    if (p.sigma1_bar.size() != static_cast<std::size_t>(p.m) ||
        p.xi.size() != static_cast<std::size_t>(p.m))
        throw DomainError("chernoff: need per-summand statistics");
    for (double v : p.sigma1_bar)
        if (!(v >= 0.0) || !std::isfinite(v)) throw DomainError("chernoff: bad sigma1_bar");
    for (double v : p.xi)
        if (!(v >= 0.0) || !std::isfinite(v)) throw DomainError("chernoff: bad xi");
}

} // namespace

std::vector<double> make_chernoff_grid(const ChernoffParams& params,
                                       const PolynomialSpec& g, int points) {
    if (points < 2) throw RangeError("make_chernoff_grid: need at least 2 points");
    const int n = std::max(g.degree(), 1);
    const double t_max = config::kExpGuard /
                         (static_cast<double>(params.m) * n * g.s * params.R);
    std::vector<double> grid(static_cast<std::size_t>(points));
    const double lo = std::log(config::kChernoffTMin);
    const double hi = std::log(t_max);
    for (int i = 0; i < points; ++i)
        grid[static_cast<std::size_t>(i)] =
            std::exp(lo + (hi - lo) * static_cast<double>(i) / (points - 1));
    return grid;
}

double chernoff_curve_value(const ChernoffParams& params, const PolynomialSpec& g, double t) {
    ChernoffCurve curve{params, g};
    return curve.outer() * std::exp(-params.theta * t) * curve.F(t);
}

BoundReport chernoff_bound(const ChernoffParams& params, const PolynomialSpec& g,
                           const std::vector<double>& t_grid) {
    validate_chernoff(params);
    if (t_grid.empty()) throw RangeError("chernoff_bound: empty t grid");
    ChernoffCurve curve{params, g};

    BoundReport rep;
    rep.t_grid = t_grid;
    rep.values.resize(t_grid.size());
    for (std::size_t i = 0; i < t_grid.size(); ++i)
        rep.values[i] = curve.outer() * std::exp(-params.theta * t_grid[i]) * curve.F(t_grid[i]);

    const GridMin gm = grid_minimum(rep.values);
    rep.bound_at_opt = gm.value;

    // Exact first-order condition of the curve: F'(t) = theta F(t).
    auto phi = [&](double t) { return curve.dF(t) - params.theta * curve.F(t); };
    double residual = 0.0;
    auto root = bisect_first_order(t_grid, phi,
                                   params.theta * curve.F(t_grid[gm.index]), &residual);
    if (root) {
        rep.t_opt = *root;
        rep.first_order_residual = residual;
        const double v = curve.outer() * std::exp(-params.theta * *root) * curve.F(*root);
        rep.bound_at_opt = std::min(rep.bound_at_opt, v);
    }

    rep.convexity_ok = true;
    const double th = params.theta;
    for (double t : t_grid) {
        const double cond = th * th * curve.F(t) - 2.0 * th * curve.a2_printed(t) +
                            curve.a3_printed(t);
        if (cond <= 0.0) { rep.convexity_ok = false; break; }
    }
    return rep;
}

namespace {

struct BernsteinCurve {
    const BernsteinParams& prm;
    const PolynomialSpec& g;

    double outer() const {
        return std::pow(static_cast<double>(g.degree() + 1), g.s - 1.0);
    }

    // Per-(l, j) bracket pieces and their exact derivatives in t.
    double B1(double t) const {
        const double k = static_cast<double>(prm.k);
        const double m = static_cast<double>(prm.m);
        double acc = k * std::pow(g.coefficients[0], g.s);
        for (int l = 1; l <= g.degree(); ++l) {
            const double ls = l * g.s;
            const double al = std::pow(g.coefficients[static_cast<std::size_t>(l)], ls);
            if (al == 0.0) continue;
            for (int j = 0; j < prm.m; ++j) {
                const double sig = prm.sigma1_Aj_sq[static_cast<std::size_t>(j)];
                const double ups = prm.upsilon[static_cast<std::size_t>(j)];
                const double lst = ls * t;
                acc += k * al * (1.0 / m + m * lst * lst * sig / (2.0 * (1.0 - m * lst)) +
                                 lst * prm.c_latala * ups);
            }
        }
        return acc;
    }

    double B2(double t) const {
        const double k = static_cast<double>(prm.k);
        const double m = static_cast<double>(prm.m);
        double acc = 0.0;
        for (int l = 1; l <= g.degree(); ++l) {
            const double ls = l * g.s;
            const double al = std::pow(g.coefficients[static_cast<std::size_t>(l)], ls);
            if (al == 0.0) continue;
            for (int j = 0; j < prm.m; ++j) {
                const double sig = prm.sigma1_Aj_sq[static_cast<std::size_t>(j)];
                const double ups = prm.upsilon[static_cast<std::size_t>(j)];
                const double q = 1.0 - m * ls * t;
                const double num = 2.0 * m * ls * ls * t - m * m * ls * ls * ls * t * t;
                acc += k * al * (num * sig / (2.0 * q * q) + ls * prm.c_latala * ups);
            }
        }
        return acc;
    }

    double B3(double t) const {
        const double k = static_cast<double>(prm.k);
        const double m = static_cast<double>(prm.m);
        double acc = 0.0;
        for (int l = 1; l <= g.degree(); ++l) {
            const double ls = l * g.s;
            const double al = std::pow(g.coefficients[static_cast<std::size_t>(l)], ls);
            if (al == 0.0) continue;
            for (int j = 0; j < prm.m; ++j) {
                const double sig = prm.sigma1_Aj_sq[static_cast<std::size_t>(j)];
                const double q = 1.0 - m * ls * t;
                acc += k * al * m * ls * ls * sig / (q * q * q);
            }
        }
        return acc;
    }

    double B2_printed(double t) const {
        const double k = static_cast<double>(prm.k);
        const double m = static_cast<double>(prm.m);
        double acc = 0.0;
        for (int l = 1; l <= g.degree(); ++l) {
            const double ls = l * g.s;
            const double al = std::pow(g.coefficients[static_cast<std::size_t>(l)], ls);
            if (al == 0.0) continue;
            for (int j = 0; j < prm.m; ++j) {
                const double sig = prm.sigma1_Aj_sq[static_cast<std::size_t>(j)];
                const double ups = prm.upsilon[static_cast<std::size_t>(j)];
                const double q = 1.0 - m * ls * t;
                const double num = 4.0 * m * ls * ls * t - 3.0 * ls * ls * ls * m * m * t * t;
                acc += k * al * (num * sig / (2.0 * q * q) + ls * prm.c_latala * ups);
            }
        }
        return acc;
    }
};

void validate_bernstein(const BernsteinParams& p) {
    if (p.m < 1) throw DomainError("bernstein: m must be >= 1");
    if (p.k < 1) throw RangeError("bernstein: k must be >= 1");
    if (p.theta <= 0.0) throw DomainError("bernstein: theta must be positive");
    if (p.sigma1_Aj_sq.size() != static_cast<std::size_t>(p.m) ||
        p.upsilon.size() != static_cast<std::size_t>(p.m))
        throw DomainError("bernstein: need per-summand statistics");
    for (double v : p.sigma1_Aj_sq)
        if (!(v >= 0.0) || !std::isfinite(v)) throw DomainError("bernstein: bad sigma1(A^2)");
    for (double v : p.upsilon)
        if (!(v >= 0.0) || !std::isfinite(v)) throw DomainError("bernstein: bad upsilon");
}

} // namespace

std::vector<double> make_bernstein_grid(const BernsteinParams& params,
                                        const PolynomialSpec& g, int points) {
    if (points < 1) throw RangeError("make_bernstein_grid: need at least 1 point");
    const int n = std::max(g.degree(), 1);
    const double t_max = config::kBernsteinPoleFrac /
                         (static_cast<double>(params.m) * n * g.s);
    std::vector<double> grid(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i)
        grid[static_cast<std::size_t>(i)] =
            t_max * static_cast<double>(i + 1) / static_cast<double>(points);
    return grid;
}

double bernstein_b1(const BernsteinParams& params, const PolynomialSpec& g, double t) {
    return BernsteinCurve{params, g}.B1(t);
}
double bernstein_b2(const BernsteinParams& params, const PolynomialSpec& g, double t) {
    return BernsteinCurve{params, g}.B2(t);
}
double bernstein_b3(const BernsteinParams& params, const PolynomialSpec& g, double t) {
    return BernsteinCurve{params, g}.B3(t);
}

double bernstein_curve_value(const BernsteinParams& params, const PolynomialSpec& g, double t) {
    BernsteinCurve curve{params, g};
    return curve.outer() * std::exp(-params.theta * t) * curve.B1(t);
}

BoundReport bernstein_bound(const BernsteinParams& params, const PolynomialSpec& g,
                            const std::vector<double>& t_grid, bool literal_condition) {
    validate_bernstein(params);
    if (t_grid.empty()) throw RangeError("bernstein_bound: empty t grid");
    const int n = std::max(g.degree(), 1);
    const double pole = 1.0 / (static_cast<double>(params.m) * n * g.s);
    for (double t : t_grid)
        if (t <= 0.0 || t >= pole)
            throw RangeError("bernstein_bound: grid must stay inside (0, 1/(m n s))");

    BernsteinCurve curve{params, g};
    BoundReport rep;
    rep.t_grid = t_grid;
    rep.values.resize(t_grid.size());
    for (std::size_t i = 0; i < t_grid.size(); ++i)
        rep.values[i] = curve.outer() * std::exp(-params.theta * t_grid[i]) * curve.B1(t_grid[i]);

    const GridMin gm = grid_minimum(rep.values);
    rep.bound_at_opt = gm.value;

    auto phi = [&](double t) { return curve.B2(t) - params.theta * curve.B1(t); };
    double residual = 0.0;
    auto root = bisect_first_order(t_grid, phi,
                                   params.theta * curve.B1(t_grid[gm.index]), &residual);
    if (root) {
        rep.t_opt = *root;
        rep.first_order_residual = residual;
        const double v = curve.outer() * std::exp(-params.theta * *root) * curve.B1(*root);
        rep.bound_at_opt = std::min(rep.bound_at_opt, v);
    }

    rep.convexity_ok = true;
    const double th = params.theta;
    for (double t : t_grid) {
        const double last = literal_condition ? curve.B2_printed(t) : curve.B3(t);
        const double mid = literal_condition ? curve.B2_printed(t) : curve.B2(t);
        if (th * th * curve.B1(t) - 2.0 * th * mid + last <= 0.0) {
            rep.convexity_ok = false;
            break;
        }
    }

    rep.side_condition_ok = true;
    for (int l = 1; l <= g.degree() && rep.side_condition_ok; ++l) {
        if (g.coefficients[static_cast<std::size_t>(l)] == 0.0) continue;
        for (int j = 0; j < params.m; ++j) {
            const double lhs = params.c_latala * l * g.s *
                               params.upsilon[static_cast<std::size_t>(j)];
            if (!(lhs < params.theta / params.m)) {
                rep.side_condition_ok = false;
                break;
            }
        }
    }
    return rep;
}

BoundReport generic_kyfan_tail_bound(const PolynomialSpec& g, const MgfNormFn& mgf_norms,
                                     const std::vector<double>& p, Index k, double theta,
                                     const std::vector<double>& t_grid) {
    if (t_grid.empty()) throw RangeError("generic_kyfan_tail_bound: empty t grid");
    check_holder_weights(p, p.size());
    if (theta <= 0.0) throw DomainError("generic_kyfan_tail_bound: theta must be positive");
    const double outer = std::pow(static_cast<double>(g.degree() + 1), g.s - 1.0);
    const double kk = static_cast<double>(k);

    BoundReport rep;
    rep.t_grid = t_grid;
    rep.values.resize(t_grid.size());
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        const double t = t_grid[i];
        double acc = kk * std::pow(g.coefficients[0], g.s);
        for (int l = 1; l <= g.degree(); ++l) {
            const double al = std::pow(g.coefficients[static_cast<std::size_t>(l)],
                                       l * g.s);
            if (al == 0.0) continue;
            for (std::size_t j = 0; j < p.size(); ++j)
                acc += al * mgf_norms(static_cast<int>(j), l, t) / p[j];
        }
        rep.values[i] = outer * std::exp(-theta * t) * acc;
    }
    const GridMin gm = grid_minimum(rep.values);
    rep.bound_at_opt = gm.value;
    rep.t_opt = t_grid[gm.index]; // supplied estimates have no derivative
    rep.first_order_residual = std::numeric_limits<double>::quiet_NaN();
    rep.convexity_ok = true;
    return rep;
}

PsdOrderCondition psd_order_condition_from_eigenvalues(const std::vector<double>& lambda,
                                                       const PolynomialSpec& g, double t) {
    if (t <= 0.0) throw RangeError("psd_order_condition: t must be positive");
    PsdOrderCondition res;
    res.min_eig_gap = std::numeric_limits<double>::infinity();
    for (double lam : lambda) {
        const double lhs = g(std::exp(t * lam));
        const double rhs = std::exp(t * g(lam));
        res.min_eig_gap = std::min(res.min_eig_gap, lhs - rhs);
    }
    res.holds = res.min_eig_gap >= -1e-9;
    return res;
}

PsdOrderCondition psd_order_condition_check(const HermitianTensor& sum_tensor,
                                            const PolynomialSpec& g, double t) {
    return psd_order_condition_from_eigenvalues(eig_hermitian(sum_tensor).eigenvalues, g, t);
}

} // namespace ttb

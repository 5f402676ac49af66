#include "ttb/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ttb/config.hpp"
#include "ttb/errors.hpp"
#include "ttb/rng.hpp"
#include "ttb/spectral.hpp"

namespace ttb {

namespace {

constexpr double kMajTol = 1e-10;

void require_same_length(const SpectrumVector& x, const SpectrumVector& y) {
    if (x.size() != y.size())
        throw DomainError("majorization: vectors must have equal length");
}

double scale_of(const SpectrumVector& x, const SpectrumVector& y) {
    double m = 1.0;
    for (double v : x.values) m = std::max(m, std::abs(v));
    for (double v : y.values) m = std::max(m, std::abs(v));
    return m;
}

double apply_sorted(const GaugeSpec& gauge, const ScalarFn& f,
                    const std::vector<double>& lambda) {
    std::vector<double> mapped(lambda.size());
    for (std::size_t i = 0; i < lambda.size(); ++i) mapped[i] = std::abs(f(lambda[i]));
    return gauge_apply(gauge, std::move(mapped));
}

bool ineq_ok(double lhs, double rhs) {
    return lhs <= rhs + config::kIneqAbsTol + config::kIneqRelTol * std::abs(rhs);
}

} // namespace

SpectrumVector::SpectrumVector(std::vector<double> v) : values(std::move(v)) {
    for (std::size_t i = 1; i < values.size(); ++i)
        if (values[i - 1] < values[i] - 1e-12)
            throw DomainError("SpectrumVector: entries must be descending");
}

bool majorizes_weak(const SpectrumVector& x, const SpectrumVector& y) {
    require_same_length(x, y);
    const double tol = kMajTol * scale_of(x, y);
    double sx = 0.0, sy = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        sx += x.values[k];
        sy += y.values[k];
        if (sx > sy + tol) return false;
    }
    return true;
}

bool majorizes(const SpectrumVector& x, const SpectrumVector& y) {
    require_same_length(x, y);
    if (!majorizes_weak(x, y)) return false;
    const double tol = kMajTol * scale_of(x, y) * static_cast<double>(std::max<std::size_t>(x.size(), 1));
    double sx = 0.0, sy = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        sx += x.values[k];
        sy += y.values[k];
    }
    return std::abs(sx - sy) <= tol;
}

bool log_majorizes_weak(const SpectrumVector& x, const SpectrumVector& y) {
    require_same_length(x, y);
    for (double v : x.values)
        if (v < -kMajTol) throw DomainError("log majorization: negative entry");
    for (double v : y.values)
        if (v < -kMajTol) throw DomainError("log majorization: negative entry");
    double px = 1.0, py = 1.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        px *= std::max(x.values[k], 0.0);
        py *= std::max(y.values[k], 0.0);
        if (px > py + kMajTol * std::max(1.0, py)) return false;
    }
    return true;
}

bool log_majorizes(const SpectrumVector& x, const SpectrumVector& y) {
    require_same_length(x, y);
    if (!log_majorizes_weak(x, y)) return false;
    double px = 1.0, py = 1.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        px *= std::max(x.values[k], 0.0);
        py *= std::max(y.values[k], 0.0);
    }
    return std::abs(px - py) <= kMajTol * std::max(1.0, std::max(px, py));
}

std::vector<std::vector<Index>> k_subsets(Index d, Index k) {
    std::vector<std::vector<Index>> out;
    std::vector<Index> cur(static_cast<std::size_t>(k));
    for (Index i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i;
    while (true) {
        out.push_back(cur);
        Index i = k - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == d - k + i) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (Index j = i + 1; j < k; ++j)
            cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

ComplexMatrix compound(const SquareTensor& t, Index k) {
    const Index d = t.dim();
    if (d > config::kCompoundCap)
        throw RangeError("compound: unfolded dimension exceeds compound cap");
    if (k < 1 || k > d) throw RangeError("compound: k out of range");
    const ComplexMatrix& m = t.matrix();
    const auto subsets = k_subsets(d, k);
    const Index n = static_cast<Index>(subsets.size());
    ComplexMatrix out(n, n);
    ComplexMatrix minor(k, k);
    for (Index r = 0; r < n; ++r) {
        for (Index c = 0; c < n; ++c) {
            const auto& rows = subsets[static_cast<std::size_t>(r)];
            const auto& cols = subsets[static_cast<std::size_t>(c)];
            for (Index i = 0; i < k; ++i)
                for (Index j = 0; j < k; ++j)
                    minor(i, j) = m(rows[static_cast<std::size_t>(i)],
                                    cols[static_cast<std::size_t>(j)]);
            out(r, c) = matrix_determinant(minor);
        }
    }
    return out;
}

DiscreteMeasureFamily::DiscreteMeasureFamily(std::vector<HermitianTensor> ts,
                                             std::vector<double> ws)
    : tensors(std::move(ts)), weights(std::move(ws)) {
    if (tensors.empty() || tensors.size() != weights.size())
        throw DomainError("DiscreteMeasureFamily: need one weight per tensor");
    double sum = 0.0;
    for (double w : weights) {
        if (w <= 0.0) throw DomainError("DiscreteMeasureFamily: weights must be positive");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw DomainError("DiscreteMeasureFamily: weights must sum to 1");
    for (const auto& t : tensors)
        if (t.shape() != tensors.front().shape())
            throw ShapeError("DiscreteMeasureFamily: uniform shape required");
}

AverageMajorizationReport verify_average_majorization(
    const HermitianTensor& c, const DiscreteMeasureFamily& fam,
    MajorizationVariant variant, const std::vector<ScalarFunction>& test_functions,
    const std::vector<GaugeSpec>& gauges, bool attempt_reverse) {
    const std::vector<double> lam_c = eig_hermitian(c).eigenvalues;
    std::vector<std::vector<double>> lam_d(fam.tensors.size());
    for (std::size_t i = 0; i < fam.tensors.size(); ++i)
        lam_d[i] = eig_hermitian(fam.tensors[i]).eigenvalues;

    std::vector<double> avg(lam_c.size(), 0.0);
    for (std::size_t i = 0; i < lam_d.size(); ++i)
        for (std::size_t j = 0; j < avg.size(); ++j)
            avg[j] += fam.weights[i] * lam_d[i][j];

    AverageMajorizationReport rep;
    const SpectrumVector x(lam_c), y(avg);
    rep.majorization_holds = (variant == MajorizationVariant::Weak)
                                 ? majorizes_weak(x, y)
                                 : majorizes(x, y);

    rep.worst_margin = std::numeric_limits<double>::infinity();
    bool all_norm_ok = true;
    for (const auto& fn : test_functions) {
        for (const auto& gauge : gauges) {
            NormCheckEntry e;
            e.fn = fn.name;
            e.gauge = gauge.name();
            e.lhs = apply_sorted(gauge, fn.fn, lam_c);
            e.rhs = 0.0;
            for (std::size_t i = 0; i < lam_d.size(); ++i)
                e.rhs += fam.weights[i] * apply_sorted(gauge, fn.fn, lam_d[i]);
            e.margin = e.rhs - e.lhs;
            e.ok = ineq_ok(e.lhs, e.rhs);
            rep.worst_margin = std::min(rep.worst_margin, e.margin);
            if (rep.majorization_holds && !e.ok) rep.falsified = true;
            if (!e.ok) all_norm_ok = false;
            rep.norm_checks.push_back(std::move(e));
        }
    }
    if (attempt_reverse && all_norm_ok && !rep.majorization_holds)
        rep.reverse_counterexample = true;
    return rep;
}

AverageLogMajorizationReport verify_average_log_majorization(
    const HermitianTensor& c, const DiscreteMeasureFamily& fam,
    MajorizationVariant variant, const std::vector<ScalarFunction>& f_family,
    const std::vector<ScalarFunction>& g_family, const std::vector<GaugeSpec>& gauges) {
    const std::vector<double> lam_c = eig_hermitian(c).eigenvalues;
    std::vector<std::vector<double>> lam_d(fam.tensors.size());
    for (std::size_t i = 0; i < fam.tensors.size(); ++i) {
        lam_d[i] = eig_hermitian(fam.tensors[i]).eigenvalues;
        for (double lam : lam_d[i])
            if (lam <= 0.0)
                throw DomainError("verify_average_log_majorization: family must be positive definite");
    }
    for (double lam : lam_c)
        if (lam < -kMajTol)
            throw DomainError("verify_average_log_majorization: C must be nonnegative");

    std::vector<double> target(lam_c.size(), 0.0);
    for (std::size_t j = 0; j < target.size(); ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < lam_d.size(); ++i)
            s += fam.weights[i] * std::log(lam_d[i][j]);
        target[j] = std::exp(s);
    }

    AverageLogMajorizationReport rep;
    std::vector<double> lam_c_clamped(lam_c);
    for (double& v : lam_c_clamped) v = std::max(v, 0.0);
    const SpectrumVector x(lam_c_clamped), y(target);
    rep.log_majorization_holds = (variant == MajorizationVariant::Weak)
                                     ? log_majorizes_weak(x, y)
                                     : log_majorizes(x, y);

    rep.worst_margin = std::numeric_limits<double>::infinity();
    for (const auto& fn : f_family) {
        for (const auto& gauge : gauges) {
            NormCheckEntry e;
            e.fn = fn.name;
            e.gauge = gauge.name();
            e.lhs = apply_sorted(gauge, fn.fn, lam_c_clamped);
            double log_rhs = 0.0;
            for (std::size_t i = 0; i < lam_d.size(); ++i)
                log_rhs += fam.weights[i] * std::log(apply_sorted(gauge, fn.fn, lam_d[i]));
            e.rhs = std::exp(log_rhs);
            e.margin = e.rhs - e.lhs;
            e.ok = ineq_ok(e.lhs, e.rhs);
            rep.worst_margin = std::min(rep.worst_margin, e.margin);
            if (rep.log_majorization_holds && !e.ok) rep.falsified = true;
            rep.geometric_checks.push_back(std::move(e));
        }
    }
    for (const auto& fn : g_family) {
        for (const auto& gauge : gauges) {
            NormCheckEntry e;
            e.fn = fn.name;
            e.gauge = gauge.name();
            e.lhs = apply_sorted(gauge, fn.fn, lam_c_clamped);
            e.rhs = 0.0;
            for (std::size_t i = 0; i < lam_d.size(); ++i)
                e.rhs += fam.weights[i] * apply_sorted(gauge, fn.fn, lam_d[i]);
            e.margin = e.rhs - e.lhs;
            e.ok = ineq_ok(e.lhs, e.rhs);
            rep.worst_margin = std::min(rep.worst_margin, e.margin);
            if (rep.log_majorization_holds && !e.ok) rep.falsified = true;
            rep.arithmetic_checks.push_back(std::move(e));
        }
    }
    return rep;
}

namespace {

// One T-transform: mixes two entries, preserving the sum; the result is
// majorized by the input.
void t_transform(std::vector<double>& v, RngStream& rng) {
    if (v.size() < 2) return;
    const std::size_t i = static_cast<std::size_t>(rng.next_below(v.size()));
    std::size_t j = static_cast<std::size_t>(rng.next_below(v.size()));
    while (j == i) j = static_cast<std::size_t>(rng.next_below(v.size()));
    const double t = rng.next_double();
    const double a = v[i], b = v[j];
    v[i] = t * a + (1.0 - t) * b;
    v[j] = (1.0 - t) * a + t * b;
}

HermitianTensor tensor_with_spectrum(const Shape& shape, std::vector<double> spectrum,
                                     RngStream& rng) {
    std::sort(spectrum.begin(), spectrum.end(), std::greater<double>());
    const Index d = shape.unfolded_dim();
    ComplexMatrix u = random_unitary_matrix(d, rng);
    ComplexMatrix m(d, d);
    for (Index r = 0; r < d; ++r)
        for (Index c = 0; c < d; ++c) {
            Complex s = 0.0;
            for (Index i = 0; i < d; ++i)
                s += u(r, i) * spectrum[static_cast<std::size_t>(i)] * std::conj(u(c, i));
            m(r, c) = s;
        }
    return HermitianTensor(SquareTensor(shape, std::move(m)));
}

std::vector<double> random_weights(std::size_t n, RngStream& rng) {
    std::vector<double> w(n);
    double sum = 0.0;
    for (double& v : w) {
        v = 0.1 + rng.next_double();
        sum += v;
    }
    for (double& v : w) v /= sum;
    // Renormalize exactly against accumulated rounding.
    double s2 = 0.0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) s2 += w[i];
    w.back() = 1.0 - s2;
    return w;
}

} // namespace

MajorizationInstance make_average_majorization_instance(const Shape& shape,
                                                        int family_size, RngStream& rng,
                                                        MajorizationVariant variant) {
    const Index d = shape.unfolded_dim();
    std::vector<HermitianTensor> fam;
    fam.reserve(static_cast<std::size_t>(family_size));
    for (int i = 0; i < family_size; ++i)
        fam.push_back(HermitianTensor::random_spectrum(shape, rng, -1.0, 2.0));
    auto weights = random_weights(static_cast<std::size_t>(family_size), rng);
    DiscreteMeasureFamily family(fam, weights);

    std::vector<double> avg(static_cast<std::size_t>(d), 0.0);
    for (std::size_t i = 0; i < family.tensors.size(); ++i) {
        const auto lam = eig_hermitian(family.tensors[i]).eigenvalues;
        for (std::size_t j = 0; j < avg.size(); ++j)
            avg[j] += family.weights[i] * lam[j];
    }
    for (int rep = 0; rep < 3; ++rep) t_transform(avg, rng);
    if (variant == MajorizationVariant::Weak) {
        const double eps = 0.05 * rng.next_double();
        for (double& v : avg) v -= eps;
    }
    return {tensor_with_spectrum(shape, avg, rng), family};
}

MajorizationInstance make_average_log_majorization_instance(const Shape& shape,
                                                            int family_size, RngStream& rng,
                                                            MajorizationVariant variant) {
    const Index d = shape.unfolded_dim();
    std::vector<HermitianTensor> fam;
    fam.reserve(static_cast<std::size_t>(family_size));
    for (int i = 0; i < family_size; ++i)
        fam.push_back(HermitianTensor::random_spectrum(shape, rng, 0.2, 3.0));
    auto weights = random_weights(static_cast<std::size_t>(family_size), rng);
    DiscreteMeasureFamily family(fam, weights);

    std::vector<double> log_avg(static_cast<std::size_t>(d), 0.0);
    for (std::size_t i = 0; i < family.tensors.size(); ++i) {
        const auto lam = eig_hermitian(family.tensors[i]).eigenvalues;
        for (std::size_t j = 0; j < log_avg.size(); ++j)
            log_avg[j] += family.weights[i] * std::log(lam[j]);
    }
    for (int rep = 0; rep < 3; ++rep) t_transform(log_avg, rng);
    if (variant == MajorizationVariant::Weak) {
        const double eta = std::log(1.0 - 0.3 * rng.next_double());
        for (double& v : log_avg) v += eta;
    }
    std::vector<double> spectrum(log_avg.size());
    for (std::size_t j = 0; j < log_avg.size(); ++j) spectrum[j] = std::exp(log_avg[j]);
    return {tensor_with_spectrum(shape, spectrum, rng), family};
}

} // namespace ttb

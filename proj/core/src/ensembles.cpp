#include "ttb/ensembles.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ttb/config.hpp"
#include "ttb/errors.hpp"
#include "ttb/json_out.hpp"
#include "ttb/norms.hpp"
#include "ttb/parallel.hpp"
#include "ttb/rng.hpp"
#include "ttb/spectral.hpp"
#include "ttb/stats.hpp"

namespace ttb {

namespace {

constexpr std::uint64_t kStreamStride = 1024; // summand slots per trial
constexpr std::uint64_t kStatsSalt = 0x53544154ULL;

// || g(S) ||_(k) evaluated on the eigenvalues of S.
double g_norm_from_eigenvalues(const std::vector<double>& lambda,
                               const PolynomialSpec& g, Index k) {
    std::vector<double> mapped(lambda.size());
    for (std::size_t i = 0; i < lambda.size(); ++i) mapped[i] = std::abs(g(lambda[i]));
    std::sort(mapped.begin(), mapped.end(), std::greater<double>());
    double s = 0.0;
    for (Index i = 0; i < k && i < static_cast<Index>(mapped.size()); ++i)
        s += mapped[static_cast<std::size_t>(i)];
    return s;
}

} // namespace

void EnsembleSpec::validate() const {
    if (shape.unfolded_dim() < 1) throw ConfigError("EnsembleSpec: shape required");
    if (m < 1) throw ConfigError("EnsembleSpec: m must be >= 1");
    switch (kind) {
        case Kind::BoundedPSD:
            if (R <= 0.0) throw ConfigError("EnsembleSpec: R must be positive");
            break;
        case Kind::ZeroMeanSubexp: {
            if (!A) throw ConfigError("EnsembleSpec: ZeroMeanSubexp requires A");
            if (A->shape() != shape)
                throw ConfigError("EnsembleSpec: A must match the ensemble shape");
            const auto lam = eig_hermitian(*A).eigenvalues;
            if (lam.back() < -1e-12)
                throw ConfigError("EnsembleSpec: A must be positive semidefinite");
            break;
        }
        case Kind::DiagonalRademacher:
            if (scale <= 0.0) throw ConfigError("EnsembleSpec: scale must be positive");
            break;
        case Kind::WishartLike:
            if (dof < 1 || scale <= 0.0)
                throw ConfigError("EnsembleSpec: WishartLike needs dof >= 1, scale > 0");
            break;
    }
    if (normalization && *normalization <= 0.0)
        throw ConfigError("EnsembleSpec: normalization must be positive");
}

std::string EnsembleSpec::kind_name() const {
    switch (kind) {
        case Kind::BoundedPSD: return "bounded_psd";
        case Kind::ZeroMeanSubexp: return "zero_mean_subexp";
        case Kind::DiagonalRademacher: return "diagonal_rademacher";
        case Kind::WishartLike: return "wishart_like";
    }
    return "?";
}

std::string EnsembleSpec::to_json() const {
    nlohmann::json j;
    j["kind"] = kind_name();
    j["mode_dims"] = shape.mode_dims();
    j["m"] = m;
    switch (kind) {
        case Kind::BoundedPSD: j["R"] = R; break;
        case Kind::ZeroMeanSubexp: j["A"] = nlohmann::json::parse(tensor_to_json(A->base())); break;
        case Kind::DiagonalRademacher: j["scale"] = scale; break;
        case Kind::WishartLike: j["dof"] = dof; j["scale"] = scale; break;
    }
    if (normalization) j["normalization"] = *normalization;
    return j.dump();
}

EnsembleSpec EnsembleSpec::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("ensemble spec: ") + e.what());
    }
    EnsembleSpec spec;
    const std::string kind = j.value("kind", "");
    if (!j.contains("mode_dims")) throw ConfigError("ensemble spec: mode_dims required");
    spec.shape = Shape(j["mode_dims"].get<std::vector<Index>>());
    spec.m = j.value("m", 1);
    if (kind == "bounded_psd") {
        spec.kind = Kind::BoundedPSD;
        spec.R = j.value("R", 1.0);
    } else if (kind == "zero_mean_subexp") {
        spec.kind = Kind::ZeroMeanSubexp;
        if (j.contains("A_scaled_identity")) {
            const double a = j["A_scaled_identity"].get<double>();
            HermitianTensor id = HermitianTensor::identity(spec.shape);
            id *= a;
            spec.A = id;
        } else if (j.contains("A")) {
            spec.A = HermitianTensor(tensor_from_json(j["A"].dump()));
        } else {
            throw ConfigError("ensemble spec: zero_mean_subexp needs A or A_scaled_identity");
        }
    } else if (kind == "diagonal_rademacher") {
        spec.kind = Kind::DiagonalRademacher;
        spec.scale = j.value("scale", 1.0);
    } else if (kind == "wishart_like") {
        spec.kind = Kind::WishartLike;
        spec.dof = j.value("dof", 1);
        spec.scale = j.value("scale", 1.0);
    } else {
        throw ConfigError("ensemble spec: unknown kind '" + kind + "'");
    }
    if (j.contains("normalization") && !j["normalization"].is_null())
        spec.normalization = j["normalization"].get<double>();
    spec.validate();
    return spec;
}

EnsembleSpec EnsembleSpec::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("ensemble spec: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json(buf.str());
}

namespace {

HermitianTensor sample_raw(const EnsembleSpec& spec, RngStream& rng) {
    const Shape& shape = spec.shape;
    const Index d = shape.unfolded_dim();
    HermitianTensor x = HermitianTensor::zero(shape);
    switch (spec.kind) {
        case EnsembleSpec::Kind::BoundedPSD:
            x = HermitianTensor::random_spectrum(shape, rng, 0.0, spec.R);
            break;
        case EnsembleSpec::Kind::ZeroMeanSubexp: {
            // X = A Z A with Z a random Hermitian contraction. The moment
            // condition X^p <= p! A^2 / 2 is certified spectrally for
            // p in {2, 3, 4}; violating draws are shrunk until it holds.
            HermitianTensor z = HermitianTensor::random_spectrum(shape, rng, -1.0, 1.0);
            const ComplexMatrix& am = spec.A->matrix();
            ComplexMatrix xm = am * z.matrix() * am;
            x = HermitianTensor(SquareTensor(shape, std::move(xm)));
            const ComplexMatrix a2 = am * am;
            for (int attempt = 0; attempt < 64; ++attempt) {
                bool ok = true;
                double fact = 1.0;
                ComplexMatrix xp = x.matrix();
                for (int p = 2; p <= 4 && ok; ++p) {
                    fact *= p;
                    xp = xp * x.matrix();
                    ComplexMatrix gap = a2;
                    gap *= Complex{fact / 2.0, 0.0};
                    gap -= xp;
                    const auto lam = eig_hermitian(
                        HermitianTensor(SquareTensor(shape, gap), 1e-6)).eigenvalues;
                    if (lam.back() < -1e-9) ok = false;
                }
                if (ok) break;
                x *= 0.9;
            }
            break;
        }
        case EnsembleSpec::Kind::DiagonalRademacher: {
            std::vector<double> diag(static_cast<std::size_t>(d));
            for (double& v : diag) v = rng.bernoulli(0.5) ? spec.scale : -spec.scale;
            x = HermitianTensor::diagonal(shape, diag);
            break;
        }
        case EnsembleSpec::Kind::WishartLike: {
            ComplexMatrix acc(d, d);
            for (int t = 0; t < spec.dof; ++t) {
                std::vector<Complex> v(static_cast<std::size_t>(d));
                for (auto& z : v) z = Complex{rng.gaussian(), rng.gaussian()};
                for (Index r = 0; r < d; ++r)
                    for (Index c = 0; c < d; ++c)
                        acc(r, c) += v[static_cast<std::size_t>(r)] *
                                     std::conj(v[static_cast<std::size_t>(c)]);
            }
            acc *= Complex{spec.scale / spec.dof, 0.0};
            x = HermitianTensor(SquareTensor(shape, std::move(acc)));
            break;
        }
    }
    if (spec.normalization) x *= *spec.normalization;
    return x;
}

} // namespace

HermitianTensor sample(const EnsembleSpec& spec, RngStream& rng) {
    spec.validate();
    return sample_raw(spec, rng);
}

HermitianTensor sample_trial(const EnsembleSpec& spec, std::uint64_t seed,
                             std::int64_t trial, int j) {
    std::int64_t base = trial;
    bool negate = false;
    if (spec.kind == EnsembleSpec::Kind::ZeroMeanSubexp) {
        base = trial - (trial & 1);
        negate = (trial & 1) != 0;
    }
    RngStream rng(seed, static_cast<std::uint64_t>(base) * kStreamStride +
                            static_cast<std::uint64_t>(j));
    HermitianTensor x = sample_raw(spec, rng);
    if (negate) x *= -1.0;
    return x;
}

namespace {

// Shared Monte Carlo pass: per-trial Ky Fan value of g(S) and the spectrum
// of S, stored by trial index so merges are order-independent.
void run_trials(const EnsembleSpec& spec, const PolynomialSpec& g, Index k,
                std::int64_t trials, std::uint64_t seed, int workers,
                std::vector<double>& values, std::vector<std::vector<double>>& spectra) {
    values.assign(static_cast<std::size_t>(trials), 0.0);
    spectra.assign(static_cast<std::size_t>(trials), {});
    parallel_for(0, trials, workers, [&](std::int64_t trial) {
        HermitianTensor s = sample_trial(spec, seed, trial, 0);
        for (int j = 1; j < spec.m; ++j) s += sample_trial(spec, seed, trial, j);
        auto lam = eig_hermitian(s).eigenvalues;
        values[static_cast<std::size_t>(trial)] = g_norm_from_eigenvalues(lam, g, k);
        spectra[static_cast<std::size_t>(trial)] = std::move(lam);
    });
}

} // namespace

TailEstimate estimate_tail(const EnsembleSpec& spec, const PolynomialSpec& g, Index k,
                           double theta, std::int64_t trials, std::uint64_t seed,
                           int workers, std::optional<double> condition_t) {
    spec.validate();
    if (trials < 1) throw RangeError("estimate_tail: trials must be >= 1");
    if (k < 1 || k > spec.shape.unfolded_dim())
        throw RangeError("estimate_tail: k out of range");

    std::vector<double> values;
    std::vector<std::vector<double>> spectra;
    run_trials(spec, g, k, trials, seed, workers, values, spectra);

    TailEstimate est;
    est.trials = trials;
    for (double v : values)
        if (v >= theta) ++est.hits;
    est.point_estimate = static_cast<double>(est.hits) / static_cast<double>(trials);
    est.ci_upper_95 = clopper_pearson_upper(est.hits, trials);
    if (condition_t) {
        std::int64_t holds = 0;
        for (const auto& lam : spectra)
            if (psd_order_condition_from_eigenvalues(lam, g, *condition_t).holds) ++holds;
        est.condition_holds_rate = static_cast<double>(holds) / static_cast<double>(trials);
    } else {
        est.condition_holds_rate = 1.0;
    }
    return est;
}

CertificationReport certify(const EnsembleSpec& spec, const PolynomialSpec& g, Index k,
                            const std::vector<double>& theta_grid, BoundKind bound_kind,
                            std::int64_t trials, std::uint64_t seed, int workers,
                            double c_latala, std::int64_t statistic_samples) {
    spec.validate();
    if (theta_grid.empty()) throw ConfigError("certify: empty theta grid");
    if (trials < 1) throw RangeError("certify: trials must be >= 1");
    if (bound_kind == BoundKind::Bernstein && spec.kind != EnsembleSpec::Kind::ZeroMeanSubexp)
        throw ConfigError("certify: Bernstein requires a zero-mean ensemble");
    if (bound_kind == BoundKind::Bernstein && spec.normalization.value_or(1.0) > 1.0)
        throw ConfigError("certify: Bernstein moment hypothesis breaks under upscaling");
    if (bound_kind == BoundKind::Chernoff && spec.kind != EnsembleSpec::Kind::BoundedPSD)
        throw ConfigError("certify: Chernoff requires a bounded PSD ensemble");

    CertificationReport rep;
    rep.ensemble = spec.to_json();
    rep.polynomial = g.to_string();
    rep.k = k;
    rep.trials = trials;
    rep.seed = seed;
    rep.workers = workers;
    rep.bound_kind = bound_kind;
    rep.c_latala = c_latala;
    rep.statistic_samples = statistic_samples;

    // Statistics from a dedicated sample stream (kept even so the paired
    // zero-mean construction stays exactly centered).
    std::int64_t n_stat = std::max<std::int64_t>(statistic_samples, 2);
    if (n_stat % 2) ++n_stat;
    std::vector<SquareTensor> stat_samples;
    stat_samples.reserve(static_cast<std::size_t>(n_stat));
    for (std::int64_t i = 0; i < n_stat; ++i)
        stat_samples.push_back(sample_trial(spec, seed ^ kStatsSalt, i, 0).base());
    rep.sigma1_bar = sigma1_bar_statistic(stat_samples);
    if (bound_kind == BoundKind::Bernstein) {
        rep.upsilon = upsilon_statistic(stat_samples).value;
        const ComplexMatrix a2 = spec.A->matrix() * spec.A->matrix();
        rep.sigma1_A_sq = operator_norm(SquareTensor(spec.shape, a2));
    } else {
        rep.xi = xi_statistic(stat_samples).value;
    }

    // Effective parameters of the summands as actually drawn.
    const double gamma = spec.normalization.value_or(1.0);

    std::vector<double> values;
    std::vector<std::vector<double>> spectra;
    run_trials(spec, g, k, trials, seed, workers, values, spectra);

    rep.rows.reserve(theta_grid.size());
    for (double theta : theta_grid) {
        CertificationRow row;
        row.theta = theta;

        BoundReport bound;
        if (bound_kind == BoundKind::Chernoff) {
            ChernoffParams prm;
            prm.R = spec.R * gamma;
            prm.m = spec.m;
            prm.k = k;
            prm.theta = theta;
            prm.c_latala = c_latala;
            prm.sigma1_bar.assign(static_cast<std::size_t>(spec.m), rep.sigma1_bar);
            prm.xi.assign(static_cast<std::size_t>(spec.m), rep.xi);
            bound = chernoff_bound(prm, g, make_chernoff_grid(prm, g, 512));
        } else if (bound_kind == BoundKind::Bernstein) {
            BernsteinParams prm;
            prm.m = spec.m;
            prm.k = k;
            prm.theta = theta;
            prm.c_latala = c_latala;
            prm.sigma1_Aj_sq.assign(static_cast<std::size_t>(spec.m),
                                    rep.sigma1_A_sq * gamma * gamma);
            prm.upsilon.assign(static_cast<std::size_t>(spec.m), rep.upsilon);
            bound = bernstein_bound(prm, g, make_bernstein_grid(prm, g, 512));
        } else {
            throw ConfigError("certify: generic bound needs caller-supplied mgf estimates");
        }

        row.analytic_bound = bound.bound_at_opt;
        row.t_opt = bound.t_opt;
        row.first_order_residual = bound.first_order_residual;

        for (double v : values)
            if (v >= theta) ++row.hits;
        row.point_estimate = static_cast<double>(row.hits) / static_cast<double>(trials);
        row.ci_upper_95 = clopper_pearson_upper(row.hits, trials);

        const double t_cond = bound.t_opt ? *bound.t_opt
                                          : bound.t_grid[bound.t_grid.size() / 2];
        std::int64_t holds = 0;
        for (const auto& lam : spectra)
            if (psd_order_condition_from_eigenvalues(lam, g, t_cond).holds) ++holds;
        row.condition_holds_rate = static_cast<double>(holds) / static_cast<double>(trials);

        row.comparable = row.analytic_bound <= 1.0;
        row.violation = row.comparable && row.ci_upper_95 > row.analytic_bound;
        if (row.violation) rep.any_violation = true;
        rep.rows.push_back(row);
    }
    return rep;
}

std::string CertificationReport::to_json() const {
    JsonWriter w;
    w.begin_object();
    w.key("ensemble").raw(ensemble);
    w.key("polynomial").value(polynomial);
    w.key("k").value(static_cast<std::int64_t>(k));
    w.key("trials").value(trials);
    w.key("seed").value(static_cast<std::uint64_t>(seed));
    w.key("bound_kind").value(bound_kind == BoundKind::Chernoff
                                  ? "chernoff"
                                  : (bound_kind == BoundKind::Bernstein ? "bernstein"
                                                                        : "generic"));
    w.key("c_latala").value(c_latala);
    w.key("statistics").begin_object();
    w.key("samples").value(statistic_samples);
    w.key("sigma1_bar").value(sigma1_bar);
    if (bound_kind == BoundKind::Bernstein) {
        w.key("upsilon").value(upsilon);
        w.key("sigma1_A_sq").value(sigma1_A_sq);
    } else {
        w.key("xi").value(xi);
    }
    w.end_object();
    w.key("rows").begin_array();
    for (const auto& r : rows) {
        w.begin_object();
        w.key("theta").value(r.theta);
        w.key("analytic_bound").value(r.analytic_bound);
        if (r.t_opt) w.key("t_opt").value(*r.t_opt);
        else w.key("t_opt").null();
        w.key("first_order_residual").value(r.first_order_residual);
        w.key("hits").value(r.hits);
        w.key("point_estimate").value(r.point_estimate);
        w.key("ci_upper_95").value(r.ci_upper_95);
        w.key("condition_holds_rate").value(r.condition_holds_rate);
        w.key("comparable").value(r.comparable);
        w.key("violation").value(r.violation);
        w.end_object();
    }
    w.end_array();
    w.key("any_violation").value(any_violation);
    w.end_object();
    return w.str();
}

std::string CertificationReport::curve_csv() const {
    std::string out = "theta,analytic_bound,point_estimate,ci_upper_95\n";
    for (const auto& r : rows) {
        out += JsonWriter::format_double(r.theta);
        out += ',';
        out += JsonWriter::format_double(r.analytic_bound);
        out += ',';
        out += JsonWriter::format_double(r.point_estimate);
        out += ',';
        out += JsonWriter::format_double(r.ci_upper_95);
        out += '\n';
    }
    return out;
}

} // namespace ttb

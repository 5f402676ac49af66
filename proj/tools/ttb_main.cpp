// ttb command line: verification drivers, bound evaluation, Monte Carlo
// certification, and the acceptance suite.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ttb/acceptance.hpp"
#include "ttb/config.hpp"
#include "ttb/ensembles.hpp"
#include "ttb/errors.hpp"
#include "ttb/hgsp.hpp"
#include "ttb/json_out.hpp"
#include "ttb/majorization.hpp"
#include "ttb/multivariate.hpp"
#include "ttb/norms.hpp"
#include "ttb/rng.hpp"
#include "ttb/spectral.hpp"
#include "ttb/tail_bounds.hpp"
#include "ttb/version.hpp"

namespace {

using namespace ttb;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitViolation = 2;

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open output file " + path);
    out << text;
}

void write_csv(const std::string& text, const std::string& path) {
    if (path.empty()) return;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open csv file " + path);
    out << text;
}

int resolve_workers(int workers_flag) {
    if (const char* env = std::getenv("TTB_WORKERS")) {
        const int env_workers = std::atoi(env);
        if (env_workers >= 1) return env_workers;
    }
    return workers_flag;
}

Shape parse_dims(const std::vector<Index>& dims) {
    if (dims.empty()) throw ConfigError("--dims requires at least one mode");
    return Shape(dims);
}

// Shared report envelope: version stamp plus the resolved configuration.
class ReportBuilder {
public:
    explicit ReportBuilder(const std::string& command) {
        w_.begin_object();
        w_.key("version").value(kVersion);
        w_.key("command").value(command);
    }
    JsonWriter& writer() { return w_; }
    std::string finish() {
        w_.end_object();
        return w_.str();
    }

private:
    JsonWriter w_;
};

std::string bound_report_json(const BoundReport& rep, const std::string& kind) {
    JsonWriter w;
    w.begin_object();
    w.key("kind").value(kind);
    w.key("t_grid").value(rep.t_grid);
    w.key("values").value(rep.values);
    if (rep.t_opt) w.key("t_opt").value(*rep.t_opt);
    else w.key("t_opt").null();
    w.key("bound_at_opt").value(rep.bound_at_opt);
    w.key("convexity_ok").value(rep.convexity_ok);
    w.key("first_order_residual").value(rep.first_order_residual);
    w.key("side_condition_ok").value(rep.side_condition_ok);
    w.end_object();
    return w.str();
}

std::string bound_report_csv(const BoundReport& rep) {
    std::string out = "t,bound\n";
    for (std::size_t i = 0; i < rep.t_grid.size(); ++i) {
        out += JsonWriter::format_double(rep.t_grid[i]);
        out += ',';
        out += JsonWriter::format_double(rep.values[i]);
        out += '\n';
    }
    return out;
}

// --- verify golden-thompson --------------------------------------------------

struct GoldenThompsonArgs {
    std::vector<Index> dims = {2, 2};
    int factors = 2;
    int trials = 20;
    std::uint64_t seed = 1;
    std::string gauge_json = R"({"kind":"kyfan","k":1})";
    std::string function = "x";
    double quad_T = 12.0;
    int quad_density = 32;
    std::string out_path;
};

int run_golden_thompson(const GoldenThompsonArgs& args) {
    const Shape shape = parse_dims(args.dims);
    const GaugeSpec gauge = GaugeSpec::from_json(args.gauge_json);
    const ScalarFunction f = scalar_function_by_name(args.function);
    const BetaDensity quad(0.0, args.quad_T, args.quad_density);

    ReportBuilder rb("verify golden-thompson");
    auto& w = rb.writer();
    w.key("config").begin_object();
    w.key("dims").begin_array();
    for (Index d : args.dims) w.value(static_cast<std::int64_t>(d));
    w.end_array();
    w.key("factors").value(args.factors);
    w.key("trials").value(args.trials);
    w.key("seed").value(static_cast<std::uint64_t>(args.seed));
    w.key("gauge").raw(gauge.to_json());
    w.key("function").value(f.name);
    w.key("quad_T").value(args.quad_T);
    w.key("quad_density").value(args.quad_density);
    w.end_object();

    int violations = 0;
    w.key("trials_detail").begin_array();
    for (int trial = 0; trial < args.trials; ++trial) {
        RngStream rng(args.seed, static_cast<std::uint64_t>(trial));
        std::vector<HermitianTensor> factors;
        for (int i = 0; i < args.factors; ++i)
            factors.push_back(HermitianTensor::random_spectrum(shape, rng, 0.3, 2.0));
        MultivariateEvaluator ev(factors, quad);
        const double lhs = ev.lhs(f, gauge);
        const double geo = ev.rhs_geometric(f, gauge);
        const double ari = ev.rhs_arithmetic(f, gauge);
        const bool ok = lhs <= geo + 1e-7 && lhs <= ari + 1e-7;
        if (!ok) ++violations;
        w.begin_object();
        w.key("trial").value(trial);
        w.key("lhs").value(lhs);
        w.key("rhs_geometric").value(geo);
        w.key("rhs_arithmetic").value(ari);
        w.key("margin").value(geo - lhs);
        w.key("ok").value(ok);
        w.end_object();
    }
    w.end_array();
    w.key("violations").value(violations);
    write_output(rb.finish(), args.out_path);
    return violations == 0 ? kExitOk : kExitViolation;
}

// --- verify lie-trotter -------------------------------------------------------

struct LieTrotterArgs {
    std::vector<Index> dims = {2, 2};
    int trials = 10;
    std::uint64_t seed = 1;
    std::vector<std::int64_t> steps = {10, 100, 1000};
    std::string out_path;
};

int run_lie_trotter(const LieTrotterArgs& args) {
    const Shape shape = parse_dims(args.dims);
    ReportBuilder rb("verify lie-trotter");
    auto& w = rb.writer();
    w.key("config").begin_object();
    w.key("trials").value(args.trials);
    w.key("seed").value(static_cast<std::uint64_t>(args.seed));
    w.end_object();

    int violations = 0;
    w.key("trials_detail").begin_array();
    for (int trial = 0; trial < args.trials; ++trial) {
        RngStream rng(args.seed, static_cast<std::uint64_t>(trial));
        HermitianTensor a = HermitianTensor::random(shape, rng);
        HermitianTensor b = HermitianTensor::random(shape, rng);
        a *= 0.6;
        b *= 0.6;
        w.begin_object();
        w.key("trial").value(trial);
        w.key("steps").begin_array();
        for (std::int64_t n : args.steps) {
            const auto res = lie_trotter_error({a, b}, n);
            if (res.error > res.bound) ++violations;
            w.begin_object();
            w.key("n").value(n);
            w.key("error").value(res.error);
            w.key("bound").value(res.bound);
            w.end_object();
        }
        w.end_array();
        w.end_object();
    }
    w.end_array();
    w.key("violations").value(violations);
    write_output(rb.finish(), args.out_path);
    return violations == 0 ? kExitOk : kExitViolation;
}

// --- verify majorization ------------------------------------------------------

struct MajorizationArgs {
    std::vector<Index> dims = {2, 2};
    std::string theorem = "weak"; // weak | full | weak-log | log
    int trials = 50;
    int family = 3;
    std::uint64_t seed = 1;
    std::string out_path;
};

int run_verify_majorization(const MajorizationArgs& args) {
    const Shape shape = parse_dims(args.dims);
    const std::vector<GaugeSpec> gauges = {GaugeSpec::ky_fan(1), GaugeSpec::ky_fan(2),
                                           GaugeSpec::schatten(1.0), GaugeSpec::schatten(2.0)};
    ReportBuilder rb("verify majorization");
    auto& w = rb.writer();
    w.key("config").begin_object();
    w.key("theorem").value(args.theorem);
    w.key("trials").value(args.trials);
    w.key("family").value(args.family);
    w.key("seed").value(static_cast<std::uint64_t>(args.seed));
    w.end_object();

    int held = 0, falsified = 0;
    double worst_margin = 1e300;
    w.key("instances").begin_array();
    for (int trial = 0; trial < args.trials; ++trial) {
        RngStream rng(args.seed, static_cast<std::uint64_t>(trial));
        bool hypothesis = false, bad = false;
        double margin = 0.0;
        if (args.theorem == "weak" || args.theorem == "full") {
            const auto variant = args.theorem == "weak" ? MajorizationVariant::Weak
                                                        : MajorizationVariant::Full;
            const std::vector<ScalarFunction> fns =
                args.theorem == "weak"
                    ? std::vector<ScalarFunction>{fn_exp(), fn_hinge(0.3)}
                    : std::vector<ScalarFunction>{fn_exp(), fn_hinge(0.3), fn_square(),
                                                  fn_abs()};
            const auto inst = make_average_majorization_instance(shape, args.family, rng,
                                                                 variant);
            const auto rep = verify_average_majorization(inst.c, inst.family, variant, fns,
                                                         gauges);
            hypothesis = rep.majorization_holds;
            bad = rep.falsified;
            margin = rep.worst_margin;
        } else if (args.theorem == "weak-log" || args.theorem == "log") {
            const auto variant = args.theorem == "weak-log" ? MajorizationVariant::Weak
                                                            : MajorizationVariant::Full;
            const std::vector<ScalarFunction> powers = {fn_power(0.5), fn_power(1.0),
                                                        fn_power(2.0), fn_power(3.0)};
            const auto inst = make_average_log_majorization_instance(shape, args.family,
                                                                     rng, variant);
            const auto rep = verify_average_log_majorization(inst.c, inst.family, variant,
                                                             powers, powers, gauges);
            hypothesis = rep.log_majorization_holds;
            bad = rep.falsified;
            margin = rep.worst_margin;
        } else {
            throw ConfigError("--theorem must be weak, full, weak-log, or log");
        }
        if (hypothesis) ++held;
        if (bad) ++falsified;
        worst_margin = std::min(worst_margin, margin);
        w.begin_object();
        w.key("trial").value(trial);
        w.key("hypothesis_holds").value(hypothesis);
        w.key("falsified").value(bad);
        w.key("worst_margin").value(margin);
        w.end_object();
    }
    w.end_array();
    w.key("held").value(held);
    w.key("falsified").value(falsified);
    w.key("worst_margin").value(worst_margin);
    write_output(rb.finish(), args.out_path);
    return falsified == 0 ? kExitOk : kExitViolation;
}

// --- verify lemmas -------------------------------------------------------------

struct LemmasArgs {
    std::vector<Index> dims = {2, 2};
    int trials = 200;
    std::uint64_t seed = 1;
    std::string out_path;
};

int run_verify_lemmas(const LemmasArgs& args) {
    const Shape shape = parse_dims(args.dims);
    ReportBuilder rb("verify lemmas");
    auto& w = rb.writer();
    w.key("config").begin_object();
    w.key("trials").value(args.trials);
    w.key("seed").value(static_cast<std::uint64_t>(args.seed));
    w.end_object();

    int violations = 0;
    for (int trial = 0; trial < args.trials; ++trial) {
        RngStream rng(args.seed, static_cast<std::uint64_t>(trial));
        const int m = 2 + (trial % 2);
        const double s = 1.0 + (trial / 2) % 2;
        const Index k = 1 + static_cast<Index>(trial % shape.unfolded_dim());
        std::vector<SquareTensor> cs;
        for (int j = 0; j < m; ++j) cs.push_back(SquareTensor::random(shape, rng));
        std::vector<double> p(static_cast<std::size_t>(m), static_cast<double>(m));
        if (!ky_fan_product_inequality_check(cs, s, p, k).holds) ++violations;
        std::vector<SquareTensor> hs;
        for (int j = 0; j < m; ++j) hs.push_back(HermitianTensor::random(shape, rng).base());
        if (!ky_fan_sum_inequality_check(hs, s, k).holds) ++violations;
    }
    w.key("violations").value(violations);
    write_output(rb.finish(), args.out_path);
    return violations == 0 ? kExitOk : kExitViolation;
}

// --- bound evaluation -----------------------------------------------------------

struct BoundArgs {
    std::string g_text = "0,1;1";
    Index k = 1;
    double theta = 1.0;
    double c_latala = config::kDefaultCLatala;
    int m = 1;
    int points = 512;
    // chernoff
    double R = 1.0;
    std::vector<double> sigma1_bar;
    std::vector<double> xi;
    // bernstein
    std::vector<double> sigma1_a2;
    std::vector<double> upsilon;
    // generic (Monte Carlo mgf estimates)
    std::string spec_path;
    std::int64_t mgf_samples = 500;
    std::uint64_t seed = 1;
    std::vector<double> t_grid;
    std::string out_path;
    std::string csv_path;
};

std::vector<double> broadcast(std::vector<double> v, int m, double fallback) {
    if (v.empty()) v.assign(static_cast<std::size_t>(m), fallback);
    if (v.size() == 1) v.assign(static_cast<std::size_t>(m), v.front());
    if (v.size() != static_cast<std::size_t>(m))
        throw ConfigError("per-summand statistic needs 1 or m values");
    return v;
}

int run_bound_chernoff(const BoundArgs& args) {
    const PolynomialSpec g = PolynomialSpec::parse(args.g_text);
    ChernoffParams prm;
    prm.R = args.R;
    prm.m = args.m;
    prm.k = args.k;
    prm.theta = args.theta;
    prm.c_latala = args.c_latala;
    prm.sigma1_bar = broadcast(args.sigma1_bar, args.m, 0.0);
    prm.xi = broadcast(args.xi, args.m, 0.0);
    const auto grid = args.t_grid.empty() ? make_chernoff_grid(prm, g, args.points)
                                          : args.t_grid;
    const auto rep = chernoff_bound(prm, g, grid);

    ReportBuilder rb("bound chernoff");
    auto& w = rb.writer();
    w.key("config").begin_object();
    w.key("g").value(g.to_string());
    w.key("R").value(prm.R);
    w.key("m").value(prm.m);
    w.key("k").value(static_cast<std::int64_t>(prm.k));
    w.key("theta").value(prm.theta);
    w.key("c_latala").value(prm.c_latala);
    w.key("sigma1_bar").value(prm.sigma1_bar);
    w.key("xi").value(prm.xi);
    w.end_object();
    w.key("report").raw(bound_report_json(rep, "chernoff"));
    write_output(rb.finish(), args.out_path);
    write_csv(bound_report_csv(rep), args.csv_path);
    return kExitOk;
}

int run_bound_bernstein(const BoundArgs& args) {
    const PolynomialSpec g = PolynomialSpec::parse(args.g_text);
    BernsteinParams prm;
    prm.m = args.m;
    prm.k = args.k;
    prm.theta = args.theta;
    prm.c_latala = args.c_latala;
    prm.sigma1_Aj_sq = broadcast(args.sigma1_a2, args.m, 0.0);
    prm.upsilon = broadcast(args.upsilon, args.m, 0.0);
    const auto grid = args.t_grid.empty() ? make_bernstein_grid(prm, g, args.points)
                                          : args.t_grid;
    const auto rep = bernstein_bound(prm, g, grid);

    ReportBuilder rb("bound bernstein");
    auto& w = rb.writer();
    w.key("config").begin_object();
    w.key("g").value(g.to_string());
    w.key("m").value(prm.m);
    w.key("k").value(static_cast<std::int64_t>(prm.k));
    w.key("theta").value(prm.theta);
    w.key("c_latala").value(prm.c_latala);
    w.key("sigma1_A_sq").value(prm.sigma1_Aj_sq);
    w.key("upsilon").value(prm.upsilon);
    w.end_object();
    w.key("report").raw(bound_report_json(rep, "bernstein"));
    write_output(rb.finish(), args.out_path);
    write_csv(bound_report_csv(rep), args.csv_path);
    return kExitOk;
}

int run_bound_generic(const BoundArgs& args) {
    if (args.spec_path.empty())
        throw ConfigError("bound generic needs --spec for the mgf estimates");
    const PolynomialSpec g = PolynomialSpec::parse(args.g_text);
    const EnsembleSpec spec = EnsembleSpec::from_json_file(args.spec_path);
    const int m = spec.m;
    const std::vector<double> p(static_cast<std::size_t>(m), static_cast<double>(m));

    // Monte Carlo estimates of E || exp(p_j l s t X_j) ||_(k) on a shared
    // sample set per summand.
    std::vector<std::vector<std::vector<double>>> sample_eigs(
        static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
        sample_eigs[static_cast<std::size_t>(j)].reserve(
            static_cast<std::size_t>(args.mgf_samples));
        for (std::int64_t i = 0; i < args.mgf_samples; ++i)
            sample_eigs[static_cast<std::size_t>(j)].push_back(
                eig_hermitian(sample_trial(spec, args.seed, i, j)).eigenvalues);
    }
    const Index k = args.k;
    auto mgf = [&](int j, int l, double t) {
        const double factor = p[static_cast<std::size_t>(j)] * l * g.s * t;
        double acc = 0.0;
        for (const auto& lam : sample_eigs[static_cast<std::size_t>(j)]) {
            double top = 0.0;
            for (Index i = 0; i < k; ++i)
                top += std::exp(factor * lam[static_cast<std::size_t>(i)]);
            acc += top;
        }
        return acc / static_cast<double>(sample_eigs[static_cast<std::size_t>(j)].size());
    };

    ChernoffParams grid_prm;
    grid_prm.R = spec.R > 0 ? spec.R : 1.0;
    grid_prm.m = m;
    grid_prm.k = k;
    grid_prm.theta = args.theta;
    const auto grid = args.t_grid.empty() ? make_chernoff_grid(grid_prm, g, args.points)
                                          : args.t_grid;
    const auto rep = generic_kyfan_tail_bound(g, mgf, p, k, args.theta, grid);

    ReportBuilder rb("bound generic");
    auto& w = rb.writer();
    w.key("config").begin_object();
    w.key("g").value(g.to_string());
    w.key("ensemble").raw(spec.to_json());
    w.key("k").value(static_cast<std::int64_t>(k));
    w.key("theta").value(args.theta);
    w.key("mgf_samples").value(args.mgf_samples);
    w.key("seed").value(static_cast<std::uint64_t>(args.seed));
    w.end_object();
    w.key("report").raw(bound_report_json(rep, "generic"));
    write_output(rb.finish(), args.out_path);
    write_csv(bound_report_csv(rep), args.csv_path);
    return kExitOk;
}

// --- montecarlo / certify / hgsp-cov ---------------------------------------------

struct MonteCarloArgs {
    std::string spec_path;
    std::string g_text = "0,1;1";
    Index k = 1;
    std::vector<double> thetas;
    std::int64_t trials = 1000;
    std::uint64_t seed = 1;
    int workers = 1;
    std::optional<double> condition_t;
    std::string out_path;
    std::string csv_path;
};

int run_montecarlo(const MonteCarloArgs& args) {
    const EnsembleSpec spec = EnsembleSpec::from_json_file(args.spec_path);
    const PolynomialSpec g = PolynomialSpec::parse(args.g_text);
    if (args.thetas.empty()) throw ConfigError("montecarlo needs at least one --theta");
    const int workers = resolve_workers(args.workers);

    ReportBuilder rb("montecarlo");
    auto& w = rb.writer();
    w.key("config").begin_object();
    w.key("ensemble").raw(spec.to_json());
    w.key("g").value(g.to_string());
    w.key("k").value(static_cast<std::int64_t>(args.k));
    w.key("trials").value(args.trials);
    w.key("seed").value(static_cast<std::uint64_t>(args.seed));
    w.end_object();

    std::string csv = "theta,point_estimate,ci_upper_95,condition_holds_rate\n";
    w.key("estimates").begin_array();
    for (double theta : args.thetas) {
        const auto est = estimate_tail(spec, g, args.k, theta, args.trials, args.seed,
                                       workers, args.condition_t);
        w.begin_object();
        w.key("theta").value(theta);
        w.key("trials").value(est.trials);
        w.key("hits").value(est.hits);
        w.key("point_estimate").value(est.point_estimate);
        w.key("ci_upper_95").value(est.ci_upper_95);
        w.key("condition_holds_rate").value(est.condition_holds_rate);
        w.end_object();
        csv += JsonWriter::format_double(theta);
        csv += ',';
        csv += JsonWriter::format_double(est.point_estimate);
        csv += ',';
        csv += JsonWriter::format_double(est.ci_upper_95);
        csv += ',';
        csv += JsonWriter::format_double(est.condition_holds_rate);
        csv += '\n';
    }
    w.end_array();
    write_output(rb.finish(), args.out_path);
    write_csv(csv, args.csv_path);
    return kExitOk;
}

struct CertifyArgs {
    std::string spec_path;
    std::string g_text = "0,1;1";
    std::string bound_kind = "chernoff";
    Index k = 1;
    std::vector<double> thetas;
    std::int64_t trials = 1000;
    std::int64_t stat_samples = 2000;
    double c_latala = config::kDefaultCLatala;
    std::uint64_t seed = 1;
    int workers = 1;
    std::string out_path;
    std::string csv_path;
};

int run_certify(const CertifyArgs& args) {
    const EnsembleSpec spec = EnsembleSpec::from_json_file(args.spec_path);
    const PolynomialSpec g = PolynomialSpec::parse(args.g_text);
    if (args.thetas.empty()) throw ConfigError("certify needs at least one --theta");
    BoundKind kind;
    if (args.bound_kind == "chernoff") kind = BoundKind::Chernoff;
    else if (args.bound_kind == "bernstein") kind = BoundKind::Bernstein;
    else throw ConfigError("--bound must be chernoff or bernstein");

    const auto rep = certify(spec, g, args.k, args.thetas, kind, args.trials, args.seed,
                             resolve_workers(args.workers), args.c_latala,
                             args.stat_samples);

    ReportBuilder rb("certify");
    auto& w = rb.writer();
    w.key("report").raw(rep.to_json());
    write_output(rb.finish(), args.out_path);
    write_csv(rep.curve_csv(), args.csv_path);
    return rep.any_violation ? kExitViolation : kExitOk;
}

struct HgspArgs {
    std::string spec_path;
    double h0 = 0.5;
    double h1 = 0.5;
    Index k = 1;
    std::vector<double> thetas;
    std::int64_t trials = 1000;
    std::int64_t stat_samples = 2000;
    double c_latala = config::kDefaultCLatala;
    std::uint64_t seed = 1;
    int workers = 1;
    std::string out_path;
    std::string csv_path;
};

int run_hgsp_cov(const HgspArgs& args) {
    const EnsembleSpec spec = EnsembleSpec::from_json_file(args.spec_path);
    if (args.thetas.empty()) throw ConfigError("hgsp-cov needs at least one theta");
    const auto rep = covariance_tail_bound(spec, args.h0, args.h1, args.k, args.thetas,
                                           args.trials, args.seed,
                                           resolve_workers(args.workers), args.c_latala,
                                           args.stat_samples);
    ReportBuilder rb("hgsp-cov");
    auto& w = rb.writer();
    w.key("config").begin_object();
    w.key("h0").value(args.h0);
    w.key("h1").value(args.h1);
    w.end_object();
    w.key("report").raw(rep.to_json());
    write_output(rb.finish(), args.out_path);
    write_csv(rep.curve_csv(), args.csv_path);
    return rep.any_violation ? kExitViolation : kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"tensor tail-bound verification toolkit"};
    app.require_subcommand(1);

    // verify group
    auto* verify = app.add_subcommand("verify", "run inequality verifiers");
    verify->require_subcommand(1);

    GoldenThompsonArgs gt;
    auto* gt_cmd = verify->add_subcommand("golden-thompson",
                                          "multivariate tensor norm inequalities");
    gt_cmd->add_option("--dims", gt.dims, "mode dimensions");
    gt_cmd->add_option("--factors", gt.factors, "number of PD factors");
    gt_cmd->add_option("--trials", gt.trials, "random instances");
    gt_cmd->add_option("--seed", gt.seed, "rng seed");
    gt_cmd->add_option("--gauge", gt.gauge_json, "gauge spec json");
    gt_cmd->add_option("--function", gt.function, "catalog function name");
    gt_cmd->add_option("--quad-T", gt.quad_T, "quadrature truncation");
    gt_cmd->add_option("--quad-density", gt.quad_density, "nodes per unit");
    gt_cmd->add_option("--out", gt.out_path, "output json path");

    LieTrotterArgs lt;
    auto* lt_cmd = verify->add_subcommand("lie-trotter", "product formula error bound");
    lt_cmd->add_option("--dims", lt.dims, "mode dimensions");
    lt_cmd->add_option("--trials", lt.trials, "random pairs");
    lt_cmd->add_option("--seed", lt.seed, "rng seed");
    lt_cmd->add_option("--steps", lt.steps, "step counts");
    lt_cmd->add_option("--out", lt.out_path, "output json path");

    MajorizationArgs mj;
    auto* mj_cmd = verify->add_subcommand("majorization", "average majorization theorems");
    mj_cmd->add_option("--dims", mj.dims, "mode dimensions");
    mj_cmd->add_option("--theorem", mj.theorem, "weak | full | weak-log | log");
    mj_cmd->add_option("--trials", mj.trials, "instances");
    mj_cmd->add_option("--family", mj.family, "family size");
    mj_cmd->add_option("--seed", mj.seed, "rng seed");
    mj_cmd->add_option("--out", mj.out_path, "output json path");

    LemmasArgs lm;
    auto* lm_cmd = verify->add_subcommand("lemmas", "ky fan product/sum lemmas");
    lm_cmd->add_option("--dims", lm.dims, "mode dimensions");
    lm_cmd->add_option("--trials", lm.trials, "instances");
    lm_cmd->add_option("--seed", lm.seed, "rng seed");
    lm_cmd->add_option("--out", lm.out_path, "output json path");

    // bound group
    auto* bound = app.add_subcommand("bound", "evaluate analytic bound curves");
    bound->require_subcommand(1);

    BoundArgs bc;
    auto* bc_cmd = bound->add_subcommand("chernoff", "generalized chernoff curve");
    bc_cmd->add_option("--g", bc.g_text, "polynomial 'a0,a1,...;s'");
    bc_cmd->add_option("--R", bc.R, "eigenvalue cap");
    bc_cmd->add_option("--m", bc.m, "summand count");
    bc_cmd->add_option("--k", bc.k, "ky fan index");
    bc_cmd->add_option("--theta", bc.theta, "tail threshold");
    bc_cmd->add_option("--C", bc.c_latala, "abstract constant");
    bc_cmd->add_option("--sigma1-bar", bc.sigma1_bar, "per-summand sigma1 bar");
    bc_cmd->add_option("--xi", bc.xi, "per-summand xi");
    bc_cmd->add_option("--points", bc.points, "grid points");
    bc_cmd->add_option("--out", bc.out_path, "output json path");
    bc_cmd->add_option("--csv", bc.csv_path, "curve csv path");

    BoundArgs bb;
    auto* bb_cmd = bound->add_subcommand("bernstein", "generalized bernstein curve");
    bb_cmd->add_option("--g", bb.g_text, "polynomial 'a0,a1,...;s'");
    bb_cmd->add_option("--m", bb.m, "summand count");
    bb_cmd->add_option("--k", bb.k, "ky fan index");
    bb_cmd->add_option("--theta", bb.theta, "tail threshold");
    bb_cmd->add_option("--C", bb.c_latala, "abstract constant");
    bb_cmd->add_option("--sigma1-a2", bb.sigma1_a2, "per-summand sigma1(A^2)");
    bb_cmd->add_option("--upsilon", bb.upsilon, "per-summand upsilon");
    bb_cmd->add_option("--points", bb.points, "grid points");
    bb_cmd->add_option("--out", bb.out_path, "output json path");
    bb_cmd->add_option("--csv", bb.csv_path, "curve csv path");

    BoundArgs bg;
    auto* bg_cmd = bound->add_subcommand("generic", "ky fan tail bound with mc estimates");
    bg_cmd->add_option("--g", bg.g_text, "polynomial 'a0,a1,...;s'");
    bg_cmd->add_option("--spec", bg.spec_path, "ensemble spec json file")->required();
    bg_cmd->add_option("--k", bg.k, "ky fan index");
    bg_cmd->add_option("--theta", bg.theta, "tail threshold");
    bg_cmd->add_option("--mgf-samples", bg.mgf_samples, "samples per expectation");
    bg_cmd->add_option("--seed", bg.seed, "rng seed");
    bg_cmd->add_option("--points", bg.points, "grid points");
    bg_cmd->add_option("--out", bg.out_path, "output json path");
    bg_cmd->add_option("--csv", bg.csv_path, "curve csv path");

    MonteCarloArgs mc;
    auto* mc_cmd = app.add_subcommand("montecarlo", "tail probability estimation");
    mc_cmd->add_option("--spec", mc.spec_path, "ensemble spec json file")->required();
    mc_cmd->add_option("--g", mc.g_text, "polynomial 'a0,a1,...;s'");
    mc_cmd->add_option("--k", mc.k, "ky fan index");
    mc_cmd->add_option("--theta", mc.thetas, "tail thresholds")->required();
    mc_cmd->add_option("--trials", mc.trials, "monte carlo trials");
    mc_cmd->add_option("--seed", mc.seed, "rng seed");
    mc_cmd->add_option("--workers", mc.workers, "worker threads");
    double mc_cond_t = 0.0;
    auto* mc_cond = mc_cmd->add_option("--condition-t", mc_cond_t,
                                       "evaluate the order condition at this t");
    mc_cmd->add_option("--out", mc.out_path, "output json path");
    mc_cmd->add_option("--csv", mc.csv_path, "csv path");

    CertifyArgs ce;
    auto* ce_cmd = app.add_subcommand("certify", "bound-vs-empirical certification");
    ce_cmd->add_option("--spec", ce.spec_path, "ensemble spec json file")->required();
    ce_cmd->add_option("--g", ce.g_text, "polynomial 'a0,a1,...;s'");
    ce_cmd->add_option("--bound", ce.bound_kind, "chernoff | bernstein");
    ce_cmd->add_option("--k", ce.k, "ky fan index");
    ce_cmd->add_option("--theta", ce.thetas, "tail thresholds")->required();
    ce_cmd->add_option("--trials", ce.trials, "monte carlo trials");
    ce_cmd->add_option("--stat-samples", ce.stat_samples, "statistic samples");
    ce_cmd->add_option("--C", ce.c_latala, "abstract constant");
    ce_cmd->add_option("--seed", ce.seed, "rng seed");
    ce_cmd->add_option("--workers", ce.workers, "worker threads");
    ce_cmd->add_option("--out", ce.out_path, "output json path");
    ce_cmd->add_option("--csv", ce.csv_path, "csv path");

    HgspArgs hg;
    auto* hg_cmd = app.add_subcommand("hgsp-cov", "covariance tensor tail certification");
    hg_cmd->add_option("--spec", hg.spec_path, "ensemble spec json for X")->required();
    hg_cmd->add_option("--h0", hg.h0, "filter tap h0");
    hg_cmd->add_option("--h1", hg.h1, "filter tap h1");
    hg_cmd->add_option("--k", hg.k, "ky fan index");
    hg_cmd->add_option("--theta-grid", hg.thetas, "tail thresholds")->required();
    hg_cmd->add_option("--trials", hg.trials, "monte carlo trials");
    hg_cmd->add_option("--stat-samples", hg.stat_samples, "statistic samples");
    hg_cmd->add_option("--C", hg.c_latala, "abstract constant");
    hg_cmd->add_option("--seed", hg.seed, "rng seed");
    hg_cmd->add_option("--workers", hg.workers, "worker threads");
    hg_cmd->add_option("--out", hg.out_path, "output json path");
    hg_cmd->add_option("--csv", hg.csv_path, "csv path");

    ttb::AcceptanceOptions acc;
    auto* acc_cmd = app.add_subcommand("acceptance", "run the full acceptance suite");
    acc_cmd->add_option("--seed", acc.seed, "rng seed");
    acc_cmd->add_option("--workers", acc.workers, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (gt_cmd->parsed()) return run_golden_thompson(gt);
        if (lt_cmd->parsed()) return run_lie_trotter(lt);
        if (mj_cmd->parsed()) return run_verify_majorization(mj);
        if (lm_cmd->parsed()) return run_verify_lemmas(lm);
        if (bc_cmd->parsed()) return run_bound_chernoff(bc);
        if (bb_cmd->parsed()) return run_bound_bernstein(bb);
        if (bg_cmd->parsed()) return run_bound_generic(bg);
        if (mc_cmd->parsed()) {
            if (mc_cond->count() > 0) mc.condition_t = mc_cond_t;
            return run_montecarlo(mc);
        }
        if (ce_cmd->parsed()) return run_certify(ce);
        if (hg_cmd->parsed()) return run_hgsp_cov(hg);
        if (acc_cmd->parsed()) {
            acc.workers = resolve_workers(acc.workers);
            const auto report = ttb::run_acceptance(acc, std::cout);
            return report.all_passed ? kExitOk : kExitViolation;
        }
    } catch (const ttb::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    std::cerr << "no subcommand selected\n";
    return kExitConfig;
}

#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "ttb/ensembles.hpp"
#include "ttb/errors.hpp"
#include "ttb/rng.hpp"
#include "ttb/spectral.hpp"
#include "ttb/tail_bounds.hpp"

using namespace ttb;

TEST_CASE("polynomial spec: validation, evaluation, parsing") {
    const PolynomialSpec g({1.0, 0.5, 0.25}, 2.0);
    CHECK(g.degree() == 2);
    CHECK(g(2.0) == doctest::Approx(std::pow(1.0 + 1.0 + 1.0, 2.0)));
    CHECK_THROWS_AS(PolynomialSpec({-1.0}, 1.0), DomainError);
    CHECK_THROWS_AS(PolynomialSpec({1.0}, 0.5), DomainError);

    const PolynomialSpec parsed = PolynomialSpec::parse("0,1;2");
    CHECK(parsed.degree() == 1);
    CHECK(parsed.s == doctest::Approx(2.0));
    CHECK(parsed.to_string() == "0,1;2");
    CHECK_THROWS_AS(PolynomialSpec::parse("abc;1"), ConfigError);
}

TEST_CASE("product inequality: single factor is an equality chain") {
    RngStream rng(501, 0);
    const SquareTensor c = SquareTensor::random(Shape({2, 2}), rng);
    const auto res = ky_fan_product_inequality_check({c}, 1.0, {1.0}, 2);
    CHECK(res.lhs == doctest::Approx(res.mid).epsilon(1e-12));
    CHECK(res.mid == doctest::Approx(res.rhs).epsilon(1e-12));
    CHECK(res.holds);
}

TEST_CASE("product inequality: identical PSD factors give Young equality") {
    RngStream rng(503, 0);
    const HermitianTensor c = HermitianTensor::random_spectrum(Shape({2, 2}), rng, 0.2, 1.5);
    const std::vector<SquareTensor> cs = {c.base(), c.base(), c.base()};
    const auto res = ky_fan_product_inequality_check(cs, 1.0, {3.0, 3.0, 3.0}, 2);
    CHECK(res.mid == doctest::Approx(res.rhs).epsilon(1e-10));
    CHECK(res.holds);
}

TEST_CASE("product inequality: weight validation") {
    RngStream rng(509, 0);
    const SquareTensor c = SquareTensor::random(Shape({2}), rng);
    CHECK_THROWS_AS(ky_fan_product_inequality_check({c, c}, 1.0, {2.0, 3.0}, 1),
                    DomainError);
}

TEST_CASE("product inequality: 200 randomized instances hold") {
    RngStream rng(521, 0);
    const Shape s({2, 2});
    for (int rep = 0; rep < 200; ++rep) {
        const int m = 2 + static_cast<int>(rng.next_below(2));
        const double sv = 1.0 + static_cast<double>(rng.next_below(2));
        std::vector<SquareTensor> cs;
        for (int i = 0; i < m; ++i) cs.push_back(SquareTensor::random(s, rng));
        // Random Hoelder weights.
        std::vector<double> inv(static_cast<std::size_t>(m));
        double sum = 0.0;
        for (auto& v : inv) { v = 0.2 + rng.next_double(); sum += v; }
        std::vector<double> p(static_cast<std::size_t>(m));
        double acc = 0.0;
        for (std::size_t i = 0; i + 1 < p.size(); ++i) {
            inv[i] /= sum;
            acc += inv[i];
            p[i] = 1.0 / inv[i];
        }
        p.back() = 1.0 / (1.0 - acc);
        const Index k = 1 + static_cast<Index>(rng.next_below(4));
        const auto res = ky_fan_product_inequality_check(cs, sv, p, k);
        CHECK(res.holds);
    }
}

TEST_CASE("sum inequality: m = 1 equality and PSD trace case") {
    RngStream rng(523, 0);
    const SquareTensor c = SquareTensor::random(Shape({2, 2}), rng);
    const auto res1 = ky_fan_sum_inequality_check({c}, 2.0, 3);
    CHECK(res1.lhs == doctest::Approx(res1.rhs).epsilon(1e-12));

    // s = 1, PSD summands, k = d: both sides are traces.
    const HermitianTensor a = HermitianTensor::random_spectrum(Shape({2, 2}), rng, 0.0, 1.0);
    const HermitianTensor b = HermitianTensor::random_spectrum(Shape({2, 2}), rng, 0.0, 1.0);
    const auto res2 = ky_fan_sum_inequality_check({a.base(), b.base()}, 1.0, 4);
    CHECK(res2.lhs == doctest::Approx(res2.rhs).epsilon(1e-10));
}

TEST_CASE("sum inequality: 200 randomized Hermitian instances hold") {
    RngStream rng(541, 0);
    const Shape s({2, 2});
    for (int rep = 0; rep < 200; ++rep) {
        const int m = 2 + static_cast<int>(rng.next_below(2));
        const double sv = 1.0 + static_cast<double>(rng.next_below(2));
        std::vector<SquareTensor> cs;
        for (int i = 0; i < m; ++i) cs.push_back(HermitianTensor::random(s, rng).base());
        const Index k = (rep % 3 == 0) ? 1 : ((rep % 3 == 1) ? 2 : 4);
        CHECK(ky_fan_sum_inequality_check(cs, sv, k).holds);
    }
}

TEST_CASE("xi statistic: deterministic samples center to zero") {
    RngStream rng(547, 0);
    const SquareTensor x = SquareTensor::random(Shape({2, 2}), rng);
    const std::vector<SquareTensor> samples(8, x);
    CHECK(xi_statistic(samples).value == doctest::Approx(0.0).epsilon(1e-14));
    CHECK_THROWS_AS(xi_statistic({x}), InsufficientSamples);
}

TEST_CASE("xi statistic: scalar real case against the hand formula") {
    // d = 1 real samples: y-part vanishes, x-part gives 2 sqrt(v) + v4^(1/4).
    const Shape s({1});
    std::vector<SquareTensor> samples;
    const std::vector<double> vals = {0.3, -0.7, 1.1, 0.2, -0.5};
    for (double v : vals) {
        SquareTensor t(s);
        t.matrix()(0, 0) = v;
        samples.push_back(t);
    }
    double mean = 0.0;
    for (double v : vals) mean += v;
    mean /= static_cast<double>(vals.size());
    double v2 = 0.0, v4 = 0.0;
    for (double v : vals) {
        const double c = v - mean;
        v2 += c * c;
        v4 += c * c * c * c;
    }
    v2 /= static_cast<double>(vals.size());
    v4 /= static_cast<double>(vals.size());
    const double expected = 2.0 * std::sqrt(v2) + std::pow(v4, 0.25);
    const auto stat = xi_statistic(samples);
    CHECK(stat.value == doctest::Approx(expected).epsilon(1e-12));
    CHECK(stat.terms[3] == doctest::Approx(0.0));
}

TEST_CASE("xi statistic: iid sign flips match exact Bernoulli moments") {
    // Diagonal +-1 entries: centered second moment 1 - mu^2, fourth moment
    // 1 - 4 mu^2 + ... evaluated against the sample-mean plug-in below; with
    // many samples the value approaches the exact-moment evaluation 3 * d^(..).
    RngStream rng(557, 0);
    const Shape s({2});
    std::vector<SquareTensor> samples;
    const int n = 10000;
    for (int i = 0; i < n; ++i) {
        SquareTensor t(s);
        t.matrix()(0, 0) = rng.bernoulli(0.5) ? 1.0 : -1.0;
        t.matrix()(1, 1) = rng.bernoulli(0.5) ? 1.0 : -1.0;
        samples.push_back(t);
    }
    // Exact moments: per diagonal entry E x^2 = 1, E x^4 = 1 (centering shift
    // is O(1/sqrt(n))): row term sqrt(1), col term sqrt(1), fourth (2)^{1/4}.
    const double exact = 1.0 + 1.0 + std::pow(2.0, 0.25);
    const auto stat = xi_statistic(samples);
    // Allow 3 standard errors ~ O(1/sqrt(n)).
    CHECK(std::abs(stat.value - exact) < 3.0 * 0.05);
}

TEST_CASE("upsilon statistic: zeros, exact symmetric scalar, mean-shift warning") {
    const Shape s({1});
    SquareTensor zero(s);
    CHECK(upsilon_statistic({zero, zero}).value == doctest::Approx(0.0));

    // Symmetric +-1 scalar: E x^2 = 1 and E x^4 = 1 exactly on paired samples.
    SquareTensor plus(s), minus(s);
    plus.matrix()(0, 0) = 1.0;
    minus.matrix()(0, 0) = -1.0;
    const auto stat = upsilon_statistic({plus, minus, plus, minus});
    CHECK(stat.value == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(!stat.mean_shift_warning);

    // Mean-shifted stream trips the diagnostic.
    std::vector<SquareTensor> shifted;
    RngStream rng(563, 0);
    for (int i = 0; i < 400; ++i) {
        SquareTensor t(s);
        t.matrix()(0, 0) = 1.0 + 0.01 * rng.gaussian();
        shifted.push_back(t);
    }
    CHECK(upsilon_statistic(shifted).mean_shift_warning);
}

TEST_CASE("generic bound: constant polynomial decays to the grid edge") {
    const PolynomialSpec g({2.0}, 1.0); // a_0 only
    const std::vector<double> grid = {0.1, 0.5, 1.0, 2.0};
    const auto rep = generic_kyfan_tail_bound(
        g, [](int, int, double) { return 0.0; }, {1.0}, 3, 1.5, grid);
    // bound(t) = e^{-theta t} * k * a_0^s, minimized at the largest t.
    CHECK(rep.t_opt == doctest::Approx(2.0));
    CHECK(rep.bound_at_opt == doctest::Approx(std::exp(-1.5 * 2.0) * 3.0 * 2.0));
}

TEST_CASE("generic bound: deterministic zero tensor reduces to k e^{-theta t}") {
    // s = 1, n = 1, a = (0,1), m = 1, X = O: E||exp(0)||_(k) = k.
    const PolynomialSpec g({0.0, 1.0}, 1.0);
    const std::vector<double> grid = {0.5, 1.0, 4.0};
    const Index k = 2;
    const auto rep = generic_kyfan_tail_bound(
        g, [&](int, int, double) { return static_cast<double>(k); }, {1.0}, k, 3.0, grid);
    CHECK(rep.t_opt == doctest::Approx(4.0));
    CHECK(rep.bound_at_opt == doctest::Approx(std::exp(-3.0 * 4.0) * 2.0));
    CHECK_THROWS_AS(generic_kyfan_tail_bound(g, [](int, int, double) { return 1.0; },
                                             {1.0}, k, 3.0, {}),
                    RangeError);
}

TEST_CASE("chernoff: zero statistics give a monotone decreasing curve") {
    ChernoffParams prm;
    prm.R = 1.0;
    prm.m = 2;
    prm.k = 1;
    prm.theta = 1.5;
    prm.sigma1_bar = {0.0, 0.0};
    prm.xi = {0.0, 0.0};
    const PolynomialSpec g({0.5, 1.0}, 1.0);
    const auto grid = make_chernoff_grid(prm, g, 64);
    const auto rep = chernoff_bound(prm, g, grid);
    for (std::size_t i = 1; i < rep.values.size(); ++i)
        CHECK(rep.values[i] <= rep.values[i - 1] + 1e-15);
    CHECK(!rep.t_opt);
    CHECK(rep.bound_at_opt == doctest::Approx(rep.values.back()));
}

TEST_CASE("chernoff: scalar reduction e^{(1-theta) t}") {
    // d = 1, m = 1, n = 1, s = 1, a = (0,1), C Xi = 0, sigma1_bar = 1, R = 1.
    ChernoffParams prm;
    prm.R = 1.0;
    prm.m = 1;
    prm.k = 1;
    prm.theta = 2.0;
    prm.sigma1_bar = {1.0};
    prm.xi = {0.0};
    const PolynomialSpec g({0.0, 1.0}, 1.0);
    for (double t : {0.1, 0.7, 2.3})
        CHECK(chernoff_curve_value(prm, g, t) ==
              doctest::Approx(std::exp((1.0 - prm.theta) * t)).epsilon(1e-12));
    const auto grid = make_chernoff_grid(prm, g, 128);
    const auto rep = chernoff_bound(prm, g, grid);
    CHECK(rep.bound_at_opt ==
          doctest::Approx(std::exp((1.0 - prm.theta) * grid.back())).epsilon(1e-10));
}

TEST_CASE("chernoff: interior optimum matches the dense-grid argmin") {
    ChernoffParams prm;
    prm.R = 1.0;
    prm.m = 3;
    prm.k = 1;
    prm.theta = 2.0;
    prm.sigma1_bar = {0.4, 0.4, 0.4};
    prm.xi = {0.1, 0.1, 0.1};
    const PolynomialSpec g({0.0, 1.0}, 1.0);
    const auto grid = make_chernoff_grid(prm, g, 512);
    const auto rep = chernoff_bound(prm, g, grid);
    REQUIRE(rep.t_opt.has_value());
    CHECK(rep.first_order_residual < 1e-8);

    const double argmin = oracle::dense_grid_argmin(
        [&](double t) { return chernoff_curve_value(prm, g, t); }, grid.front(),
        grid.back(), 200000);
    // Within one (local, log-spaced) grid step of the dense argmin.
    double step = grid.back();
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (grid[i] >= *rep.t_opt) { step = grid[i] - grid[i - 1]; break; }
    CHECK(std::abs(*rep.t_opt - argmin) <= step);
    CHECK(rep.bound_at_opt <= chernoff_curve_value(prm, g, argmin) + 1e-12);
    CHECK(rep.convexity_ok);
}

TEST_CASE("bernstein: zero statistics decay monotonically") {
    BernsteinParams prm;
    prm.m = 2;
    prm.k = 2;
    prm.theta = 1.0;
    prm.sigma1_Aj_sq = {0.0, 0.0};
    prm.upsilon = {0.0, 0.0};
    const PolynomialSpec g({0.3, 1.0}, 1.0);
    const auto grid = make_bernstein_grid(prm, g, 64);
    const auto rep = bernstein_bound(prm, g, grid);
    for (std::size_t i = 1; i < rep.values.size(); ++i)
        CHECK(rep.values[i] <= rep.values[i - 1] + 1e-15);
}

TEST_CASE("bernstein: scalar case optimum against the dense grid") {
    // m = 1, n = 1, s = 1, a = (0,1), sigma1(A^2) = 1, C Upsilon = 0:
    // curve = e^{-theta t} k (1 + t^2 / (2 (1 - t))).
    BernsteinParams prm;
    prm.m = 1;
    prm.k = 1;
    prm.theta = 0.5;
    prm.sigma1_Aj_sq = {1.0};
    prm.upsilon = {0.0};
    const PolynomialSpec g({0.0, 1.0}, 1.0);
    for (double t : {0.1, 0.4, 0.8})
        CHECK(bernstein_curve_value(prm, g, t) ==
              doctest::Approx(std::exp(-0.5 * t) * (1.0 + t * t / (2.0 * (1.0 - t))))
                  .epsilon(1e-12));

    const auto grid = make_bernstein_grid(prm, g, 512);
    const auto rep = bernstein_bound(prm, g, grid);
    REQUIRE(rep.t_opt.has_value());
    const double residual =
        std::abs(bernstein_b2(prm, g, *rep.t_opt) - prm.theta * bernstein_b1(prm, g, *rep.t_opt));
    CHECK(residual < 1e-8 * std::abs(prm.theta * bernstein_b1(prm, g, *rep.t_opt)));

    const double argmin = oracle::dense_grid_argmin(
        [&](double t) { return bernstein_curve_value(prm, g, t); }, grid.front(),
        grid.back(), 200000);
    const double step = grid[1] - grid[0];
    CHECK(std::abs(*rep.t_opt - argmin) <= step);
}

TEST_CASE("bernstein: pole-avoiding grid is enforced") {
    BernsteinParams prm;
    prm.m = 2;
    prm.k = 1;
    prm.theta = 1.0;
    prm.sigma1_Aj_sq = {1.0, 1.0};
    prm.upsilon = {0.0, 0.0};
    const PolynomialSpec g({0.0, 1.0}, 1.0); // pole at t = 1/2
    CHECK_THROWS_AS(bernstein_bound(prm, g, {0.1, 0.5}, false), RangeError);
    CHECK_THROWS_AS(bernstein_bound(prm, g, {0.0, 0.1}, false), RangeError);
}

TEST_CASE("bernstein: B2/B3 are the derivatives of B1 (finite differences)") {
    BernsteinParams prm;
    prm.m = 2;
    prm.k = 2;
    prm.theta = 0.7;
    prm.sigma1_Aj_sq = {0.8, 1.2};
    prm.upsilon = {0.05, 0.1};
    const PolynomialSpec g({0.1, 0.7, 0.2}, 1.0);
    const double h = 1e-6;
    for (double t : {0.05, 0.1, 0.2}) {
        const double fd1 = (bernstein_b1(prm, g, t + h) - bernstein_b1(prm, g, t - h)) / (2 * h);
        CHECK(bernstein_b2(prm, g, t) == doctest::Approx(fd1).epsilon(1e-6));
        const double fd2 = (bernstein_b2(prm, g, t + h) - bernstein_b2(prm, g, t - h)) / (2 * h);
        CHECK(bernstein_b3(prm, g, t) == doctest::Approx(fd2).epsilon(1e-6));
    }
}

TEST_CASE("psd order condition: identity polynomial gives a zero gap") {
    RngStream rng(569, 0);
    const HermitianTensor s = HermitianTensor::random(Shape({2, 2}), rng);
    const PolynomialSpec g({0.0, 1.0}, 1.0);
    const auto res = psd_order_condition_check(s, g, 0.7);
    CHECK(res.min_eig_gap == doctest::Approx(0.0));
    CHECK(res.holds);
    CHECK_THROWS_AS(psd_order_condition_check(s, g, 0.0), RangeError);
}

TEST_CASE("psd order condition: constant-tensor evaluation path") {
    // S = O: gap = g(1) - e^{t g(0)} reported, not asserted.
    const HermitianTensor s = HermitianTensor::zero(Shape({2}));
    const PolynomialSpec g({0.5, 0.5}, 2.0);
    const double t = 0.3;
    const auto res = psd_order_condition_check(s, g, t);
    const double expected = g(1.0) - std::exp(t * g(0.0));
    CHECK(res.min_eig_gap == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("chernoff curve dominates the generic bound fed with the lemma estimate") {
    // With p_j = m and the Lemma-4.4 bound as the mgf estimate, the generic
    // evaluation reproduces the Chernoff bracket exactly.
    ChernoffParams prm;
    prm.R = 1.0;
    prm.m = 3;
    prm.k = 2;
    prm.theta = 2.5;
    prm.sigma1_bar = {0.4, 0.5, 0.3};
    prm.xi = {0.2, 0.1, 0.15};
    const PolynomialSpec g({0.2, 0.8}, 1.0);
    const auto grid = make_chernoff_grid(prm, g, 32);

    const double kk = static_cast<double>(prm.k);
    auto lemma_mgf = [&](int j, int l, double t) {
        const double theta_exp = prm.m * l * g.s * t; // p_j = m
        const double e = std::exp(theta_exp * prm.R) - 1.0;
        return kk * (1.0 + e * prm.sigma1_bar[static_cast<std::size_t>(j)] +
                     prm.c_latala * e * prm.xi[static_cast<std::size_t>(j)]);
    };
    const std::vector<double> p(3, 3.0);
    const auto generic = generic_kyfan_tail_bound(g, lemma_mgf, p, prm.k, prm.theta, grid);
    for (std::size_t i = 0; i < grid.size(); ++i)
        CHECK(generic.values[i] ==
              doctest::Approx(chernoff_curve_value(prm, g, grid[i])).epsilon(1e-12));
}

TEST_CASE("generic bound dominates monte carlo tail frequencies") {
    // Small ensemble cross-check: evaluate the generic bound with Monte Carlo
    // mgf estimates and compare against empirical tail frequencies over a
    // 5-point theta grid, in the regime where the bound is at most 1.
    EnsembleSpec spec;
    spec.kind = EnsembleSpec::Kind::BoundedPSD;
    spec.shape = Shape({2, 2});
    spec.m = 3;
    spec.R = 1.0;
    const PolynomialSpec g({0.0, 1.0}, 1.0);
    const Index k = 1;
    const std::vector<double> p(3, 3.0);

    std::vector<std::vector<double>> eigs;
    for (int i = 0; i < 400; ++i)
        eigs.push_back(eig_hermitian(sample_trial(spec, 91, i, 0)).eigenvalues);
    auto mgf = [&](int, int l, double t) {
        const double factor = 3.0 * l * g.s * t;
        double acc = 0.0;
        for (const auto& lam : eigs) acc += std::exp(factor * lam.front());
        return acc / static_cast<double>(eigs.size());
    };

    ChernoffParams grid_prm;
    grid_prm.R = 1.0;
    grid_prm.m = 3;
    grid_prm.k = k;
    grid_prm.theta = 1.0;
    const auto grid = make_chernoff_grid(grid_prm, g, 128);
    for (double theta : {3.05, 3.1, 3.2, 3.3, 3.4}) {
        const auto rep = generic_kyfan_tail_bound(g, mgf, p, k, theta, grid);
        const auto est = estimate_tail(spec, g, k, theta, 2000, 92);
        if (rep.bound_at_opt <= 1.0)
            CHECK(est.point_estimate <= rep.bound_at_opt + 1e-12);
    }
}

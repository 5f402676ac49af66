#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "ttb/errors.hpp"
#include "ttb/hgsp.hpp"
#include "ttb/norms.hpp"
#include "ttb/rng.hpp"
#include "ttb/spectral.hpp"

using namespace ttb;

namespace {

HermitianTensor random_symmetric_real(const Shape& s, RngStream& rng, double scale = 1.0) {
    const Index d = s.unfolded_dim();
    SquareTensor t(s);
    for (Index r = 0; r < d; ++r)
        for (Index c = r; c < d; ++c) {
            const double w = scale * rng.uniform(-1.0, 1.0);
            t.matrix()(r, c) = w;
            t.matrix()(c, r) = w;
        }
    return HermitianTensor(t);
}

} // namespace

TEST_CASE("filter: constant and shift taps") {
    RngStream rng(701, 0);
    const Shape s({2, 2});
    const HermitianTensor S = random_symmetric_real(s, rng);

    const SquareTensor f1 = filter(S, FilterCoefficients({1.0}));
    ComplexMatrix d1 = f1.matrix();
    d1 -= ComplexMatrix::identity(4);
    CHECK(d1.frobenius_norm() == doctest::Approx(0.0));

    const SquareTensor f2 = filter(S, FilterCoefficients({0.0, 1.0}));
    ComplexMatrix d2 = f2.matrix();
    d2 -= S.matrix();
    CHECK(d2.frobenius_norm() == doctest::Approx(0.0));

    CHECK_THROWS_AS(FilterCoefficients(std::vector<double>{}), DomainError);
}

TEST_CASE("filter: K = 3 against the monomial-sum oracle") {
    RngStream rng(709, 0);
    const Shape s({2, 2});
    const HermitianTensor S = random_symmetric_real(s, rng);
    const FilterCoefficients h({0.7, -0.3, 0.2});
    const SquareTensor via_horner = filter(S, h);

    ComplexMatrix acc(4, 4);
    ComplexMatrix power = ComplexMatrix::identity(4);
    for (std::size_t k = 0; k < h.h.size(); ++k) {
        ComplexMatrix term = power;
        term *= Complex{h.h[k], 0.0};
        acc += term;
        power = power * S.matrix();
    }
    ComplexMatrix diff = via_horner.matrix();
    diff -= acc;
    CHECK(diff.frobenius_norm() / std::max(1.0, acc.frobenius_norm()) < 1e-11);
}

TEST_CASE("covariance: h = (1) gives the identity") {
    RngStream rng(719, 0);
    const HermitianTensor S = random_symmetric_real(Shape({2, 2}), rng);
    const HermitianTensor c = covariance_tensor(S, FilterCoefficients({1.0}));
    ComplexMatrix diff = c.matrix();
    diff -= ComplexMatrix::identity(4);
    CHECK(diff.frobenius_norm() == doctest::Approx(0.0));
}

TEST_CASE("covariance: two-tap gamma expansion h0^2, 2 h0 h1, h1^2") {
    const FilterCoefficients h({0.5, -0.25});
    const auto gamma = gamma_expansion(h);
    REQUIRE(gamma.size() == 3);
    CHECK(gamma[0] == doctest::Approx(0.25));
    CHECK(gamma[1] == doctest::Approx(2.0 * 0.5 * -0.25));
    CHECK(gamma[2] == doctest::Approx(0.0625));
}

TEST_CASE("covariance: dual paths agree on random symmetric shifts") {
    RngStream rng(727, 0);
    const Shape s({2, 2});
    for (int rep = 0; rep < 25; ++rep) {
        const HermitianTensor S = random_symmetric_real(s, rng);
        const FilterCoefficients h({rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)});
        const HermitianTensor via_gram = covariance_tensor(S, h, CovariancePath::Gram);
        const HermitianTensor via_exp = covariance_tensor(S, h, CovariancePath::Expansion);
        ComplexMatrix diff = via_gram.matrix();
        diff -= via_exp.matrix();
        CHECK(diff.frobenius_norm() / std::max(1.0, via_gram.matrix().frobenius_norm()) <
              1e-10);
        // Gram form is PSD.
        const auto lam = eig_hermitian(via_gram).eigenvalues;
        CHECK(lam.back() >= -1e-10);
        CHECK_NOTHROW(covariance_tensor(S, h, CovariancePath::Auto));
    }
}

TEST_CASE("covariance: expansion path rejects asymmetric shifts") {
    const Shape s({2});
    SquareTensor t(s);
    t.matrix()(0, 1) = Complex{0.0, 1.0}; // Hermitian but not symmetric
    t.matrix()(1, 0) = Complex{0.0, -1.0};
    const HermitianTensor S(t);
    CHECK_THROWS_AS(covariance_tensor(S, FilterCoefficients({0.5, 0.5}),
                                      CovariancePath::Expansion),
                    ConfigError);
}

TEST_CASE("covariance: ||C_x||_1 = sigma_1(S)^2 for h = (0,1)") {
    RngStream rng(733, 0);
    const HermitianTensor S = random_symmetric_real(Shape({2, 2}), rng);
    const HermitianTensor c = covariance_tensor(S, FilterCoefficients({0.0, 1.0}));
    const double s1 = singular_spectrum(S.base()).values.front();
    CHECK(ky_fan_norm(c.base(), 1) == doctest::Approx(s1 * s1).epsilon(1e-9));
}

TEST_CASE("markov and structural covariance constructors guard invertibility") {
    RngStream rng(739, 0);
    const Shape s({2, 2});
    const HermitianTensor pd = HermitianTensor::random_spectrum(s, rng, 0.5, 1.5);
    const HermitianTensor inv = markov_covariance(pd);
    ComplexMatrix prod = inv.matrix() * pd.matrix();
    prod -= ComplexMatrix::identity(4);
    CHECK(prod.frobenius_norm() < 1e-9);

    const HermitianTensor singular = HermitianTensor::diagonal(s, {1.0, 1.0, 1.0, 0.0});
    CHECK_THROWS_AS(markov_covariance(singular), DomainError);

    const HermitianTensor near_one = HermitianTensor::diagonal(s, {1.0, 0.5, 0.5, 0.5});
    CHECK_THROWS_AS(structural_equation_covariance(near_one), DomainError);

    const HermitianTensor ok = HermitianTensor::diagonal(s, {0.5, 0.4, 0.3, 0.2});
    const HermitianTensor se = structural_equation_covariance(ok);
    // (I - S)^{-2} on the diagonal.
    CHECK(se.matrix()(0, 0).real() == doctest::Approx(1.0 / (0.5 * 0.5)).epsilon(1e-9));
}

TEST_CASE("random hgso respects its sparsity mask and filters stay inside reach") {
    RngStream rng(743, 0);
    const Shape s({2, 2});
    const HypergraphShift hg = random_hgso(s, 0.3, rng);
    const Index d = 4;
    for (Index r = 0; r < d; ++r)
        for (Index c = 0; c < d; ++c) {
            if (hg.edges.count({r, c}) == 0)
                CHECK(std::abs(hg.S.matrix()(r, c)) == 0.0);
            CHECK(std::abs(hg.S.matrix()(r, c) - hg.S.matrix()(c, r)) == 0.0);
        }

    // K-1 hop reachability bound on the filter support.
    const FilterCoefficients h({0.3, 0.5, 0.2});
    const SquareTensor f = filter(hg, h);
    // Boolean reachability within 2 hops (including staying put).
    std::vector<std::vector<bool>> reach(d, std::vector<bool>(d, false));
    for (Index i = 0; i < d; ++i) reach[i][i] = true;
    for (int hop = 0; hop < 2; ++hop) {
        auto next = reach;
        for (Index i = 0; i < d; ++i)
            for (Index j = 0; j < d; ++j)
                if (reach[i][j])
                    for (Index k2 = 0; k2 < d; ++k2)
                        if (hg.edges.count({j, k2})) next[i][k2] = true;
        reach = next;
    }
    for (Index i = 0; i < d; ++i)
        for (Index j = 0; j < d; ++j)
            if (!reach[i][j]) CHECK(std::abs(f.matrix()(i, j)) < 1e-12);
}

TEST_CASE("covariance tail bound: smoke run with consistent report") {
    EnsembleSpec spec;
    spec.kind = EnsembleSpec::Kind::BoundedPSD;
    spec.shape = Shape({2, 2});
    spec.m = 4;
    spec.R = 1.0;
    const std::vector<double> thetas = {1.0, 1.1};
    const auto rep = covariance_tail_bound(spec, 0.5, 0.5, 1, thetas, 400, 77, 1, 1.0, 200);
    CHECK(rep.rows.size() == 2);
    CHECK(rep.polynomial == PolynomialSpec({0.25, 0.5, 0.25}, 1.0).to_string());
    for (const auto& row : rep.rows) CHECK(row.point_estimate <= row.ci_upper_95);

    // h1 = 0 reduces to a constant polynomial: bound decays monotonically.
    const auto flat = covariance_tail_bound(spec, 0.5, 0.0, 1, {0.3}, 50, 78, 1, 1.0, 100);
    CHECK(flat.rows.front().analytic_bound >= 0.0);
}

TEST_CASE("covariance tail bound rejects non-PSD ensembles") {
    EnsembleSpec spec;
    spec.kind = EnsembleSpec::Kind::DiagonalRademacher;
    spec.shape = Shape({2});
    spec.m = 2;
    CHECK_THROWS_AS(covariance_tail_bound(spec, 0.5, 0.5, 1, {1.0}, 10, 1), ConfigError);
}

TEST_CASE("covariance: dual paths agree for four taps and larger shifts") {
    RngStream rng(751, 0);
    const Shape s({2, 2});
    const HermitianTensor S = random_symmetric_real(s, rng, 2.5);
    const FilterCoefficients h({0.8, -0.6, 0.4, 0.3});
    const HermitianTensor via_gram = covariance_tensor(S, h, CovariancePath::Gram);
    const HermitianTensor via_exp = covariance_tensor(S, h, CovariancePath::Expansion);
    ComplexMatrix diff = via_gram.matrix();
    diff -= via_exp.matrix();
    CHECK(diff.frobenius_norm() / std::max(1.0, via_gram.matrix().frobenius_norm()) <
          1e-10);
}

#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "ttb/errors.hpp"
#include "ttb/rng.hpp"
#include "ttb/spectral.hpp"

using namespace ttb;

namespace {

double reconstruction_error(const HermitianTensor& h) {
    const SpectralDecomposition dec = eig_hermitian(h);
    ComplexMatrix diff = dec.reconstruct().matrix();
    diff -= h.matrix();
    return diff.frobenius_norm() / std::max(1.0, h.matrix().frobenius_norm());
}

} // namespace

TEST_CASE("eig: identity tensor has unit eigenvalues") {
    const auto dec = eig_hermitian(HermitianTensor::identity(Shape({2, 2})));
    REQUIRE(dec.eigenvalues.size() == 4);
    for (double lam : dec.eigenvalues) CHECK(lam == doctest::Approx(1.0));
    CHECK(dec.hermitian_rank == 4);
}

TEST_CASE("eig: diagonal case sorts descending and counts rank") {
    const auto h = HermitianTensor::diagonal(Shape({3}), {5.0, -2.0, 0.0});
    const auto dec = eig_hermitian(h);
    CHECK(dec.eigenvalues[0] == doctest::Approx(5.0));
    CHECK(dec.eigenvalues[1] == doctest::Approx(0.0));
    CHECK(dec.eigenvalues[2] == doctest::Approx(-2.0));
    CHECK(dec.hermitian_rank == 2);
}

TEST_CASE("eig: characteristic polynomial oracle at d = 3") {
    RngStream rng(101, 0);
    for (int rep = 0; rep < 10; ++rep) {
        const HermitianTensor h = HermitianTensor::random(Shape({3}), rng);
        const auto dec = eig_hermitian(h);
        const auto roots = oracle::eigenvalues_by_charpoly(h.matrix());
        REQUIRE(roots.size() == 3);
        for (int i = 0; i < 3; ++i)
            CHECK(dec.eigenvalues[static_cast<std::size_t>(i)] ==
                  doctest::Approx(roots[static_cast<std::size_t>(i)]).epsilon(1e-9));
    }
}

TEST_CASE("eig: reconstruction and orthonormality on random Hermitian tensors") {
    RngStream rng(103, 0);
    for (const Shape& s : {Shape({2, 2}), Shape({2, 3}), Shape({3, 3})}) {
        for (int rep = 0; rep < 5; ++rep) {
            const HermitianTensor h = HermitianTensor::random(s, rng);
            CHECK(reconstruction_error(h) < 1e-9);
            const auto dec = eig_hermitian(h);
            const Index d = s.unfolded_dim();
            for (Index i = 0; i < d; ++i)
                for (Index j = 0; j < d; ++j) {
                    Complex dot = 0.0;
                    for (Index r = 0; r < d; ++r)
                        dot += std::conj(dec.eigenvectors(r, i)) * dec.eigenvectors(r, j);
                    CHECK(std::abs(dot - (i == j ? Complex{1.0, 0.0} : Complex{0.0, 0.0})) <
                          1e-10);
                }
        }
    }
}

TEST_CASE("tensor_function: exp of zero is identity; log/exp round trip") {
    const Shape s({2, 2});
    const HermitianTensor zero = HermitianTensor::zero(s);
    const HermitianTensor e = tensor_exp(zero);
    ComplexMatrix diff = e.matrix();
    diff -= ComplexMatrix::identity(4);
    CHECK(diff.frobenius_norm() < 1e-14);

    RngStream rng(107, 0);
    const HermitianTensor pd = HermitianTensor::random_spectrum(s, rng, 0.5, 3.0);
    const HermitianTensor round = tensor_exp(tensor_log(pd));
    ComplexMatrix gap = round.matrix();
    gap -= pd.matrix();
    CHECK(gap.frobenius_norm() / pd.matrix().frobenius_norm() < 1e-8);
}

TEST_CASE("tensor_function: square equals einstein product") {
    RngStream rng(109, 0);
    const Shape s({2, 2});
    const HermitianTensor h = HermitianTensor::random(s, rng);
    const HermitianTensor sq = tensor_function(h, [](double x) { return x * x; });
    const SquareTensor via_product = einstein_product(h.base(), h.base());
    ComplexMatrix diff = sq.matrix();
    diff -= via_product.matrix();
    CHECK(diff.frobenius_norm() / via_product.matrix().frobenius_norm() < 1e-10);
}

TEST_CASE("tensor_function: domain check names the offending eigenvalue") {
    const auto h = HermitianTensor::diagonal(Shape({2}), {1.0, -3.0});
    CHECK_THROWS_AS(tensor_log(h), DomainError);
    try {
        tensor_log(h);
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("-3") != std::string::npos);
    }
}

TEST_CASE("complex_power: z = 0 and z = 1") {
    RngStream rng(113, 0);
    const Shape s({2, 2});
    const HermitianTensor pd = HermitianTensor::random_spectrum(s, rng, 0.5, 2.0);
    const SquareTensor z0 = complex_power(pd, Complex{0.0, 0.0});
    ComplexMatrix d0 = z0.matrix();
    d0 -= ComplexMatrix::identity(4);
    CHECK(d0.frobenius_norm() < 1e-12);

    const SquareTensor z1 = complex_power(pd, Complex{1.0, 0.0});
    ComplexMatrix d1 = z1.matrix();
    d1 -= pd.matrix();
    CHECK(d1.frobenius_norm() / pd.matrix().frobenius_norm() < 1e-12);
}

TEST_CASE("complex_power: scalar formula on diag(e) and PD requirement") {
    const auto h = HermitianTensor::diagonal(Shape({1}), {std::exp(1.0)});
    const SquareTensor p = complex_power(h, Complex{1.0, 1.0});
    const Complex expected = std::exp(1.0) * Complex{std::cos(1.0), std::sin(1.0)};
    CHECK(std::abs(p.matrix()(0, 0) - expected) < 1e-12);

    const auto not_pd = HermitianTensor::diagonal(Shape({2}), {1.0, 0.0});
    CHECK_THROWS_AS(complex_power(not_pd, Complex{0.5, 0.0}), DomainError);
}

TEST_CASE("complex_power: |C^(1+it)| has the singular values of C") {
    RngStream rng(127, 0);
    const Shape s({2, 2});
    const HermitianTensor pd = HermitianTensor::random_spectrum(s, rng, 0.3, 2.5);
    const auto base = singular_spectrum(pd.base()).values;
    const auto pw = singular_spectrum(complex_power(pd, Complex{1.0, 0.7})).values;
    for (std::size_t i = 0; i < base.size(); ++i)
        CHECK(pw[i] == doctest::Approx(base[i]).epsilon(1e-9));
}

TEST_CASE("absolute_value: negated identity and unitary input") {
    const Shape s({2, 2});
    SquareTensor neg = SquareTensor::identity(s);
    neg *= Complex{-1.0, 0.0};
    const HermitianTensor abs_neg = absolute_value(neg);
    ComplexMatrix diff = abs_neg.matrix();
    diff -= ComplexMatrix::identity(4);
    CHECK(diff.frobenius_norm() < 1e-10);

    RngStream rng(131, 0);
    const SquareTensor u = random_unitary_tensor(s, rng);
    const HermitianTensor abs_u = absolute_value(u);
    ComplexMatrix du = abs_u.matrix();
    du -= ComplexMatrix::identity(4);
    CHECK(du.frobenius_norm() < 1e-10);
}

TEST_CASE("singular_spectrum: Gram-matrix oracle") {
    RngStream rng(137, 0);
    const Shape s({2, 2});
    const SquareTensor t = SquareTensor::random(s, rng);
    const auto sv = singular_spectrum(t).values;
    // |t| route.
    const auto via_abs = eig_hermitian(absolute_value(t)).eigenvalues;
    // Second Gram matrix T T^H.
    std::vector<double> gram2;
    ComplexMatrix vecs;
    eig_hermitian_matrix(t.matrix() * t.matrix().adjoint(), gram2, vecs);
    for (std::size_t i = 0; i < sv.size(); ++i) {
        CHECK(sv[i] == doctest::Approx(via_abs[i]).epsilon(1e-9));
        CHECK(sv[i] * sv[i] == doctest::Approx(gram2[i]).epsilon(1e-8));
    }
}

TEST_CASE("hermitian_determinant: identity, diagonal, log-sum oracle") {
    CHECK(hermitian_determinant(HermitianTensor::identity(Shape({2, 2}))) ==
          doctest::Approx(1.0));
    CHECK(hermitian_determinant(HermitianTensor::diagonal(Shape({2}), {2.0, 3.0})) ==
          doctest::Approx(6.0));

    RngStream rng(139, 0);
    const HermitianTensor pd = HermitianTensor::random_spectrum(Shape({2, 2}), rng, 0.2, 2.0);
    double log_sum = 0.0;
    for (double lam : eig_hermitian(pd).eigenvalues) log_sum += std::log(lam);
    CHECK(hermitian_determinant(pd) ==
          doctest::Approx(std::exp(log_sum)).epsilon(1e-10));
}

TEST_CASE("det_H is multiplicative on commuting Hermitian pairs") {
    RngStream rng(149, 0);
    const Shape s({2, 2});
    const auto dec = eig_hermitian(HermitianTensor::random(s, rng));
    std::vector<double> la(4), lb(4);
    for (auto& v : la) v = rng.uniform(0.5, 2.0);
    for (auto& v : lb) v = rng.uniform(0.5, 2.0);
    const HermitianTensor a(dec.assemble(la));
    const HermitianTensor b(dec.assemble(lb));
    const HermitianTensor ab(einstein_product(a.base(), b.base()), 1e-8);
    CHECK(hermitian_determinant(ab) ==
          doctest::Approx(hermitian_determinant(a) * hermitian_determinant(b))
              .epsilon(1e-8));
}

TEST_CASE("exp law on commuting arguments") {
    RngStream rng(151, 0);
    const HermitianTensor h = HermitianTensor::random(Shape({2, 2}), rng);
    HermitianTensor hs = h;
    hs *= 0.7;
    HermitianTensor ht = h;
    ht *= 0.3;
    const SquareTensor lhs = tensor_exp(h).base();
    const SquareTensor rhs = einstein_product(tensor_exp(hs).base(), tensor_exp(ht).base());
    ComplexMatrix diff = lhs.matrix();
    diff -= rhs.matrix();
    CHECK(diff.frobenius_norm() / lhs.matrix().frobenius_norm() < 1e-9);
}

TEST_CASE("sigma_1 subadditivity on random pairs") {
    RngStream rng(157, 0);
    const Shape s({2, 2});
    for (int rep = 0; rep < 100; ++rep) {
        const SquareTensor a = SquareTensor::random(s, rng);
        const SquareTensor b = SquareTensor::random(s, rng);
        const double sa = singular_spectrum(a).values.front();
        const double sb = singular_spectrum(b).values.front();
        const double sab = singular_spectrum(a + b).values.front();
        CHECK(sab <= sa + sb + 1e-10);
    }
}

TEST_CASE("complex_power product at t = 0 has the singular spectrum of the product") {
    RngStream rng(163, 0);
    const Shape s({2, 2});
    const HermitianTensor c1 = HermitianTensor::random_spectrum(s, rng, 0.3, 2.0);
    const HermitianTensor c2 = HermitianTensor::random_spectrum(s, rng, 0.3, 2.0);
    const SquareTensor pw = einstein_product(complex_power(c1, Complex{1.0, 0.0}),
                                             complex_power(c2, Complex{1.0, 0.0}));
    const SquareTensor direct = einstein_product(c1.base(), c2.base());
    const auto sa = singular_spectrum(pw).values;
    const auto sb = singular_spectrum(direct).values;
    for (std::size_t i = 0; i < sa.size(); ++i)
        CHECK(sa[i] == doctest::Approx(sb[i]).epsilon(1e-9));
}

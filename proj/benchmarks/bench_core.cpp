#include <benchmark/benchmark.h>

#include "ttb/ensembles.hpp"
#include "ttb/majorization.hpp"
#include "ttb/multivariate.hpp"
#include "ttb/norms.hpp"
#include "ttb/rng.hpp"
#include "ttb/spectral.hpp"
#include "ttb/tensor.hpp"

namespace {

using namespace ttb;

void bm_einstein_product(benchmark::State& state) {
    const Index n = state.range(0);
    RngStream rng(1, 0);
    const Shape s({n, n});
    const SquareTensor a = SquareTensor::random(s, rng);
    const SquareTensor b = SquareTensor::random(s, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(einstein_product(a, b));
    }
}
BENCHMARK(bm_einstein_product)->Arg(2)->Arg(3)->Arg(4);

void bm_eig_hermitian(benchmark::State& state) {
    const Index n = state.range(0);
    RngStream rng(2, 0);
    const HermitianTensor h = HermitianTensor::random(Shape({n, n}), rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(eig_hermitian(h));
    }
}
BENCHMARK(bm_eig_hermitian)->Arg(2)->Arg(3)->Arg(4);

void bm_singular_spectrum(benchmark::State& state) {
    RngStream rng(3, 0);
    const SquareTensor t = SquareTensor::random(Shape({3, 3}), rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(singular_spectrum(t));
    }
}
BENCHMARK(bm_singular_spectrum);

void bm_compound(benchmark::State& state) {
    const Index k = state.range(0);
    RngStream rng(4, 0);
    const SquareTensor t = SquareTensor::random(Shape({2, 3}), rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(compound(t, k));
    }
}
BENCHMARK(bm_compound)->Arg(2)->Arg(3)->Arg(4);

void bm_multivariate_rhs(benchmark::State& state) {
    RngStream rng(5, 0);
    const Shape s({2, 2});
    std::vector<HermitianTensor> factors;
    for (int i = 0; i < 2; ++i)
        factors.push_back(HermitianTensor::random_spectrum(s, rng, 0.3, 2.0));
    const ScalarFunction f = fn_identity();
    const GaugeSpec gauge = GaugeSpec::ky_fan(1);
    for (auto _ : state) {
        MultivariateEvaluator ev(factors, BetaDensity(0.0));
        benchmark::DoNotOptimize(ev.rhs_geometric(f, gauge));
    }
}
BENCHMARK(bm_multivariate_rhs);

void bm_monte_carlo_trial(benchmark::State& state) {
    EnsembleSpec spec;
    spec.kind = EnsembleSpec::Kind::BoundedPSD;
    spec.shape = Shape({2, 2});
    spec.m = 3;
    spec.R = 1.0;
    const PolynomialSpec g({0.0, 1.0}, 1.0);
    std::int64_t trial = 0;
    for (auto _ : state) {
        HermitianTensor sum = sample_trial(spec, 7, trial, 0);
        for (int j = 1; j < spec.m; ++j) sum += sample_trial(spec, 7, trial, j);
        benchmark::DoNotOptimize(eig_hermitian(sum));
        ++trial;
    }
}
BENCHMARK(bm_monte_carlo_trial);

} // namespace

BENCHMARK_MAIN();

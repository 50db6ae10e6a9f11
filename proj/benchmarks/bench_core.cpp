#include <benchmark/benchmark.h>

#include <random>

#include "cavnet/cayley.hpp"
#include "cavnet/dynamics.hpp"
#include "cavnet/oracle.hpp"

namespace {

void BM_Evolve(benchmark::State& state) {
    const cavnet::CayleyGraph graph = cavnet::cycle_graph(static_cast<int>(state.range(0)));
    cavnet::CavityParams params;
    params.xi = 2.0;
    const cavnet::ManifoldState s0 = cavnet::w_state(graph.order());
    double t = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(cavnet::evolve(graph, params, s0, t));
        t += 0.1;
    }
}
BENCHMARK(BM_Evolve)->Arg(8)->Arg(32)->Arg(64);

void BM_Spectrum(benchmark::State& state) {
    const cavnet::CayleyGraph graph = cavnet::hypercube_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(graph.spectrum());
}
BENCHMARK(BM_Spectrum)->Arg(3)->Arg(6);

void BM_JacobiEigs(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    std::mt19937_64 rng(7);
    std::normal_distribution<double> gauss;
    cavnet::CMat m(d, d);
    for (int i = 0; i < d; ++i) {
        m(i, i) = gauss(rng);
        for (int j = i + 1; j < d; ++j) {
            m(i, j) = cavnet::cplx(gauss(rng), gauss(rng));
            m(j, i) = std::conj(m(i, j));
        }
    }
    for (auto _ : state) benchmark::DoNotOptimize(cavnet::hermitian_eigs(m));
}
BENCHMARK(BM_JacobiEigs)->Arg(16)->Arg(64);

void BM_Rk4Propagation(benchmark::State& state) {
    const cavnet::CayleyGraph graph = cavnet::cycle_graph(8);
    cavnet::CavityParams params;
    params.xi = 1.0;
    const cavnet::CMat h = cavnet::dense_manifold_hamiltonian(graph, params);
    std::vector<cavnet::cplx> psi(2 * graph.order());
    psi[0] = 1.0;
    for (auto _ : state)
        benchmark::DoNotOptimize(cavnet::propagate_numeric(h, psi, 1.0, 1e-3));
}
BENCHMARK(BM_Rk4Propagation);

}  // namespace

BENCHMARK_MAIN();

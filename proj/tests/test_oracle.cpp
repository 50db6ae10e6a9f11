#include <algorithm>
#include <cmath>

#include "cavnet/oracle.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace cavnet;

TEST_CASE("dense manifold hamiltonian") {
    FiniteAbelianGroup z2({2});
    const CayleyGraph graph(z2, validate_generating_set(z2, {1}));
    CavityParams p;  // resonant defaults: omega_a = 2, omega_c = 1
    const CMat h = dense_manifold_hamiltonian(graph, p);

    // n = 2: omega = 0, Delta = 0, so the site block is the bare coupling
    REQUIRE(h.rows() == 4);
    CHECK(std::abs(h(0, 0)) < 1e-15);
    CHECK(std::abs(h(0, 1) - 1.0) < 1e-14);  // sqrt(2) * 1/sqrt(2)
    CHECK(std::abs(h(1, 1)) < 1e-15);
    // 2 xi coupling between the two photonic rows only
    CHECK(std::abs(h(0, 2) - 2.0 * p.xi) < 1e-14);
    CHECK(std::abs(h(1, 3)) < 1e-15);
    CHECK(max_abs_diff(h, h.adjoint()) < 1e-14);
}

TEST_CASE("fourier conjugation block-diagonalizes the dense hamiltonian") {
    auto rng = testutil::make_rng(30);
    for (int rep = 0; rep < 4; ++rep) {
        FiniteAbelianGroup g = testutil::random_group(rng, 24);
        const CayleyGraph graph(g, testutil::random_gens(rng, g));
        CavityParams p;
        p.omega_a = 2.4;
        p.omega_c = 1.0;
        p.lambda = 0.9;
        p.xi = 0.7;
        const int n = graph.order();

        const CMat h = dense_manifold_hamiltonian(graph, p);
        const CMat u = kron(graph.fourier(), CMat::identity(2));
        const CMat hb = u * h * u.adjoint();

        double off = 0.0;
        for (int i = 0; i < 2 * n; ++i)
            for (int j = 0; j < 2 * n; ++j)
                if (i / 2 != j / 2) off = std::max(off, std::abs(hb(i, j)));
        CHECK(off < 1e-11);

        const std::vector<double> x = graph.spectrum();
        for (int k = 0; k < n; ++k) {
            const auto blk = block_hamiltonian(p, n, x[k]);
            CHECK(std::abs(hb(2 * k, 2 * k) - blk[0]) < 1e-11);
            CHECK(std::abs(hb(2 * k, 2 * k + 1) - blk[1]) < 1e-11);
            CHECK(std::abs(hb(2 * k + 1, 2 * k + 1) - blk[3]) < 1e-11);
        }
    }
}

TEST_CASE("numeric propagation") {
    // H = 0 leaves the state alone
    CMat zero(4, 4);
    std::vector<cplx> psi{0.5, cplx(0, 0.5), 0.5, -0.5};
    const auto out = propagate_numeric(zero, psi, 3.0, 0.01);
    for (int i = 0; i < 4; ++i) CHECK(std::abs(out[i] - psi[i]) < 1e-14);

    // 2x2 resonant block: exact Rabi solution
    CMat rabi(2, 2);
    rabi(0, 1) = rabi(1, 0) = 1.0;
    const double t = 2.3;
    const auto sol = propagate_numeric(rabi, {1.0, 0.0}, t, suggest_time_step(rabi, t, 1e-11));
    CHECK(std::abs(sol[0] - std::cos(t)) < 1e-9);
    CHECK(std::abs(sol[1] - cplx(0.0, -std::sin(t))) < 1e-9);

    CHECK_THROWS_AS(propagate_numeric(rabi, {1.0, 0.0}, 1.0, 0.0), std::invalid_argument);
    // a grossly oversized step trips the norm-drift guard
    CMat stiff(2, 2);
    stiff(0, 0) = 40.0;
    stiff(1, 1) = -40.0;
    stiff(0, 1) = stiff(1, 0) = 5.0;
    CHECK_THROWS_AS(propagate_numeric(stiff, {1.0, 0.0}, 10.0, 0.2), std::runtime_error);
}

TEST_CASE("numeric propagation matches the closed form") {
    auto rng = testutil::make_rng(31);
    const CayleyGraph q3 = hypercube_graph(3);
    CavityParams p;
    p.omega_a = 1.7;
    p.omega_c = 1.0;
    p.lambda = 1.1;
    p.xi = 1.9;
    const int n = 8;
    const CMat h = dense_manifold_hamiltonian(q3, p);

    const ManifoldState s0 = testutil::random_state(rng, n);
    const double t = 4.0;
    const ManifoldState s1 = evolve(q3, p, s0, t);

    std::vector<cplx> psi(2 * n);
    for (int i = 0; i < n; ++i) {
        psi[2 * i] = s0.C[i];
        psi[2 * i + 1] = s0.A[i];
    }
    psi = propagate_numeric(h, psi, t, suggest_time_step(h, t));
    double err = 0.0;
    for (int i = 0; i < n; ++i) {
        err = std::max(err, std::abs(psi[2 * i] - s1.C[i]));
        err = std::max(err, std::abs(psi[2 * i + 1] - s1.A[i]));
    }
    CHECK(err < 1e-8);
}

TEST_CASE("jacobi eigensolver") {
    CMat d(3, 3);
    d(0, 0) = 3.0;
    d(1, 1) = 1.0;
    d(2, 2) = 2.0;
    auto eig = hermitian_eigs(d);
    CHECK(eig.values == std::vector<double>{1.0, 2.0, 3.0});

    CMat sx(2, 2);
    sx(0, 1) = sx(1, 0) = 1.0;
    eig = hermitian_eigs(sx);
    CHECK(std::abs(eig.values[0] + 1.0) < 1e-14);
    CHECK(std::abs(eig.values[1] - 1.0) < 1e-14);

    CMat skew(2, 2);
    skew(0, 1) = 1.0;  // not Hermitian
    CHECK_THROWS_AS(hermitian_eigs(skew), std::invalid_argument);
}

TEST_CASE("jacobi eigensolver reconstruction") {
    auto rng = testutil::make_rng(32);
    std::normal_distribution<double> gauss;
    for (int d : {2, 5, 12, 30}) {
        CMat m(d, d);
        for (int i = 0; i < d; ++i) {
            m(i, i) = gauss(rng);
            for (int j = i + 1; j < d; ++j) {
                m(i, j) = cplx(gauss(rng), gauss(rng));
                m(j, i) = std::conj(m(i, j));
            }
        }
        const EigenDecomposition eig = hermitian_eigs(m);
        CHECK(std::is_sorted(eig.values.begin(), eig.values.end()));
        CHECK(max_abs_diff(eig.vectors * eig.vectors.adjoint(), CMat::identity(d)) < 1e-12);

        CMat lambda(d, d);
        for (int i = 0; i < d; ++i) lambda(i, i) = eig.values[i];
        CHECK(max_abs_diff(eig.vectors * lambda * eig.vectors.adjoint(), m) < 1e-10);
    }
}

TEST_CASE("dense spectrum equals the union of block energies") {
    const CayleyGraph c5 = cycle_graph(5);
    CavityParams p;
    p.xi = 0.6;
    const EigenDecomposition eig = hermitian_eigs(dense_manifold_hamiltonian(c5, p));

    std::vector<double> expected;
    for (double x : c5.spectrum()) {
        const double shifted = 0.5 * p.detuning() + p.xi * x;
        const double r = std::sqrt(2.0 * p.lambda * p.lambda + shifted * shifted);
        const double center = p.frame_shift(5) + p.xi * x;
        expected.push_back(center - r);
        expected.push_back(center + r);
    }
    std::sort(expected.begin(), expected.end());
    for (std::size_t i = 0; i < expected.size(); ++i)
        CHECK(std::abs(eig.values[i] - expected[i]) < 1e-9);
}

TEST_CASE("manifold closure") {
    CavityParams p;  // resonant defaults
    p.xi = 0.8;

    FiniteAbelianGroup z2({2});
    const CayleyGraph edge(z2, validate_generating_set(z2, {1}));
    ClosureReport r = full_space_closure_check(edge, p);
    CHECK(r.ok);
    CHECK(r.full_dim == 9);
    CHECK(r.max_leakage == 0.0);
    CHECK(r.max_restriction_error < 1e-12);
    CHECK(r.max_commutator_error < 1e-12);

    r = full_space_closure_check(cycle_graph(3), p);
    CHECK(r.ok);
    r = full_space_closure_check(cycle_graph(4), p);
    CHECK(r.ok);
    r = full_space_closure_check(hypercube_graph(2), p);
    CHECK(r.ok);

    CHECK_THROWS_AS(full_space_closure_check(cycle_graph(6), p), std::invalid_argument);
}

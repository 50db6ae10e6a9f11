// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances are fixed here, not configurable.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <vector>

#include "cavnet/cayley.hpp"
#include "cavnet/dynamics.hpp"
#include "cavnet/entanglement.hpp"
#include "cavnet/oracle.hpp"

using namespace cavnet;

namespace {

constexpr double kPi = std::numbers::pi;

int failures = 0;

void report(int id, const char* name, bool ok, double worst) {
    std::printf("%s  criterion %d (%s): worst=%.3g\n", ok ? "PASS" : "FAIL", id, name, worst);
    if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

CavityParams resonant(double xi) {
    CavityParams p;
    p.xi = xi;
    return p;
}

CavityParams resonant_zero_frame(double xi) {
    CavityParams p;
    p.omega_a = 0.0;
    p.omega_c = 0.0;
    p.xi = xi;
    return p;
}

CayleyGraph cycle_or_edge(int n) {
    if (n >= 3) return cycle_graph(n);
    FiniteAbelianGroup z2({2});
    return CayleyGraph(z2, validate_generating_set(z2, {1}));
}

// 1: C_6 photon-transfer probability pattern at T = 3 pi / (8 xi), xi = 100.
void criterion_photon_table() {
    const auto t0 = std::chrono::steady_clock::now();
    const double xi = 100.0;
    const ManifoldState s =
        evolve(cycle_graph(6), resonant(xi), photon_at(6, 0), 3.0 * kPi / (8.0 * xi));
    const double s2 = std::sqrt(2.0);
    const double p1 = (1.0 - s2 / 2.0) * (1.0 - s2 / 2.0) / 9.0;
    double worst = 0.0;
    bool ok = true;
    auto check = [&](double got, double want, double tol) {
        worst = std::max(worst, std::abs(got - want));
        ok = ok && std::abs(got - want) <= tol;
    };
    check(std::norm(s.C[0]), 2.0 / 9.0, 0.01);
    check(std::norm(s.C[3]), (3.0 + 2.0 * s2) / 9.0, 0.01);
    check(std::norm(s.C[1]), p1, 0.005);
    check(std::norm(s.C[5]), p1, 0.005);
    check(std::norm(s.C[2]), 1.0 / 18.0, 0.005);
    check(std::norm(s.C[4]), 1.0 / 18.0, 0.005);
    double pa = 0.0;
    for (int i = 0; i < 6; ++i) pa += std::norm(s.A[i]);
    ok = ok && pa < 0.01;
    ok = ok && seconds_since(t0) < 1.0;
    report(1, "C_6 photon-transfer table", ok, worst);
}

// 2: small-hopping W dynamics, n in {2, 4, 6}.
void criterion_small_hopping_w() {
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    bool ok = true;
    for (int n : {2, 4, 6}) {
        const CayleyGraph graph = cycle_or_edge(n);
        const CavityParams p = resonant_zero_frame(1e-3);
        const ManifoldState w = w_state(n);
        for (int k = 0; k <= 200; ++k) {
            const double t = 2.0 * kPi * k / 200.0;
            const auto [pa, pc] = total_probabilities(evolve(graph, p, w, t));
            const double err = std::abs(pa - std::sin(t) * std::sin(t));
            worst = std::max(worst, err);
            ok = ok && err < 2e-3;
        }
        const ManifoldState s = evolve(graph, p, w, kPi / 2.0);
        for (int i = 0; i < n; ++i) {
            const double err = std::abs(s.A[i] - cplx(0.0, -1.0 / std::sqrt(n)));
            worst = std::max(worst, err);
            ok = ok && err < 2e-3;
        }
    }
    ok = ok && seconds_since(t0) < 1.0;
    report(2, "small-hopping W dynamics", ok, worst);
}

// 3: negativity of the W pair state, eigensolver vs closed form.
void criterion_negativity() {
    double worst = 0.0;
    bool ok = true;

    const CayleyGraph edge = cycle_or_edge(2);
    const ManifoldState s = evolve(edge, resonant_zero_frame(1e-3), w_state(2), kPi / 2.0);
    const double n2 = negativity(two_atom_reduced(s, 0, 1));
    worst = std::max(worst, std::abs(n2 - 1.0));
    ok = ok && std::abs(n2 - 1.0) < 2e-3;

    for (int n : {3, 4, 6, 8}) {
        const TwoAtomDensity rho = w_pair_density(n);
        const double err = std::abs(negativity(rho) - w_negativity_closed_form(n));
        worst = std::max(worst, err);
        ok = ok && err < 1e-9;

        const EigenDecomposition eig = hermitian_eigs(partial_transpose_first(rho.rho));
        const double root = std::sqrt((n - 2.0) * (n - 2.0) + 4.0);
        std::vector<double> expected{(n - 2.0 - root) / (2.0 * n), 1.0 / n, 1.0 / n,
                                     (n - 2.0 + root) / (2.0 * n)};
        std::sort(expected.begin(), expected.end());
        for (int i = 0; i < 4; ++i) {
            const double e = std::abs(eig.values[i] - expected[i]);
            worst = std::max(worst, e);
            ok = ok && e < 1e-10;
        }
    }
    report(3, "negativity", ok, worst);
}

// 4: 50 random instances, closed form vs RK4.
void criterion_oracle_equivalence() {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(987654);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::normal_distribution<double> gauss;
    double worst = 0.0;
    bool ok = true;

    for (int inst = 0; inst < 50; ++inst) {
        std::vector<int> orders;
        int n = 1;
        do {
            orders.clear();
            n = 1;
            const int k = 1 + static_cast<int>(unif(rng) * 2.0);
            for (int i = 0; i < k; ++i) {
                const int f = 2 + static_cast<int>(unif(rng) * 5.0);
                orders.push_back(f);
                n *= f;
            }
        } while (n > 16);
        FiniteAbelianGroup g(orders);

        std::vector<int> elems;
        const int pairs = 1 + static_cast<int>(unif(rng) * 2.0);
        std::uniform_int_distribution<int> pick(1, n - 1);
        for (int i = 0; i < pairs; ++i) {
            const int e = pick(rng);
            elems.push_back(e);
            elems.push_back(g.inverse(e));
        }
        const CayleyGraph graph(g, validate_generating_set(g, elems));

        CavityParams p;
        p.xi = 10.0 * unif(rng);
        const double delta = -2.0 + 4.0 * unif(rng);
        p.lambda = 0.3 + 1.7 * unif(rng);
        p.omega_c = 1.0;
        p.omega_a = 2.0 * p.omega_c + delta;
        const double t = 20.0 * unif(rng);

        ManifoldState s0(n);
        for (int i = 0; i < n; ++i) {
            s0.C[i] = cplx(gauss(rng), gauss(rng));
            s0.A[i] = cplx(gauss(rng), gauss(rng));
        }
        const double nrm = s0.norm();
        for (int i = 0; i < n; ++i) {
            s0.C[i] /= nrm;
            s0.A[i] /= nrm;
        }

        const ManifoldState s1 = evolve(graph, p, s0, t);
        const CMat h = dense_manifold_hamiltonian(graph, p);
        std::vector<cplx> psi(2 * n);
        for (int i = 0; i < n; ++i) {
            psi[2 * i] = s0.C[i];
            psi[2 * i + 1] = s0.A[i];
        }
        psi = propagate_numeric(h, psi, t, suggest_time_step(h, t, 1e-9));
        for (int i = 0; i < n; ++i) {
            worst = std::max(worst, std::abs(psi[2 * i] - s1.C[i]));
            worst = std::max(worst, std::abs(psi[2 * i + 1] - s1.A[i]));
        }
    }
    ok = worst < 1e-8 && seconds_since(t0) < 30.0;
    report(4, "closed form vs numeric oracle (50 random instances)", ok, worst);
}

// 5: block structure of the dense Hamiltonian under (P x I_2).
void criterion_block_structure() {
    double worst = 0.0;
    bool ok = true;
    std::vector<CayleyGraph> graphs;
    for (int n = 3; n <= 8; ++n) graphs.push_back(cycle_graph(n));
    for (int d = 1; d <= 3; ++d) graphs.push_back(hypercube_graph(d));
    FiniteAbelianGroup z23({2, 3});
    graphs.emplace_back(z23, validate_generating_set(z23, {1, z23.inverse(1)}));

    for (const CayleyGraph& graph : graphs) {
        const int n = graph.order();
        CavityParams p;
        p.omega_a = 2.6;
        p.omega_c = 1.0;
        p.lambda = 0.9;
        p.xi = 1.4;
        const CMat h = dense_manifold_hamiltonian(graph, p);
        const CMat u = kron(graph.fourier(), CMat::identity(2));
        const CMat hb = u * h * u.adjoint();

        for (int i = 0; i < 2 * n; ++i)
            for (int j = 0; j < 2 * n; ++j)
                if (i / 2 != j / 2) {
                    worst = std::max(worst, std::abs(hb(i, j)));
                    ok = ok && std::abs(hb(i, j)) < 1e-11;
                }

        const std::vector<double> x = graph.spectrum();
        for (int k = 0; k < n; ++k) {
            CMat blk(2, 2);
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) blk(i, j) = hb(2 * k + i, 2 * k + j);
            const EigenDecomposition eig = hermitian_eigs(blk);
            const double shifted = 0.5 * p.detuning() + p.xi * x[k];
            const double rabi = std::sqrt(2.0 * p.lambda * p.lambda + shifted * shifted);
            const double center = p.frame_shift(n) + p.xi * x[k];
            const double err = std::max(std::abs(eig.values[0] - (center - rabi)),
                                        std::abs(eig.values[1] - (center + rabi)));
            worst = std::max(worst, err);
            ok = ok && err < 1e-10;
        }
    }
    report(5, "block structure and E_pm", ok, worst);
}

// 6: cycle and hypercube spectra, characters vs eigensolver.
void criterion_spectra() {
    double worst = 0.0;
    bool ok = true;

    for (int n = 3; n <= 12; ++n) {
        const CayleyGraph graph = cycle_graph(n);
        const std::vector<double> x = graph.spectrum();
        for (int l = 0; l < n; ++l) {
            const double err = std::abs(x[l] - 2.0 * std::cos(2.0 * kPi * l / n));
            worst = std::max(worst, err);
            ok = ok && err < 1e-12;
        }
        std::vector<double> xs = x;
        std::sort(xs.begin(), xs.end());
        const EigenDecomposition eig = hermitian_eigs(graph.adjacency());
        for (int i = 0; i < n; ++i) {
            const double err = std::abs(xs[i] - eig.values[i]);
            worst = std::max(worst, err);
            ok = ok && err < 1e-10;
        }
    }

    for (int d = 1; d <= 6; ++d) {
        const CayleyGraph graph = hypercube_graph(d);
        std::vector<double> xs = graph.spectrum();
        std::sort(xs.begin(), xs.end());
        std::vector<double> expected;
        for (int i = d; i >= 0; --i) {
            long long mult = 1;
            for (int j = 0; j < i; ++j) mult = mult * (d - j) / (j + 1);
            for (long long m = 0; m < mult; ++m) expected.push_back(d - 2.0 * i);
        }
        bool size_ok = expected.size() == xs.size();
        ok = ok && size_ok;
        if (size_ok)
            for (std::size_t i = 0; i < xs.size(); ++i) {
                const double err = std::abs(xs[i] - expected[i]);
                worst = std::max(worst, err);
                ok = ok && err < 1e-12;
            }
        const EigenDecomposition eig = hermitian_eigs(graph.adjacency());
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const double err = std::abs(xs[i] - eig.values[i]);
            worst = std::max(worst, err);
            ok = ok && err < 1e-10;
        }
    }
    report(6, "cycle and hypercube spectra", ok, worst);
}

// 7: manifold closure in the full 3^n space.
void criterion_manifold_closure() {
    double worst = 0.0;
    bool ok = true;
    CavityParams p;  // resonant defaults
    p.xi = 0.9;

    std::vector<CayleyGraph> graphs{cycle_or_edge(2), cycle_graph(3), cycle_graph(4),
                                    hypercube_graph(2)};
    for (const CayleyGraph& graph : graphs) {
        const ClosureReport r = full_space_closure_check(graph, p);
        worst = std::max({worst, r.max_leakage, r.max_restriction_error});
        ok = ok && r.max_leakage <= 1e-12 && r.max_restriction_error <= 1e-12;
    }
    report(7, "manifold closure", ok, worst);
}

// 8: large-hopping regime on the 4-cycle.
void criterion_large_hopping() {
    double worst = 0.0;
    bool ok = true;
    const CayleyGraph c4 = cycle_graph(4);
    const CavityParams p = resonant(1e3);

    double min_pc = 1.0;
    for (int k = 0; k <= 400; ++k) {
        const double t = 10.0 * k / 400.0;
        min_pc = std::min(min_pc, total_probabilities(evolve(c4, p, w_state(4), t)).second);
    }
    ok = ok && min_pc > 0.999;

    for (int k = 1; k <= 40; ++k) {
        const double t = 10.0 * k / 40.0;
        const ManifoldState approx =
            asymptotic_photon_amplitudes(c4, p, t, HoppingRegime::Large);
        const ManifoldState exact = evolve(c4, p, photon_at(4, 0), t);
        for (int i = 0; i < 4; ++i) {
            const double ec = std::abs(std::norm(approx.C[i]) - std::norm(exact.C[i]));
            const double ea = std::abs(std::norm(approx.A[i]) - std::norm(exact.A[i]));
            worst = std::max({worst, ec, ea});
            ok = ok && ec < 5e-3 && ea < 5e-3;
        }
    }
    report(8, "large-hopping regime", ok, worst);
}

// 9: Q_2 amplitudes against the explicit d = 2 closed forms.
void criterion_q2_amplitudes() {
    const CayleyGraph q2 = hypercube_graph(2);
    const CavityParams p = resonant(0.7);
    const double xi = p.xi, t = 1.3;
    const ManifoldState s = evolve(q2, p, photon_at(4, 0), t);

    const double root = std::sqrt(1.0 + 4.0 * xi * xi);
    const cplx i1(0.0, 1.0);
    const cplx frame = std::exp(-i1 * p.frame_shift(4) * t);
    const cplx em = std::exp(-2.0 * i1 * xi * t);
    const cplx ep = std::exp(2.0 * i1 * xi * t);

    double worst = 0.0;
    bool ok = true;
    for (int i = 0; i < 4; ++i) {
        const double chi1 = q2.group().character(1, i).real();
        const double chi2 = q2.group().character(2, i).real();
        const double chi3 = q2.group().character(3, i).real();
        const cplx c_expected =
            frame / (4.0 * root) *
            (root * (em + chi3 * ep) * std::cos(t * root) -
             2.0 * i1 * xi * (em - chi3 * ep) * std::sin(t * root) +
             root * (chi1 + chi2) * std::cos(t));
        const cplx a_expected = -i1 * frame / (4.0 * root) *
                                ((em + chi3 * ep) * std::sin(t * root) +
                                 root * (chi1 + chi2) * std::sin(t));
        worst = std::max({worst, std::abs(s.C[i] - c_expected), std::abs(s.A[i] - a_expected)});
    }
    ok = worst < 1e-10;
    report(9, "Q_2 closed-form amplitudes", ok, worst);
}

}  // namespace

int main() {
    criterion_photon_table();
    criterion_small_hopping_w();
    criterion_negativity();
    criterion_oracle_equivalence();
    criterion_block_structure();
    criterion_spectra();
    criterion_manifold_closure();
    criterion_large_hopping();
    criterion_q2_amplitudes();
    if (failures == 0) {
        std::printf("all acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d acceptance criteria FAILED\n", failures);
    return 1;
}

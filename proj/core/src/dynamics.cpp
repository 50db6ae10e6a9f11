#include "cavnet/dynamics.hpp"

#include <cmath>
#include <stdexcept>
#include <tuple>

namespace cavnet {

namespace {

constexpr cplx kI{0.0, 1.0};
constexpr double kZeroEigenvalueThreshold = 1e-9;

double norm_of(const std::vector<cplx>& c, const std::vector<cplx>& a) {
    double s = 0.0;
    for (const cplx& v : c) s += std::norm(v);
    for (const cplx& v : a) s += std::norm(v);
    return std::sqrt(s);
}

void check_site(int n, int site) {
    if (site < 0 || site >= n) throw std::out_of_range("site index out of range");
}

}  // namespace

bool CavityParams::resonant() const {
    return std::abs(detuning()) < 1e-12 && std::abs(lambda - 1.0 / std::sqrt(2.0)) < 1e-12;
}

void CavityParams::require_valid() const {
    if (!(lambda > 0.0)) throw std::invalid_argument("params: lambda must be positive");
    if (!(xi >= 0.0)) throw std::invalid_argument("params: xi must be non-negative");
}

void CavityParams::require_resonant() const {
    require_valid();
    if (!resonant())
        throw std::invalid_argument(
            "params: closed form requires Delta = 0 and lambda = 1/sqrt(2)");
}

double ManifoldState::norm() const { return norm_of(C, A); }
double BlockState::norm() const { return norm_of(C, A); }

ManifoldState w_state(int n) {
    if (n < 1) throw std::invalid_argument("w_state: need n >= 1");
    ManifoldState s(n);
    const double a = 1.0 / std::sqrt(static_cast<double>(n));
    for (int i = 0; i < n; ++i) s.C[i] = a;
    return s;
}

ManifoldState photon_at(int n, int site) {
    check_site(n, site);
    ManifoldState s(n);
    s.C[site] = 1.0;
    return s;
}

ManifoldState excitation_at(int n, int site) {
    check_site(n, site);
    ManifoldState s(n);
    s.A[site] = 1.0;
    return s;
}

BlockState to_block_basis(const CayleyGraph& graph, const ManifoldState& state) {
    const int n = graph.order();
    if (state.size() != n) throw std::invalid_argument("to_block_basis: dimension mismatch");
    const FiniteAbelianGroup& g = graph.group();
    BlockState b(n);
    const double s = 1.0 / std::sqrt(static_cast<double>(n));
    for (int j = 0; j < n; ++j) {
        cplx c{}, a{};
        for (int i = 0; i < n; ++i) {
            const cplx chi = g.character(j, i);
            c += chi * state.C[i];
            a += chi * state.A[i];
        }
        b.C[j] = s * c;
        b.A[j] = s * a;
    }
    return b;
}

ManifoldState from_block_basis(const CayleyGraph& graph, const BlockState& block) {
    const int n = graph.order();
    if (block.size() != n) throw std::invalid_argument("from_block_basis: dimension mismatch");
    const FiniteAbelianGroup& g = graph.group();
    ManifoldState s(n);
    const double f = 1.0 / std::sqrt(static_cast<double>(n));
    for (int i = 0; i < n; ++i) {
        cplx c{}, a{};
        for (int j = 0; j < n; ++j) {
            const cplx chi = std::conj(g.character(j, i));
            c += chi * block.C[j];
            a += chi * block.A[j];
        }
        s.C[i] = f * c;
        s.A[i] = f * a;
    }
    return s;
}

std::pair<double, double> total_probabilities(const ManifoldState& state) {
    double pa = 0.0, pc = 0.0;
    for (const cplx& v : state.A) pa += std::norm(v);
    for (const cplx& v : state.C) pc += std::norm(v);
    return {pa, pc};
}

std::pair<double, double> total_probabilities(const BlockState& block) {
    double pa = 0.0, pc = 0.0;
    for (const cplx& v : block.A) pa += std::norm(v);
    for (const cplx& v : block.C) pc += std::norm(v);
    return {pa, pc};
}

std::array<cplx, 4> block_hamiltonian(const CavityParams& params, int n, double x) {
    const double w = params.frame_shift(n);
    const double half_delta = 0.5 * params.detuning();
    const double coupling = std::sqrt(2.0) * params.lambda;
    return {cplx(w + half_delta + 2.0 * params.xi * x), cplx(coupling),
            cplx(coupling), cplx(w - half_delta)};
}

std::pair<cplx, cplx> evolve_block(const CavityParams& params, int n, double x,
                                   double t, cplx c0, cplx a0) {
    params.require_valid();
    const double shifted = 0.5 * params.detuning() + params.xi * x;
    const double rabi = std::sqrt(2.0 * params.lambda * params.lambda + shifted * shifted);
    const cplx phase = std::exp(-kI * (params.frame_shift(n) + params.xi * x) * t);
    const double ct = std::cos(rabi * t);
    const double st = std::sin(rabi * t);
    const cplx coupling = kI * std::sqrt(2.0) * params.lambda * st;
    const cplx c = phase / rabi * ((rabi * ct - kI * shifted * st) * c0 - coupling * a0);
    const cplx a = phase / rabi * ((rabi * ct + kI * shifted * st) * a0 - coupling * c0);
    return {c, a};
}

ManifoldState evolve(const CayleyGraph& graph, const CavityParams& params,
                     const ManifoldState& state0, double t) {
    const int n = graph.order();
    BlockState b = to_block_basis(graph, state0);
    const std::vector<double> x = graph.spectrum();
    for (int j = 0; j < n; ++j)
        std::tie(b.C[j], b.A[j]) = evolve_block(params, n, x[j], t, b.C[j], b.A[j]);
    return from_block_basis(graph, b);
}

ManifoldState photon_transfer_amplitudes(const CayleyGraph& graph,
                                         const CavityParams& params, double t) {
    params.require_resonant();
    const int n = graph.order();
    const FiniteAbelianGroup& g = graph.group();
    const std::vector<double> x = graph.spectrum();
    const double w = params.frame_shift(n);
    ManifoldState s(n);
    for (int i = 0; i < n; ++i) {
        cplx c{}, a{};
        for (int j = 0; j < n; ++j) {
            const double xx = params.xi * x[j];
            const double rabi = std::sqrt(1.0 + xx * xx);
            const cplx phase = std::exp(-kI * (w + xx) * t);
            const cplx chi = std::conj(g.character(j, i));
            c += phase / rabi * (rabi * std::cos(t * rabi) - kI * xx * std::sin(t * rabi)) * chi;
            a += -kI * phase / rabi * std::sin(t * rabi) * chi;
        }
        s.C[i] = c / static_cast<double>(n);
        s.A[i] = a / static_cast<double>(n);
    }
    return s;
}

ManifoldState excitation_transfer_amplitudes(const CayleyGraph& graph,
                                             const CavityParams& params, double t) {
    params.require_resonant();
    const int n = graph.order();
    const FiniteAbelianGroup& g = graph.group();
    const std::vector<double> x = graph.spectrum();
    const double w = params.frame_shift(n);
    ManifoldState s(n);
    for (int i = 0; i < n; ++i) {
        cplx c{}, a{};
        for (int j = 0; j < n; ++j) {
            const double xx = params.xi * x[j];
            const double rabi = std::sqrt(1.0 + xx * xx);
            const cplx phase = std::exp(-kI * (w + xx) * t);
            const cplx chi = std::conj(g.character(j, i));
            c += -kI * phase / rabi * std::sin(t * rabi) * chi;
            a += phase / rabi * (rabi * std::cos(t * rabi) + kI * xx * std::sin(t * rabi)) * chi;
        }
        s.C[i] = c / static_cast<double>(n);
        s.A[i] = a / static_cast<double>(n);
    }
    return s;
}

ManifoldState asymptotic_photon_amplitudes(const CayleyGraph& graph,
                                           const CavityParams& params, double t,
                                           HoppingRegime regime) {
    params.require_resonant();
    const int n = graph.order();
    const FiniteAbelianGroup& g = graph.group();
    const std::vector<double> x = graph.spectrum();
    const cplx frame = std::exp(-kI * params.frame_shift(n) * t);
    ManifoldState s(n);
    for (int i = 0; i < n; ++i) {
        cplx c{}, a{};
        for (int j = 0; j < n; ++j) {
            const cplx chi = std::conj(g.character(j, i));
            if (regime == HoppingRegime::Small) {
                c += std::cos(t) * chi;
                a += -kI * std::sin(t) * chi;
            } else if (std::abs(x[j]) < kZeroEigenvalueThreshold) {
                c += std::cos(t) * chi;
                a += -kI * std::sin(t) * chi;
            } else {
                c += std::exp(-2.0 * kI * params.xi * x[j] * t) * chi;
            }
        }
        s.C[i] = frame * c / static_cast<double>(n);
        s.A[i] = frame * a / static_cast<double>(n);
    }
    return s;
}

}  // namespace cavnet

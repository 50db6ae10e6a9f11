#pragma once

#include <array>
#include <utility>
#include <vector>

#include "cavnet/cayley.hpp"
#include "cavnet/matrix.hpp"

namespace cavnet {

/// Physical constants of the identical atom-cavity sites (hbar = 1, rates in
/// rad/time). Defaults put the system on two-photon resonance with unit Rabi
/// frequency: lambda = 1/sqrt(2), omega_a = 2*omega_c.
struct CavityParams {
    double omega_a = 2.0;   ///< atomic level splitting
    double omega_c = 1.0;   ///< cavity frequency
    double lambda = 0.7071067811865476;  ///< atom-field coupling, > 0
    double xi = 1.0;        ///< two-photon hopping rate, >= 0

    /// Detuning Delta = omega_a - 2*omega_c.
    double detuning() const { return omega_a - 2.0 * omega_c; }

    /// Global energy offset omega = [(2-n)*omega_a - Delta]/2 for an n-site
    /// manifold.
    double frame_shift(int n) const {
        return 0.5 * ((2.0 - n) * omega_a - detuning());
    }

    bool resonant() const;
    void require_valid() const;   ///< lambda > 0, xi >= 0
    void require_resonant() const;
};

/// Amplitudes over the 2n-dimensional single-pair manifold: C[i] multiplies
/// |c_i> (two photons in cavity i, all atoms ground) and A[i] multiplies
/// |a_i> (atom i excited, no photons).
struct ManifoldState {
    std::vector<cplx> C;
    std::vector<cplx> A;

    ManifoldState() = default;
    explicit ManifoldState(int n) : C(n), A(n) {}

    int size() const { return static_cast<int>(C.size()); }
    double norm() const;
};

/// Same amplitudes in the character (Fourier) basis |c_j>', |a_j>'.
struct BlockState {
    std::vector<cplx> C;
    std::vector<cplx> A;

    BlockState() = default;
    explicit BlockState(int n) : C(n), A(n) {}

    int size() const { return static_cast<int>(C.size()); }
    double norm() const;
};

ManifoldState w_state(int n);
ManifoldState photon_at(int n, int site);
ManifoldState excitation_at(int n, int site);

/// C'_j = (1/sqrt n) sum_i chi_j(alpha_i) C_i, likewise for A.
BlockState to_block_basis(const CayleyGraph& graph, const ManifoldState& state);

/// Exact inverse: C_i = (1/sqrt n) sum_j conj(chi_j(alpha_i)) C'_j.
ManifoldState from_block_basis(const CayleyGraph& graph, const BlockState& block);

/// (P_a, P_c) = (sum |A_i|^2, sum |C_i|^2); identical in either basis.
std::pair<double, double> total_probabilities(const ManifoldState& state);
std::pair<double, double> total_probabilities(const BlockState& block);

/// 2x2 block of H in the character basis at adjacency eigenvalue x:
/// [[omega + Delta/2 + 2 xi x, sqrt(2) lambda], [sqrt(2) lambda, omega - Delta/2]].
std::array<cplx, 4> block_hamiltonian(const CavityParams& params, int n, double x);

/// Closed-form propagation of one 2x2 block for time t. Rabi frequency
/// sqrt(2 lambda^2 + (Delta/2 + xi x)^2) is positive whenever lambda > 0,
/// so there is no singular case.
std::pair<cplx, cplx> evolve_block(const CavityParams& params, int n, double x,
                                   double t, cplx c0, cplx a0);

/// Exact unitary evolution of a manifold state: Fourier to the block basis,
/// per-block closed form, Fourier back.
ManifoldState evolve(const CayleyGraph& graph, const CavityParams& params,
                     const ManifoldState& state0, double t);

/// Photon-transfer amplitudes from cavity 0 at resonance (Delta = 0,
/// lambda = 1/sqrt 2), evaluated from the explicit character sum. Agrees with
/// evolve(photon_at(n, 0), t).
ManifoldState photon_transfer_amplitudes(const CayleyGraph& graph,
                                         const CavityParams& params, double t);

/// Excitation-transfer amplitudes from atom 0 at resonance.
ManifoldState excitation_transfer_amplitudes(const CayleyGraph& graph,
                                             const CavityParams& params, double t);

enum class HoppingRegime { Small, Large };

/// Asymptotic photon-transfer amplitudes. The large-hopping form partitions
/// character indices by x_j = 0 versus x_j != 0 with threshold |x_j| < 1e-9.
ManifoldState asymptotic_photon_amplitudes(const CayleyGraph& graph,
                                           const CavityParams& params, double t,
                                           HoppingRegime regime);

}  // namespace cavnet

#pragma once

#include <string>
#include <vector>

#include "cavnet/cayley.hpp"
#include "cavnet/dynamics.hpp"
#include "cavnet/matrix.hpp"

namespace cavnet {

/// 2n x 2n manifold Hamiltonian, basis ordering |c_0>, |a_0>, ..., |c_{n-1}>, |a_{n-1}>:
///   H = I_n (x) [[omega + Delta/2, sqrt(2) lambda], [sqrt(2) lambda, omega - Delta/2]]
///       + 2 xi A (x) [[1, 0], [0, 0]].
CMat dense_manifold_hamiltonian(const CayleyGraph& graph, const CavityParams& params);

/// Fixed-step classic 4th-order integration of i dpsi/dt = H psi. Aborts if
/// the accumulated norm drift exceeds 1e-6, which signals that dt is too
/// large for this H.
std::vector<cplx> propagate_numeric(const CMat& H, std::vector<cplx> psi0,
                                    double t, double dt);

/// Step size for propagate_numeric targeting roughly `tol` amplitude error
/// over horizon t, from the 4th-order local error model.
double suggest_time_step(const CMat& H, double t, double tol = 1e-9);

struct EigenDecomposition {
    std::vector<double> values;  ///< ascending
    CMat vectors;                ///< columns, unitary
};

/// Cyclic Jacobi diagonalization of a complex Hermitian matrix. Each sweep
/// applies a phase rotation to make the pivot real followed by the classic
/// symmetric rotation. Throws after 100 sweeps without convergence.
EigenDecomposition hermitian_eigs(const CMat& M);

/// Result of building H on the full 3^n product space (per-site states
/// |g,0>, |g,2>, |e,0>) and restricting it to the 2n manifold.
struct ClosureReport {
    bool ok = false;
    int full_dim = 0;
    double max_leakage = 0.0;          ///< off-manifold column entries
    double max_restriction_error = 0.0;  ///< restriction vs manifold H
    double max_commutator_error = 0.0;   ///< [H_restricted, N_restricted]
    std::string note;
};

/// Verifies that the 2n-dimensional manifold is invariant under the full
/// Hamiltonian, that its restriction matches dense_manifold_hamiltonian, and
/// that the conserved operator N = sum_i (a^dag a / 2 + s_z) commutes with
/// the restriction. Requires n <= 5.
ClosureReport full_space_closure_check(const CayleyGraph& graph, const CavityParams& params);

}  // namespace cavnet

#pragma once

#include "cavnet/dynamics.hpp"
#include "cavnet/matrix.hpp"

namespace cavnet {

/// Reduced state of a pair of atoms over the ordered basis
/// {|gg>, |ge>, |eg>, |ee>}; the first (left) qubit is atom l.
struct TwoAtomDensity {
    CMat rho;  // 4x4 Hermitian, trace 1
};

/// Traces a manifold state down to atoms l and m. Within the manifold the
/// photonic components |c_k> all land on |gg><gg|, and only A_l, A_m carry
/// coherence:
///   rho = (sum_{k != l,m} |A_k|^2 + sum_k |C_k|^2) |gg><gg|
///       + |A_l|^2 |eg><eg| + |A_m|^2 |ge><ge|
///       + A_l conj(A_m) |eg><ge| + A_m conj(A_l) |ge><eg|.
TwoAtomDensity two_atom_reduced(const ManifoldState& state, int l, int m);

/// Partial transpose on the first qubit.
CMat partial_transpose_first(const CMat& rho);

/// Negativity sum_i |lambda_i| - 1 over eigenvalues of the partial
/// transpose. Can dip a rounding error below zero for separable states.
double negativity_raw(const TwoAtomDensity& rho);

/// negativity_raw clamped at zero.
double negativity(const TwoAtomDensity& rho);

/// Closed form (1/n)[sqrt((n-2)^2 + 4) - (n-2)] for the pair state reached
/// from the photonic W-state after a quarter period at small hopping.
double w_negativity_closed_form(int n);

/// The small-hopping W-scenario pair state at t = pi/2:
/// (1 - 2/n)|gg><gg| + (1/n)(|eg><eg| + |ge><ge| + |eg><ge| + |ge><eg|).
TwoAtomDensity w_pair_density(int n);

}  // namespace cavnet

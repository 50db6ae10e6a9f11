#include "cavnet/entanglement.hpp"

#include <cmath>
#include <stdexcept>

#include "cavnet/oracle.hpp"

namespace cavnet {

namespace {
// basis index = 2*(first qubit) + (second qubit), with e = 1
constexpr int kGG = 0, kGE = 1, kEG = 2;
}  // namespace

TwoAtomDensity two_atom_reduced(const ManifoldState& state, int l, int m) {
    const int n = state.size();
    if (l == m) throw std::invalid_argument("two_atom_reduced: atoms must be distinct");
    if (l < 0 || l >= n || m < 0 || m >= n)
        throw std::out_of_range("two_atom_reduced: site index out of range");

    double gg = 0.0;
    for (const cplx& c : state.C) gg += std::norm(c);
    for (int k = 0; k < n; ++k)
        if (k != l && k != m) gg += std::norm(state.A[k]);

    TwoAtomDensity d{CMat(4, 4)};
    d.rho(kGG, kGG) = gg;
    d.rho(kEG, kEG) = std::norm(state.A[l]);
    d.rho(kGE, kGE) = std::norm(state.A[m]);
    d.rho(kEG, kGE) = state.A[l] * std::conj(state.A[m]);
    d.rho(kGE, kEG) = state.A[m] * std::conj(state.A[l]);
    return d;
}

CMat partial_transpose_first(const CMat& rho) {
    if (rho.rows() != 4 || rho.cols() != 4)
        throw std::invalid_argument("partial_transpose_first: expected 4x4");
    CMat out(4, 4);
    for (int i1 = 0; i1 < 2; ++i1)
        for (int i2 = 0; i2 < 2; ++i2)
            for (int j1 = 0; j1 < 2; ++j1)
                for (int j2 = 0; j2 < 2; ++j2)
                    out(2 * i1 + i2, 2 * j1 + j2) = rho(2 * j1 + i2, 2 * i1 + j2);
    return out;
}

double negativity_raw(const TwoAtomDensity& rho) {
    const EigenDecomposition eig = hermitian_eigs(partial_transpose_first(rho.rho));
    double s = 0.0;
    for (double v : eig.values) s += std::abs(v);
    return s - 1.0;
}

double negativity(const TwoAtomDensity& rho) {
    return std::max(0.0, negativity_raw(rho));
}

double w_negativity_closed_form(int n) {
    if (n < 2) throw std::invalid_argument("w_negativity_closed_form: need n >= 2");
    const double m = n - 2.0;
    return (std::sqrt(m * m + 4.0) - m) / n;
}

TwoAtomDensity w_pair_density(int n) {
    if (n < 2) throw std::invalid_argument("w_pair_density: need n >= 2");
    TwoAtomDensity d{CMat(4, 4)};
    d.rho(kGG, kGG) = 1.0 - 2.0 / n;
    d.rho(kEG, kEG) = d.rho(kGE, kGE) = 1.0 / n;
    d.rho(kEG, kGE) = d.rho(kGE, kEG) = 1.0 / n;
    return d;
}

}  // namespace cavnet

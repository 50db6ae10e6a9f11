#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "cavnet/group.hpp"
#include "cavnet/matrix.hpp"

namespace cavnet {

/// Symmetric generating set, stored as sorted element indices.
/// `connected` records whether the set generates the whole group; a false
/// value is a warning condition, not an error (the dynamics stay valid per
/// component).
struct GeneratingSet {
    std::vector<int> elements;
    bool connected = true;

    int degree() const { return static_cast<int>(elements.size()); }
};

/// Rejects sets containing the identity or violating S = S^{-1}.
GeneratingSet validate_generating_set(const FiniteAbelianGroup& group,
                                      std::vector<int> elements);

/// Cayley graph of an abelian group with a symmetric generating set.
/// The adjacency matrix is |S|-regular with A[g][h] = 1 iff h = g*s, s in S;
/// its eigenvalues are the character sums x_k = sum_{s in S} chi_k(s).
class CayleyGraph {
public:
    CayleyGraph(FiniteAbelianGroup group, GeneratingSet gens);

    const FiniteAbelianGroup& group() const { return group_; }
    const GeneratingSet& gens() const { return gens_; }
    int order() const { return group_.order(); }
    int degree() const { return gens_.degree(); }

    /// n x n dense 0/1 adjacency matrix.
    const CMat& adjacency() const { return adj_; }

    /// x_k = sum_{s in S} chi_k(s), indexed by character index. Throws if a
    /// residual imaginary part above 1e-12*|S| survives (the set was not
    /// actually symmetric).
    std::vector<double> spectrum() const;

    /// Generalized Fourier transform P with P(k, l) = chi_k(l)/sqrt(n);
    /// unitary, and P A P^dag = diag(spectrum()).
    CMat fourier() const;

private:
    FiniteAbelianGroup group_;
    GeneratingSet gens_;
    CMat adj_;
};

/// Cycle C_n: Z_n with S = {1, n-1}. Requires n >= 3.
CayleyGraph cycle_graph(int n);

/// Hypercube Q_d: Z_2^d with the standard basis vectors. Requires d >= 1.
CayleyGraph hypercube_graph(int d);

/// Parses the CLI generator syntax: comma-separated element specs, each a
/// plain index or colon-separated residues, e.g. "1,5" or "1:0,0:1".
std::vector<int> parse_gens_spec(const FiniteAbelianGroup& group, std::string_view spec);

}  // namespace cavnet

#pragma once

#include <string_view>
#include <vector>

#include "cavnet/matrix.hpp"

namespace cavnet {

/// Finite abelian group given as a product of cyclic factors Z_{n_1} x ... x Z_{n_k}.
///
/// Elements are addressed by a single index in [0, n) using a mixed-radix
/// encoding with the first factor fastest-varying:
///   index = r_0 + n_1 * (r_1 + n_2 * (r_2 + ...)).
/// The identity is index 0. Character indices use the same encoding, which
/// makes character(k, l) symmetric in its two arguments.
class FiniteAbelianGroup {
public:
    /// Rejects an empty factor list and any factor below 2.
    explicit FiniteAbelianGroup(std::vector<int> orders);

    int order() const { return order_; }
    const std::vector<int>& factor_orders() const { return orders_; }

    std::vector<int> element_of(int index) const;
    int index_of(const std::vector<int>& residues) const;

    int multiply(int g, int h) const;
    int inverse(int g) const;

    /// chi_k(l) = prod_j exp(2*pi*i * k_j * l_j / n_j) over mixed-radix digits.
    cplx character(int k, int l) const;

    /// n x n table with entry (k, l) = character(k, l).
    CMat character_table() const;

    bool operator==(const FiniteAbelianGroup& o) const { return orders_ == o.orders_; }

private:
    void check_index(int i) const;

    std::vector<int> orders_;
    int order_ = 0;
};

/// Parses a CLI group spec: "z6" or "z2xz2xz2" (case-insensitive).
FiniteAbelianGroup parse_group_spec(std::string_view spec);

}  // namespace cavnet

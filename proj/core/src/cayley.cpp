#include "cavnet/cayley.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

namespace cavnet {

GeneratingSet validate_generating_set(const FiniteAbelianGroup& group,
                                      std::vector<int> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    if (elements.empty())
        throw std::invalid_argument("generating set: must be nonempty");
    for (int e : elements) {
        if (e < 0 || e >= group.order())
            throw std::out_of_range("generating set: element index out of range");
        if (e == 0)
            throw std::invalid_argument("generating set: identity element not allowed");
        if (!std::binary_search(elements.begin(), elements.end(), group.inverse(e)))
            throw std::invalid_argument("generating set: not symmetric (S != S^-1)");
    }

    // subgroup closure by breadth-first products
    std::set<int> closure{0};
    std::vector<int> frontier{0};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int g : frontier)
            for (int s : elements) {
                int h = group.multiply(g, s);
                if (closure.insert(h).second) next.push_back(h);
            }
        frontier = std::move(next);
    }

    GeneratingSet gs;
    gs.elements = std::move(elements);
    gs.connected = static_cast<int>(closure.size()) == group.order();
    return gs;
}

CayleyGraph::CayleyGraph(FiniteAbelianGroup group, GeneratingSet gens)
    : group_(std::move(group)), gens_(std::move(gens)), adj_(group_.order(), group_.order()) {
    const int n = group_.order();
    for (int g = 0; g < n; ++g)
        for (int s : gens_.elements) adj_(g, group_.multiply(g, s)) = 1.0;
}

std::vector<double> CayleyGraph::spectrum() const {
    const int n = group_.order();
    std::vector<double> x(n);
    const double tol = 1e-12 * std::max(1, degree());
    for (int k = 0; k < n; ++k) {
        cplx sum{};
        for (int s : gens_.elements) sum += group_.character(k, s);
        if (std::abs(sum.imag()) > tol)
            throw std::runtime_error("spectrum: residual imaginary part " +
                                     std::to_string(sum.imag()) +
                                     " (generating set not symmetric?)");
        x[k] = sum.real();
    }
    return x;
}

CMat CayleyGraph::fourier() const {
    const int n = group_.order();
    CMat p = group_.character_table();
    const double s = 1.0 / std::sqrt(static_cast<double>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) p(i, j) *= s;
    return p;
}

CayleyGraph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
    FiniteAbelianGroup g({n});
    return CayleyGraph(g, validate_generating_set(g, {1, n - 1}));
}

CayleyGraph hypercube_graph(int d) {
    if (d < 1) throw std::invalid_argument("hypercube_graph: need d >= 1");
    FiniteAbelianGroup g(std::vector<int>(d, 2));
    std::vector<int> basis;
    for (int j = 0; j < d; ++j) {
        std::vector<int> r(d, 0);
        r[j] = 1;
        basis.push_back(g.index_of(r));
    }
    return CayleyGraph(g, validate_generating_set(g, basis));
}

std::vector<int> parse_gens_spec(const FiniteAbelianGroup& group, std::string_view spec) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        std::size_t comma = spec.find(',', pos);
        std::string tok(spec.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                         : comma - pos));
        if (tok.empty()) throw std::invalid_argument("gens spec: empty element");
        if (tok.find(':') == std::string::npos) {
            out.push_back(std::stoi(tok));
        } else {
            std::vector<int> residues;
            std::size_t p = 0;
            while (p <= tok.size()) {
                std::size_t colon = tok.find(':', p);
                std::string digit = tok.substr(p, colon == std::string::npos ? std::string::npos
                                                                             : colon - p);
                if (digit.empty()) throw std::invalid_argument("gens spec: empty residue digit");
                residues.push_back(std::stoi(digit));
                if (colon == std::string::npos) break;
                p = colon + 1;
            }
            if (residues.size() != group.factor_orders().size())
                throw std::invalid_argument("gens spec: residue count does not match group factors");
            out.push_back(group.index_of(residues));
        }
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

}  // namespace cavnet

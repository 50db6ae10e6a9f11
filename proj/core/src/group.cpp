#include "cavnet/group.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cavnet {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<int> orders)
    : orders_(std::move(orders)) {
    if (orders_.empty())
        throw std::invalid_argument("group: factor list must be nonempty");
    long long n = 1;
    for (int nj : orders_) {
        if (nj < 2) throw std::invalid_argument("group: every cyclic factor must have order >= 2");
        n *= nj;
        if (n > (1 << 20)) throw std::invalid_argument("group: order too large");
    }
    order_ = static_cast<int>(n);
}

void FiniteAbelianGroup::check_index(int i) const {
    if (i < 0 || i >= order_)
        throw std::out_of_range("group: element index out of range");
}

std::vector<int> FiniteAbelianGroup::element_of(int index) const {
    check_index(index);
    std::vector<int> r(orders_.size());
    for (std::size_t j = 0; j < orders_.size(); ++j) {
        r[j] = index % orders_[j];
        index /= orders_[j];
    }
    return r;
}

int FiniteAbelianGroup::index_of(const std::vector<int>& residues) const {
    if (residues.size() != orders_.size())
        throw std::invalid_argument("group: residue vector has wrong length");
    int index = 0;
    for (std::size_t j = orders_.size(); j-- > 0;) {
        int r = residues[j] % orders_[j];
        if (r < 0) r += orders_[j];
        index = index * orders_[j] + r;
    }
    return index;
}

int FiniteAbelianGroup::multiply(int g, int h) const {
    check_index(g);
    check_index(h);
    std::vector<int> a = element_of(g), b = element_of(h);
    for (std::size_t j = 0; j < a.size(); ++j) a[j] = (a[j] + b[j]) % orders_[j];
    return index_of(a);
}

int FiniteAbelianGroup::inverse(int g) const {
    check_index(g);
    std::vector<int> a = element_of(g);
    for (std::size_t j = 0; j < a.size(); ++j) a[j] = (orders_[j] - a[j]) % orders_[j];
    return index_of(a);
}

cplx FiniteAbelianGroup::character(int k, int l) const {
    check_index(k);
    check_index(l);
    double phase = 0.0;
    for (std::size_t j = 0; j < orders_.size(); ++j) {
        const int kj = k % orders_[j];
        const int lj = l % orders_[j];
        k /= orders_[j];
        l /= orders_[j];
        // accumulate the fractional part only, so the argument to exp stays small
        phase += static_cast<double>((kj * lj) % orders_[j]) / orders_[j];
    }
    return std::exp(cplx(0.0, 2.0 * std::numbers::pi * phase));
}

CMat FiniteAbelianGroup::character_table() const {
    CMat t(order_, order_);
    for (int k = 0; k < order_; ++k)
        for (int l = 0; l < order_; ++l) t(k, l) = character(k, l);
    return t;
}

FiniteAbelianGroup parse_group_spec(std::string_view spec) {
    std::vector<int> orders;
    std::string token;
    auto flush = [&] {
        if (token.size() < 2 || (token[0] != 'z' && token[0] != 'Z'))
            throw std::invalid_argument("group spec: expected factors like z6 or z2xz2");
        orders.push_back(std::stoi(token.substr(1)));
        token.clear();
    };
    for (char c : spec) {
        if (c == 'x' || c == 'X')
            flush();
        else if (!std::isspace(static_cast<unsigned char>(c)))
            token.push_back(c);
    }
    if (token.empty()) throw std::invalid_argument("group spec: empty");
    flush();
    return FiniteAbelianGroup(orders);
}

}  // namespace cavnet

#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace cavnet {

using cplx = std::complex<double>;

/// Dense row-major complex matrix. Sizes here are small (a few hundred at
/// most), so no sparse or blocked storage is attempted.
class CMat {
public:
    CMat() = default;
    CMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static CMat identity(std::size_t n) {
        CMat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    cplx& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const {
        return a_[i * cols_ + j];
    }

    CMat adjoint() const {
        CMat m(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                m(j, i) = std::conj((*this)(i, j));
        return m;
    }

    CMat operator*(const CMat& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("CMat: size mismatch in product");
        CMat m(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const cplx v = (*this)(i, k);
                if (v == cplx{}) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    m(i, j) += v * o(k, j);
            }
        return m;
    }

    CMat operator+(const CMat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("CMat: size mismatch in sum");
        CMat m(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + o.a_[i];
        return m;
    }

    CMat operator-(const CMat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("CMat: size mismatch in difference");
        CMat m(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] - o.a_[i];
        return m;
    }

    CMat scaled(cplx s) const {
        CMat m(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = s * a_[i];
        return m;
    }

    std::vector<cplx> apply(const std::vector<cplx>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("CMat: size mismatch in apply");
        std::vector<cplx> w(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            cplx s{};
            for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * v[j];
            w[i] = s;
        }
        return w;
    }

    double max_abs() const {
        double m = 0.0;
        for (const cplx& v : a_) m = std::max(m, std::abs(v));
        return m;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<cplx> a_;
};

inline double max_abs_diff(const CMat& a, const CMat& b) { return (a - b).max_abs(); }

/// A ⊗ B.
inline CMat kron(const CMat& a, const CMat& b) {
    CMat m(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    m(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return m;
}

}  // namespace cavnet

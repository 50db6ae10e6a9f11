#include "cavnet/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cavnet {

namespace {

constexpr cplx kI{0.0, 1.0};

double vec_norm(const std::vector<cplx>& v) {
    double s = 0.0;
    for (const cplx& x : v) s += std::norm(x);
    return std::sqrt(s);
}

}  // namespace

CMat dense_manifold_hamiltonian(const CayleyGraph& graph, const CavityParams& params) {
    const int n = graph.order();
    const double w = params.frame_shift(n);
    const double hd = 0.5 * params.detuning();
    const double coupling = std::sqrt(2.0) * params.lambda;

    CMat site(2, 2);
    site(0, 0) = w + hd;
    site(0, 1) = coupling;
    site(1, 0) = coupling;
    site(1, 1) = w - hd;

    CMat hop(2, 2);
    hop(0, 0) = 1.0;

    return kron(CMat::identity(n), site) + kron(graph.adjacency(), hop).scaled(2.0 * params.xi);
}

std::vector<cplx> propagate_numeric(const CMat& H, std::vector<cplx> psi, double t, double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("propagate_numeric: dt must be positive");
    if (psi.size() != H.rows()) throw std::invalid_argument("propagate_numeric: dimension mismatch");
    if (t <= 0.0) return psi;

    const double norm0 = vec_norm(psi);
    const long steps = std::max(1L, std::lround(std::ceil(t / dt)));
    const double h = t / static_cast<double>(steps);
    const std::size_t d = psi.size();

    auto deriv = [&H](const std::vector<cplx>& v) {
        std::vector<cplx> w = H.apply(v);
        for (cplx& x : w) x *= -kI;
        return w;
    };

    std::vector<cplx> tmp(d);
    for (long s = 0; s < steps; ++s) {
        const std::vector<cplx> k1 = deriv(psi);
        for (std::size_t i = 0; i < d; ++i) tmp[i] = psi[i] + 0.5 * h * k1[i];
        const std::vector<cplx> k2 = deriv(tmp);
        for (std::size_t i = 0; i < d; ++i) tmp[i] = psi[i] + 0.5 * h * k2[i];
        const std::vector<cplx> k3 = deriv(tmp);
        for (std::size_t i = 0; i < d; ++i) tmp[i] = psi[i] + h * k3[i];
        const std::vector<cplx> k4 = deriv(tmp);
        for (std::size_t i = 0; i < d; ++i)
            psi[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }

    const double drift = std::abs(vec_norm(psi) - norm0);
    if (drift > 1e-6)
        throw std::runtime_error("propagate_numeric: norm drift " + std::to_string(drift) +
                                 " exceeds 1e-6; decrease dt");
    return psi;
}

double suggest_time_step(const CMat& H, double t, double tol) {
    // crude spectral radius bound from the max absolute row sum
    double rho = 0.0;
    for (std::size_t i = 0; i < H.rows(); ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < H.cols(); ++j) s += std::abs(H(i, j));
        rho = std::max(rho, s);
    }
    rho = std::max(rho, 1e-6);
    t = std::max(t, 1e-6);
    // global RK4 error ~ t * rho * (h rho)^4 / 120
    const double h = std::pow(120.0 * tol / (t * std::pow(rho, 5.0)), 0.25);
    return std::min(h / 2.0, 0.05 / rho);
}

EigenDecomposition hermitian_eigs(const CMat& M) {
    const std::size_t d = M.rows();
    if (M.cols() != d) throw std::invalid_argument("hermitian_eigs: matrix must be square");
    if (max_abs_diff(M, M.adjoint()) > 1e-10 * std::max(1.0, M.max_abs()))
        throw std::invalid_argument("hermitian_eigs: matrix not Hermitian");

    CMat a = M;
    CMat v = CMat::identity(d);

    const int max_sweeps = 100;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < d; ++p)
            for (std::size_t q = p + 1; q < d; ++q) off += std::norm(a(p, q));
        if (off < 1e-30 * std::max(1.0, M.max_abs() * M.max_abs())) {
            EigenDecomposition out;
            out.values.resize(d);
            for (std::size_t i = 0; i < d; ++i) out.values[i] = a(i, i).real();
            // sort ascending, permuting eigenvector columns alongside
            std::vector<std::size_t> perm(d);
            std::iota(perm.begin(), perm.end(), 0);
            std::sort(perm.begin(), perm.end(),
                      [&out](std::size_t i, std::size_t j) { return out.values[i] < out.values[j]; });
            EigenDecomposition sorted;
            sorted.values.resize(d);
            sorted.vectors = CMat(d, d);
            for (std::size_t c = 0; c < d; ++c) {
                sorted.values[c] = out.values[perm[c]];
                for (std::size_t r = 0; r < d; ++r) sorted.vectors(r, c) = v(r, perm[c]);
            }
            return sorted;
        }

        for (std::size_t p = 0; p < d; ++p)
            for (std::size_t q = p + 1; q < d; ++q) {
                const double r = std::abs(a(p, q));
                if (r < 1e-300) continue;
                const cplx phase = a(p, q) / r;  // e^{i alpha}
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                // rotation angle zeroing the (now real) pivot
                const double theta = (aqq - app) / (2.0 * r);
                const double tt = (theta >= 0.0 ? 1.0 : -1.0) /
                                  (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                const double c = 1.0 / std::sqrt(1.0 + tt * tt);
                const double s = tt * c;
                const cplx jp = c * phase;   // J(p,p)
                const cplx jq = s * phase;   // J(p,q)

                // columns: A <- A J, V <- V J
                for (std::size_t k = 0; k < d; ++k) {
                    const cplx akp = a(k, p), akq = a(k, q);
                    a(k, p) = akp * jp - akq * s;
                    a(k, q) = akp * jq + akq * c;
                    const cplx vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = vkp * jp - vkq * s;
                    v(k, q) = vkp * jq + vkq * c;
                }
                // rows: A <- J^dag A
                for (std::size_t k = 0; k < d; ++k) {
                    const cplx apk = a(p, k), aqk = a(q, k);
                    a(p, k) = std::conj(jp) * apk - s * aqk;
                    a(q, k) = std::conj(jq) * apk + c * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
            }
    }
    throw std::runtime_error("hermitian_eigs: no convergence after 100 sweeps");
}

ClosureReport full_space_closure_check(const CayleyGraph& graph, const CavityParams& params) {
    const int n = graph.order();
    if (n > 5) throw std::invalid_argument("full_space_closure_check: need n <= 5 (3^n space)");

    // per-site states: 0 = |g,0>, 1 = |g,2>, 2 = |e,0>; site 0 fastest digit
    int dim = 1;
    for (int i = 0; i < n; ++i) dim *= 3;

    auto digit = [](int state, int site) {
        for (int i = 0; i < site; ++i) state /= 3;
        return state % 3;
    };
    auto with_digit = [&digit](int state, int site, int val) {
        int base = 1;
        for (int i = 0; i < site; ++i) base *= 3;
        return state + (val - digit(state, site)) * base;
    };

    const double coupling = std::sqrt(2.0) * params.lambda;
    const CMat& adj = graph.adjacency();
    CMat full(dim, dim);
    for (int col = 0; col < dim; ++col) {
        double diag = 0.0;
        for (int site = 0; site < n; ++site) {
            switch (digit(col, site)) {
                case 0: diag += -0.5 * params.omega_a; break;
                case 1: diag += 2.0 * params.omega_c - 0.5 * params.omega_a; break;
                case 2: diag += 0.5 * params.omega_a; break;
            }
        }
        full(col, col) = diag;
        for (int site = 0; site < n; ++site) {
            const int st = digit(col, site);
            // two-photon atom-field exchange within one site
            if (st == 1) full(with_digit(col, site, 2), col) += coupling;
            if (st == 2) full(with_digit(col, site, 1), col) += coupling;
            // photon-pair hop to an adjacent empty ground-state site; target
            // states with more than two photons per site lie outside the
            // truncation and are dropped (they are unreachable from the
            // manifold anyway)
            if (st == 1) {
                for (int to = 0; to < n; ++to) {
                    if (adj(site, to).real() == 0.0) continue;
                    if (digit(col, to) != 0) continue;
                    const int dest = with_digit(with_digit(col, site, 0), to, 1);
                    full(dest, col) += 2.0 * params.xi;
                }
            }
        }
    }

    // manifold basis indices in the order |c_0>, |a_0>, ..., |c_{n-1}>, |a_{n-1}>
    std::vector<int> manifold(2 * n);
    std::vector<char> in_manifold(dim, 0);
    for (int site = 0; site < n; ++site) {
        manifold[2 * site] = with_digit(0, site, 1);
        manifold[2 * site + 1] = with_digit(0, site, 2);
        in_manifold[manifold[2 * site]] = 1;
        in_manifold[manifold[2 * site + 1]] = 1;
    }

    ClosureReport report;
    report.full_dim = dim;
    for (int c : manifold)
        for (int row = 0; row < dim; ++row)
            if (!in_manifold[row])
                report.max_leakage = std::max(report.max_leakage, std::abs(full(row, c)));

    const CMat href = dense_manifold_hamiltonian(graph, params);
    for (int i = 0; i < 2 * n; ++i)
        for (int j = 0; j < 2 * n; ++j)
            report.max_restriction_error = std::max(
                report.max_restriction_error,
                std::abs(full(manifold[i], manifold[j]) - href(i, j)));

    // N = sum_i (a^dag a / 2 + s_z), diagonal per site: -1/2, +1/2, +1/2
    std::vector<double> nval(2 * n);
    for (int i = 0; i < 2 * n; ++i) {
        double s = 0.0;
        for (int site = 0; site < n; ++site)
            s += (digit(manifold[i], site) == 0) ? -0.5 : 0.5;
        nval[i] = s;
    }
    for (int i = 0; i < 2 * n; ++i)
        for (int j = 0; j < 2 * n; ++j)
            report.max_commutator_error =
                std::max(report.max_commutator_error,
                         std::abs(full(manifold[i], manifold[j]) * (nval[j] - nval[i])));

    report.ok = report.max_leakage <= 1e-12 && report.max_restriction_error <= 1e-12 &&
                report.max_commutator_error <= 1e-12;
    report.note = "per-site basis truncated to {|g,0>,|g,2>,|e,0>}; the manifold couples to "
                  "nothing outside this span, so closure here implies closure in the full space";
    return report;
}

}  // namespace cavnet

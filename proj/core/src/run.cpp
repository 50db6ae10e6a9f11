#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>

#include "cavnet/config.hpp"
#include "cavnet/entanglement.hpp"
#include "cavnet/oracle.hpp"
#include "json.hpp"

namespace cavnet {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::uint64_t verify_seed() {
    if (const char* env = std::getenv("CAYLEY_CAVITY_SEED"))
        return std::strtoull(env, nullptr, 10);
    return 12345;
}

}  // namespace

std::vector<SimRow> run_simulate(const RunConfig& cfg) {
    const CayleyGraph graph = make_graph(cfg);
    const int n = graph.order();
    const ManifoldState initial = make_initial_state(cfg, n);
    std::vector<SimRow> rows;
    for (double t : time_points(cfg)) {
        const ManifoldState s = evolve(graph, cfg.params, initial, t);
        SimRow row;
        row.t = t;
        row.pc.resize(n);
        row.pa.resize(n);
        for (int i = 0; i < n; ++i) {
            row.pc[i] = std::norm(s.C[i]);
            row.pa[i] = std::norm(s.A[i]);
        }
        std::tie(row.total_pa, row.total_pc) = total_probabilities(s);
        row.norm = s.norm();
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<NegativityRow> run_negativity(const RunConfig& cfg) {
    const CayleyGraph graph = make_graph(cfg);
    const int n = graph.order();
    const ManifoldState initial = make_initial_state(cfg, n);
    // regime in which the paper's closed form applies to the W scenario
    const bool small_xi =
        cfg.scenario == Scenario::WState && cfg.params.xi * graph.degree() < 1e-2;
    std::vector<NegativityRow> rows;
    for (double t : time_points(cfg)) {
        const ManifoldState s = evolve(graph, cfg.params, initial, t);
        NegativityRow row;
        row.t = t;
        row.value = negativity(two_atom_reduced(s, cfg.pair_l, cfg.pair_m));
        if (small_xi) row.closed_form = w_negativity_closed_form(n);
        rows.push_back(row);
    }
    return rows;
}

std::vector<SpectrumRow> run_spectrum(const RunConfig& cfg) {
    const CayleyGraph graph = make_graph(cfg);
    const std::vector<double> x = graph.spectrum();
    const int n = graph.order();
    std::vector<SpectrumRow> rows;
    for (int k = 0; k < n; ++k) {
        const double shifted = 0.5 * cfg.params.detuning() + cfg.params.xi * x[k];
        const double rabi =
            std::sqrt(2.0 * cfg.params.lambda * cfg.params.lambda + shifted * shifted);
        const double center = cfg.params.frame_shift(n) + cfg.params.xi * x[k];
        rows.push_back({k, x[k], center + rabi, center - rabi});
    }
    return rows;
}

int run_verify(const RunConfig& cfg, std::ostream& out) {
    const CayleyGraph graph = make_graph(cfg);
    const int n = graph.order();
    const CavityParams& params = cfg.params;
    std::mt19937_64 rng(verify_seed());

    struct Check {
        std::string name;
        double max_error;
        double tol;
    };
    std::vector<Check> checks;

    {  // character orthogonality
        double err = 0.0;
        const FiniteAbelianGroup& g = graph.group();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                cplx s{};
                for (int k = 0; k < n; ++k)
                    s += g.character(i, k) * std::conj(g.character(j, k));
                s /= static_cast<double>(n);
                err = std::max(err, std::abs(s - (i == j ? 1.0 : 0.0)));
            }
        checks.push_back({"character orthogonality", err, 1e-12});
    }

    {  // spectrum from characters vs Jacobi eigensolver on the adjacency
        std::vector<double> x = graph.spectrum();
        std::sort(x.begin(), x.end());
        const EigenDecomposition eig = hermitian_eigs(graph.adjacency());
        double err = 0.0;
        for (int i = 0; i < n; ++i) err = std::max(err, std::abs(x[i] - eig.values[i]));
        checks.push_back({"spectrum vs eigensolver", err, 1e-10});
    }

    {  // Fourier diagonalization of the adjacency
        const CMat p = graph.fourier();
        CMat d = p * graph.adjacency() * p.adjoint();
        const std::vector<double> x = graph.spectrum();
        for (int i = 0; i < n; ++i) d(i, i) -= x[i];
        checks.push_back({"fourier diagonalization", d.max_abs(), 1e-11});
    }

    {  // block structure of the dense Hamiltonian
        const CMat h = dense_manifold_hamiltonian(graph, params);
        const CMat u = kron(graph.fourier(), CMat::identity(2));
        const CMat hb = u * h * u.adjoint();
        const std::vector<double> x = graph.spectrum();
        double off = 0.0, eig_err = 0.0;
        for (int i = 0; i < 2 * n; ++i)
            for (int j = 0; j < 2 * n; ++j)
                if (i / 2 != j / 2) off = std::max(off, std::abs(hb(i, j)));
        for (int k = 0; k < n; ++k) {
            CMat blk(2, 2);
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) blk(i, j) = hb(2 * k + i, 2 * k + j);
            const EigenDecomposition eig = hermitian_eigs(blk);
            const double shifted = 0.5 * params.detuning() + params.xi * x[k];
            const double rabi = std::sqrt(2.0 * params.lambda * params.lambda + shifted * shifted);
            const double center = params.frame_shift(n) + params.xi * x[k];
            eig_err = std::max(eig_err, std::abs(eig.values[0] - (center - rabi)));
            eig_err = std::max(eig_err, std::abs(eig.values[1] - (center + rabi)));
        }
        checks.push_back({"block off-diagonal residual", off, 1e-11});
        checks.push_back({"block eigenvalues vs closed form", eig_err, 1e-10});
    }

    {  // closed-form evolution vs RK4 propagation of the dense Hamiltonian
        const CMat h = dense_manifold_hamiltonian(graph, params);
        std::normal_distribution<double> gauss;
        std::uniform_real_distribution<double> tdist(0.0, 5.0);
        double err = 0.0, parseval = 0.0, unit = 0.0;
        for (int rep = 0; rep < 3; ++rep) {
            ManifoldState s0(n);
            for (int i = 0; i < n; ++i) {
                s0.C[i] = cplx(gauss(rng), gauss(rng));
                s0.A[i] = cplx(gauss(rng), gauss(rng));
            }
            const double nrm = s0.norm();
            for (int i = 0; i < n; ++i) {
                s0.C[i] /= nrm;
                s0.A[i] /= nrm;
            }
            const double t = tdist(rng);
            const ManifoldState s1 = evolve(graph, params, s0, t);
            std::vector<cplx> psi(2 * n);
            for (int i = 0; i < n; ++i) {
                psi[2 * i] = s0.C[i];
                psi[2 * i + 1] = s0.A[i];
            }
            psi = propagate_numeric(h, psi, t, suggest_time_step(h, t));
            for (int i = 0; i < n; ++i) {
                err = std::max(err, std::abs(psi[2 * i] - s1.C[i]));
                err = std::max(err, std::abs(psi[2 * i + 1] - s1.A[i]));
            }
            unit = std::max(unit, std::abs(s1.norm() - 1.0));
            const auto [pa_site, pc_site] = total_probabilities(s1);
            const auto [pa_block, pc_block] = total_probabilities(to_block_basis(graph, s1));
            parseval = std::max(parseval, std::abs(pa_site - pa_block));
            parseval = std::max(parseval, std::abs(pc_site - pc_block));
        }
        checks.push_back({"closed form vs numeric propagation", err, 1e-8});
        checks.push_back({"evolution unitarity", unit, 1e-10});
        checks.push_back({"parseval (site vs block probabilities)", parseval, 1e-12});
    }

    if (n >= 2) {  // negativity closed form for this n
        const TwoAtomDensity rho = w_pair_density(n);
        const double err = std::abs(negativity(rho) - w_negativity_closed_form(n));
        checks.push_back({"negativity closed form", err, 1e-9});
    }

    {  // manifold closure on small fixed instances
        double worst = 0.0;
        for (const CayleyGraph& g : {cycle_graph(3), cycle_graph(4), hypercube_graph(2)}) {
            const ClosureReport r = full_space_closure_check(g, params);
            worst = std::max({worst, r.max_leakage, r.max_restriction_error,
                              r.max_commutator_error});
        }
        checks.push_back({"manifold closure (n=3,4 cycle; Q_2)", worst, 1e-12});
    }

    bool all_ok = true;
    for (const Check& c : checks) {
        const bool ok = c.max_error <= c.tol;
        all_ok = all_ok && ok;
        out << (ok ? "PASS" : "FAIL") << "  " << c.name << ": max_error=" << fmt(c.max_error)
            << " tol=" << fmt(c.tol) << "\n";
    }
    out << (all_ok ? "verification passed" : "verification FAILED") << "\n";
    return all_ok ? 0 : 1;
}

void write_csv(std::ostream& out, const std::vector<SimRow>& rows) {
    if (rows.empty()) return;
    const std::size_t n = rows.front().pc.size();
    out << "t";
    for (std::size_t i = 0; i < n; ++i) out << ",Pc_" << i;
    for (std::size_t i = 0; i < n; ++i) out << ",Pa_" << i;
    out << ",P_a,P_c,norm\n";
    for (const SimRow& r : rows) {
        out << fmt(r.t);
        for (double v : r.pc) out << "," << fmt(v);
        for (double v : r.pa) out << "," << fmt(v);
        out << "," << fmt(r.total_pa) << "," << fmt(r.total_pc) << "," << fmt(r.norm) << "\n";
    }
}

void write_json(std::ostream& out, const std::vector<SimRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const SimRow& r : rows) {
        nlohmann::json j;
        j["t"] = r.t;
        for (std::size_t i = 0; i < r.pc.size(); ++i) j["Pc_" + std::to_string(i)] = r.pc[i];
        for (std::size_t i = 0; i < r.pa.size(); ++i) j["Pa_" + std::to_string(i)] = r.pa[i];
        j["P_a"] = r.total_pa;
        j["P_c"] = r.total_pc;
        j["norm"] = r.norm;
        arr.push_back(std::move(j));
    }
    out << arr.dump(2) << "\n";
}

void write_csv(std::ostream& out, const std::vector<NegativityRow>& rows) {
    out << "t,negativity,closed_form\n";
    for (const NegativityRow& r : rows) {
        out << fmt(r.t) << "," << fmt(r.value) << ",";
        if (r.closed_form) out << fmt(*r.closed_form);
        out << "\n";
    }
}

void write_json(std::ostream& out, const std::vector<NegativityRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const NegativityRow& r : rows) {
        nlohmann::json j;
        j["t"] = r.t;
        j["negativity"] = r.value;
        if (r.closed_form) j["closed_form"] = *r.closed_form;
        arr.push_back(std::move(j));
    }
    out << arr.dump(2) << "\n";
}

void write_csv(std::ostream& out, const std::vector<SpectrumRow>& rows) {
    out << "index,x,E_plus,E_minus\n";
    for (const SpectrumRow& r : rows)
        out << r.index << "," << fmt(r.x) << "," << fmt(r.e_plus) << "," << fmt(r.e_minus)
            << "\n";
}

void write_json(std::ostream& out, const std::vector<SpectrumRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const SpectrumRow& r : rows)
        arr.push_back({{"index", r.index}, {"x", r.x}, {"E_plus", r.e_plus},
                       {"E_minus", r.e_minus}});
    out << arr.dump(2) << "\n";
}

namespace {

template <typename Rows>
void emit(const RunConfig& cfg, const Rows& rows) {
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!cfg.output_path.empty()) {
        file.open(cfg.output_path);
        if (!file) throw std::runtime_error("cannot open output file " + cfg.output_path);
        out = &file;
    }
    if (cfg.format == OutputFormat::Csv)
        write_csv(*out, rows);
    else
        write_json(*out, rows);
}

}  // namespace

void emit_output(const RunConfig& cfg, const std::vector<SimRow>& rows) { emit(cfg, rows); }
void emit_output(const RunConfig& cfg, const std::vector<NegativityRow>& rows) { emit(cfg, rows); }
void emit_output(const RunConfig& cfg, const std::vector<SpectrumRow>& rows) { emit(cfg, rows); }

}  // namespace cavnet

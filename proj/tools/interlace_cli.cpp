#include "interlace/eig.hpp"
#include "interlace/iep.hpp"
#include "interlace/json_io.hpp"
#include "interlace/proofcheck.hpp"
#include "interlace/springmass.hpp"
#include "interlace/tridiag.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace interlace;

// Exit codes: 0 success, 2 usage/parameter, 3 data (interlacing), 4 numerical.
constexpr int exit_usage = 2;
constexpr int exit_data = 3;
constexpr int exit_numerical = 4;

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string join(const std::vector<double>& v, const char* sep = " ") {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += fmt(v[i]);
    }
    return s;
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        write_file(out_path, content);
}

struct GenOptions {
    std::string family = "A";
    std::size_t n = 2;
    double a0 = 0.0;
    double c = 1.0;
    double shift = 0.0;
    std::string out;
};

int run_gen(const GenOptions& o) {
    if (o.family == "A") {
        emit(o.out, to_json(build_A(o.n)));
        std::cerr << "spectrum: " << join(target_spectrum_A(o.n)) << "\n"
                  << "submatrix spectrum: " << join(target_spectrum_A_submatrix(o.n))
                  << "\n";
    } else if (o.family == "W") {
        TestMatrixSpec spec(o.n, o.a0, o.c);
        emit(o.out, to_json(build_W(spec)));
        std::cerr << "spectrum: " << join(target_spectrum_W(spec)) << "\n"
                  << "submatrix spectrum: " << join(target_spectrum_W_submatrix(spec))
                  << "\n";
    } else {
        emit(o.out, to_json(build_kac(o.n, o.shift)));
        std::cerr << "spectrum: " << join(target_spectrum_kac(o.n, o.shift)) << "\n";
    }
    return 0;
}

int run_eig(const std::string& input, double tol) {
    MatrixDocument doc = matrix_from_json(read_file(input));
    if (std::holds_alternative<GeneralTridiagonal>(doc)) {
        auto s = eigenvalues(std::get<GeneralTridiagonal>(doc), tol);
        std::cout << join(s.values) << "\n";
        if (s.values.size() >= 2)
            std::cout << "min_gap: " << fmt(min_gap(s)) << "\n";
        return 0;
    }
    const auto& T = std::get<SymmetricTridiagonal>(doc);
    auto s = eigenvalues(T, tol);
    std::cout << join(s.values) << "\n";
    if (T.order() >= 2) {
        auto so = eigenvalues(leading_principal_submatrix(T), tol);
        std::cout << join(so.values) << "\n";
        if (s.values.size() >= 2)
            std::cout << "min_gap: " << fmt(min_gap(s)) << "\n";
        if (so.values.size() >= 2)
            std::cout << "submatrix min_gap: " << fmt(min_gap(so)) << "\n";
    }
    return 0;
}

int run_inverse(const std::string& input, bool plain, const std::string& out) {
    SpectrumPair p = spectra_from_json(read_file(input));
    auto variant = plain ? ReconstructionVariant::plain
                         : ReconstructionVariant::full_reorth;
    SymmetricTridiagonal T = reconstruct_jacobian(p, variant);
    emit(out, to_json(T));
    auto [r1, r2] = reconstruction_residual(T, p, default_tol(T));
    std::cerr << "spectrum residual: " << fmt(r1) << "\n"
              << "submatrix residual: " << fmt(r2) << "\n";
    return 0;
}

int run_springmass(std::size_t n, double alpha, double tol) {
    SpringMassSystem s = solve_inverse_spring_mass(n, alpha);
    std::cout << "i,m_i,k_i\n";
    for (std::size_t i = 0; i < n; ++i)
        std::cout << (i + 1) << "," << fmt(s.masses[i]) << ","
                  << fmt(s.stiffnesses[i]) << "\n";
    auto free_s = forward_frequencies(s, BoundaryCondition::FreeEnd, tol);
    auto fixed_s = forward_frequencies(s, BoundaryCondition::FixedEnd, tol);
    double dev = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        dev = std::max(dev, std::abs(free_s.values[i] - double(2 * i + 1)));
    for (std::size_t i = 0; i + 1 < n; ++i)
        dev = std::max(dev, std::abs(fixed_s.values[i] - double(2 * i + 2)));
    std::cout << "free-end spectrum: " << join(free_s.values) << "\n"
              << "fixed-end spectrum: " << join(fixed_s.values) << "\n"
              << "max deviation from target: " << fmt(dev) << "\n";
    return 0;
}

struct BenchOptions {
    std::string family = "A";
    std::size_t n_min = 2;
    std::size_t n_max = 20;
    std::size_t step = 1;
    double a0 = 0.0;
    double c = 1.0;
    std::vector<std::string> algorithms{"plain", "full_reorth"};
    std::string out;
};

int run_bench(const BenchOptions& o) {
    if (o.n_min < 2 || o.n_min > o.n_max)
        throw CLI::ValidationError("bench", "require 2 <= n-min <= n-max");
    for (const auto& a : o.algorithms)
        if (a != "plain" && a != "full_reorth")
            throw CLI::ValidationError("bench", "unknown algorithm " + a);

    std::ostringstream csv;
    csv << "n,family,algorithm,max_entry_error,max_eig_residual,min_gap,runtime_ns\n";
    for (std::size_t n = o.n_min; n <= o.n_max; n += o.step) {
        SymmetricTridiagonal exact;
        std::vector<double> lambda, mu;
        if (o.family == "A") {
            exact = normalize_signs(build_A(n));
            lambda = target_spectrum_A(n);
            mu = target_spectrum_A_submatrix(n);
        } else {
            TestMatrixSpec spec(n, o.a0, o.c);
            exact = build_W(spec);
            lambda = target_spectrum_W(spec);
            mu = target_spectrum_W_submatrix(spec);
        }
        const double gap = min_gap(lambda);
        SpectrumPair p{lambda, mu};
        for (const auto& alg : o.algorithms) {
            auto variant = (alg == "plain") ? ReconstructionVariant::plain
                                            : ReconstructionVariant::full_reorth;
            auto t0 = std::chrono::steady_clock::now();
            SymmetricTridiagonal T = reconstruct_jacobian(p, variant);
            auto t1 = std::chrono::steady_clock::now();
            double entry_err = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                entry_err = std::max(entry_err, std::abs(T.diag[i] - exact.diag[i]));
            for (std::size_t i = 0; i + 1 < n; ++i)
                entry_err =
                    std::max(entry_err, std::abs(T.offdiag[i] - exact.offdiag[i]));
            auto [r1, r2] = reconstruction_residual(T, p, default_tol(T));
            auto ns =
                std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
            csv << n << "," << o.family << "," << alg << "," << fmt(entry_err) << ","
                << fmt(std::max(r1, r2)) << "," << fmt(gap) << "," << ns << "\n";
        }
    }
    emit(o.out, csv.str());
    return 0;
}

int run_verify_proof(std::size_t n, double tol) {
    auto r = verify_proof_identities(n);
    bool pass = r.pass(tol) && r.d_entry_deviation <= 1e-12;
    std::cout << "{\"n\": " << n << ", \"residuals\": [" << fmt(r.similarity_R) << ", "
              << fmt(r.factorization_L) << ", " << fmt(r.similarity_S)
              << "], \"d_entry_deviation\": " << fmt(r.d_entry_deviation)
              << ", \"pass\": " << (pass ? "true" : "false") << "}\n";
    return pass ? 0 : exit_numerical;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tridiagonal test matrices with equally spaced, interlaced spectra: "
                 "generators, forward/inverse eigensolvers, spring-mass design, "
                 "and a reconstruction stability benchmark"};
    app.require_subcommand(1);

    GenOptions gen;
    auto* cmd_gen = app.add_subcommand("gen", "Generate a test matrix as JSON");
    cmd_gen->add_option("--family", gen.family, "Matrix family")
        ->check(CLI::IsMember({"A", "W", "kac"}));
    cmd_gen->add_option("--n", gen.n, "Size parameter")->required();
    cmd_gen->add_option("--a0", gen.a0, "Smallest eigenvalue (family W)");
    cmd_gen->add_option("--c", gen.c, "Half gap between eigenvalues (family W)");
    cmd_gen->add_option("--shift", gen.shift, "Diagonal shift (family kac)");
    cmd_gen->add_option("--out", gen.out, "Output file (default stdout)");

    std::string eig_input;
    double eig_tol = 1e-10;
    auto* cmd_eig = app.add_subcommand("eig", "Eigenvalues of a matrix document");
    cmd_eig->add_option("input", eig_input, "Matrix JSON file")->required();
    cmd_eig->add_option("--tol", eig_tol, "Bracketing tolerance")
        ->check(CLI::PositiveNumber);

    std::string inv_input, inv_out;
    bool inv_plain = false;
    auto* cmd_inv =
        app.add_subcommand("inverse", "Reconstruct a Jacobian matrix from two spectra");
    cmd_inv->add_option("input", inv_input, "Spectra JSON file {\"lambda\":..,\"mu\":..}")
        ->required();
    cmd_inv->add_flag("--plain", inv_plain,
                      "Use the unreorthogonalized recurrence (default: full reorthogonalization)");
    cmd_inv->add_option("--out", inv_out, "Output file (default stdout)");

    std::size_t sm_n = 2;
    double sm_alpha = 1.0, sm_tol = 1e-10;
    auto* cmd_sm = app.add_subcommand(
        "springmass", "Masses and stiffnesses realizing odd/even frequency spectra");
    cmd_sm->add_option("--n", sm_n, "Number of masses")->required();
    cmd_sm->add_option("--alpha", sm_alpha, "Scale parameter (m_n = alpha^2)");
    cmd_sm->add_option("--tol", sm_tol, "Eigenvalue tolerance for verification")
        ->check(CLI::PositiveNumber);

    BenchOptions bench;
    auto* cmd_bench =
        app.add_subcommand("bench", "Reconstruction round-off sweep, CSV output");
    cmd_bench->add_option("--family", bench.family, "Matrix family")
        ->check(CLI::IsMember({"A", "W"}));
    cmd_bench->add_option("--n-min", bench.n_min, "Smallest size");
    cmd_bench->add_option("--n-max", bench.n_max, "Largest size");
    cmd_bench->add_option("--step", bench.step, "Size increment")
        ->check(CLI::PositiveNumber);
    cmd_bench->add_option("--a0", bench.a0, "Smallest eigenvalue (family W)");
    cmd_bench->add_option("--c", bench.c, "Half gap (family W)");
    cmd_bench->add_option("--algorithms", bench.algorithms,
                          "Reconstruction variants to run")
        ->delimiter(',');
    cmd_bench->add_option("--out", bench.out, "CSV output file (default stdout)");

    std::size_t vp_n = 2;
    double vp_tol = 1e-10;
    auto* cmd_vp = app.add_subcommand("verify-proof",
                                      "Check the explicit factor-matrix identities");
    cmd_vp->add_option("--n", vp_n, "Size parameter")->required();
    cmd_vp->add_option("--tol", vp_tol, "Residual tolerance")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : exit_usage;
    }

    try {
        if (cmd_gen->parsed()) return run_gen(gen);
        if (cmd_eig->parsed()) return run_eig(eig_input, eig_tol);
        if (cmd_inv->parsed()) return run_inverse(inv_input, inv_plain, inv_out);
        if (cmd_sm->parsed()) return run_springmass(sm_n, sm_alpha, sm_tol);
        if (cmd_bench->parsed()) return run_bench(bench);
        if (cmd_vp->parsed()) return run_verify_proof(vp_n, vp_tol);
    } catch (const interlacing_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_data;
    } catch (const breakdown_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_numerical;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::range_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return 0;
}

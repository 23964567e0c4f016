#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace interlace {

// Thrown when a computed off-diagonal entry collapses to (numerical) zero
// and the matrix would stop being Jacobian.
struct breakdown_error : std::runtime_error {
    std::size_t step;
    breakdown_error(std::size_t step_, const std::string& what_)
        : std::runtime_error(what_), step(step_) {}
};

// Symmetric tridiagonal matrix. offdiag stores the signed (i,i+1) entries,
// so a matrix in the negative-off-diagonal convention has offdiag[i] = -b_i.
struct SymmetricTridiagonal {
    std::vector<double> diag;     // length n
    std::vector<double> offdiag;  // length n-1, signed entry values

    SymmetricTridiagonal() = default;
    SymmetricTridiagonal(std::vector<double> d, std::vector<double> e);

    std::size_t order() const { return diag.size(); }
    bool is_jacobian() const;

    bool operator==(const SymmetricTridiagonal&) const = default;
};

// Nonsymmetric tridiagonal matrix (diag, superdiag, subdiag).
struct GeneralTridiagonal {
    std::vector<double> diag;      // length n
    std::vector<double> superdiag; // length n-1
    std::vector<double> subdiag;   // length n-1

    GeneralTridiagonal() = default;
    GeneralTridiagonal(std::vector<double> d, std::vector<double> sup,
                       std::vector<double> sub);

    std::size_t order() const { return diag.size(); }

    bool operator==(const GeneralTridiagonal&) const = default;
};

// Parameters for the equally-spaced-spectrum family W_n: smallest eigenvalue
// a0, consecutive eigenvalues spaced 2c apart.
struct TestMatrixSpec {
    std::size_t n;
    double a0;
    double c;

    TestMatrixSpec(std::size_t n_, double a0_, double c_);
};

// n x n matrix with constant diagonal n-1 and positive off-diagonals; its
// eigenvalues are {0, 2, ..., 2n-2} and those of its leading principal
// submatrix are {1, 3, ..., 2n-3}.
SymmetricTridiagonal build_A(std::size_t n);

// A(n) + I with negated off-diagonals; eigenvalues {1, 3, ..., 2n-1}.
SymmetricTridiagonal build_B_spring(std::size_t n);

// W_n = a0*I + c * (sign-normalized A(n)); eigenvalues a0 + 2c(i-1).
SymmetricTridiagonal build_W(const TestMatrixSpec& spec);

// Kac-Sylvester matrix of order n+1 with superdiag (n, n-1, ..., 1),
// subdiag (1, 2, ..., n) and constant diagonal equal to `shift`. At
// shift = 0 the spectrum is {2k - n : k = 0..n}.
GeneralTridiagonal build_kac(std::size_t n, double shift);

// Delete the last row and column.
SymmetricTridiagonal leading_principal_submatrix(const SymmetricTridiagonal& T);

// Similarity by diag(1,..,1,-1,..,-1) with m leading ones: negates
// offdiag[m] (1-based m in [1, order-1]) and nothing else.
SymmetricTridiagonal sign_flip(const SymmetricTridiagonal& T, std::size_t m);

// Compose sign flips until every off-diagonal entry is strictly negative.
// Requires a Jacobian input.
SymmetricTridiagonal normalize_signs(const SymmetricTridiagonal& T);

// Exact target spectra of the generated families, from the closed formulas.
std::vector<double> target_spectrum_A(std::size_t n);           // {0,2,...,2n-2}
std::vector<double> target_spectrum_A_submatrix(std::size_t n); // {1,3,...,2n-3}
std::vector<double> target_spectrum_W(const TestMatrixSpec& spec);
std::vector<double> target_spectrum_W_submatrix(const TestMatrixSpec& spec);
std::vector<double> target_spectrum_kac(std::size_t n, double shift);

} // namespace interlace

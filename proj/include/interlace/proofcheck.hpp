#pragma once

#include "interlace/tridiag.hpp"

#include <cstddef>
#include <vector>

namespace interlace {

// Minimal dense row-major matrix; orders here stay small.
struct DenseMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<double> data;

    DenseMatrix() = default;
    DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

    double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix transpose(const DenseMatrix& a);
DenseMatrix subtract(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix to_dense(const SymmetricTridiagonal& T);
double frobenius_norm(const DenseMatrix& a);

// Explicit factor matrices from the similarity/factorization argument that
// pins down the spectra of A(n) and its submatrix.
struct ProofFactors {
    std::size_t n;
    DenseMatrix R; // n x n, upper triangular, parity-sparse
    DenseMatrix L; // (n+1) x (n+1), lower bidiagonal
    DenseMatrix D; // (n+1) x (n+1), block [[D°, 0],[0, 2n]] as listed
    DenseMatrix S; // n x n, upper bidiagonal
};

ProofFactors build_proof_factors(std::size_t n);

// Normalized Frobenius residuals of the three identities, plus the
// entrywise deviation between D = 2nI - L^T L and the listed D entries.
struct ProofResiduals {
    std::size_t n;
    double similarity_R;   // ||B R - R A|| / ||B R||, B = A°(n+1)-nI, A = A(n)-(n-1)I
    double factorization_L; // ||C + L L^T|| / ||C||,  C = A(n+1)-2nI
    double similarity_S;   // ||S D° - A(n) S|| / ||S D°||
    double d_entry_deviation; // max |(2nI - L^T L) - listed D| entrywise
    bool pass(double tol) const {
        return similarity_R <= tol && factorization_L <= tol && similarity_S <= tol;
    }
};

ProofResiduals verify_proof_identities(std::size_t n);

} // namespace interlace

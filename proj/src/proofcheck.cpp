#include "interlace/proofcheck.hpp"

#include "interlace/detail/products.hpp"

#include <cmath>
#include <stdexcept>

namespace interlace {

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols != b.rows)
        throw std::invalid_argument("multiply: dimension mismatch");
    DenseMatrix c(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < b.cols; ++j)
                c(i, j) += aik * b(k, j);
        }
    return c;
}

DenseMatrix transpose(const DenseMatrix& a) {
    DenseMatrix t(a.cols, a.rows);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j)
            t(j, i) = a(i, j);
    return t;
}

DenseMatrix subtract(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols)
        throw std::invalid_argument("subtract: dimension mismatch");
    DenseMatrix c(a.rows, a.cols);
    for (std::size_t i = 0; i < a.data.size(); ++i)
        c.data[i] = a.data[i] - b.data[i];
    return c;
}

DenseMatrix to_dense(const SymmetricTridiagonal& T) {
    const std::size_t n = T.order();
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = T.diag[i];
        if (i + 1 < n) {
            m(i, i + 1) = T.offdiag[i];
            m(i + 1, i) = T.offdiag[i];
        }
    }
    return m;
}

double frobenius_norm(const DenseMatrix& a) {
    double s = 0.0;
    for (double x : a.data) s += x * x;
    return std::sqrt(s);
}

ProofFactors build_proof_factors(std::size_t n) {
    if (n < 2)
        throw std::invalid_argument("build_proof_factors: n must be >= 2");
    ProofFactors f;
    f.n = n;

    // R: upper triangular, nonzero only where i, j share parity and j >= i.
    f.R = DenseMatrix(n, n);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i; j <= n; ++j) {
            if ((i + j) % 2 != 0) continue;
            const double k = (j != n) ? 2.0 : 1.0;
            // (j-1)!/(i-1)! and (2n-j-1)!/(2n-i+1)! as cancelled products
            double ratio = detail::factorial_ratio(j - 1, i - 1) *
                           detail::factorial_ratio(2 * n - j - 1, 2 * n - i + 1);
            f.R(i - 1, j - 1) = std::sqrt(k * ratio);
        }

    // L: lower bidiagonal of order n+1, trailing diagonal entry zero.
    f.L = DenseMatrix(n + 1, n + 1);
    for (std::size_t i = 1; i <= n - 1; ++i) {
        f.L(i - 1, i - 1) = std::sqrt(double(2 * n - i + 1) / 2.0);
        f.L(i, i - 1) = -std::sqrt(double(i) / 2.0);
    }
    f.L(n - 1, n - 1) = std::sqrt(double(n + 1) / 2.0);
    f.L(n, n - 1) = -std::sqrt(double(n));
    f.L(n, n) = 0.0;

    // D as listed: leading n x n block D° tridiagonal, trailing scalar 2n.
    f.D = DenseMatrix(n + 1, n + 1);
    for (std::size_t i = 1; i <= n - 1; ++i) {
        f.D(i - 1, i - 1) = double(2 * n - 1) / 2.0;
        const double off = 0.5 * std::sqrt(double(i) * double(2 * n - i));
        f.D(i, i - 1) = off;
        f.D(i - 1, i) = off;
    }
    f.D(n - 1, n - 1) = double(n - 1) / 2.0;
    f.D(n, n) = double(2 * n);

    // S: upper bidiagonal, with the listed trailing override s_nn = sqrt(2n).
    f.S = DenseMatrix(n, n);
    for (std::size_t i = 1; i <= n - 1; ++i) {
        f.S(i - 1, i - 1) = std::sqrt(double(2 * n - i));
        f.S(i - 1, i) = -std::sqrt(double(i));
    }
    f.S(n - 1, n - 1) = std::sqrt(double(2 * n));

    return f;
}

ProofResiduals verify_proof_identities(std::size_t n) {
    const auto f = build_proof_factors(n);

    // (1) B R = R A with B = A°(n+1) - nI, A = A(n) - (n-1)I.
    DenseMatrix B = to_dense(leading_principal_submatrix(build_A(n + 1)));
    for (std::size_t i = 0; i < n; ++i) B(i, i) -= double(n);
    DenseMatrix A = to_dense(build_A(n));
    for (std::size_t i = 0; i < n; ++i) A(i, i) -= double(n - 1);
    DenseMatrix BR = multiply(B, f.R);
    double r1 = frobenius_norm(subtract(BR, multiply(f.R, A))) / frobenius_norm(BR);

    // (2) C = -L L^T with C = A(n+1) - 2nI.
    DenseMatrix C = to_dense(build_A(n + 1));
    for (std::size_t i = 0; i <= n; ++i) C(i, i) -= double(2 * n);
    DenseMatrix LLt = multiply(f.L, transpose(f.L));
    double r2 = 0.0;
    {
        DenseMatrix sum(n + 1, n + 1);
        for (std::size_t i = 0; i < sum.data.size(); ++i)
            sum.data[i] = C.data[i] + LLt.data[i];
        r2 = frobenius_norm(sum) / frobenius_norm(C);
    }

    // D from its definition 2nI - L^T L; compare against the listed entries.
    DenseMatrix Ddef = multiply(transpose(f.L), f.L);
    for (std::size_t i = 0; i < Ddef.data.size(); ++i) Ddef.data[i] = -Ddef.data[i];
    for (std::size_t i = 0; i <= n; ++i) Ddef(i, i) += double(2 * n);
    double ddev = 0.0;
    for (std::size_t i = 0; i < Ddef.data.size(); ++i)
        ddev = std::max(ddev, std::abs(Ddef.data[i] - f.D.data[i]));

    // (3) S D° = A(n) S, with D° the leading n x n block of 2nI - L^T L.
    DenseMatrix Do(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            Do(i, j) = Ddef(i, j);
    DenseMatrix SD = multiply(f.S, Do);
    double r3 = frobenius_norm(subtract(SD, multiply(to_dense(build_A(n)), f.S))) /
                frobenius_norm(SD);

    return {n, r1, r2, r3, ddev};
}

} // namespace interlace

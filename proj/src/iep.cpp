#include "interlace/iep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace interlace {

namespace {

void require_strictly_ascending(const std::vector<double>& v, const char* name) {
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (!(v[i] < v[i + 1]))
            throw interlacing_error(i, std::string(name) + " not strictly ascending at index " +
                                           std::to_string(i));
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

} // namespace

SpectrumPair validate_interlacing(std::vector<double> lambda,
                                  std::vector<double> mu) {
    if (lambda.size() < 2)
        throw std::invalid_argument("validate_interlacing: need at least two eigenvalues");
    if (mu.size() + 1 != lambda.size())
        throw std::invalid_argument("validate_interlacing: |mu| must equal |lambda|-1");
    for (double x : lambda)
        if (!std::isfinite(x))
            throw std::invalid_argument("validate_interlacing: non-finite lambda entry");
    for (double x : mu)
        if (!std::isfinite(x))
            throw std::invalid_argument("validate_interlacing: non-finite mu entry");
    require_strictly_ascending(lambda, "lambda");
    require_strictly_ascending(mu, "mu");
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (!(lambda[i] < mu[i]))
            throw interlacing_error(i, "interlacing violated: mu[" + std::to_string(i) +
                                           "] must exceed lambda[" + std::to_string(i) + "]");
        if (!(mu[i] < lambda[i + 1]))
            throw interlacing_error(i + 1, "interlacing violated: lambda[" +
                                               std::to_string(i + 1) + "] must exceed mu[" +
                                               std::to_string(i) + "]");
    }
    return {std::move(lambda), std::move(mu)};
}

LastComponents last_components(const SpectrumPair& p) {
    const std::size_t n = p.lambda.size();
    // Log-magnitude evaluation: numerators and denominators grow factorially
    // for integer-spaced spectra, overflowing binary64 near n ~ 60.
    std::vector<double> w(n);
    for (std::size_t i = 0; i < n; ++i) {
        double logw2 = 0.0;
        for (std::size_t j = 0; j + 1 < n; ++j)
            logw2 += std::log(std::abs(p.lambda[i] - p.mu[j]));
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) logw2 -= std::log(std::abs(p.lambda[i] - p.lambda[j]));
        w[i] = std::exp(0.5 * logw2);
    }
    // The squares sum to 1 identically for interlaced data; renormalize to
    // absorb the rounding of the log-sum.
    double s = std::sqrt(dot(w, w));
    for (double& x : w) x /= s;
    return {std::move(w)};
}

SymmetricTridiagonal reconstruct_jacobian(const SpectrumPair& p,
                                          ReconstructionVariant variant) {
    const std::size_t n = p.lambda.size();
    const double radius =
        std::max(std::abs(p.lambda.front()), std::abs(p.lambda.back()));
    const double breakdown_tol =
        std::numeric_limits<double>::epsilon() * std::max(1.0, radius);

    // Lanczos three-term recurrence on diag(lambda) started from the
    // last-components vector. This yields the Jacobi matrix whose
    // eigenvector *first* components are the start vector; an index
    // reversal afterwards moves mu to the leading principal submatrix.
    std::vector<double> alpha(n), beta(n - 1);
    std::vector<std::vector<double>> basis;
    basis.reserve(n);
    basis.push_back(last_components(p).weights);

    std::vector<double> r(n);
    for (std::size_t j = 0; j < n; ++j) {
        const auto& q = basis[j];
        for (std::size_t i = 0; i < n; ++i) r[i] = p.lambda[i] * q[i];
        alpha[j] = dot(q, r);
        for (std::size_t i = 0; i < n; ++i) r[i] -= alpha[j] * q[i];
        if (j > 0)
            for (std::size_t i = 0; i < n; ++i) r[i] -= beta[j - 1] * basis[j - 1][i];
        if (j + 1 == n) break;
        if (variant == ReconstructionVariant::full_reorth) {
            // Two Gram-Schmidt passes against the whole basis.
            for (int pass = 0; pass < 2; ++pass)
                for (const auto& qk : basis) {
                    double h = dot(qk, r);
                    for (std::size_t i = 0; i < n; ++i) r[i] -= h * qk[i];
                }
        }
        double b = std::sqrt(dot(r, r));
        if (!(b > breakdown_tol))
            throw breakdown_error(j + 1, "reconstruct_jacobian: off-diagonal underflow at step " +
                                             std::to_string(j + 1));
        beta[j] = b;
        std::vector<double> qn(n);
        for (std::size_t i = 0; i < n; ++i) qn[i] = r[i] / b;
        basis.push_back(std::move(qn));
    }

    // Reverse indices and apply the negative-off-diagonal convention.
    std::vector<double> d(n), e(n - 1);
    for (std::size_t i = 0; i < n; ++i) d[i] = alpha[n - 1 - i];
    for (std::size_t i = 0; i + 1 < n; ++i) e[i] = -beta[n - 2 - i];
    return {std::move(d), std::move(e)};
}

std::pair<double, double> reconstruction_residual(const SymmetricTridiagonal& T,
                                                  const SpectrumPair& p,
                                                  double tol) {
    auto lam = eigenvalues(T, tol).values;
    auto mu = eigenvalues(leading_principal_submatrix(T), tol).values;
    double r1 = 0.0, r2 = 0.0;
    for (std::size_t i = 0; i < lam.size(); ++i)
        r1 = std::max(r1, std::abs(lam[i] - p.lambda[i]));
    for (std::size_t i = 0; i < mu.size(); ++i)
        r2 = std::max(r2, std::abs(mu[i] - p.mu[i]));
    return {r1, r2};
}

} // namespace interlace

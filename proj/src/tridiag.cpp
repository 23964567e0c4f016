#include "interlace/tridiag.hpp"

#include <cmath>
#include <limits>

namespace interlace {

namespace {

void check_finite(const std::vector<double>& v, const char* what) {
    for (double x : v)
        if (!std::isfinite(x))
            throw std::invalid_argument(std::string(what) + ": non-finite entry");
}

// Off-diagonal entries of A(n). The integer product under the root is exact
// in binary64 for all supported n.
std::vector<double> a_offdiag(std::size_t n) {
    std::vector<double> e(n - 1);
    for (std::size_t i = 1; i <= n - 2; ++i)
        e[i - 1] = 0.5 * std::sqrt(double(i) * double(2 * n - i - 1));
    e[n - 2] = std::sqrt(double(n) * double(n - 1) / 2.0);
    return e;
}

} // namespace

SymmetricTridiagonal::SymmetricTridiagonal(std::vector<double> d,
                                           std::vector<double> e)
    : diag(std::move(d)), offdiag(std::move(e)) {
    if (diag.empty())
        throw std::invalid_argument("SymmetricTridiagonal: empty diagonal");
    if (offdiag.size() + 1 != diag.size())
        throw std::invalid_argument("SymmetricTridiagonal: offdiag length must be order-1");
    check_finite(diag, "SymmetricTridiagonal");
    check_finite(offdiag, "SymmetricTridiagonal");
}

bool SymmetricTridiagonal::is_jacobian() const {
    for (double b : offdiag)
        if (b == 0.0) return false;
    return true;
}

GeneralTridiagonal::GeneralTridiagonal(std::vector<double> d,
                                       std::vector<double> sup,
                                       std::vector<double> sub)
    : diag(std::move(d)), superdiag(std::move(sup)), subdiag(std::move(sub)) {
    if (diag.empty())
        throw std::invalid_argument("GeneralTridiagonal: empty diagonal");
    if (superdiag.size() + 1 != diag.size() || subdiag.size() + 1 != diag.size())
        throw std::invalid_argument("GeneralTridiagonal: off-diagonal lengths must be order-1");
    check_finite(diag, "GeneralTridiagonal");
    check_finite(superdiag, "GeneralTridiagonal");
    check_finite(subdiag, "GeneralTridiagonal");
}

TestMatrixSpec::TestMatrixSpec(std::size_t n_, double a0_, double c_)
    : n(n_), a0(a0_), c(c_) {
    if (n < 2)
        throw std::invalid_argument("TestMatrixSpec: n must be >= 2");
    if (!(c > 0.0))
        throw std::invalid_argument("TestMatrixSpec: gap parameter c must be > 0");
    if (!std::isfinite(a0) || !std::isfinite(c))
        throw std::invalid_argument("TestMatrixSpec: parameters must be finite");
}

SymmetricTridiagonal build_A(std::size_t n) {
    if (n < 2)
        throw std::invalid_argument("build_A: n must be >= 2");
    return {std::vector<double>(n, double(n - 1)), a_offdiag(n)};
}

SymmetricTridiagonal build_B_spring(std::size_t n) {
    if (n < 2)
        throw std::invalid_argument("build_B_spring: n must be >= 2");
    auto e = a_offdiag(n);
    for (double& b : e) b = -b;
    return {std::vector<double>(n, double(n)), std::move(e)};
}

SymmetricTridiagonal build_W(const TestMatrixSpec& spec) {
    auto e = a_offdiag(spec.n);
    for (double& b : e) b = -spec.c * b;
    double a = spec.a0 + spec.c * double(spec.n - 1);
    return {std::vector<double>(spec.n, a), std::move(e)};
}

GeneralTridiagonal build_kac(std::size_t n, double shift) {
    if (n < 1)
        throw std::invalid_argument("build_kac: n must be >= 1");
    std::vector<double> sup(n), sub(n);
    for (std::size_t i = 1; i <= n; ++i) {
        sup[i - 1] = double(n + 1 - i);
        sub[i - 1] = double(i);
    }
    return {std::vector<double>(n + 1, shift), std::move(sup), std::move(sub)};
}

SymmetricTridiagonal leading_principal_submatrix(const SymmetricTridiagonal& T) {
    if (T.order() < 2)
        throw std::invalid_argument("leading_principal_submatrix: order must be >= 2");
    return {std::vector<double>(T.diag.begin(), T.diag.end() - 1),
            std::vector<double>(T.offdiag.begin(), T.offdiag.end() - 1)};
}

SymmetricTridiagonal sign_flip(const SymmetricTridiagonal& T, std::size_t m) {
    if (m < 1 || m > T.order() - 1)
        throw std::out_of_range("sign_flip: m out of range");
    SymmetricTridiagonal out = T;
    out.offdiag[m - 1] = -out.offdiag[m - 1];
    return out;
}

SymmetricTridiagonal normalize_signs(const SymmetricTridiagonal& T) {
    if (!T.is_jacobian())
        throw std::invalid_argument("normalize_signs: matrix is not Jacobian (zero off-diagonal)");
    SymmetricTridiagonal out = T;
    for (std::size_t m = 1; m < out.order(); ++m)
        if (out.offdiag[m - 1] > 0.0)
            out = sign_flip(out, m);
    return out;
}

std::vector<double> target_spectrum_A(std::size_t n) {
    std::vector<double> s(n);
    for (std::size_t k = 0; k < n; ++k) s[k] = double(2 * k);
    return s;
}

std::vector<double> target_spectrum_A_submatrix(std::size_t n) {
    std::vector<double> s(n - 1);
    for (std::size_t k = 0; k + 1 < n; ++k) s[k] = double(2 * k + 1);
    return s;
}

std::vector<double> target_spectrum_W(const TestMatrixSpec& spec) {
    std::vector<double> s(spec.n);
    for (std::size_t i = 0; i < spec.n; ++i)
        s[i] = spec.a0 + 2.0 * spec.c * double(i);
    return s;
}

std::vector<double> target_spectrum_W_submatrix(const TestMatrixSpec& spec) {
    std::vector<double> s(spec.n - 1);
    for (std::size_t i = 0; i + 1 < spec.n; ++i)
        s[i] = spec.a0 + spec.c + 2.0 * spec.c * double(i);
    return s;
}

std::vector<double> target_spectrum_kac(std::size_t n, double shift) {
    std::vector<double> s(n + 1);
    for (std::size_t k = 0; k <= n; ++k)
        s[k] = double(2.0 * double(k) - double(n)) + shift;
    return s;
}

} // namespace interlace

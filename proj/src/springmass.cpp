#include "interlace/springmass.hpp"

#include "interlace/detail/products.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace interlace {

namespace {

void check_params(std::size_t n, double alpha, const char* fn) {
    if (n < 2)
        throw std::invalid_argument(std::string(fn) + ": n must be >= 2");
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw std::invalid_argument(std::string(fn) + ": alpha must be > 0");
}

// m_{n-i} / alpha^2 = 2 (n+i-1)!(n-i-1)! / ((n-1)!)^2, i >= 1.
double mass_ratio(std::size_t n, std::size_t i) {
    return 2.0 * detail::factorial_product_ratio({n + i - 1, n - i - 1},
                                                 {n - 1, n - 1});
}

// k_{i+1} / alpha^2 = i! (2n-1-i)! / ((n-1)!)^2, i = 0..n-1.
double stiffness_ratio(std::size_t n, std::size_t i) {
    return detail::factorial_product_ratio({i, 2 * n - 1 - i}, {n - 1, n - 1});
}

[[noreturn]] void range_overflow(std::size_t n, const char* fn) {
    // The largest entry is k_1 ~ (2n-1)!/((n-1)!)^2 ~ 4^n; binary64 holds
    // it up to roughly n = 500.
    throw std::range_error(std::string(fn) + ": value exceeds binary64 range at n = " +
                           std::to_string(n) + "; supported range is roughly n <= 500");
}

} // namespace

SpringMassSystem solve_inverse_spring_mass(std::size_t n, double alpha) {
    check_params(n, alpha, "solve_inverse_spring_mass");
    const double a2 = alpha * alpha;
    std::vector<double> m(n), k(n);
    m[n - 1] = a2;
    for (std::size_t i = 1; i <= n - 1; ++i)
        m[n - 1 - i] = a2 * mass_ratio(n, i);
    for (std::size_t i = 0; i <= n - 1; ++i)
        k[i] = a2 * stiffness_ratio(n, i);
    for (double x : m)
        if (!std::isfinite(x)) range_overflow(n, "solve_inverse_spring_mass");
    for (double x : k)
        if (!std::isfinite(x)) range_overflow(n, "solve_inverse_spring_mass");
    return {n, alpha, std::move(m), std::move(k)};
}

std::vector<double> masses_by_recurrence(std::size_t n, double alpha) {
    check_params(n, alpha, "masses_by_recurrence");
    // b_i of B(n) = A(n) + I, bottom equation gives the seed:
    // n*sqrt(m_n) = b_{n-1}*sqrt(m_{n-1}).
    auto b = build_A(n).offdiag;
    std::vector<double> u(n); // sqrt(m_i)
    u[n - 1] = alpha;
    u[n - 2] = double(n) * alpha / b[n - 2];
    for (std::size_t i = n - 1; i >= 2; --i)
        u[i - 2] = (double(n) * u[i - 1] - b[i - 1] * u[i]) / b[i - 2];
    std::vector<double> m(n);
    for (std::size_t i = 0; i < n; ++i) {
        m[i] = u[i] * u[i];
        if (!std::isfinite(m[i])) range_overflow(n, "masses_by_recurrence");
    }
    return m;
}

std::pair<SymmetricTridiagonal, std::vector<double>>
assemble_system_matrices(const SpringMassSystem& s) {
    const std::size_t n = s.n;
    std::vector<double> d(n), e(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        d[i] = s.stiffnesses[i];
        if (i + 1 < n) d[i] += s.stiffnesses[i + 1];
    }
    for (std::size_t i = 0; i + 1 < n; ++i) e[i] = -s.stiffnesses[i + 1];
    return {SymmetricTridiagonal(std::move(d), std::move(e)), s.masses};
}

Spectrum forward_frequencies(const SpringMassSystem& s, BoundaryCondition bc,
                             double tol) {
    auto [C, m] = assemble_system_matrices(s);
    const std::size_t n = s.n;
    // B = M^{-1/2} C M^{-1/2}
    std::vector<double> d(n), e(n - 1);
    for (std::size_t i = 0; i < n; ++i) d[i] = C.diag[i] / m[i];
    for (std::size_t i = 0; i + 1 < n; ++i)
        e[i] = C.offdiag[i] / std::sqrt(m[i] * m[i + 1]);
    SymmetricTridiagonal B(std::move(d), std::move(e));
    if (bc == BoundaryCondition::FixedEnd)
        B = leading_principal_submatrix(B);
    return eigenvalues(B, tol);
}

std::pair<double, double> growth_ratios(const SpringMassSystem& s) {
    return {s.masses.back() / s.masses.front(),
            s.stiffnesses.back() / s.stiffnesses.front()};
}

} // namespace interlace

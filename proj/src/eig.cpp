#include "interlace/eig.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace interlace {

std::pair<double, double> gershgorin_bounds(const SymmetricTridiagonal& T) {
    const std::size_t n = T.order();
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t i = 0; i < n; ++i) {
        double r = 0.0;
        if (i > 0) r += std::abs(T.offdiag[i - 1]);
        if (i + 1 < n) r += std::abs(T.offdiag[i]);
        lo = std::min(lo, T.diag[i] - r);
        hi = std::max(hi, T.diag[i] + r);
    }
    return {lo, hi};
}

std::size_t negcount(const SymmetricTridiagonal& T, double x) {
    const std::size_t n = T.order();
    const double eps = std::numeric_limits<double>::epsilon();
    std::size_t count = 0;
    double d = T.diag[0] - x;
    for (std::size_t i = 0;; ++i) {
        // A zero pivot marks an eigenvalue of a leading block at x. The
        // positive tiny replacement keeps the next pivot finite and keeps
        // the strict count: an eigenvalue exactly at x is not below x.
        if (d == 0.0) {
            double row = (i + 1 < n) ? std::abs(T.offdiag[i]) : 0.0;
            d = eps * (1.0 + row);
        }
        if (d < 0.0) ++count;
        if (i + 1 == n) break;
        const double b = T.offdiag[i];
        d = (T.diag[i + 1] - x) - b * b / d;
    }
    return count;
}

double default_tol(const SymmetricTridiagonal& T) {
    auto [lo, hi] = gershgorin_bounds(T);
    double radius = std::max(std::abs(lo), std::abs(hi));
    return 1e-10 * std::max(1.0, radius);
}

Spectrum eigenvalues(const SymmetricTridiagonal& T, double tol) {
    if (!(tol > 0.0))
        throw std::invalid_argument("eigenvalues: tol must be > 0");
    const std::size_t n = T.order();
    auto [glo, ghi] = gershgorin_bounds(T);
    // Nudge so negcount(lo)=0 and negcount(hi)=n hold strictly.
    const double span = std::max(1.0, ghi - glo);
    glo -= span * std::numeric_limits<double>::epsilon() + tol;
    ghi += span * std::numeric_limits<double>::epsilon() + tol;

    Spectrum s;
    s.tol = tol;
    s.values.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        // Bracket the (k+1)-th smallest eigenvalue: negcount(lo) <= k < negcount(hi).
        double lo = glo, hi = ghi;
        while (hi - lo > tol) {
            double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) break; // interval at rounding limit
            if (negcount(T, mid) <= k)
                lo = mid;
            else
                hi = mid;
        }
        s.values[k] = 0.5 * (lo + hi);
    }
    std::sort(s.values.begin(), s.values.end());
    return s;
}

Spectrum eigenvalues(const SymmetricTridiagonal& T) {
    return eigenvalues(T, default_tol(T));
}

Spectrum eigenvalues(const GeneralTridiagonal& T, double tol) {
    const std::size_t n = T.order();
    std::vector<double> e(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        double p = T.superdiag[i] * T.subdiag[i];
        if (p < 0.0)
            throw std::invalid_argument(
                "eigenvalues: sub*super product negative, spectrum may be complex");
        e[i] = std::sqrt(p);
    }
    return eigenvalues(SymmetricTridiagonal(T.diag, std::move(e)), tol);
}

double char_poly_eval(const SymmetricTridiagonal& T, double x) {
    const std::size_t n = T.order();
    double pm1 = 1.0;
    double p = T.diag[0] - x;
    for (std::size_t i = 1; i < n; ++i) {
        const double b = T.offdiag[i - 1];
        double next = (T.diag[i] - x) * p - b * b * pm1;
        pm1 = p;
        p = next;
    }
    return p;
}

double min_gap(const std::vector<double>& v) {
    if (v.size() < 2)
        throw std::invalid_argument("min_gap: need at least two values");
    double g = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        g = std::min(g, v[i + 1] - v[i]);
    return g;
}

double min_gap(const Spectrum& s) { return min_gap(s.values); }

} // namespace interlace

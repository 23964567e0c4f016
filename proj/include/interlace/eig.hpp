#pragma once

#include "interlace/tridiag.hpp"

#include <utility>
#include <vector>

namespace interlace {

// Eigenvalues sorted ascending, each bracketed to width <= tol.
struct Spectrum {
    std::vector<double> values;
    double tol;
};

// [lo, hi] containing every eigenvalue, from row sums.
std::pair<double, double> gershgorin_bounds(const SymmetricTridiagonal& T);

// Number of eigenvalues of T strictly less than x (Sturm count via the
// shifted LDL^T pivot recurrence, zero pivots safeguarded).
std::size_t negcount(const SymmetricTridiagonal& T, double x);

// Recommended absolute bracketing tolerance for T.
double default_tol(const SymmetricTridiagonal& T);

// All eigenvalues by bisection on negcount.
Spectrum eigenvalues(const SymmetricTridiagonal& T, double tol);
Spectrum eigenvalues(const SymmetricTridiagonal& T);

// Eigenvalues of a tridiagonal matrix with positive sub*super products,
// via diagonal similarity to symmetric form.
Spectrum eigenvalues(const GeneralTridiagonal& T, double tol);

// det(T - xI) by the three-term recurrence. Unscaled; overflows for large
// order, intended as a small-n oracle only.
double char_poly_eval(const SymmetricTridiagonal& T, double x);

// Smallest difference between consecutive sorted values.
double min_gap(const Spectrum& s);
double min_gap(const std::vector<double>& sorted_values);

} // namespace interlace

#pragma once

#include "interlace/eig.hpp"
#include "interlace/tridiag.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace interlace {

// In-line chain of n masses and n springs; masses realize the free-end
// spectrum {1,3,...,2n-1} and fixed-end spectrum {2,4,...,2n-2}, scaled by
// alpha with m_n = alpha^2.
struct SpringMassSystem {
    std::size_t n;
    double alpha;
    std::vector<double> masses;      // m_1..m_n, strictly decreasing
    std::vector<double> stiffnesses; // k_1..k_n
};

enum class BoundaryCondition { FreeEnd, FixedEnd };

// Closed-form masses and stiffnesses (factorial ratios evaluated as
// cancelled products).
SpringMassSystem solve_inverse_spring_mass(std::size_t n, double alpha);

// Independent route: backward three-term recurrence on sqrt(m_i), seeded
// from the bottom equations of the chain.
std::vector<double> masses_by_recurrence(std::size_t n, double alpha);

// Stiffness matrix C and the mass diagonal.
std::pair<SymmetricTridiagonal, std::vector<double>>
assemble_system_matrices(const SpringMassSystem& s);

// Natural frequencies: eigenvalues of B = M^{-1/2} C M^{-1/2} (free end)
// or of its leading principal submatrix (fixed end).
Spectrum forward_frequencies(const SpringMassSystem& s, BoundaryCondition bc,
                             double tol);

// (m_n/m_1, k_n/k_1).
std::pair<double, double> growth_ratios(const SpringMassSystem& s);

} // namespace interlace

#pragma once

#include "interlace/eig.hpp"
#include "interlace/tridiag.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace interlace {

// Reports a strict-interlacing violation; index is the first offending
// position (0-based into the merged ordering check).
struct interlacing_error : std::runtime_error {
    std::size_t index;
    interlacing_error(std::size_t index_, const std::string& what_)
        : std::runtime_error(what_), index(index_) {}
};

// Two strictly interlaced spectra: lambda (length n) for the full matrix,
// mu (length n-1) for its leading principal submatrix.
struct SpectrumPair {
    std::vector<double> lambda;
    std::vector<double> mu;
};

// Last components of the orthonormalized eigenvectors; all positive,
// squares sum to 1.
struct LastComponents {
    std::vector<double> weights;
};

enum class ReconstructionVariant { plain, full_reorth };

// Validate lengths and strict interlacing lambda_1 < mu_1 < lambda_2 < ...
SpectrumPair validate_interlacing(std::vector<double> lambda,
                                  std::vector<double> mu);

// weights[i]^2 = prod_j (lambda_i - mu_j) / prod_{j != i} (lambda_i - lambda_j),
// evaluated in log-magnitude form.
LastComponents last_components(const SpectrumPair& p);

// Recover the unique sign-normalized Jacobian matrix whose spectrum is
// lambda and whose leading principal submatrix has spectrum mu.
SymmetricTridiagonal reconstruct_jacobian(const SpectrumPair& p,
                                          ReconstructionVariant variant);

// (max |sorted eig(T) - lambda|, max |sorted eig(T°) - mu|).
std::pair<double, double> reconstruction_residual(const SymmetricTridiagonal& T,
                                                  const SpectrumPair& p,
                                                  double tol);

} // namespace interlace
